#include "mdsforge/construct.hpp"

#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_set>

#include "mdsforge/family1.hpp"
#include "mdsforge/family2.hpp"
#include "mdsforge/scan.hpp"

namespace mdsforge::construct {

using codes::ScanOptions;
using gf::Element;
using gf::Field;
using gf::Word;

unsigned LiftSpec::t() const { return family == 1 ? (m - 1) / 4 : (m - 1) / 2; }

void LiftSpec::validate() const {
  if (family != 1 && family != 2) throw Error(ErrorCode::SpecViolation, "lift family must be 1 or 2");
  if (!gf::is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (m < 1) throw Error(ErrorCode::SpecViolation, "m must be positive");
  const unsigned tt = t();
  if (tt == 0) throw Error(ErrorCode::SpecViolation, "m too small: the lift degree t is 0");
  unsigned __int128 pt = 1;
  for (unsigned i = 0; i < tt; ++i) pt *= p;
  if (n > pt) throw Error(ErrorCode::SpecViolation, "n exceeds p^t = the number of monic degree-t polynomials");
  const auto K = static_cast<std::uint64_t>(k);
  if (family == 1) {
    const std::uint64_t gate = K * K * (K * K - 1) / 12;
    if (gate % p == 0) {
      throw Error(ErrorCode::SpecViolation, "p divides k^2(k^2-1)/12 = " + std::to_string(gate));
    }
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) q *= p;
    const bool large = k >= 5 && 2 * k + 2 <= n;
    const bool small = (k == 3 || k == 4) && q >= 11 && 2 * k <= n;
    if (!large && !small) throw Error(ErrorCode::SpecViolation, "family 1 lift needs 5 <= k <= (n-2)/2 or k in {3,4}");
  } else {
    const std::uint64_t gate = K * (K + 1) / 2;
    if (gate % p == 0) throw Error(ErrorCode::SpecViolation, "p divides k(k+1)/2 = " + std::to_string(gate));
    if (k < 4 || 2 * k + 1 > n) throw Error(ErrorCode::SpecViolation, "family 2 lift needs 4 <= k <= (n-1)/2");
  }
}

symfun::EvalSet lift_lambda(const LiftSpec& spec) {
  spec.validate();
  const Field& f = Field::make(spec.p, spec.m);
  Word lead = 1;
  for (unsigned i = 0; i < spec.t(); ++i) lead *= spec.p;
  const Element x = f.element(spec.p);  // residue of x
  std::vector<Element> pts;
  for (Word i = 0; i < spec.n; ++i) {
    // Digits of i are the lower coefficients a_0..a_{t-1}; evaluate g at x.
    Element acc = x.pow(std::int64_t(spec.t()));
    Word rest = i;
    Element xp = f.one();
    for (unsigned j = 0; j < spec.t(); ++j) {
      acc += f.integer(std::int64_t(rest % spec.p)) * xp;
      rest /= spec.p;
      xp *= x;
    }
    pts.push_back(acc);
  }
  (void)lead;
  return symfun::EvalSet(f, std::move(pts));
}

symfun::EvalSet geom_lambda(const Field& field, const Element& g, std::size_t n) {
  if (g.field_ptr() != &field) throw Error(ErrorCode::FieldMismatch, "generator from another field");
  if (g.is_zero()) throw Error(ErrorCode::NotDistinct, "zero has no geometric progression");
  std::vector<Element> pts;
  std::unordered_set<Word> seen;
  Element cur = g;
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen.insert(cur.value()).second) {
      throw Error(ErrorCode::NotDistinct, "g has multiplicative order " + std::to_string(i) + " < n");
    }
    pts.push_back(cur);
    cur *= g;
  }
  return symfun::EvalSet(field, std::move(pts));
}

std::string_view to_string(ClaimStatus s) noexcept {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Skipped: return "skipped";
  }
  return "?";
}

bool Reproduction::ok() const noexcept { return count(ClaimStatus::Fail) == 0; }

std::size_t Reproduction::count(ClaimStatus s) const noexcept {
  std::size_t c = 0;
  for (const auto& cl : claims) c += cl.status == s;
  return c;
}

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome skipped(std::string why) { return {false, "\x01" + std::move(why)}; }

class Recorder {
 public:
  explicit Recorder(Reproduction& r) : rep_(r) {}

  void claim(std::string name, const std::function<Outcome()>& fn) {
    Claim c;
    c.name = std::move(name);
    const auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = fn();
      if (!o.detail.empty() && o.detail.front() == '\x01') {
        c.status = ClaimStatus::Skipped;
        c.detail = o.detail.substr(1);
      } else {
        c.status = o.pass ? ClaimStatus::Pass : ClaimStatus::Fail;
        c.detail = std::move(o.detail);
      }
    } catch (const Error& e) {
      c.status = e.code() == ErrorCode::BudgetExceeded ? ClaimStatus::Skipped : ClaimStatus::Fail;
      c.detail = e.what();
    } catch (const std::exception& e) {
      c.status = ClaimStatus::Fail;
      c.detail = e.what();
    }
    c.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rep_.claims.push_back(std::move(c));
  }

  bool passed(std::string_view name) const {
    for (const auto& c : rep_.claims) {
      if (c.name == name) return c.status == ClaimStatus::Pass;
    }
    return false;
  }

 private:
  Reproduction& rep_;
};

std::vector<Element> elems(const Field& f, std::string_view text) {
  std::vector<Element> out;
  std::string tok;
  std::istringstream is{std::string(text)};
  while (is >> tok) out.push_back(f.parse_element(tok));
  return out;
}

MatGF printed(const Field& f, std::initializer_list<std::string_view> rows) {
  std::vector<std::vector<Element>> r;
  for (auto row : rows) r.push_back(elems(f, row));
  return MatGF::from_rows(f, r);
}

std::string join(const std::vector<Element>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + xs[i].str();
  return s;
}

Outcome same_list(const std::vector<Element>& got, const std::vector<Element>& want) {
  if (got.size() != want.size()) return {false, "length " + std::to_string(got.size()) + " != " + std::to_string(want.size())};
  for (std::size_t i = 0; i < got.size(); ++i) {
    if (got[i] != want[i]) {
      return {false, "entry " + std::to_string(i + 1) + ": got " + got[i].str() + ", expected " + want[i].str()};
    }
  }
  return {true, join(got)};
}

Outcome same_matrix(const MatGF& got, const MatGF& want) {
  if (got.rows() != want.rows() || got.cols() != want.cols()) return {false, "shape differs"};
  for (std::size_t i = 0; i < got.rows(); ++i) {
    for (std::size_t j = 0; j < got.cols(); ++j) {
      if (got.raw(i, j) != want.raw(i, j)) {
        return {false, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): got " +
                           got(i, j).str() + ", printed " + want(i, j).str()};
      }
    }
  }
  return {true, std::to_string(got.rows()) + "x" + std::to_string(got.cols()) + " matrix matches"};
}

Outcome verdict(const codes::CheckReport& r, bool want = true) {
  std::string d = r.basis.empty() ? "" : "by " + r.basis;
  if (r.quantity) {
    if (const auto* i = std::get_if<std::int64_t>(&*r.quantity)) d += (d.empty() ? "" : ", ") + std::string("quantity ") + std::to_string(*i);
  }
  if (r.witness && !r.witness->detail.empty()) d += (d.empty() ? "" : ", ") + r.witness->detail;
  for (const auto& n : r.notes) d += "; " + n;
  return {r.verdict == want, d};
}

std::int64_t int_quantity(const codes::CheckReport& r) { return std::get<std::int64_t>(r.quantity.value()); }

/// v agrees with the canonical roots up to a sign per coordinate.
Outcome up_to_sign(const std::vector<Element>& printed, const std::vector<Element>& canon) {
  if (printed.size() != canon.size()) return {false, "length differs"};
  std::size_t flipped = 0;
  for (std::size_t i = 0; i < printed.size(); ++i) {
    if (printed[i] == canon[i]) continue;
    if (printed[i] == -canon[i]) {
      ++flipped;
      continue;
    }
    return {false, "coordinate " + std::to_string(i + 1) + " differs beyond sign"};
  }
  return {true, flipped == 0 ? "identical to the canonical roots"
                             : "matches up to sign per coordinate (" + std::to_string(flipped) + " flipped)"};
}

Outcome squares_match(const std::vector<Element>& v, const std::vector<Element>& target) {
  std::vector<Element> sq;
  for (const auto& x : v) sq.push_back(x.square());
  auto o = same_list(sq, target);
  if (o.pass) o.detail = "v_i^2 matches for all " + std::to_string(v.size()) + " coordinates";
  return o;
}

std::vector<Element> pointwise(const std::vector<Element>& a, const std::vector<Element>& b) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] * b[i]);
  return out;
}

Outcome distance_is(const codes::LinearCode& c, std::size_t want, const ScanOptions& opts) {
  const auto r = codes::min_distance(c, opts);
  const auto d = std::size_t(int_quantity(r));
  std::string label = codes::distance_label(c.n(), c.k(), d);
  return {d == want, "[" + std::to_string(c.n()) + "," + std::to_string(c.k()) + "," + std::to_string(d) + "]" +
                         (label.empty() ? "" : " " + label)};
}

std::uint64_t ipow_mod(std::uint64_t a, unsigned e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (unsigned i = 0; i < e; ++i) r = r * a % m;
  return r;
}

/// On a geometric set {g^i} with ord(g) = N, a^h agrees with a^(h mod N) at
/// every point, so the code coincides with C_{h mod N, k}. A failing non-GRS
/// claim gets that reduction appended to its detail.
Outcome with_reduction(Outcome o, const family2::Spec& spec, std::uint64_t gamma) {
  if (o.pass) return o;
  const Element g = spec.lambda.field().integer(std::int64_t(gamma));
  std::size_t ord = 1;
  for (Element x = g; x != spec.lambda.field().one(); x *= g) ++ord;
  const std::size_t hr = spec.h % ord;
  o.detail += "; gamma has multiplicative order " + std::to_string(ord) + ", so a^" + std::to_string(spec.h) +
              " = a^" + std::to_string(hr) + " on the evaluation set";
  if (hr == spec.k - 1) o.detail += " and the generator spans RS(n,k), which is GRS";
  return o;
}

ScanOptions with_cross(ScanOptions o) {
  o.cross_check = true;
  return o;
}

// ---------------------------------------------------------------- family 1

void f1_gf17_k3(Recorder& rec, const ScanOptions& opts) {
  const Field& F = Field::make(17);
  const std::vector<Word> pts{0, 2, 3, 4, 5, 7, 9, 10};
  family1::Spec spec{symfun::EvalSet::from_words(F, pts), 3, 1, {}};
  rec.claim("generator matches the printed G_{2,1}", [&] {
    MatGF want(F, 3, 8);
    const unsigned e[3] = {0, 3, 4};
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 8; ++j) want.raw(i, j) = ipow_mod(pts[j], e[i], 17);
    }
    return same_matrix(family1::generator(spec).generator(), want);
  });
  rec.claim("MDS by sigma_2^2 - sigma_1 sigma_3", [&] { return verdict(family1::is_mds(spec, opts)); });
  rec.claim("MDS by the minors oracle", [&] { return verdict(codes::is_mds_minors(family1::generator(spec), opts)); });
  rec.claim("non-GRS", [&] { return verdict(family1::is_nongrs(spec, opts, true)); });
  rec.claim("Schur square dimension = 6", [&] {
    const auto d = family1::generator(spec).schur_square_dim();
    return Outcome{d == 6, "dimension " + std::to_string(d)};
  });
  rec.claim("explicit parity check: G H^T = 0, rank H = 5", [&] {
    const MatGF h = family1::parity_check(spec);
    const bool zero = mat_mul(family1::generator(spec).generator(), transpose(h)).is_zero();
    const auto rk = rank(h);
    return Outcome{zero && rk == 5, std::string("G H^T ") + (zero ? "= 0" : "!= 0") + ", rank " + std::to_string(rk)};
  });
}

void f1_gf32_so(Recorder& rec, const ScanOptions& opts) {
  const Field& F = Field::parse("2^5:1,0,1,0,0,1");
  family1::Spec spec{symfun::EvalSet(F, elems(F, "w w^2 w^3 w^4 w^5 w^6 w^10 w^13 w^17 w^21 w^26")), 5, 1, {}};
  const auto printed_u = elems(F, "w^4 w^29 w w^14 w^18 w^25 w^11 w w^10 w w^6");
  const auto printed_v = elems(F, "w^18 1 w^2 w^9 w^27 1 w^26 w^7 w^29 w^11 w^16");
  const gf::Poly f = gf::parse_poly(F, "x");
  rec.claim("u list", [&] { return same_list(spec.lambda.weights(), printed_u); });
  rec.claim("f(x) = x meets every self-orthogonality condition", [&] { return verdict(family1::so_check(spec, f)); });
  rec.claim("printed v satisfies v_i^2 = u_i a_i", [&] { return squares_match(printed_v, pointwise(printed_u, spec.lambda.points())); });
  rec.claim("printed v against canonical roots", [&] {
    return up_to_sign(printed_v, codes::sqrt_all(pointwise(spec.lambda.weights(), spec.lambda.points())));
  });
  family1::Spec scaled = spec;
  scaled.v = printed_v;
  rec.claim("G_v G_v^T = 0", [&] { return verdict(codes::is_self_orthogonal(family1::generator(scaled))); });
  rec.claim("printed G_v", [&] {
    return same_matrix(family1::generator(scaled).generator(),
                       printed(F, {"w^18 1 w^2 w^9 w^27 1 w^26 w^7 w^29 w^11 w^16",
                                   "w^19 w^2 w^5 w^13 w w^6 w^5 w^20 w^15 w w^11",
                                   "w^20 w^4 w^8 w^17 w^6 w^12 w^15 w^2 w w^22 w^6",
                                   "w^23 w^10 w^17 w^29 w^21 w^30 w^14 w^10 w^21 w^23 w^22",
                                   "w^24 w^12 w^20 w^2 w^26 w^5 w^24 w^23 w^7 w^13 w^17"}));
  });
  rec.claim("parameters [11,5,6] (AMDS)", [&] { return distance_is(family1::generator(scaled), 6, opts); });
}

void f1_self_dual_example(Recorder& rec, const Field& F, std::string_view lambda, std::string_view u,
                          std::string_view v, std::initializer_list<std::string_view> gv, std::size_t k,
                          std::string_view scale) {
  const symfun::EvalSet lam(F, elems(F, lambda));
  const auto printed_u = elems(F, u);
  const auto printed_v = elems(F, v);
  const Element lambda_scale = F.parse_element(scale);
  rec.claim("S_1 = S_2 = S_3 = 0", [&] {
    const auto S = family1::power_sums(lam);
    const bool ok = S[0].is_zero() && S[1].is_zero() && S[2].is_zero();
    return Outcome{ok, "S = (" + S[0].str() + ", " + S[1].str() + ", " + S[2].str() + ")"};
  });
  rec.claim("u list", [&] { return same_list(lam.weights(), printed_u); });
  rec.claim("self-dual criterion", [&] {
    const auto r = family1::self_dual_check(lam, k);
    auto o = verdict(r);
    if (o.pass && std::get<Element>(*r.quantity) != lambda_scale) {
      return Outcome{false, "normalizer " + std::get<Element>(*r.quantity).str() + " instead of " + lambda_scale.str()};
    }
    return o;
  });
  std::vector<Element> target;
  for (const auto& x : printed_u) target.push_back(lambda_scale * x);
  rec.claim("printed v satisfies v_i^2 = " + std::string(scale) + " u_i", [&] { return squares_match(printed_v, target); });
  rec.claim("printed v against canonical roots", [&] { return up_to_sign(printed_v, codes::sqrt_all(target)); });
  family1::Spec scaled{lam, k, 1, printed_v};
  rec.claim("C_v self-dual", [&] { return verdict(codes::is_self_dual(family1::generator(scaled))); });
  rec.claim("printed G_v", [&] { return same_matrix(family1::generator(scaled).generator(), printed(F, gv)); });
}

void f1_gf16_sd(Recorder& rec, const ScanOptions&) {
  const Field& F = Field::parse("2^4:1,1,0,0,1");
  f1_self_dual_example(rec, F, "w w^2 w^4 w^5 w^7 w^8 w^10 w^11 w^13 w^14",
                       "w^11 w^7 w^14 w^10 w^2 w^13 w^5 w w^8 w^4", "w^13 w^11 w^7 w^5 w w^14 w^10 w^8 w^4 w^2",
                       {"w^13 w^11 w^7 w^5 w w^14 w^10 w^8 w^4 w^2", "w^14 w^13 w^11 w^10 w^8 w^7 w^5 w^4 w^2 w",
                        "1 1 1 1 1 1 1 1 1 1", "w^3 w^6 w^12 1 w^6 w^9 1 w^3 w^9 w^12",
                        "w^4 w^8 w w^5 w^13 w^2 w^10 w^14 w^7 w^11"},
                       5, "1");
}

void f1_gf25_sd(Recorder& rec, const ScanOptions&) {
  const Field& F = Field::parse("5^2:2,4,1");
  f1_self_dual_example(rec, F, "w w^4 w^5 2 w^8 w^13 w^16 w^17 3 w^20", "3 3 3 2 2 2 2 2 3 3",
                       "w^9 w^9 w^9 w^3 w^3 w^3 w^3 w^3 w^9 w^9",
                       {"w^9 w^9 w^9 w^3 w^3 w^3 w^3 w^3 w^9 w^9", "w^10 w^13 w^14 w^9 w^11 w^16 w^19 w^20 w^3 w^5",
                        "w^11 w^17 w^19 w^15 w^19 w^5 w^11 w^13 w^21 w", "w^14 w^5 w^10 w^9 w^19 w^20 w^11 w^16 w^3 w^13",
                        "w^15 w^9 w^15 w^15 w^3 w^9 w^3 w^9 w^21 w^9"},
                       5, "1");
}

void f1_gf17_k4_sd(Recorder& rec, const ScanOptions&) {
  const Field& F = Field::make(17);
  f1_self_dual_example(rec, F, "3 5 6 7 10 11 12 14", "6 10 12 14 3 5 7 11", "1 9 11 12 3 7 15 4",
                       {"1 9 11 12 3 7 15 4", "3 11 15 16 13 9 10 5", "13 15 10 14 12 11 8 1", "5 7 9 13 1 2 11 14"}, 4,
                       "3");
}

void f1_gf23_so(Recorder& rec, const ScanOptions&) {
  const Field& F = Field::make(23);
  family1::Spec spec{symfun::EvalSet(F, elems(F, "0 1 2 3 4 5 6 7 18")), 3, 1, {}};
  const gf::Poly f = gf::parse_poly(F, "x^3+21x+18");
  const auto printed_u = elems(F, "3 17 22 12 20 3 20 16 2");
  const auto printed_uf = elems(F, "8 13 1 8 8 8 1 9 13");
  const auto printed_v = elems(F, "13 6 1 13 13 13 1 3 6");
  rec.claim("S_1 = 0, S_2 = 2, S_3 = 5", [&] {
    const auto S = family1::power_sums(spec.lambda);
    const bool ok = S[0] == F.integer(0) && S[1] == F.integer(2) && S[2] == F.integer(5);
    return Outcome{ok, "S = (" + S[0].str() + ", " + S[1].str() + ", " + S[2].str() + ")"};
  });
  rec.claim("u list", [&] { return same_list(spec.lambda.weights(), printed_u); });
  rec.claim("u_i f(a_i) list", [&] {
    std::vector<Element> uf;
    for (std::size_t i = 0; i < 9; ++i) uf.push_back(spec.lambda.weights()[i] * gf::poly_eval(f, spec.lambda[i]));
    return same_list(uf, printed_uf);
  });
  rec.claim("coefficient conditions for f = x^3+21x+18", [&] { return verdict(family1::so_check(spec, f)); });
  rec.claim("printed v satisfies v_i^2 = u_i f(a_i)", [&] { return squares_match(printed_v, printed_uf); });
  rec.claim("printed v against canonical roots", [&] { return up_to_sign(printed_v, codes::sqrt_all(printed_uf)); });
  family1::Spec scaled = spec;
  scaled.v = printed_v;
  rec.claim("G_v G_v^T = 0", [&] { return verdict(codes::is_self_orthogonal(family1::generator(scaled))); });
  rec.claim("not self-dual (n = 9 != 2k)", [&] { return verdict(codes::is_self_dual(family1::generator(scaled)), false); });
  rec.claim("printed G_v", [&] {
    return same_matrix(family1::generator(scaled).generator(),
                       printed(F, {"13 6 1 13 13 13 1 3 6", "0 6 8 6 4 15 9 17 9", "0 6 16 18 16 6 8 4 1"}));
  });
}

// ---------------------------------------------------------------- family 2

void f2_gf19_so(Recorder& rec, const ScanOptions&) {
  const Field& F = Field::make(19);
  family2::Spec spec{symfun::EvalSet(F, elems(F, "0 1 2 3 4 5 8 11 15 16")), 4, 5, {}};
  const gf::Poly f = gf::parse_poly(F, "x+2");
  const auto printed_u = elems(F, "2 12 6 1 11 4 13 10 7 10");
  const auto printed_uf = elems(F, "4 17 5 5 9 9 16 16 5 9");
  const auto printed_v = elems(F, "17 6 9 9 16 16 4 4 9 16");
  rec.claim("S_1 = 8, S_2 = 3", [&] {
    std::vector<Word> s(3);
    symfun::kernel::complete(F, spec.lambda.words(), s);
    return Outcome{s[1] == 8 && s[2] == 3, "S_1 = " + std::to_string(s[1]) + ", S_2 = " + std::to_string(s[2])};
  });
  rec.claim("u list", [&] { return same_list(spec.lambda.weights(), printed_u); });
  rec.claim("u_i f(a_i) list", [&] {
    std::vector<Element> uf;
    for (std::size_t i = 0; i < 10; ++i) uf.push_back(spec.lambda.weights()[i] * gf::poly_eval(f, spec.lambda[i]));
    return same_list(uf, printed_uf);
  });
  rec.claim("window f_{-1} S_0 + f_0 S_1 + f_1 S_2 = 2*8 + 3 = 0", [&] { return verdict(family2::so_check(spec, f)); });
  rec.claim("printed v satisfies v_i^2 = u_i f(a_i)", [&] { return squares_match(printed_v, printed_uf); });
  rec.claim("printed v against canonical roots", [&] { return up_to_sign(printed_v, codes::sqrt_all(printed_uf)); });
  family2::Spec scaled = spec;
  scaled.v = printed_v;
  rec.claim("G_v G_v^T = 0", [&] { return verdict(codes::is_self_orthogonal(family2::generator(scaled))); });
  rec.claim("printed G_v", [&] {
    return same_matrix(family2::generator(scaled).generator(),
                       printed(F, {"17 6 9 9 16 16 4 4 9 16", "0 6 18 8 7 4 13 6 2 9", "0 6 17 5 9 1 9 9 11 11",
                                   "0 6 3 2 6 11 10 9 18 7"}));
  });
  rec.claim("explicit parity check: G H^T = 0, rank H = 6", [&] {
    const MatGF h = family2::parity_check(spec);
    const bool zero = mat_mul(family2::generator(spec).generator(), transpose(h)).is_zero();
    return Outcome{zero && rank(h) == 6, std::string("G H^T ") + (zero ? "= 0" : "!= 0")};
  });
}

family2::Spec gf37_spec() {
  const Field& F = Field::make(37);
  return {geom_lambda(F, F.integer(3), 18), 4, 21, {}};
}

void f2_gf37_h21(Recorder& rec, const ScanOptions& opts) {
  const auto spec = gf37_spec();
  rec.claim("MDS by S_18 on all 3060 subsets", [&] { return verdict(family2::is_mds(spec, opts)); });
  rec.claim("MDS by the minors oracle", [&] { return verdict(codes::is_mds_minors(family2::generator(spec), opts)); });
  rec.claim("regime hypotheses: k >= 4, r = 18 <= q-k-3 = 30, k <= n/2", [&] {
    return Outcome{spec.r() + spec.k + 3 <= 37 && 2 * spec.k <= 18, "r = " + std::to_string(spec.r())};
  });
  rec.claim("non-GRS with Schur square dimension >= 8", [&] {
    return with_reduction(verdict(family2::is_nongrs(spec, opts, true)), spec, 3);
  });
}

void f2_gf37_h21_ext(Recorder& rec, const ScanOptions& opts) {
  const auto spec = gf37_spec();
  const auto& F = spec.lambda.field();
  const auto ext = codes::extend_columns(family2::generator(spec), {codes::unit_column(F, 4, 4)});
  rec.claim("[19,4] code after appending e_4", [&] { return Outcome{ext.n() == 19 && ext.k() == 4, "built"}; });
  rec.claim("MDS by the minors oracle", [&] { return verdict(codes::is_mds_minors(ext, opts)); });
}

family2::Spec gf128_spec() {
  const Field& F = Field::make(2, 7);
  return {symfun::EvalSet(F, F.elements()), 3, 16, {}};
}

void f2_gf128_h16(Recorder& rec, const ScanOptions& opts) {
  const auto spec = gf128_spec();
  rec.claim("MDS by S_14 on all 341376 triples", [&] { return verdict(family2::is_mds(spec, opts)); });
  rec.claim("MDS by the minors oracle", [&] { return verdict(codes::is_mds_minors(family2::generator(spec), opts)); });
  rec.claim("non-GRS (k = 3, r = 14 <= (q-k-3)/2 = 61)", [&] { return verdict(family2::is_nongrs(spec, opts, true)); });
}

void f2_gf128_h16_ext(Recorder& rec, const ScanOptions& opts) {
  const auto spec = gf128_spec();
  const auto& F = spec.lambda.field();
  const auto ext = codes::extend_columns(family2::generator(spec),
                                         {codes::unit_column(F, 3, 2), codes::unit_column(F, 3, 3)});
  rec.claim("[130,3] code after appending e_2 and e_3", [&] { return Outcome{ext.n() == 130, "built"}; });
  rec.claim("MDS by all 357760 minors", [&] { return verdict(codes::is_mds_minors(ext, opts)); });
}

void f2_gf8_sd(Recorder& rec, const ScanOptions& opts) {
  const Field& F = Field::make(2, 3);
  const symfun::EvalSet lam(F, F.elements());
  family2::Spec spec{lam, 4, 4, {}};
  rec.claim("self-dual criterion (r = 1, S_1 = 0)", [&] { return verdict(family2::self_dual_check(lam, 4, 4)); });
  rec.claim("not MDS by S_1", [&] { return verdict(family2::is_mds(spec, opts), false); });
  rec.claim("not MDS by the minors oracle", [&] { return verdict(codes::is_mds_minors(family2::generator(spec), opts), false); });
  rec.claim("C_v self-dual with v_i^2 = u_i", [&] {
    const auto r = family2::self_dual_check(lam, 4, 4);
    family2::Spec scaled = spec;
    scaled.v = r.certificate;
    return verdict(codes::is_self_dual(family2::generator(scaled)));
  });
  rec.claim("parameters [8,4,4]", [&] {
    family2::Spec scaled = spec;
    scaled.v = family2::self_dual_check(lam, 4, 4).certificate;
    return distance_is(family2::generator(scaled), 4, opts);
  });
}

struct TableRow {
  std::uint64_t q;
  std::size_t n, k, r;
  std::uint64_t gamma;
  std::size_t d;
};

constexpr TableRow kTable[] = {
    {37, 18, 7, 18, 3, 12}, {41, 20, 8, 20, 2, 13}, {53, 26, 11, 26, 4, 16},
    {61, 30, 13, 30, 4, 18}, {73, 36, 16, 36, 6, 21}, {89, 44, 20, 44, 5, 25},
};

void table_row(Recorder& rec, const ScanOptions& opts, const TableRow& row) {
  const Field& F = Field::make(row.q);
  const std::size_t h = row.k - 1 + row.r;
  std::optional<family2::Spec> spec;
  rec.claim("generator G_{" + std::to_string(h) + "," + std::to_string(row.k) + "} built", [&] {
    spec = family2::Spec{geom_lambda(F, F.integer(std::int64_t(row.gamma)), row.n), row.k, h, {}};
    const auto g = family2::generator(*spec);
    return Outcome{g.n() == row.n && g.k() == row.k, "h = " + std::to_string(h)};
  });
  if (!spec) return;
  rec.claim("non-GRS hypotheses: k >= 4, r <= q-k-3, k <= n/2", [&] {
    const bool ok = row.k >= 4 && row.r + row.k + 3 <= row.q && 2 * row.k <= row.n;
    return Outcome{ok, "r = " + std::to_string(row.r) + ", q-k-3 = " + std::to_string(row.q - row.k - 3)};
  });
  rec.claim("MDS by full S_" + std::to_string(row.r) + " scan", [&] {
    const auto total = scan::binomial(row.n, row.k);
    if (total > opts.subset_budget) {
      return skipped("structural reproduction only: C(" + std::to_string(row.n) + "," + std::to_string(row.k) +
                     ") = " + std::to_string(total) + " exceeds the subset budget");
    }
    return verdict(family2::is_mds(*spec, opts));
  });
  const bool mds = rec.passed("MDS by full S_" + std::to_string(row.r) + " scan");
  rec.claim("minors oracle on 2000 sampled subsets", [&] {
    return verdict(codes::sample_minors(family2::generator(*spec), 2000, row.q));
  });
  const std::string params = "[" + std::to_string(row.n) + "," + std::to_string(row.k) + "," + std::to_string(row.d) + "]";
  rec.claim("parameters " + params, [&] {
    if (!mds) return skipped("d = n-k+1 follows from the MDS scan");
    return Outcome{row.d == row.n - row.k + 1, "d = n-k+1 = " + std::to_string(row.n - row.k + 1)};
  });
  rec.claim("non-GRS: Schur square dimension >= 2k", [&] {
    const auto d = family2::generator(*spec).schur_square_dim();
    return with_reduction(Outcome{d >= 2 * row.k, "dimension " + std::to_string(d)}, *spec, row.gamma);
  });
}

// ---------------------------------------------------------------- lifts

void lift_f2(Recorder& rec, const ScanOptions& opts) {
  const LiftSpec ls{2, 9, 2, 5, 11};
  std::optional<family2::Spec> spec;
  rec.claim("evaluation set: 11 distinct monic degree-4 lifts", [&] {
    spec = family2::Spec{lift_lambda(ls), 5, 6, {}};
    return Outcome{spec->lambda.size() == 11, "t = " + std::to_string(ls.t()) + ", k(k+1)/2 = 15 is odd"};
  });
  if (!spec) return;
  rec.claim("MDS by S_2 on all 462 subsets", [&] { return verdict(family2::is_mds(*spec, with_cross(opts))); });
  rec.claim("non-GRS", [&] { return verdict(family2::is_nongrs(*spec, opts, true)); });
}

void lift_f1(Recorder& rec, const ScanOptions& opts) {
  const LiftSpec ls{2, 17, 1, 6, 14};
  std::optional<family1::Spec> spec;
  rec.claim("evaluation set: 14 distinct monic degree-4 lifts", [&] {
    spec = family1::Spec{lift_lambda(ls), 6, 1, {}};
    return Outcome{spec->lambda.size() == 14, "t = " + std::to_string(ls.t()) + ", k^2(k^2-1)/12 = 105 is odd"};
  });
  if (!spec) return;
  rec.claim("sigma criterion on 1000 random subsets", [&] {
    std::mt19937_64 rng(17);
    std::vector<std::size_t> idx(14);
    for (int s = 0; s < 1000; ++s) {
      std::iota(idx.begin(), idx.end(), 0);
      std::shuffle(idx.begin(), idx.end(), rng);
      std::vector<Element> beta;
      for (std::size_t i = 0; i < 6; ++i) beta.push_back(spec->lambda[idx[i]]);
      if (!family1::subset_ok(beta, 1).verdict) return Outcome{false, "vanishes on a sampled subset"};
    }
    return Outcome{true, "nonzero on every sample"};
  });
  rec.claim("MDS by sigma criterion on all 3003 subsets", [&] { return verdict(family1::is_mds(*spec, with_cross(opts))); });
  rec.claim("non-GRS", [&] { return verdict(family1::is_nongrs(*spec, opts, true)); });
}

struct Entry {
  std::string id;
  std::string title;
  std::string field;
  std::function<void(Recorder&, const ScanOptions&)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = [] {
    std::vector<Entry> e{
        {"f1-gf17-k3", "C_{2,1} over GF(17), n = 8: non-GRS MDS", "17", f1_gf17_k3},
        {"f1-gf32-so", "C_v over GF(32), n = 11, k = 5, f = x: self-orthogonal [11,5,6]", "2^5:1,0,1,0,0,1", f1_gf32_so},
        {"f1-gf16-sd", "C_v over GF(16), n = 10, k = 5: self-dual", "2^4:1,1,0,0,1", f1_gf16_sd},
        {"f1-gf25-sd", "C_v over GF(25), n = 10, k = 5: self-dual", "5^2:2,4,1", f1_gf25_sd},
        {"f1-gf23-so", "C_v over GF(23), n = 9, k = 3, f = x^3+21x+18: self-orthogonal", "23", f1_gf23_so},
        {"f1-gf17-k4-sd", "C_v over GF(17), n = 8, k = 4: self-dual with v_i^2 = 3u_i", "17", f1_gf17_k4_sd},
        {"f2-gf19-so", "C_{5,4} over GF(19), n = 10, f = x+2: self-orthogonal", "19", f2_gf19_so},
        {"f2-gf37-h21", "C_{21,4} over GF(37) on {3^i}: non-GRS MDS", "37", f2_gf37_h21},
        {"f2-gf37-h21-ext", "C_{21,4} over GF(37) plus e_4: [19,4] MDS", "37", f2_gf37_h21_ext},
        {"f2-gf128-h16", "C_{16,3} over all of GF(128): non-GRS MDS", "2^7", f2_gf128_h16},
        {"f2-gf128-h16-ext", "C_{16,3} over GF(128) plus e_2, e_3: [130,3] MDS", "2^7", f2_gf128_h16_ext},
        {"f2-gf8-sd", "C_{4,4} over all of GF(8): self-dual [8,4,4], not MDS", "2^3", f2_gf8_sd},
    };
    for (std::size_t i = 0; i < std::size(kTable); ++i) {
      const TableRow row = kTable[i];
      e.push_back({"f2-geom-gf" + std::to_string(row.q) + "-k" + std::to_string(row.k),
                   "Geometric set: [" + std::to_string(row.n) + "," + std::to_string(row.k) + "," + std::to_string(row.d) +
                       "] over GF(" + std::to_string(row.q) + "), gamma = " + std::to_string(row.gamma),
                   std::to_string(row.q), [row](Recorder& r, const ScanOptions& o) { table_row(r, o, row); }});
    }
    e.push_back({"f2-lift-2-9-k5", "Family 2 lift over GF(2^9), k = 5, n = 11", "2^9", lift_f2});
    e.push_back({"f1-lift-2-17-k6", "Family 1 lift over GF(2^17), k = 6, n = 14", "2^17", lift_f1});
    return e;
  }();
  return all;
}

const Entry& find(std::string_view id) {
  for (const auto& e : entries()) {
    if (e.id == id) return e;
  }
  throw Error(ErrorCode::UnknownId, "no catalog entry '" + std::string(id) + "'");
}

}  // namespace

const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& e : entries()) v.push_back(e.id);
    return v;
  }();
  return ids;
}

std::string catalog_title(std::string_view id) { return find(id).title; }

Reproduction reproduce(std::string_view id, const ScanOptions& opts) {
  const Entry& e = find(id);
  Reproduction rep;
  rep.id = e.id;
  rep.title = e.title;
  rep.field = e.field;
  Recorder rec(rep);
  e.run(rec, opts);
  return rep;
}

}  // namespace mdsforge::construct
