#include "mdsforge/family1.hpp"

#include <stdexcept>

#include "mdsforge/scan.hpp"

namespace mdsforge::family1 {

using codes::CheckReport;
using codes::Witness;
using gf::Element;
using gf::Field;
using gf::Word;

void Spec::validate() const {
  const std::size_t n = lambda.size();
  const std::uint64_t q = lambda.field().order();
  if (k < 3 || k + 2 > n || n > q) {
    throw Error(ErrorCode::SpecViolation, "family 1 needs 3 <= k <= n-2 <= q-2 (k=" + std::to_string(k) +
                                              ", n=" + std::to_string(n) + ", q=" + std::to_string(q) + ")");
  }
  if (r < 1 || r + 1 > k) throw Error(ErrorCode::SpecViolation, "family 1 needs 1 <= r <= k-1");
  if (v && v->size() != n) throw Error(ErrorCode::DimensionMismatch, "multiplier length differs from n");
}

std::vector<long> exponents(std::size_t k, std::size_t r) {
  std::vector<long> e;
  for (long i = 0; i <= long(k) - long(r) - 2; ++i) e.push_back(i);
  for (long i = long(k) - long(r) + 1; i <= long(k) + 1; ++i) e.push_back(i);
  if (e.size() != k) throw Error(ErrorCode::SpecViolation, "exponent rows do not number k");
  return e;
}

codes::LinearCode generator(const Spec& spec) {
  spec.validate();
  const Field& f = spec.lambda.field();
  const auto e = exponents(spec.k, spec.r);
  const std::size_t n = spec.lambda.size();
  MatGF g(f, spec.k, n);
  for (std::size_t i = 0; i < spec.k; ++i) {
    for (std::size_t j = 0; j < n; ++j) g.raw(i, j) = f.pow(spec.lambda.words()[j], e[i]);
  }
  codes::Provenance prov{e, spec.lambda.points(), {}, 0};
  codes::LinearCode base(std::move(g), std::move(prov));
  if (!spec.v) return base;
  return codes::scale_columns(base, *spec.v);
}

std::array<Element, 3> power_sums(const symfun::EvalSet& lambda) {
  std::vector<Word> s(4);
  symfun::kernel::complete(lambda.field(), lambda.words(), s);
  const Field& f = lambda.field();
  return {Element(f, s[1]), Element(f, s[2]), Element(f, s[3])};
}

MatGF parity_check(const Spec& spec) {
  spec.validate();
  if (spec.r != 1) {
    throw Error(ErrorCode::SpecViolation, "the explicit parity check covers r = 1 only; use the null space otherwise");
  }
  const Field& f = spec.lambda.field();
  const std::size_t n = spec.lambda.size(), k = spec.k;
  std::vector<Word> sig(4);
  symfun::kernel::elementary(f, spec.lambda.words(), sig);
  const auto u = spec.lambda.weight_words();
  const auto a = spec.lambda.words();
  MatGF h(f, n - k, n);
  const long top = long(n) - long(k);
  for (std::size_t j = 0; j < n; ++j) {
    for (long i = 0; i <= top - 3; ++i) h.raw(std::size_t(i), j) = f.mul(u[j], f.pow(a[j], i));
    // Lambda_j = a^{n-k+1} - s1 a^{n-k} + s2 a^{n-k-1} - s3 a^{n-k-2}
    Word lam = f.pow(a[j], top + 1);
    lam = f.sub(lam, f.mul(sig[1], f.pow(a[j], top)));
    lam = f.add(lam, f.mul(sig[2], f.pow(a[j], top - 1)));
    lam = f.sub(lam, f.mul(sig[3], f.pow(a[j], top - 2)));
    // Gamma_j = a^{n-k} - s1 a^{n-k-1} + s2 a^{n-k-2}
    Word gam = f.pow(a[j], top);
    gam = f.sub(gam, f.mul(sig[1], f.pow(a[j], top - 1)));
    gam = f.add(gam, f.mul(sig[2], f.pow(a[j], top - 2)));
    h.raw(n - k - 2, j) = f.mul(u[j], lam);
    h.raw(n - k - 1, j) = f.mul(u[j], gam);
  }
  return h;
}

namespace {

Word criterion_value(const Field& f, std::span<const Word> beta, std::size_t r, std::vector<Word>& sig) {
  symfun::kernel::elementary(f, beta, sig);
  return f.sub(f.mul(sig[r + 1], sig[r + 1]), f.mul(sig[r], sig[r + 2]));
}

Word s_form_value(const Field& f, std::span<const Word> beta, std::vector<Word>& s) {
  symfun::kernel::complete(f, beta, s);
  return f.sub(f.mul(s[2], s[2]), f.mul(s[1], s[3]));
}

}  // namespace

CheckReport subset_ok(std::span<const Element> beta, std::size_t r) {
  if (beta.empty()) throw Error(ErrorCode::SpecViolation, "empty subset");
  const Field& f = beta.front().field();
  const symfun::EvalSet set(f, std::vector<Element>(beta.begin(), beta.end()));
  std::vector<Word> sig(r + 3);
  const Word value = criterion_value(f, set.words(), r, sig);
  CheckReport rep;
  rep.check = "subset";
  rep.basis = "criterion";
  rep.verdict = value != 0;
  rep.quantity = Element(f, value);
  if (r == 1) {
    std::vector<Word> s(4);
    if (s_form_value(f, set.words(), s) != value) {
      throw std::logic_error("sigma and S forms of the subset criterion disagree");
    }
    rep.notes.push_back("S_2^2 - S_1 S_3 agrees");
  }
  if (!rep.verdict) rep.witness = Witness{{}, set.points(), "criterion vanishes on the subset"};
  return rep;
}

CheckReport is_mds(const Spec& spec, const codes::ScanOptions& opts) {
  spec.validate();
  const Field& f = spec.lambda.field();
  const auto pts = spec.lambda.words();
  const std::size_t k = spec.k, r = spec.r;
  const bool cross = opts.cross_check && r == 1;
  auto res = scan::scan_subsets(pts.size(), k, opts.threads, opts.subset_budget, [&] {
    return [&f, pts, k, r, cross, beta = std::vector<Word>(k), sig = std::vector<Word>(r + 3),
            s = std::vector<Word>(4)](std::span<const std::size_t> idx, std::size_t) mutable {
      for (std::size_t i = 0; i < k; ++i) beta[i] = pts[idx[i]];
      const Word v = criterion_value(f, beta, r, sig);
      if (cross && s_form_value(f, beta, s) != v) {
        throw std::logic_error("sigma and S forms of the subset criterion disagree");
      }
      return v != 0;
    };
  });
  CheckReport rep;
  rep.check = "mds";
  rep.basis = "criterion";
  rep.verdict = res.ok;
  rep.quantity = std::int64_t(res.total);
  if (!res.ok) {
    std::vector<Element> vals;
    for (std::size_t i : res.witness) vals.push_back(spec.lambda[i]);
    rep.witness = Witness{res.witness, vals, "sigma_{r+1}^2 - sigma_r sigma_{r+2} = 0"};
  }
  if (opts.cross_check) {
    const auto oracle = codes::is_mds_minors(generator(spec), opts);
    if (oracle.verdict != rep.verdict || (!oracle.verdict && oracle.witness->indices != rep.witness->indices)) {
      throw std::logic_error("family 1 criterion disagrees with the minors oracle");
    }
    rep.notes.push_back("minors oracle agrees");
  }
  return rep;
}

CheckReport is_nongrs(const Spec& spec, const codes::ScanOptions& opts, std::optional<bool> known_mds) {
  spec.validate();
  const bool mds = known_mds ? *known_mds : is_mds(spec, opts).verdict;
  if (!mds) throw Error(ErrorCode::NotMDS, "non-GRS decision needs an MDS code");
  const std::size_t n = spec.lambda.size(), k = spec.k;
  const std::uint64_t q = spec.lambda.field().order();
  const auto code = generator(spec);
  const bool small_k = (k == 3 || k == 4) && 2 * k <= n && q >= 11;
  const bool large_k = k >= 5 && 2 * k + 2 <= n;
  CheckReport rep;
  rep.check = "nongrs";
  if (spec.r == 1 && (small_k || large_k)) {
    const std::size_t dim = code.schur_square_dim();
    rep.basis = "theorem";
    rep.quantity = std::int64_t(dim);
    rep.verdict = dim >= 2 * k;
    if (!rep.verdict) {
      rep.witness = Witness{{dim}, {}, "Schur square dimension below 2k inside the theorem's range"};
    }
    return rep;
  }
  auto grs = codes::is_grs_by_schur(code, opts, true);
  rep.basis = "schur";
  rep.quantity = grs.quantity;
  rep.verdict = !grs.verdict;
  if (!rep.verdict) rep.witness = Witness{{2 * k - 1}, {}, "Schur square dimension equals 2k-1"};
  return rep;
}

namespace {

Element coeff(const gf::Poly& f, long j, const Field& field) {
  if (j < 0 || j >= long(f.size())) return field.zero();
  return f[std::size_t(j)];
}

}  // namespace

CheckReport so_check(const Spec& spec, const gf::Poly& f, std::vector<Element> v) {
  spec.validate();
  const Field& F = spec.lambda.field();
  const std::size_t n = spec.lambda.size(), k = spec.k;
  const long D = long(n) - 2 * long(k);
  const long deg = gf::poly_degree(f);
  if (deg < 0) throw Error(ErrorCode::SpecViolation, "f must be a nonzero polynomial");
  if (deg > D) {
    throw Error(ErrorCode::DegreeTooHigh, "deg f = " + std::to_string(deg) + " exceeds n-2k = " + std::to_string(D));
  }
  for (const auto& c : f) {
    if (c.field_ptr() != &F) throw Error(ErrorCode::FieldMismatch, "polynomial over another field");
  }
  CheckReport rep;
  rep.check = "self_orthogonal";
  rep.basis = "criterion";
  rep.verdict = true;

  std::vector<Element> w;
  for (std::size_t i = 0; i < n; ++i) w.push_back(spec.lambda.weights()[i] * gf::poly_eval(f, spec.lambda[i]));
  bool cond1 = true;
  if (v.empty()) {
    for (std::size_t i = 0; i < n && cond1; ++i) {
      if (w[i].is_zero() || !w[i].is_square()) {
        cond1 = false;
        rep.witness = Witness{{1, i}, {w[i]}, "u_i f(a_i) is not a nonzero square"};
      }
    }
    if (cond1) v = codes::sqrt_all(w);
  } else {
    if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "multiplier length differs from n");
    for (std::size_t i = 0; i < n && cond1; ++i) {
      if (v[i].is_zero() || v[i].square() != w[i]) {
        cond1 = false;
        rep.witness = Witness{{1, i}, {v[i], w[i]}, "v_i^2 != u_i f(a_i)"};
      }
    }
  }
  rep.verdict = cond1;

  const auto S = power_sums(spec.lambda);
  const std::array<Element, 4> Sx{F.one(), S[0], S[1], S[2]};
  for (long c = 1; c <= 3 && rep.verdict; ++c) {
    Element acc = F.zero();
    for (long j = 0; j <= c; ++j) acc += coeff(f, D - c + j, F) * Sx[std::size_t(j)];
    if (!acc.is_zero()) {
      rep.verdict = false;
      rep.witness = Witness{{std::size_t(c + 1)}, {acc}, "coefficient window " + std::to_string(c) + " is nonzero"};
    }
  }

  if (cond1) {
    Spec scaled = spec;
    scaled.v = v;
    const bool direct = codes::is_self_orthogonal(generator(scaled)).verdict;
    if (rep.verdict && !direct) throw std::logic_error("conditions hold but G_v G_v^T != 0");
    if (k >= 5 && !rep.verdict && direct) throw std::logic_error("G_v G_v^T = 0 but a condition fails for k >= 5");
    rep.notes.push_back(std::string("direct G_v G_v^T = 0: ") + (direct ? "yes" : "no"));
    if (k < 5) rep.notes.push_back("for k < 5 the conditions are sufficient, not necessary");
    if (rep.verdict) rep.certificate = v;
  }
  return rep;
}

std::optional<SoHit> so_search(const Spec& spec, std::uint64_t budget) {
  spec.validate();
  const Field& F = spec.lambda.field();
  const std::size_t n = spec.lambda.size(), k = spec.k;
  const long D = long(n) - 2 * long(k);
  if (D < 0) return std::nullopt;
  const std::size_t dim = std::size_t(D) + 1;
  const auto S = power_sums(spec.lambda);
  const std::array<Word, 4> Sx{1, S[0].value(), S[1].value(), S[2].value()};
  MatGF cons(F, 3, dim);
  for (long c = 1; c <= 3; ++c) {
    for (long j = 0; j <= c; ++j) {
      const long idx = D - c + j;
      if (idx >= 0) cons.raw(std::size_t(c - 1), std::size_t(idx)) = Sx[std::size_t(j)];
    }
  }
  MatGF eval(F, dim, n);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      eval.raw(j, i) = F.mul(spec.lambda.weight_words()[i], F.pow(spec.lambda.words()[i], std::int64_t(j)));
    }
  }
  auto hit = codes::search_square_weighting(cons, eval, budget);
  if (!hit) return std::nullopt;
  return SoHit{hit->coeffs, codes::sqrt_all(hit->weights)};
}

CheckReport self_dual_check(const symfun::EvalSet& lambda, std::size_t k) {
  const std::size_t n = lambda.size();
  if (n != 2 * k) throw Error(ErrorCode::BadLength, "self-duality needs n = 2k");
  Spec spec{lambda, k, 1, std::nullopt};
  spec.validate();
  CheckReport rep;
  rep.check = "self_dual";
  rep.basis = "criterion";
  const auto S = power_sums(lambda);
  for (std::size_t i = 0; i < 3; ++i) {
    if (!S[i].is_zero()) {
      rep.verdict = false;
      rep.witness = Witness{{i + 1}, {S[i]}, "S_" + std::to_string(i + 1) + " != 0"};
      if (k < 5) rep.notes.push_back("for k < 5 the conditions are sufficient, not necessary");
      return rep;
    }
  }
  const auto lam = codes::square_class_normalizer(lambda.weights());
  if (!lam) {
    rep.verdict = false;
    rep.witness = Witness{{}, {}, "the u_i mix squares and nonsquares"};
    if (k < 5) rep.notes.push_back("for k < 5 the conditions are sufficient, not necessary");
    return rep;
  }
  std::vector<Element> w;
  for (const auto& u : lambda.weights()) w.push_back(*lam * u);
  spec.v = codes::sqrt_all(w);
  const bool direct = codes::is_self_dual(generator(spec)).verdict;
  if (!direct) throw std::logic_error("self-dual conditions hold but G_v G_v^T != 0");
  rep.verdict = true;
  rep.quantity = *lam;
  rep.certificate = *spec.v;
  rep.notes.push_back("v_i^2 = " + lam->str() + " * u_i");
  return rep;
}

}  // namespace mdsforge::family1
