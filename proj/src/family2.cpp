#include "mdsforge/family2.hpp"

#include <stdexcept>

#include "mdsforge/scan.hpp"

namespace mdsforge::family2 {

using codes::CheckReport;
using codes::Witness;
using gf::Element;
using gf::Field;
using gf::Word;

void Spec::validate() const {
  const std::size_t n = lambda.size();
  const std::uint64_t q = lambda.field().order();
  if (k < 3 || k + 2 > n || n > q) {
    throw Error(ErrorCode::SpecViolation, "family 2 needs 3 <= k <= n-2 <= q-2 (k=" + std::to_string(k) +
                                              ", n=" + std::to_string(n) + ", q=" + std::to_string(q) + ")");
  }
  if (h < k || h + 2 > q) {
    throw Error(ErrorCode::SpecViolation, "family 2 needs k <= h <= q-2 (h=" + std::to_string(h) + ")");
  }
  if (v && v->size() != n) throw Error(ErrorCode::DimensionMismatch, "multiplier length differs from n");
}

std::vector<long> exponents(std::size_t k, std::size_t h) {
  std::vector<long> e;
  for (long i = 0; i + 2 <= long(k); ++i) e.push_back(i);
  e.push_back(long(h));
  return e;
}

codes::LinearCode generator(const Spec& spec) {
  spec.validate();
  const Field& f = spec.lambda.field();
  const auto e = exponents(spec.k, spec.h);
  const std::size_t n = spec.lambda.size();
  MatGF g(f, spec.k, n);
  for (std::size_t i = 0; i < spec.k; ++i) {
    for (std::size_t j = 0; j < n; ++j) g.raw(i, j) = f.pow(spec.lambda.words()[j], e[i]);
  }
  codes::LinearCode base(std::move(g), codes::Provenance{e, spec.lambda.points(), {}, 0});
  if (!spec.v) return base;
  return codes::scale_columns(base, *spec.v);
}

MatGF parity_check(const Spec& spec) {
  spec.validate();
  const Field& f = spec.lambda.field();
  const std::size_t n = spec.lambda.size(), k = spec.k, r = spec.r();
  if (n < k + r) {
    throw Error(ErrorCode::SpecViolation, "explicit parity check needs n - k - r >= 0; use the null space");
  }
  const std::size_t B = n - k - r;
  std::vector<Word> sig(r + 1);
  symfun::kernel::elementary(f, spec.lambda.words(), sig);
  MatGF hm(f, n - k, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Word a = spec.lambda.words()[i];
    const Word u = spec.lambda.weight_words()[i];
    for (std::size_t j = 0; j < B; ++j) hm.raw(j, i) = f.mul(u, f.pow(a, std::int64_t(j)));
    for (std::size_t row = 1; row <= r; ++row) {
      Word beta = 0;
      for (std::size_t j = 0; j <= row; ++j) {
        const Word term = f.mul(sig[j], f.pow(a, std::int64_t(B + row - j)));
        beta = j % 2 == 0 ? f.add(beta, term) : f.sub(beta, term);
      }
      hm.raw(B + row - 1, i) = f.mul(u, beta);
    }
  }
  return hm;
}

CheckReport subset_ok(std::span<const Element> beta, std::size_t h) {
  if (beta.empty()) throw Error(ErrorCode::SpecViolation, "empty subset");
  const Field& f = beta.front().field();
  const symfun::EvalSet set(f, std::vector<Element>(beta.begin(), beta.end()));
  if (h + 1 < set.size()) throw Error(ErrorCode::SpecViolation, "h must be at least k - 1");
  const std::size_t T = h + 1 - set.size();
  std::vector<Word> s(T + 1);
  symfun::kernel::complete(f, set.words(), s);
  CheckReport rep;
  rep.check = "subset";
  rep.basis = "criterion";
  rep.verdict = s[T] != 0;
  rep.quantity = Element(f, s[T]);
  if (!rep.verdict) rep.witness = Witness{{}, set.points(), "S_{h-k+1} vanishes on the subset"};
  return rep;
}

namespace {

// S_T of the current subset, reusing the DP rows of the unchanged prefix.
class PrefixComplete {
 public:
  PrefixComplete(const Field& f, std::span<const Word> pts, std::size_t k, std::size_t T)
      : f_(f), pts_(pts), k_(k), T_(T), rows_((k + 1) * (T + 1), 0) {
    rows_[0] = 1;
  }

  bool operator()(std::span<const std::size_t> idx, std::size_t changed) {
    for (std::size_t d = changed; d < k_; ++d) {
      const Word* prev = &rows_[d * (T_ + 1)];
      Word* cur = &rows_[(d + 1) * (T_ + 1)];
      const Word x = pts_[idx[d]];
      cur[0] = 1;
      for (std::size_t t = 1; t <= T_; ++t) cur[t] = f_.add(prev[t], f_.mul(x, cur[t - 1]));
    }
    return rows_[k_ * (T_ + 1) + T_] != 0;
  }

 private:
  const Field& f_;
  std::span<const Word> pts_;
  std::size_t k_, T_;
  std::vector<Word> rows_;
};

}  // namespace

CheckReport is_mds(const Spec& spec, const codes::ScanOptions& opts) {
  spec.validate();
  const Field& f = spec.lambda.field();
  const auto pts = spec.lambda.words();
  const std::size_t k = spec.k, T = spec.r();
  auto res = scan::scan_subsets(pts.size(), k, opts.threads, opts.subset_budget,
                                [&] { return PrefixComplete(f, pts, k, T); });
  CheckReport rep;
  rep.check = "mds";
  rep.basis = "criterion";
  rep.verdict = res.ok;
  rep.quantity = std::int64_t(res.total);
  if (!res.ok) {
    std::vector<Element> vals;
    for (std::size_t i : res.witness) vals.push_back(spec.lambda[i]);
    rep.witness = Witness{res.witness, vals, "S_{h-k+1} = 0"};
  }
  if (opts.cross_check) {
    const auto oracle = codes::is_mds_minors(generator(spec), opts);
    if (oracle.verdict != rep.verdict || (!oracle.verdict && oracle.witness->indices != rep.witness->indices)) {
      throw std::logic_error("family 2 criterion disagrees with the minors oracle");
    }
    rep.notes.push_back("minors oracle agrees");
  }
  return rep;
}

CheckReport is_nongrs(const Spec& spec, const codes::ScanOptions& opts, std::optional<bool> known_mds) {
  spec.validate();
  const bool mds = known_mds ? *known_mds : is_mds(spec, opts).verdict;
  if (!mds) throw Error(ErrorCode::NotMDS, "non-GRS decision needs an MDS code");
  const std::size_t n = spec.lambda.size(), k = spec.k, r = spec.r();
  const std::uint64_t q = spec.lambda.field().order();
  const auto code = generator(spec);
  bool covered = false;
  bool exact = false;
  std::string regime;
  if (r == 1) {
    covered = 2 * k + 2 <= n;
    exact = true;
    regime = "r = 1, 3 <= k <= (n-2)/2";
  } else if (r + 2 <= k) {
    covered = k >= 4 && 2 * k + 1 <= n;
    regime = "2 <= r <= k-2, 4 <= k <= (n-1)/2";
  } else if (k == 3) {
    covered = 2 * r + k + 3 <= q && 2 * k <= n;
    regime = "r >= k-1, k = 3, r <= (q-k-3)/2, k <= n/2";
  } else {
    covered = r + k + 3 <= q && 2 * k <= n;
    regime = "r >= k-1, k >= 4, r <= q-k-3, k <= n/2";
  }
  CheckReport rep;
  rep.check = "nongrs";
  if (covered) {
    const std::size_t dim = code.schur_square_dim();
    rep.basis = "theorem";
    rep.quantity = std::int64_t(dim);
    rep.verdict = dim >= 2 * k;
    rep.notes.push_back("regime: " + regime);
    if (!rep.verdict) {
      rep.witness = Witness{{dim}, {}, "Schur square dimension below 2k inside the theorem's range"};
    } else if (exact && dim != 2 * k) {
      rep.notes.push_back("Schur square dimension " + std::to_string(dim) + " differs from the expected 2k");
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

SoRegime so_regime(const Spec& spec) noexcept { return spec.r() + 2 <= spec.k ? SoRegime::SmallR : SoRegime::LargeR; }

long so_degree_bound(const Spec& spec) noexcept {
  const long n = long(spec.lambda.size()), k = long(spec.k), r = long(spec.r());
  return so_regime(spec) == SoRegime::SmallR ? n - 2 * k - r + 1 : n - 2 * k + 2;
}

namespace {

struct Window {
  long start;  // s: the window is sum_{j=s}^{s+len} f_j S_{j-s}
  long len;
};

std::vector<Window> so_windows(const Spec& spec) {
  const long n = long(spec.lambda.size()), k = long(spec.k), r = long(spec.r());
  std::vector<Window> w;
  const long s = n - 2 * k - 2 * r + 1;
  if (so_regime(spec) == SoRegime::SmallR) {
    w.push_back({s, r});
    return w;
  }
  w.push_back({s, 2 * r + 1});
  for (long l = k - 1 + r; l <= 2 * k - 3 + r; ++l) w.push_back({n - l - 1, l - 2 * k + 3});
  return w;
}

}  // namespace

CheckReport so_check(const Spec& spec, const gf::Poly& f, std::vector<Element> v) {
  spec.validate();
  const Field& F = spec.lambda.field();
  const std::size_t n = spec.lambda.size();
  const long deg = gf::poly_degree(f);
  const long bound = so_degree_bound(spec);
  if (deg < 0) throw Error(ErrorCode::SpecViolation, "f must be a nonzero polynomial");
  if (deg > bound) {
    throw Error(ErrorCode::DegreeTooHigh, "deg f = " + std::to_string(deg) + " exceeds " + std::to_string(bound));
  }
  for (const auto& c : f) {
    if (c.field_ptr() != &F) throw Error(ErrorCode::FieldMismatch, "polynomial over another field");
  }
  CheckReport rep;
  rep.check = "self_orthogonal";
  rep.basis = "criterion";

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

  const auto windows = so_windows(spec);
  long smax = 0;
  for (const auto& win : windows) smax = std::max(smax, win.len);
  std::vector<Word> S(std::size_t(smax) + 1);
  symfun::kernel::complete(F, spec.lambda.words(), S);
  for (std::size_t c = 0; c < windows.size() && rep.verdict; ++c) {
    Word acc = 0;
    for (long j = windows[c].start; j <= windows[c].start + windows[c].len; ++j) {
      if (j < 0 || j > deg) continue;
      acc = F.add(acc, F.mul(f[std::size_t(j)].value(), S[std::size_t(j - windows[c].start)]));
    }
    if (acc != 0) {
      rep.verdict = false;
      rep.witness = Witness{{c + 2}, {Element(F, acc)},
                            "window starting at s = " + std::to_string(windows[c].start) + " is nonzero"};
    }
  }

  if (cond1) {
    Spec scaled = spec;
    scaled.v = v;
    const bool direct = codes::is_self_orthogonal(generator(scaled)).verdict;
    if (rep.verdict != direct) throw std::logic_error("coefficient windows disagree with G_v G_v^T");
    rep.notes.push_back(std::string("direct G_v G_v^T = 0: ") + (direct ? "yes" : "no"));
    if (rep.verdict) rep.certificate = v;
  }
  rep.notes.push_back(so_regime(spec) == SoRegime::SmallR ? "regime: 1 <= r <= k-2" : "regime: r >= k-1");
  return rep;
}

std::optional<SoHit> so_search(const Spec& spec, std::uint64_t budget) {
  spec.validate();
  const Field& F = spec.lambda.field();
  const std::size_t n = spec.lambda.size();
  const long bound = so_degree_bound(spec);
  if (bound < 0) return std::nullopt;
  const std::size_t dim = std::size_t(bound) + 1;
  const auto windows = so_windows(spec);
  long smax = 0;
  for (const auto& win : windows) smax = std::max(smax, win.len);
  std::vector<Word> S(std::size_t(smax) + 1);
  symfun::kernel::complete(F, spec.lambda.words(), S);
  MatGF cons(F, windows.size(), dim);
  for (std::size_t c = 0; c < windows.size(); ++c) {
    for (long j = windows[c].start; j <= windows[c].start + windows[c].len; ++j) {
      if (j >= 0 && j <= bound) cons.raw(c, std::size_t(j)) = S[std::size_t(j - windows[c].start)];
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

CheckReport self_dual_check(const symfun::EvalSet& lambda, std::size_t k, std::size_t h,
                            std::uint64_t fallback_budget) {
  const std::size_t n = lambda.size();
  if (n != 2 * k || n < 6) throw Error(ErrorCode::BadLength, "self-duality needs n = 2k >= 6");
  Spec spec{lambda, k, h, std::nullopt};
  spec.validate();
  const std::size_t r = spec.r();
  const std::uint64_t q = lambda.field().order();
  CheckReport rep;
  rep.check = "self_dual";
  if (r >= 2 && r + 2 <= k) {
    rep.basis = "theorem";
    rep.verdict = false;
    rep.witness = Witness{{r}, {}, "self-duality forces r = 1"};
    return rep;
  }
  if (r + 1 >= k && r + k + 3 <= q && n >= 8) {
    rep.basis = "theorem";
    rep.verdict = false;
    rep.witness = Witness{{r}, {}, "impossible regime: k-1 <= r <= q-k-3 is never self-dual"};
    return rep;
  }
  if (r == 1) {
    rep.basis = "criterion";
    std::vector<Word> s(2);
    symfun::kernel::complete(lambda.field(), lambda.words(), s);
    if (s[1] != 0) {
      rep.verdict = false;
      rep.witness = Witness{{1}, {Element(lambda.field(), s[1])}, "S_1 != 0"};
      return rep;
    }
    const auto lam = codes::square_class_normalizer(lambda.weights());
    if (!lam) {
      rep.verdict = false;
      rep.witness = Witness{{}, {}, "the u_i mix squares and nonsquares"};
      return rep;
    }
    std::vector<Element> w;
    for (const auto& u : lambda.weights()) w.push_back(*lam * u);
    spec.v = codes::sqrt_all(w);
    if (!codes::is_self_dual(generator(spec)).verdict) {
      throw std::logic_error("self-dual conditions hold but G_v G_v^T != 0");
    }
    rep.verdict = true;
    rep.quantity = *lam;
    rep.certificate = *spec.v;
    rep.notes.push_back("v_i^2 = " + lam->str() + " * u_i");
    return rep;
  }
  if (fallback_budget > 0) {
    if (auto v = codes::find_self_orthogonal_scaling(generator(spec), fallback_budget)) {
      rep.basis = "search";
      rep.verdict = true;
      rep.certificate = *v;
      return rep;
    }
  }
  throw Error(ErrorCode::Inconclusive, "no theorem covers r = " + std::to_string(r) + " here");
}

}  // namespace mdsforge::family2
