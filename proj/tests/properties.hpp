#pragma once

// Randomized property suites shared by the GTest property binary and the
// acceptance runner. Each suite returns how many cases it evaluated and the
// first mismatch it saw, if any.

#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "mdsforge/codes.hpp"
#include "mdsforge/family1.hpp"
#include "mdsforge/family2.hpp"
#include "mdsforge/symfun.hpp"
#include "oracle.hpp"

namespace props {

using namespace mdsforge;
using gf::Element;
using gf::Field;
using symfun::EvalSet;

struct Result {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::size_t positives = 0;  // cases whose verdict was true, where that split matters
  std::string first_failure;

  bool ok(std::size_t min_cases = 200) const { return failures == 0 && cases >= min_cases; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

inline std::uint64_t binom(std::size_t n, std::size_t k) {
  std::uint64_t c = 1;
  for (std::size_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

inline std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + rng() % (hi - lo + 1);
}

inline std::string where(const Field& f, const char* what, std::size_t n, std::size_t k, std::size_t x) {
  std::ostringstream os;
  os << what << " over GF(" << f.spec() << ") n=" << n << " k=" << k << " param=" << x;
  return os.str();
}

/// Random nonzero polynomial of degree at most d.
inline gf::Poly random_poly(const Field& f, long d, std::mt19937_64& rng) {
  gf::Poly p;
  do {
    p.assign(std::size_t(d) + 1, f.zero());
    for (auto& c : p) c = oracle::random_element(f, rng);
  } while (gf::poly_degree(p) < 0);
  return p;
}

/// Canonical multipliers with v_i^2 = u_i f(a_i), if every such value is a nonzero square.
inline std::optional<std::vector<Element>> multipliers(const EvalSet& lam, const gf::Poly& f) {
  std::vector<Element> w;
  for (std::size_t i = 0; i < lam.size(); ++i) {
    const Element x = lam.weights()[i] * gf::poly_eval(f, lam[i]);
    if (x.is_zero() || !x.is_square()) return std::nullopt;
    w.push_back(x);
  }
  return codes::sqrt_all(w);
}

// (a) G H^T = 0 and rank H = n-k for both families.
inline Result parity_check(std::uint64_t seed = 101) {
  Result res;
  std::mt19937_64 rng(seed);
  for (const Field* f : oracle::battery()) {
    const std::size_t q = f->order();
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = pick(rng, 5, std::min<std::size_t>(q, 14));
      const std::size_t k = pick(rng, 3, n - 2);
      const EvalSet lam(*f, oracle::random_points(*f, n, rng));
      {
        const family1::Spec s{lam, k, 1, {}};
        const auto h = family1::parity_check(s);
        ++res.cases;
        if (!mat_mul(family1::generator(s).generator(), transpose(h)).is_zero() || rank(h) != n - k) {
          res.fail(where(*f, "family-1 parity", n, k, 1));
        }
      }
      const std::size_t r = pick(rng, 1, std::min(n - k, q - 1 - k));
      const family2::Spec s{lam, k, k - 1 + r, {}};
      const auto h = family2::parity_check(s);
      ++res.cases;
      if (!mat_mul(family2::generator(s).generator(), transpose(h)).is_zero() || rank(h) != n - k) {
        res.fail(where(*f, "family-2 parity", n, k, r));
      }
    }
  }
  return res;
}

// (b) closed-form MDS scans agree with the minors oracle.
inline Result mds_oracle(std::uint64_t seed = 102) {
  Result res;
  std::mt19937_64 rng(seed);
  for (const Field* f : oracle::battery()) {
    const std::size_t q = f->order();
    int done = 0;
    while (done < 40) {
      const std::size_t n = pick(rng, 5, std::min<std::size_t>(q, 12));
      const std::size_t k = pick(rng, 3, n - 2);
      if (binom(n, k) > 100000) continue;
      ++done;
      const EvalSet lam(*f, oracle::random_points(*f, n, rng));
      const std::size_t r1 = pick(rng, 1, k - 1);
      const family1::Spec s1{lam, k, r1, {}};
      ++res.cases;
      if (family1::is_mds(s1).verdict != codes::is_mds_minors(family1::generator(s1)).verdict) {
        res.fail(where(*f, "family-1 MDS", n, k, r1));
      }
      const std::size_t h = pick(rng, k, q - 2);
      const family2::Spec s2{lam, k, h, {}};
      ++res.cases;
      if (family2::is_mds(s2).verdict != codes::is_mds_minors(family2::generator(s2)).verdict) {
        res.fail(where(*f, "family-2 MDS", n, k, h));
      }
    }
  }
  return res;
}

// (c) Newton's identities in every degree 1..2n.
inline Result newton(std::uint64_t seed = 103) {
  Result res;
  std::mt19937_64 rng(seed);
  for (const Field* f : oracle::battery()) {
    for (int t = 0; t < 200; ++t) {
      const std::size_t n = pick(rng, 1, std::min<std::size_t>(f->order(), 10));
      const auto xs = oracle::random_points(*f, n, rng);
      for (std::size_t N = 1; N <= 2 * n; ++N) {
        ++res.cases;
        if (!symfun::newton_residual(N, xs).is_zero()) res.fail(where(*f, "Newton residual", n, 0, N));
      }
    }
  }
  return res;
}

// (d) generalized Vandermonde closed form against direct elimination.
inline Result gvdm(std::uint64_t seed = 104) {
  Result res;
  std::mt19937_64 rng(seed);
  for (const Field* f : oracle::battery()) {
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = pick(rng, 1, std::min<std::size_t>(f->order(), 8));
      const EvalSet lam(*f, oracle::random_points(*f, n, rng));
      for (std::size_t h = n > 0 ? n - 1 : 0; h <= n + 6; ++h) {
        if (h == 0) continue;
        ++res.cases;
        if (symfun::gvdm_det(lam, h) != symfun::gvdm_det_direct(lam, h)) res.fail(where(*f, "gvdm", n, 0, h));
      }
    }
  }
  return res;
}

inline symfun::Partition random_partition(std::mt19937_64& rng, unsigned max_weight, std::size_t max_len) {
  std::vector<unsigned> parts;
  unsigned left = 1 + unsigned(rng() % max_weight);
  unsigned cap = left;
  while (left > 0 && parts.size() < max_len) {
    const unsigned p = 1 + unsigned(rng() % std::min(cap, left));
    parts.push_back(p);
    left -= p;
    cap = p;
  }
  return symfun::Partition(parts);
}

// (e) Jacobi-Trudi in h, dual Jacobi-Trudi in e, and the bialternant ratio.
inline Result schur_routes(std::uint64_t seed = 105) {
  Result res;
  std::mt19937_64 rng(seed);
  for (const Field* f : oracle::battery()) {
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = pick(rng, 1, std::min<std::size_t>(f->order(), 8));
      const auto xs = oracle::random_points(*f, n, rng);
      const auto lam = random_partition(rng, 6, n);
      const Element a = symfun::schur_poly(lam, xs);
      const Element b = symfun::schur_poly_elementary(lam, xs);
      const Element c = symfun::schur_poly_bialternant(lam, xs);
      ++res.cases;
      if (a != b || a != c) res.fail(where(*f, "Schur routes", n, lam.weight(), lam.length()));
    }
  }
  return res;
}

// (f) the coefficient-window verdict agrees with G_v G_v^T = 0 in the
// regimes where the characterization is two-sided: family 1 with k >= 5,
// family 2 everywhere. Cases come from random f (kept when the
// multipliers exist) and from search hits.
inline Result so_equivalence(std::uint64_t seed = 106) {
  Result res;
  std::mt19937_64 rng(seed);
  auto compare = [&](const Field& f, const char* what, std::size_t n, std::size_t k, bool verdict,
                     const codes::LinearCode& scaled) {
    ++res.cases;
    res.positives += verdict;
    if (verdict != codes::is_self_orthogonal(scaled).verdict) res.fail(where(f, what, n, k, verdict));
  };
  for (const Field* f : oracle::battery()) {
    const std::size_t q = f->order();
    // Family 1, k >= 5 needs n >= 2k >= 10.
    if (q >= 10) {
      for (int t = 0, kept = 0; t < 4000 && kept < 30; ++t) {
        const std::size_t k = 5;
        const std::size_t n = pick(rng, 2 * k, std::min<std::size_t>(q, 2 * k + 3));
        family1::Spec s{EvalSet(*f, oracle::random_points(*f, n, rng)), k, 1, {}};
        std::optional<gf::Poly> poly;
        if (t % 2 == 0) {
          if (auto hit = family1::so_search(s, 20000)) poly = hit->f;
        } else {
          poly = random_poly(*f, long(n - 2 * k), rng);
        }
        if (!poly) continue;
        const auto v = multipliers(s.lambda, *poly);
        if (!v) continue;
        ++kept;
        const bool verdict = family1::so_check(s, *poly, *v).verdict;
        s.v = v;
        compare(*f, "family-1 SO", n, k, verdict, family1::generator(s));
      }
    }
    for (int t = 0, kept = 0; t < 4000 && kept < 30; ++t) {
      const std::size_t n = pick(rng, 5, std::min<std::size_t>(q, 12));
      const std::size_t k = 3 + rng() % 2;
      if (k + 2 > n) continue;
      const std::size_t h = pick(rng, k, std::min<std::size_t>(q - 2, k + n));
      family2::Spec s{EvalSet(*f, oracle::random_points(*f, n, rng)), k, h, {}};
      const long bound = family2::so_degree_bound(s);
      if (bound < 0) continue;
      std::optional<gf::Poly> poly;
      if (t % 2 == 0) {
        if (auto hit = family2::so_search(s, 20000)) poly = hit->f;
      } else {
        poly = random_poly(*f, bound, rng);
      }
      if (!poly) continue;
      const auto v = multipliers(s.lambda, *poly);
      if (!v) continue;
      ++kept;
      const bool verdict = family2::so_check(s, *poly, *v).verdict;
      s.v = v;
      compare(*f, "family-2 SO", n, k, verdict, family2::generator(s));
    }
  }
  return res;
}

// (g) every family-1 code has d in {n-k-1, n-k, n-k+1}.
inline Result f1_distance(std::uint64_t seed = 107) {
  Result res;
  std::mt19937_64 rng(seed);
  for (const Field* f : oracle::battery()) {
    const std::size_t q = f->order();
    for (int t = 0; t < 40; ++t) {
      const std::size_t k = q <= 11 ? 3 + rng() % 2 : 3;
      const std::size_t n = pick(rng, k + 2, std::min<std::size_t>(q, 12));
      const std::size_t r = pick(rng, 1, k - 1);
      const family1::Spec s{EvalSet(*f, oracle::random_points(*f, n, rng)), k, r, {}};
      const auto rep = codes::min_distance(family1::generator(s));
      ++res.cases;
      const auto d = std::get<std::int64_t>(*rep.quantity);
      const auto nk = std::int64_t(n - k);
      if (d < nk - 1 || d > nk + 1) res.fail(where(*f, "family-1 distance", n, k, std::size_t(d)));
    }
  }
  return res;
}

struct Suite {
  const char* name;
  std::function<Result()> run;
};

inline std::vector<Suite> all_suites() {
  return {
      {"parity check G H^T = 0, rank n-k", [] { return parity_check(); }},
      {"closed-form MDS vs minors oracle", [] { return mds_oracle(); }},
      {"Newton residual", [] { return newton(); }},
      {"generalized Vandermonde closed form", [] { return gvdm(); }},
      {"Schur polynomial routes", [] { return schur_routes(); }},
      {"self-orthogonality windows vs Gram", [] { return so_equivalence(); }},
      {"family-1 distance membership", [] { return f1_distance(); }},
  };
}

}  // namespace props
