#pragma once

// First family: the code C_{k-r,k-r-1} whose generator is the k x (k+2)
// Vandermonde on exponents 0..k+1 with the two consecutive rows k-r-1 and
// k-r removed. r = 1 gives C_{k-1,k-2}.

#include <array>
#include <optional>
#include <vector>

#include "mdsforge/codes.hpp"

namespace mdsforge::family1 {

struct Spec {
  symfun::EvalSet lambda;
  std::size_t k = 0;
  std::size_t r = 1;
  std::optional<std::vector<gf::Element>> v;

  /// Throws SpecViolation unless 3 <= k <= n-2 <= q-2 and 1 <= r <= k-1.
  void validate() const;
};

/// {0..k-r-2} followed by {k-r+1..k+1}.
std::vector<long> exponents(std::size_t k, std::size_t r);

codes::LinearCode generator(const Spec& spec);

/// The explicit (n-k) x n parity-check matrix for r = 1.
MatGF parity_check(const Spec& spec);

/// sigma_{r+1}^2 - sigma_r sigma_{r+2} on beta, nonzero iff the minor on beta
/// is nonsingular. For r = 1 the value is recomputed as S_2^2 - S_1 S_3.
codes::CheckReport subset_ok(std::span<const gf::Element> beta, std::size_t r);

codes::CheckReport is_mds(const Spec& spec, const codes::ScanOptions& opts = {});

/// Verdict true means non-GRS. Uses the structural theorems where their
/// hypotheses hold and the Schur-square criterion elsewhere; throws
/// Inconclusive when neither applies and NotMDS for non-MDS input.
codes::CheckReport is_nongrs(const Spec& spec, const codes::ScanOptions& opts = {},
                             std::optional<bool> known_mds = std::nullopt);

/// S_1, S_2, S_3 of the full point set.
std::array<gf::Element, 3> power_sums(const symfun::EvalSet& lambda);

/// Checks v_i^2 = u_i f(a_i) and the three coefficient windows against
/// S_1..S_3, then compares with G_v G_v^T = 0. With an empty `v` the
/// canonical square roots are used.
codes::CheckReport so_check(const Spec& spec, const gf::Poly& f, std::vector<gf::Element> v = {});

struct SoHit {
  gf::Poly f;
  std::vector<gf::Element> v;
};
/// First f (lexicographic over the free coefficients) meeting the
/// coefficient windows with every u_i f(a_i) a nonzero square.
std::optional<SoHit> so_search(const Spec& spec, std::uint64_t budget);

/// n = 2k required (BadLength). Certificate holds v on success.
codes::CheckReport self_dual_check(const symfun::EvalSet& lambda, std::size_t k);

}  // namespace mdsforge::family1
