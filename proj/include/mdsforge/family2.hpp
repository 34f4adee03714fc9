#pragma once

// Second family: C_{h,k}, generated by the Vandermonde rows a^0..a^{k-2}
// followed by a^h. The offset r = h - k + 1 selects the regime.

#include <optional>
#include <vector>

#include "mdsforge/codes.hpp"

namespace mdsforge::family2 {

struct Spec {
  symfun::EvalSet lambda;
  std::size_t k = 0;
  std::size_t h = 0;
  std::optional<std::vector<gf::Element>> v;

  std::size_t r() const noexcept { return h + 1 - k; }
  /// Throws SpecViolation unless 3 <= k <= n-2 <= q-2 and k <= h <= q-2.
  void validate() const;
};

std::vector<long> exponents(std::size_t k, std::size_t h);

codes::LinearCode generator(const Spec& spec);

/// Rows u_i a_i^0..a_i^{n-k-r-1} followed by u_i beta_{i,a} for a = 1..r.
/// Throws SpecViolation when n - k - r < 0.
MatGF parity_check(const Spec& spec);

/// S_{h-k+1}(beta) != 0.
codes::CheckReport subset_ok(std::span<const gf::Element> beta, std::size_t h);

codes::CheckReport is_mds(const Spec& spec, const codes::ScanOptions& opts = {});

/// Verdict true means non-GRS; dispatches on r. Throws Inconclusive outside
/// every covered regime and NotMDS for non-MDS input.
codes::CheckReport is_nongrs(const Spec& spec, const codes::ScanOptions& opts = {},
                             std::optional<bool> known_mds = std::nullopt);

enum class SoRegime { SmallR, LargeR };
/// SmallR for 1 <= r <= k-2, LargeR for r >= k-1.
SoRegime so_regime(const Spec& spec) noexcept;
/// Largest admissible deg f for the regime.
long so_degree_bound(const Spec& spec) noexcept;

/// Regime-specific coefficient windows plus v_i^2 = u_i f(a_i), compared
/// against the direct test G_v G_v^T = 0.
codes::CheckReport so_check(const Spec& spec, const gf::Poly& f, std::vector<gf::Element> v = {});

struct SoHit {
  gf::Poly f;
  std::vector<gf::Element> v;
};
std::optional<SoHit> so_search(const Spec& spec, std::uint64_t budget);

/// n = 2k >= 6 required (BadLength).
codes::CheckReport self_dual_check(const symfun::EvalSet& lambda, std::size_t k, std::size_t h,
                                   std::uint64_t fallback_budget = 0);

}  // namespace mdsforge::family2
