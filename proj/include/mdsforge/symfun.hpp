#pragma once

// Symmetric functions evaluated at field points: elementary (sigma_t) and
// complete homogeneous (S_t) polynomials, Schur polynomials, the dual
// weights u_i of an evaluation set, and generalized Vandermonde determinants.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mdsforge/gf.hpp"
#include "mdsforge/matgf.hpp"

namespace mdsforge::symfun {

/// Ordered distinct evaluation points with their cached dual weights
/// u_i = prod_{j != i} (a_i - a_j)^{-1}.
class EvalSet {
 public:
  /// Throws DuplicatePoints on repeated points.
  EvalSet(const gf::Field& field, std::vector<gf::Element> points);
  static EvalSet from_words(const gf::Field& field, std::vector<gf::Word> points);

  const gf::Field& field() const noexcept { return *field_; }
  std::size_t size() const noexcept { return words_.size(); }
  const std::vector<gf::Element>& points() const noexcept { return points_; }
  const std::vector<gf::Element>& weights() const noexcept { return weights_; }
  std::span<const gf::Word> words() const noexcept { return words_; }
  std::span<const gf::Word> weight_words() const noexcept { return weight_words_; }
  const gf::Element& operator[](std::size_t i) const { return points_[i]; }

 private:
  const gf::Field* field_;
  std::vector<gf::Element> points_;
  std::vector<gf::Word> words_;
  std::vector<gf::Element> weights_;
  std::vector<gf::Word> weight_words_;
};

/// Integer partition stored without trailing zeros.
class Partition {
 public:
  Partition() = default;
  /// Throws SpecViolation unless parts are weakly decreasing.
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  unsigned weight() const noexcept;
  unsigned part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<unsigned> parts_;
};

gf::Element sigma(std::size_t t, std::span<const gf::Element> xs);
/// S_t with S_0 = 1 and S_t = 0 for t < 0.
gf::Element complete_S(std::int64_t t, std::span<const gf::Element> xs);
/// sum_{t=0}^{N} (-1)^t sigma_t S_{N-t}; identically zero for N >= 1.
gf::Element newton_residual(std::size_t N, std::span<const gf::Element> xs);

std::vector<gf::Element> dual_weights(const EvalSet& lambda);
std::vector<gf::Element> dual_weights(const gf::Field& field, std::span<const gf::Element> points);

/// sum_i u_i a_i^h by direct evaluation.
gf::Element weighted_power_sum(const EvalSet& lambda, std::size_t h);
/// Closed form of weighted_power_sum: 0 for h <= n-2, else S_{h-n+1}.
gf::Element weighted_power_sum_closed(const EvalSet& lambda, std::size_t h);

/// Vandermonde determinant prod_{i<j} (a_j - a_i).
gf::Element vandermonde_det(std::span<const gf::Element> xs);
/// Rows a^0..a^{n-2} then a^h.
MatGF gvdm_matrix(const EvalSet& lambda, std::size_t h);
/// det(G_h) = S_{h-n+1} * det(M); requires h >= n - 1.
gf::Element gvdm_det(const EvalSet& lambda, std::size_t h);
gf::Element gvdm_det_direct(const EvalSet& lambda, std::size_t h);

/// Jacobi-Trudi in complete symmetric functions: det(S_{l_i - i + j}).
gf::Element schur_poly(const Partition& lambda, std::span<const gf::Element> xs);
/// Dual Jacobi-Trudi: det(sigma_{l'_i - i + j}).
gf::Element schur_poly_elementary(const Partition& lambda, std::span<const gf::Element> xs);
/// det(A_{l+delta}) / det(A_delta); points must be distinct.
gf::Element schur_poly_bialternant(const Partition& lambda, std::span<const gf::Element> xs);

/// Allocation-free kernels over raw words, used by the subset scans.
namespace kernel {
/// out[t] = sigma_t(xs) for t = 0..out.size()-1.
void elementary(const gf::Field& f, std::span<const gf::Word> xs, std::span<gf::Word> out) noexcept;
/// out[t] = S_t(xs) for t = 0..out.size()-1.
void complete(const gf::Field& f, std::span<const gf::Word> xs, std::span<gf::Word> out) noexcept;
}  // namespace kernel

}  // namespace mdsforge::symfun
