#pragma once

// Linear codes over GF(q) given by a full-rank generator matrix, together with
// the family-independent decision procedures: all-minors MDS test, exact
// minimum distance, Schur squares, duals and self-orthogonality.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mdsforge/gf.hpp"
#include "mdsforge/matgf.hpp"
#include "mdsforge/symfun.hpp"

namespace mdsforge::codes {

/// Evidence attached to a negative (or noteworthy) verdict.
struct Witness {
  std::vector<std::size_t> indices;  // subset, matrix position or condition number
  std::vector<gf::Element> values;   // points of the subset, a codeword, ...
  std::string detail;
};

using Quantity = std::variant<std::int64_t, gf::Element>;

struct CheckReport {
  std::string check;
  bool verdict = false;
  std::optional<Witness> witness;
  std::optional<Quantity> quantity;
  /// Certificate for positive constructive answers, e.g. a column multiplier v.
  std::vector<gf::Element> certificate;
  /// How the verdict was reached ("criterion", "minors", "theorem", "schur", ...).
  std::string basis;
  std::vector<std::string> notes;
};

struct ScanOptions {
  std::uint64_t subset_budget = 100'000'000;
  std::uint64_t codeword_budget = 100'000'000;
  std::uint64_t search_budget = 1'000'000;
  unsigned threads = 1;
  /// Re-run the generic oracle next to a family criterion and require agreement.
  bool cross_check = false;
};

/// Where a generator came from; used only for reporting.
struct Provenance {
  std::vector<long> exponents;
  std::vector<gf::Element> lambda;
  std::vector<gf::Element> v;
  std::size_t extra_columns = 0;
};

class LinearCode {
 public:
  /// Rejects generators whose rank is below their row count (BadDimension).
  explicit LinearCode(MatGF generator, Provenance provenance = {});

  const gf::Field& field() const noexcept { return g_.field(); }
  std::size_t n() const noexcept { return g_.cols(); }
  std::size_t k() const noexcept { return g_.rows(); }
  const MatGF& generator() const noexcept { return g_; }
  const Provenance& provenance() const noexcept { return prov_; }

  /// Basis of the dual code, computed once.
  const MatGF& parity_check() const;
  std::size_t schur_square_dim() const;
  /// Minimum distance if it has already been computed.
  std::optional<std::size_t> known_distance() const;
  void remember_distance(std::size_t d) const;

 private:
  struct Cache;
  MatGF g_;
  Provenance prov_;
  std::shared_ptr<Cache> cache_;
};

LinearCode grs_generator(const symfun::EvalSet& lambda, std::size_t k, const std::vector<gf::Element>& v);
LinearCode rs_generator(const symfun::EvalSet& lambda, std::size_t k);

LinearCode dual(const LinearCode& c);
CheckReport is_self_orthogonal(const LinearCode& c);
CheckReport is_self_dual(const LinearCode& c);

/// Exact d by projective message enumeration; throws BudgetExceeded with the
/// cheap bounds when (q^k - 1)/(q - 1) exceeds the codeword budget.
CheckReport min_distance(const LinearCode& c, const ScanOptions& opts = {});
/// "MDS", "AMDS", "NMDS" or "" for the given parameters. The NMDS label
/// needs the dual distance.
std::string distance_label(std::size_t n, std::size_t k, std::size_t d, std::optional<std::size_t> dual_d = {});

/// Every k x k column minor is nonzero.
CheckReport is_mds_minors(const LinearCode& c, const ScanOptions& opts = {});
/// Minors test restricted to `samples` random k-subsets drawn with a fixed seed.
CheckReport sample_minors(const LinearCode& c, std::size_t samples, std::uint64_t seed);

CheckReport schur_square_dim(const LinearCode& c);
/// Verdict true means GRS. Throws Inconclusive when 2k > n - 1 and NotMDS
/// when the code is not MDS. `known_mds` skips the minors scan.
CheckReport is_grs_by_schur(const LinearCode& c, const ScanOptions& opts = {},
                            std::optional<bool> known_mds = std::nullopt);

LinearCode scale_columns(const LinearCode& c, const std::vector<gf::Element>& v);
/// Appends columns (each of length k) to the generator.
LinearCode extend_columns(const LinearCode& c, const std::vector<std::vector<gf::Element>>& cols);
/// The k-length standard basis column e_i (1-based).
std::vector<gf::Element> unit_column(const gf::Field& f, std::size_t k, std::size_t i);

/// Searches coefficient vectors c with constraints * c^T = 0 for one whose
/// weights w = c * evaluation are all nonzero squares. The null space is
/// enumerated in lexicographic order of its free coordinates, at most
/// `budget` candidates.
struct WeightingHit {
  std::vector<gf::Element> coeffs;
  std::vector<gf::Element> weights;
};
std::optional<WeightingHit> search_square_weighting(const MatGF& constraints,
                                                    const MatGF& evaluation,
                                                    std::uint64_t budget);

/// Column multipliers v making G diag(v) self-orthogonal, found by searching
/// the null space of the pairwise-product constraints. Budgeted.
std::optional<std::vector<gf::Element>> find_self_orthogonal_scaling(const LinearCode& c, std::uint64_t budget);

/// The scalar l with every l*u_i a nonzero square: 1 when all u_i are
/// squares, the smallest nonsquare when none is; nullopt when the classes mix.
std::optional<gf::Element> square_class_normalizer(const std::vector<gf::Element>& u);

/// Canonical roots of the given squares; throws NotASquare otherwise.
std::vector<gf::Element> sqrt_all(const std::vector<gf::Element>& xs);

/// Line-oriented matrix text: "field=<spec> k=<k> n=<n>" then k rows.
std::string matrix_to_text(const MatGF& g, gf::Notation notation);
MatGF matrix_from_text(std::string_view text);
std::string matrix_to_json(const MatGF& g, gf::Notation notation);
MatGF matrix_from_json(std::string_view text);

}  // namespace mdsforge::codes
