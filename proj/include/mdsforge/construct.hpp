#pragma once

// Explicit evaluation-set constructions and the catalog of worked examples
// that `reproduce` rebuilds and re-verifies claim by claim.

#include <string>
#include <string_view>
#include <vector>

#include "mdsforge/codes.hpp"

namespace mdsforge::construct {

struct LiftSpec {
  std::uint64_t p = 2;
  unsigned m = 1;
  int family = 1;
  std::size_t k = 0;
  std::size_t n = 0;

  /// floor((m-1)/4) for family 1, floor((m-1)/2) for family 2.
  unsigned t() const;
  /// Throws SpecViolation on any failed hypothesis, including divisibility.
  void validate() const;
};

/// g(x) evaluated at x for the first n monic g of degree t, ordered by the
/// integer value of their lower coefficients written base p.
symfun::EvalSet lift_lambda(const LiftSpec& spec);

/// {g^1, ..., g^n}; throws NotDistinct when g has order below n.
symfun::EvalSet geom_lambda(const gf::Field& field, const gf::Element& g, std::size_t n);

enum class ClaimStatus { Pass, Fail, Skipped };
std::string_view to_string(ClaimStatus s) noexcept;

struct Claim {
  std::string name;
  ClaimStatus status = ClaimStatus::Fail;
  std::string detail;
  double elapsed_ms = 0;
};

struct Reproduction {
  std::string id;
  std::string title;
  std::string field;
  std::vector<Claim> claims;

  bool ok() const noexcept;
  std::size_t count(ClaimStatus s) const noexcept;
};

const std::vector<std::string>& catalog_ids();
/// Throws UnknownId.
std::string catalog_title(std::string_view id);
/// Throws UnknownId.
Reproduction reproduce(std::string_view id, const codes::ScanOptions& opts = {});

}  // namespace mdsforge::construct
