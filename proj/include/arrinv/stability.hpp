#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arrinv/lattice.hpp"
#include "arrinv/matrix.hpp"
#include "arrinv/steiner.hpp"

namespace arrinv {

enum class StabilityStatus { Unstable, NotStable, Stable, Undetermined };
std::string_view to_string(StabilityStatus s);

enum class WitnessKind { FlatRatio, Discriminant, GitSubspace, Splitting };
std::string_view to_string(WitnessKind k);

/// Evidence behind a verdict: `lhs` is compared against `rhs`.
struct Witness {
  WitnessKind kind = WitnessKind::FlatRatio;
  std::optional<std::size_t> flat; // lattice index
  std::vector<std::size_t> flat_indices;
  std::size_t flat_rank = 0;
  Rational lhs;
  Rational rhs;
  bool strict = false; // lhs > rhs (or value < 0 for Discriminant)
  std::string detail;
};

struct RuleRecord {
  std::string id;
  std::string description;
  bool literature = false;
};

struct StabilityVerdict {
  StabilityStatus status = StabilityStatus::Undetermined;
  std::vector<Witness> witnesses;
  std::vector<RuleRecord> rules;
};

/// Scans flats of rank >= 2 for s(x) >= (m-1)(r(x)-1)/n + 1. A strict
/// witness is preferred; otherwise the first equality. Requires m >= n+2.
std::optional<Witness> combinatorial_destabilizer(const IntersectionLattice& lattice);

/// 4 sum(s(x)-1) - (m-1)(m+3) over the points of a line arrangement.
long discriminant_value(const IntersectionLattice& lattice);

/// Unstable witness when discriminant_value < 0. Requires n = 2, m >= 4.
std::optional<Witness> discriminant_test(const IntersectionLattice& lattice);

enum class RatioComparison { Violated, Equal, Holds };
std::string_view to_string(RatioComparison c);

struct GitRatio {
  std::size_t dim_w_prime = 0;
  std::size_t dim_intersection = 0; // dim E ∩ (W' ⊗ V*)
  std::size_t dim_e = 0;
  std::size_t dim_w = 0;
  Rational lhs; // dim_intersection / dim_w_prime
  Rational rhs; // dim_e / dim_w
  RatioComparison comparison = RatioComparison::Holds;
};

/// Compares dim(E ∩ (W' ⊗ V*)) / dim W' with dim E / dim W, where E is the
/// image of U in V* ⊗ W. `w_prime` rows are vectors of k^m with zero
/// coordinate sum; they need not be independent.
GitRatio git_ratio_test(const SteinerTensor& tensor, const RationalMatrix& w_prime);

/// Sum-zero vectors supported on the hyperplanes through a flat:
/// rows e_i - e_j for the labels i of the flat, j its largest label.
RationalMatrix flat_subspace(std::size_t m, const std::vector<std::size_t>& indices);

/// Stability of O(a_1) + ... + O(a_n). Exponents are sorted first.
StabilityVerdict free_splitting_stability(std::vector<long> exponents);

struct ClassifyOptions {
  bool literature_rules = true;
};

/// Composite classification. Requires m >= n+2. When `tensor` is given, every
/// strict flat witness is paired with the GIT ratio of its induced subspace.
StabilityVerdict classify(const Arrangement& a, const IntersectionLattice& lattice,
                          const SteinerTensor* tensor, const ClassifyOptions& options = {});

} // namespace arrinv
