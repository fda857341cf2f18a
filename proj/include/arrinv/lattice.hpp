#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "arrinv/arrangement.hpp"

namespace arrinv {

/// A nonempty intersection of hyperplanes, labeled by the maximal set of
/// hyperplanes containing it.
struct Flat {
  std::vector<std::size_t> indices; // sorted, 0-based
  std::size_t rank = 0;             // codimension
  RationalMatrix equations;         // RREF basis of span{f_i : i in indices}

  std::size_t s() const { return indices.size(); }
};

/// Every nonempty flat exactly once, ordered by (rank, sorted indices), with
/// the Möbius function of the poset ordered by reverse inclusion.
struct IntersectionLattice {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Flat> flats;
  std::vector<long> mobius; // parallel to flats

  /// Flat `big` (as a point set) strictly contains flat `small`, i.e.
  /// indices(big) is a proper subset of indices(small).
  bool strictly_contains(std::size_t big, std::size_t small) const;

  /// Flats of the given rank, in lattice order.
  std::vector<std::size_t> flats_of_rank(std::size_t r) const;
};

IntersectionLattice build_lattice(const Arrangement& a);

/// mu(ambient) = 1, mu(x) = -sum of mu(y) over flats y strictly containing x.
std::vector<long> mobius(const IntersectionLattice& lattice);

enum class CrossingType { Generic, NormalCrossingCodim2Only, NotNormalCrossingCodim2 };

std::string_view to_string(CrossingType t);

struct CrossingClassification {
  CrossingType type = CrossingType::Generic;
  /// Lattice index of the first flat (in lattice order) with s(x) > rank(x).
  std::optional<std::size_t> witness;
};

CrossingClassification classify_crossing(const IntersectionLattice& lattice);

/// sum over rank-2 flats of (s - 1); the rank-2 Möbius total.
long sum_s_minus_one_rank2(const IntersectionLattice& lattice);

} // namespace arrinv
