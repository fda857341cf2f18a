#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arrinv/arrangement.hpp"
#include "arrinv/matrix.hpp"

namespace arrinv {

/// The defining tensor t: V -> Hom(U, W) with t(v)(a) = (a_1 f_1(v), ..., a_m f_m(v)).
///
/// U is the space of linear relations among f_1..f_m (dimension m-1-n),
/// W the sum-zero subspace of k^m with basis e_i - e_m (dimension m-1).
struct SteinerTensor {
  std::size_t m = 0;
  std::size_t n = 0;
  RationalMatrix u_basis; // (m-1-n) x m, canonical kernel basis of the form matrix transpose
  RationalMatrix w_basis; // (m-1) x m, rows e_i - e_m
  /// slices[k] is t(e_k) in the bases above: (m-1) x (m-1-n).
  std::vector<RationalMatrix> slices;

  /// Matrix of t(v) = sum_k v_k slices[k].
  RationalMatrix evaluate(std::span<const Rational> v) const;
};

/// Requires m >= n+2 and an essential arrangement.
SteinerTensor steiner_tensor(const Arrangement& a);

/// (n+1)-subsets of labels whose forms are linearly dependent.
struct DependentSets {
  std::size_t subset_size = 0;
  std::vector<std::vector<std::size_t>> sets; // sorted, lexicographic order
};

/// Exhaustive scan of all size-(rank) subsets of the rows of `vectors`,
/// collecting those with vanishing maximal minor.
DependentSets dependent_sets(const RationalMatrix& vectors, std::size_t subset_size);
DependentSets dependent_sets(const Arrangement& a);

/// Columns of the canonical relation basis: the Gale-dual vector
/// configuration, one row per hyperplane. No validity checks beyond
/// the preconditions of the relation space.
RationalMatrix gale_configuration(const Arrangement& a);

/// The associated arrangement in P^(m-n-2). Requires m >= n+3, an essential
/// arrangement, and every dual form nonzero and pairwise non-proportional.
Arrangement gale_dual(const Arrangement& a);

struct GaleBijectionReport {
  bool holds = false;
  /// Complements of D(A) that are not in D(A^as).
  std::vector<std::vector<std::size_t>> missing_in_dual;
  /// Members of D(A^as) whose complements are not in D(A).
  std::vector<std::vector<std::size_t>> extra_in_dual;
};

/// D(A^as) = { complement of I : I in D(A) }.
GaleBijectionReport verify_gale_bijection(const Arrangement& a);

/// Non-degeneracy of t_A, decided through its equivalence with genericity.
bool nondegenerate(const Arrangement& a);

} // namespace arrinv
