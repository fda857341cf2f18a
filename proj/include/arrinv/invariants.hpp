#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arrinv/arrangement.hpp"
#include "arrinv/lattice.hpp"
#include "arrinv/truncated_polynomial.hpp"

namespace arrinv {

struct PoincareData {
  TruncatedPolynomial projective; // P(t), cap n
  TruncatedPolynomial central;    // Pi(t) = P(t) - P(-1)(-t)^(n+1), cap n+1
};

PoincareData poincare(const IntersectionLattice& lattice);

enum class LocallyFree { Yes, Unknown, No };
std::string_view to_string(LocallyFree f);

/// Chern polynomials of the Steiner resolution 0 -> O(-1)^(m-1-n) -> O^(m-1).
struct SteinerChern {
  TruncatedPolynomial ct;         // (1 + t + ... + t^n)^(m-1-n)
  TruncatedPolynomial twisted_ct; // (1 + t)^(m-1)
  /// twist_by_one(ct, n) == twisted_ct, recomputed independently.
  bool twist_identity_holds = false;
};

struct ChernData {
  std::optional<SteinerChern> steiner;
  std::string steiner_unavailable; // reason when `steiner` is empty

  /// P(t)/(1+t): the Chern polynomial of the log sheaf twisted by O(1),
  /// meaningful as such only when `locally_free` is Yes.
  TruncatedPolynomial logfree_twisted_ct;
  /// logfree_twisted_ct untwisted by O(-1).
  TruncatedPolynomial logfree_ct;

  std::optional<long> n2_c1; // m - 3
  std::optional<long> n2_c2; // sum(s-1) - 2m + 3

  LocallyFree locally_free = LocallyFree::Unknown;
};

ChernData chern(const Arrangement& a, const IntersectionLattice& lattice);

/// Numerical data of one singular point of a line arrangement.
struct LocalPoint {
  std::size_t flat = 0; // lattice index
  long s = 0;
  long milnor = 0;      // (s-1)^2
  long delta_local = 0; // C(s,2)
  long branches = 0;    // s
  long torsion_length = 0; // C(s-1,2)
};

/// Per-point records for every rank-2 flat. n must be 2.
std::vector<LocalPoint> local_data(const IntersectionLattice& lattice);

struct DeltaData {
  long total = 0;
  std::vector<std::pair<std::size_t, long>> per_point; // (lattice index, delta_x)
};

/// delta(A) = sum of C(s(x)-1, 2). n must be 2.
DeltaData delta_invariant(const IntersectionLattice& lattice);

struct H0Values {
  long h0_tilde = 0; // m - 1
  long h0_log = 0;   // m - 1 - sum(s-1) + C(m,2)
};

H0Values h0_values(const IntersectionLattice& lattice);

/// Brute-force count of points of F_p^(n+1) on none of the hyperplanes.
/// Throws PreconditionError when the reduction mod p does not preserve the
/// lattice (see `has_good_reduction`).
std::uint64_t count_complement_points(const Arrangement& a, std::uint64_t p);

/// The lattice of `a` over F_p coincides with `lattice`: every flat keeps its
/// rank and index set.
bool has_good_reduction(const Arrangement& a, const IntersectionLattice& lattice, std::uint64_t p);

/// sum over flats (including the origin of the cone) of mu(x) p^(n+1-rank(x)),
/// evaluated from the central Poincaré polynomial.
Integer characteristic_value(const PoincareData& poincare, std::size_t n, std::uint64_t p);

} // namespace arrinv
