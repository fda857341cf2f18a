#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arrinv/arrangement.hpp"
#include "arrinv/lattice.hpp"
#include "arrinv/stability.hpp"

namespace arrinv {

/// The arrangement read as m points of the dual projective space.
struct DualConfiguration {
  std::size_t n = 0;
  std::vector<std::vector<Rational>> points;

  std::size_t size() const { return points.size(); }
  RationalMatrix as_matrix() const;
};

DualConfiguration dual_points(const Arrangement& a);

enum class ConicClass { Nonsingular, TwoDistinctLines, DoubleLine };
std::string_view to_string(ConicClass c);

/// Conics a x^2 + b xy + c xz + d y^2 + e yz + f z^2 through a plane configuration.
struct ConicResult {
  std::size_t kernel_dim = 0; // linear dimension of the space of conics through the points
  RationalMatrix kernel;      // basis, coefficient order (x^2, xy, xz, y^2, yz, z^2)
  /// The conic the classification refers to: the unique one when
  /// kernel_dim = 1, otherwise the first member of the linear system found
  /// with all points on its nonsingular locus (or the first basis conic).
  std::optional<std::vector<Integer>> conic;
  std::optional<ConicClass> classification;
  std::optional<std::vector<Rational>> vertex; // singular point for TwoDistinctLines
  bool all_points_nonsingular = false;
};

/// Requires a configuration in the dual plane (n = 2).
ConicResult conic_test(const DualConfiguration& p);

/// Classification of a conic from its six coefficients.
ConicClass classify_conic(std::span<const Rational> coefficients);

enum class RncVerdict { OnSmoothRNC, NotOnSmoothRNC, DegenerateConfiguration };
std::string_view to_string(RncVerdict v);

struct RncResult {
  RncVerdict verdict = RncVerdict::NotOnSmoothRNC;
  std::vector<std::size_t> frame; // labels normalized to e_0..e_n, (1,...,1)
  /// Parameters of the frame vertices: the curve is t -> (1/(t - lambda_i))_i
  /// in frame coordinates, with (1,...,1) at t = infinity.
  std::vector<Rational> lambda;
  std::string detail;
};

/// Smooth rational normal curve test for n >= 3.
RncResult rnc_test(const DualConfiguration& p);

enum class TorelliStatus { TorelliProved, NotTorelliProved, TorelliConjectured, NotTorelliConjectured, Unknown };
std::string_view to_string(TorelliStatus s);

struct TorelliVerdict {
  TorelliStatus status = TorelliStatus::Unknown;
  std::string rule; // "R1".."R5" or "unstable"
  std::vector<std::size_t> witness_subset;
  std::optional<ConicResult> conic;
  std::optional<RncResult> rnc;
  std::vector<std::string> evidence;
};

struct TorelliOptions {
  std::size_t max_subsets = 200000;
};

TorelliVerdict torelli_verdict(const Arrangement& a, const IntersectionLattice& lattice,
                               const StabilityVerdict& stability, const TorelliOptions& options = {});

} // namespace arrinv
