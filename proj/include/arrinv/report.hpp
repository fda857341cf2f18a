#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arrinv/io.hpp"

namespace arrinv {

struct AnalysisOptions {
  std::vector<std::uint64_t> primes{7, 11, 101};
  std::size_t max_subsets = TorelliOptions{}.max_subsets;
  bool literature_rules = true;
};

/// Full pipeline: echo, lattice summary, Poincaré and Chern data, local
/// data for line arrangements, stability, Torelli, Gale summary, oracles.
/// Parts whose preconditions fail carry an "unavailable" reason instead.
Json analyze_report(const Arrangement& a, const AnalysisOptions& options = {});

/// Invariants section alone (Poincaré, Chern, and the n = 2 local data).
Json invariants_report(const Arrangement& a, const IntersectionLattice& lattice);

/// Classification with the GIT cross-check attached.
StabilityVerdict stability_of(const Arrangement& a, const IntersectionLattice& lattice, const AnalysisOptions& options);

enum class CheckStatus { Pass, Fail, Skip };
std::string_view to_string(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Skip;
  std::string detail;
};

struct VerifyReport {
  std::vector<Check> checks;
  bool all_passed() const;
};

/// Runs the oracle suite against `lattice`, which is normally
/// build_lattice(a) but may be any lattice claimed for `a`.
VerifyReport verify(const Arrangement& a, const IntersectionLattice& lattice, const AnalysisOptions& options = {});
Json verify_json(const VerifyReport& r);

/// First prime >= p at which `lattice` survives reduction, trying at most
/// `attempts` primes; 0 when none does.
std::uint64_t good_prime_from(const Arrangement& a, const IntersectionLattice& lattice, std::uint64_t p,
                              int attempts = 32);

/// Stability of A and of its associated arrangement side by side. Requires
/// m >= n+3.
Json conjecture_report(const Arrangement& a, const AnalysisOptions& options, bool& counterexample);

} // namespace arrinv
