#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "arrinv/arrangement.hpp"
#include "arrinv/lattice.hpp"

namespace testsupport {

using arrinv::Arrangement;
using arrinv::Integer;
using arrinv::LinearForm;
using arrinv::Rational;

/// Arrangement with rational coefficients p/q, |p| <= bound, 1 <= q <= 3.
/// Duplicate and zero forms are redrawn; when `essential` the forms span.
inline Arrangement random_arrangement(std::mt19937& rng, std::size_t n, std::size_t m, long bound = 3,
                                      bool essential = true) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, 3);
  while (true) {
    std::vector<LinearForm> forms;
    while (forms.size() < m) {
      std::vector<Rational> row;
      bool zero = true;
      for (std::size_t k = 0; k <= n; ++k) {
        Rational q{Integer(num(rng)), Integer(den(rng))};
        q.canonicalize();
        zero = zero && q == 0;
        row.push_back(q);
      }
      if (zero) {
        continue;
      }
      LinearForm f(row);
      if (std::find(forms.begin(), forms.end(), f) == forms.end()) {
        forms.push_back(std::move(f));
      }
    }
    Arrangement a(n, std::move(forms));
    if (!essential || arrinv::is_essential(a)) {
      return a;
    }
  }
}

struct OracleFlat {
  std::size_t rank = 0;
  long mobius = 0;
};

/// Lattice by exhaustive subset closure, with the Möbius function from
/// Whitney's formula mu(x) = sum over subsets S with closure x of (-1)^|S|.
/// Keys are the closed index sets.
inline std::map<std::vector<std::size_t>, OracleFlat> brute_force_lattice(const Arrangement& a) {
  const std::size_t m = a.m();
  std::map<std::vector<std::size_t>, OracleFlat> out;
  for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (1UL << i)) {
        subset.push_back(i);
      }
    }
    const std::size_t r = arrinv::rank(a.form_matrix(subset));
    if (r > a.n()) {
      continue; // empty in projective space
    }
    std::vector<std::size_t> closure;
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<std::size_t> with = subset;
      with.push_back(j);
      if (arrinv::rank(a.form_matrix(with)) == r) {
        closure.push_back(j);
      }
    }
    OracleFlat& f = out[closure];
    f.rank = r;
    f.mobius += (subset.size() % 2 == 0) ? 1 : -1;
  }
  return out;
}

} // namespace testsupport
