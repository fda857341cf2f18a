#include "arrinv/steiner.hpp"

#include <algorithm>
#include <set>

#include "arrinv/lattice.hpp"

namespace arrinv {

RationalMatrix SteinerTensor::evaluate(std::span<const Rational> v) const {
  if (v.size() != n + 1) {
    throw PreconditionError("SteinerTensor::evaluate: point needs n+1 coordinates");
  }
  RationalMatrix out(m - 1, m - 1 - n);
  for (std::size_t k = 0; k <= n; ++k) {
    if (v[k] == 0) {
      continue;
    }
    for (std::size_t r = 0; r < out.rows(); ++r) {
      for (std::size_t c = 0; c < out.cols(); ++c) {
        out(r, c) += v[k] * slices[k](r, c);
      }
    }
  }
  return out;
}

namespace {

void require_steiner_range(const Arrangement& a) {
  if (a.m() < a.n() + 2) {
    throw PreconditionError("the Steiner tensor needs m >= n+2 (m = " + std::to_string(a.m()) +
                            ", n = " + std::to_string(a.n()) + ")");
  }
  if (!is_essential(a)) {
    throw PreconditionError("the arrangement is not essential: its forms do not span the dual space");
  }
}

RationalMatrix relation_basis(const Arrangement& a) {
  return kernel_basis(a.form_matrix().transpose());
}

} // namespace

SteinerTensor steiner_tensor(const Arrangement& a) {
  require_steiner_range(a);
  const std::size_t m = a.m();
  const std::size_t n = a.n();

  SteinerTensor t;
  t.m = m;
  t.n = n;
  t.u_basis = relation_basis(a);
  t.w_basis = RationalMatrix(m - 1, m);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    t.w_basis(i, i) = 1;
    t.w_basis(i, m - 1) = -1;
  }

  // t(e_k)(u_j) has i-th entry u_j[i] * f_i[k]; since it lies in W, its
  // coordinates in the basis e_i - e_m are its first m-1 entries.
  const std::size_t dim_u = t.u_basis.rows();
  for (std::size_t k = 0; k <= n; ++k) {
    RationalMatrix slice(m - 1, dim_u);
    for (std::size_t i = 0; i + 1 < m; ++i) {
      const Rational coeff(a.form(i)[k]);
      for (std::size_t j = 0; j < dim_u; ++j) {
        slice(i, j) = t.u_basis(j, i) * coeff;
      }
    }
    t.slices.push_back(std::move(slice));
  }
  return t;
}

DependentSets dependent_sets(const RationalMatrix& vectors, std::size_t subset_size) {
  DependentSets out{subset_size, {}};
  const std::size_t m = vectors.rows();
  if (subset_size > m || subset_size == 0) {
    return out;
  }
  std::vector<bool> mask(m, false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(subset_size), true);
  // prev_permutation over a descending-first mask walks subsets in
  // lexicographic order of their index lists.
  do {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask[i]) {
        subset.push_back(i);
      }
    }
    if (rank(vectors.select_rows(subset)) < subset_size) {
      out.sets.push_back(std::move(subset));
    }
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

DependentSets dependent_sets(const Arrangement& a) {
  return dependent_sets(a.form_matrix(), a.n() + 1);
}

RationalMatrix gale_configuration(const Arrangement& a) {
  if (a.m() < a.n() + 3) {
    throw PreconditionError("the associated arrangement needs m >= n+3 (m = " + std::to_string(a.m()) +
                            ", n = " + std::to_string(a.n()) + "); otherwise its ambient space is P^" +
                            std::to_string(static_cast<long>(a.m()) - static_cast<long>(a.n()) - 2));
  }
  require_steiner_range(a);
  const RationalMatrix config = relation_basis(a).transpose();
  for (std::size_t i = 0; i < config.rows(); ++i) {
    const auto row = config.row(i);
    if (std::all_of(row.begin(), row.end(), [](const Rational& q) { return q == 0; })) {
      throw PreconditionError("hyperplane " + std::to_string(i + 1) +
                              " takes part in no linear relation; its dual form is zero");
    }
  }
  return config;
}

Arrangement gale_dual(const Arrangement& a) {
  const RationalMatrix config = gale_configuration(a);
  const std::size_t dual_n = config.cols() - 1;
  std::vector<LinearForm> forms;
  for (std::size_t i = 0; i < config.rows(); ++i) {
    forms.emplace_back(config.row(i));
    for (std::size_t j = 0; j < i; ++j) {
      if (forms[j] == forms[i]) {
        throw PreconditionError("dual forms " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                                " are proportional; the associated configuration has coincident points");
      }
    }
  }
  return {dual_n, std::move(forms)};
}

GaleBijectionReport verify_gale_bijection(const Arrangement& a) {
  const RationalMatrix config = gale_configuration(a);
  const std::size_t m = a.m();
  const DependentSets primal = dependent_sets(a);
  const DependentSets dual = dependent_sets(config, config.cols());

  auto complement = [m](const std::vector<std::size_t>& s) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < m; ++i) {
      if (!std::binary_search(s.begin(), s.end(), i)) {
        out.push_back(i);
      }
    }
    return out;
  };

  std::set<std::vector<std::size_t>> expected;
  for (const auto& s : primal.sets) {
    expected.insert(complement(s));
  }
  const std::set<std::vector<std::size_t>> actual(dual.sets.begin(), dual.sets.end());

  GaleBijectionReport report;
  std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(),
                      std::back_inserter(report.missing_in_dual));
  std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(),
                      std::back_inserter(report.extra_in_dual));
  report.holds = report.missing_in_dual.empty() && report.extra_in_dual.empty();
  return report;
}

bool nondegenerate(const Arrangement& a) {
  if (a.m() < a.n() + 2) {
    throw PreconditionError("non-degeneracy of the defining tensor needs m >= n+2");
  }
  return classify_crossing(build_lattice(a)).type == CrossingType::Generic;
}

} // namespace arrinv
