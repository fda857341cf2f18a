#include "arrinv/stability.hpp"

#include <algorithm>
#include <numeric>

#include "arrinv/invariants.hpp"

namespace arrinv {

std::string_view to_string(StabilityStatus s) {
  switch (s) {
  case StabilityStatus::Unstable:
    return "Unstable";
  case StabilityStatus::NotStable:
    return "NotStable";
  case StabilityStatus::Stable:
    return "Stable";
  case StabilityStatus::Undetermined:
    return "Undetermined";
  }
  return "?";
}

std::string_view to_string(WitnessKind k) {
  switch (k) {
  case WitnessKind::FlatRatio:
    return "FlatRatio";
  case WitnessKind::Discriminant:
    return "Discriminant";
  case WitnessKind::GitSubspace:
    return "GitSubspace";
  case WitnessKind::Splitting:
    return "Splitting";
  }
  return "?";
}

std::string_view to_string(RatioComparison c) {
  switch (c) {
  case RatioComparison::Violated:
    return "Violated";
  case RatioComparison::Equal:
    return "Equal";
  case RatioComparison::Holds:
    return "Holds";
  }
  return "?";
}

namespace {

Witness flat_witness(const IntersectionLattice& lattice, std::size_t i, Rational threshold) {
  const Flat& x = lattice.flats[i];
  Witness w;
  w.kind = WitnessKind::FlatRatio;
  w.flat = i;
  w.flat_indices = x.indices;
  w.flat_rank = x.rank;
  w.lhs = static_cast<long>(x.s());
  w.rhs = std::move(threshold);
  w.strict = w.lhs > w.rhs;
  w.detail = "s(x) = " + to_string(w.lhs) + (w.strict ? " > " : " = ") +
             "(m-1)(r-1)/n + 1 = " + to_string(w.rhs) + " at a flat of rank " + std::to_string(x.rank);
  return w;
}

} // namespace

std::optional<Witness> combinatorial_destabilizer(const IntersectionLattice& lattice) {
  const long m = static_cast<long>(lattice.m);
  const long n = static_cast<long>(lattice.n);
  if (m < n + 2) {
    throw PreconditionError("combinatorial_destabilizer needs m >= n+2");
  }
  std::optional<std::size_t> equality;
  for (std::size_t i = 0; i < lattice.flats.size(); ++i) {
    const Flat& x = lattice.flats[i];
    if (x.rank < 2) {
      continue;
    }
    Rational threshold(Integer((m - 1) * (static_cast<long>(x.rank) - 1)), Integer(n));
    threshold.canonicalize();
    threshold += 1;
    const Rational s = static_cast<long>(x.s());
    if (s > threshold) {
      return flat_witness(lattice, i, threshold);
    }
    if (s == threshold && !equality) {
      equality = i;
    }
  }
  if (equality) {
    const long r = static_cast<long>(lattice.flats[*equality].rank);
    Rational threshold(Integer((m - 1) * (r - 1)), Integer(n));
    threshold.canonicalize();
    return flat_witness(lattice, *equality, threshold + 1);
  }
  return std::nullopt;
}

long discriminant_value(const IntersectionLattice& lattice) {
  const long m = static_cast<long>(lattice.m);
  return 4 * sum_s_minus_one_rank2(lattice) - (m - 1) * (m + 3);
}

std::optional<Witness> discriminant_test(const IntersectionLattice& lattice) {
  if (lattice.n != 2) {
    throw PreconditionError("discriminant_test is only defined for line arrangements (n = 2)");
  }
  if (lattice.m < 4) {
    throw PreconditionError("discriminant_test needs m >= 4");
  }
  const long value = discriminant_value(lattice);
  if (value >= 0) {
    return std::nullopt;
  }
  const long m = static_cast<long>(lattice.m);
  Witness w;
  w.kind = WitnessKind::Discriminant;
  w.lhs = 4 * sum_s_minus_one_rank2(lattice);
  w.rhs = (m - 1) * (m + 3);
  w.strict = true;
  w.detail = "4 sum(s-1) - (m-1)(m+3) = " + to_string(w.lhs) + " - " + to_string(w.rhs) + " = " +
             std::to_string(value) + " < 0";
  return w;
}

RationalMatrix flat_subspace(std::size_t m, const std::vector<std::size_t>& indices) {
  RationalMatrix out(0, m);
  if (indices.size() < 2) {
    return out;
  }
  const std::size_t last = indices.back();
  std::vector<Rational> row(m);
  for (std::size_t k = 0; k + 1 < indices.size(); ++k) {
    std::fill(row.begin(), row.end(), Rational(0));
    row[indices[k]] = 1;
    row[last] = -1;
    out.append_row(row);
  }
  return out;
}

GitRatio git_ratio_test(const SteinerTensor& tensor, const RationalMatrix& w_prime) {
  const std::size_t m = tensor.m;
  const std::size_t n = tensor.n;
  if (w_prime.cols() != m) {
    throw PreconditionError("W' rows must have m = " + std::to_string(m) + " coordinates");
  }
  for (std::size_t r = 0; r < w_prime.rows(); ++r) {
    Rational sum = 0;
    for (const Rational& q : w_prime.row(r)) {
      sum += q;
    }
    if (sum != 0) {
      throw PreconditionError("W' row " + std::to_string(r + 1) + " does not lie in the sum-zero space W");
    }
  }
  const RationalMatrix w_basis = row_space_basis(w_prime);
  const std::size_t dim_w_prime = w_basis.rows();
  if (dim_w_prime == 0 || dim_w_prime >= m - 1) {
    throw PreconditionError("need 0 < dim W' < m-1, got dim W' = " + std::to_string(dim_w_prime));
  }

  // Coordinates on V* ⊗ k^m: index k*m + i pairs the k-th dual coordinate
  // with the i-th standard vector.
  const std::size_t ambient = (n + 1) * m;
  RationalMatrix e(0, ambient);
  std::vector<Rational> flat(ambient);
  for (std::size_t j = 0; j < tensor.u_basis.rows(); ++j) {
    std::fill(flat.begin(), flat.end(), Rational(0));
    for (std::size_t k = 0; k <= n; ++k) {
      // t(e_k)(u_j)_i for i < m-1 sits in slice k; the last entry restores the zero sum.
      Rational sum = 0;
      for (std::size_t i = 0; i + 1 < m; ++i) {
        flat[k * m + i] = tensor.slices[k](i, j);
        sum += tensor.slices[k](i, j);
      }
      flat[k * m + m - 1] = -sum;
    }
    e.append_row(flat);
  }
  RationalMatrix wv(0, ambient);
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t r = 0; r < dim_w_prime; ++r) {
      std::fill(flat.begin(), flat.end(), Rational(0));
      for (std::size_t i = 0; i < m; ++i) {
        flat[k * m + i] = w_basis(r, i);
      }
      wv.append_row(flat);
    }
  }

  GitRatio out;
  out.dim_w_prime = dim_w_prime;
  out.dim_e = rank(e);
  out.dim_w = m - 1;
  out.dim_intersection = intersection_dimension(e, wv);
  out.lhs = Rational(Integer(static_cast<unsigned long>(out.dim_intersection)),
                     Integer(static_cast<unsigned long>(dim_w_prime)));
  out.lhs.canonicalize();
  out.rhs = Rational(Integer(static_cast<unsigned long>(out.dim_e)), Integer(static_cast<unsigned long>(out.dim_w)));
  out.rhs.canonicalize();
  if (out.lhs > out.rhs) {
    out.comparison = RatioComparison::Violated;
  } else if (out.lhs == out.rhs) {
    out.comparison = RatioComparison::Equal;
  } else {
    out.comparison = RatioComparison::Holds;
  }
  return out;
}

StabilityVerdict free_splitting_stability(std::vector<long> exponents) {
  if (exponents.empty()) {
    throw PreconditionError("free_splitting_stability needs at least one exponent");
  }
  std::sort(exponents.begin(), exponents.end());
  const long n = static_cast<long>(exponents.size());
  const long total = std::accumulate(exponents.begin(), exponents.end(), 0L);

  Witness w;
  w.kind = WitnessKind::Splitting;
  w.lhs = exponents.back();
  w.rhs = Rational(total, n);
  w.rhs.canonicalize();
  w.strict = w.lhs > w.rhs;
  w.detail = "largest summand slope " + to_string(w.lhs) + " vs total slope " + to_string(w.rhs);

  StabilityVerdict v;
  if (w.strict) {
    v.status = StabilityStatus::Unstable;
    v.rules.push_back({"free-splitting-unequal", "O(a_n) destabilizes a split bundle with unequal exponents", false});
  } else if (n >= 2) {
    v.status = StabilityStatus::NotStable;
    v.rules.push_back({"free-splitting-equal", "a split bundle with equal exponents is semi-stable, not stable", false});
  } else {
    v.status = StabilityStatus::Stable;
    v.rules.push_back({"rank-one", "a line bundle is stable", false});
  }
  v.witnesses.push_back(std::move(w));
  return v;
}

StabilityVerdict classify(const Arrangement& a, const IntersectionLattice& lattice,
                          const SteinerTensor* tensor, const ClassifyOptions& options) {
  const std::size_t m = a.m();
  const std::size_t n = a.n();
  if (m < n + 2) {
    throw PreconditionError("stability classification needs m >= n+2 (m = " + std::to_string(m) +
                            ", n = " + std::to_string(n) + ")");
  }
  StabilityVerdict v;
  bool unstable = false;
  bool not_stable = false;

  if (auto w = combinatorial_destabilizer(lattice)) {
    if (w->strict) {
      unstable = true;
      v.rules.push_back({"flat-ratio-strict", "a flat with s(x) > (m-1)(r(x)-1)/n + 1 makes the Steiner log-sheaf unstable", false});
      if (tensor != nullptr) {
        const GitRatio g = git_ratio_test(*tensor, flat_subspace(m, w->flat_indices));
        Witness git;
        git.kind = WitnessKind::GitSubspace;
        git.flat = w->flat;
        git.flat_indices = w->flat_indices;
        git.flat_rank = w->flat_rank;
        git.lhs = g.lhs;
        git.rhs = g.rhs;
        git.strict = g.comparison == RatioComparison::Violated;
        git.detail = "dim(E ∩ W'⊗V*)/dim W' = " + std::to_string(g.dim_intersection) + "/" +
                     std::to_string(g.dim_w_prime) + " vs dim E/dim W = " + std::to_string(g.dim_e) + "/" +
                     std::to_string(g.dim_w);
        v.witnesses.push_back(std::move(*w));
        v.witnesses.push_back(std::move(git));
      } else {
        v.witnesses.push_back(std::move(*w));
      }
    } else {
      not_stable = true;
      v.rules.push_back({"flat-ratio-equality", "a flat with s(x) = (m-1)(r(x)-1)/n + 1 makes the Steiner log-sheaf not stable", false});
      v.witnesses.push_back(std::move(*w));
    }
  }

  if (n == 2) {
    if (auto w = discriminant_test(lattice)) {
      unstable = true;
      v.rules.push_back({"discriminant-negative", "4c2 - c1^2 < 0 forces instability of a rank-2 bundle on P^2", false});
      v.witnesses.push_back(std::move(*w));
    }
  }

  if (unstable) {
    v.status = StabilityStatus::Unstable;
    return v;
  }

  const CrossingType crossing = classify_crossing(lattice).type;
  if (crossing == CrossingType::Generic) {
    if (options.literature_rules) {
      v.status = StabilityStatus::Stable;
      v.rules.push_back({"generic-steiner-stable", "Steiner bundles of generic arrangements are stable", true});
      return v;
    }
  }

  if (options.literature_rules && n == 2 && m >= 6 && !not_stable) {
    if (delta_invariant(lattice).total == 1) {
      v.status = StabilityStatus::Stable;
      v.rules.push_back({"delta-one-stable", "line arrangements with delta = 1 and m >= 6 are stable (inductive criterion)", true});
      return v;
    }
  }

  // With gcd(c1, rank) = 1 no proper subsheaf can match the slope, so any
  // semi-stability proof is already a stability proof. An equality witness
  // cannot occur in that case, so this never overrides one.
  const std::size_t c1 = m - 1 - n;
  if (std::gcd(c1, n) == 1) {
    v.rules.push_back({"coprime-slope", "gcd(c1, rank) = 1: semi-stable implies stable", false});
  }

  v.status = not_stable ? StabilityStatus::NotStable : StabilityStatus::Undetermined;
  return v;
}

} // namespace arrinv
