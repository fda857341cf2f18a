#include "arrinv/lattice.hpp"

#include <algorithm>
#include <map>

namespace arrinv {

namespace {

// Flats are keyed by the RREF of their equation span, so two index sets
// cutting out the same subspace collapse to one flat.
using FlatKey = std::vector<Rational>;

FlatKey key_of(const RationalMatrix& rref_rows) {
  FlatKey k(rref_rows.rows() * rref_rows.cols());
  for (std::size_t r = 0; r < rref_rows.rows(); ++r) {
    std::copy(rref_rows.row(r).begin(), rref_rows.row(r).end(),
              k.begin() + static_cast<long>(r * rref_rows.cols()));
  }
  return k;
}

bool proper_subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

bool IntersectionLattice::strictly_contains(std::size_t big, std::size_t small) const {
  return proper_subset(flats[big].indices, flats[small].indices);
}

std::vector<std::size_t> IntersectionLattice::flats_of_rank(std::size_t r) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < flats.size(); ++i) {
    if (flats[i].rank == r) {
      out.push_back(i);
    }
  }
  return out;
}

IntersectionLattice build_lattice(const Arrangement& a) {
  const std::size_t n = a.n();
  const RationalMatrix forms = a.form_matrix();

  IntersectionLattice lattice;
  lattice.n = n;
  lattice.m = a.m();
  lattice.flats.push_back(Flat{{}, 0, RationalMatrix(0, n + 1)});

  std::vector<Flat> level = {lattice.flats.front()};
  for (std::size_t r = 1; r <= n && !level.empty(); ++r) {
    std::map<FlatKey, Flat> next;
    for (const Flat& x : level) {
      for (std::size_t j = 0; j < a.m(); ++j) {
        if (std::binary_search(x.indices.begin(), x.indices.end(), j)) {
          continue;
        }
        RationalMatrix span = x.equations.stack(forms.select_rows(std::vector<std::size_t>{j}));
        RationalMatrix eq = row_space_basis(span);
        FlatKey key = key_of(eq);
        if (next.contains(key)) {
          continue;
        }
        Flat y{{}, r, eq};
        for (std::size_t i = 0; i < a.m(); ++i) {
          const std::vector<std::size_t> one{i};
          if (rank(eq.stack(forms.select_rows(one))) == r) {
            y.indices.push_back(i);
          }
        }
        next.emplace(std::move(key), std::move(y));
      }
    }
    level.clear();
    for (auto& [key, flat] : next) {
      level.push_back(std::move(flat));
    }
    std::sort(level.begin(), level.end(),
              [](const Flat& p, const Flat& q) { return p.indices < q.indices; });
    lattice.flats.insert(lattice.flats.end(), level.begin(), level.end());
  }
  lattice.mobius = mobius(lattice);
  return lattice;
}

std::vector<long> mobius(const IntersectionLattice& lattice) {
  std::vector<long> mu(lattice.flats.size(), 0);
  // Flats are sorted by rank, so every strict superflat precedes x.
  for (std::size_t x = 0; x < lattice.flats.size(); ++x) {
    if (lattice.flats[x].rank == 0) {
      mu[x] = 1;
      continue;
    }
    long acc = 0;
    for (std::size_t y = 0; y < x; ++y) {
      if (lattice.strictly_contains(y, x)) {
        acc += mu[y];
      }
    }
    mu[x] = -acc;
  }
  return mu;
}

std::string_view to_string(CrossingType t) {
  switch (t) {
  case CrossingType::Generic:
    return "Generic";
  case CrossingType::NormalCrossingCodim2Only:
    return "NormalCrossingCodim2Only";
  case CrossingType::NotNormalCrossingCodim2:
    return "NotNormalCrossingCodim2";
  }
  return "?";
}

CrossingClassification classify_crossing(const IntersectionLattice& lattice) {
  CrossingClassification out;
  bool rank2_ok = true;
  for (std::size_t i = 0; i < lattice.flats.size(); ++i) {
    const Flat& x = lattice.flats[i];
    if (x.s() != x.rank && !out.witness) {
      out.witness = i;
    }
    if (x.rank == 2 && x.s() != 2) {
      rank2_ok = false;
    }
  }
  if (!out.witness) {
    out.type = CrossingType::Generic;
  } else if (rank2_ok) {
    out.type = CrossingType::NormalCrossingCodim2Only;
  } else {
    out.type = CrossingType::NotNormalCrossingCodim2;
    // Report the offending codimension-2 flat rather than an earlier one.
    for (std::size_t i : lattice.flats_of_rank(2)) {
      if (lattice.flats[i].s() != 2) {
        out.witness = i;
        break;
      }
    }
  }
  return out;
}

long sum_s_minus_one_rank2(const IntersectionLattice& lattice) {
  long acc = 0;
  for (const Flat& x : lattice.flats) {
    if (x.rank == 2) {
      acc += static_cast<long>(x.s()) - 1;
    }
  }
  return acc;
}

} // namespace arrinv
