#include "arrinv/invariants.hpp"

#include <algorithm>

namespace arrinv {

PoincareData poincare(const IntersectionLattice& lattice) {
  const std::size_t n = lattice.n;
  TruncatedPolynomial projective(n);
  for (std::size_t i = 0; i < lattice.flats.size(); ++i) {
    const std::size_t r = lattice.flats[i].rank;
    const long sign = (r % 2 == 0) ? 1 : -1;
    projective[r] += sign * lattice.mobius[i];
  }
  TruncatedPolynomial central = projective.with_cap(n + 1);
  // Pi(t) = P(t) - P(-1) (-t)^(n+1)
  const Integer p_at_minus_one = projective.evaluate(-1);
  const long sign = ((n + 1) % 2 == 0) ? 1 : -1;
  central[n + 1] -= p_at_minus_one * sign;
  return {std::move(projective), std::move(central)};
}

std::string_view to_string(LocallyFree f) {
  switch (f) {
  case LocallyFree::Yes:
    return "Yes";
  case LocallyFree::Unknown:
    return "Unknown";
  case LocallyFree::No:
    return "No";
  }
  return "?";
}

ChernData chern(const Arrangement& a, const IntersectionLattice& lattice) {
  const std::size_t n = a.n();
  const std::size_t m = a.m();
  ChernData out{std::nullopt, {}, TruncatedPolynomial(n), TruncatedPolynomial(n), {}, {},
                LocallyFree::Unknown};

  if (m >= n + 2) {
    SteinerChern s{TruncatedPolynomial::geometric(n, n).pow(m - 1 - n),
                   TruncatedPolynomial::linear(n, 1).pow(m - 1), false};
    s.twist_identity_holds = twist_by_one(s.ct, n) == s.twisted_ct;
    out.steiner = std::move(s);
  } else {
    out.steiner_unavailable = "Steiner resolution needs m >= n+2 (m = " + std::to_string(m) +
                              ", n = " + std::to_string(n) + ")";
  }

  const PoincareData p = poincare(lattice);
  out.logfree_twisted_ct = poly_div_truncated(p.projective, TruncatedPolynomial::linear(n, 1));
  out.logfree_ct = twist_by_minus_one(out.logfree_twisted_ct, n);

  if (n == 2) {
    const long mm = static_cast<long>(m);
    out.n2_c1 = mm - 3;
    out.n2_c2 = sum_s_minus_one_rank2(lattice) - 2 * mm + 3;
  }

  const CrossingType crossing = classify_crossing(lattice).type;
  if (crossing == CrossingType::Generic || n <= 2) {
    out.locally_free = LocallyFree::Yes;
  } else if (crossing == CrossingType::NormalCrossingCodim2Only) {
    // Normal crossing in codimension 2 plus locally free forces generic.
    out.locally_free = LocallyFree::No;
  }
  return out;
}

namespace {

void require_plane(const IntersectionLattice& lattice, const char* op) {
  if (lattice.n != 2) {
    throw PreconditionError(std::string(op) + " is only defined for line arrangements (n = 2), got n = " +
                            std::to_string(lattice.n));
  }
}

long choose2(long k) { return k * (k - 1) / 2; }

} // namespace

std::vector<LocalPoint> local_data(const IntersectionLattice& lattice) {
  require_plane(lattice, "local_data");
  std::vector<LocalPoint> out;
  for (std::size_t i : lattice.flats_of_rank(2)) {
    const long s = static_cast<long>(lattice.flats[i].s());
    LocalPoint p{i, s, (s - 1) * (s - 1), choose2(s), s, choose2(s - 1)};
    if (p.milnor != 2 * p.delta_local - p.branches + 1 ||
        p.torsion_length != p.milnor - p.delta_local) {
      throw Error("local_data: Jung-Milnor identity failed at a point with s = " + std::to_string(s));
    }
    out.push_back(p);
  }
  return out;
}

DeltaData delta_invariant(const IntersectionLattice& lattice) {
  require_plane(lattice, "delta_invariant");
  DeltaData out;
  for (std::size_t i : lattice.flats_of_rank(2)) {
    const long d = choose2(static_cast<long>(lattice.flats[i].s()) - 1);
    out.per_point.emplace_back(i, d);
    out.total += d;
  }
  const long m = static_cast<long>(lattice.m);
  if (choose2(m) - sum_s_minus_one_rank2(lattice) != out.total) {
    throw Error("delta_invariant: C(m,2) - sum(s-1) != sum C(s-1,2)");
  }
  return out;
}

H0Values h0_values(const IntersectionLattice& lattice) {
  require_plane(lattice, "h0_values");
  const long m = static_cast<long>(lattice.m);
  if (m < 4) {
    throw PreconditionError("h0_values needs m >= n+2 = 4, got m = " + std::to_string(m));
  }
  return {m - 1, m - 1 - sum_s_minus_one_rank2(lattice) + choose2(m)};
}

namespace {

using Mod = std::uint64_t;

Mod reduce(const Integer& z, Mod p) {
  Integer r = z % static_cast<unsigned long>(p);
  if (r < 0) {
    r += static_cast<unsigned long>(p);
  }
  return r.get_ui();
}

Mod pow_mod(Mod b, Mod e, Mod p) {
  Mod r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1U) {
      r = r * b % p;
    }
    b = b * b % p;
    e >>= 1U;
  }
  return r;
}

std::size_t rank_mod_p(std::vector<std::vector<Mod>> rows, Mod p) {
  std::size_t rk = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rk < rows.size(); ++c) {
    std::size_t piv = rk;
    while (piv < rows.size() && rows[piv][c] == 0) {
      ++piv;
    }
    if (piv == rows.size()) {
      continue;
    }
    std::swap(rows[piv], rows[rk]);
    const Mod inv = pow_mod(rows[rk][c], p - 2, p);
    for (Mod& v : rows[rk]) {
      v = v * inv % p;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rk || rows[r][c] == 0) {
        continue;
      }
      const Mod f = rows[r][c];
      for (std::size_t j = 0; j < cols; ++j) {
        rows[r][j] = (rows[r][j] + (p - f) * rows[rk][j]) % p;
      }
    }
    ++rk;
  }
  return rk;
}

std::vector<std::vector<Mod>> forms_mod_p(const Arrangement& a, Mod p) {
  std::vector<std::vector<Mod>> out;
  for (const LinearForm& f : a.forms()) {
    std::vector<Mod> row;
    for (const Integer& c : f.coefficients()) {
      row.push_back(reduce(c, p));
    }
    out.push_back(std::move(row));
  }
  return out;
}

void require_prime(Mod p) {
  if (p < 2 || p > (Mod{1} << 31U)) {
    throw PreconditionError("prime out of range: " + std::to_string(p));
  }
  for (Mod d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      throw PreconditionError(std::to_string(p) + " is not prime");
    }
  }
}

} // namespace

bool has_good_reduction(const Arrangement& a, const IntersectionLattice& lattice, std::uint64_t p) {
  require_prime(p);
  const auto forms = forms_mod_p(a, p);
  for (const Flat& x : lattice.flats) {
    std::vector<std::vector<Mod>> rows;
    for (std::size_t i : x.indices) {
      rows.push_back(forms[i]);
    }
    if (rank_mod_p(rows, p) != x.rank) {
      return false;
    }
    for (std::size_t j = 0; j < a.m(); ++j) {
      if (std::binary_search(x.indices.begin(), x.indices.end(), j)) {
        continue;
      }
      auto extended = rows;
      extended.push_back(forms[j]);
      if (rank_mod_p(extended, p) != x.rank + 1) {
        return false;
      }
    }
  }
  return true;
}

std::uint64_t count_complement_points(const Arrangement& a, std::uint64_t p) {
  const IntersectionLattice lattice = build_lattice(a);
  if (!has_good_reduction(a, lattice, p)) {
    throw PreconditionError("arrangement has degenerate reduction mod " + std::to_string(p));
  }
  const auto forms = forms_mod_p(a, p);
  const std::size_t n = a.n();
  const std::size_t m = a.m();

  // Enumerate the first n coordinates; for each prefix, the last coordinate
  // is excluded exactly when it zeroes some form.
  std::vector<Mod> prefix(n, 0);
  std::vector<Mod> partial(m, 0);
  std::vector<Mod> banned;
  banned.reserve(m);
  std::vector<Mod> inv_last(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (forms[i][n] != 0) {
      inv_last[i] = pow_mod(forms[i][n], p - 2, p);
    }
  }
  std::uint64_t count = 0;
  while (true) {
    for (std::size_t i = 0; i < m; ++i) {
      Mod acc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        acc = (acc + forms[i][k] * prefix[k]) % p;
      }
      partial[i] = acc;
    }
    banned.clear();
    bool whole_line = false;
    for (std::size_t i = 0; i < m && !whole_line; ++i) {
      const Mod c = forms[i][n];
      if (c == 0) {
        whole_line = partial[i] == 0;
      } else {
        // c x + partial = 0  =>  x = -partial / c
        banned.push_back((p - partial[i]) % p * inv_last[i] % p);
      }
    }
    if (!whole_line) {
      std::sort(banned.begin(), banned.end());
      const auto distinct = static_cast<Mod>(std::unique(banned.begin(), banned.end()) - banned.begin());
      count += p - distinct;
    }
    std::size_t k = 0;
    while (k < n && ++prefix[k] == p) {
      prefix[k++] = 0;
    }
    if (k == n) {
      break;
    }
  }
  return count;
}

Integer characteristic_value(const PoincareData& poincare, std::size_t n, std::uint64_t p) {
  Integer acc = 0;
  Integer power = 1; // p^(n+1-k), built from k = n+1 downwards
  for (std::size_t k = n + 2; k-- > 0;) {
    const Integer& coeff = poincare.central[k];
    acc += (k % 2 == 0 ? coeff : Integer(-coeff)) * power;
    power *= static_cast<unsigned long>(p);
  }
  return acc;
}

} // namespace arrinv
