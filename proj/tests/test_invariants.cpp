#include <doctest.h>

#include <random>

#include "arrinv/fixtures.hpp"
#include "arrinv/invariants.hpp"
#include "support.hpp"

using namespace arrinv;

namespace {

IntersectionLattice lattice_of(const std::string& name) { return build_lattice(find_fixture(name)->arrangement()); }

} // namespace

TEST_CASE("Poincaré polynomials") {
  const PoincareData a3 = poincare(lattice_of("a3_braid"));
  CHECK(a3.projective == TruncatedPolynomial(2, {1, 6, 11}));
  CHECK(a3.central == TruncatedPolynomial(3, {1, 6, 11, 6}));
  CHECK(poincare(lattice_of("generic5")).projective == TruncatedPolynomial(2, {1, 5, 10}));
  const Arrangement single = parse_arrangement(2, {{1, 0, 0}});
  CHECK(poincare(build_lattice(single)).projective == TruncatedPolynomial(2, {1, 1, 0}));

  std::mt19937 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
    const Arrangement a = testsupport::random_arrangement(rng, n, 2 + static_cast<std::size_t>(trial % 6), 2, false);
    const IntersectionLattice l = build_lattice(a);
    const PoincareData p = poincare(l);
    CHECK(p.projective[0] == 1);
    CHECK(p.projective[1] == static_cast<long>(a.m()));
    // Pi = P - P(-1)(-t)^(n+1): degree n+1 coefficient is -P(-1)(-1)^(n+1).
    Integer top = -p.projective.evaluate(-1);
    if ((n + 1) % 2 == 1) {
      top = -top;
    }
    CHECK(p.central[n + 1] == top);
    CHECK(p.central.evaluate(-1) == 0); // the cone always has (1+t) as a factor
    if (classify_crossing(l).type == CrossingType::Generic) {
      CHECK(p.projective == TruncatedPolynomial::linear(n, 1).pow(a.m()));
    }
  }
}

TEST_CASE("Chern data") {
  const ChernData g4 = chern(find_fixture("generic4")->arrangement(), lattice_of("generic4"));
  REQUIRE(g4.steiner.has_value());
  CHECK(g4.steiner->ct == TruncatedPolynomial(2, {1, 1, 1}));
  CHECK(g4.steiner->twist_identity_holds);

  const ChernData g6 = chern(find_fixture("generic6_on_conic")->arrangement(), lattice_of("generic6_on_conic"));
  CHECK(g6.steiner->ct == TruncatedPolynomial(2, {1, 3, 6}));
  CHECK(g6.n2_c1 == 3);
  CHECK(g6.n2_c2 == 6);
  CHECK(g6.logfree_ct == g6.steiner->ct); // generic: the two sheaves coincide
  CHECK(g6.locally_free == LocallyFree::Yes);

  const ChernData a3 = chern(find_fixture("a3_braid")->arrangement(), lattice_of("a3_braid"));
  CHECK(a3.n2_c1 == 3);
  CHECK(a3.n2_c2 == 2);
  CHECK(a3.logfree_ct == TruncatedPolynomial(2, {1, 3, 2}));
  CHECK(a3.logfree_twisted_ct == TruncatedPolynomial(2, {1, 5, 6}));
  CHECK(a3.locally_free == LocallyFree::Yes);

  const Arrangement small = find_fixture("boolean_n2")->arrangement();
  const ChernData b = chern(small, build_lattice(small));
  CHECK_FALSE(b.steiner.has_value());
  CHECK_FALSE(b.steiner_unavailable.empty());
}

TEST_CASE("Steiner Chern polynomials across m and n") {
  std::mt19937 rng(2);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = n + 2; m <= n + 5; ++m) {
      const Arrangement a = testsupport::random_arrangement(rng, n, m, 3);
      const IntersectionLattice l = build_lattice(a);
      const ChernData c = chern(a, l);
      REQUIRE(c.steiner.has_value());
      CHECK(c.steiner->ct == TruncatedPolynomial::geometric(n, n).pow(m - 1 - n));
      CHECK(c.steiner->twisted_ct == TruncatedPolynomial::linear(n, 1).pow(m - 1));
      CHECK(c.steiner->twist_identity_holds);
      CHECK(poly_mul_truncated(TruncatedPolynomial::linear(n, 1), c.logfree_twisted_ct) == poincare(l).projective);
      if (classify_crossing(l).type == CrossingType::Generic) {
        CHECK(c.logfree_ct == c.steiner->ct);
      }
    }
  }
}

TEST_CASE("local data and delta") {
  const IntersectionLattice a3 = lattice_of("a3_braid");
  for (const LocalPoint& p : local_data(a3)) {
    CHECK(p.milnor == 2 * p.delta_local - p.branches + 1);
    CHECK(p.torsion_length == p.milnor - p.delta_local);
    if (p.s == 3) {
      CHECK(p.milnor == 4);
      CHECK(p.delta_local == 3);
      CHECK(p.torsion_length == 1);
    }
  }
  for (const LocalPoint& p : local_data(lattice_of("m6_four_concurrent"))) {
    if (p.s == 4) {
      CHECK(p.milnor == 9);
      CHECK(p.delta_local == 6);
      CHECK(p.torsion_length == 3);
    }
  }
  CHECK(delta_invariant(a3).total == 4);
  CHECK(delta_invariant(lattice_of("m5_two_triples")).total == 2);
  CHECK(delta_invariant(lattice_of("generic7_off_conic")).total == 0);
  CHECK_THROWS_AS(delta_invariant(lattice_of("a4_braid")), PreconditionError);
}

TEST_CASE("h0 values") {
  const H0Values g6 = h0_values(lattice_of("generic6_off_conic"));
  CHECK(g6.h0_tilde == 5);
  CHECK(g6.h0_log == 5);
  const H0Values a3 = h0_values(lattice_of("a3_braid"));
  CHECK(a3.h0_tilde == 5);
  CHECK(a3.h0_log == 9);
  CHECK(h0_values(lattice_of("generic4")).h0_tilde == 3);
}

TEST_CASE("finite-field counts") {
  const Arrangement p1 = parse_arrangement(1, {{1, 0}, {0, 1}});
  CHECK(count_complement_points(p1, 5) == 16);
  const Arrangement a3 = find_fixture("a3_braid")->arrangement();
  CHECK(count_complement_points(a3, 7) == 120); // (p-1)(p-2)(p-3)
  CHECK(characteristic_value(poincare(build_lattice(a3)), 2, 7) == 120);
  const Arrangement boolean = find_fixture("boolean_n2")->arrangement();
  CHECK(count_complement_points(boolean, 5) == 64);
  CHECK_THROWS_AS(count_complement_points(a3, 8), PreconditionError);
  // x - 3y and x + 4y coincide mod 7.
  const Arrangement bad = parse_arrangement(2, {{1, -3, 0}, {1, 4, 0}, {0, 0, 1}});
  CHECK_FALSE(has_good_reduction(bad, build_lattice(bad), 7));
  CHECK_THROWS_AS(count_complement_points(bad, 7), PreconditionError);
}
