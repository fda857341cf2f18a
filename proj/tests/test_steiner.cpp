#include <doctest.h>

#include <random>

#include "arrinv/fixtures.hpp"
#include "arrinv/lattice.hpp"
#include "arrinv/steiner.hpp"
#include "support.hpp"

using namespace arrinv;

namespace {

// Rank of t(v) predicted from the relations among the forms vanishing at v.
std::size_t expected_slice_rank(const Arrangement& a, std::span<const Rational> v) {
  std::vector<std::size_t> zeros;
  for (std::size_t i = 0; i < a.m(); ++i) {
    if (a.form(i).evaluate(v) == 0) {
      zeros.push_back(i);
    }
  }
  const std::size_t relations_at_v = zeros.size() - rank(a.form_matrix(zeros));
  return a.m() - 1 - a.n() - relations_at_v;
}

void check_image_in_w(const Arrangement& a, const SteinerTensor& t) {
  // (a_1 f_1(e_k), ..., a_m f_m(e_k)) sums to zero for every relation a.
  for (std::size_t k = 0; k <= a.n(); ++k) {
    for (std::size_t j = 0; j < t.u_basis.rows(); ++j) {
      Rational sum = 0;
      for (std::size_t i = 0; i < a.m(); ++i) {
        sum += t.u_basis(j, i) * a.form(i)[k];
      }
      CHECK(sum == 0);
    }
  }
}

} // namespace

TEST_CASE("tensor shape and relation basis") {
  const Arrangement g4 = find_fixture("generic4")->arrangement();
  const SteinerTensor t = steiner_tensor(g4);
  CHECK(t.u_basis.rows() == 1);
  CHECK(primitive_integer_vector(t.u_basis.row(0)) == std::vector<Integer>{1, 1, 1, -1});
  CHECK(t.slices.size() == 3);
  CHECK(t.slices[0].rows() == 3);
  CHECK(t.slices[0].cols() == 1);
  check_image_in_w(g4, t);

  const Arrangement a3 = find_fixture("a3_braid")->arrangement();
  const SteinerTensor t3 = steiner_tensor(a3);
  CHECK(t3.u_basis.rows() == 3);
  check_image_in_w(a3, t3);
  CHECK_THROWS_AS(steiner_tensor(find_fixture("boolean_n2")->arrangement()), PreconditionError);
  const Arrangement pencil = parse_arrangement(2, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 2, 0}});
  CHECK_THROWS_AS(steiner_tensor(pencil), PreconditionError);
}

TEST_CASE("slices are linear and drop rank exactly at dependent points") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<long> coord(-4, 4);
  for (const char* name : {"a3_braid", "m6_four_concurrent", "generic6_on_conic", "a4_braid", "twisted_cubic7"}) {
    CAPTURE(name);
    const Arrangement a = find_fixture(name)->arrangement();
    const SteinerTensor t = steiner_tensor(a);
    const IntersectionLattice l = build_lattice(a);
    std::vector<std::vector<Rational>> points;
    for (std::size_t i : l.flats_of_rank(a.n())) {
      const RationalMatrix k = kernel_basis(l.flats[i].equations);
      points.emplace_back(k.row(0).begin(), k.row(0).end());
    }
    for (int s = 0; s < 10; ++s) {
      std::vector<Rational> v(a.n() + 1);
      for (auto& x : v) {
        x = coord(rng);
      }
      points.push_back(v);
    }
    for (const auto& v : points) {
      const RationalMatrix tv = t.evaluate(v);
      CHECK(rank(tv) == expected_slice_rank(a, v));
      // Direct evaluation of t(v) on each relation.
      for (std::size_t j = 0; j < t.u_basis.rows(); ++j) {
        for (std::size_t i = 0; i + 1 < a.m(); ++i) {
          CHECK(tv(i, j) == t.u_basis(j, i) * a.form(i).evaluate(v));
        }
      }
    }
  }
}

TEST_CASE("dependent sets") {
  CHECK(dependent_sets(find_fixture("generic6_off_conic")->arrangement()).sets.empty());
  CHECK(dependent_sets(find_fixture("boolean_n2")->arrangement()).sets.empty());
  const DependentSets d = dependent_sets(find_fixture("m5_one_triple")->arrangement());
  CHECK(d.sets == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
  const DependentSets four = dependent_sets(find_fixture("m6_four_concurrent")->arrangement());
  CHECK(four.sets.size() == 4);
}

TEST_CASE("Gale duals") {
  const Arrangement g6 = find_fixture("generic6_off_conic")->arrangement();
  const Arrangement dual = gale_dual(g6);
  CHECK(dual.n() == 2);
  CHECK(dual.m() == 6);
  CHECK(classify_crossing(build_lattice(dual)).type == CrossingType::Generic);
  CHECK(verify_gale_bijection(g6).holds);

  const Arrangement one_triple = find_fixture("m6_one_triple")->arrangement();
  const Arrangement d1 = gale_dual(one_triple);
  // The triple {1,2,3} corresponds to the dependent complement {4,5,6}.
  CHECK(dependent_sets(d1).sets == std::vector<std::vector<std::size_t>>{{3, 4, 5}});
  CHECK(verify_gale_bijection(one_triple).holds);

  // Four points on P^1 are Gale-dual to four points on P^1.
  const Arrangement p1 = parse_arrangement(1, {{1, 0}, {0, 1}, {1, 1}, {1, 2}});
  CHECK(gale_dual(p1).n() == 1);
  CHECK(verify_gale_bijection(p1).holds);

  CHECK_THROWS_AS(gale_dual(find_fixture("generic5")->arrangement().restricted(std::vector<std::size_t>{0, 1, 2, 3})),
                  PreconditionError);
  CHECK_THROWS_AS(gale_dual(find_fixture("m7_five_fold")->arrangement()), PreconditionError);
  CHECK(verify_gale_bijection(find_fixture("m7_five_fold")->arrangement()).holds);
}

TEST_CASE("Gale bijection and double duals on random arrangements") {
  std::mt19937 rng(41);
  int doubles = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
    std::uniform_int_distribution<std::size_t> extra(3, 8 - n);
    const std::size_t m = std::min<std::size_t>(8, n + extra(rng));
    const Arrangement a = testsupport::random_arrangement(rng, n, m, 2);
    CAPTURE(trial);
    CHECK(verify_gale_bijection(a).holds);
    try {
      const Arrangement dual = gale_dual(a);
      if (dual.m() >= dual.n() + 3) {
        CHECK(dependent_sets(gale_dual(dual)).sets == dependent_sets(a).sets);
        ++doubles;
      }
    } catch (const PreconditionError&) {
      // coincident dual points: the associated arrangement is not defined
    }
  }
  CHECK(doubles > 0);
}

TEST_CASE("non-degeneracy is genericity") {
  CHECK(nondegenerate(find_fixture("generic6_off_conic")->arrangement()));
  CHECK_FALSE(nondegenerate(find_fixture("a3_braid")->arrangement()));
  const Arrangement concurrent = parse_arrangement(2, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, -1, 0}});
  CHECK_FALSE(nondegenerate(concurrent));
}
