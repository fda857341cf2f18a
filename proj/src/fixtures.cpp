#include "arrinv/fixtures.hpp"

#include <algorithm>

namespace arrinv {

Arrangement Fixture::arrangement() const {
  std::vector<LinearForm> forms;
  for (const auto& row : hyperplanes) {
    forms.emplace_back(std::vector<Integer>(row.begin(), row.end()));
  }
  return {n, std::move(forms)};
}

const std::vector<Fixture>& fixture_library() {
  static const std::vector<Fixture> library = {
      {"boolean_n2", "coordinate triangle xyz = 0", 2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}},
      {"boolean_n3", "coordinate tetrahedron in P^3", 3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}},
      {"a3_braid",
       "braid arrangement A3: the six lines through four general points, 4 triple and 3 double points",
       2,
       {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}, {0, 1, -1}}},
      {"generic4", "four lines in general position", 2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}},
      {"generic5", "five lines in general position; dual points on a nonsingular conic", 2,
       {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}}},
      {"generic6_on_conic", "six generic lines with dual points (1, t, t^2), t = 0, 1, 2, 3, -1, -2", 2,
       {{1, 0, 0}, {1, 1, 1}, {1, 2, 4}, {1, 3, 9}, {1, -1, 1}, {1, -2, 4}}},
      {"generic6_off_conic", "six generic lines whose dual points lie on no conic", 2,
       {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}, {2, -1, 5}}},
      {"generic7_off_conic", "seven generic lines whose dual points lie on no conic", 2,
       {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, -2, 2}, {1, -3, -1}, {1, 2, 4}}},
      {"m5_one_triple", "five lines with exactly one triple point", 2,
       {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 2, 3}}},
      {"m5_two_triples", "five lines with two triple points", 2,
       {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 0, 1}}},
      {"m6_one_triple", "six lines with exactly one triple point", 2,
       {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 2, 3}, {1, 3, -2}}},
      {"m6_four_concurrent", "six lines, four of them through one point", 2,
       {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, -1, 0}, {0, 0, 1}, {1, 2, 3}}},
      {"m6_two_triples_F1", "six lines, two triple points joined by a line of the arrangement", 2,
       {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 0, 1}, {1, 2, 3}}},
      {"m6_two_triples_F2", "six lines, each through one of two triple points; their join is not a line", 2,
       {{0, 1, 0}, {1, 1, 0}, {1, 2, 0}, {0, 0, 1}, {1, 0, 1}, {1, 0, -1}}},
      {"m6_three_triples", "six lines with three triple points: a triangle and one extra line per vertex", 2,
       {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 2}, {0, 1, 3}}},
      {"m7_five_fold", "seven lines, five of them through one point", 2,
       {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, -1, 0}, {1, 3, 0}, {0, 0, 1}, {1, 2, 3}}},
      {"twisted_cubic7", "seven planes with dual points (1, t, t^2, t^3), t = 0..5, -1", 3,
       {{1, 0, 0, 0},
        {1, 1, 1, 1},
        {1, 2, 4, 8},
        {1, 3, 9, 27},
        {1, 4, 16, 64},
        {1, 5, 25, 125},
        {1, -1, 1, -1}}},
      {"twisted_cubic7_perturbed", "twisted_cubic7 with the sixth dual point moved off the curve to (1, 5, -3, 111)", 3,
       {{1, 0, 0, 0},
        {1, 1, 1, 1},
        {1, 2, 4, 8},
        {1, 3, 9, 27},
        {1, 4, 16, 64},
        {1, 5, -3, 111},
        {1, -1, 1, -1}}},
      {"a4_braid", "braid arrangement A4: x_i and x_i - x_j in P^3", 3,
       {{1, 0, 0, 0},
        {0, 1, 0, 0},
        {0, 0, 1, 0},
        {0, 0, 0, 1},
        {1, -1, 0, 0},
        {1, 0, -1, 0},
        {1, 0, 0, -1},
        {0, 1, -1, 0},
        {0, 1, 0, -1},
        {0, 0, 1, -1}}},
  };
  return library;
}

const Fixture* find_fixture(const std::string& name) {
  const auto& lib = fixture_library();
  auto it = std::find_if(lib.begin(), lib.end(), [&](const Fixture& f) { return f.name == name; });
  return it == lib.end() ? nullptr : &*it;
}

} // namespace arrinv
