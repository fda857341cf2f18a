#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "arrinv/arrangement.hpp"

namespace arrinv {

struct Fixture {
  std::string name;
  std::string description;
  std::size_t n = 0;
  std::vector<std::vector<long>> hyperplanes;

  Arrangement arrangement() const;
};

/// Built-in arrangements, in a fixed order. The same data ships as
/// fixtures/<name>.json.
const std::vector<Fixture>& fixture_library();

/// nullptr when no fixture has that name.
const Fixture* find_fixture(const std::string& name);

} // namespace arrinv
