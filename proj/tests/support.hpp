#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "ppm/group.hpp"

namespace ppm::test {

// Standard covers of the test matrix: (group, g_alpha, g_beta).
inline const std::vector<std::tuple<std::string, std::string, std::string>>& test_matrix() {
  static const std::vector<std::tuple<std::string, std::string, std::string>> m = {
      {"Z2", "1", "1"},          {"Z3", "1", "1"},          {"Z4", "1", "1"},
      {"Z2xZ2", "1,0", "0,1"},   {"Z2xZ4", "1,0", "0,1"},   {"Z3xZ3", "1,0", "0,1"}};
  return m;
}

inline std::vector<CoverSpec> test_covers() {
  std::vector<CoverSpec> out;
  for (const auto& [g, a, b] : test_matrix()) out.push_back(CoverSpec::parse(g, a, b));
  return out;
}

}  // namespace ppm::test
