#pragma once

#include <string>
#include <vector>

#include "pdd/foodweb.hpp"

namespace pdd_test {

// The three-species running example: a feeds b (gamma 1) and c (1/2),
// b feeds c (1/2); d = (a:5, b:3, c:4).
inline pdd::PddInstance make_w1(std::int64_t budget = 2, std::int64_t target = 8) {
  pdd::FoodWeb web({"a", "b", "c"}, {{0, 1}, {0, 2}, {1, 2}});
  return pdd::PddInstance(std::move(web),
                          {pdd::Rational(1), pdd::Rational(1, 2), pdd::Rational(1, 2)},
                          {5, 3, 4}, budget, target);
}

inline std::string fixture_path(const std::string& name) {
  return std::string(FIXTURES_DIR) + "/" + name;
}

}  // namespace pdd_test
