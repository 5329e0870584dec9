#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "frob/oracles.hpp"

using namespace frob;

TEST_CASE("exponent box is complete and lexicographic") {
  const auto box = oracles::exponent_box(3, 3);
  CHECK(box.size() == 27);
  CHECK(std::is_sorted(box.begin(), box.end()));
  CHECK(box.front() == std::vector<std::int64_t>{0, 0, 0});
  CHECK(box.back() == std::vector<std::int64_t>{2, 2, 2});
}

TEST_CASE("monomial twists of F_* O_{P^1}") {
  // 1 and x0 x1 have degree = 0 mod 2; they give O and O(-1).
  const auto t = oracles::pn_monomial_twists(1, 2, 0);
  CHECK(t == std::map<std::int64_t, std::int64_t>{{-1, 1}, {0, 1}});
}

TEST_CASE("Euler characteristic recursion on known bundles") {
  for (std::int64_t t = -8; t <= 8; ++t) {
    CHECK(oracles::euler_characteristic(1, 0, t) == t + 1);
    CHECK(oracles::euler_characteristic(1, 1, t) == t - 1);  // Omega^1 = O(-2)
    // Omega^n = O(-n-1)
    CHECK(oracles::euler_characteristic(3, 3, t) == poly_binomial(t - 4, 3));
  }
}
