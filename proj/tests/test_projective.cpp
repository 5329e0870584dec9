#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "frob/oracles.hpp"
#include "frob/projective.hpp"

using namespace frob;
using namespace frob::projective;

namespace {

std::map<std::int64_t, BigInt> as_big(const std::map<std::int64_t, std::int64_t>& m) {
  return {m.begin(), m.end()};
}

std::int64_t oracle_min_twist(std::int64_t n, std::int64_t p, std::int64_t d) {
  return oracles::pn_monomial_twists(n, p, d).begin()->first;
}

}  // namespace

TEST_CASE("fstar_decompose_pn examples") {
  // Oracle: 1 and x0 x1 have even degree and give O and O(-1).
  REQUIRE(oracles::pn_monomial_twists(1, 2, 0) == std::map<std::int64_t, std::int64_t>{{-1, 1}, {0, 1}});
  CHECK(fstar_decompose_pn(1, 2, 0).summands == std::map<std::int64_t, BigInt>{{-1, 1}, {0, 1}});
  // x0 and x1 give F_* O_{P^1}(1) = O^2.
  CHECK(fstar_decompose_pn(1, 2, 1).summands == std::map<std::int64_t, BigInt>{{0, 2}});
  CHECK_THROWS_AS(fstar_decompose_pn(0, 2, 1), InvalidArgument);
  CHECK_THROWS_AS(fstar_decompose_pn(2, 1, 1), InvalidArgument);
}

TEST_CASE("fast path agrees with monomial enumeration") {
  for (std::int64_t n = 1; n <= 3; ++n) {
    for (std::int64_t p : {2, 3, 5}) {
      for (std::int64_t d = -12; d <= 20; ++d) {
        CAPTURE(n);
        CAPTURE(p);
        CAPTURE(d);
        const auto fast = fstar_decompose_pn(n, p, d);
        CHECK(fast.summands == as_big(oracles::pn_monomial_twists(n, p, d)));
        CHECK(fast.rank() == ipow(p, n));
      }
    }
  }
}

TEST_CASE("duality: negated twists of F_*O(d) are those of F_*O((n+1)(p-1) - d)") {
  for (std::int64_t n = 1; n <= 3; ++n) {
    for (std::int64_t p : {2, 3, 5}) {
      for (std::int64_t d = -5; d <= 15; ++d) {
        std::map<std::int64_t, BigInt> negated;
        for (const auto& [m, mult] : fstar_decompose_pn(n, p, d).summands) negated[-m] = mult;
        CHECK(negated == fstar_decompose_pn(n, p, (n + 1) * (p - 1) - d).summands);
      }
    }
  }
}

TEST_CASE("min twist is nondecreasing in d") {
  for (std::int64_t n = 1; n <= 4; ++n) {
    for (std::int64_t p : {2, 3, 5, 7}) {
      std::int64_t prev = fstar_decompose_pn(n, p, -30).min_twist();
      for (std::int64_t d = -29; d <= 40; ++d) {
        const auto cur = fstar_decompose_pn(n, p, d).min_twist();
        CHECK(cur >= prev);
        prev = cur;
      }
    }
  }
}

TEST_CASE("fstar_positivity examples") {
  // d = 6 >= n(p-1) = 4 with p > n: at least nef. Exact value from the oracle.
  REQUIRE(oracle_min_twist(2, 3, 6) == 0);
  CHECK(fstar_positivity(2, 3, 6) == Positivity::NefNotAmple);
  CHECK(fstar_positivity(1, 2, 1) == Positivity::NefNotAmple);
  // d = 8 > (n+1)(p-1) = 6.
  REQUIRE(oracle_min_twist(2, 3, 8) == 1);
  CHECK(fstar_positivity(2, 3, 8) == Positivity::Ample);
  CHECK(fstar_positivity(2, 3, 3) == Positivity::NotNef);
}

TEST_CASE("no ample pushforward at or below (n+1)(p-1)") {
  for (std::int64_t n = 1; n <= 4; ++n) {
    for (std::int64_t p : {2, 3, 5, 7}) {
      for (std::int64_t d = -10; d <= (n + 1) * (p - 1); ++d) {
        CHECK(fstar_positivity(n, p, d) != Positivity::Ample);
      }
      CHECK(fstar_positivity(n, p, (n + 1) * (p - 1) + 1) == Positivity::Ample);
    }
  }
}

TEST_CASE("threshold_scan") {
  CHECK(threshold_scan(1, 3, -5, 20).min_nef_d == 2);
  CHECK(threshold_scan(1, 2, -5, 20).min_nef_d == 1);
  CHECK(threshold_scan(2, 5, -5, 30).min_nef_d == 8);
  const auto t = threshold_scan(2, 5, -5, 30);
  CHECK(t.min_ample_d == 13);

  SUBCASE("sharp nef threshold when p > n") {
    for (std::int64_t n = 1; n <= 3; ++n) {
      for (std::int64_t p : {2, 3, 5, 7}) {
        if (p <= n) continue;
        CHECK(threshold_scan(n, p, -1, (n + 1) * p).min_nef_d == n * (p - 1));
      }
    }
  }
  SUBCASE("range too small is reported") {
    CHECK_THROWS_AS(threshold_scan(2, 5, 8, 30), InvalidArgument);   // starts at the nef threshold
    CHECK_THROWS_AS(threshold_scan(2, 5, -5, 10), InvalidArgument);  // never ample
    CHECK_THROWS_AS(threshold_scan(2, 5, -5, 5), InvalidArgument);   // never nef
    CHECK_THROWS_AS(threshold_scan(2, 5, 3, 2), InvalidArgument);
  }
}
