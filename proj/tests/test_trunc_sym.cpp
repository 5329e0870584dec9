#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "frob/oracles.hpp"
#include "frob/trunc_sym.hpp"

using namespace frob;

TEST_CASE("trunc_dim examples") {
  CHECK(trunc_dim({2, 3, 4}) == 1);  // top power is one-dimensional
  CHECK(trunc_dim({5, 2, 1}) == 5);  // T^1 V = V
  // Oracle: {0,1}^3 vectors with coordinate sum 2.
  REQUIRE(oracles::count_box_vectors(3, 2, 2) == 3);
  CHECK(trunc_dim({3, 2, 2}) == 3);
}

TEST_CASE("trunc_dim rejects bad parameters") {
  CHECK_THROWS_AS(trunc_dim({2, 4, 1}), InvalidArgument);
  CHECK_THROWS_AS(trunc_dim({0, 3, 1}), InvalidArgument);
  CHECK_THROWS_AS(trunc_dim({2, 3, -1}), InvalidArgument);
  CHECK_THROWS_AS(enumerate_basis({2, 1, 0}), InvalidArgument);
}

TEST_CASE("enumerate_basis examples") {
  using B = std::vector<ExponentVector>;
  CHECK(enumerate_basis({2, 2, 2}) == B{{1, 1}});
  CHECK(enumerate_basis({1, 5, 0}) == B{{0}});
  // Direct enumeration of [0,2]^2 with sum 3.
  REQUIRE(oracles::box_vectors_with_sum(2, 3, 3) == B{{1, 2}, {2, 1}});
  CHECK(enumerate_basis({2, 3, 3}) == B{{1, 2}, {2, 1}});
  CHECK(enumerate_basis({3, 2, 4}).empty());
}

TEST_CASE("trunc_dim agrees with brute-force enumeration") {
  for (std::int64_t c = 1; c <= 4; ++c) {
    for (std::int64_t p : {2, 3, 5}) {
      for (std::int64_t l = 0; l <= c * (p - 1) + 2; ++l) {
        CAPTURE(c);
        CAPTURE(p);
        CAPTURE(l);
        const auto oracle = oracles::box_vectors_with_sum(c, p, l);
        CHECK(trunc_dim({c, p, l}) == static_cast<std::int64_t>(oracle.size()));
        CHECK(enumerate_basis({c, p, l}) == oracle);
      }
    }
  }
}

TEST_CASE("box count, symmetry and top power") {
  for (std::int64_t c = 1; c <= 7; ++c) {
    for (std::int64_t p : {2, 3, 5, 7, 13}) {
      const std::int64_t top = c * (p - 1);
      BigInt total = 0;
      for (std::int64_t l = 0; l <= top; ++l) {
        const BigInt dim = trunc_dim({c, p, l});
        total += dim;
        CHECK(dim == trunc_dim({c, p, top - l}));
        CHECK(dim > 0);
      }
      CHECK(total == ipow(p, c));
      CHECK(trunc_dim({c, p, top}) == 1);
      CHECK(trunc_dim({c, p, top + 1}) == 0);
    }
  }
}

TEST_CASE("large parameters stay exact") {
  // The middle dimension of [0,100]^12 exceeds 2^64.
  const TruncParams mid{12, 101, 600};
  const BigInt dim = trunc_dim(mid);
  CHECK(dim > ipow(2, 64));
  CHECK(dim == trunc_dim({12, 101, 12 * 100 - 600}));
  CHECK(trunc_dim({12, 101, 1'000'000}) == 0);
}

TEST_CASE("filtration ranks") {
  SUBCASE("a line") {
    const auto t = filtration_ranks(1, 3);
    CHECK(t.graded_ranks == std::vector<BigInt>{1, 1});
    CHECK(t.total_rank == 2);
    CHECK_FALSE(t.pushforward_rank.has_value());
  }
  SUBCASE("c=2, p=2 inside a threefold") {
    // Monomials x^a y^b z^e with a,b,e in {0,1} and (a,b) != (0,0).
    std::int64_t oracle = 0;
    for (const auto& a : oracles::exponent_box(3, 2))
      if (a[0] != 0 || a[1] != 0) ++oracle;
    REQUIRE(oracle == 6);
    const auto t = filtration_ranks(2, 2, 3);
    CHECK(t.graded_ranks == std::vector<BigInt>{2, 1});
    CHECK(t.total_rank == 3);
    CHECK(t.pushforward_rank == BigInt(oracle));
  }
  SUBCASE("invariants over a grid") {
    for (std::int64_t c = 1; c <= 5; ++c) {
      for (std::int64_t p : {2, 3, 5, 7}) {
        const auto t = filtration_ranks(c, p, c + 1);
        REQUIRE(t.graded_ranks.size() == static_cast<std::size_t>(c * (p - 1)));
        CHECK(t.graded_ranks.back() == 1);
        BigInt sum = 0;
        for (const auto& r : t.graded_ranks) sum += r;
        CHECK(sum == t.total_rank);
        CHECK(t.total_rank + 1 == ipow(p, c));
        CHECK(*t.pushforward_rank == ipow(p, c + 1) - p);
      }
    }
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(filtration_ranks(3, 2, 2), InvalidArgument);
    CHECK_THROWS_AS(filtration_ranks(2, 6), InvalidArgument);
  }
}
