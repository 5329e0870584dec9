#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "frob/arith.hpp"

using namespace frob;

TEST_CASE("primality") {
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 101, 7919}) CHECK(is_prime(p));
  for (std::int64_t q : {-3, 0, 1, 4, 9, 15, 25, 7917}) CHECK_FALSE(is_prime(q));
  CHECK_THROWS_AS(require_prime(4), InvalidArgument);
  CHECK_NOTHROW(require_prime(3));
}

TEST_CASE("binomial uses the combinatorial zero convention") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(100, 50) == BigInt("100891344545564193334812497256"));
}

TEST_CASE("polynomial binomial extends C(s+n, n) to negative s") {
  // chi(O_{P^2}(s)) = (s+1)(s+2)/2
  for (std::int64_t s = -6; s <= 6; ++s) CHECK(poly_binomial(s, 2) == (s + 1) * (s + 2) / 2);
  CHECK(poly_binomial(-1, 3) == 0);
  CHECK(poly_binomial(-4, 3) == -1);  // chi(omega_{P^3}) = -h^3 = -1
  CHECK(poly_binomial(7, 0) == 1);
}

TEST_CASE("floor division rounds toward negative infinity") {
  CHECK(floor_div(-1, 2) == -1);
  CHECK(floor_div(-2, 2) == -1);
  CHECK(floor_div(-3, 2) == -2);
  CHECK(floor_div(3, 2) == 1);
  CHECK(ceil_div(-3, 2) == -1);
  CHECK(ceil_div(3, 2) == 2);
  CHECK(ceil_div(4, 2) == 2);
}

TEST_CASE("ipow and int64 range") {
  CHECK(ipow(7, 0) == 1);
  CHECK(ipow(2, 64) == BigInt("18446744073709551616"));
  CHECK(fits_int64(ipow(2, 62)));
  CHECK_FALSE(fits_int64(ipow(2, 63)));
  CHECK(fits_int64(-ipow(2, 63)));
}
