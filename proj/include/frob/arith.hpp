// Exact integer helpers shared by every module.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace frob {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Raised for any argument that violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::int64_t p);

/// Throws InvalidArgument naming `what` unless p is prime.
void require_prime(std::int64_t p, const char* what = "p");

/// Binomial coefficient with the combinatorial convention: C(m,k) = 0 when
/// m < 0, k < 0 or k > m.
BigInt binomial(std::int64_t m, std::int64_t k);

/// Polynomial binomial C(s+n, n) = (s+1)(s+2)...(s+n)/n!, defined for every
/// integer s (negative values allowed). This is chi(O_{P^n}(s)).
BigInt poly_binomial(std::int64_t s, std::int64_t n);

BigInt ipow(std::int64_t base, std::int64_t exp);

/// Floor division rounding toward negative infinity.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return -floor_div(-a, b);
}

/// True when v fits in a signed 64-bit integer.
bool fits_int64(const BigInt& v);

}  // namespace frob
