#include "frob/arith.hpp"

#include <limits>

namespace frob {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (std::int64_t q = 3; q <= p / q; q += 2) {
    if (p % q == 0) return false;
  }
  return true;
}

void require_prime(std::int64_t p, const char* what) {
  if (!is_prime(p)) {
    throw InvalidArgument(std::string(what) + " must be prime, got " + std::to_string(p));
  }
}

BigInt binomial(std::int64_t m, std::int64_t k) {
  if (m < 0 || k < 0 || k > m) return 0;
  if (k > m - k) k = m - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= (m - k + i);
    r /= i;
  }
  return r;
}

BigInt poly_binomial(std::int64_t s, std::int64_t n) {
  if (n < 0) throw InvalidArgument("poly_binomial: n must be nonnegative");
  BigInt num = 1;
  BigInt den = 1;
  for (std::int64_t i = 1; i <= n; ++i) {
    num *= (s + i);
    den *= i;
  }
  return num / den;
}

BigInt ipow(std::int64_t base, std::int64_t exp) {
  if (exp < 0) throw InvalidArgument("ipow: negative exponent");
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

bool fits_int64(const BigInt& v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace frob
