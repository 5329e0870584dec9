#include "frob/oracles.hpp"

namespace frob::oracles {

std::vector<std::vector<std::int64_t>> exponent_box(std::int64_t c, std::int64_t p) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> a(static_cast<std::size_t>(c), 0);
  while (true) {
    out.push_back(a);
    // Increment the last coordinate first so output is lexicographic.
    std::int64_t k = c - 1;
    while (k >= 0 && a[static_cast<std::size_t>(k)] == p - 1) a[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) break;
    ++a[static_cast<std::size_t>(k)];
  }
  return out;
}

std::int64_t count_box_vectors(std::int64_t c, std::int64_t p, std::int64_t l) {
  return static_cast<std::int64_t>(box_vectors_with_sum(c, p, l).size());
}

std::vector<std::vector<std::int64_t>> box_vectors_with_sum(std::int64_t c, std::int64_t p,
                                                            std::int64_t l) {
  std::vector<std::vector<std::int64_t>> out;
  for (auto& a : exponent_box(c, p)) {
    std::int64_t s = 0;
    for (auto x : a) s += x;
    if (s == l) out.push_back(std::move(a));
  }
  return out;
}

std::int64_t nonconstant_monomials(std::int64_t n, std::int64_t p) {
  std::int64_t count = 0;
  for (const auto& a : exponent_box(n, p)) {
    bool constant = true;
    for (auto x : a) constant = constant && x == 0;
    if (!constant) ++count;
  }
  return count;
}

std::map<std::int64_t, std::int64_t> pn_monomial_twists(std::int64_t n, std::int64_t p,
                                                        std::int64_t d) {
  std::map<std::int64_t, std::int64_t> twists;
  for (const auto& a : exponent_box(n + 1, p)) {
    std::int64_t s = 0;
    for (auto x : a) s += x;
    const std::int64_t diff = d - s;
    if (((diff % p) + p) % p != 0) continue;
    ++twists[diff / p];
  }
  return twists;
}

BigInt euler_characteristic(std::int64_t n, std::int64_t k, std::int64_t t) {
  BigInt chi = poly_binomial(t, n);  // chi(O(t))
  for (std::int64_t q = 1; q <= k; ++q) {
    chi = binomial(n + 1, q) * poly_binomial(t - q, n) - chi;
  }
  return chi;
}

}  // namespace frob::oracles
