// Brute-force reference computations. Nothing here calls into the library
// code paths it is used to check: counts come from explicit enumeration of
// exponent boxes, Euler characteristics from the Euler-sequence recursion.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "frob/arith.hpp"

namespace frob::oracles {

/// Every vector in [0, p-1]^c, in lexicographic order.
std::vector<std::vector<std::int64_t>> exponent_box(std::int64_t c, std::int64_t p);

/// #{a in [0,p-1]^c : sum a = l} by enumeration.
std::int64_t count_box_vectors(std::int64_t c, std::int64_t p, std::int64_t l);

/// {a in [0,p-1]^c : sum a = l} by filtering the box.
std::vector<std::vector<std::int64_t>> box_vectors_with_sum(std::int64_t c, std::int64_t p,
                                                            std::int64_t l);

/// Number of nonconstant monomials x^a, a in [0,p-1]^n, i.e. the rank of
/// the cokernel of O -> F_* O read off a p-basis.
std::int64_t nonconstant_monomials(std::int64_t n, std::int64_t p);

/// Twist multiset of F_* O_{P^n}(d): each monomial x^a with a in
/// [0,p-1]^{n+1} and sum(a) = d (mod p) contributes O((d - sum a)/p).
std::map<std::int64_t, std::int64_t> pn_monomial_twists(std::int64_t n, std::int64_t p,
                                                        std::int64_t d);

/// chi(Omega^k_{P^n}(t)) from 0 -> Omega^k -> O(-k)^C(n+1,k) -> Omega^{k-1} -> 0.
BigInt euler_characteristic(std::int64_t n, std::int64_t k, std::int64_t t);

}  // namespace frob::oracles
