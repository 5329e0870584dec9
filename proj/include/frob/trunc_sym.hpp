// Truncated symmetric powers T^l(V) of a c-dimensional space in
// characteristic p, and the graded ranks of G_Z = I/I^[p].
//
// dim T^l(V) is the number of exponent vectors a in [0, p-1]^c with
// sum(a) = l, i.e. the monomials of S^l(V) that survive truncation.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frob/arith.hpp"

namespace frob {

struct TruncParams {
  std::int64_t c = 1;  // rank of V
  std::int64_t p = 2;  // characteristic
  std::int64_t l = 0;  // power

  /// Throws InvalidArgument on c < 1, l < 0 or non-prime p.
  void validate() const;
};

using ExponentVector = std::vector<std::int64_t>;

struct FiltrationRankTable {
  std::int64_t c = 0;
  std::int64_t p = 0;
  std::optional<std::int64_t> ambient_dim;
  /// graded_ranks[i] = dim T^{i+1}, for i = 0 .. c(p-1)-1.
  std::vector<BigInt> graded_ranks;
  BigInt total_rank;                      // p^c - 1
  std::optional<BigInt> pushforward_rank; // p^n - p^(n-c)
};

/// dim T^l(V) by inclusion-exclusion over the coordinates that overflow.
BigInt trunc_dim(const TruncParams& params);

/// All exponent vectors of T^l(V) in lexicographic order.
std::vector<ExponentVector> enumerate_basis(const TruncParams& params);

FiltrationRankTable filtration_ranks(std::int64_t c, std::int64_t p,
                                     std::optional<std::int64_t> ambient_dim = std::nullopt);

}  // namespace frob
