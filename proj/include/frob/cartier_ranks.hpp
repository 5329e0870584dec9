// Ranks of the terms of the Cartier sequences on a smooth n-fold:
//   0 -> B^i -> Z^i -> Omega^i -> 0
//   0 -> Z^i -> F_* Omega^i -> B^{i+1} -> 0
#pragma once

#include <cstdint>
#include <vector>

#include "frob/arith.hpp"

namespace frob {

struct CartierRow {
  BigInt fstar_omega;  // rank F_* Omega^i
  BigInt z;            // rank Z^i (closed forms)
  BigInt b;            // rank B^i (exact forms)
};

struct CartierRankTable {
  std::int64_t n = 0;
  std::int64_t p = 0;
  /// rows[i] for i = 0 .. n+1.
  std::vector<CartierRow> rows;
};

/// Forward recursion from B^0 = 0. rows[1].b is the Frobenius cokernel rank.
CartierRankTable cartier_rank_table(std::int64_t n, std::int64_t p);

/// True iff the table is the unique solution of the recursion for its (n, p).
bool verify_cartier_consistency(const CartierRankTable& table);

}  // namespace frob
