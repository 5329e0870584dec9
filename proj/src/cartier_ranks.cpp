#include "frob/cartier_ranks.hpp"

#include <string>

namespace frob {

CartierRankTable cartier_rank_table(std::int64_t n, std::int64_t p) {
  if (n < 1) throw InvalidArgument("n must be at least 1, got " + std::to_string(n));
  require_prime(p);

  const BigInt frob_degree = ipow(p, n);
  CartierRankTable table{n, p, {}};
  table.rows.resize(static_cast<std::size_t>(n + 2));

  BigInt b = 0;
  for (std::int64_t i = 0; i <= n + 1; ++i) {
    auto& row = table.rows[static_cast<std::size_t>(i)];
    const BigInt omega = binomial(n, i);
    row.fstar_omega = frob_degree * omega;
    row.b = b;
    row.z = b + omega;
    b = row.fstar_omega - row.z;
  }
  return table;
}

bool verify_cartier_consistency(const CartierRankTable& table) {
  const std::int64_t n = table.n;
  if (n < 1 || !is_prime(table.p)) return false;
  if (table.rows.size() != static_cast<std::size_t>(n + 2)) return false;

  const BigInt frob_degree = ipow(table.p, n);
  BigInt lhs = 0;
  BigInt rhs = 0;
  for (std::int64_t i = 0; i <= n + 1; ++i) {
    const auto& row = table.rows[static_cast<std::size_t>(i)];
    const BigInt omega = binomial(n, i);
    if (row.fstar_omega < 0 || row.z < 0 || row.b < 0) return false;
    if (row.fstar_omega != frob_degree * omega) return false;
    if (row.z != row.b + omega) return false;
    const BigInt next_b =
        (i + 1 <= n + 1) ? table.rows[static_cast<std::size_t>(i + 1)].b : BigInt(0);
    if (i <= n && next_b != row.fstar_omega - row.z) return false;
    const int sign = (i % 2 == 0) ? 1 : -1;
    lhs += sign * row.fstar_omega;
    rhs += sign * (row.z + next_b);
  }
  if (table.rows.front().b != 0 || table.rows.back().b != 0) return false;
  return lhs == rhs;
}

}  // namespace frob
