#include "frob/trunc_sym.hpp"

#include <string>

namespace frob {

namespace {

// Refuse to materialize absurdly large bases.
constexpr std::int64_t kMaxBasisSize = 20'000'000;

void fill_basis(const TruncParams& params, std::int64_t pos, std::int64_t remaining,
                ExponentVector& current, std::vector<ExponentVector>& out) {
  const std::int64_t slots_after = params.c - pos - 1;
  if (pos == params.c) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  // Lexicographic order: smallest leading exponent first.
  for (std::int64_t a = 0; a <= params.p - 1 && a <= remaining; ++a) {
    if (remaining - a > slots_after * (params.p - 1)) continue;
    current[static_cast<std::size_t>(pos)] = a;
    fill_basis(params, pos + 1, remaining - a, current, out);
  }
  current[static_cast<std::size_t>(pos)] = 0;
}

}  // namespace

void TruncParams::validate() const {
  if (c < 1) throw InvalidArgument("c must be at least 1, got " + std::to_string(c));
  if (l < 0) throw InvalidArgument("l must be nonnegative, got " + std::to_string(l));
  require_prime(p);
}

BigInt trunc_dim(const TruncParams& params) {
  params.validate();
  const auto [c, p, l] = params;
  if (l > c * (p - 1)) return 0;
  BigInt sum = 0;
  for (std::int64_t j = 0; j <= c && j * p <= l; ++j) {
    BigInt term = binomial(c, j) * binomial(l - j * p + c - 1, c - 1);
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

std::vector<ExponentVector> enumerate_basis(const TruncParams& params) {
  const BigInt size = trunc_dim(params);
  if (size > kMaxBasisSize) {
    throw InvalidArgument("basis too large to enumerate (" + size.str() + " vectors)");
  }
  std::vector<ExponentVector> out;
  out.reserve(static_cast<std::size_t>(size));
  ExponentVector current(static_cast<std::size_t>(params.c), 0);
  fill_basis(params, 0, params.l, current, out);
  return out;
}

FiltrationRankTable filtration_ranks(std::int64_t c, std::int64_t p,
                                     std::optional<std::int64_t> ambient_dim) {
  TruncParams base{c, p, 0};
  base.validate();
  if (ambient_dim && *ambient_dim < c) {
    throw InvalidArgument("ambient dimension " + std::to_string(*ambient_dim) +
                          " is smaller than codimension " + std::to_string(c));
  }
  FiltrationRankTable table;
  table.c = c;
  table.p = p;
  table.ambient_dim = ambient_dim;
  const std::int64_t top = c * (p - 1);
  table.graded_ranks.reserve(static_cast<std::size_t>(top));
  for (std::int64_t i = 0; i < top; ++i) {
    table.graded_ranks.push_back(trunc_dim({c, p, i + 1}));
  }
  table.total_rank = ipow(p, c) - 1;
  if (ambient_dim) {
    table.pushforward_rank = ipow(p, *ambient_dim) - ipow(p, *ambient_dim - c);
  }
  return table;
}

}  // namespace frob
