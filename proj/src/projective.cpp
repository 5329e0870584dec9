#include "frob/projective.hpp"

#include <string>

#include "frob/trunc_sym.hpp"

namespace frob::projective {

namespace {

void check_args(std::int64_t n, std::int64_t p) {
  if (n < 1) throw InvalidArgument("n must be at least 1, got " + std::to_string(n));
  require_prime(p);
}

}  // namespace

BigInt PnTwistDecomposition::rank() const {
  BigInt r = 0;
  for (const auto& [m, mult] : summands) r += mult;
  return r;
}

std::int64_t PnTwistDecomposition::min_twist() const { return summands.begin()->first; }
std::int64_t PnTwistDecomposition::max_twist() const { return summands.rbegin()->first; }

PnTwistDecomposition fstar_decompose_pn(std::int64_t n, std::int64_t p, std::int64_t d) {
  check_args(n, p);
  PnTwistDecomposition out{n, p, d, {}};
  // Degrees of surviving monomials lie in [0, (n+1)(p-1)].
  const std::int64_t top = (n + 1) * (p - 1);
  const std::int64_t m_lo = ceil_div(d - top, p);
  const std::int64_t m_hi = floor_div(d, p);
  for (std::int64_t m = m_lo; m <= m_hi; ++m) {
    BigInt mult = trunc_dim({n + 1, p, d - p * m});
    if (mult != 0) out.summands.emplace(m, std::move(mult));
  }
  return out;
}

Positivity fstar_positivity(std::int64_t n, std::int64_t p, std::int64_t d) {
  const auto min_twist = fstar_decompose_pn(n, p, d).min_twist();
  if (min_twist >= 1) return Positivity::Ample;
  if (min_twist >= 0) return Positivity::NefNotAmple;
  return Positivity::NotNef;
}

ThresholdScan threshold_scan(std::int64_t n, std::int64_t p, std::int64_t lo, std::int64_t hi) {
  check_args(n, p);
  if (lo > hi) throw InvalidArgument("empty scan range");
  std::optional<std::int64_t> nef;
  std::optional<std::int64_t> ample;
  for (std::int64_t d = lo; d <= hi && !ample; ++d) {
    const auto v = fstar_positivity(n, p, d);
    if (!nef && is_nef(v)) nef = d;
    if (v == Positivity::Ample) ample = d;
  }
  const std::string range = "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
  if (nef == lo || ample == lo) {
    throw InvalidArgument("scan range " + range +
                          " starts at or above a threshold; lower the start");
  }
  if (!nef) throw InvalidArgument("no nef twist in scan range " + range + "; raise the end");
  if (!ample) throw InvalidArgument("no ample twist in scan range " + range + "; raise the end");
  return {*nef, *ample};
}

}  // namespace frob::projective
