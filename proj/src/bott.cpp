#include "frob/bott.hpp"

#include <algorithm>
#include <string>

namespace frob::bott {

namespace {

// Lower ends are clipped to 1 so that non-empty ranges lie inside [1, dim X].
PositivityRange make_range(std::int64_t dim_x, std::int64_t ample_lo, std::int64_t nef_lo) {
  return {std::max<std::int64_t>(ample_lo, 1), dim_x, std::max<std::int64_t>(nef_lo, 1), dim_x};
}

}  // namespace

BigInt bott_dim(const BottQuery& q) {
  const auto [n, k, j, i] = q;
  if (n < 1) throw InvalidArgument("n must be at least 1, got " + std::to_string(n));
  if (k < 0 || k > n) throw InvalidArgument("k must lie in [0, n], got " + std::to_string(k));
  if (i < 0 || i > n) throw InvalidArgument("i must lie in [0, n], got " + std::to_string(i));

  if (i == 0 && j > k) return binomial(j + n - k, j) * binomial(j - 1, k);
  if (i == k && j == 0) return 1;
  if (i == n && j < k - n) return binomial(k - j, -j) * binomial(-j - 1, n - k);
  return 0;
}

RegularityCertificate cm_regular(std::int64_t n, std::int64_t k) {
  if (n < 1) throw InvalidArgument("n must be at least 1, got " + std::to_string(n));
  if (k < 0 || k > n) throw InvalidArgument("k must lie in [0, n], got " + std::to_string(k));
  RegularityCertificate cert;
  cert.regularity = k + 1;
  cert.regular = true;
  for (std::int64_t i = 1; i <= n; ++i) {
    const std::int64_t twist = k + 1 - i;
    BigInt dim = bott_dim({n, k, twist, i});
    if (dim != 0) cert.regular = false;
    cert.checks.push_back({i, twist, std::move(dim)});
  }
  return cert;
}

PositivityRange wedge_t_range_index(std::int64_t dim_x, std::int64_t a) {
  if (dim_x < 1) throw InvalidArgument("dim X must be at least 1");
  if (a < 1) throw InvalidArgument("index a must be at least 1");
  return make_range(dim_x, dim_x - a + 2, dim_x - a + 1);
}

PositivityRange wedge_t_range_hypersurface(std::int64_t n, std::int64_t d) {
  if (n < 2) throw InvalidArgument("n must be at least 2");
  if (d < 1) throw InvalidArgument("degree must be at least 1");
  return make_range(n - 1, d, d - 1);
}

}  // namespace frob::bott
