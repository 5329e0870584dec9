// Cohomology of twisted differential forms on projective space (Bott's
// formula), Castelnuovo-Mumford regularity of Omega^k, and the exterior
// powers of T_X that the regularity argument makes ample or nef.
#pragma once

#include <cstdint>
#include <vector>

#include "frob/arith.hpp"

namespace frob::bott {

/// H^i(P^n, Omega^k(j)).
struct BottQuery {
  std::int64_t n = 1;
  std::int64_t k = 0;
  std::int64_t j = 0;
  std::int64_t i = 0;
};

/// dim H^i(Omega^k_{P^n}(j)). Nonzero only for
///   i = 0, j > k:      C(j+n-k, j) C(j-1, k)
///   i = k, j = 0:      1
///   i = n, j < k-n:    C(k-j, -j) C(-j-1, n-k)
BigInt bott_dim(const BottQuery& q);

struct VanishingCheck {
  std::int64_t i;
  std::int64_t twist;
  BigInt dim;
};

struct RegularityCertificate {
  bool regular = false;
  std::int64_t regularity;  // the m in "m-regular" that was checked (k+1)
  std::vector<VanishingCheck> checks;
};

/// Whether Omega^k_{P^n} is (k+1)-regular: H^i(Omega^k(k+1-i)) = 0 for i > 0.
RegularityCertificate cm_regular(std::int64_t n, std::int64_t k);

/// Inclusive ranges of i. A range with lo > hi is empty.
struct PositivityRange {
  std::int64_t ample_lo;
  std::int64_t ample_hi;
  std::int64_t nef_lo;
  std::int64_t nef_hi;

  bool ample_empty() const { return ample_lo > ample_hi; }
  bool nef_empty() const { return nef_lo > nef_hi; }
  friend bool operator==(const PositivityRange&, const PositivityRange&) = default;
};

/// Wedge^i T_X for smooth X in P^n with omega_X = O_X(-a).
PositivityRange wedge_t_range_index(std::int64_t dim_x, std::int64_t a);

/// Wedge^i T_X for a smooth degree-d hypersurface X in P^n.
PositivityRange wedge_t_range_hypersurface(std::int64_t n, std::int64_t d);

}  // namespace frob::bott
