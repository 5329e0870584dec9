// F_* O_{P^n}(d) as a sum of twists O(m), and its positivity thresholds.
//
// The multiplicity of O(m) is the number of monomials x^a with
// a in [0, p-1]^{n+1} and sum(a) = d - p m.
#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "frob/arith.hpp"
#include "frob/verdict.hpp"

namespace frob::projective {

struct PnTwistDecomposition {
  std::int64_t n = 0;
  std::int64_t p = 0;
  std::int64_t d = 0;
  /// twist m -> multiplicity (only nonzero multiplicities are stored).
  std::map<std::int64_t, BigInt> summands;

  BigInt rank() const;
  std::int64_t min_twist() const;
  std::int64_t max_twist() const;
};

PnTwistDecomposition fstar_decompose_pn(std::int64_t n, std::int64_t p, std::int64_t d);

Positivity fstar_positivity(std::int64_t n, std::int64_t p, std::int64_t d);

struct ThresholdScan {
  std::int64_t min_nef_d;
  std::int64_t min_ample_d;
};

/// Smallest d in [lo, hi] at which F_* O(d) becomes nef, resp. ample.
/// Throws InvalidArgument when the range cannot certify a threshold: lo is
/// already past it, or nothing in range reaches it.
ThresholdScan threshold_scan(std::int64_t n, std::int64_t p, std::int64_t lo, std::int64_t hi);

}  // namespace frob::projective
