// Smooth complete toric varieties given by fans, positivity of torus-invariant
// divisors, and the splitting of Frobenius pushforwards into line bundles.
//
// A divisor D = sum a_rho D_rho is stored by its raw coefficient vector.
// Two divisors are linearly equivalent iff their difference is the divisor
// of a character, sum <m, v_rho> D_rho for some m in the character lattice.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frob/arith.hpp"
#include "frob/verdict.hpp"

namespace frob::toric {

using IntVec = std::vector<std::int64_t>;
using RayIndices = std::vector<std::size_t>;

/// Raw fan data as read from input. Not necessarily valid.
struct Fan {
  std::int64_t dim = 0;
  std::vector<IntVec> rays;
  std::vector<RayIndices> cones;  // maximal cones
};

enum class FanViolationKind {
  BadDimension,
  NoCones,
  RayWrongLength,
  ZeroRay,
  NonPrimitiveRay,
  DuplicateRay,
  UnusedRay,
  ConeWrongSize,
  ConeIndexOutOfRange,
  ConeRepeatedRay,
  DuplicateCone,
  NonSmoothCone,
  IncompleteFacet,
  OvercoveredFacet,
  OverlappingCones,
  Disconnected,
};

std::string_view to_string(FanViolationKind kind);

struct FanViolation {
  FanViolationKind kind;
  std::string message;
  /// Ray or cone indices the violation is about (facet rays for facet errors).
  std::vector<std::size_t> location;
  std::optional<BigInt> determinant;  // set for NonSmoothCone
};

/// Empty iff the fan is well formed, smooth and passes the completeness
/// certificate: every facet of a maximal cone lies in exactly two maximal
/// cones that sit on opposite sides of it, and the cones are connected
/// through facets. This certifies completeness only up to a covering
/// degree; we accept that limitation for the small fans handled here.
std::vector<FanViolation> validate_fan(const Fan& fan);

class InvalidFan : public InvalidArgument {
 public:
  explicit InvalidFan(std::vector<FanViolation> violations);
  const std::vector<FanViolation>& violations() const { return violations_; }

 private:
  std::vector<FanViolation> violations_;
};

struct ToricDivisor {
  IntVec coeffs;

  friend bool operator==(const ToricDivisor&, const ToricDivisor&) = default;
  friend auto operator<=>(const ToricDivisor&, const ToricDivisor&) = default;
};

/// A validated, immutable smooth complete fan with per-cone inverse ray
/// matrices cached for solving <m, v_i> = b_i on a maximal cone.
class SmoothCompleteFan {
 public:
  /// Throws InvalidFan when validate_fan reports anything.
  explicit SmoothCompleteFan(Fan fan);

  const Fan& fan() const { return fan_; }
  std::int64_t dim() const { return fan_.dim; }
  std::size_t num_rays() const { return fan_.rays.size(); }
  std::size_t num_cones() const { return fan_.cones.size(); }
  const IntVec& ray(std::size_t i) const { return fan_.rays[i]; }
  const RayIndices& cone(std::size_t i) const { return fan_.cones[i]; }

  /// The unique m with <m, v> = values[k] for the k-th ray v of the cone.
  IntVec solve_on_cone(std::size_t cone_index, std::span<const std::int64_t> values) const;

  /// <m, v_rho> for every ray.
  IntVec pairings(std::span<const std::int64_t> m) const;

  /// Throws InvalidArgument unless the divisor has one coefficient per ray.
  void check_divisor(const ToricDivisor& d) const;

 private:
  Fan fan_;
  // cone_inverse_[s] is the integer inverse of the matrix whose rows are
  // the rays of cone s (row-major, dim x dim).
  std::vector<IntVec> cone_inverse_;
};

/// Divisor of the character m: coefficients <m, v_rho>.
ToricDivisor character_divisor(const SmoothCompleteFan& fan, std::span<const std::int64_t> m);

/// The character m with character_divisor(m) == d, if d is principal.
std::optional<IntVec> principal_character(const SmoothCompleteFan& fan, const ToricDivisor& d);

bool linearly_equivalent(const SmoothCompleteFan& fan, const ToricDivisor& a,
                         const ToricDivisor& b);

/// Where the cone-by-cone criterion fails: for cone `cone` with local
/// datum m_cone, the ray `ray` has <m_cone, v_ray> = pairing against the
/// bound -a_ray (pairing < bound: not nef; equal with ray outside the
/// cone: not strictly convex).
struct PositivityWitness {
  std::size_t cone;
  std::size_t ray;
  std::int64_t pairing;
  std::int64_t bound;
};

struct PositivityVerdict {
  Positivity value;
  std::optional<PositivityWitness> witness;  // set unless Ample
};

PositivityVerdict divisor_positivity(const SmoothCompleteFan& fan, const ToricDivisor& d);
PositivityVerdict divisor_positivity(const Fan& fan, const ToricDivisor& d);

struct LineBundleSummand {
  ToricDivisor divisor;
  std::uint64_t multiplicity = 0;

  friend bool operator==(const LineBundleSummand&, const LineBundleSummand&) = default;
};

/// Multiset of line bundles, aggregated by raw divisor and sorted
/// lexicographically by coefficient vector.
struct LineBundleDecomposition {
  std::vector<LineBundleSummand> summands;

  std::uint64_t rank() const;
};

/// F_* O(D) as the sum over residues u in {0..p-1}^n of
/// O(sum floor((a_rho + <u, v_rho>) / p) D_rho).
LineBundleDecomposition frobenius_pushforward(const SmoothCompleteFan& fan, const ToricDivisor& d,
                                              std::int64_t p);
LineBundleDecomposition frobenius_pushforward(const Fan& fan, const ToricDivisor& d,
                                              std::int64_t p);

/// B_X = F_* O_X with one trivial summand removed.
LineBundleDecomposition frobenius_cokernel(const SmoothCompleteFan& fan, std::int64_t p);
LineBundleDecomposition frobenius_cokernel(const Fan& fan, std::int64_t p);

struct BundleVerdict {
  Ampleness value;
  /// Offending summand of B_X for NotAmple.
  std::optional<ToricDivisor> witness;
  /// Positivity of the divisor that was tested (the summand or its negative).
  std::optional<PositivityVerdict> witness_positivity;
};

/// B_X^dual is ample iff every summand L of B_X has -L ample.
BundleVerdict bx_dual_ample(const SmoothCompleteFan& fan, std::int64_t p);
BundleVerdict bx_dual_ample(const Fan& fan, std::int64_t p);

/// B_X is ample iff every summand of B_X is ample.
BundleVerdict bx_ample(const SmoothCompleteFan& fan, std::int64_t p);
BundleVerdict bx_ample(const Fan& fan, std::int64_t p);

namespace fans {

/// Rays e_1..e_n, -(e_1+...+e_n); cones are all n-subsets.
Fan projective_space(std::int64_t n);

/// Product fan; rays of `b` are appended after those of `a`.
Fan product(const Fan& a, const Fan& b);

/// Rays e1, e2, -e1 + a e2, -e2.
Fan hirzebruch(std::int64_t a);

/// P^2 blown up at the torus-fixed point of the cone <e1, e2>: rays e1,
/// e1+e2, e2, -e1-e2.
Fan blowup_p2_at_point();

}  // namespace fans

}  // namespace frob::toric
