// Numerical obstructions to ampleness of the dual Frobenius cokernel
// B_X^dual, driven by user-supplied witnesses (curves, linear subspaces,
// complete-intersection degrees, Fano threefold type).
//
// Witnesses are taken as facts. The engine never checks that a variety
// carrying the witness exists, and it answers Unknown whenever no rule fires.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frob/verdict.hpp"

namespace frob::obstruction {

/// One fired rule. `rule` is a stable identifier, `statement` the
/// mathematical fact the rule applies, `detail` the instantiated numbers.
struct TraceStep {
  std::string rule;
  std::string statement;
  std::string detail;
};

struct Verdict {
  Ampleness value = Ampleness::Unknown;
  std::vector<TraceStep> trace;
};

/// Smooth rational curve C with the given -K_X.C.
struct CurveWitness {
  std::int64_t anticanonical_degree = 0;
};

/// Z isomorphic to P^r with the given -K_X^{n-r}.Z.
struct SubspaceWitness {
  std::int64_t r = 1;
  std::int64_t degree = 0;
};

struct CompleteIntersectionInput {
  std::int64_t n = 0;
  std::vector<std::int64_t> degrees;
  std::int64_t p = 2;

  std::int64_t dim() const { return n - static_cast<std::int64_t>(degrees.size()); }
  /// Throws InvalidArgument on empty degrees, a degree < 1, dim < 1 or non-prime p.
  void validate() const;
};

enum class Fano3Kind { P3, Quadric, Other };

std::string_view to_string(Fano3Kind kind);
/// Parses "P3", "Quadric", "Other" (case-insensitive).
Fano3Kind parse_fano3_kind(std::string_view text);

Verdict curve_obstruction(const CurveWitness& w);

Verdict subspace_obstruction(const SubspaceWitness& w);

struct LineExistence {
  bool exists;
  std::int64_t grassmannian_dim;  // 2n - 2
  std::int64_t conditions;        // sum(d_i) + c
  std::int64_t dim_x;             // n - c
};

/// Dimension count for lines on a complete intersection of the given
/// degrees in P^n: lines exist when 2n-2 >= sum(d_i) + c and dim X >= 2.
LineExistence ci_line_exists(std::int64_t n, const std::vector<std::int64_t>& degrees);

Verdict ci_verdict(const CompleteIntersectionInput& input);

Verdict fano3_verdict(Fano3Kind kind, std::int64_t p,
                      std::optional<CurveWitness> witness = std::nullopt);

}  // namespace frob::obstruction
