#include "frob/obstruction.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "frob/arith.hpp"

namespace frob::obstruction {

namespace {

constexpr const char* kCurveStatement =
    "a smooth rational curve C with -K_X.C <= 2 has det(N_C/X)^(1-p) effective, "
    "so B_X^dual is not ample";
constexpr const char* kSubspaceStatement =
    "a subvariety Z = P^r with -K_X^(n-r).Z <= r+1 has det(N_Z/X)^(1-p) effective, "
    "so B_X^dual is not ample";

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

void CompleteIntersectionInput::validate() const {
  if (degrees.empty()) throw InvalidArgument("complete intersection needs at least one degree");
  for (auto d : degrees) {
    if (d < 1) throw InvalidArgument("hypersurface degrees must be >= 1, got " + std::to_string(d));
  }
  if (dim() < 1) {
    throw InvalidArgument("complete intersection of " + std::to_string(degrees.size()) +
                          " hypersurfaces in P^" + std::to_string(n) + " has dimension < 1");
  }
  require_prime(p);
}

std::string_view to_string(Fano3Kind kind) {
  switch (kind) {
    case Fano3Kind::P3: return "P3";
    case Fano3Kind::Quadric: return "Quadric";
    case Fano3Kind::Other: return "Other";
  }
  return "?";
}

Fano3Kind parse_fano3_kind(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "p3") return Fano3Kind::P3;
  if (lower == "quadric") return Fano3Kind::Quadric;
  if (lower == "other") return Fano3Kind::Other;
  throw InvalidArgument("unknown Fano threefold kind '" + std::string(text) +
                        "' (expected P3, Quadric or Other)");
}

Verdict curve_obstruction(const CurveWitness& w) {
  const auto deg = w.anticanonical_degree;
  if (deg <= 2) {
    return {Ampleness::NotAmple,
            {{"curve-obstruction", kCurveStatement, "-K_X.C = " + std::to_string(deg) + " <= 2"}}};
  }
  return {Ampleness::Unknown, {}};
}

Verdict subspace_obstruction(const SubspaceWitness& w) {
  if (w.r < 1) throw InvalidArgument("subspace dimension r must be at least 1");
  if (w.degree <= w.r + 1) {
    return {Ampleness::NotAmple,
            {{"subspace-obstruction", kSubspaceStatement,
              "r = " + std::to_string(w.r) + ", -K_X^(n-r).Z = " + std::to_string(w.degree) +
                  " <= " + std::to_string(w.r + 1)}}};
  }
  return {Ampleness::Unknown, {}};
}

LineExistence ci_line_exists(std::int64_t n, const std::vector<std::int64_t>& degrees) {
  const auto c = static_cast<std::int64_t>(degrees.size());
  const std::int64_t sum = std::accumulate(degrees.begin(), degrees.end(), std::int64_t{0});
  LineExistence out{false, 2 * n - 2, sum + c, n - c};
  out.exists = out.grassmannian_dim >= out.conditions && out.dim_x >= 2;
  return out;
}

Verdict ci_verdict(const CompleteIntersectionInput& input) {
  input.validate();
  Verdict verdict;
  auto& trace = verdict.trace;

  // Linear equations only cut down the ambient space.
  std::vector<std::int64_t> degrees;
  std::copy_if(input.degrees.begin(), input.degrees.end(), std::back_inserter(degrees),
               [](std::int64_t d) { return d >= 2; });
  const auto linear = static_cast<std::int64_t>(input.degrees.size() - degrees.size());
  const std::int64_t n = input.n - linear;
  if (linear > 0) {
    trace.push_back({"ci-linear-sections",
                     "hyperplane equations cut out a linear subspace; drop them and lower n",
                     std::to_string(linear) + " linear equation(s): ambient P^" +
                         std::to_string(input.n) + " -> P^" + std::to_string(n)});
  }
  const std::int64_t dim_x = n - static_cast<std::int64_t>(degrees.size());
  const std::int64_t sum = std::accumulate(degrees.begin(), degrees.end(), std::int64_t{0});

  if (degrees.empty()) {
    trace.push_back({"ci-projective-space", "projective space has ample B_X^dual",
                     "X = P^" + std::to_string(dim_x)});
    verdict.value = Ampleness::Ample;
    return verdict;
  }
  if (degrees.size() == 1 && degrees[0] == 2 && dim_x >= 3 && input.p != 2) {
    trace.push_back({"ci-quadric",
                     "a smooth quadric of dimension >= 3 in characteristic p != 2 has ample "
                     "B_X^dual",
                     "quadric of dimension " + std::to_string(dim_x) + ", p = " +
                         std::to_string(input.p)});
    verdict.value = Ampleness::Ample;
    return verdict;
  }
  if ((sum == n - 1 || sum == n) && dim_x >= 2) {
    const auto lines = ci_line_exists(n, degrees);
    trace.push_back({"ci-line-dimension-count",
                     "the Grassmannian of lines in P^n has dimension 2n-2 and containing a line "
                     "imposes sum(d_i)+c conditions",
                     std::to_string(lines.grassmannian_dim) + " >= " +
                         std::to_string(lines.conditions) + ": " +
                         (lines.exists ? "X contains a line" : "no line guaranteed")});
    if (lines.exists) {
      const std::int64_t k_dot_line = n + 1 - sum;
      trace.push_back({"ci-line-degree", "a line C on X has -K_X.C = n+1-sum(d_i)",
                       "degrees " + join(degrees) + " in P^" + std::to_string(n) +
                           ": -K_X.C = " + std::to_string(k_dot_line)});
      auto curve = curve_obstruction({k_dot_line});
      trace.insert(trace.end(), curve.trace.begin(), curve.trace.end());
      verdict.value = curve.value;
      // The NotAmple conclusion comes from the curve rule; put it first.
      if (verdict.value == Ampleness::NotAmple) {
        std::rotate(trace.begin(), trace.end() - 1, trace.end());
      }
      return verdict;
    }
  }
  if (sum >= n + 1) {
    trace.insert(trace.begin(),
                 {"ci-not-fano",
                  "B_X^dual ample forces X to be Fano; sum(d_i) >= n+1 means -K_X is not ample",
                  "sum(d_i) = " + std::to_string(sum) + " >= n+1 = " + std::to_string(n + 1)});
    verdict.value = Ampleness::NotAmple;
    return verdict;
  }
  trace.push_back({"ci-open-case", "no implemented rule decides this complete intersection",
                   "degrees " + join(degrees) + " in P^" + std::to_string(n) + ", dim X = " +
                       std::to_string(dim_x)});
  verdict.value = Ampleness::Unknown;
  return verdict;
}

Verdict fano3_verdict(Fano3Kind kind, std::int64_t p, std::optional<CurveWitness> witness) {
  require_prime(p);
  if (witness) {
    auto curve = curve_obstruction(*witness);
    if (curve.value == Ampleness::NotAmple) return curve;
  }
  constexpr const char* statement =
      "a Fano threefold has ample B_X^dual iff it is P^3 or the quadric threefold with p != 2";
  const std::string detail =
      "kind " + std::string(to_string(kind)) + ", p = " + std::to_string(p);
  switch (kind) {
    case Fano3Kind::P3:
      return {Ampleness::Ample, {{"fano3-classification", statement, detail}}};
    case Fano3Kind::Quadric:
      if (p != 2) return {Ampleness::Ample, {{"fano3-classification", statement, detail}}};
      return {Ampleness::Unknown,
              {{"fano3-quadric-char-2",
                "the classification settles the quadric threefold only for p != 2", detail}}};
    case Fano3Kind::Other:
      return {Ampleness::NotAmple, {{"fano3-classification", statement, detail}}};
  }
  return {};
}

}  // namespace frob::obstruction
