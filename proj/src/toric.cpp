#include "frob/toric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace frob::toric {

namespace {

constexpr std::int64_t kMaxResidues = 10'000'000;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("toric: integer overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("toric: integer overflow");
  return r;
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

// Fraction-free (Bareiss) determinant of the matrix whose rows are `rows`.
BigInt determinant(const std::vector<IntVec>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = rows[i][j];

  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Integer inverse of a unimodular matrix (rows given), row-major.
IntVec unimodular_inverse(const std::vector<IntVec>& rows) {
  const std::size_t n = rows.size();
  std::vector<std::vector<BigRational>> a(n, std::vector<BigRational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("unimodular_inverse: singular matrix");
    std::swap(a[col], a[pivot]);
    const BigRational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const BigRational f = a[r][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  IntVec out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const BigRational& x = a[i][n + j];
      if (denominator(x) != 1) throw std::logic_error("unimodular_inverse: non-integral entry");
      out[i * n + j] = static_cast<std::int64_t>(numerator(x));
    }
  }
  return out;
}

std::vector<IntVec> cone_rows(const Fan& fan, const RayIndices& cone) {
  std::vector<IntVec> rows;
  rows.reserve(cone.size());
  for (auto idx : cone) rows.push_back(fan.rays[idx]);
  return rows;
}

std::string join_indices(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

std::int64_t gcd_of(const IntVec& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

LineBundleDecomposition aggregate(const std::map<IntVec, std::uint64_t>& counts) {
  LineBundleDecomposition out;
  out.summands.reserve(counts.size());
  for (const auto& [coeffs, mult] : counts) out.summands.push_back({ToricDivisor{coeffs}, mult});
  return out;
}

}  // namespace

std::string_view to_string(FanViolationKind kind) {
  switch (kind) {
    case FanViolationKind::BadDimension: return "bad-dimension";
    case FanViolationKind::NoCones: return "no-cones";
    case FanViolationKind::RayWrongLength: return "ray-wrong-length";
    case FanViolationKind::ZeroRay: return "zero-ray";
    case FanViolationKind::NonPrimitiveRay: return "non-primitive-ray";
    case FanViolationKind::DuplicateRay: return "duplicate-ray";
    case FanViolationKind::UnusedRay: return "unused-ray";
    case FanViolationKind::ConeWrongSize: return "cone-wrong-size";
    case FanViolationKind::ConeIndexOutOfRange: return "cone-index-out-of-range";
    case FanViolationKind::ConeRepeatedRay: return "cone-repeated-ray";
    case FanViolationKind::DuplicateCone: return "duplicate-cone";
    case FanViolationKind::NonSmoothCone: return "non-smooth-cone";
    case FanViolationKind::IncompleteFacet: return "incomplete-facet";
    case FanViolationKind::OvercoveredFacet: return "overcovered-facet";
    case FanViolationKind::OverlappingCones: return "overlapping-cones";
    case FanViolationKind::Disconnected: return "disconnected";
  }
  return "?";
}

std::vector<FanViolation> validate_fan(const Fan& fan) {
  std::vector<FanViolation> out;
  auto report = [&out](FanViolationKind kind, std::string msg, std::vector<std::size_t> loc,
                       std::optional<BigInt> det = std::nullopt) {
    out.push_back({kind, std::move(msg), std::move(loc), std::move(det)});
  };

  if (fan.dim < 1) {
    report(FanViolationKind::BadDimension, "dimension must be at least 1", {});
    return out;
  }
  const auto n = static_cast<std::size_t>(fan.dim);

  bool rays_ok = true;
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    const auto& r = fan.rays[i];
    if (r.size() != n) {
      report(FanViolationKind::RayWrongLength,
             "ray " + std::to_string(i) + " has " + std::to_string(r.size()) + " entries", {i});
      rays_ok = false;
      continue;
    }
    const auto g = gcd_of(r);
    if (g == 0) {
      report(FanViolationKind::ZeroRay, "ray " + std::to_string(i) + " is zero", {i});
      rays_ok = false;
    } else if (g != 1) {
      report(FanViolationKind::NonPrimitiveRay,
             "ray " + std::to_string(i) + " is not primitive (gcd " + std::to_string(g) + ")", {i});
      rays_ok = false;
    }
  }
  {
    std::map<IntVec, std::size_t> seen;
    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
      auto [it, fresh] = seen.emplace(fan.rays[i], i);
      if (!fresh) {
        report(FanViolationKind::DuplicateRay,
               "rays " + std::to_string(it->second) + " and " + std::to_string(i) + " coincide",
               {it->second, i});
        rays_ok = false;
      }
    }
  }

  if (fan.cones.empty()) {
    report(FanViolationKind::NoCones, "fan has no maximal cones", {});
    return out;
  }

  // Per-cone checks. Only well-formed cones take part in facet analysis.
  std::vector<bool> cone_ok(fan.cones.size(), false);
  std::vector<RayIndices> sorted_cones(fan.cones.size());
  std::vector<bool> ray_used(fan.rays.size(), false);
  std::map<RayIndices, std::size_t> cone_seen;
  for (std::size_t s = 0; s < fan.cones.size(); ++s) {
    const auto& cone = fan.cones[s];
    if (cone.size() != n) {
      report(FanViolationKind::ConeWrongSize,
             "cone " + std::to_string(s) + " has " + std::to_string(cone.size()) +
                 " rays, expected " + std::to_string(n),
             {s});
      continue;
    }
    bool in_range = true;
    for (auto idx : cone) {
      if (idx >= fan.rays.size()) in_range = false;
      else ray_used[idx] = true;
    }
    if (!in_range) {
      report(FanViolationKind::ConeIndexOutOfRange,
             "cone " + std::to_string(s) + " references a missing ray", {s});
      continue;
    }
    RayIndices sorted = cone;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      report(FanViolationKind::ConeRepeatedRay,
             "cone " + std::to_string(s) + " repeats a ray", {s});
      continue;
    }
    auto [it, fresh] = cone_seen.emplace(sorted, s);
    if (!fresh) {
      report(FanViolationKind::DuplicateCone,
             "cones " + std::to_string(it->second) + " and " + std::to_string(s) + " coincide",
             {it->second, s});
      continue;
    }
    sorted_cones[s] = sorted;
    if (!rays_ok) continue;
    const BigInt det = determinant(cone_rows(fan, sorted));
    if (det != 1 && det != -1) {
      report(FanViolationKind::NonSmoothCone,
             "cone " + std::to_string(s) + " " + join_indices(cone) + " has determinant " +
                 det.str(),
             {s}, det);
      continue;
    }
    cone_ok[s] = true;
  }
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    if (!ray_used[i]) {
      report(FanViolationKind::UnusedRay,
             "ray " + std::to_string(i) + " lies in no maximal cone", {i});
    }
  }
  if (!rays_ok) return out;

  // Facets: sorted (n-1)-subsets -> (cone, ray opposite the facet).
  std::map<RayIndices, std::vector<std::pair<std::size_t, std::size_t>>> facets;
  for (std::size_t s = 0; s < fan.cones.size(); ++s) {
    if (!cone_ok[s]) continue;
    const auto& cone = sorted_cones[s];
    for (std::size_t drop = 0; drop < n; ++drop) {
      RayIndices facet;
      facet.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k)
        if (k != drop) facet.push_back(cone[k]);
      facets[facet].emplace_back(s, cone[drop]);
    }
  }

  std::vector<std::vector<std::size_t>> adjacency(fan.cones.size());
  for (const auto& [facet, incident] : facets) {
    if (incident.size() == 1) {
      report(FanViolationKind::IncompleteFacet,
             "facet " + join_indices(facet) + " of cone " + std::to_string(incident[0].first) +
                 " lies in only one maximal cone",
             facet);
      continue;
    }
    if (incident.size() > 2) {
      report(FanViolationKind::OvercoveredFacet,
             "facet " + join_indices(facet) + " lies in " + std::to_string(incident.size()) +
                 " maximal cones",
             facet);
      continue;
    }
    auto rows = cone_rows(fan, facet);
    rows.push_back(fan.rays[incident[0].second]);
    const BigInt d0 = determinant(rows);
    rows.back() = fan.rays[incident[1].second];
    const BigInt d1 = determinant(rows);
    if (d0 * d1 >= 0) {
      report(FanViolationKind::OverlappingCones,
             "cones " + std::to_string(incident[0].first) + " and " +
                 std::to_string(incident[1].first) + " lie on the same side of facet " +
                 join_indices(facet),
             {incident[0].first, incident[1].first});
      continue;
    }
    adjacency[incident[0].first].push_back(incident[1].first);
    adjacency[incident[1].first].push_back(incident[0].first);
  }

  // Connectivity of the well-formed cones through shared facets.
  std::vector<std::size_t> good;
  for (std::size_t s = 0; s < fan.cones.size(); ++s)
    if (cone_ok[s]) good.push_back(s);
  if (!good.empty()) {
    std::vector<bool> reached(fan.cones.size(), false);
    std::queue<std::size_t> frontier;
    frontier.push(good.front());
    reached[good.front()] = true;
    while (!frontier.empty()) {
      const auto s = frontier.front();
      frontier.pop();
      for (auto t : adjacency[s]) {
        if (!reached[t]) {
          reached[t] = true;
          frontier.push(t);
        }
      }
    }
    std::vector<std::size_t> unreached;
    for (auto s : good)
      if (!reached[s]) unreached.push_back(s);
    if (!unreached.empty()) {
      report(FanViolationKind::Disconnected,
             "cones " + join_indices(unreached) + " are not connected to cone " +
                 std::to_string(good.front()) + " through facets",
             unreached);
    }
  }
  return out;
}

InvalidFan::InvalidFan(std::vector<FanViolation> violations)
    : InvalidArgument("invalid fan: " +
                      (violations.empty() ? std::string("unknown") : violations.front().message) +
                      (violations.size() > 1
                           ? " (+" + std::to_string(violations.size() - 1) + " more)"
                           : std::string())),
      violations_(std::move(violations)) {}

SmoothCompleteFan::SmoothCompleteFan(Fan fan) : fan_(std::move(fan)) {
  auto violations = validate_fan(fan_);
  if (!violations.empty()) throw InvalidFan(std::move(violations));
  cone_inverse_.reserve(fan_.cones.size());
  for (const auto& cone : fan_.cones) cone_inverse_.push_back(unimodular_inverse(cone_rows(fan_, cone)));
}

IntVec SmoothCompleteFan::solve_on_cone(std::size_t cone_index,
                                        std::span<const std::int64_t> values) const {
  const auto n = static_cast<std::size_t>(fan_.dim);
  if (values.size() != n) throw InvalidArgument("solve_on_cone: wrong number of values");
  // Rows of A are the cone's rays, so A m = values and m = A^{-1} values.
  const auto& inv = cone_inverse_.at(cone_index);
  IntVec m(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    m[i] = dot(std::span(inv).subspan(i * n, n), values);
  return m;
}

IntVec SmoothCompleteFan::pairings(std::span<const std::int64_t> m) const {
  if (m.size() != static_cast<std::size_t>(fan_.dim))
    throw InvalidArgument("pairings: character has wrong length");
  IntVec out;
  out.reserve(fan_.rays.size());
  for (const auto& v : fan_.rays) out.push_back(dot(m, v));
  return out;
}

void SmoothCompleteFan::check_divisor(const ToricDivisor& d) const {
  if (d.coeffs.size() != fan_.rays.size()) {
    throw InvalidArgument("divisor has " + std::to_string(d.coeffs.size()) +
                          " coefficients but the fan has " + std::to_string(fan_.rays.size()) +
                          " rays");
  }
}

ToricDivisor character_divisor(const SmoothCompleteFan& fan, std::span<const std::int64_t> m) {
  return ToricDivisor{fan.pairings(m)};
}

std::optional<IntVec> principal_character(const SmoothCompleteFan& fan, const ToricDivisor& d) {
  fan.check_divisor(d);
  // Rays of one maximal cone form a basis, so m is pinned down there.
  const auto& cone = fan.cone(0);
  IntVec local;
  local.reserve(cone.size());
  for (auto idx : cone) local.push_back(d.coeffs[idx]);
  IntVec m = fan.solve_on_cone(0, local);
  if (fan.pairings(m) != d.coeffs) return std::nullopt;
  return m;
}

bool linearly_equivalent(const SmoothCompleteFan& fan, const ToricDivisor& a,
                         const ToricDivisor& b) {
  fan.check_divisor(a);
  fan.check_divisor(b);
  ToricDivisor diff{a.coeffs};
  for (std::size_t i = 0; i < diff.coeffs.size(); ++i)
    diff.coeffs[i] = checked_add(diff.coeffs[i], -b.coeffs[i]);
  return principal_character(fan, diff).has_value();
}

PositivityVerdict divisor_positivity(const SmoothCompleteFan& fan, const ToricDivisor& d) {
  fan.check_divisor(d);
  std::optional<PositivityWitness> first_flat;
  for (std::size_t s = 0; s < fan.num_cones(); ++s) {
    const auto& cone = fan.cone(s);
    IntVec local;
    local.reserve(cone.size());
    for (auto idx : cone) local.push_back(-d.coeffs[idx]);
    const IntVec m = fan.solve_on_cone(s, local);
    const IntVec pair = fan.pairings(m);
    for (std::size_t r = 0; r < fan.num_rays(); ++r) {
      if (std::find(cone.begin(), cone.end(), r) != cone.end()) continue;
      const std::int64_t bound = -d.coeffs[r];
      if (pair[r] < bound) return {Positivity::NotNef, PositivityWitness{s, r, pair[r], bound}};
      if (pair[r] == bound && !first_flat) first_flat = PositivityWitness{s, r, pair[r], bound};
    }
  }
  if (first_flat) return {Positivity::NefNotAmple, first_flat};
  return {Positivity::Ample, std::nullopt};
}

PositivityVerdict divisor_positivity(const Fan& fan, const ToricDivisor& d) {
  return divisor_positivity(SmoothCompleteFan(fan), d);
}

std::uint64_t LineBundleDecomposition::rank() const {
  std::uint64_t r = 0;
  for (const auto& s : summands) r += s.multiplicity;
  return r;
}

LineBundleDecomposition frobenius_pushforward(const SmoothCompleteFan& fan, const ToricDivisor& d,
                                              std::int64_t p) {
  require_prime(p);
  fan.check_divisor(d);
  const auto n = static_cast<std::size_t>(fan.dim());
  if (ipow(p, fan.dim()) > kMaxResidues) {
    throw InvalidArgument("p^n exceeds the residue enumeration limit of " +
                          std::to_string(kMaxResidues));
  }

  std::map<IntVec, std::uint64_t> counts;
  IntVec u(n, 0);
  IntVec coeffs(fan.num_rays());
  while (true) {
    const IntVec pair = fan.pairings(u);
    for (std::size_t r = 0; r < coeffs.size(); ++r)
      coeffs[r] = floor_div(checked_add(d.coeffs[r], pair[r]), p);
    ++counts[coeffs];

    // Odometer over {0, ..., p-1}^n.
    std::size_t k = 0;
    while (k < n && u[k] == p - 1) u[k++] = 0;
    if (k == n) break;
    ++u[k];
  }
  return aggregate(counts);
}

LineBundleDecomposition frobenius_pushforward(const Fan& fan, const ToricDivisor& d,
                                              std::int64_t p) {
  return frobenius_pushforward(SmoothCompleteFan(fan), d, p);
}

LineBundleDecomposition frobenius_cokernel(const SmoothCompleteFan& fan, std::int64_t p) {
  auto decomposition =
      frobenius_pushforward(fan, ToricDivisor{IntVec(fan.num_rays(), 0)}, p);
  auto& summands = decomposition.summands;
  auto trivial = std::find_if(summands.begin(), summands.end(), [&](const LineBundleSummand& s) {
    return principal_character(fan, s.divisor).has_value();
  });
  if (trivial == summands.end()) {
    throw std::logic_error("frobenius_cokernel: F_*O_X has no trivial summand");
  }
  if (--trivial->multiplicity == 0) summands.erase(trivial);
  return decomposition;
}

LineBundleDecomposition frobenius_cokernel(const Fan& fan, std::int64_t p) {
  return frobenius_cokernel(SmoothCompleteFan(fan), p);
}

BundleVerdict bx_dual_ample(const SmoothCompleteFan& fan, std::int64_t p) {
  const auto cokernel = frobenius_cokernel(fan, p);
  for (const auto& s : cokernel.summands) {
    ToricDivisor negated = s.divisor;
    for (auto& a : negated.coeffs) a = -a;
    auto verdict = divisor_positivity(fan, negated);
    if (verdict.value != Positivity::Ample) {
      return {Ampleness::NotAmple, s.divisor, std::move(verdict)};
    }
  }
  return {Ampleness::Ample, std::nullopt, std::nullopt};
}

BundleVerdict bx_dual_ample(const Fan& fan, std::int64_t p) {
  return bx_dual_ample(SmoothCompleteFan(fan), p);
}

BundleVerdict bx_ample(const SmoothCompleteFan& fan, std::int64_t p) {
  const auto cokernel = frobenius_cokernel(fan, p);
  for (const auto& s : cokernel.summands) {
    auto verdict = divisor_positivity(fan, s.divisor);
    if (verdict.value != Positivity::Ample) {
      return {Ampleness::NotAmple, s.divisor, std::move(verdict)};
    }
  }
  return {Ampleness::Ample, std::nullopt, std::nullopt};
}

BundleVerdict bx_ample(const Fan& fan, std::int64_t p) {
  return bx_ample(SmoothCompleteFan(fan), p);
}

namespace fans {

Fan projective_space(std::int64_t n) {
  if (n < 1) throw InvalidArgument("projective_space: n must be at least 1");
  const auto dim = static_cast<std::size_t>(n);
  Fan fan;
  fan.dim = n;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVec e(dim, 0);
    e[i] = 1;
    fan.rays.push_back(std::move(e));
  }
  fan.rays.emplace_back(dim, -1);
  for (std::size_t skip = 0; skip <= dim; ++skip) {
    RayIndices cone;
    for (std::size_t r = 0; r <= dim; ++r)
      if (r != skip) cone.push_back(r);
    fan.cones.push_back(std::move(cone));
  }
  return fan;
}

Fan product(const Fan& a, const Fan& b) {
  Fan fan;
  fan.dim = a.dim + b.dim;
  const auto da = static_cast<std::size_t>(a.dim);
  const auto db = static_cast<std::size_t>(b.dim);
  for (const auto& r : a.rays) {
    IntVec v(da + db, 0);
    std::copy(r.begin(), r.end(), v.begin());
    fan.rays.push_back(std::move(v));
  }
  for (const auto& r : b.rays) {
    IntVec v(da + db, 0);
    std::copy(r.begin(), r.end(), v.begin() + static_cast<std::ptrdiff_t>(da));
    fan.rays.push_back(std::move(v));
  }
  for (const auto& ca : a.cones) {
    for (const auto& cb : b.cones) {
      RayIndices cone = ca;
      for (auto idx : cb) cone.push_back(idx + a.rays.size());
      fan.cones.push_back(std::move(cone));
    }
  }
  return fan;
}

Fan hirzebruch(std::int64_t a) {
  return Fan{2, {{1, 0}, {0, 1}, {-1, a}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
}

Fan blowup_p2_at_point() {
  return Fan{2, {{1, 0}, {1, 1}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
}

}  // namespace fans

}  // namespace frob::toric
