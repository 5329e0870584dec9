#include "frob/acceptance.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "frob/bott.hpp"
#include "frob/cartier_ranks.hpp"
#include "frob/obstruction.hpp"
#include "frob/oracles.hpp"
#include "frob/projective.hpp"
#include "frob/toric.hpp"
#include "frob/trunc_sym.hpp"

namespace frob::acceptance {

namespace {

// A check returns an empty string on success, otherwise the first mismatch.
using Check = std::function<std::string(int& cases)>;

template <typename... Args>
std::string describe(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

std::string check_truncated_box(int& cases) {
  for (std::int64_t c = 1; c <= 4; ++c) {
    for (std::int64_t p : {2, 3, 5}) {
      const std::int64_t top = c * (p - 1);
      BigInt total = 0;
      for (std::int64_t l = 0; l <= top + 1; ++l) {
        const BigInt dim = trunc_dim({c, p, l});
        total += dim;
        const auto basis = enumerate_basis({c, p, l});
        const auto oracle = oracles::box_vectors_with_sum(c, p, l);
        if (basis != oracle || dim != static_cast<std::int64_t>(oracle.size())) {
          return describe("c=", c, " p=", p, " l=", l, ": trunc_dim=", dim, " basis size=",
                          basis.size(), " oracle size=", oracle.size());
        }
        ++cases;
      }
      if (total != ipow(p, c)) return describe("c=", c, " p=", p, ": box sum ", total);
      if (trunc_dim({c, p, top}) != 1) return describe("c=", c, " p=", p, ": top power not 1");
    }
  }
  return {};
}

std::string check_cartier(int& cases) {
  for (std::int64_t n = 1; n <= 5; ++n) {
    for (std::int64_t p : {2, 3, 5, 7}) {
      const auto table = cartier_rank_table(n, p);
      if (!verify_cartier_consistency(table)) return describe("n=", n, " p=", p, ": inconsistent");
      const auto oracle = oracles::nonconstant_monomials(n, p);
      if (table.rows[1].b != oracle) {
        return describe("n=", n, " p=", p, ": rank B^1=", table.rows[1].b, " oracle=", oracle);
      }
      ++cases;
    }
  }
  return {};
}

std::string check_toric_vs_pn(int& cases) {
  for (std::int64_t n = 1; n <= 3; ++n) {
    const toric::SmoothCompleteFan fan(toric::fans::projective_space(n));
    for (std::int64_t p : {2, 3, 5}) {
      const auto decomposition =
          toric::frobenius_pushforward(fan, {toric::IntVec(fan.num_rays(), 0)}, p);
      std::map<std::int64_t, BigInt> toric_twists;
      for (const auto& s : decomposition.summands) {
        // Every D_rho is a hyperplane class; confirm against m * D_last.
        std::int64_t degree = 0;
        for (auto a : s.divisor.coeffs) degree += a;
        toric::ToricDivisor reference{toric::IntVec(fan.num_rays(), 0)};
        reference.coeffs.back() = degree;
        if (!toric::linearly_equivalent(fan, s.divisor, reference)) {
          return describe("n=", n, " p=", p, ": summand not equivalent to its degree twist");
        }
        toric_twists[degree] += s.multiplicity;
      }
      const auto pn = projective::fstar_decompose_pn(n, p, 0);
      if (toric_twists != pn.summands) return describe("n=", n, " p=", p, ": twist multisets differ");
      ++cases;
    }
  }
  return {};
}

std::string check_toric_verdicts(int& cases) {
  for (std::int64_t n = 1; n <= 3; ++n) {
    const toric::SmoothCompleteFan fan(toric::fans::projective_space(n));
    for (std::int64_t p : {2, 3, 5}) {
      if (toric::bx_dual_ample(fan, p).value != Ampleness::Ample) {
        return describe("P^", n, " p=", p, ": expected Ample");
      }
      ++cases;
    }
  }
  const std::vector<std::pair<std::string, toric::Fan>> non_examples = {
      {"P1xP1", toric::fans::product(toric::fans::projective_space(1),
                                     toric::fans::projective_space(1))},
      {"F1", toric::fans::hirzebruch(1)},
      {"F2", toric::fans::hirzebruch(2)},
      {"Bl_pt P2", toric::fans::blowup_p2_at_point()},
  };
  for (const auto& [name, raw] : non_examples) {
    const toric::SmoothCompleteFan fan(raw);
    for (std::int64_t p : {2, 3}) {
      if (toric::bx_dual_ample(fan, p).value != Ampleness::NotAmple) {
        return describe(name, " p=", p, ": expected NotAmple");
      }
      ++cases;
    }
  }
  return {};
}

std::string check_thresholds(int& cases) {
  for (std::int64_t n = 1; n <= 3; ++n) {
    for (std::int64_t p : {2, 3, 5, 7}) {
      const std::int64_t ample_bound = (n + 1) * (p - 1);
      if (p > n) {
        const auto scan = projective::threshold_scan(n, p, -1, ample_bound + p);
        if (scan.min_nef_d != n * (p - 1)) {
          return describe("n=", n, " p=", p, ": min nef d=", scan.min_nef_d, " expected ",
                          n * (p - 1));
        }
        ++cases;
      }
      for (std::int64_t d = -10; d <= ample_bound; ++d) {
        if (projective::fstar_positivity(n, p, d) == Positivity::Ample) {
          return describe("n=", n, " p=", p, " d=", d, ": Ample at or below (n+1)(p-1)");
        }
        ++cases;
      }
    }
  }
  return {};
}

std::string check_bott(int& cases) {
  for (std::int64_t n = 1; n <= 5; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      for (std::int64_t t = -12; t <= 12; ++t) {
        BigInt chi = 0;
        for (std::int64_t i = 0; i <= n; ++i) {
          const BigInt h = bott::bott_dim({n, k, t, i});
          chi += (i % 2 == 0) ? h : BigInt(-h);
          if (h != bott::bott_dim({n, n - k, -t, n - i})) {
            return describe("Serre duality fails at n=", n, " k=", k, " j=", t, " i=", i);
          }
        }
        const BigInt oracle = oracles::euler_characteristic(n, k, t);
        if (chi != oracle) {
          return describe("chi mismatch n=", n, " k=", k, " t=", t, ": ", chi, " vs ", oracle);
        }
        ++cases;
      }
    }
  }
  for (std::int64_t n = 1; n <= 6; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      if (!bott::cm_regular(n, k).regular) return describe("Omega^", k, " on P^", n, " not regular");
      ++cases;
    }
  }
  return {};
}

std::string check_obstructions(int& cases) {
  using namespace obstruction;
  struct Case {
    std::string name;
    Verdict verdict;
    Ampleness expected;
  };
  const std::vector<Case> table = {
      {"cubic surface in P^3", ci_verdict({3, {3}, 5}), Ampleness::NotAmple},
      {"cubic threefold in P^4", ci_verdict({4, {3}, 5}), Ampleness::NotAmple},
      {"quadric threefold p=3", fano3_verdict(Fano3Kind::Quadric, 3), Ampleness::Ample},
      {"quadric threefold p=2", fano3_verdict(Fano3Kind::Quadric, 2), Ampleness::Unknown},
      {"P^3", fano3_verdict(Fano3Kind::P3, 5), Ampleness::Ample},
      {"other Fano threefold", fano3_verdict(Fano3Kind::Other, 5), Ampleness::NotAmple},
  };
  for (const auto& c : table) {
    if (c.verdict.value != c.expected) {
      return describe(c.name, ": got ", to_string(c.verdict.value), " expected ",
                      to_string(c.expected));
    }
    if (c.verdict.value == Ampleness::NotAmple && c.verdict.trace.empty()) {
      return describe(c.name, ": NotAmple without a trace");
    }
    ++cases;
  }
  return {};
}

std::string check_duality(int& cases) {
  for (std::int64_t n = 1; n <= 3; ++n) {
    for (std::int64_t p : {2, 3, 5}) {
      for (std::int64_t d = -5; d <= 15; ++d) {
        const auto twists = oracles::pn_monomial_twists(n, p, d);
        const auto fast = projective::fstar_decompose_pn(n, p, d);
        const auto dual = projective::fstar_decompose_pn(n, p, (n + 1) * (p - 1) - d);
        std::map<std::int64_t, BigInt> negated;
        for (const auto& [m, mult] : fast.summands) negated[-m] = mult;
        if (negated != dual.summands) {
          return describe("n=", n, " p=", p, " d=", d, ": dual twists differ");
        }
        std::map<std::int64_t, BigInt> oracle(twists.begin(), twists.end());
        if (oracle != fast.summands) {
          return describe("n=", n, " p=", p, " d=", d, ": decomposition disagrees with oracle");
        }
        ++cases;
      }
    }
  }
  return {};
}

CriterionResult run_one(int id, std::string name, double budget, const Check& check) {
  const auto start = std::chrono::steady_clock::now();
  int cases = 0;
  std::string failure;
  try {
    failure = check(cases);
  } catch (const std::exception& e) {
    failure = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (failure.empty() && seconds > budget) {
    failure = describe("took ", seconds, " s, budget ", budget, " s");
  }
  const bool passed = failure.empty();
  return {id, std::move(name), passed,
          passed ? describe(cases, " cases") : failure, seconds, budget};
}

}  // namespace

std::vector<CriterionResult> run_all() {
  return {
      run_one(1, "truncated-power box identity", 1.0, check_truncated_box),
      run_one(2, "Cartier ranks", 1.0, check_cartier),
      run_one(3, "toric vs P^n pushforward", 5.0, check_toric_vs_pn),
      run_one(4, "toric B_X^dual verdicts", 5.0, check_toric_verdicts),
      run_one(5, "F_*O(d) thresholds on P^n", 10.0, check_thresholds),
      run_one(6, "Bott oracle gate", 10.0, check_bott),
      run_one(7, "obstruction verdicts", 1.0, check_obstructions),
      run_one(8, "duality twist multiset", 5.0, check_duality),
  };
}

}  // namespace frob::acceptance
