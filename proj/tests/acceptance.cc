// Copyright 2026 The sumsetlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance run: one PASS/FAIL line per criterion, each under its time
// limit. Exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sumsetlab/conjecture_harness.h"
#include "sumsetlab/constructions.h"
#include "sumsetlab/extremal_search.h"
#include "sumsetlab/literals.h"
#include "sumsetlab/lp_certificates.h"
#include "sumsetlab/set_engine.h"
#include "sumsetlab/spectral.h"

namespace sumsetlab {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<Outcome()> run;
};

GroupSpec Chain(std::vector<std::int64_t> factors) { return NormalizeSpec(factors); }

GroupSpec Five(int n) { return GroupSpec::FromChain(std::vector<std::int64_t>(n, 5)); }

std::string Name(const GroupSpec& spec) { return spec.is_trivial() ? "trivial" : spec.ToString(); }

// Records the first few mismatches.
class Tally {
 public:
  void Check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++failed_;
  }

  Outcome Finish(const std::string& summary) const {
    Outcome o;
    o.pass = failed_ == 0 && checks_ > 0;
    std::ostringstream s;
    s << summary << "; " << checks_ << " checks, " << failed_ << " failed";
    for (const std::string& f : failures_) s << "; " << f;
    o.detail = s.str();
    return o;
  }

 private:
  std::int64_t checks_ = 0;
  std::int64_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::int64_t NkExhaustive(const GroupSpec& spec, int k) { return NkSearch(spec, k).value; }

Outcome MkFormulaAgreement() {
  Tally t;
  int groups = 0;
  for (std::int64_t order = 1; order <= 16; ++order) {
    for (const GroupSpec& spec : AbelianGroupsOfOrder(order)) {
      ++groups;
      for (int k = 1; k <= 5; ++k) {
        const std::int64_t formula = MkFormula(spec, k).value;
        const std::int64_t brute = MkBruteforce(spec, k).value;
        t.Check(formula == brute, "M_" + std::to_string(k) + "(" + Name(spec) + "): formula " +
                                      std::to_string(formula) + ", search " + std::to_string(brute));
      }
    }
  }
  return t.Finish(std::to_string(groups) + " groups, k = 1..5");
}

Outcome NkFiveSquared() {
  Tally t;
  const std::int64_t one = NkExhaustive(Five(1), 3);
  const std::int64_t two = NkExhaustive(Five(2), 3);
  t.Check(one == 2, "N_3(Z_5) = " + std::to_string(one));
  t.Check(two == 7, "N_3(Z_5^2) = " + std::to_string(two));
  return t.Finish("N_3(Z_5) = " + std::to_string(one) + ", N_3(Z_5^2) = " + std::to_string(two));
}

Outcome NkTwoFour() {
  Tally t;
  const std::int64_t v = NkExhaustive(Chain({2, 2, 2, 2}), 3);
  t.Check(v == 5, "N_3(Z_2^4) = " + std::to_string(v));
  return t.Finish("N_3(Z_2^4) = " + std::to_string(v));
}

bool IsPrime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Outcome SmallGroupTable() {
  Tally t;
  int groups = 0;
  for (std::int64_t order = 2; order <= 12; ++order) {
    for (const GroupSpec& spec : AbelianGroupsOfOrder(order)) {
      ++groups;
      const std::int64_t m = spec.order();
      const std::int64_t diam = std::accumulate(spec.factors().begin(), spec.factors().end(),
                                                std::int64_t{0},
                                                [](std::int64_t s, std::int64_t f) { return s + f - 1; });
      std::vector<std::pair<int, std::int64_t>> expected;
      expected.push_back({1, m - 1});
      if (2 < diam) expected.push_back({2, m / 2});
      if (diam >= 2) expected.push_back({static_cast<int>(diam - 1), spec.rank() + 1});
      for (int k = static_cast<int>(diam); k <= diam + 1; ++k) {
        expected.push_back({k, IsPrime(m) ? 1 : 0});
      }
      for (const auto& [k, value] : expected) {
        const std::int64_t v = NkExhaustive(spec, k);
        t.Check(v == value, "N_" + std::to_string(k) + "(" + Name(spec) + ") = " +
                                std::to_string(v) + ", expected " + std::to_string(value));
      }
    }
  }
  return t.Finish(std::to_string(groups) + " groups of order 2..12");
}

Outcome CyclicSpotValues() {
  Tally t;
  std::ostringstream s;
  for (const auto& [order, value] : std::vector<std::pair<std::int64_t, std::int64_t>>{
           {7, 2}, {13, 4}, {9, 3}}) {
    const std::int64_t v = NkExhaustive(Chain({order}), 3);
    t.Check(v == value, "N_3(Z_" + std::to_string(order) + ") = " + std::to_string(v));
    s << "N_3(Z_" << order << ") = " << v << " ";
  }
  return t.Finish(s.str());
}

Outcome StabilityExhaustive() {
  Tally t;
  const StabilityReport r = VerifyStabilityExhaustive(2, 8, 11);
  t.Check(r.levels.size() == 4, "levels " + std::to_string(r.levels.size()));
  for (const StabilityLevel& l : r.levels) {
    t.Check(l.covered == l.survivors, "size " + std::to_string(l.size) + ": " +
                                          std::to_string(l.survivors - l.covered) + " uncovered");
    if (l.size == 10) t.Check(l.survivors == 60, "size 10 survivors " + std::to_string(l.survivors));
    if (l.size == 11) t.Check(l.survivors == 0, "size 11 survivors " + std::to_string(l.survivors));
  }
  t.Check(r.violations.empty(), std::to_string(r.violations.size()) + " violations");
  t.Check(r.automorphism_invariant, "automorphism invariance");
  std::ostringstream s;
  s << "survivors by size 8..11:";
  for (const StabilityLevel& l : r.levels) s << " " << l.survivors;
  return t.Finish(s.str());
}

Outcome LpCertificates() {
  Tally t;
  const std::vector<LpCertificate> certs = CertifyAll();
  double least = INFINITY;
  for (const LpCertificate& c : certs) {
    const std::string id = "case " + ToString(c.instance.lp_case) + " k=" + std::to_string(c.instance.k);
    t.Check(c.certified, id + " not certified");
    t.Check(c.minimum > -9.0 / 14, id + " minimum " + std::to_string(c.minimum));
    t.Check(c.margin >= 0.04, id + " margin " + std::to_string(c.margin));
    t.Check(c.method_agreement <= 1e-12, id + " agreement " + std::to_string(c.method_agreement));
    least = std::min(least, c.margin);
  }
  t.Check(certs.size() == 10, std::to_string(certs.size()) + " certificates");
  return t.Finish(std::to_string(certs.size()) + " certificates, least margin " +
                  std::to_string(least));
}

// Random sets with 0 not in 3A: subsets of a union of cosets {c, -c} of a
// random index-5 subgroup, or greedy random sets grown while 0 stays out.
DenseSubset DrawZeroFree(const GroupPtr& g, std::mt19937_64& rng) {
  const std::uint32_t order = static_cast<std::uint32_t>(g->order());
  DenseSubset a(g);
  if (rng() % 2 == 0) {
    const auto functionals = IndexFiveFunctionals(g->spec());
    const LinearFunctional& f = functionals[rng() % functionals.size()];
    const std::int64_t c = 1 + static_cast<std::int64_t>(rng() % 2);
    std::vector<std::uint32_t> members;
    for (std::uint32_t x = 0; x < order; ++x) {
      const GroupElement e = g->Element(x);
      std::int64_t v = 0;
      for (std::size_t i = 0; i < e.coords.size(); ++i) v += f.coeffs[i] * e.coords[i];
      if (v % 5 == c || v % 5 == 5 - c) members.push_back(x);
    }
    for (std::uint32_t x : members) {
      if (rng() % 4 != 0) a.insert(x);
    }
    if (a.empty()) a.insert(members[rng() % members.size()]);
  } else {
    std::vector<std::uint32_t> order_list(order);
    std::iota(order_list.begin(), order_list.end(), 0u);
    for (std::uint32_t i = order - 1; i > 0; --i) std::swap(order_list[i], order_list[rng() % (i + 1)]);
    const std::uint32_t target = 1 + static_cast<std::uint32_t>(rng() % (order / 3));
    for (std::uint32_t x : order_list) {
      if (a.size() >= target) break;
      DenseSubset b = a;
      b.insert(x);
      if (!KFoldSumset(b, 3).contains(0)) a = b;
    }
  }
  return a;
}

Outcome SpectralIdentities() {
  Tally t;
  std::int64_t sets = 0;
  double worst_cubic = 0, worst_parseval = 0, least_gap = INFINITY;
  for (int n : {2, 3}) {
    const GroupPtr g = Group::Make(Five(n));
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    for (int i = 0; i < 1000; ++i) {
      const DenseSubset a = DrawZeroFree(g, rng);
      if (KFoldSumset(a, 3).contains(0)) {
        t.Check(false, "sampler produced 0 in 3A");
        continue;
      }
      ++sets;
      const double alpha = static_cast<double>(a.size()) / static_cast<double>(g->order());
      const double cubic = std::abs(CubicSum(a));
      const double parseval = std::abs(ParsevalOffPrincipal(a) - (alpha - alpha * alpha));
      const SpectralWitness w = FindWitness(a);
      const double bound = alpha * alpha / (1 - alpha);
      worst_cubic = std::max(worst_cubic, cubic);
      worst_parseval = std::max(worst_parseval, parseval);
      least_gap = std::min(least_gap, w.realpart - bound);
      t.Check(cubic <= 1e-10, "cubic sum " + FormatSetLiteral(a));
      t.Check(parseval <= 1e-12, "Parseval " + FormatSetLiteral(a));
      t.Check(w.realpart >= bound - 1e-12, "witness bound " + FormatSetLiteral(a));
    }
  }
  std::ostringstream s;
  s << sets << " sets; max |cubic sum| " << worst_cubic << ", max Parseval error " << worst_parseval
    << ", least Re z - bound " << least_gap;
  return t.Finish(s.str());
}

Outcome PropertySuites() {
  Tally t;
  std::map<std::string, std::int64_t> applicable;
  std::int64_t trials = 0;
  const auto run = [&](const SuiteReport& r) {
    trials += r.trials;
    t.Check(r.violations.empty(), r.suite + " on " + Name(r.group) + ": " +
                                      std::to_string(r.violations.size()) + " violations");
    for (const auto& [id, count] : r.applicable) applicable[id] += count;
  };

  const std::vector<std::vector<std::int64_t>> groups = {
      {10}, {2, 2, 2, 2}, {3, 3, 3}, {4, 4}, {6, 6}, {2, 4, 8}, {5, 5}, {97}, {10, 10}, {7, 7}};
  std::int64_t pairs = 0;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    TrialConfig cfg;
    cfg.group = Chain(groups[i]);
    cfg.sampler = i % 2 ? SamplerKind::kPerturbation : SamplerKind::kUniformSize;
    cfg.trials = 1000;
    cfg.seed = 1;
    run(CheckKneserSuite(cfg));
    pairs += cfg.trials;
  }
  for (int n : {2, 3}) {
    for (SamplerKind kind : {SamplerKind::kUniformSize, SamplerKind::kPerturbation}) {
      TrialConfig cfg;
      cfg.group = Five(n);
      cfg.sampler = kind;
      cfg.trials = 2000;
      run(CheckQuarterDensity(cfg));
    }
    TrialConfig props;
    props.group = Five(n);
    props.sampler = SamplerKind::kPerturbation;
    props.lo = 0.3;
    props.hi = 0.5;
    props.trials = 10000;
    run(CheckCosetPropositions(props));
    TrialConfig triple;
    triple.group = Five(n);
    triple.trials = 2000;
    run(CheckTripleSum(triple));
  }
  for (const char* id : {"kneser", "kneser-union", "pigeonhole", "quarter", "three-cosets",
                         "dense-coset", "heavy-cosets", "two-coset-cover", "triple-sum"}) {
    t.Check(applicable[id] > 0, std::string(id) + " never applicable");
  }
  std::ostringstream s;
  s << pairs << " Kneser pairs, " << trials << " trials; applicable:";
  for (const auto& [id, count] : applicable) s << " " << id << "=" << count;
  return t.Finish(s.str());
}

Outcome ConstructionsAndReduction() {
  Tally t;
  const auto check = [&](const Construction& c) {
    std::string failing;
    for (const PropertyCheck& p : c.checks) {
      if (p.claimed && !p.pass) failing += " " + p.name;
    }
    t.Check(c.AllPass(), c.kind + " in " + Name(c.set.group()->spec()) + " fails" + failing);
  };
  int built = 0;
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) {
        check(BuildTwoCoset(n, i, j));
        ++built;
      }
    }
  }
  for (int n : {2, 3}) {
    check(BuildX22(n));
    ++built;
  }
  for (const auto& orders : std::vector<std::vector<std::int64_t>>{{7}, {13}, {7, 7}}) {
    check(BuildDecomp(orders));
    ++built;
  }
  for (const auto& orders : std::vector<std::vector<std::int64_t>>{{5, 3}, {5, 4}}) {
    check(BuildMod3(orders));
    ++built;
  }

  int pairs = 0;
  for (std::int64_t order = 1; order <= 16; ++order) {
    for (const GroupSpec& spec : AbelianGroupsOfOrder(order)) {
      for (int k = 1; k <= 3; ++k) {
        const ReductionReport r = ReductionIdentityCheck(spec, k);
        t.Check(r.holds, "reduction identity fails for " + Name(spec) + ", k=" + std::to_string(k));
        ++pairs;
      }
    }
  }
  return t.Finish(std::to_string(built) + " constructions, reduction identity on " +
                  std::to_string(pairs) + " (G, k) pairs");
}

Outcome Falsifier() {
  Tally t;
  FalsifierConfig cfg;
  cfg.n = 3;
  cfg.restarts = 1000;
  cfg.seed = 1;
  const FalsifierReport r = FalsifyStabilityStochastic(cfg);
  t.Check(r.restarts == 1000, "restarts " + std::to_string(r.restarts));
  t.Check(r.violations.empty(), std::to_string(r.violations.size()) + " counterexamples");
  for (const ViolationReport& v : r.violations) {
    t.Check(false, "counterexample " + FormatSetLiteral(v.witnesses.front()));
  }
  return t.Finish(std::to_string(r.restarts) + " restarts at size " + std::to_string(r.size) +
                  ", " + std::to_string(r.violations.size()) + " counterexamples");
}

}  // namespace
}  // namespace sumsetlab

int main() {
  using namespace sumsetlab;
  const std::vector<Criterion> criteria = {
      {1, "M_k formula = exhaustive search, |G| <= 16, k <= 5", 300, MkFormulaAgreement},
      {2, "N_3(Z_5) = 2, N_3(Z_5^2) = 7", 600, NkFiveSquared},
      {3, "N_3(Z_2^4) = 5", 30, NkTwoFour},
      {4, "closed-form N_k table, |G| <= 12", 600, SmallGroupTable},
      {5, "N_3 of Z_7, Z_13, Z_9", 60, CyclicSpotValues},
      {6, "exhaustive stability in Z_5^2", 1200, StabilityExhaustive},
      {7, "LP certificates exceed -9/14", 1, LpCertificates},
      {8, "spectral identities in Z_5^2, Z_5^3", 120, SpectralIdentities},
      {9, "property suites", 600, PropertySuites},
      {10, "constructions and reduction identity", 900, ConstructionsAndReduction},
      {11, "stochastic falsifier in Z_5^3", 1800, Falsifier},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.limit_s;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("criterion %2d: %s  %s (%s) [%.2f s of %.0f s%s]\n", c.id, pass ? "PASS" : "FAIL",
                c.name.c_str(), o.detail.c_str(), seconds, c.limit_s,
                in_time ? "" : ", over the limit");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
