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

#include "sumsetlab/extremal_search.h"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <map>
#include <numeric>

#include "sumsetlab/colex_scan.h"
#include "sumsetlab/literals.h"
#include "sumsetlab/parallel.h"
#include "sumsetlab/word_kernel.h"

namespace sumsetlab {
namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void RequireSearchable(const GroupSpec& spec) {
  if (spec.order() > 64) {
    throw BudgetExceeded("exhaustive search needs |G| <= 64, got |G| = " +
                         std::to_string(spec.order()));
  }
}

// Scans sizes start, start-1, ..., 0 and stops at the first level with a
// hit. Fills value, witnesses and the covered size range.
template <class Pred>
void DescendingSearch(const GroupPtr& g, std::int64_t start,
                      const SearchOptions& options, const Pred& pred,
                      SearchReport& report) {
  const int n = static_cast<int>(g->order());
  const int threads = ResolveThreads(options.threads);
  report.size_high = start;
  report.size_low = start;
  for (std::int64_t s = start; s >= 0; --s) {
    const std::uint64_t level = Binomial(n, static_cast<int>(s));
    if (report.nodes + level > options.budget) {
      std::string covered =
          s == start ? std::string("none")
                     : std::to_string(start) + ".." + std::to_string(s + 1);
      throw BudgetExceeded(
          "search over " + g->spec().ToString() + " needs C(" +
          std::to_string(n) + "," + std::to_string(s) + ") = " +
          std::to_string(level) + " more candidates, budget " +
          std::to_string(options.budget) + "; sizes covered: " + covered);
    }
    const LevelResult r =
        ScanLevel(n, static_cast<int>(s), options.witness_cap, threads, pred);
    report.nodes += level;
    report.size_low = s;
    if (r.count > 0) {
      report.value = s;
      report.extremal_count = r.count;
      for (std::uint64_t w : r.witnesses) {
        report.witnesses.push_back(DenseSubset::FromMask(g, w));
      }
      return;
    }
  }
  report.value = 0;
}

bool IsPrime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> PrimeFactors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::int64_t Pow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::uint64_t KFoldWithZero(const Group& g, std::uint64_t a, int k) {
  if (k == 0) return 1;
  return word::KFold(g, a | 1, k);
}

}  // namespace

std::string ToString(Constant c) {
  switch (c) {
    case Constant::kMk: return "Mk";
    case Constant::kNk: return "Nk";
    case Constant::kBt: return "bt";
  }
  return "";
}

std::string ToString(SearchMethod m) {
  switch (m) {
    case SearchMethod::kFormula: return "formula";
    case SearchMethod::kExhaustive: return "exhaustive";
    case SearchMethod::kDescending: return "descending";
    case SearchMethod::kStochastic: return "stochastic";
  }
  return "";
}

nlohmann::json ToJson(const SearchReport& r) {
  nlohmann::json w = nlohmann::json::array();
  for (const DenseSubset& a : r.witnesses) w.push_back(FormatSetLiteral(a));
  return {{"group", r.group.ToString()},
          {"k", r.k},
          {"constant", ToString(r.constant)},
          {"value", r.value},
          {"witnesses", w},
          {"extremal_count", r.extremal_count},
          {"nodes", r.nodes},
          {"elapsed_ms", r.elapsed_ms},
          {"method", ToString(r.method)},
          {"sizes_covered", {r.size_high, r.size_low}}};
}

MkFormulaResult MkFormula(const GroupSpec& spec, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  const std::int64_t m = spec.order();
  MkFormulaResult best{-1, 1};
  for (std::int64_t d = 1; d <= m; ++d) {
    if (m % d) continue;
    // Floor division: d = 1 contributes 0.
    const std::int64_t q = d >= 2 ? (d - 2) / k : -1;
    const std::int64_t v = (q + 1) * (m / d);
    if (v > best.value) best = {v, d};
  }
  return best;
}

std::int64_t NkUpperBound(std::int64_t order, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  const std::int64_t num = order - 2;
  const std::int64_t q = num >= 0 ? num / k : -((-num + k - 1) / k);
  return q + 1;
}

SearchReport MkBruteforce(const GroupSpec& spec, int k,
                          const SearchOptions& options) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  RequireSearchable(spec);
  const auto start = Clock::now();
  const GroupPtr g = Group::Make(spec);
  const Group& gr = *g;
  const std::uint64_t full = gr.full_word();
  SearchReport report;
  report.group = spec;
  report.k = k;
  report.constant = Constant::kMk;
  if (spec.order() <= 16) {
    report.method = SearchMethod::kExhaustive;
    const std::uint64_t limit = std::uint64_t{1} << spec.order();
    int best = -1;
    std::vector<std::uint64_t> wit;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      const int pc = std::popcount(mask);
      if (pc < best) continue;
      ++report.nodes;
      if (word::KFold(gr, mask, k) == full) continue;
      if (pc > best) {
        best = pc;
        wit.clear();
        report.extremal_count = 0;
      }
      ++report.extremal_count;
      if (wit.size() < static_cast<std::size_t>(options.witness_cap)) {
        wit.push_back(mask);
      }
    }
    report.value = best;
    report.size_high = spec.order();
    report.size_low = 0;
    for (std::uint64_t w : wit) report.witnesses.push_back(DenseSubset::FromMask(g, w));
  } else {
    report.method = SearchMethod::kDescending;
    // kA != G with k >= 2 forces |A| + |(k-1)A| <= |G|.
    const std::int64_t start_size =
        k == 1 ? spec.order() - 1 : spec.order() / 2;
    DescendingSearch(g, start_size, options,
                     [&](std::uint64_t a) { return word::KFold(gr, a, k) != full; },
                     report);
  }
  report.elapsed_ms = MillisSince(start);
  return report;
}

SearchReport NkSearch(const GroupSpec& spec, int k, const SearchOptions& options) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  RequireSearchable(spec);
  const auto start = Clock::now();
  const GroupPtr g = Group::Make(spec);
  const Group& gr = *g;
  const std::uint64_t full = gr.full_word();
  SearchReport report;
  report.group = spec;
  report.k = k;
  report.constant = Constant::kNk;
  report.method = SearchMethod::kDescending;
  DescendingSearch(g, NkUpperBound(spec.order(), k), options,
                   [&](std::uint64_t a) {
                     return word::KFold(gr, a, k) != full &&
                            word::IsAperiodic(gr, a) &&
                            word::IsMaximalNonfull(gr, a, k);
                   },
                   report);
  report.elapsed_ms = MillisSince(start);
  return report;
}

std::vector<KnownValue> LookupKnownValues(const GroupSpec& spec, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  std::vector<KnownValue> out;
  const std::int64_t order = spec.order();
  const std::int64_t diam = DiamPlus(spec);
  if (k == 1) out.push_back({order - 1, "k=1"});
  if (spec.is_cyclic() && order >= k + 2) {
    out.push_back({NkUpperBound(order, k), "cyclic"});
  }
  if (k == 2 && 2 < diam) out.push_back({order / 2, "k=2"});
  if (k == diam - 1) out.push_back({spec.rank() + 1, "k=diam-1"});
  if (k >= diam) {
    out.push_back(IsPrime(order) ? KnownValue{1, "k>=diam,prime"}
                                 : KnownValue{0, "k>=diam,composite"});
  }
  if (k == 3 && diam >= 4) {
    const auto primes = PrimeFactors(order);
    if (order % 3 == 0) {
      out.push_back({order / 3, "k=3,3|order"});
    } else if (std::all_of(primes.begin(), primes.end(),
                           [](std::int64_t p) { return p % 3 == 1; })) {
      out.push_back({(order - 1) / 3, "k=3,divisors=1mod3"});
    }
  }
  const int n = spec.rank();
  if (k == 3 && n >= 1 && spec.is_elementary(5)) {
    out.push_back({n == 1 ? 2 : (3 * Pow(5, n - 1) - 1) / 2, "k=3,Z5^n"});
  }
  if (k == 3 && n >= 4 && spec.is_elementary(2)) {
    out.push_back({Pow(2, n - 2) + 1, "k=3,Z2^n"});
  }
  return out;
}

std::optional<KnownValue> LookupKnownValue(const GroupSpec& spec, int k) {
  auto all = LookupKnownValues(spec, k);
  if (all.empty()) return std::nullopt;
  return all.front();
}

SearchReport BtRhoSearch(const GroupSpec& spec, int rho,
                         const SearchOptions& options, BtDefinition definition) {
  if (rho < 1) throw std::invalid_argument("rho must be positive");
  RequireSearchable(spec);
  const auto start = Clock::now();
  const GroupPtr g = Group::Make(spec);
  const Group& gr = *g;
  const std::uint64_t full = gr.full_word();
  SearchReport report;
  report.group = spec;
  report.k = rho;
  report.constant = Constant::kBt;
  report.method = SearchMethod::kDescending;
  const int j = rho - 1;
  if (definition == BtDefinition::kSimplified && rho > DiamPlus(spec)) {
    report.method = SearchMethod::kFormula;
    report.elapsed_ms = MillisSince(start);
    return report;
  }
  const bool need_generating = definition == BtDefinition::kGenerating;
  // Maximality with g = 0 forces 0 in A, and then j >= 2 gives
  // |A| + |A| <= |G| by pigeonhole.
  const std::int64_t start_size =
      j == 0 ? spec.order() : (j == 1 ? spec.order() - 1 : spec.order() / 2);
  DescendingSearch(
      g, start_size, options,
      [&](std::uint64_t a) {
        if (!(a & 1)) return false;
        if (KFoldWithZero(gr, a, j) == full) return false;
        if (!word::IsAperiodic(gr, a)) return false;
        if (need_generating && word::MinCoverK(gr, a) < 0) return false;
        std::uint64_t outside = full & ~a;
        while (outside) {
          const std::uint64_t x = outside & (~outside + 1);
          if (KFoldWithZero(gr, a | x, j) != full) return false;
          outside ^= x;
        }
        return true;
      },
      report);
  report.elapsed_ms = MillisSince(start);
  return report;
}

ReductionReport ReductionIdentityCheck(const GroupSpec& spec, int k,
                                       const SearchOptions& options) {
  RequireSearchable(spec);
  ReductionReport report;
  report.group = spec;
  report.k = k;
  report.mk = MkBruteforce(spec, k, options).value;
  std::map<std::vector<std::int64_t>, std::int64_t> nk_cache;
  std::int64_t best = -1;
  for (Subgroup& h : EnumerateSubgroups(spec)) {
    const QuotientMap q = MakeQuotientMap(h);
    auto it = nk_cache.find(q.spec.factors());
    if (it == nk_cache.end()) {
      it = nk_cache.emplace(q.spec.factors(), NkSearch(q.spec, k, options).value)
               .first;
    }
    ReductionTerm term{std::move(h), q.spec, it->second, 0};
    term.product = static_cast<std::int64_t>(term.subgroup.order()) * term.quotient_nk;
    if (term.product > best) {
      best = term.product;
      report.best = report.terms.size();
    }
    report.terms.push_back(std::move(term));
  }
  report.holds = best == report.mk;
  return report;
}

nlohmann::json ToJson(const ReductionReport& r) {
  nlohmann::json terms = nlohmann::json::array();
  for (const ReductionTerm& t : r.terms) {
    terms.push_back({{"subgroup", FormatSetLiteral(t.subgroup.members)},
                     {"order", t.subgroup.order()},
                     {"quotient", t.quotient.ToString()},
                     {"quotient_nk", t.quotient_nk},
                     {"product", t.product}});
  }
  return {{"group", r.group.ToString()},
          {"k", r.k},
          {"mk", r.mk},
          {"max_product", r.terms.empty() ? 0 : r.terms[r.best].product},
          {"best_subgroup", r.terms.empty() ? "" : FormatSetLiteral(r.terms[r.best].subgroup.members)},
          {"terms", terms},
          {"holds", r.holds}};
}

}  // namespace sumsetlab
