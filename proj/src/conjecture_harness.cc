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

#include "sumsetlab/conjecture_harness.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "sumsetlab/colex_scan.h"
#include "sumsetlab/literals.h"
#include "sumsetlab/parallel.h"
#include "sumsetlab/set_engine.h"
#include "sumsetlab/subgroup.h"
#include "sumsetlab/word_kernel.h"

namespace sumsetlab {
namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint64_t SplitMix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Uniform(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

template <class T>
const T& Pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[Uniform(rng, v.size())];
}

bool IsFive(const GroupSpec& spec) { return spec.rank() >= 1 && spec.is_elementary(5); }

void RequireFive(const GroupSpec& spec, int max_rank) {
  if (!IsFive(spec) || spec.rank() > max_rank) {
    throw std::invalid_argument("needs Z_5^n with 1 <= n <= " + std::to_string(max_rank) +
                                ", got " + spec.ToString());
  }
}

// residues[f][x] = <c_f, x> mod 5 for every index-5 functional c_f.
std::vector<std::vector<std::uint8_t>> ResidueTable(const Group& g) {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::int64_t> x(g.spec().rank());
  for (const LinearFunctional& c : IndexFiveFunctionals(g.spec())) {
    std::vector<std::uint8_t> row(g.order());
    for (std::uint32_t i = 0; i < g.order(); ++i) {
      g.Coords(i, x);
      row[i] = static_cast<std::uint8_t>(c.Apply(x));
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::string CountsString(const std::array<std::int64_t, 5>& counts) {
  std::string s = "(";
  for (int i = 0; i < 5; ++i) s += (i ? "," : "") + std::to_string(counts[i]);
  return s + ")";
}

std::string CoeffString(const LinearFunctional& c) {
  std::string s = "<";
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
    s += (i ? "," : "") + std::to_string(c.coeffs[i]);
  }
  return s + ">";
}

void RequireSets(const std::string& id, std::span<const DenseSubset> sets, std::size_t n) {
  if (sets.size() != n) {
    throw std::invalid_argument(id + " takes " + std::to_string(n) + " sets");
  }
  for (const DenseSubset& s : sets) {
    if (!(s.group()->spec() == sets[0].group()->spec())) {
      throw std::invalid_argument(id + ": sets live in different groups");
    }
  }
}

std::int64_t Size(const DenseSubset& a) { return static_cast<std::int64_t>(a.size()); }

std::int64_t SizePlusPeriod(const DenseSubset& a) {
  return Size(a) + static_cast<std::int64_t>(Period(a).order());
}

// Shared hypotheses of the coset properties: density above 3/10, 3A != G.
bool LargeNonfull(const DenseSubset& a) {
  const std::int64_t n = a.group()->order();
  return 10 * Size(a) > 3 * n && !KFoldSumset(a, 3).is_full();
}

PropertyOutcome CosetProperty(const std::string& id, const DenseSubset& a) {
  PropertyOutcome out;
  if (!LargeNonfull(a)) return out;
  const std::int64_t coset = a.group()->order() / 5;
  if (id == "three-cosets") out.applicable = true;
  for (const LinearFunctional& c : IndexFiveFunctionals(a.group()->spec())) {
    const auto counts = ResidueCounts(a, c);
    const auto occupied = std::count_if(counts.begin(), counts.end(), [](auto x) { return x > 0; });
    bool ok = true;
    if (id == "three-cosets") {
      ok = occupied != 3;
    } else if (id == "dense-coset") {
      if (std::none_of(counts.begin(), counts.end(), [&](auto x) { return 2 * x > coset; })) continue;
      out.applicable = true;
      ok = occupied <= 3;
    } else {
      if (!std::all_of(counts.begin(), counts.end(), [&](auto x) { return 2 * x < coset; })) continue;
      out.applicable = true;
      ok = std::count_if(counts.begin(), counts.end(), [&](auto x) { return 5 * x > 2 * coset; }) <= 1;
    }
    if (!ok && out.holds) {
      out.holds = false;
      out.observed = "F = ker " + CoeffString(c) + ", coset counts " + CountsString(counts);
    }
  }
  if (id == "three-cosets") {
    out.required = "no index-5 subgroup with exactly 3 occupied cosets";
  } else if (id == "dense-coset") {
    out.required = "at most 3 occupied cosets when some coset density > 1/2";
  } else {
    out.required = "at most one coset density > 2/5 when all are < 1/2";
  }
  return out;
}

}  // namespace

std::string ToString(SamplerKind kind) {
  switch (kind) {
    case SamplerKind::kUniformSize:
      return "uniform";
    case SamplerKind::kDensityWindow:
      return "window";
    case SamplerKind::kPerturbation:
      return "perturb";
  }
  return "?";
}

std::optional<SamplerKind> ParseSamplerKind(const std::string& s) {
  for (SamplerKind k : {SamplerKind::kUniformSize, SamplerKind::kDensityWindow,
                        SamplerKind::kPerturbation}) {
    if (ToString(k) == s) return k;
  }
  return std::nullopt;
}

std::mt19937_64 TrialRng(std::uint64_t seed, std::int64_t trial) {
  return std::mt19937_64(SplitMix(SplitMix(seed) ^ static_cast<std::uint64_t>(trial)));
}

SetSampler::SetSampler(GroupPtr group, SamplerKind kind, double lo, double hi)
    : group_(std::move(group)), kind_(kind), five_(IsFive(group_->spec())) {
  const auto n = static_cast<std::int64_t>(group_->order());
  if (kind_ == SamplerKind::kUniformSize) {
    min_size_ = 0;
    max_size_ = n;
  } else {
    min_size_ = std::max<std::int64_t>(0, static_cast<std::int64_t>(std::ceil(lo * n - 1e-9)));
    max_size_ = std::min<std::int64_t>(n, static_cast<std::int64_t>(std::floor(hi * n + 1e-9)));
  }
  if (min_size_ > max_size_) {
    throw std::invalid_argument("density window [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "] contains no size");
  }
}

DenseSubset SetSampler::DrawOfSize(std::mt19937_64& rng, std::int64_t size) const {
  const std::uint32_t n = group_->order();
  std::vector<std::uint32_t> idx(n);
  for (std::uint32_t i = 0; i < n; ++i) idx[i] = i;
  for (std::int64_t i = 0; i < size; ++i) {
    std::swap(idx[i], idx[i + Uniform(rng, n - i)]);
  }
  return DenseSubset::FromIndices(group_, std::span(idx).first(size));
}

DenseSubset SetSampler::DrawCosetUnion(std::mt19937_64& rng, std::int64_t size) const {
  if (!five_) throw std::invalid_argument("coset unions need Z_5^n");
  const std::int64_t coset = group_->order() / 5;
  const auto functionals = IndexFiveFunctionals(group_->spec());
  const LinearFunctional& c = Pick(rng, functionals);
  std::int64_t t = std::max<std::int64_t>(1, (size + coset - 1) / coset);
  if (t < 5 && Uniform(rng, 2)) ++t;
  std::array<int, 5> perm{0, 1, 2, 3, 4};
  for (int i = 0; i < 5; ++i) std::swap(perm[i], perm[i + Uniform(rng, 5 - i)]);
  std::vector<std::uint32_t> pool;
  std::vector<std::int64_t> x(group_->spec().rank());
  for (std::uint32_t i = 0; i < group_->order(); ++i) {
    group_->Coords(i, x);
    const std::int64_t r = c.Apply(x);
    if (std::find(perm.begin(), perm.begin() + t, r) != perm.begin() + t) pool.push_back(i);
  }
  for (std::int64_t i = 0; i < size; ++i) {
    std::swap(pool[i], pool[i + Uniform(rng, pool.size() - i)]);
  }
  return DenseSubset::FromIndices(group_, std::span(pool).first(size));
}

DenseSubset SetSampler::Base(std::mt19937_64& rng) const {
  if (five_) {
    const std::int64_t coset = group_->order() / 5;
    return DrawCosetUnion(rng, coset * static_cast<std::int64_t>(1 + Uniform(rng, 3)));
  }
  const std::uint32_t n = group_->order();
  std::vector<std::uint32_t> gens{static_cast<std::uint32_t>(Uniform(rng, n))};
  if (Uniform(rng, 2)) gens.push_back(static_cast<std::uint32_t>(Uniform(rng, n)));
  const Subgroup h = Subgroup::Generated(group_, gens);
  DenseSubset out(group_);
  const std::uint64_t reps = 1 + Uniform(rng, std::max<std::int64_t>(1, h.index - 1));
  for (std::uint64_t i = 0; i < reps; ++i) {
    out = out.Union(h.members.Translated(static_cast<std::uint32_t>(Uniform(rng, n))));
  }
  return out;
}

DenseSubset SetSampler::Draw(std::mt19937_64& rng) const {
  const std::int64_t size =
      min_size_ + static_cast<std::int64_t>(Uniform(rng, max_size_ - min_size_ + 1));
  if (kind_ != SamplerKind::kPerturbation) return DrawOfSize(rng, size);

  DenseSubset a = Base(rng);
  while (Size(a) > size) a.erase(Pick(rng, a.indices()));
  while (Size(a) < size) a.insert(Pick(rng, a.Complement().indices()));
  const std::uint64_t swaps = Uniform(rng, 3);
  for (std::uint64_t i = 0; i < swaps && !a.empty() && !a.is_full(); ++i) {
    const std::uint32_t out = Pick(rng, a.indices());
    const std::uint32_t in = Pick(rng, a.Complement().indices());
    a.erase(out);
    a.insert(in);
  }
  return a;
}

PropertyOutcome EvaluateProperty(const std::string& id, std::span<const DenseSubset> sets) {
  PropertyOutcome out;
  if (id == "kneser" || id == "kneser-union" || id == "pigeonhole") {
    RequireSets(id, sets, 2);
    const DenseSubset& a = sets[0];
    const DenseSubset& b = sets[1];
    const std::int64_t n = a.group()->order();
    if (id == "kneser") {
      if (a.empty() || b.empty()) return out;
      const DenseSubset s = Sumset(a, b);
      const std::int64_t rhs = Size(a) + Size(b) - static_cast<std::int64_t>(Period(s).order());
      out = {true, Size(s) >= rhs, "|A+B| = " + std::to_string(Size(s)), ">= " + std::to_string(rhs)};
    } else if (id == "kneser-union") {
      if (a.empty() || b.empty()) return out;
      const std::int64_t lhs = SizePlusPeriod(a.Union(b));
      const std::int64_t rhs = std::min(SizePlusPeriod(a), SizePlusPeriod(b));
      out = {true, lhs >= rhs, "|AuB| + |period| = " + std::to_string(lhs),
             ">= " + std::to_string(rhs)};
    } else {
      if (Sumset(a, b).is_full()) return out;
      out = {true, Size(a) + Size(b) <= n, "|A| + |B| = " + std::to_string(Size(a) + Size(b)),
             "<= " + std::to_string(n)};
    }
    return out;
  }
  if (id == "quarter") {
    RequireSets(id, sets, 1);
    const DenseSubset& a = sets[0];
    RequireFive(a.group()->spec(), 64);
    const std::int64_t n = a.group()->order();
    const std::int64_t two = Size(KFoldSumset(a, 2));
    if (2 * two >= n) return out;
    return {true, 4 * Size(a) < n,
            "|2A| = " + std::to_string(two) + ", |A| = " + std::to_string(Size(a)),
            "|A| < " + std::to_string(n) + "/4"};
  }
  if (id == "three-cosets" || id == "dense-coset" || id == "heavy-cosets") {
    RequireSets(id, sets, 1);
    RequireFive(sets[0].group()->spec(), 64);
    return CosetProperty(id, sets[0]);
  }
  if (id == "two-coset-cover") {
    RequireSets(id, sets, 1);
    const DenseSubset& a = sets[0];
    RequireFive(a.group()->spec(), 64);
    if (!LargeNonfull(a)) return out;
    const std::int64_t d = DistanceToTwoCosetUnion(a);
    return {true, d == 0, "distance to nearest two-coset union = " + std::to_string(d), "0"};
  }
  if (id == "triple-sum") {
    RequireSets(id, sets, 3);
    RequireFive(sets[0].group()->spec(), 64);
    const std::int64_t n = sets[0].group()->order();
    const std::int64_t a = Size(sets[0]), b = Size(sets[1]), c = Size(sets[2]);
    const auto window = [n](std::int64_t x) { return 5 * x > 2 * n && 2 * x < n; };
    if (!window(a) || !window(b) || 2 * (a + b + 3 * c) <= 3 * n) return out;
    const std::int64_t s = Size(Sumset(Sumset(sets[0], sets[1]), sets[2]));
    return {true, s == n, "|A+B+C| = " + std::to_string(s), "= " + std::to_string(n)};
  }
  throw std::invalid_argument("unknown property '" + id + "'");
}

bool Replays(const ViolationReport& v) { return !EvaluateProperty(v.property, v.witnesses).holds; }

namespace {

struct TrialOutcome {
  std::vector<std::string> applicable;
  std::vector<ViolationReport> violations;
};

// Runs `trial(rng, out)` for every trial index and merges by index.
template <class Body>
SuiteReport RunSuite(const std::string& suite, const TrialConfig& cfg,
                     const std::vector<std::string>& properties, const Body& trial) {
  const auto start = Clock::now();
  std::vector<TrialOutcome> outcomes(cfg.trials);
  ParallelFor(outcomes.size(), ResolveThreads(cfg.threads), [&](std::size_t t) {
    std::mt19937_64 rng = TrialRng(cfg.seed, static_cast<std::int64_t>(t));
    trial(rng, outcomes[t]);
    for (ViolationReport& v : outcomes[t].violations) v.trial = static_cast<std::int64_t>(t);
  });
  SuiteReport r;
  r.suite = suite;
  r.group = cfg.group;
  r.trials = cfg.trials;
  r.seed = cfg.seed;
  for (const std::string& p : properties) r.applicable[p] = 0;
  for (TrialOutcome& o : outcomes) {
    for (const std::string& p : o.applicable) ++r.applicable[p];
    for (ViolationReport& v : o.violations) r.violations.push_back(std::move(v));
  }
  r.elapsed_ms = MillisSince(start);
  return r;
}

void Evaluate(const std::vector<std::string>& properties, std::vector<DenseSubset> sets,
              TrialOutcome& out) {
  for (const std::string& p : properties) {
    const PropertyOutcome o = EvaluateProperty(p, sets);
    if (o.applicable) out.applicable.push_back(p);
    if (!o.holds) out.violations.push_back({p, 0, sets, o.observed, o.required});
  }
}

}  // namespace

SuiteReport CheckKneserSuite(const TrialConfig& cfg) {
  const GroupPtr g = Group::Make(cfg.group);
  const SetSampler sampler(g, cfg.sampler, cfg.lo, cfg.hi);
  const std::vector<std::string> props{"kneser", "kneser-union", "pigeonhole"};
  return RunSuite("kneser", cfg, props, [&](std::mt19937_64& rng, TrialOutcome& out) {
    DenseSubset a = sampler.Draw(rng);
    DenseSubset b = sampler.Draw(rng);
    Evaluate(props, {std::move(a), std::move(b)}, out);
  });
}

SuiteReport CheckQuarterDensity(const TrialConfig& cfg) {
  RequireFive(cfg.group, 64);
  const GroupPtr g = Group::Make(cfg.group);
  const SetSampler sampler(g, cfg.sampler, cfg.lo, cfg.hi);
  const std::vector<std::string> props{"quarter"};
  return RunSuite("quarter", cfg, props, [&](std::mt19937_64& rng, TrialOutcome& out) {
    Evaluate(props, {sampler.Draw(rng)}, out);
  });
}

SuiteReport CheckCosetPropositions(const TrialConfig& cfg) {
  RequireFive(cfg.group, 3);
  const GroupPtr g = Group::Make(cfg.group);
  const SetSampler sampler(g, cfg.sampler, cfg.lo, cfg.hi);
  const std::vector<std::string> props{"three-cosets", "dense-coset", "heavy-cosets",
                                       "two-coset-cover"};
  return RunSuite("props", cfg, props, [&](std::mt19937_64& rng, TrialOutcome& out) {
    Evaluate(props, {sampler.Draw(rng)}, out);
  });
}

SuiteReport CheckTripleSum(const TrialConfig& cfg) {
  RequireFive(cfg.group, 3);
  const GroupPtr g = Group::Make(cfg.group);
  const auto n = static_cast<std::int64_t>(g->order());
  const std::int64_t lo = 2 * n / 5 + 1;
  const std::int64_t hi = (n + 1) / 2 - 1;
  if (lo > hi) {
    throw std::invalid_argument("no size strictly between 2/5 and 1/2 of " + std::to_string(n));
  }
  const SetSampler sampler(g, SamplerKind::kUniformSize);
  const std::vector<std::string> props{"triple-sum"};
  return RunSuite("triple-sum", cfg, props, [&](std::mt19937_64& rng, TrialOutcome& out) {
    const std::int64_t a = lo + static_cast<std::int64_t>(Uniform(rng, hi - lo + 1));
    const std::int64_t b = lo + static_cast<std::int64_t>(Uniform(rng, hi - lo + 1));
    const std::int64_t cmin = std::max<std::int64_t>(0, (3 * n - 2 * (a + b)) / 6 + 1);
    const std::int64_t c = std::min<std::int64_t>(n, cmin + Uniform(rng, 3));
    std::vector<DenseSubset> sets;
    for (std::int64_t size : {a, b, c}) {
      sets.push_back(Uniform(rng, 2) ? sampler.DrawCosetUnion(rng, size)
                                     : sampler.DrawOfSize(rng, size));
    }
    Evaluate(props, std::move(sets), out);
  });
}

std::vector<std::uint64_t> TwoCosetUnionMasks(int n) {
  if (n < 1 || n > 2) throw BudgetExceeded("two-coset masks need n in {1, 2}");
  const GroupPtr g = Group::Make(GroupSpec::FromChain(std::vector<std::int64_t>(n, 5)));
  std::vector<std::uint64_t> out;
  for (const auto& row : ResidueTable(*g)) {
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) {
        std::uint64_t m = 0;
        for (std::uint32_t x = 0; x < g->order(); ++x) {
          if (row[x] == i || row[x] == j) m |= std::uint64_t{1} << x;
        }
        out.push_back(m);
      }
    }
  }
  return out;
}

StabilityReport VerifyStabilityExhaustive(int n, int min_size, int max_size, int threads,
                                          std::uint64_t seed) {
  if (n < 1 || n > 2) {
    throw BudgetExceeded("exhaustive stability scan needs n <= 2 (|G| <= 64), got n = " +
                         std::to_string(n));
  }
  const auto start = Clock::now();
  const GroupPtr g = Group::Make(GroupSpec::FromChain(std::vector<std::int64_t>(n, 5)));
  const int order = static_cast<int>(g->order());
  const int third = order / 5;
  if (min_size < 0) min_size = 3 * third / 2 + 1;
  if (max_size < 0) max_size = 2 * third + 1;
  max_size = std::min(max_size, order);
  const std::uint64_t full = g->full_word();
  const std::vector<std::uint64_t> unions = TwoCosetUnionMasks(n);
  const auto survives = [&](std::uint64_t m) { return word::KFold(*g, m, 3) != full; };
  const auto covered = [&](std::uint64_t m) {
    return std::any_of(unions.begin(), unions.end(), [m](std::uint64_t u) { return (m & ~u) == 0; });
  };

  StabilityReport report;
  report.n = n;
  std::vector<std::uint64_t> samples;
  constexpr int kCap = 1 << 20;
  for (int s = min_size; s <= max_size; ++s) {
    const LevelResult level = ScanLevel(order, s, kCap, ResolveThreads(threads), survives);
    StabilityLevel out{s, Binomial(order, s), level.count, 0};
    for (std::uint64_t m : level.witnesses) {
      if (covered(m)) {
        ++out.covered;
      } else if (10 * s > 3 * order) {
        report.violations.push_back({"two-coset-cover", 0, {DenseSubset::FromMask(g, m)},
                                     "3A != G outside every two-coset union", "two-coset cover"});
      }
      if (samples.size() < 64 * static_cast<std::size_t>(s - min_size + 1)) samples.push_back(m);
    }
    if (level.count > level.witnesses.size()) {
      report.violations.push_back({"two-coset-cover", 0, {},
                                   std::to_string(level.count) + " survivors of size " +
                                       std::to_string(s) + " exceed the scan cap",
                                   "all survivors checked"});
    }
    report.levels.push_back(out);
  }

  // Random automorphisms x -> Mx with M invertible over F_5.
  std::mt19937_64 rng = TrialRng(seed, 0);
  const SetSampler sampler(g, SamplerKind::kUniformSize);
  for (int s = min_size; s <= max_size; ++s) {
    for (int i = 0; i < 64; ++i) samples.push_back(sampler.DrawOfSize(rng, s).mask());
  }
  std::vector<std::int64_t> x(n), y(n);
  for (int t = 0; t < 4; ++t) {
    std::vector<std::int64_t> m(n * n);
    while (true) {
      for (auto& v : m) v = static_cast<std::int64_t>(Uniform(rng, 5));
      const std::int64_t det = n == 1 ? m[0] : m[0] * m[3] - m[1] * m[2];
      if (det % 5 != 0) break;
    }
    std::vector<std::uint32_t> image(order);
    for (int i = 0; i < order; ++i) {
      g->Coords(i, x);
      for (int r = 0; r < n; ++r) {
        y[r] = 0;
        for (int c = 0; c < n; ++c) y[r] += m[r * n + c] * x[c];
        y[r] %= 5;
      }
      image[i] = g->Index(GroupElement{y});
    }
    for (std::uint64_t a : samples) {
      std::uint64_t b = 0;
      for (std::uint64_t r = a; r; r &= r - 1) b |= std::uint64_t{1} << image[std::countr_zero(r)];
      ++report.automorphism_checks;
      if (survives(a) != survives(b) || covered(a) != covered(b)) {
        report.automorphism_invariant = false;
      }
    }
  }
  report.elapsed_ms = MillisSince(start);
  return report;
}

FalsifierReport FalsifyStabilityStochastic(const FalsifierConfig& cfg) {
  if (cfg.n < 2 || cfg.n > 3) {
    throw std::invalid_argument("the stochastic falsifier needs n in {2, 3}, got n = " +
                                std::to_string(cfg.n));
  }
  const auto start = Clock::now();
  const GroupPtr g = Group::Make(GroupSpec::FromChain(std::vector<std::int64_t>(cfg.n, 5)));
  const auto order = static_cast<std::int64_t>(g->order());
  const std::int64_t size = cfg.size < 0 ? 3 * (order / 5) / 2 + 1 : cfg.size;
  if (size < 2 || size > order - 1) {
    throw std::invalid_argument("falsifier size must be in [2, |G| - 1]");
  }
  const bool in_range = 10 * size > 3 * order;
  const auto residues = ResidueTable(*g);
  const SetSampler sampler(g, SamplerKind::kUniformSize);

  const auto distance = [&](const DenseSubset& a) {
    const auto idx = a.indices();
    std::int64_t best = size;
    for (const auto& row : residues) {
      std::array<std::int64_t, 5> counts{};
      for (std::uint32_t i : idx) ++counts[row[i]];
      std::sort(counts.begin(), counts.end(), std::greater<>());
      best = std::min(best, size - counts[0] - counts[1]);
    }
    return best;
  };
  struct Score {
    std::int64_t complement = 0;
    std::int64_t distance = 0;
    // Larger complement first, then smaller positive distance.
    bool operator<(const Score& o) const {
      return complement != o.complement ? complement < o.complement : distance > o.distance;
    }
  };
  const auto score = [&](const DenseSubset& a) {
    return Score{order - Size(KFoldSumset(a, 3)), distance(a)};
  };

  struct RestartResult {
    bool nonfull = false;
    std::int64_t best_complement = 0;
    std::vector<ViolationReport> violations;
  };
  std::vector<RestartResult> results(cfg.restarts);
  ParallelFor(results.size(), ResolveThreads(cfg.threads), [&](std::size_t r) {
    std::mt19937_64 rng = TrialRng(cfg.seed, static_cast<std::int64_t>(r));
    RestartResult& out = results[r];
    DenseSubset a = sampler.DrawOfSize(rng, size);
    while (distance(a) == 0) a = sampler.DrawOfSize(rng, size);
    Score cur = score(a);
    const auto record = [&]() {
      if (cur.complement == 0) return false;
      out.nonfull = true;
      out.best_complement = std::max(out.best_complement, cur.complement);
      if (in_range) {
        out.violations.push_back({"two-coset-cover", static_cast<std::int64_t>(r), {a},
                                  "3A misses " + std::to_string(cur.complement) +
                                      " elements at distance " + std::to_string(cur.distance),
                                  "two-coset cover"});
      }
      return true;
    };
    const auto swap = [&](DenseSubset& b) {
      b.erase(Pick(rng, b.indices()));
      b.insert(Pick(rng, a.Complement().indices()));
    };
    if (record()) return;
    int stale = 0;
    for (int step = 0; step < cfg.steps; ++step) {
      DenseSubset b = a;
      swap(b);
      const Score next = score(b);
      if (next.distance == 0 || next < cur) {
        ++stale;
      } else {
        stale = cur < next ? 0 : stale + 1;
        a = std::move(b);
        cur = next;
        if (record()) return;
      }
      if (stale >= cfg.plateau) {
        for (int k = 0; k < 3; ++k) {
          DenseSubset c = a;
          swap(c);
          if (distance(c) > 0) a = std::move(c);
        }
        cur = score(a);
        stale = 0;
        if (record()) return;
      }
    }
  });

  FalsifierReport report;
  report.n = cfg.n;
  report.restarts = cfg.restarts;
  report.size = size;
  for (RestartResult& r : results) {
    report.nonfull_restarts += r.nonfull;
    report.best_complement = std::max(report.best_complement, r.best_complement);
    for (ViolationReport& v : r.violations) report.violations.push_back(std::move(v));
  }
  report.elapsed_ms = MillisSince(start);
  return report;
}

nlohmann::json ToJson(const ViolationReport& v) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const DenseSubset& w : v.witnesses) witnesses.push_back(FormatSetLiteral(w));
  return {{"property", v.property},
          {"trial", v.trial},
          {"witnesses", witnesses},
          {"observed", v.observed},
          {"required", v.required}};
}

namespace {

nlohmann::json ViolationsJson(const std::vector<ViolationReport>& vs) {
  nlohmann::json out = nlohmann::json::array();
  for (const ViolationReport& v : vs) out.push_back(ToJson(v));
  return out;
}

}  // namespace

nlohmann::json ToJson(const SuiteReport& r) {
  return {{"suite", r.suite},
          {"group", r.group.ToString()},
          {"trials", r.trials},
          {"seed", r.seed},
          {"applicable", r.applicable},
          {"violations", ViolationsJson(r.violations)},
          {"elapsed_ms", r.elapsed_ms}};
}

nlohmann::json ToJson(const StabilityReport& r) {
  nlohmann::json levels = nlohmann::json::array();
  for (const StabilityLevel& l : r.levels) {
    levels.push_back({{"size", l.size},
                      {"subsets", l.subsets},
                      {"survivors", l.survivors},
                      {"covered", l.covered}});
  }
  return {{"suite", "stability"},
          {"n", r.n},
          {"levels", levels},
          {"violations", ViolationsJson(r.violations)},
          {"automorphism_checks", r.automorphism_checks},
          {"automorphism_invariant", r.automorphism_invariant},
          {"elapsed_ms", r.elapsed_ms}};
}

nlohmann::json ToJson(const FalsifierReport& r) {
  return {{"suite", "falsifier"},
          {"n", r.n},
          {"restarts", r.restarts},
          {"size", r.size},
          {"nonfull_restarts", r.nonfull_restarts},
          {"best_complement", r.best_complement},
          {"violations", ViolationsJson(r.violations)},
          {"elapsed_ms", r.elapsed_ms}};
}

}  // namespace sumsetlab
