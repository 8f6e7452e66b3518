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

// Randomized and exhaustive checks of sumset inequalities and of the
// two-coset structure of large sets A in Z_5^n with 3A != G.
//
// Every trial draws from its own generator, seeded from (seed, trial index),
// so results do not depend on the number of worker threads. Sizes and
// random choices use raw mt19937_64 output only, which makes trial sequences
// identical across standard libraries.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "sumsetlab/dense_subset.h"
#include "sumsetlab/group.h"

namespace sumsetlab {

enum class SamplerKind { kUniformSize, kDensityWindow, kPerturbation };
std::string ToString(SamplerKind kind);
// "uniform", "window" or "perturb".
std::optional<SamplerKind> ParseSamplerKind(const std::string& s);

struct TrialConfig {
  GroupSpec group;
  SamplerKind sampler = SamplerKind::kUniformSize;
  // Closed density window [lo, hi] for kDensityWindow and kPerturbation.
  double lo = 0.0;
  double hi = 1.0;
  std::int64_t trials = 1000;
  std::uint64_t seed = 1;
  int threads = 0;
};

// The generator for trial `trial` of a run seeded with `seed`.
std::mt19937_64 TrialRng(std::uint64_t seed, std::int64_t trial);

class SetSampler {
 public:
  // Throws std::invalid_argument if the window contains no size.
  SetSampler(GroupPtr group, SamplerKind kind, double lo = 0.0, double hi = 1.0);

  DenseSubset Draw(std::mt19937_64& rng) const;
  // A uniformly random subset of the given size.
  DenseSubset DrawOfSize(std::mt19937_64& rng, std::int64_t size) const;
  // A uniformly random subset of the given size inside the union of
  // ceil(size / |F|) random cosets (sometimes one more) of a random index-5
  // subgroup F. Z_5^n only.
  DenseSubset DrawCosetUnion(std::mt19937_64& rng, std::int64_t size) const;

  std::int64_t min_size() const { return min_size_; }
  std::int64_t max_size() const { return max_size_; }

 private:
  DenseSubset Base(std::mt19937_64& rng) const;

  GroupPtr group_;
  SamplerKind kind_;
  std::int64_t min_size_ = 0;
  std::int64_t max_size_ = 0;
  bool five_ = false;
};

// Result of one property on one tuple of sets. A property whose hypotheses
// fail is not applicable and holds vacuously.
struct PropertyOutcome {
  bool applicable = false;
  bool holds = true;
  std::string observed;
  std::string required;
};

// Property ids and the sets they take:
//   kneser        (A, B)     |A+B| >= |A| + |B| - |period(A+B)|
//   kneser-union  (A, B)     |AuB| + |period(AuB)| >= min over A, B of |X| + |period(X)|
//   pigeonhole    (A, B)     A+B != G implies |A| + |B| <= |G|
//   quarter       (A)        density(2A) < 1/2 implies density(A) < 1/4
//   three-cosets  (A)        density(A) > 0.3 and 3A != G: no index-5 F
//                            has exactly three cosets meeting A
//   dense-coset   (A)        same hypotheses; if A has density > 1/2 in
//                            some F-coset then A meets at most three F-cosets
//   heavy-cosets  (A)        same hypotheses; if every F-coset density is
//                            < 1/2 then at most one exceeds 2/5
//   two-coset-cover (A)      same hypotheses; A lies in the union of two
//                            cosets of one index-5 subgroup
//   triple-sum    (A, B, C)  2/5 < alpha, beta < 1/2 and
//                            alpha + beta + 3 gamma > 3/2 imply A+B+C = G
// The last six need G = Z_5^n. Throws std::invalid_argument for an unknown
// id or the wrong number of sets.
PropertyOutcome EvaluateProperty(const std::string& id, std::span<const DenseSubset> sets);

struct ViolationReport {
  std::string property;
  std::int64_t trial = 0;
  std::vector<DenseSubset> witnesses;
  std::string observed;
  std::string required;
};

// Re-evaluates the property on the stored witnesses; true iff it fails again.
bool Replays(const ViolationReport& v);

struct SuiteReport {
  std::string suite;
  GroupSpec group;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  // Trials in which each property's hypotheses held.
  std::map<std::string, std::int64_t> applicable;
  std::vector<ViolationReport> violations;
  double elapsed_ms = 0;
};

// kneser, kneser-union and pigeonhole on pairs drawn from cfg.
SuiteReport CheckKneserSuite(const TrialConfig& cfg);
// quarter on sets drawn from cfg; G = Z_5^n.
SuiteReport CheckQuarterDensity(const TrialConfig& cfg);
// three-cosets, dense-coset and heavy-cosets on sets drawn from cfg;
// G = Z_5^n with n <= 3.
SuiteReport CheckCosetPropositions(const TrialConfig& cfg);
// triple-sum on triples with alpha, beta in the open window (2/5, 1/2) and
// gamma just above the threshold; G = Z_5^n with n <= 3. Half of the sets
// are unions of cosets of an index-5 subgroup trimmed to size.
SuiteReport CheckTripleSum(const TrialConfig& cfg);

// Every index-5 subgroup and pair of its cosets, as masks over Z_5^n with
// n <= 2: 60 unions for n = 2.
std::vector<std::uint64_t> TwoCosetUnionMasks(int n);

struct StabilityLevel {
  int size = 0;
  std::uint64_t subsets = 0;
  std::uint64_t survivors = 0;  // 3A != G
  std::uint64_t covered = 0;    // survivors inside a two-coset union
};

struct StabilityReport {
  int n = 2;
  std::vector<StabilityLevel> levels;
  std::vector<ViolationReport> violations;
  std::int64_t automorphism_checks = 0;
  bool automorphism_invariant = true;
  double elapsed_ms = 0;
};

// Every A in Z_5^n with min_size <= |A| <= max_size (defaults: the least
// size above 3 * 5^(n-1) / 2, and 2 * 5^(n-1) + 1). Survivors with 3A != G
// above that size must lie in a two-coset union; below it, uncovered
// survivors are only counted. Sampled survivors and non-survivors are
// mapped through random automorphisms, which must preserve both 3A != G and
// the cover. Needs n <= 2.
StabilityReport VerifyStabilityExhaustive(int n = 2, int min_size = -1, int max_size = -1,
                                          int threads = 0, std::uint64_t seed = 1);

struct FalsifierConfig {
  int n = 3;
  std::int64_t restarts = 1000;
  std::uint64_t seed = 1;
  int steps = 300;    // swap proposals per restart
  int plateau = 50;   // non-improving proposals before a random kick
  int threads = 0;
  // Set size; -1 for floor(3 * 5^(n-1) / 2) + 1. Smaller sizes are outside
  // the stability range and serve as a positive control.
  std::int64_t size = -1;
};

struct FalsifierReport {
  int n = 3;
  std::int64_t restarts = 0;
  std::int64_t size = 0;
  // Restarts that reached some A with 3A != G outside every two-coset union,
  // and the largest |G \ 3A| seen. They are violations when the size exceeds
  // 3 * 5^(n-1) / 2.
  std::int64_t nonfull_restarts = 0;
  std::int64_t best_complement = 0;
  std::vector<ViolationReport> violations;
  double elapsed_ms = 0;
};

// Hill climbing on sets of size floor(3 * 5^(n-1) / 2) + 1, started outside
// every two-coset union. Proposals swap one member for one non-member. A
// proposal is rejected if it enters a two-coset union, lowers |G \ 3A|, or
// keeps |G \ 3A| and raises the distance to the nearest two-coset union.
// After `plateau` proposals without strict improvement three random swaps
// are forced. Each restart stops at the first state with 3A != G, which is
// necessarily at positive distance. Needs n in {2, 3}.
FalsifierReport FalsifyStabilityStochastic(const FalsifierConfig& cfg);

nlohmann::json ToJson(const ViolationReport& v);
nlohmann::json ToJson(const SuiteReport& r);
nlohmann::json ToJson(const StabilityReport& r);
nlohmann::json ToJson(const FalsifierReport& r);

}  // namespace sumsetlab
