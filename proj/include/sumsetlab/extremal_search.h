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

// Extremal constants of a finite abelian group G and an integer k >= 1:
//
//   M_k(G)    max |A| with kA != G
//   N_k(G)    max |A| over aperiodic A with kA != G that are maximal with
//             this property
//   b+_rho(G) max |A| over aperiodic generating A with
//             (rho-1)(A u {0}) != G, maximal with this property
//
// with max of the empty family = 0. Searches run over one-word groups
// (|G| <= 64) by enumerating fixed-size subsets in colex order.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sumsetlab/dense_subset.h"
#include "sumsetlab/group.h"
#include "sumsetlab/subgroup.h"

namespace sumsetlab {

enum class Constant { kMk, kNk, kBt };
enum class SearchMethod { kFormula, kExhaustive, kDescending, kStochastic };

std::string ToString(Constant c);
std::string ToString(SearchMethod m);

struct SearchOptions {
  // Upper limit on candidate subsets tested; checked before each size level.
  std::uint64_t budget = 200'000'000;
  int witness_cap = 16;
  // 0 resolves through ResolveThreads.
  int threads = 0;
};

struct SearchReport {
  GroupSpec group;
  int k = 0;  // rho for kBt
  Constant constant = Constant::kNk;
  std::int64_t value = 0;
  // The first witness_cap extremal sets in colex order of their masks.
  std::vector<DenseSubset> witnesses;
  // Number of extremal sets at the optimal size (exhaustive methods).
  std::uint64_t extremal_count = 0;
  std::uint64_t nodes = 0;
  double elapsed_ms = 0;
  SearchMethod method = SearchMethod::kDescending;
  // Sizes scanned, from size_high down to size_low.
  std::int64_t size_high = 0;
  std::int64_t size_low = 0;
};

nlohmann::json ToJson(const SearchReport& r);

struct MkFormulaResult {
  std::int64_t value = 0;
  std::int64_t divisor = 1;  // least maximizing divisor
};

// max over d | |G| of (floor((d-2)/k) + 1) * |G|/d.
MkFormulaResult MkFormula(const GroupSpec& spec, int k);

// Exhaustive M_k: a full 2^|G| scan for |G| <= 16, otherwise a
// size-descending scan from |G| - 1 under the node budget.
SearchReport MkBruteforce(const GroupSpec& spec, int k,
                          const SearchOptions& options = {});

// floor((|G|-2)/k) + 1 with floor division (0 for the trivial group).
std::int64_t NkUpperBound(std::int64_t order, int k);

// Size-descending exhaustive N_k. Starts at NkUpperBound and stops at the
// first size with an extremal set. Throws BudgetExceeded when |G| > 64 or
// when the next level would exceed the budget; the message names the sizes
// already covered.
SearchReport NkSearch(const GroupSpec& spec, int k,
                      const SearchOptions& options = {});

struct KnownValue {
  std::int64_t value = 0;
  std::string source;
};

// Every closed-form N_k(G) that applies to (G, k), in a fixed rule order.
std::vector<KnownValue> LookupKnownValues(const GroupSpec& spec, int k);
// The first of LookupKnownValues, if any.
std::optional<KnownValue> LookupKnownValue(const GroupSpec& spec, int k);

enum class BtDefinition {
  // Aperiodic, generating, (rho-1)(A u {0}) != G, maximal.
  kGenerating,
  // 0 when rho > diam+(G); otherwise aperiodic, (rho-1)(A u {0}) != G,
  // maximal (generation not required).
  kSimplified,
};

SearchReport BtRhoSearch(const GroupSpec& spec, int rho,
                         const SearchOptions& options = {},
                         BtDefinition definition = BtDefinition::kGenerating);

struct ReductionTerm {
  Subgroup subgroup;
  GroupSpec quotient;
  std::int64_t quotient_nk = 0;
  std::int64_t product = 0;
};

struct ReductionReport {
  GroupSpec group;
  int k = 0;
  std::int64_t mk = 0;
  std::vector<ReductionTerm> terms;  // one per subgroup
  std::size_t best = 0;              // first term attaining the maximum
  bool holds = false;
};

// Compares the brute-force M_k(G) with max over H <= G of |H| N_k(G/H).
ReductionReport ReductionIdentityCheck(const GroupSpec& spec, int k,
                                       const SearchOptions& options = {});

nlohmann::json ToJson(const ReductionReport& r);

}  // namespace sumsetlab
