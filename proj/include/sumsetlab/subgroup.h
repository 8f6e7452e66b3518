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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sumsetlab/dense_subset.h"
#include "sumsetlab/group.h"

namespace sumsetlab {

struct Subgroup {
  DenseSubset members;
  std::vector<std::uint32_t> generators;
  std::int64_t index = 1;

  std::size_t order() const { return members.size(); }
  const GroupPtr& group() const { return members.group(); }
  bool contains(std::uint32_t g) const { return members.contains(g); }

  // Closure of `gens`; the stored generator list keeps only the generators
  // that enlarged the closure when added in order.
  static Subgroup Generated(const GroupPtr& group,
                            std::span<const std::uint32_t> gens);
  // Throws std::invalid_argument("subgroup not closed") unless `members`
  // contains 0 and is closed under addition.
  static Subgroup FromMembers(DenseSubset members);
  static Subgroup Trivial(const GroupPtr& group);
  static Subgroup Whole(const GroupPtr& group);
};

// Every subgroup of G with |H| <= max_order (all when max_order < 0), sorted
// by order and then lexicographically by sorted member indices. Requires
// |G| <= 64.
std::vector<Subgroup> EnumerateSubgroups(const GroupSpec& spec,
                                         std::int64_t max_order = -1);

// The canonical surjection G -> G/H, with G/H identified with its
// invariant-factor chain.
struct QuotientMap {
  GroupSpec spec;
  GroupPtr quotient;
  std::vector<std::uint32_t> table;  // element index -> quotient index
};

QuotientMap MakeQuotientMap(const Subgroup& h);

// Max over generating A of the least k with k(A u {0}) = G, by enumerating
// all 2^|G| subsets. Throws BudgetExceeded when |G| > 12.
std::int64_t DiamPlusBruteforce(const GroupSpec& spec);

}  // namespace sumsetlab
