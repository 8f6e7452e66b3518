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

// Explicit large sets with 3A != G, each returned together with a mechanical
// check of every property it is supposed to have.
//
// Builders that take a list of cyclic orders work in product coordinates
// (x_1, ..., x_t) with x_i in Z_{q_i} and map the result onto the
// invariant-factor chain through DecomposeCyclicSum. The first listed order
// is the summand G_1 with generator e = (1, 0, ..., 0); H is the sum of the
// remaining summands. "Least" choices inside H use H's own mixed-radix
// order, first coordinate fastest.

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

struct PropertyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
  // False for checks reported for information only: the construction is not
  // expected to have the property.
  bool claimed = true;
};

struct Construction {
  std::string kind;
  DenseSubset set;
  std::vector<PropertyCheck> checks;

  // True iff every claimed check passes.
  bool AllPass() const;
  const PropertyCheck* Find(const std::string& name) const;
};

nlohmann::json ToJson(const Construction& c, bool include_checks = true);

// H u (e+H) u ... u ((m-1)e+H) u (me+S), built recursively with S = {} on
// the trivial group; every order must be 1 mod 3 (and at least 4).
Construction BuildDecomp(const std::vector<std::int64_t>& orders);

// The union of cosets i*e + F and j*e + F of an index-5 subgroup F of
// Z_5^n, where e is the least element outside F.
Construction BuildTwoCoset(const Subgroup& f, int i, int j);
// Same with F = {x : x_1 = 0}.
Construction BuildTwoCoset(int n, int i, int j);

// (H \ {0}) u (e + S) u {2e} in Z_5^n with H = {x : x_1 = 0} and
// e = (1, 0, ..., 0). The default S takes the lower-index element of every
// pair {h, -h}, h != 0. A caller-supplied S must lie in H, have
// (|H|-1)/2 elements and satisfy 0 not in 2S.
Construction BuildX22(int n);
Construction BuildX22(int n, const std::vector<GroupElement>& s);

enum class Parity { kOdd, kEven };

// orders = {3m+2, H orders...}. The claimed properties are that the target
// t = (3m+1)e (plus g in the even case) is missing from 3A, that t lies in
// 3(A u {x}) for every x outside A, and aperiodicity; the stronger
// 3(A u {x}) = G is reported unclaimed. Odd |H|: S takes the lower element of each
// pair {h, -h}; even |H|: g is the least element outside 2H and S takes the
// lower element of each pair {h, g-h}. A stated parity must match |H|.
Construction BuildMod3(const std::vector<std::int64_t>& orders,
                       std::optional<Parity> parity = std::nullopt);

}  // namespace sumsetlab
