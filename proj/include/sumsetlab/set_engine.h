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

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "sumsetlab/dense_subset.h"
#include "sumsetlab/subgroup.h"

namespace sumsetlab {

// A + B. Both sets must live in the same group.
DenseSubset Sumset(const DenseSubset& a, const DenseSubset& b);

// kA for k >= 1 (binary doubling). Throws std::invalid_argument for k == 0.
DenseSubset KFoldSumset(const DenseSubset& a, int k);

// The stabilizer {g : A + g = A}. By convention the period of the empty set
// is the whole group.
Subgroup Period(const DenseSubset& a);
bool IsAperiodic(const DenseSubset& a);

// kA != G, and k(A u {g}) = G for every g outside A.
bool IsMaximalNonfull(const DenseSubset& a, int k);

// True iff the subgroup generated by A is G.
bool Generates(const DenseSubset& a);

// Least k >= 0 with k(A u {0}) = G; nullopt when A does not generate G.
// The trivial group needs k = 0.
std::optional<int> MinCoverK(const DenseSubset& a);

// Densities of A in the five cosets i*e + F of an index-5 subgroup F.
struct CosetProfile {
  Subgroup subgroup;
  std::uint32_t direction = 0;
  std::array<std::int64_t, 5> counts{};
  std::int64_t coset_size = 1;

  double density(int i) const {
    return static_cast<double>(counts[i]) / static_cast<double>(coset_size);
  }
  int occupied() const;
};

CosetProfile CosetProfileOf(const DenseSubset& a, const Subgroup& f,
                            std::uint32_t e);

// An index-5 subgroup of Z_5^n written as the kernel of x -> <c, x> mod 5,
// normalized so that the first nonzero coefficient is 1.
struct LinearFunctional {
  std::vector<std::int64_t> coeffs;

  std::int64_t Apply(std::span<const std::int64_t> x) const;
  friend bool operator==(const LinearFunctional&,
                         const LinearFunctional&) = default;
};

// All (5^n - 1)/4 normalized functionals, in increasing mixed-radix order of
// the coefficient vector. Throws unless the group is Z_5^n.
std::vector<LinearFunctional> IndexFiveFunctionals(const GroupSpec& spec);

Subgroup KernelOf(const GroupPtr& group, const LinearFunctional& c);
// Least element index x with <c, x> = 1.
std::uint32_t UnitDirection(const Group& group, const LinearFunctional& c);

// Residue counts |A n {x : <c,x> = i}| for i in [0, 5).
std::array<std::int64_t, 5> ResidueCounts(const DenseSubset& a,
                                          const LinearFunctional& c);

struct TwoCosetCover {
  LinearFunctional functional;
  Subgroup subgroup;
  std::uint32_t direction = 0;       // <c, direction> = 1
  std::array<int, 2> cosets{0, 1};   // residues i with i*direction + F used
};

// First index-5 subgroup (in IndexFiveFunctionals order) two of whose cosets
// cover A. Requires G = Z_5^n.
std::optional<TwoCosetCover> TwoCosetCoverExists(const DenseSubset& a);

// |A| minus the largest |A n (C1 u C2)| over pairs of cosets of index-5
// subgroups; zero iff a two-coset cover exists. Requires G = Z_5^n, n >= 1.
std::int64_t DistanceToTwoCosetUnion(const DenseSubset& a);

}  // namespace sumsetlab
