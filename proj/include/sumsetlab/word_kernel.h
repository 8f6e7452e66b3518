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

// Set kernels for groups of order <= 64, where a subset is one machine word.
// These are the inner loops of the exhaustive searches.

#pragma once

#include <bit>
#include <cstdint>
#include <utility>

#include "sumsetlab/group.h"

namespace sumsetlab::word {

inline std::uint64_t Sumset(const Group& g, std::uint64_t a, std::uint64_t b) {
  if (std::popcount(a) > std::popcount(b)) std::swap(a, b);
  const std::uint64_t full = g.full_word();
  std::uint64_t out = 0;
  while (a) {
    out |= g.TranslateWord(b, static_cast<std::uint32_t>(std::countr_zero(a)));
    if (out == full) break;
    a &= a - 1;
  }
  return out;
}

// kA by binary doubling; k >= 1.
inline std::uint64_t KFold(const Group& g, std::uint64_t a, int k) {
  std::uint64_t result = 0;
  bool have = false;
  std::uint64_t power = a;
  while (true) {
    if (k & 1) {
      result = have ? Sumset(g, result, power) : power;
      have = true;
    }
    k >>= 1;
    if (!k) break;
    power = Sumset(g, power, power);
  }
  return result;
}

// Stabilizer {x : A + x = A} as a mask. The empty set is stabilized by all.
inline std::uint64_t Period(const Group& g, std::uint64_t a) {
  if (a == 0) return g.full_word();
  // Every period element lies in A - a0.
  const auto a0 = static_cast<std::uint32_t>(std::countr_zero(a));
  std::uint64_t cand = g.TranslateWord(a, g.Negate(a0));
  std::uint64_t out = 0;
  while (cand) {
    const auto x = static_cast<std::uint32_t>(std::countr_zero(cand));
    if (g.TranslateWord(a, x) == a) out |= std::uint64_t{1} << x;
    cand &= cand - 1;
  }
  return out;
}

inline bool IsAperiodic(const Group& g, std::uint64_t a) {
  if (a == 0) return g.order() == 1;
  const auto a0 = static_cast<std::uint32_t>(std::countr_zero(a));
  std::uint64_t cand = g.TranslateWord(a, g.Negate(a0)) & ~std::uint64_t{1};
  while (cand) {
    const auto x = static_cast<std::uint32_t>(std::countr_zero(cand));
    if (g.TranslateWord(a, x) == a) return false;
    cand &= cand - 1;
  }
  return true;
}

// True iff kA != G and k(A + {x}) = G for every x outside A. Uses the
// cached partial sumsets jA: k(A u {x}) = U_{j} ((k-j)A + jx).
inline bool IsMaximalNonfull(const Group& g, std::uint64_t a, int k) {
  constexpr int kMaxK = 64;
  if (k < 1 || k > kMaxK) return false;
  const std::uint64_t full = g.full_word();
  std::uint64_t partial[kMaxK + 1];
  partial[0] = 1;  // {0}
  for (int j = 1; j <= k; ++j) partial[j] = Sumset(g, partial[j - 1], a);
  if (partial[k] == full) return false;
  std::uint64_t outside = full & ~a;
  while (outside) {
    const auto x = static_cast<std::uint32_t>(std::countr_zero(outside));
    std::uint64_t u = partial[k];
    std::uint32_t jx = 0;
    for (int j = 1; j <= k && u != full; ++j) {
      jx = g.Add(jx, x);
      u |= g.TranslateWord(partial[k - j], jx);
    }
    if (u != full) return false;
    outside &= outside - 1;
  }
  return true;
}

// Least k >= 0 with k(A u {0}) = G, or -1 when A does not generate G.
inline int MinCoverK(const Group& g, std::uint64_t a) {
  const std::uint64_t full = g.full_word();
  const std::uint64_t base = a | 1;
  std::uint64_t cur = 1;
  int k = 0;
  while (cur != full) {
    const std::uint64_t next = Sumset(g, cur, base);
    if (next == cur) return -1;
    cur = next;
    ++k;
  }
  return k;
}

}  // namespace sumsetlab::word
