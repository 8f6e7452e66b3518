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

// Fixed-size subset enumeration over machine words in colex order (the
// increasing order of the masks), split into contiguous rank chunks.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "sumsetlab/parallel.h"

namespace sumsetlab {

inline const std::array<std::array<std::uint64_t, 65>, 65>& BinomialTable() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, 65>, 65> t{};
    for (int n = 0; n <= 64; ++n) {
      t[n][0] = 1;
      for (int r = 1; r <= n; ++r) t[n][r] = t[n - 1][r - 1] + t[n - 1][r];
    }
    return t;
  }();
  return table;
}

inline std::uint64_t Binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  return BinomialTable()[n][r];
}

// The r-th s-subset of [0, n) in colex order, as a mask.
inline std::uint64_t UnrankColex(std::uint64_t r, int s) {
  std::uint64_t mask = 0;
  for (int i = s; i >= 1; --i) {
    int c = i - 1;
    while (Binomial(c + 1, i) <= r) ++c;
    mask |= std::uint64_t{1} << c;
    r -= Binomial(c, i);
  }
  return mask;
}

inline std::uint64_t NextColex(std::uint64_t x) {
  const std::uint64_t u = x & (~x + 1);
  const std::uint64_t v = x + u;
  return v + (((v ^ x) / u) >> 2);
}

struct LevelResult {
  std::vector<std::uint64_t> witnesses;
  std::uint64_t count = 0;
};

// Tests every s-subset of [0, n) against pred, keeping the first `cap` hits
// in colex order. Chunks are contiguous rank ranges merged in rank order.
template <class Pred>
LevelResult ScanLevel(int n, int s, int cap, int threads, const Pred& pred) {
  const std::uint64_t total = Binomial(n, s);
  const std::uint64_t chunks =
      std::clamp<std::uint64_t>(total / 4096, 1, 4096);
  std::vector<LevelResult> parts(chunks);
  ParallelFor(chunks, threads, [&](std::size_t c) {
    const std::uint64_t base = total / chunks;
    const std::uint64_t extra = total % chunks;
    const std::uint64_t lo = c * base + std::min<std::uint64_t>(c, extra);
    const std::uint64_t len = base + (c < extra ? 1 : 0);
    LevelResult& out = parts[c];
    if (len == 0) return;
    std::uint64_t mask = UnrankColex(lo, s);
    for (std::uint64_t i = 0;; ++i) {
      if (pred(mask)) {
        ++out.count;
        if (out.witnesses.size() < static_cast<std::size_t>(cap)) {
          out.witnesses.push_back(mask);
        }
      }
      if (i + 1 == len) break;
      mask = NextColex(mask);
    }
  });
  LevelResult merged;
  for (const LevelResult& p : parts) {
    merged.count += p.count;
    for (std::uint64_t w : p.witnesses) {
      if (merged.witnesses.size() < static_cast<std::size_t>(cap)) {
        merged.witnesses.push_back(w);
      }
    }
  }
  return merged;
}

}  // namespace sumsetlab
