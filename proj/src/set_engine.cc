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

#include "sumsetlab/set_engine.h"

#include <algorithm>
#include <stdexcept>

#include "sumsetlab/word_kernel.h"

namespace sumsetlab {
namespace {

void RequireElementaryFive(const GroupSpec& spec) {
  if (!spec.is_elementary(5)) {
    throw std::invalid_argument("group " + spec.ToString() +
                                " is not of the form Z_5^n");
  }
}

}  // namespace

DenseSubset Sumset(const DenseSubset& a, const DenseSubset& b) {
  RequireSameGroup(a, b);
  const Group& g = *a.group();
  if (g.single_word()) {
    return DenseSubset::FromMask(a.group(), word::Sumset(g, a.mask(), b.mask()));
  }
  const DenseSubset& small = a.size() <= b.size() ? a : b;
  const DenseSubset& large = a.size() <= b.size() ? b : a;
  std::vector<std::uint64_t> out(g.word_count(), 0);
  std::vector<std::uint64_t> shifted(g.word_count(), 0);
  for (std::uint32_t x : small.indices()) {
    g.Translate(large.words(), x, shifted);
    for (std::size_t w = 0; w < out.size(); ++w) out[w] |= shifted[w];
  }
  return DenseSubset::FromWords(a.group(), std::move(out));
}

DenseSubset KFoldSumset(const DenseSubset& a, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  const Group& g = *a.group();
  if (g.single_word()) {
    return DenseSubset::FromMask(a.group(), word::KFold(g, a.mask(), k));
  }
  std::optional<DenseSubset> result;
  DenseSubset power = a;
  while (true) {
    if (k & 1) result = result ? Sumset(*result, power) : power;
    k >>= 1;
    if (!k) break;
    power = Sumset(power, power);
  }
  return *result;
}

Subgroup Period(const DenseSubset& a) {
  const GroupPtr& gp = a.group();
  if (a.empty()) return Subgroup::Whole(gp);
  const Group& g = *gp;
  std::vector<std::uint32_t> members;
  if (g.single_word()) {
    const std::uint64_t p = word::Period(g, a.mask());
    return Subgroup::FromMembers(DenseSubset::FromMask(gp, p));
  }
  const DenseSubset cand = a.Translated(g.Negate(a.first()));
  for (std::uint32_t x : cand.indices()) {
    if (a.Translated(x) == a) members.push_back(x);
  }
  return Subgroup::Generated(gp, members);
}

bool IsAperiodic(const DenseSubset& a) {
  const Group& g = *a.group();
  if (g.single_word()) return word::IsAperiodic(g, a.mask());
  return Period(a).order() == 1;
}

bool IsMaximalNonfull(const DenseSubset& a, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  const GroupPtr& gp = a.group();
  const Group& g = *gp;
  if (g.single_word()) return word::IsMaximalNonfull(g, a.mask(), k);

  std::vector<DenseSubset> partial;
  partial.reserve(k + 1);
  partial.push_back(DenseSubset::FromIndices(gp, std::vector<std::uint32_t>{0}));
  for (int j = 1; j <= k; ++j) partial.push_back(Sumset(partial.back(), a));
  if (partial[k].is_full()) return false;

  std::vector<std::uint64_t> u(g.word_count());
  std::vector<std::uint64_t> shifted(g.word_count());
  const DenseSubset outside = a.Complement();
  for (std::uint32_t x : outside.indices()) {
    std::copy(partial[k].words().begin(), partial[k].words().end(), u.begin());
    std::uint32_t jx = 0;
    for (int j = 1; j <= k; ++j) {
      jx = g.Add(jx, x);
      g.Translate(partial[k - j].words(), jx, shifted);
      for (std::size_t w = 0; w < u.size(); ++w) u[w] |= shifted[w];
    }
    if (!DenseSubset::FromWords(gp, u).is_full()) return false;
  }
  return true;
}

std::optional<int> MinCoverK(const DenseSubset& a) {
  const GroupPtr& gp = a.group();
  const Group& g = *gp;
  if (g.single_word()) {
    const int k = word::MinCoverK(g, a.mask());
    if (k < 0) return std::nullopt;
    return k;
  }
  DenseSubset base = a;
  base.insert(0);
  DenseSubset cur = DenseSubset::FromIndices(gp, std::vector<std::uint32_t>{0});
  int k = 0;
  while (!cur.is_full()) {
    DenseSubset next = Sumset(cur, base);
    if (next.size() == cur.size()) return std::nullopt;
    cur = std::move(next);
    ++k;
  }
  return k;
}

bool Generates(const DenseSubset& a) { return MinCoverK(a).has_value(); }

int CosetProfile::occupied() const {
  return static_cast<int>(
      std::count_if(counts.begin(), counts.end(), [](std::int64_t c) { return c > 0; }));
}

CosetProfile CosetProfileOf(const DenseSubset& a, const Subgroup& f,
                            std::uint32_t e) {
  RequireSameGroup(a, f.members);
  if (f.index != 5) {
    throw std::invalid_argument("coset profile needs an index-5 subgroup");
  }
  if (f.contains(e)) {
    throw std::invalid_argument("direction lies inside the subgroup");
  }
  const Group& g = *a.group();
  CosetProfile p{f, e, {}, static_cast<std::int64_t>(f.order())};
  std::uint32_t ie = 0;
  for (int i = 0; i < 5; ++i) {
    p.counts[i] = static_cast<std::int64_t>(
        a.Intersection(f.members.Translated(ie)).size());
    ie = g.Add(ie, e);
  }
  return p;
}

std::int64_t LinearFunctional::Apply(std::span<const std::int64_t> x) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * x[i];
  return s % 5;
}

std::vector<LinearFunctional> IndexFiveFunctionals(const GroupSpec& spec) {
  RequireElementaryFive(spec);
  const int n = spec.rank();
  std::vector<LinearFunctional> out;
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) total *= 5;
  for (std::int64_t idx = 1; idx < total; ++idx) {
    LinearFunctional c;
    c.coeffs.resize(n);
    std::int64_t t = idx;
    for (int i = 0; i < n; ++i) {
      c.coeffs[i] = t % 5;
      t /= 5;
    }
    const auto lead = std::find_if(c.coeffs.begin(), c.coeffs.end(),
                                   [](std::int64_t v) { return v != 0; });
    if (*lead == 1) out.push_back(std::move(c));
  }
  return out;
}

Subgroup KernelOf(const GroupPtr& group, const LinearFunctional& c) {
  RequireElementaryFive(group->spec());
  std::vector<std::uint32_t> members;
  std::vector<std::int64_t> x(group->spec().rank());
  for (std::uint32_t i = 0; i < group->order(); ++i) {
    group->Coords(i, x);
    if (c.Apply(x) == 0) members.push_back(i);
  }
  return Subgroup::Generated(group, members);
}

std::uint32_t UnitDirection(const Group& group, const LinearFunctional& c) {
  std::vector<std::int64_t> x(group.spec().rank());
  for (std::uint32_t i = 0; i < group.order(); ++i) {
    group.Coords(i, x);
    if (c.Apply(x) == 1) return i;
  }
  throw std::invalid_argument("functional is zero");
}

std::array<std::int64_t, 5> ResidueCounts(const DenseSubset& a,
                                          const LinearFunctional& c) {
  std::array<std::int64_t, 5> counts{};
  std::vector<std::int64_t> x(a.group()->spec().rank());
  for (std::uint32_t i : a.indices()) {
    a.group()->Coords(i, x);
    ++counts[c.Apply(x)];
  }
  return counts;
}

namespace {

// Element coordinates of A, computed once for repeated functional scans.
std::vector<std::vector<std::int64_t>> CoordsOf(const DenseSubset& a) {
  std::vector<std::vector<std::int64_t>> out;
  const Group& g = *a.group();
  for (std::uint32_t i : a.indices()) {
    std::vector<std::int64_t> x(g.spec().rank());
    g.Coords(i, x);
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace

std::optional<TwoCosetCover> TwoCosetCoverExists(const DenseSubset& a) {
  const GroupSpec& spec = a.group()->spec();
  RequireElementaryFive(spec);
  const auto coords = CoordsOf(a);
  for (const LinearFunctional& c : IndexFiveFunctionals(spec)) {
    std::array<std::int64_t, 5> counts{};
    for (const auto& x : coords) ++counts[c.Apply(x)];
    std::vector<int> hit;
    for (int i = 0; i < 5; ++i) {
      if (counts[i] > 0) hit.push_back(i);
    }
    if (hit.size() > 2) continue;
    for (int i = 0; i < 5 && hit.size() < 2; ++i) {
      if (std::find(hit.begin(), hit.end(), i) == hit.end()) hit.push_back(i);
    }
    std::sort(hit.begin(), hit.end());
    TwoCosetCover cover{c, KernelOf(a.group(), c), UnitDirection(*a.group(), c),
                        {hit[0], hit[1]}};
    return cover;
  }
  return std::nullopt;
}

std::int64_t DistanceToTwoCosetUnion(const DenseSubset& a) {
  const GroupSpec& spec = a.group()->spec();
  RequireElementaryFive(spec);
  if (spec.rank() == 0) {
    throw std::invalid_argument("Z_5^0 has no index-5 subgroup");
  }
  const auto coords = CoordsOf(a);
  std::int64_t best = static_cast<std::int64_t>(a.size());
  for (const LinearFunctional& c : IndexFiveFunctionals(spec)) {
    std::array<std::int64_t, 5> counts{};
    for (const auto& x : coords) ++counts[c.Apply(x)];
    std::sort(counts.begin(), counts.end(), std::greater<>());
    best = std::min(best, static_cast<std::int64_t>(a.size()) - counts[0] - counts[1]);
  }
  return best;
}

}  // namespace sumsetlab
