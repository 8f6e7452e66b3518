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

#include "sumsetlab/subgroup.h"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "sumsetlab/set_engine.h"
#include "sumsetlab/word_kernel.h"

namespace sumsetlab {
namespace {

DenseSubset Cyclic(const GroupPtr& group, std::uint32_t g) {
  DenseSubset c(group);
  std::uint32_t x = 0;
  do {
    c.insert(x);
    x = group->Add(x, g);
  } while (x != 0);
  return c;
}

}  // namespace

Subgroup Subgroup::Generated(const GroupPtr& group,
                             std::span<const std::uint32_t> gens) {
  Subgroup h{DenseSubset::FromIndices(group, std::vector<std::uint32_t>{0}), {}, 1};
  for (std::uint32_t g : gens) {
    if (h.members.contains(g)) continue;
    h.members = Sumset(h.members, Cyclic(group, g));
    h.generators.push_back(g);
  }
  h.index = static_cast<std::int64_t>(group->order() / h.members.size());
  return h;
}

Subgroup Subgroup::FromMembers(DenseSubset members) {
  if (!members.contains(0)) {
    throw std::invalid_argument("subgroup not closed: missing 0");
  }
  for (std::uint32_t a : members.indices()) {
    if (!members.Translated(a).IsSubsetOf(members)) {
      throw std::invalid_argument("subgroup not closed under addition");
    }
  }
  const GroupPtr group = members.group();
  const auto idx = members.indices();
  Subgroup h = Generated(group, idx);
  return h;
}

Subgroup Subgroup::Trivial(const GroupPtr& group) {
  return Generated(group, {});
}

Subgroup Subgroup::Whole(const GroupPtr& group) {
  std::vector<std::uint32_t> all(group->order());
  for (std::uint32_t i = 0; i < group->order(); ++i) all[i] = i;
  return Generated(group, all);
}

std::vector<Subgroup> EnumerateSubgroups(const GroupSpec& spec,
                                         std::int64_t max_order) {
  if (spec.order() > 64) {
    throw BudgetExceeded("subgroup enumeration supports |G| <= 64, got " +
                         std::to_string(spec.order()));
  }
  const GroupPtr group = Group::Make(spec);
  const Group& g = *group;

  // Closure of H u {x} is H + <x>; every subgroup is reached from {0} by
  // adjoining one element at a time.
  std::vector<std::uint64_t> cyclic(g.order());
  for (std::uint32_t x = 0; x < g.order(); ++x) cyclic[x] = Cyclic(group, x).mask();

  std::map<std::uint64_t, std::vector<std::uint32_t>> seen;  // mask -> gens
  std::vector<std::uint64_t> frontier{1};
  seen[1] = {};
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t h : frontier) {
      for (std::uint32_t x = 0; x < g.order(); ++x) {
        if ((h >> x) & 1) continue;
        const std::uint64_t closure = word::Sumset(g, h, cyclic[x]);
        if (seen.count(closure)) continue;
        auto gens = seen[h];
        gens.push_back(x);
        seen[closure] = std::move(gens);
        next.push_back(closure);
      }
    }
    frontier = std::move(next);
  }

  std::vector<Subgroup> out;
  for (const auto& [mask, gens] : seen) {
    if (max_order >= 0 && std::popcount(mask) > max_order) continue;
    Subgroup h{DenseSubset::FromMask(group, mask), gens,
               static_cast<std::int64_t>(g.order()) / std::popcount(mask)};
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members.indices() < b.members.indices();
  });
  return out;
}

QuotientMap MakeQuotientMap(const Subgroup& h) {
  const GroupPtr& group = h.group();
  const Group& g = *group;
  // Re-verify closure; a hand-built Subgroup may be inconsistent.
  Subgroup checked = Subgroup::FromMembers(h.members);

  const int r = g.spec().rank();
  std::vector<std::vector<std::int64_t>> rel;
  for (int i = 0; i < r; ++i) {
    std::vector<std::int64_t> row(r, 0);
    row[i] = g.spec().factors()[i];
    rel.push_back(std::move(row));
  }
  for (std::uint32_t gen : checked.generators) {
    rel.push_back(g.Element(gen).coords);
  }
  SmithResult snf = SmithNormalForm(std::move(rel), r);

  std::vector<int> kept;
  std::vector<std::int64_t> chain;
  for (int i = 0; i < r; ++i) {
    if (snf.diagonal[i] > 1) {
      kept.push_back(i);
      chain.push_back(snf.diagonal[i]);
    }
  }
  QuotientMap q;
  q.spec = GroupSpec::FromChain(chain);
  q.quotient = Group::Make(q.spec);
  q.table.resize(g.order());
  std::vector<std::int64_t> x(r);
  for (std::uint32_t idx = 0; idx < g.order(); ++idx) {
    g.Coords(idx, x);
    GroupElement image;
    for (std::size_t c = 0; c < kept.size(); ++c) {
      std::int64_t s = 0;
      for (int j = 0; j < r; ++j) {
        s = (s + x[j] * (snf.column_ops[j][kept[c]] % chain[c])) % chain[c];
      }
      image.coords.push_back(s < 0 ? s + chain[c] : s);
    }
    q.table[idx] = q.quotient->Index(image);
  }
  return q;
}

std::int64_t DiamPlusBruteforce(const GroupSpec& spec) {
  if (spec.order() > 12) {
    throw BudgetExceeded("diam+ brute force is limited to 2^12 subsets");
  }
  const GroupPtr group = Group::Make(spec);
  const std::uint64_t limit = std::uint64_t{1} << spec.order();
  int best = 0;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    best = std::max(best, word::MinCoverK(*group, mask));
  }
  return best;
}

}  // namespace sumsetlab
