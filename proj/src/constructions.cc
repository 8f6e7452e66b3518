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

#include "sumsetlab/constructions.h"

#include <numeric>
#include <stdexcept>

#include "sumsetlab/literals.h"
#include "sumsetlab/set_engine.h"

namespace sumsetlab {
namespace {

using Tuple = std::vector<std::int64_t>;

std::int64_t Product(const std::vector<std::int64_t>& v, std::size_t from = 0) {
  std::int64_t p = 1;
  for (std::size_t i = from; i < v.size(); ++i) p *= v[i];
  return p;
}

// Mixed-radix decoding, first coordinate fastest.
Tuple Decode(std::int64_t idx, const std::vector<std::int64_t>& orders,
             std::size_t from = 0) {
  Tuple t;
  for (std::size_t i = from; i < orders.size(); ++i) {
    t.push_back(idx % orders[i]);
    idx /= orders[i];
  }
  return t;
}

std::int64_t Encode(const Tuple& t, const std::vector<std::int64_t>& orders,
                    std::size_t from = 0) {
  std::int64_t idx = 0;
  std::int64_t stride = 1;
  for (std::size_t i = from; i < orders.size(); ++i) {
    idx += t[i - from] * stride;
    stride *= orders[i];
  }
  return idx;
}

Tuple Prepend(std::int64_t x, const Tuple& rest) {
  Tuple t{x};
  t.insert(t.end(), rest.begin(), rest.end());
  return t;
}

// Product coordinates mapped onto the normalized chain.
struct Embedding {
  CyclicDecomposition dec;
  GroupPtr group;

  explicit Embedding(const std::vector<std::int64_t>& orders)
      : dec(DecomposeCyclicSum(orders)), group(Group::Make(dec.spec)) {}

  std::uint32_t Index(const Tuple& t) const { return group->Index(dec.Map(t)); }

  DenseSubset Set(const std::vector<Tuple>& tuples) const {
    DenseSubset a(group);
    for (const Tuple& t : tuples) a.insert(Index(t));
    return a;
  }
};

PropertyCheck Check(std::string name, bool pass, std::string detail) {
  return {std::move(name), pass, std::move(detail), true};
}

PropertyCheck SizeCheck(const DenseSubset& a, std::int64_t expected) {
  return Check("size", static_cast<std::int64_t>(a.size()) == expected,
               "|A| = " + std::to_string(a.size()) + ", expected " +
                   std::to_string(expected));
}

PropertyCheck NonfullCheck(const DenseSubset& three_a) {
  return Check("3A != G", !three_a.is_full(),
               "|3A| = " + std::to_string(three_a.size()) + " of " +
                   std::to_string(three_a.group()->order()));
}

PropertyCheck MaximalCheck(const DenseSubset& a) {
  return Check("maximal", IsMaximalNonfull(a, 3),
               "3(A u {g}) = G for every g outside A");
}

PropertyCheck AperiodicCheck(const DenseSubset& a) {
  const Subgroup p = Period(a);
  return Check("aperiodic", p.order() == 1,
               "|period| = " + std::to_string(p.order()));
}

PropertyCheck MissingCheck(const DenseSubset& three_a, std::uint32_t t) {
  return Check("target not in 3A", !three_a.contains(t),
               "target " + FormatElement(three_a.group()->Element(t)));
}

// t lies in 3(A u {x}) for every x outside A.
PropertyCheck TargetMaximalCheck(const DenseSubset& a, std::uint32_t t) {
  const Group& g = *a.group();
  std::int64_t bad = 0;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    if (a.contains(x)) continue;
    DenseSubset b = a;
    b.insert(x);
    if (!KFoldSumset(b, 3).contains(t)) ++bad;
  }
  return Check("maximal for target", bad == 0,
               std::to_string(bad) + " elements g outside A keep the target out of 3(A u {g})");
}

void RequireFive(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > 8) throw std::invalid_argument("Z_5^n needs n <= 8");
}

GroupPtr FiveGroup(int n) {
  return Group::Make(GroupSpec::FromChain(std::vector<std::int64_t>(n, 5)));
}

std::vector<Tuple> DecompTuples(const std::vector<std::int64_t>& orders,
                                std::size_t from) {
  if (from == orders.size()) return {};
  const std::int64_t q = orders[from];
  const std::int64_t m = (q - 1) / 3;
  const std::int64_t h = Product(orders, from + 1);
  std::vector<Tuple> out;
  for (std::int64_t x = 0; x < m; ++x) {
    for (std::int64_t i = 0; i < h; ++i) out.push_back(Prepend(x, Decode(i, orders, from + 1)));
  }
  for (const Tuple& s : DecompTuples(orders, from + 1)) out.push_back(Prepend(m, s));
  return out;
}

}  // namespace

bool Construction::AllPass() const {
  for (const PropertyCheck& c : checks) {
    if (c.claimed && !c.pass) return false;
  }
  return true;
}

const PropertyCheck* Construction::Find(const std::string& name) const {
  for (const PropertyCheck& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

nlohmann::json ToJson(const Construction& c, bool include_checks) {
  nlohmann::json j = {{"kind", c.kind},
                      {"group", c.set.group()->spec().ToString()},
                      {"size", c.set.size()},
                      {"set", FormatSetLiteral(c.set)}};
  if (include_checks) {
    nlohmann::json checks = nlohmann::json::array();
    for (const PropertyCheck& p : c.checks) {
      checks.push_back({{"property", p.name},
                        {"pass", p.pass},
                        {"claimed", p.claimed},
                        {"detail", p.detail}});
    }
    j["checks"] = checks;
    j["all_pass"] = c.AllPass();
  }
  return j;
}

Construction BuildDecomp(const std::vector<std::int64_t>& orders) {
  for (std::int64_t q : orders) {
    if (q < 4 || q % 3 != 1) {
      throw std::invalid_argument("decomp needs cyclic orders = 1 mod 3, got " +
                                  std::to_string(q));
    }
  }
  const Embedding emb(orders);
  Construction c{"decomp", emb.Set(DecompTuples(orders, 0)), {}};
  const std::int64_t order = emb.group->order();
  const DenseSubset three = KFoldSumset(c.set, 3);
  c.checks.push_back(SizeCheck(c.set, (order - 1) / 3));
  c.checks.push_back(NonfullCheck(three));
  c.checks.push_back(MaximalCheck(c.set));
  c.checks.push_back(AperiodicCheck(c.set));
  const std::int64_t gcd = std::gcd(static_cast<std::int64_t>(c.set.size()), order);
  c.checks.push_back(Check("gcd(|A|,|G|) = 1", gcd == 1, "gcd = " + std::to_string(gcd)));
  return c;
}

Construction BuildTwoCoset(const Subgroup& f, int i, int j) {
  const GroupPtr& g = f.group();
  const GroupSpec& spec = g->spec();
  if (spec.rank() < 1 || !spec.is_elementary(5)) {
    throw std::invalid_argument("two_coset needs Z_5^n, got " + spec.ToString());
  }
  if (f.index != 5) {
    throw std::invalid_argument("two_coset needs an index-5 subgroup, got index " +
                                std::to_string(f.index));
  }
  if (i == j || i < 0 || j < 0 || i > 4 || j > 4) {
    throw std::invalid_argument("two_coset needs two distinct coset indices in [0,4]");
  }
  std::uint32_t e = 0;
  while (f.contains(e)) ++e;
  Construction c{"two_coset", f.members.Translated(g->Multiple(e, i))
                                  .Union(f.members.Translated(g->Multiple(e, j))),
                 {}};
  const DenseSubset three = KFoldSumset(c.set, 3);
  c.checks.push_back(SizeCheck(c.set, 2 * (g->order() / 5)));
  c.checks.push_back(NonfullCheck(three));
  c.checks.push_back(MaximalCheck(c.set));
  return c;
}

Construction BuildTwoCoset(int n, int i, int j) {
  RequireFive(n);
  const GroupPtr g = FiveGroup(n);
  std::vector<std::int64_t> coeffs(n, 0);
  coeffs[0] = 1;
  return BuildTwoCoset(KernelOf(g, LinearFunctional{coeffs}), i, j);
}

Construction BuildX22(int n, const std::vector<GroupElement>& s) {
  if (n < 2) throw std::invalid_argument("x22 needs n >= 2");
  RequireFive(n);
  const GroupPtr g = FiveGroup(n);
  const std::int64_t h_order = g->order() / 5;
  DenseSubset s_set(g);
  for (const GroupElement& x : s) {
    const std::uint32_t idx = g->Index(x);
    if (x.coords[0] != 0) {
      throw std::invalid_argument("S must lie in H = {x : x_1 = 0}");
    }
    s_set.insert(idx);
  }
  if (static_cast<std::int64_t>(s_set.size()) != (h_order - 1) / 2) {
    throw std::invalid_argument("S must have (|H|-1)/2 elements");
  }
  if (Sumset(s_set, s_set).contains(0)) {
    throw std::invalid_argument("S must satisfy 0 not in 2S");
  }
  std::vector<std::int64_t> unit(n, 0);
  unit[0] = 1;
  const std::uint32_t e = g->Index(GroupElement{unit});
  DenseSubset a(g);
  for (std::uint32_t x = 1; x < g->order(); ++x) {
    if (g->Element(x).coords[0] == 0) a.insert(x);
  }
  for (std::uint32_t x : s_set.indices()) a.insert(g->Add(e, x));
  a.insert(g->Multiple(e, 2));
  Construction c{"x22", a, {}};
  const std::uint32_t four_e = g->Multiple(e, 4);
  const DenseSubset three = KFoldSumset(a, 3);
  DenseSubset expected = DenseSubset::Full(g);
  expected.erase(four_e);
  c.checks.push_back(SizeCheck(a, (3 * h_order - 1) / 2));
  c.checks.push_back(NonfullCheck(three));
  c.checks.push_back(Check("3A = G \\ {4e}", three == expected,
                           "|3A| = " + std::to_string(three.size())));
  c.checks.push_back(AperiodicCheck(a));
  c.checks.push_back(TargetMaximalCheck(a, four_e));
  c.checks.push_back(MaximalCheck(a));
  return c;
}

Construction BuildX22(int n) {
  if (n < 2) throw std::invalid_argument("x22 needs n >= 2");
  RequireFive(n);
  const GroupPtr g = FiveGroup(n);
  std::vector<GroupElement> s;
  for (std::uint32_t x = 1; x < g->order(); ++x) {
    if (g->Element(x).coords[0] == 0 && x < g->Negate(x)) s.push_back(g->Element(x));
  }
  return BuildX22(n, s);
}

Construction BuildMod3(const std::vector<std::int64_t>& orders,
                       std::optional<Parity> parity) {
  if (orders.empty() || orders[0] % 3 != 2 || orders[0] < 5) {
    throw std::invalid_argument("mod3 needs a first summand of order 3m+2, m >= 1");
  }
  for (std::int64_t q : orders) {
    if (q < 2) throw std::invalid_argument("cyclic orders must be >= 2");
  }
  const std::int64_t m = (orders[0] - 2) / 3;
  const std::int64_t h = Product(orders, 1);
  const Parity actual = h % 2 ? Parity::kOdd : Parity::kEven;
  if (parity && *parity != actual) {
    throw std::invalid_argument("parity does not match |H| = " + std::to_string(h));
  }
  auto h_add = [&](std::int64_t a, std::int64_t b) {
    Tuple x = Decode(a, orders, 1);
    const Tuple y = Decode(b, orders, 1);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % orders[i + 1];
    return Encode(x, orders, 1);
  };
  auto h_neg = [&](std::int64_t a) {
    Tuple x = Decode(a, orders, 1);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (orders[i + 1] - x[i]) % orders[i + 1];
    return Encode(x, orders, 1);
  };

  // g = 0 in the odd case; otherwise the least element outside 2H.
  std::int64_t g = 0;
  if (actual == Parity::kEven) {
    std::vector<bool> doubled(h, false);
    for (std::int64_t x = 0; x < h; ++x) doubled[h_add(x, x)] = true;
    g = 0;
    while (g < h && doubled[g]) ++g;
    if (g == h) throw std::invalid_argument("2H = H, no valid g");
  }
  // One representative of each pair {x, g - x}; for g = 0 skip x = 0.
  std::vector<std::int64_t> s;
  for (std::int64_t x = 0; x < h; ++x) {
    const std::int64_t partner = h_add(g, h_neg(x));
    if (partner == x) continue;
    if (x < partner) s.push_back(x);
  }

  std::vector<Tuple> tuples;
  for (std::int64_t i = 0; i + 1 < m; ++i) {
    for (std::int64_t x = 0; x < h; ++x) tuples.push_back(Prepend(i, Decode(x, orders, 1)));
  }
  for (std::int64_t x = 0; x < h; ++x) {
    if (x != g) tuples.push_back(Prepend(m - 1, Decode(x, orders, 1)));
  }
  for (std::int64_t x : s) tuples.push_back(Prepend(m, Decode(x, orders, 1)));
  tuples.push_back(Prepend(m + 1, Decode(0, orders, 1)));

  const Embedding emb(orders);
  Construction c{actual == Parity::kOdd ? "mod3_odd" : "mod3_even", emb.Set(tuples), {}};
  // (2m+1)/(6m+4) |G| = (2m+1)|H|/2, minus 1/2 in the odd case.
  const std::int64_t expected =
      actual == Parity::kOdd ? ((2 * m + 1) * h - 1) / 2 : (2 * m + 1) * h / 2;
  const std::uint32_t target = emb.Index(Prepend(3 * m + 1, Decode(g, orders, 1)));
  const DenseSubset three = KFoldSumset(c.set, 3);
  c.checks.push_back(SizeCheck(c.set, expected));
  c.checks.push_back(NonfullCheck(three));
  c.checks.push_back(MissingCheck(three, target));
  c.checks.push_back(TargetMaximalCheck(c.set, target));
  c.checks.push_back(MaximalCheck(c.set));
  c.checks.back().claimed = false;
  c.checks.push_back(AperiodicCheck(c.set));
  return c;
}

}  // namespace sumsetlab
