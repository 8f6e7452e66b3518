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
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "sumsetlab/literals.h"

namespace sumsetlab {
namespace {

using Idx = std::vector<std::uint32_t>;

GroupPtr Make(std::vector<std::int64_t> f) { return Group::Make(NormalizeSpec(f)); }

DenseSubset Set(const GroupPtr& g, std::string_view lit) {
  return ParseSetLiteral(lit, g);
}

// Pairwise-addition oracle.
DenseSubset NaiveSumset(const DenseSubset& a, const DenseSubset& b) {
  DenseSubset out(a.group());
  for (std::uint32_t x : a.indices()) {
    for (std::uint32_t y : b.indices()) out.insert(a.group()->Add(x, y));
  }
  return out;
}

DenseSubset RandomSet(const GroupPtr& g, std::mt19937_64& rng, double p) {
  DenseSubset s(g);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::uint32_t i = 0; i < g->order(); ++i) {
    if (u(rng) < p) s.insert(i);
  }
  return s;
}

// Two cosets {x_0 in {0,1}} of the index-5 subgroup {x_0 = 0} of Z_5^2.
DenseSubset TwoCosetUnion(const GroupPtr& g) {
  DenseSubset a(g);
  for (std::uint32_t i = 0; i < g->order(); ++i) {
    if (g->Element(i).coords[0] <= 1) a.insert(i);
  }
  return a;
}

// (H \ {0}) u (e + S) u {2e} with H = {x_0 = 0}, e = (1,0), S = {(0,1),(0,2)}.
DenseSubset SevenElementSet(const GroupPtr& g) {
  return Set(g, "{(0,1),(0,2),(0,3),(0,4),(1,1),(1,2),(2,0)}");
}

TEST(DenseSubsetTest, CardinalityTracksInsertErase) {
  const GroupPtr g = Make({5, 5, 5});
  DenseSubset a(g);
  a.insert(3);
  a.insert(3);
  a.insert(124);
  EXPECT_EQ(a.size(), 2u);
  a.erase(3);
  a.erase(3);
  EXPECT_EQ(a.size(), 1u);
  EXPECT_THROW(a.insert(125), std::out_of_range);
  EXPECT_EQ(DenseSubset::Full(g).size(), 125u);
  EXPECT_EQ(DenseSubset::Full(g).Complement().size(), 0u);
  EXPECT_EQ(DenseSubset::Full(g).words()[1] >> (125 - 64), 0u);
}

TEST(SumsetTest, Examples) {
  const GroupPtr z10 = Make({10});
  EXPECT_EQ(Sumset(Set(z10, "{(0),(1)}"), Set(z10, "{(0),(1)}")),
            Set(z10, "{(0),(1),(2)}"));
  const DenseSubset evens = Set(z10, "{(0),(2),(4),(6),(8)}");
  EXPECT_EQ(Sumset(evens, evens), evens);
  EXPECT_TRUE(Sumset(DenseSubset(z10), evens).empty());
  EXPECT_NO_THROW(Sumset(evens, DenseSubset(Make({10}))));
  EXPECT_THROW(Sumset(evens, DenseSubset(Make({5, 5}))), std::invalid_argument);
}

TEST(SumsetTest, MatchesNaiveOracle) {
  std::mt19937_64 rng(7);
  for (const auto& f : {std::vector<std::int64_t>{10}, {2, 4, 8}, {5, 5}, {5, 5, 5},
                        {3, 3, 3, 3}, {7, 7}, {100}, {2, 6, 6}}) {
    const GroupPtr g = Make(f);
    for (int t = 0; t < 20; ++t) {
      const DenseSubset a = RandomSet(g, rng, 0.05 + 0.02 * t);
      const DenseSubset b = RandomSet(g, rng, 0.1);
      EXPECT_EQ(Sumset(a, b), NaiveSumset(a, b)) << g->spec().ToString();
    }
  }
}

TEST(KFoldSumsetTest, Examples) {
  const GroupPtr z10 = Make({10});
  EXPECT_EQ(KFoldSumset(Set(z10, "{(0),(1)}"), 3), Set(z10, "{(0),(1),(2),(3)}"));
  const GroupPtr z5 = Make({5});
  EXPECT_EQ(KFoldSumset(Set(z5, "{(1)}"), 3), Set(z5, "{(3)}"));
  EXPECT_THROW(KFoldSumset(Set(z5, "{(1)}"), 0), std::invalid_argument);

  const GroupPtr z55 = Make({5, 5});
  const DenseSubset three = KFoldSumset(TwoCosetUnion(z55), 3);
  EXPECT_EQ(three.size(), 20u);
  EXPECT_FALSE(three.is_full());
}

TEST(KFoldSumsetTest, DoublingMatchesIteration) {
  std::mt19937_64 rng(11);
  for (const auto& f : {std::vector<std::int64_t>{97}, {5, 5, 5}, {2, 2, 2, 2, 2, 2, 2}}) {
    const GroupPtr g = Make(f);
    for (int t = 0; t < 5; ++t) {
      const DenseSubset a = RandomSet(g, rng, 0.02);
      DenseSubset iter = a;
      for (int k = 1; k <= 9; ++k) {
        EXPECT_EQ(KFoldSumset(a, k), iter) << "k=" << k;
        iter = NaiveSumset(iter, a);
      }
    }
  }
}

TEST(PeriodTest, Examples) {
  const GroupPtr z10 = Make({10});
  EXPECT_EQ(Period(Set(z10, "{(0),(2),(4),(6),(8)}")).order(), 5u);
  EXPECT_EQ(Period(Set(z10, "{(0),(1)}")).order(), 1u);
  EXPECT_EQ(Period(SevenElementSet(Make({5, 5}))).order(), 1u);
  EXPECT_EQ(Period(DenseSubset(z10)).order(), 10u);
  EXPECT_EQ(Period(DenseSubset::Full(z10)).order(), 10u);
  // Multi-word path: a union of cosets of an order-5 subgroup of Z_5^3.
  const GroupPtr z555 = Make({5, 5, 5});
  DenseSubset a(z555);
  for (std::uint32_t i = 0; i < 125; ++i) {
    const auto c = z555->Element(i).coords;
    if ((c[1] + 2 * c[2]) % 5 < 2 && c[1] < 3) a.insert(i);
  }
  const Subgroup p = Period(a);
  for (std::uint32_t x : p.members.indices()) EXPECT_EQ(a.Translated(x), a);
  EXPECT_EQ(p.order(), 5u);
}

TEST(IsMaximalNonfullTest, Examples) {
  const GroupPtr z55 = Make({5, 5});
  EXPECT_TRUE(IsMaximalNonfull(TwoCosetUnion(z55), 3));
  EXPECT_FALSE(IsMaximalNonfull(DenseSubset::Full(z55), 3));
  const GroupPtr z5 = Make({5});
  EXPECT_FALSE(IsMaximalNonfull(DenseSubset(z5), 3));
  EXPECT_TRUE(IsMaximalNonfull(SevenElementSet(z55), 3));
}

// The cached-partial-sums test agrees with recomputing k(A u {g}).
TEST(IsMaximalNonfullTest, MatchesDirectDefinition) {
  std::mt19937_64 rng(3);
  for (const auto& f : {std::vector<std::int64_t>{5, 5}, {13}, {2, 2, 2, 2}, {5, 5, 5}}) {
    const GroupPtr g = Make(f);
    for (int t = 0; t < 60; ++t) {
      DenseSubset a = RandomSet(g, rng, 0.15);
      // Grow greedily so that many samples are maximal.
      for (std::uint32_t x = 0; x < g->order(); ++x) {
        DenseSubset b = a;
        b.insert(x);
        if (!KFoldSumset(b, 3).is_full() && (rng() & 1)) a = b;
      }
      bool expected = !KFoldSumset(a, 3).is_full();
      for (std::uint32_t x = 0; x < g->order() && expected; ++x) {
        if (a.contains(x)) continue;
        DenseSubset b = a;
        b.insert(x);
        expected = KFoldSumset(b, 3).is_full();
      }
      EXPECT_EQ(IsMaximalNonfull(a, 3), expected);
    }
  }
}

TEST(GeneratesTest, Examples) {
  EXPECT_TRUE(Generates(Set(Make({5}), "{(1)}")));
  EXPECT_FALSE(Generates(Set(Make({10}), "{(0),(2)}")));
  EXPECT_TRUE(Generates(Set(Make({5, 5}), "{(1,0),(0,1)}")));
  EXPECT_FALSE(Generates(Set(Make({5, 5, 5}), "{(1,0,0),(0,1,0)}")));
  EXPECT_TRUE(Generates(Set(Make({5, 5, 5}), "{(1,0,0),(0,1,0),(0,0,1)}")));
}

TEST(MinCoverKTest, Examples) {
  EXPECT_EQ(MinCoverK(Set(Make({10}), "{(0),(1)}")), 9);
  EXPECT_EQ(MinCoverK(Set(Make({5}), "{(1)}")), 4);
  EXPECT_EQ(MinCoverK(Set(Make({10}), "{(2)}")), std::nullopt);
  EXPECT_EQ(MinCoverK(DenseSubset(Group::Make(GroupSpec()))), 0);
  EXPECT_EQ(MinCoverK(Set(Make({5, 5, 5}), "{(1,0,0),(0,1,0),(0,0,1)}")), 12);
}

TEST(CosetProfileTest, Examples) {
  const GroupPtr g = Make({5, 5});
  const LinearFunctional first{{1, 0}};
  const Subgroup h = KernelOf(g, first);
  const std::uint32_t e = g->Index({{1, 0}});
  const CosetProfile full = CosetProfileOf(DenseSubset::Full(g), h, e);
  EXPECT_EQ(full.counts, (std::array<std::int64_t, 5>{5, 5, 5, 5, 5}));
  EXPECT_EQ(CosetProfileOf(h.members, h, e).counts,
            (std::array<std::int64_t, 5>{5, 0, 0, 0, 0}));
  const CosetProfile p = CosetProfileOf(SevenElementSet(g), h, e);
  EXPECT_EQ(p.counts, (std::array<std::int64_t, 5>{4, 2, 1, 0, 0}));
  EXPECT_EQ(p.coset_size, 5);
  EXPECT_DOUBLE_EQ(p.density(0), 0.8);
  EXPECT_EQ(p.occupied(), 3);

  EXPECT_THROW(CosetProfileOf(h.members, h, 0), std::invalid_argument);
  EXPECT_THROW(CosetProfileOf(h.members, Subgroup::Trivial(g), e),
               std::invalid_argument);
}

TEST(TwoCosetCoverTest, Examples) {
  const GroupPtr g = Make({5, 5});
  const auto cover = TwoCosetCoverExists(TwoCosetUnion(g));
  ASSERT_TRUE(cover.has_value());
  EXPECT_EQ(cover->subgroup.index, 5);
  EXPECT_FALSE(TwoCosetCoverExists(DenseSubset::Full(g)).has_value());
  EXPECT_FALSE(TwoCosetCoverExists(SevenElementSet(g)).has_value());
  EXPECT_EQ(DistanceToTwoCosetUnion(TwoCosetUnion(g)), 0);
  EXPECT_EQ(DistanceToTwoCosetUnion(SevenElementSet(g)), 1);
  EXPECT_THROW(TwoCosetCoverExists(DenseSubset(Make({10}))), std::invalid_argument);
}

TEST(TwoCosetCoverTest, WitnessActuallyCovers) {
  std::mt19937_64 rng(5);
  const GroupPtr g = Make({5, 5, 5});
  const auto functionals = IndexFiveFunctionals(g->spec());
  EXPECT_EQ(functionals.size(), 31u);
  for (int t = 0; t < 50; ++t) {
    const LinearFunctional& c = functionals[rng() % functionals.size()];
    DenseSubset a(g);
    std::vector<std::int64_t> x(3);
    for (std::uint32_t i = 0; i < 125; ++i) {
      g->Coords(i, x);
      const auto r = c.Apply(x);
      if ((r == 1 || r == 3) && (rng() % 3 != 0)) a.insert(i);
    }
    const auto cover = TwoCosetCoverExists(a);
    ASSERT_TRUE(cover.has_value());
    const auto counts = ResidueCounts(a, cover->functional);
    EXPECT_EQ(counts[cover->cosets[0]] + counts[cover->cosets[1]],
              static_cast<std::int64_t>(a.size()));
    std::vector<std::int64_t> dir(3);
    g->Coords(cover->direction, dir);
    EXPECT_EQ(cover->functional.Apply(dir), 1);
  }
}

// ---------------------------------------------------------------------------
// Properties on seeded random inputs.

class SetPropertyTest : public ::testing::TestWithParam<std::vector<std::int64_t>> {};

TEST_P(SetPropertyTest, AlgebraicLaws) {
  const GroupPtr g = Make(GetParam());
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> dens(0.0, 0.4);
  for (int t = 0; t < 60; ++t) {
    const DenseSubset a = RandomSet(g, rng, dens(rng));
    const DenseSubset b = RandomSet(g, rng, dens(rng));
    const DenseSubset c = RandomSet(g, rng, dens(rng) / 2);
    const std::uint32_t x = rng() % g->order();
    const std::uint32_t y = rng() % g->order();

    const DenseSubset ab = Sumset(a, b);
    EXPECT_EQ(ab, Sumset(b, a));
    EXPECT_EQ(Sumset(ab, c), Sumset(a, Sumset(b, c)));
    EXPECT_EQ(Sumset(a.Translated(x), b.Translated(y)), ab.Translated(g->Add(x, y)));

    // Monotonicity of kA.
    const DenseSubset sup = a.Union(c);
    EXPECT_TRUE(KFoldSumset(a, 3).IsSubsetOf(KFoldSumset(sup, 3)));

    // Pigeonhole, Kneser and the union lemma.
    if (!ab.is_full()) EXPECT_LE(a.size() + b.size(), g->order());
    if (!a.empty() && !b.empty()) {
      EXPECT_GE(ab.size() + Period(ab).order(), a.size() + b.size());
    }
    const DenseSubset u = a.Union(b);
    EXPECT_GE(u.size() + Period(u).order(),
              std::min(a.size() + Period(a).order(), b.size() + Period(b).order()));

    // period(kA) contains period(A).
    if (!a.empty()) {
      EXPECT_TRUE(Period(a).members.IsSubsetOf(Period(KFoldSumset(a, 3)).members));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Groups, SetPropertyTest,
                         ::testing::Values(std::vector<std::int64_t>{10},
                                           std::vector<std::int64_t>{2, 2, 2, 2},
                                           std::vector<std::int64_t>{5, 5},
                                           std::vector<std::int64_t>{3, 9},
                                           std::vector<std::int64_t>{2, 4, 8},
                                           std::vector<std::int64_t>{5, 5, 5},
                                           std::vector<std::int64_t>{3, 3, 3, 3}));

TEST(LiteralTest, RoundTripsAndErrors) {
  std::mt19937_64 rng(9);
  for (const auto& f : {std::vector<std::int64_t>{5, 5}, {2, 6, 6}, {5, 5, 5}, {}}) {
    const GroupPtr g = Make(f);
    for (int t = 0; t < 20; ++t) {
      const DenseSubset a = RandomSet(g, rng, 0.3);
      EXPECT_EQ(ParseSetLiteral(FormatSetLiteral(a), g), a);
      EXPECT_EQ(ParseSetLiteral(FormatSetHex(a), g), a);
    }
  }
  const GroupPtr g = Make({5, 5});
  EXPECT_EQ(FormatSetHex(Set(g, "{(0,0),(1,0)}")), "5,5:0x3");
  EXPECT_EQ(FormatSetLiteral(Set(g, " { (1,0) , (0,0) } ")), "{(0,0),(1,0)}");
  EXPECT_EQ(ParseElementLiteral("(2,3)", g->spec()), (GroupElement{{2, 3}}));
  EXPECT_EQ(ParseGroupLiteral("4,6").factors(), (std::vector<std::int64_t>{2, 12}));
  EXPECT_TRUE(ParseGroupLiteral("trivial").is_trivial());
  EXPECT_THROW(ParseSetLiteral("{(1)}", g), std::invalid_argument);
  EXPECT_THROW(ParseSetLiteral("5:0x3", g), std::invalid_argument);
  EXPECT_THROW(ParseSetLiteral("5,5:0x4000000", g), std::invalid_argument);
  EXPECT_THROW(ParseSetLiteral("(1,0)", g), std::invalid_argument);
  EXPECT_THROW(ParseGroupLiteral("5,x"), std::invalid_argument);
}

}  // namespace
}  // namespace sumsetlab
