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

#include <set>

#include "gtest/gtest.h"
#include "sumsetlab/extremal_search.h"
#include "sumsetlab/literals.h"
#include "sumsetlab/set_engine.h"

namespace sumsetlab {
namespace {

// Triple sums by direct enumeration over element indices.
std::set<std::uint32_t> NaiveThreeFold(const DenseSubset& a) {
  const Group& g = *a.group();
  const auto idx = a.indices();
  std::set<std::uint32_t> out;
  for (auto x : idx)
    for (auto y : idx)
      for (auto z : idx) out.insert(g.Add(g.Add(x, y), z));
  return out;
}

bool NaiveMaximalNonfull(const DenseSubset& a) {
  const std::uint32_t n = a.group()->order();
  if (NaiveThreeFold(a).size() == n) return false;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (a.contains(x)) continue;
    DenseSubset b = a;
    b.insert(x);
    if (NaiveThreeFold(b).size() != n) return false;
  }
  return true;
}

bool NaiveAperiodic(const DenseSubset& a) {
  for (std::uint32_t x = 1; x < a.group()->order(); ++x) {
    if (a.Translated(x) == a) return false;
  }
  return true;
}

void ExpectAllPass(const Construction& c) {
  EXPECT_TRUE(c.AllPass()) << ToJson(c).dump(2);
}

TEST(DecompTest, Examples) {
  const Construction z7 = BuildDecomp({7});
  ExpectAllPass(z7);
  EXPECT_EQ(z7.set.size(), 2u);
  EXPECT_EQ(z7.set, ParseSetLiteral("{(0),(1)}", z7.set.group()));

  const Construction z13 = BuildDecomp({13});
  ExpectAllPass(z13);
  EXPECT_EQ(z13.set.size(), 4u);

  const Construction z77 = BuildDecomp({7, 7});
  ExpectAllPass(z77);
  EXPECT_EQ(z77.set.size(), 16u);
  EXPECT_TRUE(NaiveMaximalNonfull(z77.set));
  EXPECT_TRUE(NaiveAperiodic(z77.set));
}

TEST(DecompTest, NonChainOrdersMapOntoChain) {
  const Construction c = BuildDecomp({7, 13});
  EXPECT_EQ(c.set.group()->spec().factors(), (std::vector<std::int64_t>{91}));
  EXPECT_EQ(c.set.size(), 30u);
  ExpectAllPass(c);
}

TEST(DecompTest, MatchesSearchedValue) {
  EXPECT_EQ(static_cast<std::int64_t>(BuildDecomp({7}).set.size()),
            NkSearch(NormalizeSpec({7}), 3).value);
  EXPECT_EQ(static_cast<std::int64_t>(BuildDecomp({13}).set.size()),
            NkSearch(NormalizeSpec({13}), 3).value);
}

TEST(DecompTest, Errors) {
  EXPECT_THROW(BuildDecomp({5}), std::invalid_argument);
  EXPECT_THROW(BuildDecomp({7, 6}), std::invalid_argument);
}

// With H = Z_4 the recursive S = {0} is not maximal in Z_4, and the maximality
// claim fails; the builder reports it instead of hiding it.
TEST(DecompTest, FourIsReportedNotMaximal) {
  const Construction c = BuildDecomp({4});
  EXPECT_FALSE(c.AllPass());
  EXPECT_FALSE(c.Find("maximal")->pass);
  EXPECT_EQ(NkSearch(NormalizeSpec({4}), 3).value, 0);
}

TEST(TwoCosetTest, Examples) {
  const Construction n2 = BuildTwoCoset(2, 0, 1);
  ExpectAllPass(n2);
  EXPECT_EQ(n2.set.size(), 10u);
  EXPECT_TRUE(NaiveMaximalNonfull(n2.set));

  const Construction n1 = BuildTwoCoset(Subgroup::Trivial(Group::Make(NormalizeSpec({5}))), 0, 2);
  ExpectAllPass(n1);
  EXPECT_EQ(n1.set, ParseSetLiteral("{(0),(2)}", n1.set.group()));

  const Construction n3 = BuildTwoCoset(3, 1, 3);
  ExpectAllPass(n3);
  EXPECT_EQ(n3.set.size(), 50u);
}

TEST(TwoCosetTest, EverySubgroupAndPairAtN2) {
  const GroupPtr g = Group::Make(NormalizeSpec({5, 5}));
  for (const LinearFunctional& c : IndexFiveFunctionals(g->spec())) {
    const Subgroup f = KernelOf(g, c);
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) ExpectAllPass(BuildTwoCoset(f, i, j));
    }
  }
}

TEST(TwoCosetTest, Errors) {
  EXPECT_THROW(BuildTwoCoset(2, 1, 1), std::invalid_argument);
  EXPECT_THROW(BuildTwoCoset(2, 0, 5), std::invalid_argument);
  const GroupPtr g = Group::Make(NormalizeSpec({5, 5}));
  EXPECT_THROW(BuildTwoCoset(Subgroup::Whole(g), 0, 1), std::invalid_argument);
  const GroupPtr z10 = Group::Make(NormalizeSpec({10}));
  EXPECT_THROW(BuildTwoCoset(Subgroup::Generated(z10, std::vector<std::uint32_t>{5}), 0, 1),
               std::invalid_argument);
}

TEST(X22Test, Examples) {
  const Construction n2 = BuildX22(2);
  ExpectAllPass(n2);
  EXPECT_EQ(n2.set.size(), 7u);
  EXPECT_EQ(FormatSetLiteral(n2.set), "{(2,0),(0,1),(1,1),(0,2),(1,2),(0,3),(0,4)}");
  const std::set<std::uint32_t> three = NaiveThreeFold(n2.set);
  EXPECT_EQ(three.size(), 24u);
  EXPECT_EQ(three.count(n2.set.group()->Index({{4, 0}})), 0u);
  EXPECT_TRUE(NaiveMaximalNonfull(n2.set));
  EXPECT_TRUE(NaiveAperiodic(n2.set));

  const Construction n3 = BuildX22(3);
  ExpectAllPass(n3);
  EXPECT_EQ(n3.set.size(), 37u);
  EXPECT_EQ(NaiveThreeFold(n3.set).size(), 124u);
}

TEST(X22Test, MatchesSearchedValue) {
  EXPECT_EQ(static_cast<std::int64_t>(BuildX22(2).set.size()),
            NkSearch(NormalizeSpec({5, 5}), 3).value);
}

TEST(X22Test, AlternativeRepresentativeSystem) {
  ExpectAllPass(BuildX22(2, {{{0, 1}}, {{0, 3}}}));
  ExpectAllPass(BuildX22(2, {{{0, 4}}, {{0, 2}}}));
}

TEST(X22Test, RejectsInvalidS) {
  EXPECT_THROW(BuildX22(2, {{{0, 1}}, {{0, 4}}}), std::invalid_argument);
  EXPECT_THROW(BuildX22(2, {{{0, 1}}}), std::invalid_argument);
  EXPECT_THROW(BuildX22(2, {{{1, 1}}, {{0, 2}}}), std::invalid_argument);
  EXPECT_THROW(BuildX22(1), std::invalid_argument);
}

TEST(Mod3Test, Examples) {
  const Construction odd = BuildMod3({5, 3}, Parity::kOdd);
  EXPECT_EQ(odd.kind, "mod3_odd");
  EXPECT_EQ(odd.set.size(), 4u);
  ExpectAllPass(odd);
  EXPECT_TRUE(NaiveAperiodic(odd.set));

  const Construction even = BuildMod3({5, 4}, Parity::kEven);
  EXPECT_EQ(even.kind, "mod3_even");
  EXPECT_EQ(even.set.size(), 6u);
  ExpectAllPass(even);
  EXPECT_TRUE(NaiveAperiodic(even.set));

  const Construction z5 = BuildMod3({5});
  EXPECT_EQ(z5.set.size(), 1u);
}

// The target-maximality claim does not make A maximal with 3A != G: on
// Z_5 + Z_3 some x outside A keeps 3(A u {x}) != G.
TEST(Mod3Test, StrongMaximalityIsUnclaimedAndReported) {
  const Construction odd = BuildMod3({5, 3});
  const PropertyCheck* strong = odd.Find("maximal");
  ASSERT_NE(strong, nullptr);
  EXPECT_FALSE(strong->claimed);
  EXPECT_EQ(strong->pass, NaiveMaximalNonfull(odd.set));
  EXPECT_FALSE(strong->pass);
}

TEST(Mod3Test, LowerBoundsSearchedValue) {
  for (const auto& orders : {std::vector<std::int64_t>{5, 3}, {5, 4}, {8, 3}, {5, 2, 2}}) {
    const Construction c = BuildMod3(orders);
    ExpectAllPass(c);
    EXPECT_LE(static_cast<std::int64_t>(c.set.size()),
              NkSearch(c.set.group()->spec(), 3).value);
  }
}

TEST(Mod3Test, Errors) {
  EXPECT_THROW(BuildMod3({4, 3}), std::invalid_argument);
  EXPECT_THROW(BuildMod3({2, 3}), std::invalid_argument);
  EXPECT_THROW(BuildMod3({5, 3}, Parity::kEven), std::invalid_argument);
  EXPECT_THROW(BuildMod3({5, 4}, Parity::kOdd), std::invalid_argument);
}

TEST(ConstructionTest, ReproducibleAndJsonRoundTrips) {
  const Construction a = BuildMod3({5, 4});
  const Construction b = BuildMod3({5, 4});
  EXPECT_EQ(ToJson(a), ToJson(b));
  const nlohmann::json j = ToJson(a);
  EXPECT_EQ(ParseSetLiteral(j["set"].get<std::string>(), a.set.group()), a.set);
  EXPECT_TRUE(j["all_pass"].get<bool>());
}

}  // namespace
}  // namespace sumsetlab
