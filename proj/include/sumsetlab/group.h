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
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sumsetlab {

// Hard cap on the order of any group handled by the bit-packed kernels.
inline constexpr std::int64_t kMaxGroupOrder = std::int64_t{1} << 20;

// Thrown when an exhaustive computation would exceed its node/subset budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A finite abelian group given by its invariant factors m_1 | m_2 | ... | m_r.
// The empty chain is the trivial group.
class GroupSpec {
 public:
  GroupSpec() = default;

  // Validates that `factors` is already an invariant-factor chain.
  static GroupSpec FromChain(std::vector<std::int64_t> factors);

  const std::vector<std::int64_t>& factors() const { return factors_; }
  std::int64_t order() const { return order_; }
  int rank() const { return static_cast<int>(factors_.size()); }
  bool is_trivial() const { return factors_.empty(); }
  bool is_cyclic() const { return factors_.size() <= 1; }
  // True iff every factor equals p (G = Z_p^rank).
  bool is_elementary(std::int64_t p) const;

  // "5,5"; the trivial group prints as "".
  std::string ToString() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  std::vector<std::int64_t> factors_;
  std::int64_t order_ = 1;
};

struct GroupElement {
  std::vector<std::int64_t> coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// Invariant-factor chain of Z_{q_1} + ... + Z_{q_t} (Smith normal form of the
// diagonal relation matrix). Entries <= 1 are rejected.
GroupSpec NormalizeSpec(const std::vector<std::int64_t>& factors);

// An explicit isomorphism from the direct sum of cyclic groups of the given
// orders onto its normalized invariant-factor chain: the i-th standard
// generator of Z_{q_i} maps to images[i].
struct CyclicDecomposition {
  std::vector<std::int64_t> orders;
  GroupSpec spec;
  std::vector<GroupElement> images;

  // Image of the element with coordinates x_i in Z_{q_i}.
  GroupElement Map(const std::vector<std::int64_t>& coords) const;
};

CyclicDecomposition DecomposeCyclicSum(const std::vector<std::int64_t>& orders);

// Result of reducing Z^r modulo a set of relation rows.
struct SmithResult {
  std::vector<std::int64_t> diagonal;               // d_1 | d_2 | ..., length r
  std::vector<std::vector<std::int64_t>> column_ops;  // V, r x r, unimodular
};

// Smith normal form of an integer matrix with `cols` columns (rows given as
// relation vectors). Only the column transform is tracked: x -> x * V sends
// the row lattice onto the diagonal lattice.
SmithResult SmithNormalForm(std::vector<std::vector<std::int64_t>> rows,
                            int cols);

GroupElement ElementAdd(const GroupElement& g, const GroupElement& h,
                        const GroupSpec& spec);
GroupElement ElementNegate(const GroupElement& g, const GroupSpec& spec);
GroupElement ZeroElement(const GroupSpec& spec);

// Every invariant-factor chain with the given product, in lexicographic order
// of the factor lists. n = 1 yields the trivial group only.
std::vector<GroupSpec> AbelianGroupsOfOrder(std::int64_t n);

// Sum of (m_i - 1) over the invariant factors.
std::int64_t DiamPlus(const GroupSpec& spec);

// Shared, immutable evaluation context for a group: mixed-radix element
// indexing (m_1 fastest) and the word-parallel translation kernels.
class Group {
 public:
  static std::shared_ptr<const Group> Make(GroupSpec spec);

  const GroupSpec& spec() const { return spec_; }
  std::uint32_t order() const { return order_; }
  std::size_t word_count() const { return words_; }
  bool single_word() const { return order_ <= 64; }
  // Mask with the low `order` bits set (single-word groups only).
  std::uint64_t full_word() const { return full_word_; }

  std::uint32_t Index(const GroupElement& g) const;
  GroupElement Element(std::uint32_t index) const;
  void Coords(std::uint32_t index, std::span<std::int64_t> out) const;

  std::uint32_t Add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t Negate(std::uint32_t a) const;
  std::uint32_t Multiple(std::uint32_t a, std::int64_t k) const;
  std::uint32_t Subtract(std::uint32_t a, std::uint32_t b) const {
    return Add(a, Negate(b));
  }
  std::int64_t ElementOrder(std::uint32_t a) const;

  // out = in + g, for packed indicator sets of word_count() words.
  void Translate(std::span<const std::uint64_t> in, std::uint32_t g,
                 std::span<std::uint64_t> out) const;
  // Single-word groups only.
  std::uint64_t TranslateWord(std::uint64_t in, std::uint32_t g) const {
    const std::uint32_t begin = step_offset_[g];
    const std::uint32_t end = step_offset_[g + 1];
    for (std::uint32_t s = begin; s < end; ++s) {
      const WordStep& st = steps_[s];
      in = ((in << st.up) & st.high) | ((in >> st.down) & st.low);
    }
    return in;
  }

 private:
  explicit Group(GroupSpec spec);

  struct WordStep {
    std::uint8_t up;
    std::uint8_t down;
    std::uint64_t high;
    std::uint64_t low;
  };

  GroupSpec spec_;
  std::uint32_t order_ = 1;
  std::size_t words_ = 1;
  std::uint64_t full_word_ = 1;
  std::vector<std::uint32_t> strides_;  // strides_[i] = prod_{j<i} m_j
  std::vector<WordStep> steps_;
  std::vector<std::uint32_t> step_offset_;
};

using GroupPtr = std::shared_ptr<const Group>;

}  // namespace sumsetlab
