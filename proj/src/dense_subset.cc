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

#include "sumsetlab/dense_subset.h"

#include <bit>
#include <stdexcept>
#include <utility>

namespace sumsetlab {

DenseSubset::DenseSubset(GroupPtr group)
    : group_(std::move(group)), bits_(group_->word_count(), 0) {}

DenseSubset DenseSubset::Full(GroupPtr group) {
  DenseSubset s(std::move(group));
  const std::uint32_t n = s.group_->order();
  for (std::size_t w = 0; w < s.bits_.size(); ++w) s.bits_[w] = ~std::uint64_t{0};
  if (n % 64 != 0) s.bits_.back() = (std::uint64_t{1} << (n % 64)) - 1;
  s.cardinality_ = n;
  return s;
}

DenseSubset DenseSubset::FromIndices(GroupPtr group,
                                     std::span<const std::uint32_t> indices) {
  DenseSubset s(std::move(group));
  for (std::uint32_t i : indices) s.insert(i);
  return s;
}

DenseSubset DenseSubset::FromElements(GroupPtr group,
                                      std::span<const GroupElement> elements) {
  DenseSubset s(std::move(group));
  for (const auto& e : elements) s.insert(s.group_->Index(e));
  return s;
}

DenseSubset DenseSubset::FromWords(GroupPtr group,
                                   std::vector<std::uint64_t> words) {
  DenseSubset s(std::move(group));
  if (words.size() != s.bits_.size()) {
    throw std::invalid_argument("word count does not match group order");
  }
  const std::uint32_t n = s.group_->order();
  if (n % 64 != 0 && (words.back() >> (n % 64)) != 0) {
    throw std::invalid_argument("bits set beyond the group order");
  }
  s.bits_ = std::move(words);
  s.Recount();
  return s;
}

DenseSubset DenseSubset::FromMask(GroupPtr group, std::uint64_t mask) {
  if (!group->single_word()) {
    throw std::invalid_argument("FromMask requires |G| <= 64");
  }
  return FromWords(std::move(group), {mask});
}

void DenseSubset::insert(std::uint32_t index) {
  if (index >= group_->order()) throw std::out_of_range("element index");
  std::uint64_t& w = bits_[index >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (index & 63);
  if (!(w & bit)) {
    w |= bit;
    ++cardinality_;
  }
}

void DenseSubset::erase(std::uint32_t index) {
  if (index >= group_->order()) throw std::out_of_range("element index");
  std::uint64_t& w = bits_[index >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (index & 63);
  if (w & bit) {
    w &= ~bit;
    --cardinality_;
  }
}

std::vector<std::uint32_t> DenseSubset::indices() const {
  std::vector<std::uint32_t> out;
  out.reserve(cardinality_);
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    std::uint64_t x = bits_[w];
    while (x) {
      out.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(x)));
      x &= x - 1;
    }
  }
  return out;
}

std::uint32_t DenseSubset::first() const {
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    if (bits_[w]) {
      return static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits_[w]));
    }
  }
  throw std::logic_error("first() on an empty set");
}

DenseSubset DenseSubset::Translated(std::uint32_t g) const {
  DenseSubset out(group_);
  group_->Translate(bits_, g, out.bits_);
  out.cardinality_ = cardinality_;
  return out;
}

DenseSubset DenseSubset::Complement() const {
  DenseSubset full = Full(group_);
  for (std::size_t w = 0; w < bits_.size(); ++w) full.bits_[w] &= ~bits_[w];
  full.cardinality_ = group_->order() - cardinality_;
  return full;
}

DenseSubset DenseSubset::Union(const DenseSubset& other) const {
  RequireSameGroup(*this, other);
  DenseSubset out(group_);
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    out.bits_[w] = bits_[w] | other.bits_[w];
  }
  out.Recount();
  return out;
}

DenseSubset DenseSubset::Intersection(const DenseSubset& other) const {
  RequireSameGroup(*this, other);
  DenseSubset out(group_);
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    out.bits_[w] = bits_[w] & other.bits_[w];
  }
  out.Recount();
  return out;
}

bool DenseSubset::IsSubsetOf(const DenseSubset& other) const {
  RequireSameGroup(*this, other);
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    if (bits_[w] & ~other.bits_[w]) return false;
  }
  return true;
}

void DenseSubset::Recount() {
  std::size_t c = 0;
  for (std::uint64_t w : bits_) c += std::popcount(w);
  cardinality_ = c;
}

void RequireSameGroup(const DenseSubset& a, const DenseSubset& b) {
  if (a.group().get() != b.group().get() &&
      !(a.group()->spec() == b.group()->spec())) {
    throw std::invalid_argument("group mismatch");
  }
}

}  // namespace sumsetlab
