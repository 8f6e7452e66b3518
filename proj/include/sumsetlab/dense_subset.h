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
#include <span>
#include <vector>

#include "sumsetlab/group.h"

namespace sumsetlab {

// Bit-packed indicator of a subset of a group, addressed by element index.
// Bits at positions >= order are always zero and size() is the cached
// popcount.
class DenseSubset {
 public:
  explicit DenseSubset(GroupPtr group);

  static DenseSubset Full(GroupPtr group);
  static DenseSubset FromIndices(GroupPtr group,
                                 std::span<const std::uint32_t> indices);
  static DenseSubset FromElements(GroupPtr group,
                                  std::span<const GroupElement> elements);
  static DenseSubset FromWords(GroupPtr group, std::vector<std::uint64_t> words);
  // Single-word groups only.
  static DenseSubset FromMask(GroupPtr group, std::uint64_t mask);

  const GroupPtr& group() const { return group_; }
  std::size_t size() const { return cardinality_; }
  bool empty() const { return cardinality_ == 0; }
  bool is_full() const { return cardinality_ == group_->order(); }
  double density() const {
    return static_cast<double>(cardinality_) / group_->order();
  }

  bool contains(std::uint32_t index) const {
    return (bits_[index >> 6] >> (index & 63)) & 1;
  }
  void insert(std::uint32_t index);
  void erase(std::uint32_t index);

  std::vector<std::uint32_t> indices() const;
  std::span<const std::uint64_t> words() const { return bits_; }
  // Single-word groups only.
  std::uint64_t mask() const { return bits_[0]; }

  DenseSubset Translated(std::uint32_t g) const;
  DenseSubset Complement() const;
  DenseSubset Union(const DenseSubset& other) const;
  DenseSubset Intersection(const DenseSubset& other) const;
  bool IsSubsetOf(const DenseSubset& other) const;

  // Lowest member index; requires a non-empty set.
  std::uint32_t first() const;

  friend bool operator==(const DenseSubset& a, const DenseSubset& b) {
    return a.group_->spec() == b.group_->spec() && a.bits_ == b.bits_;
  }

 private:
  void Recount();

  GroupPtr group_;
  std::vector<std::uint64_t> bits_;
  std::size_t cardinality_ = 0;
};

// Throws std::invalid_argument when the two sets live in different groups.
void RequireSameGroup(const DenseSubset& a, const DenseSubset& b);

}  // namespace sumsetlab
