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

#include "sumsetlab/group.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <utility>

namespace sumsetlab {
namespace {

std::int64_t Mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::uint64_t LowMask(unsigned len) {
  return len >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
}

std::uint64_t GetBits(std::span<const std::uint64_t> src, std::size_t off,
                      unsigned len) {
  const std::size_t w = off >> 6;
  const unsigned b = off & 63;
  std::uint64_t v = src[w] >> b;
  if (b + len > 64) v |= src[w + 1] << (64 - b);
  return v & LowMask(len);
}

void SetBits(std::span<std::uint64_t> dst, std::size_t off, unsigned len,
             std::uint64_t v) {
  const std::size_t w = off >> 6;
  const unsigned b = off & 63;
  const std::uint64_t mask = LowMask(len);
  dst[w] = (dst[w] & ~(mask << b)) | (v << b);
  if (b + len > 64) {
    const unsigned rem = b + len - 64;
    const std::uint64_t m2 = LowMask(rem);
    dst[w + 1] = (dst[w + 1] & ~m2) | (v >> (64 - b));
  }
}

void CopyBits(std::span<std::uint64_t> dst, std::size_t dst_off,
              std::span<const std::uint64_t> src, std::size_t src_off,
              std::size_t len) {
  while (len > 0) {
    const unsigned chunk = static_cast<unsigned>(std::min<std::size_t>(len, 64));
    SetBits(dst, dst_off, chunk, GetBits(src, src_off, chunk));
    dst_off += chunk;
    src_off += chunk;
    len -= chunk;
  }
}

}  // namespace

GroupSpec GroupSpec::FromChain(std::vector<std::int64_t> factors) {
  GroupSpec spec;
  std::int64_t order = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2) {
      throw std::invalid_argument("invalid factor " +
                                  std::to_string(factors[i]) +
                                  ": every invariant factor must be >= 2");
    }
    if (i > 0 && factors[i] % factors[i - 1] != 0) {
      throw std::invalid_argument("factors do not form a divisibility chain");
    }
    if (order > kMaxGroupOrder / factors[i]) {
      throw std::invalid_argument("group order exceeds 2^20");
    }
    order *= factors[i];
  }
  spec.factors_ = std::move(factors);
  spec.order_ = order;
  return spec;
}

bool GroupSpec::is_elementary(std::int64_t p) const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [p](std::int64_t m) { return m == p; });
}

std::string GroupSpec::ToString() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << ',';
    os << factors_[i];
  }
  return os.str();
}

SmithResult SmithNormalForm(std::vector<std::vector<std::int64_t>> m,
                            int cols) {
  const int rows = static_cast<int>(m.size());
  std::vector<std::vector<std::int64_t>> v(cols,
                                           std::vector<std::int64_t>(cols, 0));
  for (int i = 0; i < cols; ++i) v[i][i] = 1;

  auto swap_cols = [&](int a, int b) {
    for (auto& row : m) std::swap(row[a], row[b]);
    for (auto& row : v) std::swap(row[a], row[b]);
  };
  // col_j -= q * col_t
  auto sub_col = [&](int j, int t, std::int64_t q) {
    for (auto& row : m) row[j] -= q * row[t];
    for (auto& row : v) row[j] -= q * row[t];
  };

  const int diag = std::min(rows, cols);
  for (int t = 0; t < diag; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      int pi = -1, pj = -1;
      std::int64_t best = 0;
      for (int i = t; i < rows; ++i) {
        for (int j = t; j < cols; ++j) {
          const std::int64_t a = std::llabs(m[i][j]);
          if (a != 0 && (best == 0 || a < best)) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) break;
      std::swap(m[t], m[pi]);
      if (pj != t) swap_cols(t, pj);

      bool dirty = false;
      for (int i = t + 1; i < rows; ++i) {
        const std::int64_t q = m[i][t] / m[t][t];
        if (q != 0) {
          for (int j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        }
        if (m[i][t] != 0) dirty = true;
      }
      for (int j = t + 1; j < cols; ++j) {
        const std::int64_t q = m[t][j] / m[t][t];
        if (q != 0) sub_col(j, t, q);
        if (m[t][j] != 0) dirty = true;
      }
      if (dirty) continue;

      // Divisibility: fold a row whose entries the pivot does not divide.
      int bad_row = -1;
      for (int i = t + 1; i < rows && bad_row < 0; ++i) {
        for (int j = t + 1; j < cols; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row < 0) break;
      for (int j = t; j < cols; ++j) m[t][j] += m[bad_row][j];
    }
    if (t < rows && m[t][t] < 0) {
      for (int j = t; j < cols; ++j) m[t][j] = -m[t][j];
    }
  }

  SmithResult result;
  result.diagonal.assign(cols, 0);
  for (int t = 0; t < diag; ++t) result.diagonal[t] = m[t][t];
  result.column_ops = std::move(v);
  return result;
}

CyclicDecomposition DecomposeCyclicSum(const std::vector<std::int64_t>& orders) {
  const int r = static_cast<int>(orders.size());
  std::int64_t total = 1;
  for (std::int64_t q : orders) {
    if (q <= 1) {
      throw std::invalid_argument("invalid factor " + std::to_string(q) +
                                  ": cyclic orders must be >= 2");
    }
    if (total > kMaxGroupOrder / q) {
      throw std::invalid_argument("group order exceeds 2^20");
    }
    total *= q;
  }
  std::vector<std::vector<std::int64_t>> rel(r, std::vector<std::int64_t>(r, 0));
  for (int i = 0; i < r; ++i) rel[i][i] = orders[i];
  SmithResult snf = SmithNormalForm(std::move(rel), r);

  std::vector<int> kept;
  std::vector<std::int64_t> chain;
  for (int i = 0; i < r; ++i) {
    if (snf.diagonal[i] > 1) {
      kept.push_back(i);
      chain.push_back(snf.diagonal[i]);
    }
  }
  CyclicDecomposition out;
  out.orders = orders;
  out.spec = GroupSpec::FromChain(chain);
  for (int j = 0; j < r; ++j) {
    GroupElement img;
    for (std::size_t c = 0; c < kept.size(); ++c) {
      img.coords.push_back(Mod(snf.column_ops[j][kept[c]], chain[c]));
    }
    out.images.push_back(std::move(img));
  }
  return out;
}

GroupSpec NormalizeSpec(const std::vector<std::int64_t>& factors) {
  return DecomposeCyclicSum(factors).spec;
}

GroupElement CyclicDecomposition::Map(
    const std::vector<std::int64_t>& coords) const {
  if (coords.size() != orders.size()) {
    throw std::invalid_argument("dimension mismatch");
  }
  GroupElement out = ZeroElement(spec);
  for (std::size_t j = 0; j < coords.size(); ++j) {
    for (std::size_t c = 0; c < out.coords.size(); ++c) {
      out.coords[c] =
          Mod(out.coords[c] + Mod(coords[j], orders[j]) * images[j].coords[c],
              spec.factors()[c]);
    }
  }
  return out;
}

GroupElement ZeroElement(const GroupSpec& spec) {
  return GroupElement{std::vector<std::int64_t>(spec.factors().size(), 0)};
}

GroupElement ElementAdd(const GroupElement& g, const GroupElement& h,
                        const GroupSpec& spec) {
  const auto& f = spec.factors();
  if (g.coords.size() != f.size() || h.coords.size() != f.size()) {
    throw std::invalid_argument("dimension mismatch");
  }
  GroupElement out;
  out.coords.resize(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    out.coords[i] = Mod(g.coords[i] + h.coords[i], f[i]);
  }
  return out;
}

GroupElement ElementNegate(const GroupElement& g, const GroupSpec& spec) {
  const auto& f = spec.factors();
  if (g.coords.size() != f.size()) {
    throw std::invalid_argument("dimension mismatch");
  }
  GroupElement out;
  out.coords.resize(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out.coords[i] = Mod(-g.coords[i], f[i]);
  return out;
}

namespace {

void ExtendChains(std::int64_t remaining, std::int64_t last,
                  std::vector<std::int64_t>& chain,
                  std::vector<GroupSpec>& out) {
  if (remaining == 1) {
    out.push_back(GroupSpec::FromChain(chain));
    return;
  }
  // Next factor: a multiple of `last` dividing `remaining`; whatever is left
  // must again be divisible by it. Dead ends simply produce nothing.
  for (std::int64_t m = last == 1 ? 2 : last; m <= remaining; m += last) {
    if (remaining % m != 0) continue;
    const std::int64_t rest = remaining / m;
    if (rest != 1 && rest % m != 0) continue;
    chain.push_back(m);
    ExtendChains(rest, m, chain, out);
    chain.pop_back();
  }
}

}  // namespace

std::vector<GroupSpec> AbelianGroupsOfOrder(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("group order must be positive");
  std::vector<GroupSpec> out;
  std::vector<std::int64_t> chain;
  ExtendChains(n, 1, chain, out);
  return out;
}

std::int64_t DiamPlus(const GroupSpec& spec) {
  std::int64_t s = 0;
  for (std::int64_t m : spec.factors()) s += m - 1;
  return s;
}

// ---------------------------------------------------------------------------
// Group

std::shared_ptr<const Group> Group::Make(GroupSpec spec) {
  return std::shared_ptr<const Group>(new Group(std::move(spec)));
}

Group::Group(GroupSpec spec) : spec_(std::move(spec)) {
  order_ = static_cast<std::uint32_t>(spec_.order());
  words_ = (order_ + 63) / 64;
  full_word_ = order_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order_) - 1;
  const auto& f = spec_.factors();
  strides_.resize(f.size());
  std::uint32_t s = 1;
  for (std::size_t i = 0; i < f.size(); ++i) {
    strides_[i] = s;
    s *= static_cast<std::uint32_t>(f[i]);
  }

  if (single_word()) {
    // Per element: one masked block rotation per nonzero coordinate.
    step_offset_.reserve(order_ + 1);
    std::vector<std::int64_t> c(f.size());
    for (std::uint32_t g = 0; g < order_; ++g) {
      step_offset_.push_back(static_cast<std::uint32_t>(steps_.size()));
      Coords(g, c);
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (c[i] == 0) continue;
        const std::uint32_t block = strides_[i] * static_cast<std::uint32_t>(f[i]);
        const std::uint32_t shift = strides_[i] * static_cast<std::uint32_t>(c[i]);
        WordStep st{};
        st.up = static_cast<std::uint8_t>(shift);
        st.down = static_cast<std::uint8_t>(block - shift);
        for (std::uint32_t p = 0; p < order_; ++p) {
          if (p % block >= shift) {
            st.high |= std::uint64_t{1} << p;
          } else {
            st.low |= std::uint64_t{1} << p;
          }
        }
        steps_.push_back(st);
      }
    }
    step_offset_.push_back(static_cast<std::uint32_t>(steps_.size()));
  }
}

std::uint32_t Group::Index(const GroupElement& g) const {
  const auto& f = spec_.factors();
  if (g.coords.size() != f.size()) {
    throw std::invalid_argument("dimension mismatch");
  }
  std::uint32_t idx = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    idx += static_cast<std::uint32_t>(Mod(g.coords[i], f[i])) * strides_[i];
  }
  return idx;
}

void Group::Coords(std::uint32_t index, std::span<std::int64_t> out) const {
  const auto& f = spec_.factors();
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[i] = index % f[i];
    index /= static_cast<std::uint32_t>(f[i]);
  }
}

GroupElement Group::Element(std::uint32_t index) const {
  GroupElement g;
  g.coords.resize(spec_.factors().size());
  Coords(index, g.coords);
  return g;
}

std::uint32_t Group::Add(std::uint32_t a, std::uint32_t b) const {
  const auto& f = spec_.factors();
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::uint32_t m = static_cast<std::uint32_t>(f[i]);
    std::uint32_t x = a % m + b % m;
    if (x >= m) x -= m;
    out += x * strides_[i];
    a /= m;
    b /= m;
  }
  return out;
}

std::uint32_t Group::Negate(std::uint32_t a) const {
  const auto& f = spec_.factors();
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::uint32_t m = static_cast<std::uint32_t>(f[i]);
    const std::uint32_t x = a % m;
    out += (x == 0 ? 0 : m - x) * strides_[i];
    a /= m;
  }
  return out;
}

std::uint32_t Group::Multiple(std::uint32_t a, std::int64_t k) const {
  const auto& f = spec_.factors();
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::int64_t m = f[i];
    const std::int64_t x = a % m;
    out += static_cast<std::uint32_t>(Mod(Mod(k, m) * x, m)) * strides_[i];
    a /= static_cast<std::uint32_t>(m);
  }
  return out;
}

std::int64_t Group::ElementOrder(std::uint32_t a) const {
  const auto& f = spec_.factors();
  std::int64_t l = 1;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::int64_t m = f[i];
    const std::int64_t x = a % m;
    a /= static_cast<std::uint32_t>(m);
    l = std::lcm(l, m / std::gcd(x, m));
  }
  return l;
}

void Group::Translate(std::span<const std::uint64_t> in, std::uint32_t g,
                      std::span<std::uint64_t> out) const {
  if (single_word()) {
    out[0] = TranslateWord(in[0], g);
    return;
  }
  thread_local std::vector<std::uint64_t> buf_a, buf_b;
  buf_a.assign(in.begin(), in.end());
  buf_b.assign(words_, 0);
  std::span<std::uint64_t> cur(buf_a), nxt(buf_b);

  const auto& f = spec_.factors();
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::uint32_t m = static_cast<std::uint32_t>(f[i]);
    const std::uint32_t r = g % m;
    g /= m;
    if (r == 0) continue;
    const std::size_t block = static_cast<std::size_t>(strides_[i]) * m;
    const std::size_t shift = static_cast<std::size_t>(strides_[i]) * r;
    for (std::size_t b = 0; b < order_; b += block) {
      CopyBits(nxt, b + shift, cur, b, block - shift);
      CopyBits(nxt, b, cur, b + block - shift, shift);
    }
    std::swap(cur, nxt);
  }
  std::copy(cur.begin(), cur.end(), out.begin());
  if (order_ % 64 != 0) out[words_ - 1] &= LowMask(order_ % 64);
}

}  // namespace sumsetlab
