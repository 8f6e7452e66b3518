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

#include "sumsetlab/literals.h"

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sumsetlab {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t ParseInt(std::string_view s) {
  s = Trim(s);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::int64_t> ParseIntList(std::string_view s) {
  std::vector<std::int64_t> out;
  s = Trim(s);
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = s.find(',', pos);
    out.push_back(ParseInt(s.substr(pos, comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

GroupSpec ParseGroupLiteral(std::string_view text) {
  text = Trim(text);
  if (text.empty() || text == "trivial") return GroupSpec();
  return NormalizeSpec(ParseIntList(text));
}

GroupElement ParseElementLiteral(std::string_view text, const GroupSpec& spec) {
  text = Trim(text);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw std::invalid_argument("element literal must be parenthesized: '" +
                                std::string(text) + "'");
  }
  GroupElement g{ParseIntList(text.substr(1, text.size() - 2))};
  if (g.coords.size() != spec.factors().size()) {
    throw std::invalid_argument("element '" + std::string(text) +
                                "' has the wrong dimension for group " +
                                spec.ToString());
  }
  for (std::size_t i = 0; i < g.coords.size(); ++i) {
    const std::int64_t m = spec.factors()[i];
    g.coords[i] = ((g.coords[i] % m) + m) % m;
  }
  return g;
}

DenseSubset ParseSetLiteral(std::string_view text, const GroupPtr& group) {
  text = Trim(text);
  const std::size_t hex_pos = text.find(":0x");
  if (hex_pos != std::string_view::npos) {
    const GroupSpec named = ParseGroupLiteral(text.substr(0, hex_pos));
    if (!(named == group->spec())) {
      throw std::invalid_argument("hex literal names group " + named.ToString() +
                                  ", expected " + group->spec().ToString());
    }
    std::string_view digits = text.substr(hex_pos + 3);
    std::vector<std::uint64_t> words(group->word_count(), 0);
    std::size_t bit = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it, bit += 4) {
      const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(*it)));
      int v;
      if (c >= '0' && c <= '9') {
        v = c - '0';
      } else if (c >= 'a' && c <= 'f') {
        v = c - 'a' + 10;
      } else {
        throw std::invalid_argument("bad hex digit in set literal");
      }
      for (int b = 0; b < 4; ++b) {
        if (!((v >> b) & 1)) continue;
        const std::size_t idx = bit + b;
        if (idx >= group->order()) {
          throw std::invalid_argument("hex literal sets bits beyond |G|");
        }
        words[idx >> 6] |= std::uint64_t{1} << (idx & 63);
      }
    }
    return DenseSubset::FromWords(group, std::move(words));
  }

  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw std::invalid_argument("set literal must be '{...}' or '<group>:0x<hex>'");
  }
  DenseSubset out(group);
  std::string_view body = Trim(text.substr(1, text.size() - 2));
  std::size_t pos = 0;
  while (pos < body.size()) {
    const std::size_t open = body.find('(', pos);
    if (open == std::string_view::npos) {
      if (!Trim(body.substr(pos)).empty()) {
        throw std::invalid_argument("malformed set literal");
      }
      break;
    }
    const std::size_t close = body.find(')', open);
    if (close == std::string_view::npos) {
      throw std::invalid_argument("unbalanced parenthesis in set literal");
    }
    out.insert(group->Index(
        ParseElementLiteral(body.substr(open, close - open + 1), group->spec())));
    pos = close + 1;
    while (pos < body.size() && (body[pos] == ',' || std::isspace(static_cast<unsigned char>(body[pos])))) {
      ++pos;
    }
  }
  return out;
}

std::string FormatElement(const GroupElement& g) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < g.coords.size(); ++i) {
    if (i) os << ',';
    os << g.coords[i];
  }
  os << ')';
  return os.str();
}

std::string FormatSetLiteral(const DenseSubset& a) {
  std::string out = "{";
  bool first = true;
  for (std::uint32_t i : a.indices()) {
    if (!first) out += ',';
    first = false;
    out += FormatElement(a.group()->Element(i));
  }
  out += '}';
  return out;
}

std::string FormatSetHex(const DenseSubset& a) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::uint32_t n = a.group()->order();
  std::string digits;
  for (std::size_t nib = 0; nib * 4 < n; ++nib) {
    int v = 0;
    for (int b = 0; b < 4; ++b) {
      const std::size_t idx = nib * 4 + b;
      if (idx < n && a.contains(static_cast<std::uint32_t>(idx))) v |= 1 << b;
    }
    digits.push_back(kDigits[v]);
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  return a.group()->spec().ToString() + ":0x" +
         std::string(digits.rbegin(), digits.rend());
}

}  // namespace sumsetlab
