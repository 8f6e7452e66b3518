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

#include "sumsetlab/lp_certificates.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include <boost/math/constants/constants.hpp>

namespace sumsetlab {
namespace {

const Decimal kTieTolerance("1e-30");
// Boost.Rational comparisons against plain integers recurse under C++20
// rewritten operators, so compare against a Rational.
const Rational kZero(0);

Decimal ToDecimal(const Rational& r) {
  return Decimal(r.numerator()) / Decimal(r.denominator());
}

Rational Sum(const Densities& a) {
  Rational s = 0;
  for (const Rational& x : a) s += x;
  return s;
}

// Water-fills `amount` across `group` (indices into alpha) against the caps
// and returns what could not be placed.
Rational Fill(const LpInstance& inst, std::vector<int> group, Rational amount,
              Densities& alpha) {
  std::stable_sort(group.begin(), group.end(),
            [&](int a, int b) { return inst.upper(a) < inst.upper(b); });
  for (std::size_t i = 0; i < group.size(); ++i) {
    const Rational share = amount / static_cast<std::int64_t>(group.size() - i);
    const Rational give = std::min(share, inst.upper(group[i]));
    alpha[group[i]] = give;
    amount -= give;
  }
  return amount;
}

// Solves m x = rhs by Gauss-Jordan elimination; nullopt if m is singular.
std::optional<Densities> Solve(std::array<std::array<Rational, 5>, 5> m, Densities rhs) {
  for (int col = 0; col < 5; ++col) {
    int pivot = -1;
    for (int r = col; r < 5; ++r) {
      if (m[r][col] != kZero) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    std::swap(m[col], m[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (int r = 0; r < 5; ++r) {
      if (r == col || m[r][col] == kZero) continue;
      const Rational f = m[r][col] / m[col][col];
      for (int c = col; c < 5; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  Densities x;
  for (int i = 0; i < 5; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

}  // namespace

std::string ToString(LpCase c) { return c == LpCase::kI ? "I" : "II"; }

LpInstance LpInstance::Make(LpCase c, int k) {
  if (k < 0 || k > 4) throw std::invalid_argument("relaxed index must be in [0, 4]");
  LpInstance inst;
  inst.lp_case = c;
  inst.k = k;
  const Decimal two_pi = 2 * boost::math::constants::pi<Decimal>();
  const Decimal delta = c == LpCase::kI ? Decimal(0) : Decimal(1) / 3;
  for (int j = 0; j < 5; ++j) {
    inst.coefficients[j] = boost::multiprecision::cos(two_pi * (delta + Decimal(j) / 5));
  }
  return inst;
}

LpInstance LpInstance::Custom(int k, const std::array<double, 5>& coefficients) {
  if (k < 0 || k > 4) throw std::invalid_argument("relaxed index must be in [0, 4]");
  LpInstance inst;
  inst.k = k;
  for (int j = 0; j < 5; ++j) inst.coefficients[j] = coefficients[j];
  return inst;
}

bool LpInstance::Feasible(const Densities& alpha) const {
  for (int j = 0; j < 5; ++j) {
    if (alpha[j] < kZero || alpha[j] > upper(j)) return false;
  }
  return Sum(alpha) >= threshold;
}

Decimal LpInstance::Objective(const Densities& alpha) const {
  Decimal s = 0;
  for (int j = 0; j < 5; ++j) s += coefficients[j] * ToDecimal(alpha[j]);
  return s;
}

LpSolution SolveGreedy(const LpInstance& inst) {
  Rational cap_total = 0;
  for (int j = 0; j < 5; ++j) cap_total += inst.upper(j);
  if (cap_total < inst.threshold) throw std::logic_error("infeasible LP instance");

  Densities alpha;
  std::vector<int> positive;
  for (int j = 0; j < 5; ++j) {
    if (inst.coefficients[j] < 0) {
      alpha[j] = inst.upper(j);
    } else {
      positive.push_back(j);
    }
  }
  std::stable_sort(positive.begin(), positive.end(),
                   [&](int a, int b) { return inst.coefficients[a] < inst.coefficients[b]; });
  Rational remaining = inst.threshold - Sum(alpha);
  for (std::size_t i = 0; i < positive.size() && remaining > kZero;) {
    std::vector<int> group{positive[i]};
    std::size_t next = i + 1;
    while (next < positive.size() &&
           abs(inst.coefficients[positive[next]] - inst.coefficients[positive[i]]) <= kTieTolerance) {
      group.push_back(positive[next++]);
    }
    remaining = Fill(inst, group, remaining, alpha);
    i = next;
  }
  return {inst.Objective(alpha), alpha};
}

LpSolution SolveVertices(const LpInstance& inst) {
  // Row 0: sum = threshold; rows 1..5: alpha_j = 0; rows 6..10: alpha_j = cap.
  std::array<std::array<Rational, 5>, 11> rows{};
  std::array<Rational, 11> rhs{};
  rows[0].fill(1);
  rhs[0] = inst.threshold;
  for (int j = 0; j < 5; ++j) {
    rows[1 + j][j] = 1;
    rows[6 + j][j] = 1;
    rhs[6 + j] = inst.upper(j);
  }

  std::optional<LpSolution> best;
  std::uint32_t choose = (1u << 5) - 1;
  while (choose < (1u << 11)) {
    std::array<std::array<Rational, 5>, 5> m;
    Densities b;
    int r = 0;
    for (int i = 0; i < 11; ++i) {
      if (choose >> i & 1) {
        m[r] = rows[i];
        b[r] = rhs[i];
        ++r;
      }
    }
    if (const auto x = Solve(m, b); x && inst.Feasible(*x)) {
      const Decimal value = inst.Objective(*x);
      if (!best || value < best->minimum) best = LpSolution{value, *x};
    }
    const std::uint32_t low = choose & -choose;
    const std::uint32_t ripple = choose + low;
    choose = (((ripple ^ choose) >> 2) / low) | ripple;
  }
  if (!best) throw std::logic_error("LP instance has no feasible vertex");
  return *best;
}

LpCertificate Certify(const LpInstance& inst) {
  const LpSolution greedy = SolveGreedy(inst);
  const LpSolution vertex = SolveVertices(inst);
  LpCertificate c;
  c.instance = inst;
  c.minimum = greedy.minimum.convert_to<double>();
  c.argmin = greedy.argmin;
  c.vertex_argmin = vertex.argmin;
  c.method_agreement = abs(greedy.minimum - vertex.minimum).convert_to<double>();

  // Stored cosines are off by at most kCosineError each and the mass is at
  // most 1/2 + 4 * 2/5; the remaining terms cover decimal arithmetic and the
  // rounding of the reported double.
  const Decimal total_error = Decimal(kCosineError) * Decimal("2.1") + Decimal("1e-45") +
                              abs(Decimal(c.minimum) - greedy.minimum);
  c.error_bound = std::nextafter(total_error.convert_to<double>(), 1.0);
  const Decimal threshold = Decimal(-9) / 14;
  c.margin = (greedy.minimum - threshold).convert_to<double>();
  c.certified = greedy.minimum - total_error > threshold && inst.Feasible(greedy.argmin) &&
                c.method_agreement <= 1e-12;
  return c;
}

std::vector<LpCertificate> CertifyAll() {
  std::vector<LpCertificate> out;
  for (LpCase lp_case : {LpCase::kI, LpCase::kII}) {
    for (int k = 0; k < 5; ++k) out.push_back(Certify(LpInstance::Make(lp_case, k)));
  }
  for (const LpCertificate& c : out) {
    if (!c.certified) {
      throw CertificationFailed("case " + ToString(c.instance.lp_case) + ", k=" +
                                std::to_string(c.instance.k) + ": minimum " +
                                std::to_string(c.minimum) + " does not exceed -9/14");
    }
  }
  return out;
}

std::string FormatDecimal(const Decimal& x, int digits) {
  return x.str(digits, std::ios_base::fixed);
}

std::string FormatRational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

nlohmann::json ToJson(const LpCertificate& c) {
  nlohmann::json coefficients = nlohmann::json::array();
  for (const Decimal& x : c.instance.coefficients) coefficients.push_back(FormatDecimal(x));
  nlohmann::json argmin = nlohmann::json::array();
  for (const Rational& x : c.argmin) argmin.push_back(FormatRational(x));
  return {{"case", ToString(c.instance.lp_case)},
          {"k", c.instance.k},
          {"coefficients", coefficients},
          {"minimum", c.minimum},
          {"error_bound", c.error_bound},
          {"argmin", argmin},
          {"margin", c.margin},
          {"method_agreement", c.method_agreement},
          {"verdict", c.certified ? "exceeds -9/14" : "not certified"}};
}

}  // namespace sumsetlab
