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

// The ten coset-density linear programs and their certificates.
//
//   minimize   sum_j c_j alpha_j,   c_j = cos(2 pi (delta + j/5))
//   subject to sum_j alpha_j >= 3/2
//              0 <= alpha_k <= 1/2,  0 <= alpha_j <= 2/5 (j != k)
//
// with delta = 0 (case I) or 1/3 (case II). Densities are exact rationals;
// cosines are evaluated with 50 significant digits.

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/rational.hpp>

#include "json.hpp"

namespace sumsetlab {

using Decimal = boost::multiprecision::cpp_dec_float_50;
using Rational = boost::rational<std::int64_t>;
using Densities = std::array<Rational, 5>;

class CertificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class LpCase { kI, kII };
std::string ToString(LpCase c);

// Upper bound on |c_j - cos(2 pi (delta + j/5))| for the stored decimals.
inline constexpr double kCosineError = 1e-45;

struct LpInstance {
  LpCase lp_case = LpCase::kI;
  int k = 0;
  std::array<Decimal, 5> coefficients;
  // Lower bound on the total mass; 0 drops the constraint.
  Rational threshold{3, 2};

  static LpInstance Make(LpCase c, int k);
  // Same constraint shape with arbitrary objective coefficients.
  static LpInstance Custom(int k, const std::array<double, 5>& coefficients);

  Rational upper(int j) const { return j == k ? Rational(1, 2) : Rational(2, 5); }
  bool Feasible(const Densities& alpha) const;
  Decimal Objective(const Densities& alpha) const;
};

struct LpSolution {
  Decimal minimum;
  Densities argmin;
};

// Continuous knapsack: every negative coefficient at its cap, then the
// positive ones in ascending order until the threshold is met. Mass is
// split evenly (water-filled against the caps) across coefficients equal to
// within 1e-30.
LpSolution SolveGreedy(const LpInstance& inst);

// Every choice of 5 active constraints among {sum = threshold, alpha_j = 0,
// alpha_j = cap}, solved exactly; the first feasible vertex of least
// objective wins.
LpSolution SolveVertices(const LpInstance& inst);

struct LpCertificate {
  LpInstance instance;
  double minimum = 0;
  double error_bound = 0;
  Densities argmin;
  Densities vertex_argmin;
  double margin = 0;  // minimum + 9/14
  double method_agreement = 0;
  bool certified = false;
};

LpCertificate Certify(const LpInstance& inst);
// Both cases, k = 0..4; throws CertificationFailed if any margin fails.
std::vector<LpCertificate> CertifyAll();

// Decimal string with `digits` digits after the point.
std::string FormatDecimal(const Decimal& x, int digits = 30);
std::string FormatRational(const Rational& r);

nlohmann::json ToJson(const LpCertificate& c);

}  // namespace sumsetlab
