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

// Characters and Fourier coefficients on Z_5^n.
//
//   chi_c(x) = w^(<c,x>),  w = exp(2 pi i / 5)
//   1_A^(chi) = 5^-n sum_{a in A} chi(a)
//
// Characters are indexed by the mixed-radix value of c (first coordinate
// fastest), so index 0 is the principal character.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "json.hpp"
#include "sumsetlab/dense_subset.h"
#include "sumsetlab/set_engine.h"

namespace sumsetlab {

using Complex = std::complex<double>;

// w^r for r in [0, 5).
Complex FifthRoot(std::int64_t r);
// exp(2 pi i r / 3) for r in [0, 3).
Complex CubeRoot(int r);

struct Character {
  std::vector<std::int64_t> coeffs;

  bool principal() const;
  Complex operator()(std::span<const std::int64_t> x) const;
  Character Conjugate() const;
  std::uint32_t Index() const;
  static Character FromIndex(std::uint32_t index, int n);
};

Complex FourierCoefficient(const DenseSubset& a, const Character& chi);

// Sum of 1_A^(chi)^3 over all 5^n characters.
Complex CubicSum(const DenseSubset& a);
// 5^-2n #{(a,b,c) in A^3 : a+b+c = 0}, by direct counting.
double ZeroSumTripleDensity(const DenseSubset& a);

// Sum of |1_A^(chi)|^2 over the non-principal characters.
double ParsevalOffPrincipal(const DenseSubset& a);

struct SpectralWitness {
  Character character;
  Complex coefficient;
  int zeta_power = 0;  // zeta = CubeRoot(zeta_power), 0 or 1
  Complex zeta;
  Complex z;  // -coefficient * zeta
  double realpart = 0;
  double alpha = 0;
  double bound = 0;  // alpha^2 / (1 - alpha)
  // Profile of A over ker(chi) with direction e, <c, e> = 1.
  CosetProfile profile;
  // sum_j alpha_j cos(2 pi (delta + j/5)) with zeta = exp(2 pi i delta),
  // and the same quantity read off the coefficient as 5 Re(1_A^(chi) zeta).
  double profile_objective = 0;
  double spectral_objective = 0;
};

// The non-principal character maximizing Re z(chi), where zeta(chi) is the
// cube root of unity maximizing Re(-1_A^(chi) zeta) (ties toward 1, then
// toward exp(2 pi i/3)). A character whose best zeta is exp(4 pi i/3) is
// replaced by its conjugate, whose best zeta is exp(2 pi i/3). Ties in Re z
// go to the lowest character index. Throws std::invalid_argument unless
// G = Z_5^n with n >= 1, A is non-empty and 0 is not in 3A.
SpectralWitness FindWitness(const DenseSubset& a);

nlohmann::json ToJson(const SpectralWitness& w);

}  // namespace sumsetlab
