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

#include "sumsetlab/spectral.h"

#include <array>
#include <cmath>
#include <stdexcept>

#include "sumsetlab/literals.h"

namespace sumsetlab {
namespace {

constexpr double kCos1 = 0.30901699437494742410229341718281906;   // cos(2pi/5)
constexpr double kSin1 = 0.95105651629515357211643933337938214;   // sin(2pi/5)
constexpr double kCos2 = -0.80901699437494742410229341718281906;  // cos(4pi/5)
constexpr double kSin2 = 0.58778525229247312916870595463907277;   // sin(4pi/5)
constexpr double kSin3 = 0.86602540378443864676372317075293618;   // sin(2pi/3)

constexpr double kTieTolerance = 1e-12;

const std::array<Complex, 5> kFifth = {Complex(1, 0), Complex(kCos1, kSin1),
                                       Complex(kCos2, kSin2), Complex(kCos2, -kSin2),
                                       Complex(kCos1, -kSin1)};
const std::array<Complex, 3> kThird = {Complex(1, 0), Complex(-0.5, kSin3),
                                       Complex(-0.5, -kSin3)};

int RequireFiveRank(const GroupSpec& spec) {
  if (!spec.is_elementary(5) || spec.rank() < 1) {
    throw std::invalid_argument("characters need Z_5^n with n >= 1, got " +
                                spec.ToString());
  }
  return spec.rank();
}

std::vector<std::vector<std::int64_t>> CoordsOf(const DenseSubset& a) {
  std::vector<std::vector<std::int64_t>> out;
  const Group& g = *a.group();
  for (std::uint32_t i : a.indices()) {
    std::vector<std::int64_t> x(g.spec().rank());
    g.Coords(i, x);
    out.push_back(std::move(x));
  }
  return out;
}

std::int64_t Dot(const std::vector<std::int64_t>& c, const std::vector<std::int64_t>& x) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * x[i];
  return s % 5;
}

Complex CoefficientFromCoords(const std::vector<std::vector<std::int64_t>>& coords,
                              const std::vector<std::int64_t>& c, double scale) {
  std::array<std::int64_t, 5> counts{};
  for (const auto& x : coords) ++counts[Dot(c, x)];
  Complex s = 0;
  for (int r = 0; r < 5; ++r) s += static_cast<double>(counts[r]) * kFifth[r];
  return s * scale;
}

// Index of the cube root maximizing Re(-f zeta); near-ties go to the lower
// index.
int BestZeta(Complex f) {
  int best = 0;
  double best_re = (-f * kThird[0]).real();
  for (int r = 1; r < 3; ++r) {
    const double re = (-f * kThird[r]).real();
    if (re > best_re + kTieTolerance) {
      best = r;
      best_re = re;
    }
  }
  return best;
}

}  // namespace

Complex FifthRoot(std::int64_t r) { return kFifth[((r % 5) + 5) % 5]; }
Complex CubeRoot(int r) { return kThird[((r % 3) + 3) % 3]; }

bool Character::principal() const {
  for (std::int64_t c : coeffs) {
    if (c % 5) return false;
  }
  return true;
}

Complex Character::operator()(std::span<const std::int64_t> x) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * x[i];
  return FifthRoot(s);
}

Character Character::Conjugate() const {
  Character c{coeffs};
  for (std::int64_t& v : c.coeffs) v = (5 - v % 5) % 5;
  return c;
}

std::uint32_t Character::Index() const {
  std::uint32_t idx = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) idx = idx * 5 + static_cast<std::uint32_t>(coeffs[i]);
  return idx;
}

Character Character::FromIndex(std::uint32_t index, int n) {
  Character c{std::vector<std::int64_t>(n)};
  for (int i = 0; i < n; ++i) {
    c.coeffs[i] = index % 5;
    index /= 5;
  }
  return c;
}

Complex FourierCoefficient(const DenseSubset& a, const Character& chi) {
  const int n = RequireFiveRank(a.group()->spec());
  if (static_cast<int>(chi.coeffs.size()) != n) {
    throw std::invalid_argument("character has the wrong dimension");
  }
  return CoefficientFromCoords(CoordsOf(a), chi.coeffs,
                               1.0 / static_cast<double>(a.group()->order()));
}

Complex CubicSum(const DenseSubset& a) {
  const int n = RequireFiveRank(a.group()->spec());
  const auto coords = CoordsOf(a);
  const std::uint32_t order = a.group()->order();
  const double scale = 1.0 / order;
  Complex sum = 0;
  for (std::uint32_t i = 0; i < order; ++i) {
    const Complex f = CoefficientFromCoords(coords, Character::FromIndex(i, n).coeffs, scale);
    sum += f * f * f;
  }
  return sum;
}

double ZeroSumTripleDensity(const DenseSubset& a) {
  const Group& g = *a.group();
  const auto members = a.indices();
  std::int64_t count = 0;
  for (std::uint32_t x : members) {
    for (std::uint32_t y : members) {
      if (a.contains(g.Negate(g.Add(x, y)))) ++count;
    }
  }
  const double order = g.order();
  return static_cast<double>(count) / (order * order);
}

double ParsevalOffPrincipal(const DenseSubset& a) {
  const int n = RequireFiveRank(a.group()->spec());
  const auto coords = CoordsOf(a);
  const std::uint32_t order = a.group()->order();
  double sum = 0;
  for (std::uint32_t i = 1; i < order; ++i) {
    sum += std::norm(
        CoefficientFromCoords(coords, Character::FromIndex(i, n).coeffs, 1.0 / order));
  }
  return sum;
}

SpectralWitness FindWitness(const DenseSubset& a) {
  const int n = RequireFiveRank(a.group()->spec());
  if (a.empty()) throw std::invalid_argument("A must be non-empty");
  if (KFoldSumset(a, 3).contains(0)) {
    throw std::invalid_argument("find_witness needs 0 not in 3A");
  }
  const GroupPtr& g = a.group();
  const auto coords = CoordsOf(a);
  const double scale = 1.0 / g->order();

  Character best_chi;
  Complex best_f;
  int best_r = 0;
  double best_re = 0;
  bool have = false;
  for (std::uint32_t i = 1; i < g->order(); ++i) {
    Character chi = Character::FromIndex(i, n);
    Complex f = CoefficientFromCoords(coords, chi.coeffs, scale);
    int r = BestZeta(f);
    if (r == 2) {
      chi = chi.Conjugate();
      f = std::conj(f);
      r = 1;
    }
    const double re = (-f * kThird[r]).real();
    if (!have || re > best_re + kTieTolerance) {
      have = true;
      best_chi = chi;
      best_f = f;
      best_r = r;
      best_re = re;
    }
  }
  const LinearFunctional c{best_chi.coeffs};
  SpectralWitness w{best_chi,
                    best_f,
                    best_r,
                    kThird[best_r],
                    -best_f * kThird[best_r],
                    best_re,
                    0,
                    0,
                    CosetProfileOf(a, KernelOf(g, c), UnitDirection(*g, c)),
                    0,
                    0};
  w.alpha = a.density();
  w.bound = w.alpha * w.alpha / (1.0 - w.alpha);

  const double delta = w.zeta_power == 0 ? 0.0 : 1.0 / 3.0;
  w.profile_objective = 0;
  for (int j = 0; j < 5; ++j) {
    w.profile_objective +=
        w.profile.density(j) * std::cos(2 * M_PI * (delta + j / 5.0));
  }
  w.spectral_objective = 5 * (w.coefficient * w.zeta).real();
  return w;
}

nlohmann::json ToJson(const SpectralWitness& w) {
  nlohmann::json profile = nlohmann::json::array();
  for (int i = 0; i < 5; ++i) profile.push_back(w.profile.density(i));
  return {{"character", w.character.coeffs},
          {"coefficient", {w.coefficient.real(), w.coefficient.imag()}},
          {"zeta", w.zeta_power == 0 ? "1" : "exp(2pi i/3)"},
          {"z", {w.z.real(), w.z.imag()}},
          {"re_z", w.realpart},
          {"bound", w.bound},
          {"profile", profile},
          {"direction", FormatElement(w.profile.subgroup.group()->Element(w.profile.direction))},
          {"profile_objective", w.profile_objective},
          {"spectral_objective", w.spectral_objective}};
}

}  // namespace sumsetlab
