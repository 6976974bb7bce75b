// Copyright 2026 The curvlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Independent reference computations used across the test suites. Nothing
// here goes through the jet algebra.

#include <cmath>
#include <functional>
#include <random>

#include "curvlab/matrix.hpp"
#include "curvlab/jet.hpp"

namespace curvlab::testing {

inline CMatrix random_matrix(std::mt19937_64& rng, Eigen::Index rows,
                             Eigen::Index cols) {
  std::normal_distribution<double> normal;
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      m(i, j) = Complex(normal(rng), normal(rng));
    }
  }
  return m;
}

inline WJet random_jet(std::mt19937_64& rng, Complex base, int a, int b,
                       Eigen::Index rows, Eigen::Index cols) {
  WJet x(base, a, b, rows, cols);
  for (int p = 0; p <= a; ++p) {
    for (int q = 0; q <= b; ++q) x.set(p, q, random_matrix(rng, rows, cols));
  }
  return x;
}

inline double choose(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline double falling(int k, int m) {
  double r = 1.0;
  for (int t = 0; t < m; ++t) r *= (k - t);
  return r;
}

/// d^i dbar^j of sum_k c(k) (z zbar)^k at z0, summed to `terms`.
inline Complex radial_derivative(const std::function<double(int)>& c,
                                 int terms, Complex z0, int i, int j) {
  Complex sum = 0.0;
  for (int k = std::max(i, j); k < terms; ++k) {
    const double ck = c(k);
    if (ck == 0.0) continue;
    sum += ck * falling(k, i) * falling(k, j) * std::pow(z0, k - i) *
           std::pow(std::conj(z0), k - j);
  }
  return sum;
}

/// -(1 - w)^{-2} = -sum (k + 1) w^k.
inline double hardy_curvature_coeff(int k) { return -(k + 1.0); }
/// -2 (1 - w)^{-2}.
inline double bergman_curvature_coeff(int k) { return -2.0 * (k + 1.0); }
/// -(1 + w)^{-2} = -sum (k + 1) (-w)^k.
inline double bott_curvature_coeff(int k) {
  return -(k + 1.0) * (k % 2 ? -1.0 : 1.0);
}

/// Bott projection written out by hand.
inline CMatrix bott_projection(Complex z) {
  CMatrix p(2, 2);
  p << 1.0, std::conj(z), z, std::norm(z);
  return p / (1.0 + std::norm(z));
}

/// Hardy N=infinity projection derivative norm: ||dP||^2 = (1 - r^2)^{-2}.
inline double hardy_hs2(Complex z) {
  const double w = 1.0 - std::norm(z);
  return 1.0 / (w * w);
}

inline std::vector<Complex> seeded_points(std::uint64_t seed, int count,
                                          double radius) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Complex> pts;
  for (int k = 0; k < count; ++k) {
    pts.push_back(std::polar(radius * std::sqrt(u(rng)), 2.0 * M_PI * u(rng)));
  }
  return pts;
}

}  // namespace curvlab::testing
