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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvlab/frame.hpp"
#include "curvlab/matrix.hpp"

namespace curvlab {

enum class Verdict { kMatched, kDistinct, kInconclusive };

std::string to_string(Verdict v);

/// A trace word whose values differ between the two curves.
struct TraceWitness {
  std::string word;
  Complex value_p{};
  Complex value_q{};
  double tolerance = 0.0;

  double difference() const { return std::abs(value_p - value_q); }
};

struct ContactVerdict {
  Verdict status = Verdict::kInconclusive;
  /// Contact order (contact method) or max F index (theorem29 method).
  int order = 0;
  std::string method;
  Complex point{};
  int words_checked = 0;
  /// Set when status is distinct.
  std::optional<TraceWitness> witness;
  /// Set when a unitary intertwiner was searched for.
  std::optional<double> unitary_residual;
};

struct CompareOptions {
  int word_len = 4;
  /// For rank > 1, look for an explicit unitary once all traces agree.
  bool unitary_search = true;
  std::uint64_t seed = 0x5eed;
};

/// Relative tolerance for words built from derivatives up to `order`.
double order_tolerance(int order);

/// Trace words up to options.word_len in P and the products
/// dbar^J P d^I P (1 <= I, J <= alpha_order) and their adjoints.
ContactVerdict contact_compare(const HolomorphicFrame& p,
                               const HolomorphicFrame& q, Complex z,
                               int alpha_order,
                               const CompareOptions& options = {});

/// Same test on P and the evaluated F_{i,j}, 1 <= i, j <= max_ij.
ContactVerdict theorem29_compare(const HolomorphicFrame& p,
                                 const HolomorphicFrame& q, Complex z,
                                 int max_ij,
                                 const CompareOptions& options = {});

enum class GeneratorMode {
  /// P and dbar^J P d^I P, I, J <= alpha.
  kProducts,
  /// P, dbar^J P and d^I P separately.
  kDerivatives,
};

struct AlgebraProbe {
  Complex point{};
  int alpha = 0;
  int word_len = 0;
  GeneratorMode mode = GeneratorMode::kProducts;
  int dim = 0;
  /// dim of the span of words up to word_len + 1 equals dim.
  bool stabilized = false;
  /// Maximal number of orthogonal minimal projections; only when dim <= 16.
  std::optional<int> k_lambda;
};

AlgebraProbe algebra_probe(const HolomorphicFrame& f, Complex z, int alpha,
                           int word_len,
                           GeneratorMode mode = GeneratorMode::kProducts,
                           std::uint64_t seed = 0x5eed);

/// Dimension of the linear span of a set of matrices.
int span_dimension(const std::vector<CMatrix>& mats, double tol = 1e-9);

/// |trace F_{s,t} + trace K_{z^{t-1} zbar^{s-1}}|.
double trace_identity_residual(const HolomorphicFrame& f, Complex z, int s,
                               int t);

/// |trace K + ||dP||_HS^2|.
double mean_curvature_residual(const HolomorphicFrame& f, Complex z);

struct KTPoint {
  Complex z{};
  double hs2 = 0.0;
  double g = 0.0;
  /// Five-point Laplacian of g; NaN on the grid boundary.
  double laplacian = 0.0;
};

struct KTScan {
  std::string label;
  int rank = 0;
  int dim = 0;
  double radius = 0.0;
  double step = 0.0;
  double multiplier = 1.0;
  /// Row-major: imaginary part ascending, then real part ascending.
  std::vector<KTPoint> points;
  double max_g = 0.0;
  double min_g = 0.0;
  double max_abs_g = 0.0;
  /// NaN when no interior point exists.
  double min_laplacian = 0.0;
};

/// `count` points uniform in the disk |lambda| <= radius, from a 64-bit
/// Mersenne twister seeded with `seed`. Same seed, same points.
std::vector<Complex> random_disk_points(std::uint64_t seed, int count,
                                        double radius);

/// Square grid of spacing `step` clipped to |lambda| <= radius.
std::vector<Complex> disk_grid(double radius, double step);

/// g = ||dP||_HS^2 - n m / (1 - |lambda|^2)^2 on disk_grid(radius, step).
/// Throws ValidationError unless 0 <= radius < 1 and step > 0.
KTScan kwon_treil_scan(const HolomorphicFrame& f, double radius, double step,
                       double multiplier = 1.0);

}  // namespace curvlab
