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

#include <vector>

#include "curvlab/frame.hpp"
#include "curvlab/jet.hpp"

namespace curvlab {

/// Jet of the metric h = alpha^* alpha. D[0][0] is Hermitian positive
/// definite.
struct MetricJet {
  WJet jet;
};

/// h = alpha^* alpha from the jet of a holomorphic frame.
/// Throws PositiveDefinitenessError when h(lambda) is not positive definite.
MetricJet gram(const WJet& alpha_jet);

/// gram(frame_eval(f, z, order, order)).
MetricJet metric_jet(const HolomorphicFrame& f, Complex z, int order);

/// K = -dbar(h^{-1} d h) at the base point. Needs order (1, 1).
CMatrix curvature(const MetricJet& h);

/// Order in which mixed covariant derivatives are taken. For rank 1 both
/// paths agree; for n > 1 they can differ by commutators with K once the
/// total order reaches 3.
enum class CovariantPath {
  /// K_{z^i zbar^j} = (d + [theta, .])^i dbar^j K.
  kZbarFirst,
  /// K_{z^i zbar^j} = dbar^j (d + [theta, .])^i K.
  kZFirst,
};

/// K_{z^i zbar^j}(lambda) for 0 <= i, j <= k, together with
/// theta = h^{-1} dh at the same point.
struct CurvatureTable {
  Complex base{};
  int k = 0;
  CovariantPath path = CovariantPath::kZbarFirst;
  /// Row-major: entries[i * (k + 1) + j] = K_{z^i zbar^j}.
  std::vector<CMatrix> entries;
  CMatrix theta;

  /// K_{z^i zbar^j}. i counts z-derivatives, j counts zbar-derivatives.
  const CMatrix& at(int i, int j) const;
};

/// Needs h of order at least (k + 1, k + 1).
CurvatureTable covariant_table(const MetricJet& h, int k,
                               CovariantPath path = CovariantPath::kZbarFirst);

}  // namespace curvlab
