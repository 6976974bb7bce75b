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

#include <limits>
#include <string>
#include <vector>

#include "curvlab/jet.hpp"
#include "curvlab/matrix.hpp"

namespace curvlab {

/// Holomorphic frame alpha(lambda) = sum_k coeffs[k] lambda^k, an N x n
/// polynomial matrix with full column rank on |lambda| < radius.
///
/// Construction validates the coefficients and probes the rank on a
/// 64-point grid; after that the frame is immutable.
class HolomorphicFrame {
 public:
  static constexpr double kInfiniteRadius =
      std::numeric_limits<double>::infinity();

  HolomorphicFrame(std::string label, std::vector<CMatrix> coeffs,
                   double radius);

  const std::string& label() const { return label_; }
  /// Rank of the curve (number of columns).
  int rank() const { return rank_; }
  /// Truncation dimension (number of rows).
  int dim() const { return dim_; }
  double radius() const { return radius_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<CMatrix>& coeffs() const { return coeffs_; }

  bool contains(Complex z) const { return std::abs(z) < radius_; }

  /// alpha(z). No domain check.
  CMatrix value(Complex z) const;

  /// Points of the full-rank probe grid (centre plus 7 rings of 9).
  std::vector<Complex> probe_grid() const;

 private:
  std::string label_;
  std::vector<CMatrix> coeffs_;
  double radius_;
  int rank_ = 0;
  int dim_ = 0;
};

/// Smallest singular value allowed on the probe grid.
inline constexpr double kFullRankFloor = 1e-8;

/// Exact jet of alpha at z. Entries with a >= 1 are exactly zero.
/// Throws DomainError when |z| >= radius.
WJet frame_eval(const HolomorphicFrame& f, Complex z, int dbar_order,
                int d_order);

/// Columns e_1..e_n of C^N, independent of lambda.
HolomorphicFrame constant_frame(int N, int n = 1);

/// alpha(lambda) = (1, lambda)^T.
HolomorphicFrame bott_frame();

/// Eigenvector frame of the truncated weighted backward shift:
/// alpha(lambda) = sum_k lambda^k / (w_1 ... w_k) e_{k+1}, k < N.
/// Radius is min_k (w_1 ... w_k)^{1/k}.
HolomorphicFrame weighted_shift_frame(const std::vector<double>& weights,
                                      int N);

/// All weights 1; radius 1.
HolomorphicFrame hardy_frame(int N);

/// w_k = sqrt(k / (k + 1)); radius 1.
HolomorphicFrame bergman_frame(int N);

/// Block-diagonal frame; radius is the smaller of the two.
HolomorphicFrame direct_sum(const HolomorphicFrame& f,
                            const HolomorphicFrame& g);

/// lambda -> U alpha(lambda) for a constant N x N matrix U.
HolomorphicFrame left_multiply(const CMatrix& u, const HolomorphicFrame& f);

/// lambda -> alpha(lambda) M(lambda) for a polynomial n x n matrix
/// M(lambda) = sum_k gauge[k] lambda^k. Presents the same curve when M is
/// invertible on the domain.
HolomorphicFrame right_multiply(const HolomorphicFrame& f,
                                const std::vector<CMatrix>& gauge);

}  // namespace curvlab
