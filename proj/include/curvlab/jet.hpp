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

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "curvlab/matrix.hpp"

namespace curvlab {

/// Two-parameter Wirtinger jet of a matrix-valued field at a point.
///
/// Entry (a, b) holds dbar^a d^b F(base), where d = d/d lambda and
/// dbar = d/d conj(lambda) are treated as commuting formal derivations.
/// The first index always counts dbar. Entries exist for 0 <= a <= A and
/// 0 <= b <= B, and every entry has the same dimensions.
class WJet {
 public:
  WJet() = default;

  /// Zero jet.
  WJet(Complex base, int dbar_order, int d_order, Eigen::Index rows,
       Eigen::Index cols);

  /// Jet of a field that is constant near `base`.
  static WJet constant(Complex base, const CMatrix& value, int dbar_order,
                       int d_order);
  static WJet identity(Complex base, Eigen::Index n, int dbar_order,
                       int d_order);

  Complex base_point() const { return base_; }
  int dbar_order() const { return dbar_order_; }
  int d_order() const { return d_order_; }
  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }

  bool has(int a, int b) const {
    return a >= 0 && b >= 0 && a <= dbar_order_ && b <= d_order_;
  }

  /// Throws OrderError when (a, b) is not stored.
  const CMatrix& at(int a, int b) const;

  /// Overwrite an entry. Dimensions must match the jet.
  void set(int a, int b, CMatrix value);

 private:
  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a) * (d_order_ + 1) + b;
  }

  Complex base_{};
  int dbar_order_ = 0;
  int d_order_ = 0;
  Eigen::Index rows_ = 0;
  Eigen::Index cols_ = 0;
  std::vector<CMatrix> entries_;
};

/// Keep entries (a, b) with a <= dbar_order and b <= d_order.
WJet truncate(const WJet& x, int dbar_order, int d_order);

WJet jet_add(const WJet& x, const WJet& y);
WJet jet_sub(const WJet& x, const WJet& y);
WJet jet_scale(const WJet& x, Complex s);
WJet jet_neg(const WJet& x);

/// Leibniz product. The result order is the componentwise minimum.
WJet jet_mul(const WJet& x, const WJet& y);

/// Jet of x^{-1}, solved recursively from x * x^{-1} = I.
WJet jet_inv(const WJet& x);

/// Jet of the adjoint field: entry (a, b) = adjoint of x entry (b, a).
/// The stored order swaps to (d_order, dbar_order).
WJet jet_adjoint(const WJet& x);

/// Jet of d F: entry (a, b) = x entry (a, b + 1).
WJet jet_d(const WJet& x);
/// Jet of dbar F: entry (a, b) = x entry (a + 1, b).
WJet jet_dbar(const WJet& x);

/// x * y - y * x.
WJet jet_commutator(const WJet& x, const WJet& y);

/// Largest Hilbert-Schmidt distance between matching entries over the
/// common order.
double jet_max_distance(const WJet& x, const WJet& y);

inline WJet operator+(const WJet& x, const WJet& y) { return jet_add(x, y); }
inline WJet operator-(const WJet& x, const WJet& y) { return jet_sub(x, y); }
inline WJet operator-(const WJet& x) { return jet_neg(x); }
inline WJet operator*(const WJet& x, const WJet& y) { return jet_mul(x, y); }

using PointField = std::function<CMatrix(Complex)>;
using JetField = std::function<WJet(Complex)>;

struct FiniteDifferenceReport {
  /// Relative residual per checked entry, keyed by (a, b).
  std::map<std::pair<int, int>, double> residuals;
  double max_residual = 0.0;
};

/// Central-difference Wirtinger estimates of d F, dbar F, dbar d F (and the
/// pure second derivatives when the jet carries them) compared with the jet.
/// Residual per entry is ||estimate - entry||_HS / max(1, ||entry||_HS).
FiniteDifferenceReport finite_difference_check(const PointField& field,
                                               const WJet& jet, double step);

/// Checks each entry (a, b), a + b >= 1, against a first-order central
/// difference of the lower entry computed by `jets` at neighbouring points:
/// d of entry (a, b - 1) when b >= 1, dbar of entry (a - 1, 0) otherwise.
FiniteDifferenceReport jet_consistency_check(const JetField& jets,
                                             Complex base, int dbar_order,
                                             int d_order, double step);

}  // namespace curvlab
