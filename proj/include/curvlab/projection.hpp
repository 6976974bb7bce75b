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

#include <string>
#include <vector>

#include "curvlab/curvature.hpp"
#include "curvlab/frame.hpp"
#include "curvlab/jet.hpp"

namespace curvlab {

/// Jet of P = alpha (alpha^* alpha)^{-1} alpha^*.
struct ProjectionJet {
  WJet jet;
  std::string provenance;
  int rank = 0;

  const CMatrix& value() const { return jet.at(0, 0); }
  /// d^b P
  const CMatrix& d(int b) const { return jet.at(0, b); }
  /// dbar^a P
  const CMatrix& dbar(int a) const { return jet.at(a, 0); }
};

ProjectionJet projection_jet(const HolomorphicFrame& f, Complex z,
                             int dbar_order, int d_order);

/// ||dbar P - P dbar P||_HS at the base point.
double holomorphy_residual(const ProjectionJet& p);

/// Same residual for a field given only pointwise; dbar P is estimated by
/// central differences. The field carries no holomorphy guarantee.
double pointwise_holomorphy_residual(const PointField& field, Complex z,
                                     double step = 1e-5);

/// The non-holomorphic control field 1/2 (I + Re(lambda) sigma_x).
CMatrix untrusted_control_field(Complex z);

struct IdentityResidual {
  std::string identity;
  int order = 0;
  double residual = 0.0;
};

/// Residuals of the structural identities satisfied by any holomorphic
/// projection field:
///   holomorphy      dbar P = P dbar P
///   dbar_d          dbar d^J P = d^J P dbar P - dbar P d^J P
///                                - sum_{k=1}^{J-1} C(J,k) d^{J-k}P dbar P d^k P
///   dbar_d_conj     dbar^I d P = d P dbar^I P - dbar^I P d P
///                                - sum_{k=1}^{I-1} C(I,k) dbar^{I-k}P d P dbar^k P
///   dbar_annihilate dbar^I P P = 0
///   d_annihilate    P d^J P = 0
/// `dbar_order` is I and `d_order` is J. Needs jet order (I, J) with both
/// at least 1.
std::vector<IdentityResidual> structural_residuals(const ProjectionJet& p,
                                                   int dbar_order,
                                                   int d_order);

/// Compares d^I P and dbar^J P from the generic jet product with the
/// explicit binomial expansions
///   d^I P    = (sum_k C(I,k) d^{I-k}alpha d^k h^{-1}) alpha^*
///   dbar^J P = alpha (sum_k C(J,k) dbar^{J-k}h^{-1} dbar^k alpha^*).
/// Returns the larger HS residual.
double claim1_crosscheck(const HolomorphicFrame& f, Complex z, int d_order,
                         int dbar_order);

}  // namespace curvlab
