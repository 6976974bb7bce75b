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

#include "curvlab/projection.hpp"

#include <algorithm>
#include <sstream>

#include "curvlab/errors.hpp"

namespace curvlab {

ProjectionJet projection_jet(const HolomorphicFrame& f, Complex z,
                             int dbar_order, int d_order) {
  const int m = std::max(dbar_order, d_order);
  const WJet alpha = frame_eval(f, z, m, m);
  const MetricJet h = gram(alpha);
  const WJet hinv = jet_inv(h.jet);
  WJet p = jet_mul(alpha, jet_mul(hinv, jet_adjoint(alpha)));
  return ProjectionJet{truncate(p, dbar_order, d_order), f.label(), f.rank()};
}

double holomorphy_residual(const ProjectionJet& p) {
  const CMatrix& dbar_p = p.jet.at(1, 0);
  return hs_norm(dbar_p - p.value() * dbar_p);
}

double pointwise_holomorphy_residual(const PointField& field, Complex z,
                                     double step) {
  const Complex h(step, 0.0);
  const Complex ih(0.0, step);
  const CMatrix fx = (field(z + h) - field(z - h)) / (2.0 * step);
  const CMatrix fy = (field(z + ih) - field(z - ih)) / (2.0 * step);
  const CMatrix dbar_p = 0.5 * (fx + Complex(0.0, 1.0) * fy);
  return hs_norm(dbar_p - field(z) * dbar_p);
}

CMatrix untrusted_control_field(Complex z) {
  CMatrix sigma_x(2, 2);
  sigma_x << 0.0, 1.0, 1.0, 0.0;
  return 0.5 * (CMatrix(CMatrix::Identity(2, 2)) + z.real() * sigma_x);
}

std::vector<IdentityResidual> structural_residuals(const ProjectionJet& p,
                                                   int dbar_order,
                                                   int d_order) {
  const int I = dbar_order;
  const int J = d_order;
  if (I < 1 || J < 1) {
    throw OrderError("structural_residuals: orders must be at least 1");
  }
  if (!p.jet.has(1, J) || !p.jet.has(I, 1)) {
    std::ostringstream os;
    os << "structural_residuals: need jet order (" << std::max(I, 1) << ","
       << std::max(J, 1) << "), got (" << p.jet.dbar_order() << ","
       << p.jet.d_order() << ")";
    throw OrderError(os.str());
  }
  const WJet& x = p.jet;
  const CMatrix& P = x.at(0, 0);
  const CMatrix& dP = x.at(0, 1);
  const CMatrix& dbarP = x.at(1, 0);

  std::vector<IdentityResidual> out;
  out.push_back({"holomorphy", 1, holomorphy_residual(p)});

  CMatrix rhs = x.at(0, J) * dbarP - dbarP * x.at(0, J);
  for (int k = 1; k <= J - 1; ++k) {
    rhs -= binomial(J, k) * (x.at(0, J - k) * dbarP * x.at(0, k));
  }
  out.push_back({"dbar_d", J, hs_norm(x.at(1, J) - rhs)});

  CMatrix rhs_conj = dP * x.at(I, 0) - x.at(I, 0) * dP;
  for (int k = 1; k <= I - 1; ++k) {
    rhs_conj -= binomial(I, k) * (x.at(I - k, 0) * dP * x.at(k, 0));
  }
  out.push_back({"dbar_d_conj", I, hs_norm(x.at(I, 1) - rhs_conj)});

  out.push_back({"dbar_annihilate", I, hs_norm(x.at(I, 0) * P)});
  out.push_back({"d_annihilate", J, hs_norm(P * x.at(0, J))});
  return out;
}

double claim1_crosscheck(const HolomorphicFrame& f, Complex z, int d_order,
                         int dbar_order) {
  const int I = d_order;
  const int J = dbar_order;
  if (I < 0 || J < 0) {
    throw OrderError("claim1_crosscheck: negative order");
  }
  const int m = std::max(I, J);
  const WJet alpha = frame_eval(f, z, m, m);
  const WJet alpha_star = jet_adjoint(alpha);
  const WJet hinv = jet_inv(gram(alpha).jet);

  CMatrix d_sum = CMatrix::Zero(f.dim(), f.rank());
  for (int k = 0; k <= I; ++k) {
    d_sum += binomial(I, k) * (alpha.at(0, I - k) * hinv.at(0, k));
  }
  const CMatrix d_formula = d_sum * alpha_star.at(0, 0);

  CMatrix dbar_sum = CMatrix::Zero(f.rank(), f.dim());
  for (int k = 0; k <= J; ++k) {
    dbar_sum += binomial(J, k) * (hinv.at(J - k, 0) * alpha_star.at(k, 0));
  }
  const CMatrix dbar_formula = alpha.at(0, 0) * dbar_sum;

  const ProjectionJet p = projection_jet(f, z, J, I);
  return std::max(hs_norm(p.d(I) - d_formula),
                  hs_norm(p.dbar(J) - dbar_formula));
}

}  // namespace curvlab
