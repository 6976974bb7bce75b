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

#include <gtest/gtest.h>

#include "curvlab/errors.hpp"
#include "curvlab/frame.hpp"
#include "curvlab/projection.hpp"
#include "oracles.hpp"

namespace curvlab {
namespace {

std::vector<HolomorphicFrame> builtin_frames() {
  return {constant_frame(2),
          bott_frame(),
          hardy_frame(32),
          bergman_frame(32),
          weighted_shift_frame({1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1}, 16),
          direct_sum(hardy_frame(8), bott_frame())};
}

TEST(ProjectionJet, BottValues) {
  CMatrix half(2, 2);
  half << 0.5, 0.5, 0.5, 0.5;
  EXPECT_LT(hs_norm(projection_jet(bott_frame(), 1.0, 0, 0).value() - half), 1e-15);
  const ProjectionJet p = projection_jet(bott_frame(), 0.0, 1, 1);
  CMatrix dp(2, 2), dbarp(2, 2);
  dp << 0, 0, 1, 0;
  dbarp << 0, 1, 0, 0;
  EXPECT_LT(hs_norm(p.d(1) - dp), 1e-15);
  EXPECT_LT(hs_norm(p.dbar(1) - dbarp), 1e-15);
  EXPECT_EQ(p.provenance, "bott");
}

TEST(ProjectionJet, ConstantFrame) {
  const ProjectionJet p = projection_jet(constant_frame(3), 0.4, 2, 2);
  CMatrix e = CMatrix::Zero(3, 3);
  e(0, 0) = 1.0;
  EXPECT_EQ(p.value(), e);
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 2; ++b) {
      if (a + b) EXPECT_EQ(hs_norm(p.jet.at(a, b)), 0.0);
    }
  }
}

TEST(ProjectionJet, IdempotentSelfAdjointRank) {
  for (const HolomorphicFrame& f : builtin_frames()) {
    for (Complex z : f.probe_grid()) {
      const CMatrix p = projection_jet(f, z, 0, 0).value();
      EXPECT_LT(hs_norm(p * p - p), 1e-10) << f.label();
      EXPECT_LT(hs_norm(p - p.adjoint()), 1e-10);
      EXPECT_NEAR(p.trace().real(), f.rank(), 1e-10);
    }
  }
}

TEST(ProjectionJet, GaugeInvariant) {
  const HolomorphicFrame f = direct_sum(bergman_frame(6), hardy_frame(6));
  CMatrix m0 = CMatrix::Identity(2, 2), m1 = CMatrix::Zero(2, 2);
  m1(0, 1) = 1.0;  // M(lambda) = [[1, lambda], [0, 1]]
  const HolomorphicFrame g = right_multiply(f, {m0, m1});
  const Complex z(0.2, -0.3);
  EXPECT_LT(jet_max_distance(projection_jet(f, z, 3, 3).jet,
                             projection_jet(g, z, 3, 3).jet),
            1e-9);
}

TEST(Holomorphy, FrameProjections) {
  EXPECT_EQ(holomorphy_residual(projection_jet(constant_frame(2), 0.1, 1, 0)), 0.0);
  for (const HolomorphicFrame& f : builtin_frames()) {
    EXPECT_LT(holomorphy_residual(projection_jet(f, Complex(0.3, 0.2), 1, 1)), 1e-10);
  }
}

TEST(Holomorphy, UntrustedControlFails) {
  EXPECT_GT(pointwise_holomorphy_residual(untrusted_control_field, 0.5), 0.1);
  // The same estimator accepts a genuine holomorphic curve.
  const auto bott = [](Complex z) { return testing::bott_projection(z); };
  EXPECT_LT(pointwise_holomorphy_residual(bott, 0.5), 1e-8);
}

TEST(StructuralResiduals, BottAnnihilation) {
  const ProjectionJet p = projection_jet(bott_frame(), 0.0, 1, 1);
  EXPECT_EQ(hs_norm(p.dbar(1) * p.value()), 0.0);
}

TEST(StructuralResiduals, ConstantFrameExactZero) {
  const ProjectionJet p = projection_jet(constant_frame(2), 0.0, 3, 3);
  for (const auto& r : structural_residuals(p, 3, 3)) {
    EXPECT_EQ(r.residual, 0.0) << r.identity;
  }
}

TEST(StructuralResiduals, HardyJ2) {
  const ProjectionJet p = projection_jet(hardy_frame(16), 0.3, 2, 2);
  const auto rs = structural_residuals(p, 2, 2);
  ASSERT_EQ(rs.size(), 5u);
  for (const auto& r : rs) EXPECT_LT(r.residual, 1e-8) << r.identity;
}

TEST(StructuralResiduals, AnnihilationAllOrders) {
  for (const HolomorphicFrame& f : builtin_frames()) {
    for (Complex z : testing::seeded_points(3, 4, 0.75)) {
      const ProjectionJet p = projection_jet(f, z, 3, 3);
      for (int k = 1; k <= 3; ++k) {
        EXPECT_LT(hs_norm(p.dbar(k) * p.value()), 1e-10 * std::max(1.0, hs_norm(p.dbar(k))));
        EXPECT_LT(hs_norm(p.value() * p.d(k)), 1e-10 * std::max(1.0, hs_norm(p.d(k))));
      }
    }
  }
}

TEST(StructuralResiduals, OrderShortfall) {
  const ProjectionJet p = projection_jet(bott_frame(), 0.0, 1, 1);
  EXPECT_THROW(structural_residuals(p, 2, 2), OrderError);
  EXPECT_THROW(structural_residuals(p, 0, 1), OrderError);
}

TEST(BinomialExpansion, MatchesProjectionJet) {
  EXPECT_LT(claim1_crosscheck(bott_frame(), 0.0, 1, 1), 1e-12);
  EXPECT_LT(claim1_crosscheck(hardy_frame(8), 0.3, 0, 0), 1e-15);
  EXPECT_LT(claim1_crosscheck(bergman_frame(24), Complex(0.4, 0.2), 2, 2), 1e-8);
}

}  // namespace
}  // namespace curvlab
