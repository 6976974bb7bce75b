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

#include "curvlab/curvature.hpp"
#include "curvlab/errors.hpp"
#include "curvlab/frame.hpp"
#include "oracles.hpp"

namespace curvlab {
namespace {

using testing::radial_derivative;

TEST(Gram, ConstantFrame) {
  const MetricJet h = metric_jet(constant_frame(3), 0.5, 2);
  EXPECT_EQ(h.jet.at(0, 0)(0, 0), Complex(1.0));
  EXPECT_EQ(hs_norm(h.jet.at(1, 1)), 0.0);
}

TEST(Gram, BottAtZero) {
  const MetricJet h = metric_jet(bott_frame(), 0.0, 1);
  EXPECT_EQ(h.jet.at(0, 0)(0, 0), Complex(1.0));
  EXPECT_EQ(h.jet.at(1, 1)(0, 0), Complex(1.0));
  EXPECT_EQ(h.jet.at(0, 1)(0, 0), Complex(0.0));
  EXPECT_EQ(h.jet.at(1, 0)(0, 0), Complex(0.0));
}

TEST(Gram, HardyGeometricSum) {
  const MetricJet h = metric_jet(hardy_frame(16), 0.5, 0);
  EXPECT_NEAR(h.jet.at(0, 0)(0, 0).real(), (1 - std::pow(0.25, 16)) / 0.75, 1e-15);
}

TEST(Gram, SelfAdjointJet) {
  const MetricJet h =
      metric_jet(direct_sum(bott_frame(), bergman_frame(6)), Complex(0.1, 0.5), 3);
  EXPECT_LT(jet_max_distance(jet_adjoint(h.jet), h.jet), 1e-15);
}

TEST(Gram, RankDeficient) {
  WJet a(0.0, 1, 1, 2, 1);  // alpha = 0
  EXPECT_THROW(gram(a), PositiveDefinitenessError);
}

TEST(Curvature, ClosedForms) {
  EXPECT_EQ(hs_norm(curvature(metric_jet(constant_frame(2), 0.3, 1))), 0.0);
  EXPECT_NEAR(curvature(metric_jet(bott_frame(), 0.0, 1))(0, 0).real(), -1.0, 1e-15);
  EXPECT_NEAR(curvature(metric_jet(bott_frame(), 0.5, 1))(0, 0).real(), -0.64, 1e-15);
}

TEST(Curvature, NeedsOrder) {
  EXPECT_THROW(curvature(metric_jet(bott_frame(), 0.0, 0)), OrderError);
  EXPECT_THROW(covariant_table(metric_jet(bott_frame(), 0.0, 2), 2), OrderError);
}

TEST(CovariantTable, ConstantFrameZero) {
  const CurvatureTable t = covariant_table(metric_jet(constant_frame(3, 2), 0.2, 3), 2);
  for (const CMatrix& m : t.entries) EXPECT_EQ(hs_norm(m), 0.0);
}

TEST(CovariantTable, BottAtZero) {
  const CurvatureTable t = covariant_table(metric_jet(bott_frame(), 0.0, 2), 1);
  EXPECT_NEAR(t.at(0, 0)(0, 0).real(), -1.0, 1e-15);
  EXPECT_LT(std::abs(t.at(0, 1)(0, 0)), 1e-15);
  EXPECT_LT(std::abs(t.at(1, 0)(0, 0)), 1e-15);
  // d dbar of -(1 + |lambda|^2)^{-2} at 0 is 2.
  EXPECT_NEAR(t.at(1, 1)(0, 0).real(), 2.0, 1e-14);
}

TEST(CovariantTable, RankOneMatchesLogSeries) {
  // For rank 1 the table is d^i dbar^j K; K is a power series in |lambda|^2.
  struct Case {
    HolomorphicFrame f;
    double (*coeff)(int);
    double tol;
  };
  const std::vector<Case> cases = {
      {bott_frame(), testing::bott_curvature_coeff, 1e-9},
      {hardy_frame(48), testing::hardy_curvature_coeff, 1e-9},
      {bergman_frame(48), testing::bergman_curvature_coeff, 1e-8},
  };
  for (const Case& c : cases) {
    for (Complex z : testing::seeded_points(21, 6, 0.5)) {
      const CurvatureTable t = covariant_table(metric_jet(c.f, z, 4), 3);
      for (int i = 0; i <= 3; ++i) {
        for (int j = 0; j <= 3; ++j) {
          const Complex want = radial_derivative(c.coeff, 400, z, i, j);
          EXPECT_LT(std::abs(t.at(i, j)(0, 0) - want),
                    c.tol * std::max(1.0, std::abs(want)))
              << c.f.label() << " " << z << " " << i << j;
        }
      }
    }
  }
}

TEST(CovariantTable, HermitianTransportRankOne) {
  const HolomorphicFrame f = weighted_shift_frame({1, 2, 1, 2, 1, 2, 1}, 8);
  for (Complex z : f.probe_grid()) {
    const CurvatureTable t = covariant_table(metric_jet(f, z, 3), 2);
    for (int i = 0; i <= 2; ++i) {
      for (int j = 0; j <= 2; ++j) {
        EXPECT_LT(std::abs(t.at(i, j)(0, 0) - std::conj(t.at(j, i)(0, 0))),
                  1e-9 * std::max(1.0, std::abs(t.at(i, j)(0, 0))));
      }
    }
  }
}

TEST(CovariantTable, PathsAgreeForRankOne) {
  const HolomorphicFrame f = bergman_frame(20);
  const Complex z(0.3, -0.2);
  const auto a = covariant_table(metric_jet(f, z, 4), 3, CovariantPath::kZbarFirst);
  const auto b = covariant_table(metric_jet(f, z, 4), 3, CovariantPath::kZFirst);
  for (std::size_t k = 0; k < a.entries.size(); ++k) {
    EXPECT_LT(hs_norm(a.entries[k] - b.entries[k]),
              1e-10 * std::max(1.0, hs_norm(a.entries[k])));
  }
}

TEST(CovariantTable, PathsAgreeToOrderTwoForRankTwo) {
  // [dbar, d + ad theta] = -ad K, so the paths only split from order 3 on.
  std::mt19937_64 rng(5);
  std::vector<CMatrix> coeffs;
  for (int k = 0; k < 4; ++k) coeffs.push_back(testing::random_matrix(rng, 4, 2));
  const HolomorphicFrame f("random", coeffs, 0.3);
  const Complex z(0.05, 0.1);
  const auto a = covariant_table(metric_jet(f, z, 3), 2, CovariantPath::kZbarFirst);
  const auto b = covariant_table(metric_jet(f, z, 3), 2, CovariantPath::kZFirst);
  EXPECT_LT(hs_norm(a.at(1, 1) - b.at(1, 1)), 1e-10);
  EXPECT_GT(hs_norm(a.at(2, 1) - b.at(2, 1)), 1e-6);
}

TEST(CovariantTable, TruncatedHardyClosedForm) {
  // h_N = (1 - w^N) / (1 - w), w = |lambda|^2, so
  // K_N = -(1 - w)^{-2} + N^2 w^{N-1} / (1 - w^N)^2.
  for (int N : {8, 16, 32}) {
    const HolomorphicFrame f = hardy_frame(N);
    for (double r : {0.1, 0.25, 0.5, 0.75, 0.9}) {
      const Complex z = std::polar(r, 0.7);
      const double w = r * r;
      const double u = std::pow(w, N);
      const double want =
          -1.0 / std::pow(1.0 - w, 2) + N * N * std::pow(w, N - 1) / std::pow(1.0 - u, 2);
      EXPECT_NEAR(curvature(metric_jet(f, z, 1))(0, 0).real(), want,
                  1e-11 * std::abs(want)) << N << " " << r;
    }
  }
}

TEST(CovariantTable, HardyConvergence) {
  const HolomorphicFrame f = hardy_frame(32);
  for (double r : {0.0, 0.25, 0.5, 0.6}) {
    const Complex z = std::polar(r, 0.7);
    const double want = -1.0 / std::pow(1.0 - r * r, 2);
    EXPECT_NEAR(curvature(metric_jet(f, z, 1))(0, 0).real(), want, 1e-6);
  }
}

TEST(CovariantTable, UnitaryFrameChangeConjugates) {
  std::mt19937_64 rng(9);
  const HolomorphicFrame f = direct_sum(bott_frame(), hardy_frame(5));
  const CMatrix u =
      Eigen::HouseholderQR<CMatrix>(testing::random_matrix(rng, 2, 2)).householderQ();
  const HolomorphicFrame g = right_multiply(f, {u});
  const Complex z(0.2, 0.3);
  const auto a = covariant_table(metric_jet(f, z, 3), 2);
  const auto b = covariant_table(metric_jet(g, z, 3), 2);
  for (std::size_t k = 0; k < a.entries.size(); ++k) {
    EXPECT_LT(hs_norm(b.entries[k] - u.adjoint() * a.entries[k] * u), 1e-12);
  }
}

}  // namespace
}  // namespace curvlab
