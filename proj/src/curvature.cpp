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

#include "curvlab/curvature.hpp"

#include <sstream>

#include "curvlab/errors.hpp"

namespace curvlab {

MetricJet gram(const WJet& alpha_jet) {
  WJet h = jet_mul(jet_adjoint(alpha_jet), alpha_jet);
  const CMatrix& h0 = h.at(0, 0);
  Eigen::LLT<CMatrix> llt(0.5 * (h0 + h0.adjoint()));
  if (llt.info() != Eigen::Success) {
    throw PositiveDefinitenessError(
        "gram: metric is not positive definite (rank-deficient frame)", 0.0);
  }
  const double rc = rcond_estimate(h0);
  if (!(rc >= kSingularRcond)) {
    std::ostringstream os;
    os << "gram: metric is numerically singular (rcond " << rc << ")";
    throw PositiveDefinitenessError(os.str(), rc);
  }
  return MetricJet{std::move(h)};
}

MetricJet metric_jet(const HolomorphicFrame& f, Complex z, int order) {
  return gram(frame_eval(f, z, order, order));
}

CMatrix curvature(const MetricJet& h) {
  if (h.jet.dbar_order() < 1 || h.jet.d_order() < 1) {
    throw OrderError("curvature: metric jet needs order (1,1)");
  }
  const WJet theta = jet_mul(jet_inv(h.jet), jet_d(h.jet));
  return -jet_dbar(theta).at(0, 0);
}

const CMatrix& CurvatureTable::at(int i, int j) const {
  if (i < 0 || j < 0 || i > k || j > k) {
    std::ostringstream os;
    os << "curvature table has orders up to " << k << "; asked (" << i << ","
       << j << ")";
    throw OrderError(os.str());
  }
  return entries[static_cast<std::size_t>(i * (k + 1) + j)];
}

CurvatureTable covariant_table(const MetricJet& h, int k, CovariantPath path) {
  if (k < 0) {
    throw OrderError("covariant_table: negative order");
  }
  if (h.jet.dbar_order() < k + 1 || h.jet.d_order() < k + 1) {
    std::ostringstream os;
    os << "covariant_table: order " << k << " needs a metric jet of order ("
       << k + 1 << "," << k + 1 << "), got (" << h.jet.dbar_order() << ","
       << h.jet.d_order() << ")";
    throw OrderError(os.str());
  }
  const WJet theta = jet_mul(jet_inv(h.jet), jet_d(h.jet));
  const WJet kfield = jet_neg(jet_dbar(theta));

  auto d_rule = [&theta](const WJet& g) {
    return jet_add(jet_d(g), jet_commutator(theta, g));
  };

  const std::size_t side = static_cast<std::size_t>(k + 1);
  std::vector<WJet> fields(side * side);
  auto cell = [side](int i, int j) {
    return static_cast<std::size_t>(i) * side + static_cast<std::size_t>(j);
  };
  fields[cell(0, 0)] = kfield;
  if (path == CovariantPath::kZbarFirst) {
    for (int j = 1; j <= k; ++j) {
      fields[cell(0, j)] = jet_dbar(fields[cell(0, j - 1)]);
    }
    for (int j = 0; j <= k; ++j) {
      for (int i = 1; i <= k; ++i) {
        fields[cell(i, j)] = d_rule(fields[cell(i - 1, j)]);
      }
    }
  } else {
    for (int i = 1; i <= k; ++i) {
      fields[cell(i, 0)] = d_rule(fields[cell(i - 1, 0)]);
    }
    for (int i = 0; i <= k; ++i) {
      for (int j = 1; j <= k; ++j) {
        fields[cell(i, j)] = jet_dbar(fields[cell(i, j - 1)]);
      }
    }
  }

  CurvatureTable table;
  table.base = h.jet.base_point();
  table.k = k;
  table.path = path;
  table.theta = theta.at(0, 0);
  table.entries.reserve(side * side);
  for (const WJet& g : fields) {
    table.entries.push_back(g.at(0, 0));
  }
  return table;
}

}  // namespace curvlab
