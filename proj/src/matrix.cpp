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

#include "curvlab/matrix.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "curvlab/errors.hpp"

namespace curvlab {

CMatrix zeros(Eigen::Index rows, Eigen::Index cols) {
  return CMatrix::Zero(rows, cols);
}

CMatrix identity(Eigen::Index n) { return CMatrix::Identity(n, n); }

double hs_norm(const CMatrix& m) { return m.norm(); }

namespace {

// Eigen's estimate can come back finite for an exactly singular factor, so
// it is capped by the pivot ratio of U.
double lu_rcond(const Eigen::PartialPivLU<CMatrix>& lu) {
  const auto diag = lu.matrixLU().diagonal().cwiseAbs();
  if (diag.size() == 0) return 0.0;
  const double top = diag.maxCoeff();
  if (!(top > 0.0)) return 0.0;
  const double rc = std::min(lu.rcond(), diag.minCoeff() / top);
  return std::isfinite(rc) ? rc : 0.0;
}

}  // namespace

double rcond_estimate(const CMatrix& m) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    return 0.0;
  }
  if (!m.allFinite()) {
    return 0.0;
  }
  return lu_rcond(Eigen::PartialPivLU<CMatrix>(m));
}

CMatrix checked_inverse(const CMatrix& m, const std::string& context) {
  if (m.rows() != m.cols()) {
    throw ShapeError(context + ": inverse of non-square matrix " +
                     shape_string(m));
  }
  Eigen::PartialPivLU<CMatrix> lu(m);
  const double rc = lu_rcond(lu);
  if (!(rc >= kSingularRcond)) {
    std::ostringstream os;
    os << context << ": matrix is numerically singular (rcond estimate "
       << rc << ", condition ~" << (rc > 0 ? 1.0 / rc : INFINITY) << ")";
    throw SingularityError(os.str(), rc);
  }
  return lu.inverse();
}

double smallest_singular_value(const CMatrix& m) {
  if (m.size() == 0) {
    return 0.0;
  }
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues().minCoeff();
}

CMatrix range_basis(const CMatrix& projection, double tol) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(
      0.5 * (projection + projection.adjoint()));
  const auto& values = es.eigenvalues();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values(i) > 0.5 + tol) {
      keep.push_back(i);
    }
  }
  CMatrix basis(projection.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) {
    basis.col(static_cast<Eigen::Index>(k)) = es.eigenvectors().col(keep[k]);
  }
  return basis;
}

bool same_shape(const CMatrix& a, const CMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols();
}

std::string shape_string(const CMatrix& m) {
  std::ostringstream os;
  os << m.rows() << "x" << m.cols();
  return os.str();
}

double binomial(int n, int k) {
  if (k < 0 || k > n) {
    return 0.0;
  }
  double r = 1.0;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

}  // namespace curvlab
