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

#include <complex>
#include <cstddef>
#include <string>

#include <Eigen/Dense>

namespace curvlab {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

/// Reciprocal condition number below which a matrix counts as singular.
inline constexpr double kSingularRcond = 1e-12;

/// Default absolute tolerance for "equals identity" style checks.
inline constexpr double kIdentityTol = 1e-10;

CMatrix zeros(Eigen::Index rows, Eigen::Index cols);
CMatrix identity(Eigen::Index n);

/// Hilbert-Schmidt (Frobenius) norm.
double hs_norm(const CMatrix& m);

/// Inverse through partial-pivot LU. Throws SingularityError when the
/// reciprocal condition estimate drops below kSingularRcond.
CMatrix checked_inverse(const CMatrix& m, const std::string& context);

/// Reciprocal condition estimate of a square matrix (0 for empty or singular).
double rcond_estimate(const CMatrix& m);

double smallest_singular_value(const CMatrix& m);

/// Orthonormal basis (columns) of the range of a Hermitian projection.
CMatrix range_basis(const CMatrix& projection, double tol = 0.0);

bool same_shape(const CMatrix& a, const CMatrix& b);

std::string shape_string(const CMatrix& m);

/// Binomial coefficient as double; exact for the small arguments used here.
double binomial(int n, int k);

}  // namespace curvlab
