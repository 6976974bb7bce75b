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

#include "curvlab/jet.hpp"

#include <algorithm>
#include <sstream>

#include "curvlab/errors.hpp"

namespace curvlab {

namespace {

void require_same_base(const WJet& x, const WJet& y, const char* op) {
  if (x.base_point() != y.base_point()) {
    std::ostringstream os;
    os << op << ": base points differ (" << x.base_point() << " vs "
       << y.base_point() << ")";
    throw DomainError(os.str());
  }
}

void require_same_shape(const WJet& x, const WJet& y, const char* op) {
  require_same_base(x, y, op);
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    std::ostringstream os;
    os << op << ": dimension mismatch " << x.rows() << "x" << x.cols()
       << " vs " << y.rows() << "x" << y.cols();
    throw ShapeError(os.str());
  }
}

}  // namespace

WJet::WJet(Complex base, int dbar_order, int d_order, Eigen::Index rows,
           Eigen::Index cols)
    : base_(base),
      dbar_order_(dbar_order),
      d_order_(d_order),
      rows_(rows),
      cols_(cols) {
  if (dbar_order < 0 || d_order < 0) {
    throw OrderError("WJet: negative order");
  }
  entries_.assign(static_cast<std::size_t>(dbar_order + 1) * (d_order + 1),
                  CMatrix::Zero(rows, cols));
}

WJet WJet::constant(Complex base, const CMatrix& value, int dbar_order,
                    int d_order) {
  WJet j(base, dbar_order, d_order, value.rows(), value.cols());
  j.set(0, 0, value);
  return j;
}

WJet WJet::identity(Complex base, Eigen::Index n, int dbar_order,
                    int d_order) {
  return constant(base, CMatrix::Identity(n, n), dbar_order, d_order);
}

const CMatrix& WJet::at(int a, int b) const {
  if (!has(a, b)) {
    std::ostringstream os;
    os << "jet entry (" << a << "," << b << ") not stored; order is ("
       << dbar_order_ << "," << d_order_ << ")";
    throw OrderError(os.str());
  }
  return entries_[index(a, b)];
}

void WJet::set(int a, int b, CMatrix value) {
  if (!has(a, b)) {
    std::ostringstream os;
    os << "jet entry (" << a << "," << b << ") outside order ("
       << dbar_order_ << "," << d_order_ << ")";
    throw OrderError(os.str());
  }
  if (value.rows() != rows_ || value.cols() != cols_) {
    throw ShapeError("WJet::set: entry has shape " + shape_string(value));
  }
  entries_[index(a, b)] = std::move(value);
}

WJet truncate(const WJet& x, int dbar_order, int d_order) {
  int A = std::min(dbar_order, x.dbar_order());
  int B = std::min(d_order, x.d_order());
  WJet r(x.base_point(), A, B, x.rows(), x.cols());
  for (int a = 0; a <= A; ++a) {
    for (int b = 0; b <= B; ++b) {
      r.set(a, b, x.at(a, b));
    }
  }
  return r;
}

WJet jet_add(const WJet& x, const WJet& y) {
  require_same_shape(x, y, "jet_add");
  int A = std::min(x.dbar_order(), y.dbar_order());
  int B = std::min(x.d_order(), y.d_order());
  WJet r(x.base_point(), A, B, x.rows(), x.cols());
  for (int a = 0; a <= A; ++a) {
    for (int b = 0; b <= B; ++b) {
      r.set(a, b, x.at(a, b) + y.at(a, b));
    }
  }
  return r;
}

WJet jet_scale(const WJet& x, Complex s) {
  WJet r(x.base_point(), x.dbar_order(), x.d_order(), x.rows(), x.cols());
  for (int a = 0; a <= x.dbar_order(); ++a) {
    for (int b = 0; b <= x.d_order(); ++b) {
      r.set(a, b, s * x.at(a, b));
    }
  }
  return r;
}

WJet jet_neg(const WJet& x) { return jet_scale(x, Complex(-1.0, 0.0)); }

WJet jet_sub(const WJet& x, const WJet& y) { return jet_add(x, jet_neg(y)); }

WJet jet_mul(const WJet& x, const WJet& y) {
  require_same_base(x, y, "jet_mul");
  if (x.cols() != y.rows()) {
    std::ostringstream os;
    os << "jet_mul: inner dimensions differ (" << x.rows() << "x" << x.cols()
       << " times " << y.rows() << "x" << y.cols() << ")";
    throw ShapeError(os.str());
  }
  int A = std::min(x.dbar_order(), y.dbar_order());
  int B = std::min(x.d_order(), y.d_order());
  WJet r(x.base_point(), A, B, x.rows(), y.cols());
  for (int a = 0; a <= A; ++a) {
    for (int b = 0; b <= B; ++b) {
      CMatrix acc = CMatrix::Zero(x.rows(), y.cols());
      for (int p = 0; p <= a; ++p) {
        for (int q = 0; q <= b; ++q) {
          const CMatrix& xl = x.at(p, q);
          const CMatrix& yr = y.at(a - p, b - q);
          if (xl.isZero(0.0) || yr.isZero(0.0)) {
            continue;
          }
          acc.noalias() += (binomial(a, p) * binomial(b, q)) * (xl * yr);
        }
      }
      r.set(a, b, std::move(acc));
    }
  }
  return r;
}

WJet jet_inv(const WJet& x) {
  if (x.rows() != x.cols()) {
    throw ShapeError("jet_inv: jet of non-square matrices");
  }
  const CMatrix x0inv = checked_inverse(x.at(0, 0), "jet_inv");
  const int A = x.dbar_order();
  const int B = x.d_order();
  WJet y(x.base_point(), A, B, x.rows(), x.cols());
  y.set(0, 0, x0inv);
  // Entries in order of increasing total degree so every Y term on the
  // right-hand side is already known.
  for (int total = 1; total <= A + B; ++total) {
    for (int a = std::max(0, total - B); a <= std::min(A, total); ++a) {
      int b = total - a;
      CMatrix acc = CMatrix::Zero(x.rows(), x.cols());
      for (int p = 0; p <= a; ++p) {
        for (int q = 0; q <= b; ++q) {
          if (p == 0 && q == 0) {
            continue;
          }
          const CMatrix& xl = x.at(p, q);
          if (xl.isZero(0.0)) {
            continue;
          }
          acc.noalias() +=
              (binomial(a, p) * binomial(b, q)) * (xl * y.at(a - p, b - q));
        }
      }
      y.set(a, b, -x0inv * acc);
    }
  }
  return y;
}

WJet jet_adjoint(const WJet& x) {
  WJet r(x.base_point(), x.d_order(), x.dbar_order(), x.cols(), x.rows());
  for (int a = 0; a <= x.d_order(); ++a) {
    for (int b = 0; b <= x.dbar_order(); ++b) {
      r.set(a, b, x.at(b, a).adjoint());
    }
  }
  return r;
}

WJet jet_d(const WJet& x) {
  if (x.d_order() < 1) {
    throw OrderError("jet_d: jet has no d-derivative entries");
  }
  WJet r(x.base_point(), x.dbar_order(), x.d_order() - 1, x.rows(),
         x.cols());
  for (int a = 0; a <= r.dbar_order(); ++a) {
    for (int b = 0; b <= r.d_order(); ++b) {
      r.set(a, b, x.at(a, b + 1));
    }
  }
  return r;
}

WJet jet_dbar(const WJet& x) {
  if (x.dbar_order() < 1) {
    throw OrderError("jet_dbar: jet has no dbar-derivative entries");
  }
  WJet r(x.base_point(), x.dbar_order() - 1, x.d_order(), x.rows(),
         x.cols());
  for (int a = 0; a <= r.dbar_order(); ++a) {
    for (int b = 0; b <= r.d_order(); ++b) {
      r.set(a, b, x.at(a + 1, b));
    }
  }
  return r;
}

WJet jet_commutator(const WJet& x, const WJet& y) {
  return jet_sub(jet_mul(x, y), jet_mul(y, x));
}

double jet_max_distance(const WJet& x, const WJet& y) {
  require_same_shape(x, y, "jet_max_distance");
  int A = std::min(x.dbar_order(), y.dbar_order());
  int B = std::min(x.d_order(), y.d_order());
  double worst = 0.0;
  for (int a = 0; a <= A; ++a) {
    for (int b = 0; b <= B; ++b) {
      worst = std::max(worst, hs_norm(x.at(a, b) - y.at(a, b)));
    }
  }
  return worst;
}

namespace {

double relative_residual(const CMatrix& estimate, const CMatrix& exact) {
  return hs_norm(estimate - exact) / std::max(1.0, hs_norm(exact));
}

void record(FiniteDifferenceReport& report, int a, int b, double residual) {
  report.residuals[{a, b}] = residual;
  report.max_residual = std::max(report.max_residual, residual);
}

}  // namespace

FiniteDifferenceReport finite_difference_check(const PointField& field,
                                               const WJet& jet, double step) {
  if (!(step > 0.0 && step <= 1e-2)) {
    throw ValidationError("finite_difference_check: step must be in (0, 1e-2]");
  }
  const Complex z = jet.base_point();
  const Complex h(step, 0.0);
  const Complex ih(0.0, step);
  const Complex i1(0.0, 1.0);

  const CMatrix f0 = field(z);
  const CMatrix fe = field(z + h);
  const CMatrix fw = field(z - h);
  const CMatrix fn = field(z + ih);
  const CMatrix fs = field(z - ih);

  const CMatrix fx = (fe - fw) / (2.0 * step);
  const CMatrix fy = (fn - fs) / (2.0 * step);

  FiniteDifferenceReport report;
  record(report, 0, 0, relative_residual(f0, jet.at(0, 0)));
  if (jet.has(0, 1)) {
    record(report, 0, 1, relative_residual(0.5 * (fx - i1 * fy), jet.at(0, 1)));
  }
  if (jet.has(1, 0)) {
    record(report, 1, 0, relative_residual(0.5 * (fx + i1 * fy), jet.at(1, 0)));
  }
  const bool second = jet.has(1, 1) || jet.has(0, 2) || jet.has(2, 0);
  if (second) {
    const double h2 = step * step;
    const CMatrix fxx = (fe - 2.0 * f0 + fw) / h2;
    const CMatrix fyy = (fn - 2.0 * f0 + fs) / h2;
    const CMatrix fxy = (field(z + h + ih) - field(z + h - ih) -
                         field(z - h + ih) + field(z - h - ih)) /
                        (4.0 * h2);
    if (jet.has(1, 1)) {
      record(report, 1, 1, relative_residual(0.25 * (fxx + fyy), jet.at(1, 1)));
    }
    if (jet.has(0, 2)) {
      record(report, 0, 2,
             relative_residual(0.25 * (fxx - fyy - 2.0 * i1 * fxy),
                               jet.at(0, 2)));
    }
    if (jet.has(2, 0)) {
      record(report, 2, 0,
             relative_residual(0.25 * (fxx - fyy + 2.0 * i1 * fxy),
                               jet.at(2, 0)));
    }
  }
  return report;
}

FiniteDifferenceReport jet_consistency_check(const JetField& jets,
                                             Complex base, int dbar_order,
                                             int d_order, double step) {
  if (!(step > 0.0 && step <= 1e-2)) {
    throw ValidationError("jet_consistency_check: step must be in (0, 1e-2]");
  }
  const Complex h(step, 0.0);
  const Complex ih(0.0, step);
  const Complex i1(0.0, 1.0);
  const WJet center = jets(base);
  const WJet east = jets(base + h);
  const WJet west = jets(base - h);
  const WJet north = jets(base + ih);
  const WJet south = jets(base - ih);

  FiniteDifferenceReport report;
  for (int a = 0; a <= dbar_order; ++a) {
    for (int b = 0; b <= d_order; ++b) {
      if (a + b == 0) {
        continue;
      }
      const int la = b >= 1 ? a : a - 1;
      const int lb = b >= 1 ? b - 1 : b;
      const CMatrix fx = (east.at(la, lb) - west.at(la, lb)) / (2.0 * step);
      const CMatrix fy = (north.at(la, lb) - south.at(la, lb)) / (2.0 * step);
      const CMatrix estimate =
          b >= 1 ? CMatrix(0.5 * (fx - i1 * fy)) : CMatrix(0.5 * (fx + i1 * fy));
      record(report, a, b, relative_residual(estimate, center.at(a, b)));
    }
  }
  return report;
}

}  // namespace curvlab
