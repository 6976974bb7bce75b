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

#include "curvlab/frame.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "curvlab/errors.hpp"

namespace curvlab {

namespace {

double falling_factorial(int k, int b) {
  double r = 1.0;
  for (int i = 0; i < b; ++i) {
    r *= static_cast<double>(k - i);
  }
  return r;
}

}  // namespace

HolomorphicFrame::HolomorphicFrame(std::string label,
                                   std::vector<CMatrix> coeffs, double radius)
    : label_(std::move(label)), coeffs_(std::move(coeffs)), radius_(radius) {
  if (coeffs_.empty()) {
    throw ValidationError("frame '" + label_ + "': no coefficients");
  }
  if (!(radius_ > 0.0)) {
    throw ValidationError("frame '" + label_ + "': radius must be positive");
  }
  dim_ = static_cast<int>(coeffs_.front().rows());
  rank_ = static_cast<int>(coeffs_.front().cols());
  if (dim_ < 1 || rank_ < 1 || rank_ > dim_) {
    throw ValidationError("frame '" + label_ + "': need N >= n >= 1");
  }
  for (const CMatrix& c : coeffs_) {
    if (c.rows() != dim_ || c.cols() != rank_) {
      throw ValidationError("frame '" + label_ +
                            "': coefficient shapes differ");
    }
    if (!c.allFinite()) {
      throw ValidationError("frame '" + label_ +
                            "': non-finite coefficient");
    }
  }
  if (degree() > dim_) {
    std::ostringstream os;
    os << "frame '" << label_ << "': degree " << degree()
       << " exceeds truncation dimension " << dim_;
    throw ValidationError(os.str());
  }
  for (Complex z : probe_grid()) {
    double s = smallest_singular_value(value(z));
    if (!(s > kFullRankFloor)) {
      std::ostringstream os;
      os << "frame '" << label_ << "': rank deficient at " << z
         << " (smallest singular value " << s << ")";
      throw ValidationError(os.str());
    }
  }
}

CMatrix HolomorphicFrame::value(Complex z) const {
  // Horner.
  CMatrix acc = coeffs_.back();
  for (int k = degree() - 1; k >= 0; --k) {
    acc = z * acc + coeffs_[static_cast<std::size_t>(k)];
  }
  return acc;
}

std::vector<Complex> HolomorphicFrame::probe_grid() const {
  const double outer = 0.9 * std::min(radius_, 1.0);
  std::vector<Complex> pts;
  pts.reserve(64);
  pts.emplace_back(0.0, 0.0);
  for (int ring = 1; ring <= 7; ++ring) {
    const double r = outer * ring / 7.0;
    for (int k = 0; k < 9; ++k) {
      // Offset each ring so the rays do not line up.
      const double t = 2.0 * std::numbers::pi * (k + 0.5 * ring / 7.0) / 9.0;
      pts.push_back(std::polar(r, t));
    }
  }
  return pts;
}

WJet frame_eval(const HolomorphicFrame& f, Complex z, int dbar_order,
                int d_order) {
  if (!f.contains(z)) {
    std::ostringstream os;
    os << "frame '" << f.label() << "': point " << z
       << " outside domain |lambda| < " << f.radius();
    throw DomainError(os.str());
  }
  WJet jet(z, dbar_order, d_order, f.dim(), f.rank());
  const auto& c = f.coeffs();
  for (int b = 0; b <= d_order; ++b) {
    CMatrix acc = CMatrix::Zero(f.dim(), f.rank());
    if (b <= f.degree()) {
      // Horner on sum_{k>=b} k!/(k-b)! c_k z^{k-b}.
      for (int k = f.degree(); k >= b; --k) {
        acc = z * acc + falling_factorial(k, b) * c[static_cast<std::size_t>(k)];
      }
    }
    jet.set(0, b, std::move(acc));
  }
  return jet;
}

HolomorphicFrame constant_frame(int N, int n) {
  if (N < 1 || n < 1 || n > N) {
    throw ValidationError("constant_frame: need N >= n >= 1");
  }
  CMatrix c = CMatrix::Zero(N, n);
  for (int i = 0; i < n; ++i) {
    c(i, i) = 1.0;
  }
  std::ostringstream label;
  label << "constant(N=" << N << ",n=" << n << ")";
  return HolomorphicFrame(label.str(), {c}, HolomorphicFrame::kInfiniteRadius);
}

HolomorphicFrame bott_frame() {
  CMatrix c0 = CMatrix::Zero(2, 1);
  CMatrix c1 = CMatrix::Zero(2, 1);
  c0(0, 0) = 1.0;
  c1(1, 0) = 1.0;
  return HolomorphicFrame("bott", {c0, c1}, HolomorphicFrame::kInfiniteRadius);
}

namespace {

HolomorphicFrame shift_frame(const std::string& label,
                             const std::vector<double>& weights, int N,
                             double radius) {
  std::vector<CMatrix> coeffs;
  coeffs.reserve(static_cast<std::size_t>(N));
  double product = 1.0;
  for (int k = 0; k < N; ++k) {
    if (k > 0) {
      product *= weights[static_cast<std::size_t>(k - 1)];
    }
    CMatrix c = CMatrix::Zero(N, 1);
    c(k, 0) = 1.0 / product;
    coeffs.push_back(std::move(c));
  }
  return HolomorphicFrame(label, std::move(coeffs), radius);
}

}  // namespace

HolomorphicFrame weighted_shift_frame(const std::vector<double>& weights,
                                      int N) {
  if (N < 2) {
    throw ValidationError("weighted_shift_frame: N must be at least 2");
  }
  if (static_cast<int>(weights.size()) != N - 1) {
    std::ostringstream os;
    os << "weighted_shift_frame: expected " << N - 1 << " weights, got "
       << weights.size();
    throw ValidationError(os.str());
  }
  double radius = HolomorphicFrame::kInfiniteRadius;
  double log_product = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (!(weights[k] > 0.0) || !std::isfinite(weights[k])) {
      throw ValidationError("weighted_shift_frame: weights must be positive");
    }
    log_product += std::log(weights[k]);
    radius = std::min(radius, std::exp(log_product / (k + 1.0)));
  }
  std::ostringstream label;
  label << "weighted_shift(N=" << N << ")";
  return shift_frame(label.str(), weights, N, radius);
}

HolomorphicFrame hardy_frame(int N) {
  if (N < 2) {
    throw ValidationError("hardy_frame: N must be at least 2");
  }
  std::ostringstream label;
  label << "hardy(N=" << N << ")";
  return shift_frame(label.str(), std::vector<double>(N - 1, 1.0), N, 1.0);
}

HolomorphicFrame bergman_frame(int N) {
  if (N < 2) {
    throw ValidationError("bergman_frame: N must be at least 2");
  }
  std::vector<double> w;
  for (int k = 1; k < N; ++k) {
    w.push_back(std::sqrt(static_cast<double>(k) / (k + 1.0)));
  }
  std::ostringstream label;
  label << "bergman(N=" << N << ")";
  return shift_frame(label.str(), w, N, 1.0);
}

HolomorphicFrame direct_sum(const HolomorphicFrame& f,
                            const HolomorphicFrame& g) {
  const int N = f.dim() + g.dim();
  const int n = f.rank() + g.rank();
  const int deg = std::max(f.degree(), g.degree());
  std::vector<CMatrix> coeffs;
  for (int k = 0; k <= deg; ++k) {
    CMatrix c = CMatrix::Zero(N, n);
    if (k <= f.degree()) {
      c.topLeftCorner(f.dim(), f.rank()) = f.coeffs()[static_cast<std::size_t>(k)];
    }
    if (k <= g.degree()) {
      c.bottomRightCorner(g.dim(), g.rank()) =
          g.coeffs()[static_cast<std::size_t>(k)];
    }
    coeffs.push_back(std::move(c));
  }
  return HolomorphicFrame(f.label() + "+" + g.label(), std::move(coeffs),
                          std::min(f.radius(), g.radius()));
}

HolomorphicFrame left_multiply(const CMatrix& u, const HolomorphicFrame& f) {
  if (u.rows() != f.dim() || u.cols() != f.dim()) {
    throw ShapeError("left_multiply: matrix must be N x N");
  }
  std::vector<CMatrix> coeffs;
  for (const CMatrix& c : f.coeffs()) {
    coeffs.push_back(u * c);
  }
  return HolomorphicFrame("U*" + f.label(), std::move(coeffs), f.radius());
}

HolomorphicFrame right_multiply(const HolomorphicFrame& f,
                                const std::vector<CMatrix>& gauge) {
  if (gauge.empty()) {
    throw ValidationError("right_multiply: empty gauge polynomial");
  }
  for (const CMatrix& m : gauge) {
    if (m.rows() != f.rank() || m.cols() != f.rank()) {
      throw ShapeError("right_multiply: gauge coefficients must be n x n");
    }
  }
  const int deg = f.degree() + static_cast<int>(gauge.size()) - 1;
  std::vector<CMatrix> coeffs(static_cast<std::size_t>(deg + 1),
                              CMatrix::Zero(f.dim(), f.rank()));
  for (int i = 0; i <= f.degree(); ++i) {
    for (std::size_t j = 0; j < gauge.size(); ++j) {
      coeffs[static_cast<std::size_t>(i) + j] +=
          f.coeffs()[static_cast<std::size_t>(i)] * gauge[j];
    }
  }
  while (coeffs.size() > 1 && coeffs.back().isZero(0.0)) {
    coeffs.pop_back();
  }
  return HolomorphicFrame(f.label() + "*M", std::move(coeffs), f.radius());
}

}  // namespace curvlab
