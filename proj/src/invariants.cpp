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

#include "curvlab/invariants.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <sstream>

#include "curvlab/curvature.hpp"
#include "curvlab/errors.hpp"
#include "curvlab/nc.hpp"
#include "curvlab/parallel.hpp"
#include "curvlab/projection.hpp"

namespace curvlab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kMatched:
      return "matched";
    case Verdict::kDistinct:
      return "distinct";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "unknown";
}

double order_tolerance(int order) { return 1e-9 * std::pow(10.0, order); }

namespace {

struct Generator {
  std::string name;
  int order = 0;
  CMatrix value;
};

std::string power_name(const char* base, int k) {
  return k == 1 ? std::string(base) : std::string(base) + "^" + std::to_string(k);
}

std::vector<Generator> contact_family(const HolomorphicFrame& f, Complex z,
                                      int alpha) {
  const ProjectionJet p = projection_jet(f, z, alpha, alpha);
  std::vector<Generator> gens;
  gens.push_back({"P", 0, p.value()});
  // dbar^J P P and P d^I P vanish, so only J, I >= 1 carry information.
  for (int J = 1; J <= alpha; ++J) {
    for (int I = 1; I <= alpha; ++I) {
      gens.push_back({power_name("∂̄", J) + "P" + power_name("∂", I) + "P",
                      std::max(I, J), p.dbar(J) * p.d(I)});
    }
  }
  return gens;
}

std::vector<Generator> f_family(const HolomorphicFrame& f, Complex z,
                                int max_ij) {
  const ProjectionJet p = projection_jet(f, z, max_ij, max_ij);
  std::vector<Generator> gens;
  gens.push_back({"P", 0, p.value()});
  for (int i = 1; i <= max_ij; ++i) {
    for (int j = 1; j <= max_ij; ++j) {
      std::ostringstream name;
      name << "F_{" << i << "," << j << "}";
      gens.push_back({name.str(), std::max(i, j),
                      nc::evaluate(nc::f_expr(i, j), p)});
    }
  }
  return gens;
}

struct Letter {
  std::size_t gen = 0;
  bool adjoint = false;
};

std::string letter_name(const std::vector<Generator>& gens, const Letter& l) {
  const std::string& base = gens[l.gen].name;
  if (!l.adjoint) return base;
  return base.size() > 2 ? "(" + base + ")*" : base + "*";
}

// All generators satisfy G = P G P, so traces of words can be computed on
// ran P in an orthonormal basis.
std::vector<CMatrix> compress(const std::vector<Generator>& gens) {
  const CMatrix v = range_basis(gens.front().value);
  std::vector<CMatrix> out;
  out.reserve(gens.size());
  for (const Generator& g : gens) {
    out.push_back(v.adjoint() * g.value * v);
  }
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// Looks for a unitary U with U A_k U^* = B_k for every k. A generic element
// of the intertwiner space of two *-closed families is invertible and its
// polar factor intertwines them.
double unitary_search(const std::vector<CMatrix>& a,
                      const std::vector<CMatrix>& b, std::uint64_t seed) {
  const Eigen::Index n = a.front().rows();
  const CMatrix id = CMatrix::Identity(n, n);
  const Eigen::Index blocks = static_cast<Eigen::Index>(2 * a.size());
  CMatrix m(blocks * n * n, n * n);
  for (std::size_t k = 0; k < a.size(); ++k) {
    const auto r = static_cast<Eigen::Index>(2 * k) * n * n;
    m.block(r, 0, n * n, n * n) =
        kron(a[k].transpose(), id) - kron(id, b[k]);
    m.block(r + n * n, 0, n * n, n * n) =
        kron(a[k].conjugate(), id) - kron(id, b[k].adjoint());
  }
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cutoff = 1e-8 * std::max(1.0, s.size() ? s(0) : 0.0);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(n * n);
  int nullity = 0;
  for (Eigen::Index c = 0; c < n * n; ++c) {
    const double sv = c < s.size() ? s(c) : 0.0;
    if (sv <= cutoff) {
      x += Complex(normal(rng), normal(rng)) * svd.matrixV().col(c);
      ++nullity;
    }
  }
  if (nullity == 0) {
    return std::numeric_limits<double>::infinity();
  }
  const CMatrix xm = Eigen::Map<const CMatrix>(x.data(), n, n);
  Eigen::JacobiSVD<CMatrix> polar(xm, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const CMatrix u = polar.matrixU() * polar.matrixV().adjoint();
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double scale = std::max(1.0, hs_norm(b[k]));
    worst = std::max(worst, hs_norm(u * a[k] * u.adjoint() - b[k]) / scale);
  }
  return worst;
}

ContactVerdict compare_families(const std::vector<Generator>& gp,
                                const std::vector<Generator>& gq, Complex z,
                                int order, const std::string& method,
                                const CompareOptions& options) {
  ContactVerdict verdict;
  verdict.order = order;
  verdict.method = method;
  verdict.point = z;

  const double rank_p = gp.front().value.trace().real();
  const double rank_q = gq.front().value.trace().real();
  verdict.words_checked = 1;
  if (std::abs(rank_p - rank_q) > 0.5) {
    verdict.status = Verdict::kDistinct;
    verdict.witness = TraceWitness{"tr(P)", rank_p, rank_q, order_tolerance(0)};
    return verdict;
  }

  const std::vector<CMatrix> cp = compress(gp);
  const std::vector<CMatrix> cq = compress(gq);

  // P compresses to the identity; the remaining generators and their
  // adjoints are the letters.
  std::vector<Letter> letters;
  for (std::size_t g = 1; g < gp.size(); ++g) {
    letters.push_back({g, false});
    letters.push_back({g, true});
  }
  auto letter_value = [&](const std::vector<CMatrix>& c, const Letter& l) {
    return l.adjoint ? CMatrix(c[l.gen].adjoint()) : c[l.gen];
  };

  // Enumerates words by length, then lexicographically, so the witness is a
  // shortest failing word.
  const Eigen::Index n = cp.front().rows();
  std::vector<std::size_t> word;
  std::vector<CMatrix> prefix_p;
  std::vector<CMatrix> prefix_q;
  std::optional<TraceWitness> witness;
  auto visit = [&](auto&& self, int remaining, int max_order) -> bool {
    if (remaining == 0) {
      ++verdict.words_checked;
      const Complex tp = prefix_p.back().trace();
      const Complex tq = prefix_q.back().trace();
      const double tol = order_tolerance(max_order);
      const double scale = std::max({1.0, std::abs(tp), std::abs(tq)});
      if (std::abs(tp - tq) > tol * scale) {
        std::string name = "tr(";
        for (std::size_t k = 0; k < word.size(); ++k) {
          if (k) name += " · ";
          name += letter_name(gp, letters[word[k]]);
        }
        witness = TraceWitness{name + ")", tp, tq, tol * scale};
        return true;
      }
      return false;
    }
    for (std::size_t li = 0; li < letters.size(); ++li) {
      const Letter& l = letters[li];
      word.push_back(li);
      prefix_p.push_back(prefix_p.back() * letter_value(cp, l));
      prefix_q.push_back(prefix_q.back() * letter_value(cq, l));
      const bool hit = self(self, remaining - 1,
                            std::max(max_order, gp[l.gen].order));
      word.pop_back();
      prefix_p.pop_back();
      prefix_q.pop_back();
      if (hit) return true;
    }
    return false;
  };
  if (n > 0) {
    for (int len = 1; len <= options.word_len && !witness; ++len) {
      prefix_p.assign(1, CMatrix::Identity(n, n));
      prefix_q.assign(1, CMatrix::Identity(n, n));
      visit(visit, len, 0);
    }
  }
  if (witness) {
    verdict.status = Verdict::kDistinct;
    verdict.witness = witness;
    return verdict;
  }
  if (n <= 1) {
    verdict.status = Verdict::kMatched;
    return verdict;
  }
  if (!options.unitary_search) {
    verdict.status = Verdict::kInconclusive;
    return verdict;
  }
  const double residual = unitary_search(cp, cq, options.seed);
  verdict.unitary_residual = residual;
  verdict.status = residual <= 10.0 * order_tolerance(order)
                       ? Verdict::kMatched
                       : Verdict::kInconclusive;
  return verdict;
}

}  // namespace

ContactVerdict contact_compare(const HolomorphicFrame& p,
                               const HolomorphicFrame& q, Complex z,
                               int alpha_order, const CompareOptions& options) {
  if (alpha_order < 1) {
    throw ValidationError("contact_compare: contact order must be at least 1");
  }
  if (options.word_len < 1) {
    throw ValidationError("contact_compare: word length must be at least 1");
  }
  return compare_families(contact_family(p, z, alpha_order),
                          contact_family(q, z, alpha_order), z, alpha_order,
                          "contact", options);
}

ContactVerdict theorem29_compare(const HolomorphicFrame& p,
                                 const HolomorphicFrame& q, Complex z,
                                 int max_ij, const CompareOptions& options) {
  if (max_ij < 1) {
    throw ValidationError("theorem29_compare: max index must be at least 1");
  }
  if (options.word_len < 1) {
    throw ValidationError("theorem29_compare: word length must be at least 1");
  }
  return compare_families(f_family(p, z, max_ij), f_family(q, z, max_ij), z,
                          max_ij, "theorem29", options);
}

namespace {

using Vec = Eigen::VectorXcd;

// Orthonormal basis grown by Gram-Schmidt with one reorthogonalisation pass.
class SpanBasis {
 public:
  explicit SpanBasis(double tol) : tol_(tol) {}

  bool add(const CMatrix& m) {
    Vec v = Eigen::Map<const Vec>(m.data(), m.size());
    const double norm = v.norm();
    if (norm == 0.0) return false;
    v /= norm;
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vec& b : basis_) v -= b.dot(v) * b;
    }
    const double rest = v.norm();
    if (rest <= tol_) return false;
    basis_.push_back(v / rest);
    return true;
  }

  int size() const { return static_cast<int>(basis_.size()); }

  CMatrix matrix(int k, Eigen::Index rows, Eigen::Index cols) const {
    return Eigen::Map<const CMatrix>(basis_[k].data(), rows, cols);
  }

 private:
  double tol_;
  std::vector<Vec> basis_;
};

std::vector<CMatrix> probe_generators(const HolomorphicFrame& f, Complex z,
                                      int alpha, GeneratorMode mode) {
  const ProjectionJet p = projection_jet(f, z, alpha, alpha);
  std::vector<CMatrix> gens{p.value()};
  if (mode == GeneratorMode::kProducts) {
    for (int J = 1; J <= alpha; ++J) {
      for (int I = 1; I <= alpha; ++I) gens.push_back(p.dbar(J) * p.d(I));
    }
  } else {
    for (int k = 1; k <= alpha; ++k) {
      gens.push_back(p.dbar(k));
      gens.push_back(p.d(k));
    }
  }
  return gens;
}

}  // namespace

int span_dimension(const std::vector<CMatrix>& mats, double tol) {
  SpanBasis basis(tol);
  for (const CMatrix& m : mats) basis.add(m);
  return basis.size();
}

AlgebraProbe algebra_probe(const HolomorphicFrame& f, Complex z, int alpha,
                           int word_len, GeneratorMode mode,
                           std::uint64_t seed) {
  if (word_len < 1) {
    throw ValidationError("algebra_probe: word length must be at least 1");
  }
  if (alpha < 0) {
    throw ValidationError("algebra_probe: alpha must be nonnegative");
  }
  AlgebraProbe probe;
  probe.point = z;
  probe.alpha = alpha;
  probe.word_len = word_len;
  probe.mode = mode;

  const Eigen::Index N = f.dim();
  std::vector<CMatrix> letters;
  for (const CMatrix& g : probe_generators(f, z, alpha, mode)) {
    if (hs_norm(g) <= 1e-13) continue;
    letters.push_back(g);
    letters.push_back(g.adjoint());
  }

  SpanBasis basis(1e-9);
  int level_start = 0;
  for (const CMatrix& l : letters) basis.add(l);
  int dim_prev = basis.size();
  // Words of length <= L+1 span S_L + (new elements of S_L) * letters.
  for (int len = 2; len <= word_len + 1; ++len) {
    const int level_end = basis.size();
    for (int k = level_start; k < level_end; ++k) {
      const CMatrix b = basis.matrix(k, N, N);
      for (const CMatrix& l : letters) basis.add(b * l);
    }
    level_start = level_end;
    if (len == word_len) dim_prev = basis.size();
  }
  probe.dim = dim_prev;
  probe.stabilized = basis.size() == probe.dim;

  if (probe.dim > 0 && probe.dim <= 16) {
    // The first probe.dim basis elements span the words up to word_len.
    // A random self-adjoint element has one eigenvalue per minimal
    // projection in a maximal orthogonal family.
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    CMatrix x = CMatrix::Zero(N, N);
    const Complex i(0.0, 1.0);
    for (int k = 0; k < probe.dim; ++k) {
      const CMatrix b = basis.matrix(k, N, N);
      x += normal(rng) * (b + b.adjoint()) / 2.0;
      x += normal(rng) * (b - b.adjoint()) / (2.0 * i);
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(x, Eigen::EigenvaluesOnly);
    std::vector<double> ev(eig.eigenvalues().data(),
                           eig.eigenvalues().data() + N);
    double top = 0.0;
    for (double e : ev) top = std::max(top, std::abs(e));
    std::vector<double> nonzero;
    for (double e : ev) {
      if (std::abs(e) > 1e-8 * top) nonzero.push_back(e);
    }
    std::sort(nonzero.begin(), nonzero.end());
    int clusters = 0;
    for (std::size_t k = 0; k < nonzero.size(); ++k) {
      if (k == 0 || nonzero[k] - nonzero[k - 1] > 1e-6 * top) ++clusters;
    }
    probe.k_lambda = clusters;
  }
  return probe;
}

double trace_identity_residual(const HolomorphicFrame& f, Complex z, int s,
                               int t) {
  if (s < 1 || t < 1) {
    throw IndexError("trace_identity_residual: indices start at 1");
  }
  const ProjectionJet p = projection_jet(f, z, s, t);
  const Complex trace_f = nc::evaluate(nc::f_expr(s, t), p).trace();
  const int k = std::max(s, t) - 1;
  const CurvatureTable table = covariant_table(metric_jet(f, z, k + 1), k);
  return std::abs(trace_f + table.at(t - 1, s - 1).trace());
}

double mean_curvature_residual(const HolomorphicFrame& f, Complex z) {
  const CMatrix k = curvature(metric_jet(f, z, 1));
  const CMatrix dp = projection_jet(f, z, 0, 1).d(1);
  return std::abs(k.trace() + dp.squaredNorm());
}

std::vector<Complex> random_disk_points(std::uint64_t seed, int count,
                                        double radius) {
  std::mt19937_64 rng(seed);
  // 53-bit uniforms straight from the engine keep the stream portable.
  auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<Complex> pts;
  pts.reserve(count);
  for (int k = 0; k < count; ++k) {
    const double r = radius * std::sqrt(uniform());
    const double t = 2.0 * M_PI * uniform();
    pts.push_back(std::polar(r, t));
  }
  return pts;
}

std::vector<Complex> disk_grid(double radius, double step) {
  const int m = static_cast<int>(std::floor(radius / step + 1e-9));
  const double limit = radius * (1.0 + 1e-12);
  std::vector<Complex> pts;
  for (int iy = -m; iy <= m; ++iy) {
    for (int ix = -m; ix <= m; ++ix) {
      const Complex z(ix * step, iy * step);
      if (std::abs(z) <= limit) pts.push_back(z);
    }
  }
  return pts;
}

KTScan kwon_treil_scan(const HolomorphicFrame& f, double radius, double step,
                       double multiplier) {
  if (!(radius >= 0.0) || radius >= 1.0) {
    throw ValidationError("ktscan: grid radius must lie in [0, 1)");
  }
  if (!(step > 0.0)) {
    throw ValidationError("ktscan: step must be positive");
  }
  if (!(multiplier > 0.0)) {
    throw ValidationError("ktscan: multiplier must be positive");
  }
  KTScan scan;
  scan.label = f.label();
  scan.rank = f.rank();
  scan.dim = f.dim();
  scan.radius = radius;
  scan.step = step;
  scan.multiplier = multiplier;

  const std::vector<Complex> grid = disk_grid(radius, step);
  const double nm = f.rank() * multiplier;
  scan.points = parallel_map(grid.size(), [&](std::size_t k) {
    const Complex z = grid[k];
    KTPoint pt;
    pt.z = z;
    pt.hs2 = projection_jet(f, z, 0, 1).d(1).squaredNorm();
    const double w = 1.0 - std::norm(z);
    pt.g = pt.hs2 - nm / (w * w);
    return pt;
  });

  std::map<std::pair<int, int>, std::size_t> index;
  for (std::size_t k = 0; k < scan.points.size(); ++k) {
    const Complex z = scan.points[k].z;
    index[{static_cast<int>(std::lround(z.real() / step)),
           static_cast<int>(std::lround(z.imag() / step))}] = k;
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  scan.max_g = -std::numeric_limits<double>::infinity();
  scan.min_g = std::numeric_limits<double>::infinity();
  scan.max_abs_g = 0.0;
  scan.min_laplacian = nan;
  for (auto& [key, k] : index) {
    KTPoint& pt = scan.points[k];
    const auto [ix, iy] = key;
    auto g_at = [&](int x, int y) -> const double* {
      auto it = index.find({x, y});
      return it == index.end() ? nullptr : &scan.points[it->second].g;
    };
    const double* e = g_at(ix + 1, iy);
    const double* w = g_at(ix - 1, iy);
    const double* n = g_at(ix, iy + 1);
    const double* s = g_at(ix, iy - 1);
    if (e && w && n && s) {
      pt.laplacian = (*e + *w + *n + *s - 4.0 * pt.g) / (step * step);
      if (std::isnan(scan.min_laplacian) || pt.laplacian < scan.min_laplacian) {
        scan.min_laplacian = pt.laplacian;
      }
    } else {
      pt.laplacian = nan;
    }
  }
  for (const KTPoint& pt : scan.points) {
    scan.max_g = std::max(scan.max_g, pt.g);
    scan.min_g = std::min(scan.min_g, pt.g);
    scan.max_abs_g = std::max(scan.max_abs_g, std::abs(pt.g));
  }
  return scan;
}

}  // namespace curvlab
