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

#include "curvlab/nc.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <tuple>

#include "curvlab/errors.hpp"

namespace curvlab::nc {

namespace {

enum class Kind { kP, kDbar, kD, kMixed };

Kind kind(const Symbol& s) {
  if (s.is_p()) return Kind::kP;
  if (s.d == 0) return Kind::kDbar;
  if (s.dbar == 0) return Kind::kD;
  return Kind::kMixed;
}

int total_order(const Word& w) {
  int t = 0;
  for (const Symbol& s : w) {
    t += s.dbar + s.d;
  }
  return t;
}

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error("nc: coefficient overflow");
  }
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error("nc: coefficient overflow");
  }
  return r;
}

// Reduces a word of pure symbols. Returns false when the word vanishes.
bool reduce_pure(const Word& in, Word& out) {
  out.clear();
  for (const Symbol& s : in) {
    const Kind ks = kind(s);
    if (out.empty()) {
      out.push_back(s);
      continue;
    }
    const Kind kt = kind(out.back());
    switch (kt) {
      case Kind::kP:
        if (ks == Kind::kP) {
          // P P = P
        } else if (ks == Kind::kDbar) {
          out.back() = s;  // P dbar^a P = dbar^a P
        } else {
          return false;  // P d^b P = 0
        }
        break;
      case Kind::kDbar:
        if (ks == Kind::kD) {
          out.push_back(s);
        } else {
          return false;  // dbar^a P P = 0, dbar^a P dbar^c P = 0
        }
        break;
      case Kind::kD:
        if (ks == Kind::kP) {
          // d^b P P = d^b P
        } else if (ks == Kind::kDbar) {
          out.push_back(s);
        } else {
          return false;  // d^b P d^c P = 0
        }
        break;
      case Kind::kMixed:
        throw Error("nc: mixed symbol reached the word reducer");
    }
  }
  return true;
}

// Product of two expressions whose words are already reduced.
Expr mul_reduced(const Expr& x, const Expr& y) {
  Expr out;
  Word joined;
  Word reduced;
  for (const auto& [wx, cx] : x.terms()) {
    for (const auto& [wy, cy] : y.terms()) {
      joined = wx;
      joined.insert(joined.end(), wy.begin(), wy.end());
      if (reduce_pure(joined, reduced)) {
        out.add_term(reduced, checked_mul(cx, cy));
      }
    }
  }
  return out;
}

Expr expand_word(const Word& w) {
  if (w.empty()) {
    throw Error("nc: empty word");
  }
  Expr acc;
  bool first = true;
  for (const Symbol& s : w) {
    Expr piece = s.is_pure() ? Expr::word({s}) : rewrite_mixed(s.dbar, s.d);
    if (first) {
      acc = std::move(piece);
      first = false;
    } else {
      acc = mul_reduced(acc, piece);
    }
    if (acc.is_zero()) {
      break;
    }
  }
  return acc;
}

Expr word_expr(std::initializer_list<Symbol> symbols) {
  return Expr::word(Word(symbols));
}

Symbol derived(const Symbol& s, Direction dir) {
  return dir == Direction::kZbar ? Symbol{s.dbar + 1, s.d}
                                 : Symbol{s.dbar, s.d + 1};
}

}  // namespace

bool WordLess::operator()(const Word& x, const Word& y) const {
  const int tx = total_order(x);
  const int ty = total_order(y);
  if (tx != ty) return tx > ty;
  if (x.size() != y.size()) return x.size() < y.size();
  for (std::size_t k = 0; k < x.size(); ++k) {
    const Symbol& a = x[k];
    const Symbol& b = y[k];
    if (a == b) continue;
    const int oa = a.dbar + a.d;
    const int ob = b.dbar + b.d;
    if (oa != ob) return oa > ob;
    return a.dbar > b.dbar;
  }
  return false;
}

Expr Expr::word(Word w) {
  Expr e;
  e.terms_.emplace(std::move(w), 1);
  return e;
}

Coeff Expr::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void Expr::add_term(const Word& w, Coeff c) {
  if (c == 0) {
    return;
  }
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

Expr operator+(const Expr& x, const Expr& y) {
  Expr out = x;
  for (const auto& [w, c] : y.terms()) {
    out.add_term(w, c);
  }
  return out;
}

Expr operator*(Coeff c, const Expr& x) {
  Expr out;
  for (const auto& [w, cw] : x.terms()) {
    out.add_term(w, checked_mul(c, cw));
  }
  return out;
}

Expr operator-(const Expr& x, const Expr& y) { return x + Coeff{-1} * y; }

Expr operator*(const Expr& x, const Expr& y) {
  return mul_reduced(normalize(x), normalize(y));
}

Expr normalize(const Expr& e) {
  Expr out;
  for (const auto& [w, c] : e.terms()) {
    const Expr part = expand_word(w);
    for (const auto& [wp, cp] : part.terms()) {
      out.add_term(wp, checked_mul(c, cp));
    }
  }
  return out;
}

bool is_normal_form(const Expr& e) {
  Word reduced;
  for (const auto& [w, c] : e.terms()) {
    if (c == 0 || w.empty()) {
      return false;
    }
    for (const Symbol& s : w) {
      if (!s.is_pure()) {
        return false;
      }
    }
    if (!reduce_pure(w, reduced) || reduced != w) {
      return false;
    }
  }
  return true;
}

namespace {

struct MixedMemo {
  std::shared_mutex map_mutex;
  std::recursive_mutex compute_mutex;
  std::map<std::pair<int, int>, Expr> table;
};

MixedMemo& mixed_memo() {
  static MixedMemo memo;
  return memo;
}

Expr compute_mixed(int a, int b) {
  if (a == 1) {
    // dbar d^b P = d^b P dbar P - dbar P d^b P
    //              - sum_{k=1}^{b-1} C(b,k) d^{b-k}P dbar P d^k P
    Expr e = word_expr({{0, b}, {1, 0}}) - word_expr({{1, 0}, {0, b}});
    for (int k = 1; k <= b - 1; ++k) {
      const auto c = static_cast<Coeff>(binomial(b, k));
      e = e - c * word_expr({{0, b - k}, {1, 0}, {0, k}});
    }
    return normalize(e);
  }
  if (b == 1) {
    // dbar^a d P = d P dbar^a P - dbar^a P d P
    //              - sum_{k=1}^{a-1} C(a,k) dbar^{a-k}P d P dbar^k P
    Expr e = word_expr({{0, 1}, {a, 0}}) - word_expr({{a, 0}, {0, 1}});
    for (int k = 1; k <= a - 1; ++k) {
      const auto c = static_cast<Coeff>(binomial(a, k));
      e = e - c * word_expr({{a - k, 0}, {0, 1}, {k, 0}});
    }
    return normalize(e);
  }
  return derive(rewrite_mixed(a - 1, b), Direction::kZbar);
}

}  // namespace

Expr rewrite_mixed(int dbar, int d) {
  if (dbar < 1 || d < 1) {
    throw Error("rewrite_mixed: symbol is not mixed");
  }
  MixedMemo& memo = mixed_memo();
  const auto key = std::make_pair(dbar, d);
  {
    std::shared_lock lock(memo.map_mutex);
    auto it = memo.table.find(key);
    if (it != memo.table.end()) {
      return it->second;
    }
  }
  std::lock_guard compute(memo.compute_mutex);
  {
    std::shared_lock lock(memo.map_mutex);
    auto it = memo.table.find(key);
    if (it != memo.table.end()) {
      return it->second;
    }
  }
  Expr value = compute_mixed(dbar, d);
  std::unique_lock lock(memo.map_mutex);
  return memo.table.emplace(key, std::move(value)).first->second;
}

Expr derive(const Expr& e, Direction dir) {
  Expr out;
  for (const auto& [w, c] : e.terms()) {
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      Word dw = w;
      dw[pos] = derived(w[pos], dir);
      const Expr part = expand_word(dw);
      for (const auto& [wp, cp] : part.terms()) {
        out.add_term(wp, checked_mul(c, cp));
      }
    }
  }
  return out;
}

namespace {

enum class Recursion { kFull, kAbsorbed };

struct FMemo {
  std::shared_mutex map_mutex;
  std::recursive_mutex compute_mutex;
  std::map<std::tuple<int, int, int, int>, Expr> table;
};

FMemo& f_memo() {
  static FMemo memo;
  return memo;
}

const Expr& f_lookup(int i, int j, Path path, Recursion rec);

Expr f_step(const Expr& f, Direction dir, Recursion rec) {
  const Expr dp = dir == Direction::kZbar ? Expr::symbol(1, 0)
                                          : Expr::symbol(0, 1);
  const Expr df = derive(f, dir);
  if (rec == Recursion::kFull) {
    return df - dp * f - f * dp;
  }
  return dir == Direction::kZbar ? df * Expr::p() : Expr::p() * df;
}

Expr f_compute(int i, int j, Path path, Recursion rec) {
  if (i == 1 && j == 1) {
    return Expr::word({Symbol{1, 0}, Symbol{0, 1}});
  }
  // Last step taken along the path decides the predecessor.
  bool raise_dbar;
  if (path == Path::kZbarFirst) {
    raise_dbar = (j == 1);
  } else {
    raise_dbar = (i > 1);
  }
  if (raise_dbar) {
    return f_step(f_lookup(i - 1, j, path, rec), Direction::kZbar, rec);
  }
  return f_step(f_lookup(i, j - 1, path, rec), Direction::kZ, rec);
}

const Expr& f_lookup(int i, int j, Path path, Recursion rec) {
  if (i < 1 || j < 1) {
    std::ostringstream os;
    os << "F_{" << i << "," << j << "}: indices start at 1";
    throw IndexError(os.str());
  }
  FMemo& memo = f_memo();
  const auto key = std::make_tuple(i, j, static_cast<int>(path),
                                   static_cast<int>(rec));
  {
    std::shared_lock lock(memo.map_mutex);
    auto it = memo.table.find(key);
    if (it != memo.table.end()) {
      return it->second;
    }
  }
  std::lock_guard compute(memo.compute_mutex);
  {
    std::shared_lock lock(memo.map_mutex);
    auto it = memo.table.find(key);
    if (it != memo.table.end()) {
      return it->second;
    }
  }
  Expr value = f_compute(i, j, path, rec);
  std::unique_lock lock(memo.map_mutex);
  return memo.table.emplace(key, std::move(value)).first->second;
}

}  // namespace

const Expr& f_expr(int i, int j, Path path) {
  return f_lookup(i, j, path, Recursion::kFull);
}

const Expr& f_expr_simplified(int i, int j, Path path) {
  return f_lookup(i, j, path, Recursion::kAbsorbed);
}

bool single_occurrence_holds(const Expr& e, int i, int j) {
  const Word lead{Symbol{i, 0}, Symbol{0, j}};
  if (e.coefficient(lead) != 1) {
    return false;
  }
  for (const auto& [w, c] : e.terms()) {
    if (w == lead) {
      continue;
    }
    bool has_dbar = false;
    bool has_d = false;
    for (const Symbol& s : w) {
      has_dbar = has_dbar || (s.dbar == i && s.d == 0);
      has_d = has_d || (s.d == j && s.dbar == 0);
    }
    if (has_dbar && has_d) {
      return false;
    }
  }
  return true;
}

std::pair<int, int> max_orders(const Expr& e) {
  int a = 0;
  int b = 0;
  for (const auto& [w, c] : e.terms()) {
    for (const Symbol& s : w) {
      a = std::max(a, s.dbar);
      b = std::max(b, s.d);
    }
  }
  return {a, b};
}

CMatrix evaluate(const Expr& e, const ProjectionJet& p) {
  const auto [a, b] = max_orders(e);
  if (!p.jet.has(a, 0) || !p.jet.has(0, b)) {
    std::ostringstream os;
    os << "nc::evaluate: expression needs jet order (" << a << "," << b
       << "), got (" << p.jet.dbar_order() << "," << p.jet.d_order() << ")";
    throw OrderError(os.str());
  }
  CMatrix sum = CMatrix::Zero(p.jet.rows(), p.jet.cols());
  for (const auto& [w, c] : e.terms()) {
    CMatrix prod = p.jet.at(w.front().dbar, w.front().d);
    for (std::size_t k = 1; k < w.size(); ++k) {
      prod = prod * p.jet.at(w[k].dbar, w[k].d);
    }
    sum += static_cast<double>(c) * prod;
  }
  return sum;
}

namespace {

std::string power(const char* base, int k) {
  if (k == 1) {
    return base;
  }
  return std::string(base) + "^" + std::to_string(k);
}

std::string symbol_string(const Symbol& s) {
  std::string out;
  if (s.dbar > 0) out += power("∂̄", s.dbar);
  if (s.d > 0) out += power("∂", s.d);
  return out + "P";
}

}  // namespace

std::string to_string(const Word& w) {
  std::string out;
  for (const Symbol& s : w) {
    out += "[" + symbol_string(s) + "]";
  }
  return out;
}

std::string to_string(const Expr& e) {
  if (e.is_zero()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    const Coeff mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) {
      os << mag << " ";
    }
    os << to_string(w);
    first = false;
  }
  return os.str();
}

double curvature_formula_residual(const HolomorphicFrame& f, Complex z, int i,
                                  int j, Path path) {
  const Expr& expr = f_expr(i, j, path);
  const ProjectionJet p = projection_jet(f, z, i, j);
  const CMatrix lhs = evaluate(expr, p);

  const int k = std::max(i, j) - 1;
  const MetricJet h = metric_jet(f, z, k + 1);
  const CurvatureTable table = covariant_table(h, k, path);
  const CMatrix alpha = f.value(z);
  const CMatrix hinv = checked_inverse(h.jet.at(0, 0), "curvature_formula");
  const CMatrix rhs = alpha * (-table.at(j - 1, i - 1)) * hinv * alpha.adjoint();
  return hs_norm(lhs - rhs);
}

double gauge_independence_check(int i, int j, const HolomorphicFrame& f,
                                const HolomorphicFrame& g, Complex z) {
  const Expr& expr = f_expr(i, j);
  const ProjectionJet pf = projection_jet(f, z, i, j);
  const ProjectionJet pg = projection_jet(g, z, i, j);
  if (!same_shape(pf.value(), pg.value())) {
    throw InputError("gauge_independence_check: frames live in different "
                     "dimensions");
  }
  const double distance = hs_norm(pf.value() - pg.value());
  if (distance > 1e-8) {
    std::ostringstream os;
    os << "gauge_independence_check: frames span different subspaces "
          "(projection distance "
       << distance << ")";
    throw InputError(os.str());
  }
  return hs_norm(evaluate(expr, pf) - evaluate(expr, pg));
}

}  // namespace curvlab::nc
