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

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "curvlab/curvature.hpp"
#include "curvlab/frame.hpp"
#include "curvlab/matrix.hpp"
#include "curvlab/projection.hpp"

namespace curvlab::nc {

/// dbar^a d^b P. (0, 0) is P itself; the normal form only uses pure
/// symbols (a == 0 or b == 0).
struct Symbol {
  int dbar = 0;
  int d = 0;

  bool is_p() const { return dbar == 0 && d == 0; }
  bool is_pure() const { return dbar == 0 || d == 0; }
  bool operator==(const Symbol&) const = default;
};

using Word = std::vector<Symbol>;

/// Graded lexicographic order: total derivative order, then length, then
/// symbols left to right (higher order first).
struct WordLess {
  bool operator()(const Word& x, const Word& y) const;
};

using Coeff = std::int64_t;

/// Formal integer combination of words in the derivatives of P.
/// Zero coefficients are never stored.
class Expr {
 public:
  using TermMap = std::map<Word, Coeff, WordLess>;

  Expr() = default;

  /// Single word with coefficient 1. Not normalised.
  static Expr word(Word w);
  static Expr symbol(int dbar, int d) { return word({Symbol{dbar, d}}); }
  static Expr p() { return symbol(0, 0); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coefficient(const Word& w) const;

  /// Adds c * w, dropping the entry if it cancels.
  void add_term(const Word& w, Coeff c);

  bool operator==(const Expr&) const = default;

 private:
  TermMap terms_;
};

Expr operator+(const Expr& x, const Expr& y);
Expr operator-(const Expr& x, const Expr& y);
Expr operator*(Coeff c, const Expr& x);

/// Product followed by normalisation.
Expr operator*(const Expr& x, const Expr& y);

/// Rewrites every mixed symbol through the commutation identities for
/// dbar d^J P and dbar^I d P, absorbs P next to derivatives, and drops
/// words annihilated by dbar^a P P = P d^b P = 0, d^b P d^c P = 0 and
/// dbar^a P dbar^c P = 0. Idempotent.
Expr normalize(const Expr& e);

/// True when every word is [P] alone or an alternating product of pure
/// dbar- and d-symbols.
bool is_normal_form(const Expr& e);

/// Normal form of the mixed symbol dbar^a d^b P.
Expr rewrite_mixed(int dbar, int d);

enum class Direction { kZ, kZbar };

/// Leibniz derivative of a normal-form expression, renormalised.
Expr derive(const Expr& e, Direction dir);

/// Which index is raised first when building F_{i,j} from F_{1,1}.
/// kZbarFirst raises i (dbar) first and matches CovariantPath::kZbarFirst.
using Path = CovariantPath;

/// F_{i,j}: i counts dbar, j counts d. F_{1,1} = [dbar P][d P];
///   F_{i+1,j} = dbar F - dbar P F - F dbar P
///   F_{i,j+1} = d F - d P F - F d P
/// Memoised; throws IndexError when i or j < 1.
const Expr& f_expr(int i, int j, Path path = Path::kZbarFirst);

/// Same family through the absorbed recursion
///   F_{i+1,j} = (dbar F) P,  F_{i,j+1} = P (d F).
const Expr& f_expr_simplified(int i, int j, Path path = Path::kZbarFirst);

/// The word [dbar^i P][d^j P] has coefficient 1 in `e` and no other word
/// carries both a dbar^i-symbol and a d^j-symbol.
bool single_occurrence_holds(const Expr& e, int i, int j);

/// Substitutes jet entries for symbols and sums the words.
CMatrix evaluate(const Expr& e, const ProjectionJet& p);

/// Deterministic UTF-8 rendering, terms in WordLess order.
std::string to_string(const Expr& e);
std::string to_string(const Word& w);

/// Largest dbar and d orders appearing in `e`.
std::pair<int, int> max_orders(const Expr& e);

/// ||evaluate(F_{i,j}) - alpha (-K_{z^{j-1} zbar^{i-1}}) h^{-1} alpha^*||_HS.
double curvature_formula_residual(const HolomorphicFrame& f, Complex z, int i,
                                  int j, Path path = Path::kZbarFirst);

/// HS distance between F_{i,j} evaluated on two frames presenting the same
/// curve. Throws InputError when the projections differ by more than 1e-8.
double gauge_independence_check(int i, int j, const HolomorphicFrame& f,
                                const HolomorphicFrame& g, Complex z);

}  // namespace curvlab::nc
