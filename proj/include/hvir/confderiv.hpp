#pragma once

#include "hvir/rational.hpp"
#include "hvir/virasoro.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace hvir {

/// Monomial prod_a (d^a h)^{e_a} in the derivatives of one direction h.
///
/// exps()[a] is the exponent of d^a h; no trailing zeros. Ordered by total
/// h-degree, then derivative weight sum a e_a, then lexicographically.
class DirectionMonomial {
 public:
  DirectionMonomial() = default;
  explicit DirectionMonomial(std::vector<int> exps);

  /// h (d h)^{n}: the direction carried by a merged cell of n + 1 arguments.
  static DirectionMonomial h_dh_power(int n);
  static DirectionMonomial h() { return h_dh_power(0); }

  const std::vector<int>& exps() const { return exps_; }
  int exponent(int a) const;
  int degree() const;
  int derivative_weight() const;
  bool is_one() const { return exps_.empty(); }

  friend DirectionMonomial operator*(const DirectionMonomial& a, const DirectionMonomial& b);
  friend bool operator==(const DirectionMonomial&, const DirectionMonomial&) = default;
  friend std::strong_ordering operator<=>(const DirectionMonomial& a, const DirectionMonomial& b);

  /// "h", "h dh", "h dh^2", "h^2 d2h".
  std::string to_string() const;

 private:
  std::vector<int> exps_;
};

/// Differential polynomial in h with rational coefficients.
class DirectionPoly {
 public:
  DirectionPoly() = default;
  DirectionPoly(const DirectionMonomial& m, const Rational& c = Rational(1));  // NOLINT

  const std::map<DirectionMonomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const DirectionMonomial& m, const Rational& c);

  /// Formal d/dz with d(d^a h) = d^{a+1} h.
  DirectionPoly derivative() const;

  DirectionPoly& operator+=(const DirectionPoly& o);
  DirectionPoly& operator-=(const DirectionPoly& o);
  friend DirectionPoly operator+(DirectionPoly a, const DirectionPoly& b) { return a += b; }
  friend DirectionPoly operator-(DirectionPoly a, const DirectionPoly& b) { return a -= b; }
  friend DirectionPoly operator*(const DirectionPoly& a, const DirectionPoly& b);
  friend bool operator==(const DirectionPoly&, const DirectionPoly&) = default;

  std::string to_string() const;

 private:
  std::map<DirectionMonomial, Rational> terms_;
};

/// Witt bracket of directions: [a, b] = a db - b da, so that
/// [nabla_a, nabla_b] = nabla_{[a,b]}.
DirectionPoly witt_bracket(const DirectionPoly& a, const DirectionPoly& b);

/// nabla_{d1} nabla_{d2} ... ; the rightmost derivative acts first.
using NablaWord = std::vector<DirectionMonomial>;

/// Rational linear combination of nabla words with monomial directions.
class OperatorSum {
 public:
  OperatorSum() = default;
  static OperatorSum identity();

  const std::map<NablaWord, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const NablaWord& w) const;

  void add(const NablaWord& w, const Rational& c);
  /// Adds c * nabla_{p1} nabla_{p2} ... expanded multilinearly.
  void add_expanded(const std::vector<DirectionPoly>& word, const Rational& c);

  OperatorSum& operator+=(const OperatorSum& o);
  OperatorSum& operator-=(const OperatorSum& o);
  OperatorSum& operator*=(const Rational& s);
  friend OperatorSum operator+(OperatorSum a, const OperatorSum& b) { return a += b; }
  friend OperatorSum operator-(OperatorSum a, const OperatorSum& b) { return a -= b; }
  friend OperatorSum operator*(OperatorSum a, const Rational& s) { return a *= s; }
  /// Operator composition (word concatenation).
  friend OperatorSum operator*(const OperatorSum& a, const OperatorSum& b);
  friend bool operator==(const OperatorSum&, const OperatorSum&) = default;

  std::string to_string() const;

 private:
  std::map<NablaWord, Rational> terms_;
};

/// Order-m coefficient of f(id + eps h): the multilinear recursion
///   B(h_m..h_1) = nabla_{h_m} B(h_{m-1}..h_1) - sum_j B(.., h_{j+1} dh_j, ..)
/// evaluated on the diagonal h_i = h. Throws std::domain_error for m < 0.
OperatorSum derive_box(int m);

/// Order-m coefficient of f((id + eps h)^{-1}) through the recursion with
/// the auxiliary y = dh/h. Arguments are tracked as cells of merged labels;
/// a cell with n labels becomes h (dh)^{n-1} on the diagonal.
OperatorSum derive_tbox(int m);

/// (-1)^m sum_lambda C_lambda nabla_{h dh^{l_j - 1}} ... nabla_{h dh^{l_1 - 1}}.
/// Throws std::domain_error for m <= 0.
OperatorSum tbox_closed(int m);

/// Rewrites with nabla_a nabla_b -> nabla_b nabla_a + nabla_{[a,b]} until
/// every word has nondecreasing directions.
OperatorSum witt_normal_form(const OperatorSum& s);

/// Coefficients on symmetrized words: a sorted word w with coefficient b
/// stands for b times the sum of all distinct orderings of w.
using SymmetrizedSum = std::map<NablaWord, Rational>;

SymmetrizedSum symmetrize(const OperatorSum& s);
/// Flips the sign of every single derivative: word of length j gets (-1)^j.
SymmetrizedSum flip_single_derivatives(const SymmetrizedSum& s);
std::string to_string(const SymmetrizedSum& s);

/// Witt normal form of sum_{m+m'=r} B^(m) Btilde^(m') / (m! m'!) for
/// r = 1..max_order (entry r-1). Every entry vanishes when the two
/// expansions are mutually inverse.
std::vector<OperatorSum> composition_check(int max_order);

/// Replaces every direction monomial of degree d by a^d times itself.
OperatorSum scale_directions(const OperatorSum& s, const Rational& a);

/// Word of holomorphic (or, after conjugation, antiholomorphic) conformal
/// derivatives Delta[h_{l1,w}] ... Delta[h_{lj,w}], h_{l,w}(z) = -(z-w)^{l+1}.
struct DeltaWord {
  std::vector<int> labels;
  bool antiholomorphic = false;
  friend auto operator<=>(const DeltaWord&, const DeltaWord&) = default;
};

using DeltaSum = std::map<DeltaWord, Rational>;

/// Evaluates an operator at h = hhat_{k,w} = (z - w)^{1-k} and expresses
/// each direction through h_{l,w}: a monomial evaluates to a (z-w)^p, i.e.
/// -a h_{p-1,w}.
DeltaSum specialize(const OperatorSum& s, int k);

/// Btilde^(m)[hhat_{k,w}] as a combination of Delta words (m >= 1, k >= 2).
DeltaSum specialize_hypotrochoid(int m, int k);

/// Formal conjugation Delta <-> Delta-bar.
DeltaSum conjugate(const DeltaSum& s);

/// Delta[h_l] -> L_l, keeping the word order.
std::map<ModeWord, Rational> to_mode_words(const DeltaSum& s);

std::string to_string(const DeltaSum& s);

}  // namespace hvir
