#pragma once

#include "hvir/poly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hvir {

/// Word L_{n1} L_{n2} ... L_{nj} acting on the vacuum; the rightmost mode
/// acts first. The empty word is the vacuum 1.
using ModeWord = std::vector<int>;

/// Canonical word: every mode <= -2, nondecreasing from left to right
/// (e.g. L_{-4} L_{-2} 1).
bool is_canonical(const ModeWord& word);

/// L0-weight of a word on the vacuum: minus the sum of its modes.
int word_weight(const ModeWord& word);

/// Vector of the identity Virasoro module in the PBW basis.
///
/// Maps canonical words to CPoly coefficients; zero coefficients are never
/// stored.
class PBWVector {
 public:
  PBWVector() = default;

  static PBWVector vacuum();
  /// Single canonical word with the given coefficient. Throws
  /// std::invalid_argument if the word is not canonical.
  static PBWVector word(ModeWord w, const CPoly& coeff = CPoly(1));

  const std::map<ModeWord, CPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  CPoly coeff(const ModeWord& w) const;
  CPoly vacuum_coeff() const { return coeff({}); }

  /// Adds coeff * w; w must be canonical.
  void add(const ModeWord& w, const CPoly& coeff);

  /// Common L0-weight of all terms, or -1 if inhomogeneous or zero.
  int homogeneous_weight() const;

  PBWVector& operator+=(const PBWVector& o);
  PBWVector& operator-=(const PBWVector& o);
  PBWVector& operator*=(const CPoly& s);
  friend PBWVector operator+(PBWVector a, const PBWVector& b) { return a += b; }
  friend PBWVector operator-(PBWVector a, const PBWVector& b) { return a -= b; }
  friend PBWVector operator*(PBWVector a, const CPoly& s) { return a *= s; }
  friend PBWVector operator*(const CPoly& s, PBWVector a) { return a *= s; }
  friend bool operator==(const PBWVector& a, const PBWVector& b) { return a.terms_ == b.terms_; }

  /// e.g. "L_{-2}^3 1 + 3 L_{-4}L_{-2} 1 + 6 L_{-6} 1".
  std::string to_string() const;

 private:
  std::map<ModeWord, CPoly> terms_;
};

/// [L_m, L_n] = (m - n) L_{m+n} + (c/12) m (m^2 - 1) delta_{m+n,0}.
struct Bracket {
  int mode;            // m + n
  Rational coefficient;  // m - n
  CPoly central;       // coefficient of the central element
};
Bracket vir_bracket(int m, int n);

/// L_n v, normal ordered.
PBWVector apply_mode(int n, const PBWVector& v);

/// Unordered linear combination of arbitrary words (any modes).
using WordSum = std::vector<std::pair<ModeWord, CPoly>>;

/// Brings every word to the PBW basis using the Virasoro relations and
/// L_n 1 = 0 for n >= -1.
PBWVector normal_order(const WordSum& input);

/// L_{-1} v; the module counterpart of d/dw on fields.
PBWVector l_minus_one_derivative(const PBWVector& v);

/// Bilinear form with L_n adjoint to L_{-n} and <1,1> = 1.
CPoly shapovalov(const PBWVector& u, const PBWVector& v);

/// Terms of T_{k,m} before normal ordering:
///   sum over compositions lambda of m of C_lambda (k-1)^(m-|lambda|)
///   L_{-k lambda_j} ... L_{-k lambda_1} 1.
/// Throws std::domain_error unless k >= 2 and m >= 1.
std::map<ModeWord, Rational> descendant_terms(int k, int m);

/// T_{k,m} in the PBW basis.
PBWVector descendant(int k, int m);

}  // namespace hvir
