#pragma once

#include "hvir/rational.hpp"

#include <string>
#include <vector>

namespace hvir {

/// Dense univariate polynomial with exact rational coefficients.
///
/// Used as CPoly (a polynomial in the formal central charge c, the scalar
/// ring of the Virasoro engine) and as the numerator/denominator carrier of
/// univariate rational functions. coeffs()[d] is the coefficient of x^d;
/// there is never a trailing zero, so the zero polynomial has no
/// coefficients and degree() == kZeroDegree.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Poly(int constant) : Poly(Rational(constant)) {}  // NOLINT
  explicit Poly(std::vector<Rational> coeffs);

  /// The generator x (c for CPoly).
  static Poly x();
  static Poly monomial(const Rational& coeff, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Rational coeff(int d) const;
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational eval(const Rational& at) const;
  Poly derivative() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& s);
  Poly& operator/=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator/(Poly a, const Rational& s) { return a /= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; returns {quotient, remainder}.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;

  /// Human readable, e.g. "c/2", "5*c^2 + 22*c". var is the printed symbol.
  std::string to_string(const std::string& var = "c") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

using CPoly = Poly;

Poly pow(const Poly& base, int exponent);
/// Monic gcd over Q (zero if both are zero).
Poly gcd(Poly a, Poly b);

}  // namespace hvir
