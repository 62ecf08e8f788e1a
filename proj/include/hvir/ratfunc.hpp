#pragma once

#include "hvir/poly.hpp"

#include <string>

namespace hvir {

/// Univariate rational function num/den over Q, reduced by polynomial gcd
/// with a monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(int c) : RatFunc(Rational(c)) {}  // NOLINT
  RatFunc(const Poly& p) : num_(p), den_(1) {}  // NOLINT
  RatFunc(Poly num, Poly den);

  static RatFunc x() { return RatFunc(Poly::x()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc derivative() const;
  /// Exact value; throws std::domain_error at a pole.
  Rational eval(const Rational& at) const;
  /// this(inner(x)).
  RatFunc compose(const RatFunc& inner) const;

  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(const std::string& var = "z") const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

RatFunc pow(const RatFunc& base, int exponent);

}  // namespace hvir
