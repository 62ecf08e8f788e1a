#pragma once

#include "hvir/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace hvir {

/// Multivariate polynomial in a fixed number of variables x_0..x_{n-1}
/// with coefficients in Q[c].
class MPoly {
 public:
  using Exponents = std::vector<int>;

  explicit MPoly(int n_vars = 0) : n_vars_(n_vars) {}
  static MPoly constant(int n_vars, const CPoly& c);
  static MPoly variable(int n_vars, int index);

  int n_vars() const { return n_vars_; }
  const std::map<Exponents, CPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree_in(int var) const;
  void add(const Exponents& e, const CPoly& c);

  MPoly derivative(int var) const;
  /// Substitutes x_from := x_to.
  MPoly identify(int from, int to) const;
  /// Exact quotient by (x_a - x_b); throws std::domain_error if it is not exact.
  MPoly divide_difference(int a, int b) const;
  /// Value at rational points, as a polynomial in c.
  CPoly eval(const std::vector<Rational>& at) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const CPoly& s);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const CPoly& s) { return a *= s; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.n_vars_ == b.n_vars_ && a.terms_ == b.terms_;
  }

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  int n_vars_;
  std::map<Exponents, CPoly> terms_;
};

MPoly pow(const MPoly& base, int exponent);
/// (x_a - x_b)^e for e >= 0.
MPoly difference_power(int n_vars, int a, int b, int e);

}  // namespace hvir
