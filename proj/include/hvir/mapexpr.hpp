#pragma once

#include "hvir/ratfunc.hpp"

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hvir {

using Complex = std::complex<double>;

/// Thrown where a map has vanishing derivative (or a pole) at the point
/// where a Schwarzian is requested.
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// R(z) exp(P(z)) with R, P rational functions over Q.
struct ExpForm {
  RatFunc r;
  RatFunc p;
};

/// Expression tree in one complex variable z.
///
/// Constants are exact complex rationals. log is the principal branch.
/// The domain tag is free text naming where the map is declared conformal.
class MapExpr {
 public:
  enum class Kind { kConst, kVar, kAdd, kSub, kMul, kDiv, kPow, kExp, kLog };

  static MapExpr constant(const Rational& re, const Rational& im = Rational(0));
  static MapExpr variable();
  /// Parses e.g. "exp(z)", "z^2", "(2*z + 1)/(z - 3)", "exp(log(z)/2)", "i*z".
  /// Throws std::invalid_argument on malformed input.
  static MapExpr parse(std::string_view text);

  Kind kind() const;
  const std::string& domain() const { return domain_; }
  MapExpr with_domain(std::string domain) const;

  friend MapExpr operator+(const MapExpr& a, const MapExpr& b);
  friend MapExpr operator-(const MapExpr& a, const MapExpr& b);
  friend MapExpr operator*(const MapExpr& a, const MapExpr& b);
  friend MapExpr operator/(const MapExpr& a, const MapExpr& b);
  friend MapExpr pow(const MapExpr& base, int exponent);
  friend MapExpr exp(const MapExpr& a);
  friend MapExpr log(const MapExpr& a);

  /// this(inner(z)).
  MapExpr compose(const MapExpr& inner) const;
  /// Symbolic d/dz with constant folding.
  MapExpr derivative() const;

  Complex eval(Complex z) const;
  /// Taylor coefficients a_0..a_order of the expression about z0. Throws
  /// std::domain_error at a pole or at a zero of a log argument.
  std::vector<Complex> taylor(Complex z0, int order) const;

  /// Exact R(z) exp(P(z)) form when the expression lies in that class.
  std::optional<ExpForm> exp_form() const;

  bool is_constant() const;
  std::string to_string() const;

  struct Node;

 private:
  explicit MapExpr(std::shared_ptr<const Node> node, std::string domain = "")
      : node_(std::move(node)), domain_(std::move(domain)) {}
  std::shared_ptr<const Node> node_;
  std::string domain_;
};

/// Schwarzian s'''/s' - (3/2)(s''/s')^2 as an expression.
MapExpr schwarzian(const MapExpr& s);

/// Exact Schwarzian when s has the form R exp(P).
std::optional<RatFunc> schwarzian_exact(const MapExpr& s);

/// Taylor coefficients of {s, z} about w up to the given order (coefficient
/// j is the j-th derivative over j!). Throws SingularityError if s'(w) = 0.
std::vector<Complex> schwarzian_series(const MapExpr& s, Complex w, int order);

Complex schwarzian_at(const MapExpr& s, Complex w);

/// <T_{k,1}(w)>_A / c = (1/12) (1/(k-2)!) d_w^{k-2} {s, w}.
Complex one_point_Tk1_per_c(const MapExpr& s, int k, Complex w);

/// Exact <T_{k,1}(w)>_A as a polynomial in c, when s = R exp(P) and w is
/// rational; nullopt otherwise.
std::optional<CPoly> one_point_Tk1_exact(const MapExpr& s, int k, const Rational& w);

struct TransformationReport {
  bool holds = false;
  bool exact = false;
  /// |lhs - rhs| (zero on the exact route).
  double residual = 0.0;
  std::string lhs;
  std::string rhs;
};

/// Schwarzian cocycle check at w:
///   (g'(w))^2 {s o g^{-1}, g(w)} + {g, w} = {s, w},
/// the c/12-stripped form of the transformation law of <T(w)>_A. g_inv must
/// invert g near g(w); throws std::domain_error if g_inv(g(w)) != w or
/// g'(w) = 0. Exact when every map is R exp(P) and w is rational, numeric
/// with relative tolerance 1e-12 otherwise.
TransformationReport transformation_check(const MapExpr& s, const MapExpr& g, const MapExpr& g_inv,
                                          Complex w);

/// Max over the grid of |f_x + i f_y| / max(1, |f_x|) for f(w) = one-point
/// function per unit c, with fourth-order central differences of step h.
double cauchy_riemann_residual(const MapExpr& s, int k, const std::vector<Complex>& grid,
                               double h = 1e-3);

}  // namespace hvir
