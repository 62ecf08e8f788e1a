#include "hvir/params.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hvir {

Rational central_charge_from_kappa(const Rational& kappa) {
  return (Rational(6) - kappa) * (Rational(3) * kappa - Rational(8)) / (Rational(2) * kappa);
}

Rational central_charge_from_y(const Rational& y) {
  return (Rational(2) - Rational(3) * y) * (Rational(4) * y - Rational(1)) / (Rational(1) - y);
}

ModelParameters from_y(const Rational& y) {
  if (y < Rational(1, 4) || y > Rational(1, 2))
    throw std::domain_error("y must lie in [1/4, 1/2]");
  ModelParameters p;
  p.y_exact = y;
  p.kappa_exact = Rational(2) / (Rational(1) - y);
  p.c_exact = central_charge_from_y(y);
  p.y = y.to_double();
  p.kappa = p.kappa_exact->to_double();
  p.c = p.c_exact->to_double();
  p.n = -2.0 * std::cos(2.0 * std::numbers::pi * p.y);
  return p;
}

ModelParameters from_kappa(const Rational& kappa) {
  if (kappa < Rational(8, 3) || kappa > Rational(4))
    throw std::domain_error("kappa must lie in [8/3, 4]");
  ModelParameters p = from_y(Rational(1) - Rational(2) / kappa);
  return p;
}

ModelParameters from_n(double n) {
  // Rounding from cos(2 pi y) can push the endpoints out by an ulp or two.
  constexpr double kSlack = 1e-12;
  if (!(n >= -kSlack && n <= 2.0 + kSlack)) throw std::domain_error("n must lie in [0, 2]");
  n = std::clamp(n, 0.0, 2.0);
  ModelParameters p;
  p.n = n;
  // acos lands in [pi/2, pi] for -n/2 in [-1, 0], i.e. y in [1/4, 1/2].
  p.y = std::acos(-n / 2.0) / (2.0 * std::numbers::pi);
  p.kappa = 2.0 / (1.0 - p.y);
  p.c = (2.0 - 3.0 * p.y) * (4.0 * p.y - 1.0) / (1.0 - p.y);
  return p;
}

}  // namespace hvir
