#pragma once

#include "hvir/rational.hpp"

#include <optional>

namespace hvir {

/// Consistent (kappa, n, y, c) for the dilute regime kappa in [8/3, 4]:
///   c = (2 - 3y)(4y - 1)/(1 - y),  cos(2 pi y) = -n/2,  kappa = 2/(1 - y),
/// hence c = (6 - kappa)(3 kappa - 8)/(2 kappa).
struct ModelParameters {
  double kappa = 0;
  double n = 0;
  double y = 0;
  double c = 0;
  // Exact values when the input was an exact kappa or y.
  std::optional<Rational> kappa_exact;
  std::optional<Rational> y_exact;
  std::optional<Rational> c_exact;
};

/// All three throw std::domain_error outside kappa in [8/3, 4]
/// (equivalently y in [1/4, 1/2], n in [0, 2]); from_n accepts n up to 1e-12
/// outside [0, 2] and clamps it.
ModelParameters from_kappa(const Rational& kappa);
ModelParameters from_y(const Rational& y);
ModelParameters from_n(double n);

Rational central_charge_from_kappa(const Rational& kappa);
Rational central_charge_from_y(const Rational& y);

}  // namespace hvir
