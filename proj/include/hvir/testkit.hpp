#pragma once

#include "hvir/confderiv.hpp"
#include "hvir/geometry.hpp"
#include "hvir/mapexpr.hpp"

#include <map>
#include <string>
#include <vector>

namespace hvir {

enum class FunctionalKind { kEvaluation, kLogDerivative, kSchwarzian };

std::string to_string(FunctionalKind kind);
/// "evaluation", "log_derivative" or "schwarzian"; throws std::invalid_argument.
FunctionalKind parse_functional_kind(const std::string& name);

/// f(g) = g(z0), log g'(z0) or {g, z0}.
struct AnalyticFunctional {
  FunctionalKind kind = FunctionalKind::kEvaluation;
  Complex z0{2.0, 0.0};
};

/// Throws SingularityError where g'(z0) = 0 (log derivative, Schwarzian).
Complex functional_eval(const AnalyticFunctional& f, const MapExpr& g);

/// nabla_{h_1} ... nabla_{h_j} f at g = id (h_j acts first). The first
/// variation of f is phi(g(z0)) g'(z0)^n with phi = h, h' or h''' and n = 0, 0
/// or 2; further derivatives act by phi -> h phi' + n h' phi.
Complex functional_nabla(const AnalyticFunctional& f, const std::vector<MapExpr>& directions);

/// Laurent polynomial in t = z0 - w with exact coefficients (exponent -> coefficient).
using Laurent = std::map<int, Rational>;

Laurent laurent_derivative(const Laurent& p);
std::string to_string(const Laurent& p, const std::string& var = "t");

/// An operator evaluated on f with every direction at hhat_{k,w} = (z-w)^{1-k};
/// exact, as a Laurent polynomial in z0 - w.
Laurent functional_nabla_hypotrochoid(FunctionalKind kind, const OperatorSum& op, int k);

/// Btilde^(m)[hhat_{k,w}] f for m >= 1, from the operator recursion.
Laurent tbox_prediction(FunctionalKind kind, int m, int k);

/// Order-q^m/m! coefficient of g^{-1}(z0) - z0 for g(z) = z + q (z-w)^{1-k},
/// by Lagrange inversion: (-1)^m d_t^{m-1} t^{m(1-k)} (m >= 1).
Laurent lagrange_inversion_coefficient(int m, int k);

/// Newton solve of g(z) = zeta for g = g_{k,w,eps,theta}, seeded at zeta,
/// with step halving when the residual grows. Carried out in 50-digit
/// arithmetic. Throws std::runtime_error after 64 iterations.
Complex invert_map(const HypotrochoidSpec& spec, Complex zeta);

/// f(g^{-1}) for g = g_{k,w,eps,theta}, evaluated in 50-digit arithmetic.
Complex functional_of_inverse(const AnalyticFunctional& f, const HypotrochoidSpec& spec);

struct ExpansionReport {
  FunctionalKind kind = FunctionalKind::kEvaluation;
  Complex z0;
  int k = 2;
  Complex w;
  double theta = 0.0;
  int max_order = 0;
  /// c_m in f(g^{-1}) ~ sum_m (q^m / m!) c_m, q = eps^k e^{k i theta}.
  std::vector<Complex> coefficients;
  std::vector<double> eps;
  std::vector<double> residuals;
  double fitted_exponent = 0.0;
  double expected_exponent = 0.0;
};

/// Default eps grid 2^-3, ..., 2^-10.
std::vector<double> default_eps_grid();

/// Compares f(g^{-1}) with the truncated expansion through order M <= 4 on
/// a strictly decreasing eps grid; the fitted exponent is the least-squares
/// slope of log residual against log eps.
ExpansionReport expansion_residual(const AnalyticFunctional& f, int k, Complex w, double theta,
                                   int max_order, const std::vector<double>& eps_grid);

/// (1/n) sum_j e^{-i mode theta_j} f(g^{-1}_{theta_j}), trapezoid rule on the
/// uniform theta grid (spec.theta is ignored).
Complex fourier_mode(const AnalyticFunctional& f, const HypotrochoidSpec& spec, int mode, int n_theta = 256,
                     Execution ex = Execution::kParallel);

/// (m! / eps^{km}) times the mode-km Fourier coefficient; tends to c_m as eps -> 0.
/// Throws std::invalid_argument for n_theta < 64.
Complex fourier_extract(const AnalyticFunctional& f, int k, Complex w, int m, double eps, int n_theta = 256,
                        Execution ex = Execution::kParallel);

/// Exact c_m (m = 0 included) evaluated at z0.
Complex expansion_coefficient(const AnalyticFunctional& f, int k, Complex w, int m);

}  // namespace hvir
