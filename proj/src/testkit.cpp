#include "hvir/testkit.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hvir {

namespace {

namespace mp = boost::multiprecision;
using MpReal = mp::cpp_bin_float_50;
using MpComplex = mp::cpp_complex_50;
using Series = std::vector<Complex>;

MpReal to_mp(const Rational& r) {
  return MpReal(r.numerator().get_str()) / MpReal(r.denominator().get_str());
}

MpComplex to_mp(Complex z) { return MpComplex(MpReal(z.real()), MpReal(z.imag())); }

Complex to_double(const MpComplex& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

MpComplex ipow(const MpComplex& base, int e) {
  MpComplex b = e >= 0 ? base : MpComplex(1) / base;
  MpComplex r(1);
  for (int i = 0; i < std::abs(e); ++i) r *= b;
  return r;
}

Series derivative(const Series& a) {
  Series d(a.size() > 1 ? a.size() - 1 : 1, Complex(0));
  for (std::size_t n = 1; n < a.size(); ++n) d[n - 1] = static_cast<double>(n) * a[n];
  return d;
}

Series product(const Series& a, const Series& b) {
  const std::size_t len = std::min(a.size(), b.size());
  Series r(len, Complex(0));
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = 0; i + j < len; ++j) r[i + j] += a[i] * b[j];
  return r;
}

int variation_weight(FunctionalKind kind) { return kind == FunctionalKind::kSchwarzian ? 2 : 0; }

int innermost_derivatives(FunctionalKind kind) {
  switch (kind) {
    case FunctionalKind::kEvaluation: return 0;
    case FunctionalKind::kLogDerivative: return 1;
    case FunctionalKind::kSchwarzian: return 3;
  }
  return 0;
}

Laurent laurent_monomial(const Rational& a, int p) {
  Laurent l;
  if (!a.is_zero()) l[p] = a;
  return l;
}

Laurent laurent_product(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) r[ea + eb] += ca * cb;
  for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

void laurent_add(Laurent& into, const Laurent& x, const Rational& scale) {
  for (const auto& [e, c] : x) {
    into[e] += c * scale;
    if (into[e].is_zero()) into.erase(e);
  }
}

MpComplex laurent_eval(const Laurent& p, const MpComplex& t) {
  MpComplex acc(0);
  for (const auto& [e, c] : p) acc += MpComplex(to_mp(c)) * ipow(t, e);
  return acc;
}

struct MpTarget {
  int k;
  MpComplex w;
  MpComplex q;
};

MpComplex g_value(const MpTarget& g, const MpComplex& z) { return z + g.q * ipow(z - g.w, 1 - g.k); }

MpComplex g_prime(const MpTarget& g, const MpComplex& z) {
  return MpComplex(1) + MpReal(1 - g.k) * g.q * ipow(z - g.w, -g.k);
}

MpComplex invert(const MpTarget& g, const MpComplex& zeta) {
  const MpReal tol = MpReal("1e-45") * std::max(MpReal(1), MpReal(abs(zeta)));
  MpComplex z = zeta;
  MpReal res = abs(g_value(g, z) - zeta);
  for (int it = 0; it < 64; ++it) {
    if (res <= tol) return z;
    MpComplex step = (g_value(g, z) - zeta) / g_prime(g, z);
    // Halve the step while it makes things worse.
    MpComplex next = z - step;
    MpReal next_res = abs(g_value(g, next) - zeta);
    for (int h = 0; h < 30 && next_res > res; ++h) {
      step /= 2;
      next = z - step;
      next_res = abs(g_value(g, next) - zeta);
    }
    z = next;
    res = next_res;
  }
  if (res <= tol) return z;
  std::ostringstream os;
  os << "invert_map: Newton did not converge in 64 iterations (residual "
     << static_cast<double>(res) << ", zeta = " << to_double(zeta) << ")";
  throw std::runtime_error(os.str());
}

MpComplex inverse_functional(FunctionalKind kind, const MpComplex& z0, const MpTarget& g) {
  const MpComplex z = invert(g, z0);
  const MpComplex s = z - g.w;
  const MpComplex d1 = g_prime(g, z);
  switch (kind) {
    case FunctionalKind::kEvaluation: return z;
    case FunctionalKind::kLogDerivative: return -log(d1);
    case FunctionalKind::kSchwarzian: {
      const MpReal k(g.k);
      const MpComplex d2 = (MpReal(1) - k) * (-k) * g.q * ipow(s, -g.k - 1);
      const MpComplex d3 = (MpReal(1) - k) * (-k) * (-k - MpReal(1)) * g.q * ipow(s, -g.k - 2);
      const MpComplex ratio = d2 / d1;
      const MpComplex sch = d3 / d1 - MpReal(3) / MpReal(2) * ratio * ratio;
      return -sch / (d1 * d1);
    }
  }
  throw std::logic_error("inverse_functional: unknown kind");
}

MpTarget target_for(int k, Complex w, const MpReal& eps, const MpReal& theta) {
  const MpReal kk(k);
  MpComplex phase = exp(MpComplex(MpReal(0), kk * theta));
  return {k, to_mp(w), pow(eps, k) * phase};
}

MpComplex coefficient_mp(const AnalyticFunctional& f, int k, Complex w, int m) {
  if (m == 0) return f.kind == FunctionalKind::kEvaluation ? to_mp(f.z0) : MpComplex(0);
  return laurent_eval(tbox_prediction(f.kind, m, k), to_mp(f.z0) - to_mp(w));
}

}  // namespace

std::string to_string(FunctionalKind kind) {
  switch (kind) {
    case FunctionalKind::kEvaluation: return "evaluation";
    case FunctionalKind::kLogDerivative: return "log_derivative";
    case FunctionalKind::kSchwarzian: return "schwarzian";
  }
  return "?";
}

FunctionalKind parse_functional_kind(const std::string& name) {
  if (name == "evaluation") return FunctionalKind::kEvaluation;
  if (name == "log_derivative") return FunctionalKind::kLogDerivative;
  if (name == "schwarzian") return FunctionalKind::kSchwarzian;
  throw std::invalid_argument("unknown functional '" + name + "'");
}

Complex functional_eval(const AnalyticFunctional& f, const MapExpr& g) {
  switch (f.kind) {
    case FunctionalKind::kEvaluation: return g.eval(f.z0);
    case FunctionalKind::kLogDerivative: {
      Complex d = g.taylor(f.z0, 1)[1];
      if (d == Complex(0)) throw SingularityError("functional_eval: g'(z0) = 0");
      return std::log(d);
    }
    case FunctionalKind::kSchwarzian: return schwarzian_at(g, f.z0);
  }
  throw std::logic_error("functional_eval: unknown kind");
}

Complex functional_nabla(const AnalyticFunctional& f, const std::vector<MapExpr>& directions) {
  if (directions.empty()) return functional_eval(f, MapExpr::variable());
  const int j = static_cast<int>(directions.size());
  const int len = j + innermost_derivatives(f.kind) + 1;
  std::vector<Series> jets;
  try {
    for (const auto& h : directions) jets.push_back(h.taylor(f.z0, len));
  } catch (const std::domain_error& e) {
    throw SingularityError(std::string("functional_nabla: direction singular at z0: ") + e.what());
  }
  Series phi = jets.back();
  for (int i = 0; i < innermost_derivatives(f.kind); ++i) phi = derivative(phi);
  const double n = variation_weight(f.kind);
  for (int i = j - 2; i >= 0; --i) {
    Series a = product(jets[i], derivative(phi));
    Series b = product(derivative(jets[i]), phi);
    Series next(std::min(a.size(), b.size()));
    for (std::size_t r = 0; r < next.size(); ++r) next[r] = a[r] + n * b[r];
    phi = std::move(next);
  }
  return phi[0];
}

Laurent laurent_derivative(const Laurent& p) {
  Laurent d;
  for (const auto& [e, c] : p)
    if (e != 0) d[e - 1] = c * Rational(e);
  return d;
}

std::string to_string(const Laurent& p, const std::string& var) {
  if (p.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c.sign() < 0 ? -c : c;
    s += first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      s += mag.to_string();
      continue;
    }
    if (!mag.is_one()) s += mag.to_string() + "*";
    s += var;
    if (e != 1) s += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
  }
  return s;
}

Laurent functional_nabla_hypotrochoid(FunctionalKind kind, const OperatorSum& op, int k) {
  if (k < 2) throw std::domain_error("functional_nabla_hypotrochoid: k must be >= 2");
  const Rational n(variation_weight(kind));
  Laurent total;
  for (const auto& [word, coeff] : op.terms()) {
    if (word.empty()) throw std::invalid_argument("functional_nabla_hypotrochoid: identity term");
    // Each direction monomial evaluates to a (z - w)^p at hhat.
    std::vector<Laurent> dirs;
    for (const auto& m : word) {
      Rational a(1);
      int p = 0;
      for (std::size_t i = 0; i < m.exps().size(); ++i) {
        const int e = m.exps()[i];
        if (e == 0) continue;
        a *= pow(falling_factorial(1 - k, static_cast<int>(i)), e);
        p += e * (1 - k - static_cast<int>(i));
      }
      dirs.push_back(laurent_monomial(a, p));
    }
    Laurent phi = dirs.back();
    for (int i = 0; i < innermost_derivatives(kind); ++i) phi = laurent_derivative(phi);
    for (int i = static_cast<int>(dirs.size()) - 2; i >= 0; --i) {
      Laurent next = laurent_product(dirs[i], laurent_derivative(phi));
      if (!n.is_zero()) laurent_add(next, laurent_product(laurent_derivative(dirs[i]), phi), n);
      phi = std::move(next);
    }
    laurent_add(total, phi, coeff);
  }
  return total;
}

Laurent tbox_prediction(FunctionalKind kind, int m, int k) {
  if (m < 1) throw std::domain_error("tbox_prediction: m must be >= 1");
  return functional_nabla_hypotrochoid(kind, derive_tbox(m), k);
}

Laurent lagrange_inversion_coefficient(int m, int k) {
  if (m < 1) throw std::domain_error("lagrange_inversion_coefficient: m must be >= 1");
  if (k < 2) throw std::domain_error("lagrange_inversion_coefficient: k must be >= 2");
  Laurent p = laurent_monomial(m % 2 == 0 ? Rational(1) : Rational(-1), m * (1 - k));
  for (int i = 0; i < m - 1; ++i) p = laurent_derivative(p);
  return p;
}

Complex invert_map(const HypotrochoidSpec& spec, Complex zeta) {
  spec.validate();
  return to_double(invert(target_for(spec.k, spec.w, MpReal(spec.eps), MpReal(spec.theta)), to_mp(zeta)));
}

Complex functional_of_inverse(const AnalyticFunctional& f, const HypotrochoidSpec& spec) {
  spec.validate();
  return to_double(
      inverse_functional(f.kind, to_mp(f.z0), target_for(spec.k, spec.w, MpReal(spec.eps), MpReal(spec.theta))));
}

std::vector<double> default_eps_grid() {
  std::vector<double> g;
  for (int e = 3; e <= 10; ++e) g.push_back(std::ldexp(1.0, -e));
  return g;
}

ExpansionReport expansion_residual(const AnalyticFunctional& f, int k, Complex w, double theta,
                                   int max_order, const std::vector<double>& eps_grid) {
  if (k < 2) throw std::domain_error("expansion_residual: k must be >= 2");
  if (max_order < 0 || max_order > 4) throw std::domain_error("expansion_residual: order must be in [0, 4]");
  if (eps_grid.size() < 2) throw std::invalid_argument("expansion_residual: need at least two eps values");
  for (std::size_t i = 0; i < eps_grid.size(); ++i)
    if (!(eps_grid[i] > 0.0) || (i > 0 && !(eps_grid[i] < eps_grid[i - 1])))
      throw std::invalid_argument("expansion_residual: eps grid must be positive and strictly decreasing");

  ExpansionReport report;
  report.kind = f.kind;
  report.z0 = f.z0;
  report.k = k;
  report.w = w;
  report.theta = theta;
  report.max_order = max_order;
  report.eps = eps_grid;
  report.expected_exponent = static_cast<double>(k * (max_order + 1));

  std::vector<MpComplex> coeffs;
  for (int m = 0; m <= max_order; ++m) {
    coeffs.push_back(coefficient_mp(f, k, w, m));
    report.coefficients.push_back(to_double(coeffs.back()));
  }
  report.residuals.resize(eps_grid.size());
  const MpComplex z0 = to_mp(f.z0);
  for (std::size_t i = 0; i < eps_grid.size(); ++i) {
    MpTarget g = target_for(k, w, MpReal(eps_grid[i]), MpReal(theta));
    MpComplex predicted(0);
    MpComplex qm(1);
    MpReal fact(1);
    for (int m = 0; m <= max_order; ++m) {
      if (m > 0) {
        qm *= g.q;
        fact *= m;
      }
      predicted += qm / fact * coeffs[m];
    }
    report.residuals[i] = static_cast<double>(abs(inverse_functional(f.kind, z0, g) - predicted));
  }
  // Least-squares slope of log residual against log eps.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(eps_grid.size());
  for (std::size_t i = 0; i < eps_grid.size(); ++i) {
    const double x = std::log(eps_grid[i]);
    const double y = std::log(report.residuals[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  report.fitted_exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return report;
}

Complex fourier_mode(const AnalyticFunctional& f, const HypotrochoidSpec& spec, int mode, int n_theta,
                     Execution ex) {
  spec.validate();
  if (n_theta < 64) throw std::invalid_argument("fourier: n_theta must be >= 64");
  const MpReal two_pi = 2 * boost::math::constants::pi<MpReal>();
  const MpComplex z0 = to_mp(f.z0);
  const MpReal eps(spec.eps);
  std::vector<MpComplex> terms(static_cast<std::size_t>(n_theta));
  auto term = [&](int j) {
    const MpReal theta = two_pi * j / n_theta;
    MpTarget g = target_for(spec.k, spec.w, eps, theta);
    return exp(MpComplex(MpReal(0), -MpReal(mode) * theta)) * inverse_functional(f.kind, z0, g);
  };
  if (ex == Execution::kParallel) {
#pragma omp parallel for schedule(static)
    for (int j = 0; j < n_theta; ++j) terms[j] = term(j);
  } else {
    for (int j = 0; j < n_theta; ++j) terms[j] = term(j);
  }
  MpComplex sum(0);
  for (const auto& t : terms) sum += t;
  return to_double(sum / MpReal(n_theta));
}

Complex fourier_extract(const AnalyticFunctional& f, int k, Complex w, int m, double eps, int n_theta,
                        Execution ex) {
  if (m < 0) throw std::domain_error("fourier_extract: m must be >= 0");
  HypotrochoidSpec spec{k, w, eps, 0.0, 2.0};
  spec.validate();
  if (n_theta < 64) throw std::invalid_argument("fourier: n_theta must be >= 64");
  // Repeat the quadrature in extended precision so that the division by
  // eps^{km} does not amplify binary64 rounding.
  const MpReal two_pi = 2 * boost::math::constants::pi<MpReal>();
  const MpComplex z0 = to_mp(f.z0);
  const MpReal mp_eps(eps);
  std::vector<MpComplex> terms(static_cast<std::size_t>(n_theta));
  auto term = [&](int j) {
    const MpReal theta = two_pi * j / n_theta;
    MpTarget g = target_for(k, w, mp_eps, theta);
    return exp(MpComplex(MpReal(0), -MpReal(k * m) * theta)) * inverse_functional(f.kind, z0, g);
  };
  if (ex == Execution::kParallel) {
#pragma omp parallel for schedule(static)
    for (int j = 0; j < n_theta; ++j) terms[j] = term(j);
  } else {
    for (int j = 0; j < n_theta; ++j) terms[j] = term(j);
  }
  MpComplex sum(0);
  for (const auto& t : terms) sum += t;
  MpReal scale = to_mp(factorial(m)) / (pow(mp_eps, k * m) * MpReal(n_theta));
  return to_double(sum * scale);
}

Complex expansion_coefficient(const AnalyticFunctional& f, int k, Complex w, int m) {
  if (m < 0) throw std::domain_error("expansion_coefficient: m must be >= 0");
  return to_double(coefficient_mp(f, k, w, m));
}

}  // namespace hvir
