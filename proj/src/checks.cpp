#include "hvir/checks.hpp"

#include "hvir/basis.hpp"
#include "hvir/composition.hpp"
#include "hvir/confderiv.hpp"
#include "hvir/geometry.hpp"
#include "hvir/mapexpr.hpp"
#include "hvir/params.hpp"
#include "hvir/testkit.hpp"
#include "hvir/virasoro.hpp"
#include "hvir/ward.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace hvir {

namespace {

// Pinned tolerances.
constexpr double kAc1TimeLimitSeconds = 1.0;
constexpr double kTransformationTolerance = 1e-12;
constexpr double kCircleImageTolerance = 1e-12;
constexpr int kCircleImagePoints = 10000;
constexpr double kBracketFraction = 0.05;
constexpr double kCuspTolerance = 1e-10;
constexpr double kFourierEps = 1e-2;
constexpr double kFourierTolerance = 1e-8;
constexpr double kExponentTolerance = 0.2;
constexpr double kRoundTripTolerance = 1e-12;

// Collects the first few failures of a criterion.
class Failures {
 public:
  void add(const std::string& what) {
    ++count_;
    if (count_ <= 3) os_ << (count_ > 1 ? "; " : "") << what;
  }
  bool ok() const { return count_ == 0; }
  std::string summary(const std::string& on_success) const {
    if (ok()) return on_success;
    std::ostringstream os;
    os << count_ << " failure(s): " << os_.str();
    if (count_ > 3) os << "; ...";
    return os.str();
  }

 private:
  int count_ = 0;
  std::ostringstream os_;
};

CPoly c_times(const Rational& a) { return CPoly::monomial(a, 1); }

CheckResult ac1() {
  CheckResult r{1, "composition coefficient recursions agree", false, "", 0.0};
  const auto start = std::chrono::steady_clock::now();
  CoefficientTable table;
  Failures f;
  int count = 0;
  for (int m = 1; m <= 10; ++m)
    for (const auto& lambda : enumerate_compositions(m)) {
      ++count;
      if (table.weight_recursion(lambda) != table.length_recursion(lambda)) f.add(lambda.to_string());
    }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (count != 1023) f.add("expected 1023 compositions, got " + std::to_string(count));
  if (elapsed >= kAc1TimeLimitSeconds) f.add("took " + std::to_string(elapsed) + " s");
  r.passed = f.ok();
  r.detail = f.summary(std::to_string(count) + " compositions of weight <= 10 agree");
  return r;
}

CheckResult ac2() {
  CheckResult r{2, "closed forms of C_lambda", false, "", 0.0};
  Failures f;
  for (int m = 1; m <= 8; ++m)
    for (const auto& lambda : enumerate_compositions(m)) {
      const Rational base = c_coeff(lambda);
      std::vector<int> parts = lambda.parts();
      for (int ones = 1; ones <= 4; ++ones) {
        parts.insert(parts.begin(), 1);
        if (c_coeff(Composition(parts)) != base) f.add("prepend " + std::to_string(ones) + " to " + lambda.to_string());
      }
    }
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k <= 8; ++k) {
      std::vector<int> parts{n};
      parts.insert(parts.end(), k, 1);
      const Rational expected = factorial(n + k - 1) / factorial(k);
      if (c_coeff(Composition(parts)) != expected) f.add(Composition(parts).to_string());
    }
  r.passed = f.ok();
  r.detail = f.summary("prepend-1 invariance (weight <= 8, up to 4 ones) and (n,1^k) closed form (n,k <= 8)");
  return r;
}

CheckResult ac3() {
  CheckResult r{3, "descendant normal forms T_{k,2}, T_{k,3}", false, "", 0.0};
  Failures f;
  for (int k = 2; k <= 8; ++k) {
    const Rational a(k - 1);
    PBWVector t2 = PBWVector::word({-k, -k}) + PBWVector::word({-2 * k}, CPoly(a));
    PBWVector t3 = PBWVector::word({-k, -k, -k}) + PBWVector::word({-2 * k, -k}, CPoly(3 * a)) +
                   PBWVector::word({-3 * k}, CPoly(2 * a * Rational(2 * k - 1)));
    if (descendant(k, 2) != t2) f.add("T_{" + std::to_string(k) + ",2}");
    if (descendant(k, 3) != t3) f.add("T_{" + std::to_string(k) + ",3}");
  }
  r.passed = f.ok();
  r.detail = f.summary("k = 2..8 match exactly");
  return r;
}

struct Identity {
  std::string label;
  PBWVector target;
  FieldCombination displayed;
};

// The expected combination must be c-free, expand to the target, and be the
// combination the solver finds.
void verify_identity(const Identity& id, Failures& f) {
  if (!id.displayed.is_c_independent()) f.add(id.label + ": displayed coefficients depend on c");
  if (expand(id.displayed) != id.target) {
    BasisSolution sol = hypotrochoid_basis_solve(id.target);
    f.add(id.label + ": expected combination expands to " + expand(id.displayed).to_string() +
          " (exact solve: " + sol.combination.to_string() + ")");
    return;
  }
  BasisSolution sol = hypotrochoid_basis_solve(id.target);
  if (!sol.representable || !(sol.combination == id.displayed))
    f.add(id.label + ": solver gives " + sol.combination.to_string());
}

CheckResult ac4() {
  CheckResult r{4, "vertex-algebra identities in the hypotrochoid basis", false, "", 0.0};
  Failures f;
  for (int k = 2; k <= 6; ++k) {
    const std::string ks = std::to_string(k);
    const Rational km1(k - 1);
    {
      Identity id{"L_{-" + ks + "}^2", PBWVector::word({-k, -k}), {}};
      id.displayed.add({k, 2, 0}, CPoly(1));
      id.displayed.add({2 * k, 1, 0}, CPoly(-km1));
      verify_identity(id, f);
    }
    {
      Identity id{"L_{-" + std::to_string(k + 1) + "}L_{-" + ks + "}", PBWVector::word({-k - 1, -k}), {}};
      const Rational s = Rational(1) / (2 * km1);
      id.displayed.add({k, 2, 1}, CPoly(s));
      id.displayed.add({2 * k + 1, 1, 0}, CPoly(-s * 2 * k * km1));
      verify_identity(id, f);
    }
    {
      Identity id{"L_{-" + std::to_string(k + 2) + "}L_{-" + ks + "}", PBWVector::word({-k - 2, -k}), {}};
      const Rational s = Rational(1) / (2 * km1 * k);
      id.displayed.add({k, 2, 2}, CPoly(s));
      id.displayed.add({k + 1, 2, 0}, CPoly(-s * 2 * km1));
      id.displayed.add({2 * k + 2, 1, 0}, CPoly(s * 2 * k * km1 * Rational(2 * k - 1)));
      verify_identity(id, f);
    }
    // d/dw T_{k,1} = (k-1) T_{k+1,1}.
    if (field_vector({k, 1, 1}) != field_vector({k + 1, 1, 0}) * CPoly(km1))
      f.add("derivative property at k = " + ks);
  }
  Identity cube{"L_{-2}^3", PBWVector::word({-2, -2, -2}), {}};
  cube.displayed.add({2, 3, 0}, CPoly(1));
  cube.displayed.add({2, 2, 2}, CPoly(Rational(-3, 4)));
  cube.displayed.add({3, 2, 0}, CPoly(Rational(3, 2)));
  cube.displayed.add({6, 1, 0}, CPoly(3));
  verify_identity(cube, f);
  r.passed = f.ok();
  r.detail = f.summary("all five identities hold for k = 2..6 with c-free coefficients");
  return r;
}

CheckResult ac5() {
  CheckResult r{5, "operator calculus", false, "", 0.0};
  Failures f;
  for (int m = 1; m <= 6; ++m)
    if (derive_tbox(m) != tbox_closed(m)) f.add("tbox recursion vs closed form at m = " + std::to_string(m));
  const auto residuals = composition_check(5);
  for (std::size_t i = 0; i < residuals.size(); ++i)
    if (!residuals[i].is_zero()) f.add("composition residual at order " + std::to_string(i + 1));
  if (residuals.size() != 5) f.add("composition_check returned " + std::to_string(residuals.size()) + " orders");
  const std::pair<std::string, std::string> displays[] = {
      {derive_box(2).to_string(), "N[h, h] - N[h dh]"},
      {derive_tbox(2).to_string(), "N[h, h] + N[h dh]"},
      {derive_box(3).to_string(), "N[h, h, h] - 2*N[h, h dh] - N[h dh, h] + 2*N[h dh^2] + N[h^2 d2h]"},
      {derive_tbox(3).to_string(), "-N[h, h, h] - 2*N[h, h dh] - N[h dh, h] - 2*N[h dh^2]"},
  };
  for (const auto& [got, want] : displays)
    if (got != want) f.add("got '" + got + "', want '" + want + "'");
  r.passed = f.ok();
  r.detail = f.summary("tbox closed form m <= 6, composition residuals zero through order 5, order-2/3 displays match");
  return r;
}

CheckResult ac6() {
  CheckResult r{6, "specialization reproduces T_{k,m}", false, "", 0.0};
  Failures f;
  for (int m = 1; m <= 4; ++m)
    for (int k = 2; k <= 5; ++k)
      if (to_mode_words(specialize_hypotrochoid(m, k)) != descendant_terms(k, m))
        f.add("m = " + std::to_string(m) + ", k = " + std::to_string(k));
  r.passed = f.ok();
  r.detail = f.summary("m <= 4, k = 2..5 match the unordered descendant words");
  return r;
}

CheckResult ac7() {
  CheckResult r{7, "Ward engine", false, "", 0.0};
  Failures f;
  const std::vector<std::string> two{"w1", "w2"};
  const std::vector<std::string> three{"w1", "w2", "w3"};
  const PointRational tt = sphere_correlator({{tk1_state(2), "w1"}, {tk1_state(2), "w2"}});
  if (!(tt == PointRational::difference_power(two, 0, 1, -4) * c_times(Rational(1, 2))))
    f.add("<TT> = " + tt.to_string());
  const PointRational ttt =
      sphere_correlator({{tk1_state(2), "w1"}, {tk1_state(2), "w2"}, {tk1_state(2), "w3"}});
  const PointRational ttt_oracle = PointRational::difference_power(three, 0, 1, -2) *
                                   PointRational::difference_power(three, 0, 2, -2) *
                                   PointRational::difference_power(three, 1, 2, -2) * c_times(1);
  if (!(ttt == ttt_oracle)) f.add("<TTT> = " + ttt.to_string());
  for (int k = 2; k <= 6; ++k)
    for (int kp = 2; kp <= 6; ++kp)
      if (!(sphere_correlator({{tk1_state(k), "x"}, {tk1_state(kp), "y"}}) == tk1_two_point_oracle(k, kp)))
        f.add("<T_{" + std::to_string(k) + ",1} T_{" + std::to_string(kp) + ",1}>");
  // Every multiset of 2..4 states of weight <= 3 (L_{-2} 1 and L_{-3} 1).
  const std::vector<std::string> labels{"a", "b", "c", "d"};
  int cases = 0;
  for (int n = 2; n <= 4; ++n)
    for (int threes = 0; threes <= n; ++threes) {
      std::vector<Insertion> ins;
      for (int i = 0; i < n; ++i) ins.push_back({tk1_state(i < n - threes ? 2 : 3), labels[i]});
      ++cases;
      if (!permutation_invariance(ins)) f.add("permutations of " + std::to_string(n) + " insertions");
    }
  r.passed = f.ok();
  r.detail = f.summary("<TT>, <TTT>, 25 two-point oracles and " + std::to_string(cases) +
                       " permutation-invariance cases exact");
  return r;
}

CheckResult ac8() {
  CheckResult r{8, "Schwarzian transformation law", false, "", 0.0};
  Failures f;
  const MapExpr id = MapExpr::variable();
  const MapExpr ez = MapExpr::parse("exp(z)");
  const MapExpr mob = MapExpr::parse("(2*z + 1)/(z + 3)");
  const MapExpr mob_inv = MapExpr::parse("(3*z - 1)/(2 - z)");
  for (const MapExpr& s : {id, ez}) {
    TransformationReport rep = transformation_check(s, mob, mob_inv, Complex(0.5, 0.0));
    if (!rep.holds || !rep.exact) f.add("Moebius against s = " + s.to_string() + " not exact");
  }
  const std::pair<MapExpr, MapExpr> numeric[] = {
      {MapExpr::parse("z^2"), MapExpr::parse("exp(log(z)/2)")},
      {ez, MapExpr::parse("log(z)")},
  };
  for (const auto& [g, g_inv] : numeric)
    for (const MapExpr& s : {id, ez}) {
      TransformationReport rep = transformation_check(s, g, g_inv, Complex(0.7, 0.2));
      if (!rep.holds || rep.residual >= kTransformationTolerance)
        f.add("g = " + g.to_string() + ", s = " + s.to_string() + " residual " + std::to_string(rep.residual));
    }
  for (const Rational& w : {Rational(0), Rational(1, 3), Rational(-2)}) {
    auto value = one_point_Tk1_exact(ez, 2, w);
    if (!value || *value != c_times(Rational(-1, 24))) f.add("one-point T_{2,1} for e^z at w = " + w.to_string());
  }
  r.passed = f.ok();
  r.detail = f.summary("Moebius exact, z^2 and e^z below 1e-12, <T_{2,1}> = -c/24 for s = e^z");
  return r;
}

CheckResult ac9() {
  CheckResult r{9, "hypotrochoid geometry", false, "", 0.0};
  Failures f;
  double worst_image = 0.0, worst_cusp = 0.0;
  for (int k = 2; k <= 6; ++k) {
    const std::string ks = "k = " + std::to_string(k);
    HypotrochoidSpec spec{k, Complex(0.3, -0.2), 0.1, 0.4, 1.3};
    worst_image = std::max(worst_image, circle_image_error(spec, kCircleImagePoints));
    const double b_star = cusp_threshold_b(k);
    HypotrochoidSpec above{k, Complex(0.0), 1.0, 0.0, (1.0 + kBracketFraction) * b_star};
    HypotrochoidSpec below = above;
    below.b = (1.0 - kBracketFraction) * b_star;
    if (!simplicity_check(above)) f.add(ks + ": not simple at +5%");
    if (simplicity_check(below)) f.add(ks + ": simple at -5%");
    HypotrochoidSpec at = above;
    at.b = b_star;
    for (double alpha : cusp_threshold(k).cusp_angles)
      worst_cusp = std::max(worst_cusp, std::abs(curve_tangent(at, alpha)));
  }
  if (!(worst_image < kCircleImageTolerance)) f.add("circle-image error " + std::to_string(worst_image));
  if (!(worst_cusp < kCuspTolerance)) f.add("cusp derivative " + std::to_string(worst_cusp));
  std::ostringstream os;
  os << "k = 2..6: circle-image error " << worst_image << ", bracketing at 5%, cusp |dz/dalpha| " << worst_cusp;
  r.passed = f.ok();
  r.detail = f.summary(os.str());
  return r;
}

CheckResult ac10() {
  CheckResult r{10, "expansion verification", false, "", 0.0};
  Failures f;
  for (int k = 2; k <= 5; ++k)
    for (int m = 1; m <= 4; ++m)
      if (lagrange_inversion_coefficient(m, k) != tbox_prediction(FunctionalKind::kEvaluation, m, k))
        f.add("Lagrange vs tbox at k = " + std::to_string(k) + ", m = " + std::to_string(m));
  double worst_fourier = 0.0;
  double worst_exponent = 0.0;
  const Complex w(0.1, -0.2);
  for (auto kind : {FunctionalKind::kEvaluation, FunctionalKind::kLogDerivative, FunctionalKind::kSchwarzian}) {
    const AnalyticFunctional fn{kind, Complex(2.0, 0.5)};
    for (int k = 2; k <= 3; ++k) {
      for (int m = 1; m <= 3; ++m) {
        const Complex exact = expansion_coefficient(fn, k, w, m);
        const double err = std::abs(fourier_extract(fn, k, w, m, kFourierEps) - exact) / std::max(1.0, std::abs(exact));
        worst_fourier = std::max(worst_fourier, err);
      }
      for (int M = 0; M <= 2; ++M) {
        ExpansionReport rep = expansion_residual(fn, k, w, 0.3, M, default_eps_grid());
        worst_exponent = std::max(worst_exponent, std::abs(rep.fitted_exponent - rep.expected_exponent));
      }
    }
  }
  if (!(worst_fourier < kFourierTolerance)) f.add("Fourier extraction error " + std::to_string(worst_fourier));
  if (!(worst_exponent < kExponentTolerance)) f.add("decay exponent off by " + std::to_string(worst_exponent));
  std::ostringstream os;
  os << "Lagrange = tbox for m <= 4; Fourier error " << worst_fourier << " at eps = 1e-2; exponents within "
     << worst_exponent << " of k(M+1)";
  r.passed = f.ok();
  r.detail = f.summary(os.str());
  return r;
}

CheckResult ac11() {
  CheckResult r{11, "parameter map", false, "", 0.0};
  Failures f;
  const std::pair<Rational, Rational> cases[] = {
      {Rational(8, 3), Rational(0)}, {Rational(3), Rational(1, 2)}, {Rational(4), Rational(1)}};
  for (const auto& [kappa, c] : cases) {
    const ModelParameters p = from_kappa(kappa);
    if (!p.c_exact || *p.c_exact != c || central_charge_from_kappa(kappa) != c)
      f.add("c(kappa = " + kappa.to_string() + ")");
    if (!p.y_exact) {
      f.add("no exact y for kappa = " + kappa.to_string());
      continue;
    }
    const ModelParameters via_y = from_y(*p.y_exact);
    if (!via_y.kappa_exact || *via_y.kappa_exact != kappa || !via_y.c_exact || *via_y.c_exact != c)
      f.add("round trip through y at kappa = " + kappa.to_string());
    const ModelParameters via_n = from_n(p.n);
    const double kd = kappa.to_double();
    if (std::abs(via_n.kappa - kd) > kRoundTripTolerance || std::abs(via_n.c - c.to_double()) > kRoundTripTolerance ||
        std::abs(via_n.y - p.y) > kRoundTripTolerance)
      f.add("round trip through n at kappa = " + kappa.to_string());
  }
  r.passed = f.ok();
  r.detail = f.summary("kappa 8/3, 3, 4 give c = 0, 1/2, 1; y and n round trips within 1e-12");
  return r;
}

}  // namespace

CheckResult run_check(int id) {
  static const std::function<CheckResult()> checks[] = {ac1, ac2, ac3, ac4, ac5, ac6,
                                                       ac7, ac8, ac9, ac10, ac11};
  if (id < 1 || id > kCheckCount) throw std::out_of_range("no acceptance criterion " + std::to_string(id));
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = checks[id - 1]();
  } catch (const std::exception& e) {
    static const char* names[] = {"composition coefficient recursions agree", "closed forms of C_lambda",
                                  "descendant normal forms T_{k,2}, T_{k,3}",
                                  "vertex-algebra identities in the hypotrochoid basis", "operator calculus",
                                  "specialization reproduces T_{k,m}", "Ward engine", "Schwarzian transformation law",
                                  "hypotrochoid geometry", "expansion verification", "parameter map"};
    r.id = id;
    r.name = names[id - 1];
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "algebra", "operators", "ward", "geometry", "expansion"};
  return names;
}

std::vector<int> suite_members(const std::string& suite) {
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
  if (suite == "algebra") return {1, 2, 3, 4, 11};
  if (suite == "operators") return {5, 6};
  if (suite == "ward") return {7, 8};
  if (suite == "geometry") return {9};
  if (suite == "expansion") return {10};
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

std::vector<CheckResult> run_suite(const std::string& suite) {
  std::vector<CheckResult> out;
  for (int id : suite_members(suite)) out.push_back(run_check(id));
  return out;
}

}  // namespace hvir
