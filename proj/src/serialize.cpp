#include "hvir/serialize.hpp"

namespace hvir {

using nlohmann::json;

void to_json(json& j, const Rational& r) { j = r.to_string(); }

void to_json(json& j, const CPoly& p) { j = p.to_string(); }

void to_json(json& j, const Composition& c) { j = c.parts(); }

void to_json(json& j, const PBWVector& v) {
  json terms = json::array();
  for (const auto& [word, coeff] : v.terms()) terms.push_back({{"modes", word}, {"coefficient", coeff}});
  j = {{"text", v.to_string()}, {"weight", v.homogeneous_weight()}, {"terms", terms}};
}

void to_json(json& j, const FieldCombination& f) {
  json terms = json::array();
  if (!f.identity.is_zero()) terms.push_back({{"field", "1"}, {"coefficient", f.identity}});
  for (const auto& [sym, coeff] : f.terms)
    terms.push_back({{"field", sym.to_string()},
                     {"k", sym.k},
                     {"m", sym.m},
                     {"derivatives", sym.derivative_order},
                     {"coefficient", coeff}});
  j = {{"text", f.to_string()}, {"c_independent", f.is_c_independent()}, {"terms", terms}};
}

void to_json(json& j, const BasisSolution& s) {
  j = {{"representable", s.representable}};
  if (s.representable) j["combination"] = s.combination;
}

void to_json(json& j, const OperatorSum& s) {
  json terms = json::array();
  for (const auto& [word, coeff] : s.terms()) {
    json dirs = json::array();
    for (const auto& m : word) dirs.push_back(m.to_string());
    terms.push_back({{"directions", dirs}, {"coefficient", coeff}});
  }
  j = {{"text", s.to_string()}, {"terms", terms}};
}

void to_json(json& j, const DeltaSum& s) {
  json terms = json::array();
  for (const auto& [word, coeff] : s)
    terms.push_back({{"labels", word.labels}, {"antiholomorphic", word.antiholomorphic}, {"coefficient", coeff}});
  j = {{"text", to_string(s)}, {"terms", terms}};
}

void to_json(json& j, const PointRational& p) {
  j = {{"points", p.labels()},
       {"text", p.to_string()},
       {"numerator", p.numerator_string()},
       {"denominator", p.denominator_string()}};
}

void to_json(json& j, const OpeTerm& t) {
  j = {{"pole_order", t.pole_order}, {"state", t.state}, {"resolved", t.resolved}};
  if (t.resolved) j["fields"] = t.combination;
}

void to_json(json& j, const ModelParameters& p) {
  j = {{"kappa", p.kappa}, {"n", p.n}, {"y", p.y}, {"c", p.c}};
  if (p.kappa_exact) j["kappa_exact"] = *p.kappa_exact;
  if (p.y_exact) j["y_exact"] = *p.y_exact;
  if (p.c_exact) j["c_exact"] = *p.c_exact;
}

void to_json(json& j, const CheckResult& r) {
  j = {{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}};
}

void to_json(json& j, const ExpansionReport& r) {
  json coeffs = json::array();
  for (Complex c : r.coefficients) coeffs.push_back(complex_json(c));
  j = {{"functional", to_string(r.kind)},
       {"z0", complex_json(r.z0)},
       {"k", r.k},
       {"w", complex_json(r.w)},
       {"theta", r.theta},
       {"max_order", r.max_order},
       {"coefficients", coeffs},
       {"eps", r.eps},
       {"residuals", r.residuals},
       {"fitted_exponent", r.fitted_exponent},
       {"expected_exponent", r.expected_exponent}};
}

void to_json(json& j, const HypotrochoidSpec& s) {
  j = {{"k", s.k}, {"w", complex_json(s.w)}, {"eps", s.eps}, {"theta", s.theta}, {"b", s.b}};
}

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace hvir
