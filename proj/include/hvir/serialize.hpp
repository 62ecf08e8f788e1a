#pragma once

#include "hvir/basis.hpp"
#include "hvir/checks.hpp"
#include "hvir/composition.hpp"
#include "hvir/confderiv.hpp"
#include "hvir/geometry.hpp"
#include "hvir/ope.hpp"
#include "hvir/params.hpp"
#include "hvir/point_rational.hpp"
#include "hvir/testkit.hpp"

#include <json.hpp>

namespace hvir {

/// Exact values are written as strings ("3/4", "c/2 + 1"); complex numbers
/// as {"re": .., "im": ..}.
void to_json(nlohmann::json& j, const Rational& r);
void to_json(nlohmann::json& j, const CPoly& p);
void to_json(nlohmann::json& j, const Composition& c);
void to_json(nlohmann::json& j, const PBWVector& v);
void to_json(nlohmann::json& j, const FieldCombination& f);
void to_json(nlohmann::json& j, const BasisSolution& s);
void to_json(nlohmann::json& j, const OperatorSum& s);
void to_json(nlohmann::json& j, const DeltaSum& s);
void to_json(nlohmann::json& j, const PointRational& p);
void to_json(nlohmann::json& j, const OpeTerm& t);
void to_json(nlohmann::json& j, const ModelParameters& p);
void to_json(nlohmann::json& j, const CheckResult& r);
void to_json(nlohmann::json& j, const ExpansionReport& r);
void to_json(nlohmann::json& j, const HypotrochoidSpec& s);

nlohmann::json complex_json(Complex z);

/// Two-space indented JSON with a trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace hvir
