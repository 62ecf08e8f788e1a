#include "hvir/basis.hpp"
#include "hvir/checks.hpp"
#include "hvir/composition.hpp"
#include "hvir/confderiv.hpp"
#include "hvir/geometry.hpp"
#include "hvir/grammar.hpp"
#include "hvir/ope.hpp"
#include "hvir/params.hpp"
#include "hvir/serialize.hpp"
#include "hvir/testkit.hpp"
#include "hvir/ward.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace {

using hvir::Complex;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

constexpr int kDefaultSamples = 4096;
constexpr int kDefaultThetaPoints = 256;
constexpr const char* kVersion = "hvir 1.0.0";

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string resolve_path(const std::string& path) {
  const char* dir = std::getenv("HVIR_OUT_DIR");
  std::filesystem::path p(path);
  if (dir != nullptr && *dir != '\0' && p.is_relative()) p = std::filesystem::path(dir) / p;
  return p.string();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.close();
  if (!out) throw IoError("failed writing '" + path + "'");
}

// Every output file carries the defaults alongside the actual parameters.
json provenance(const std::string& command, json parameters) {
  return {{"tool", kVersion},
          {"command", command},
          {"parameters", std::move(parameters)},
          {"defaults", {{"n_samples", kDefaultSamples}, {"n_theta", kDefaultThetaPoints}, {"eps_grid", "2^-3..2^-10"}}}};
}

struct Sink {
  std::string out;
  std::string format = "text";

  void emit(const std::string& content) const {
    if (out.empty()) {
      std::cout << content;
      return;
    }
    const std::string path = resolve_path(out);
    write_file(path, content);
    std::cout << "wrote " << path << "\n";
  }
};

void add_sink(CLI::App* cmd, Sink& sink, std::vector<std::string> formats = {"text", "json"}) {
  cmd->add_option("--format", sink.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
  cmd->add_option("-o,--out", sink.out, "Output file (relative paths go under $HVIR_OUT_DIR when set)");
}

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string complex_text(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

// ---- coeffs ----

struct CoeffsArgs {
  int m_max = 0;
  Sink sink;
};

int run_coeffs(const CoeffsArgs& a) {
  json rows = json::array();
  std::ostringstream text;
  bool all_equal = true;
  char line[256];
  std::snprintf(line, sizeof line, "%-24s %16s %16s  %s\n", "lambda", "C (weight)", "C (length)", "equal");
  text << line;
  for (int m = 1; m <= a.m_max; ++m)
    for (const auto& lambda : hvir::enumerate_compositions(m)) {
      const hvir::Rational c1 = hvir::c_coeff(lambda);
      const hvir::Rational c2 = hvir::c_coeff_alt(lambda);
      const bool eq = c1 == c2;
      all_equal = all_equal && eq;
      rows.push_back({{"lambda", lambda}, {"c_weight", c1}, {"c_length", c2}, {"equal", eq}});
      std::snprintf(line, sizeof line, "%-24s %16s %16s  %s\n", lambda.to_string().c_str(), c1.to_string().c_str(),
                    c2.to_string().c_str(), eq ? "yes" : "NO");
      text << line;
    }
  if (a.sink.format == "json") {
    json doc = provenance("coeffs", {{"m_max", a.m_max}});
    doc["rows"] = rows;
    doc["all_equal"] = all_equal;
    a.sink.emit(hvir::dump(doc));
  } else {
    text << rows.size() << " compositions, " << (all_equal ? "all equal" : "MISMATCH") << "\n";
    a.sink.emit(text.str());
  }
  return all_equal ? kExitOk : kExitCheckFailed;
}

// ---- descendant ----

struct DescendantArgs {
  int k = 2;
  int m = 1;
  bool solve = false;
  std::string target;
  bool unordered = false;
  Sink sink;
};

int run_descendant(const DescendantArgs& a) {
  const hvir::PBWVector t = hvir::descendant(a.k, a.m);
  const std::string name = "T[" + std::to_string(a.k) + "," + std::to_string(a.m) + "]";
  json doc = provenance("descendant", {{"k", a.k}, {"m", a.m}, {"solve_basis", a.solve}, {"target", a.target}});
  doc["descendant"] = t;
  std::ostringstream text;
  text << name << " = " << t.to_string() << "\n";
  if (a.unordered) {
    json terms = json::array();
    text << "before normal ordering:\n";
    for (const auto& [word, coeff] : hvir::descendant_terms(a.k, a.m)) {
      terms.push_back({{"modes", word}, {"coefficient", coeff}});
      text << "  " << coeff.to_string() << " *";
      for (int n : word) text << " L_{" << n << "}";
      text << " 1\n";
    }
    doc["unordered_terms"] = terms;
  }
  if (a.solve) {
    hvir::PBWVector target;
    if (a.target.empty())
      target = hvir::PBWVector::word(hvir::ModeWord(a.m, -a.k));
    else
      target = hvir::parse_field_vector(a.target);
    const hvir::BasisSolution sol = hvir::hypotrochoid_basis_solve(target);
    doc["target"] = target;
    doc["solution"] = sol;
    if (sol.representable)
      text << sol.combination.to_string() << " == " << target.to_string() << "\n";
    else
      text << target.to_string() << " is not in the span of hypotrochoid fields\n";
  }
  a.sink.emit(a.sink.format == "json" ? hvir::dump(doc) : text.str());
  return kExitOk;
}

// ---- correlator ----

struct CorrelatorArgs {
  std::string spec;
  std::vector<std::string> at;
  std::string c;
  Sink sink;
};

int run_correlator(const CorrelatorArgs& a) {
  const auto insertions = hvir::parse_insertions(a.spec);
  const hvir::PointRational value = hvir::sphere_correlator(insertions);
  json doc = provenance("correlator", {{"spec", a.spec}, {"at", a.at}, {"c", a.c}});
  doc["correlator"] = value;
  std::ostringstream text;
  text << "<" << a.spec << "> = " << value.to_string() << "\n";

  if (!a.at.empty() || !a.c.empty()) {
    std::map<std::string, hvir::Rational> points;
    for (const auto& item : a.at) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("--at expects label=value, got '" + item + "'");
      points[item.substr(0, eq)] = hvir::parse_rational(item.substr(eq + 1));
    }
    for (const auto& [label, v] : points)
      if (value.index_of(label) < 0) throw std::invalid_argument("--at: unknown point '" + label + "'");
    std::vector<hvir::Rational> values;
    for (const auto& label : value.labels()) {
      auto it = points.find(label);
      if (it == points.end()) throw std::invalid_argument("--at: no value for point '" + label + "'");
      values.push_back(it->second);
    }
    const hvir::CPoly at_points = value.eval(values);
    doc["value"] = at_points;
    text << "at the given points: " << at_points.to_string() << "\n";
    if (!a.c.empty()) {
      const hvir::Rational v = at_points.eval(hvir::parse_rational(a.c));
      doc["value_at_c"] = v;
      doc["value_at_c_float"] = v.to_double();
      text << "at c = " << a.c << ": " << v.to_string() << " (" << fmt("%.17g", v.to_double()) << ")\n";
    }
  }
  a.sink.emit(a.sink.format == "json" ? hvir::dump(doc) : text.str());
  return kExitOk;
}

// ---- check ----

struct CheckArgs {
  std::string suite = "all";
  Sink sink;
};

int run_check(const CheckArgs& a) {
  const auto results = hvir::run_suite(a.suite);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (a.sink.format == "json") {
    json rows = json::array();
    for (const auto& r : results) {
      json row = r;
      row.erase("seconds");  // keeps files byte-identical between runs
      rows.push_back(row);
    }
    json doc = provenance("check", {{"suite", a.suite}});
    doc["results"] = rows;
    doc["passed"] = all;
    a.sink.emit(hvir::dump(doc));
  } else {
    std::ostringstream text;
    char line[512];
    std::snprintf(line, sizeof line, "%-4s %-52s %-6s %8s  %s\n", "AC", "criterion", "result", "seconds", "detail");
    text << line;
    for (const auto& r : results) {
      std::snprintf(line, sizeof line, "%-4d %-52s %-6s %8.3f  ", r.id, r.name.c_str(), r.passed ? "PASS" : "FAIL",
                    r.seconds);
      text << line << r.detail << "\n";
    }
    text << "suite " << a.suite << ": " << (all ? "PASS" : "FAIL") << "\n";
    a.sink.emit(text.str());
  }
  return all ? kExitOk : kExitCheckFailed;
}

// ---- curve ----

struct CurveArgs {
  hvir::HypotrochoidSpec spec;
  double w_re = 0.0, w_im = 0.0;
  std::optional<double> b;
  int n = kDefaultSamples;
  Sink sink;
};

int run_curve(CurveArgs a) {
  a.spec.w = Complex(a.w_re, a.w_im);
  const double b_star = hvir::cusp_threshold_b(a.spec.k);
  a.spec.b = a.b ? *a.b : 1.15 * b_star;
  a.spec.validate();
  const bool simple = hvir::simplicity_check(a.spec, a.n);
  json params = a.spec;
  params["n_samples"] = a.n;
  params["format"] = a.sink.format;
  json meta = provenance("curve", params);
  meta["cusp_threshold_b"] = b_star;
  meta["simple"] = simple;

  std::ostringstream body;
  if (a.sink.format == "svg") {
    std::string comment = meta.dump();
    // "--" may not appear inside an XML comment.
    for (std::size_t p; (p = comment.find("--")) != std::string::npos;) comment.replace(p, 2, "- -");
    hvir::write_curve_svg(a.spec, a.n, body, comment);
  } else if (a.sink.format == "csv") {
    hvir::write_curve_csv(a.spec, a.n, body);
  } else {
    const auto s = hvir::sample_curve(a.spec, a.n);
    json pts = json::array();
    for (std::size_t j = 0; j < s.points.size(); ++j)
      pts.push_back({s.alpha[j], s.points[j].real(), s.points[j].imag()});
    json doc = meta;
    doc["columns"] = {"alpha", "re", "im"};
    doc["points"] = pts;
    body << hvir::dump(doc);
  }
  a.sink.emit(body.str());
  if (a.sink.format == "csv" && !a.sink.out.empty()) {
    const std::string side = resolve_path(a.sink.out) + ".json";
    write_file(side, hvir::dump(meta));
  }
  std::ostream& info = a.sink.out.empty() ? std::cerr : std::cout;
  info << "cusp threshold b* = " << fmt("%.12g", b_star) << ", b = " << fmt("%.12g", a.spec.b) << ": "
       << (simple ? "simple" : "not simple") << "\n";
  if (!simple) std::cerr << "warning: the curve is not simple\n";
  return kExitOk;
}

// ---- operator ----

struct OperatorArgs {
  int m = 2;
  std::string which = "tbox";
  int specialize_k = 0;
  bool symmetrize = false;
  Sink sink;
};

int run_operator(const OperatorArgs& a) {
  hvir::OperatorSum op;
  if (a.which == "box")
    op = hvir::derive_box(a.m);
  else if (a.which == "tbox")
    op = hvir::derive_tbox(a.m);
  else
    op = hvir::tbox_closed(a.m);
  json doc = provenance("operator", {{"m", a.m}, {"which", a.which}, {"specialize", a.specialize_k}, {"symmetrize", a.symmetrize}});
  doc["operator"] = op;
  std::ostringstream text;
  text << a.which << "^(" << a.m << ") = " << op.to_string() << "\n";
  if (a.symmetrize) {
    const std::string s = hvir::to_string(hvir::symmetrize(op));
    doc["symmetrized"] = s;
    text << "symmetrized: " << s << "\n";
  }
  if (a.specialize_k >= 2) {
    const hvir::DeltaSum d = hvir::specialize(op, a.specialize_k);
    doc["specialized"] = d;
    text << "at hhat_{" << a.specialize_k << ",w}: " << hvir::to_string(d) << "\n";
  }
  a.sink.emit(a.sink.format == "json" ? hvir::dump(doc) : text.str());
  return kExitOk;
}

// ---- ope ----

struct OpeArgs {
  int k = 2, k_prime = 2, depth = 0;
  Sink sink;
};

int run_ope(const OpeArgs& a) {
  const auto terms = hvir::ope_Tk1(a.k, a.k_prime, a.depth);
  json doc = provenance("ope", {{"k", a.k}, {"k_prime", a.k_prime}, {"depth", a.depth}});
  doc["terms"] = terms;
  std::ostringstream text;
  text << "T[" << a.k << ",1](x) T[" << a.k_prime << ",1](y) ~\n";
  for (const auto& t : terms) {
    text << "  (x-y)^-" << t.pole_order << " : " << t.state.to_string();
    if (t.resolved) text << "  ==  " << t.combination.to_string();
    text << "\n";
  }
  a.sink.emit(a.sink.format == "json" ? hvir::dump(doc) : text.str());
  return kExitOk;
}

// ---- expansion ----

struct ExpansionArgs {
  std::string functional = "evaluation";
  int k = 2;
  double z0_re = 2.0, z0_im = 0.0, w_re = 0.0, w_im = 0.0, theta = 0.0;
  int order = 1;
  bool fourier = false;
  double fourier_eps = 1e-2;
  int n_theta = kDefaultThetaPoints;
  Sink sink;
};

int run_expansion(const ExpansionArgs& a) {
  const hvir::AnalyticFunctional f{hvir::parse_functional_kind(a.functional), Complex(a.z0_re, a.z0_im)};
  const Complex w(a.w_re, a.w_im);
  const auto rep = hvir::expansion_residual(f, a.k, w, a.theta, a.order, hvir::default_eps_grid());
  json doc = provenance("expansion", {{"functional", a.functional},
                                      {"k", a.k},
                                      {"z0", hvir::complex_json(f.z0)},
                                      {"w", hvir::complex_json(w)},
                                      {"theta", a.theta},
                                      {"order", a.order},
                                      {"fourier", a.fourier},
                                      {"fourier_eps", a.fourier_eps},
                                      {"n_theta", a.n_theta}});
  doc["report"] = rep;
  std::ostringstream text;
  char line[256];
  text << "f = " << a.functional << " at z0 = " << complex_text(f.z0) << ", k = " << a.k << ", w = " << complex_text(w)
       << ", theta = " << a.theta << "\n";
  for (int m = 0; m <= a.order; ++m) text << "  c_" << m << " = " << complex_text(rep.coefficients[m]) << "\n";
  std::snprintf(line, sizeof line, "%14s %14s\n", "eps", "residual");
  text << line;
  for (std::size_t i = 0; i < rep.eps.size(); ++i) {
    std::snprintf(line, sizeof line, "%14.6e %14.6e\n", rep.eps[i], rep.residuals[i]);
    text << line;
  }
  text << "fitted exponent " << fmt("%.4f", rep.fitted_exponent) << " (expected " << rep.expected_exponent << ")\n";
  if (a.fourier) {
    json rows = json::array();
    for (int m = 1; m <= std::max(1, a.order); ++m) {
      const Complex got = hvir::fourier_extract(f, a.k, w, m, a.fourier_eps, a.n_theta);
      const Complex want = hvir::expansion_coefficient(f, a.k, w, m);
      rows.push_back({{"m", m}, {"extracted", hvir::complex_json(got)}, {"exact", hvir::complex_json(want)},
                      {"error", std::abs(got - want)}});
      text << "  Fourier m = " << m << ": " << complex_text(got) << " (error " << fmt("%.3e", std::abs(got - want))
           << ")\n";
    }
    doc["fourier"] = rows;
  }
  a.sink.emit(a.sink.format == "json" ? hvir::dump(doc) : text.str());
  return kExitOk;
}

// ---- params ----

struct ParamsArgs {
  std::string kappa, y;
  std::optional<double> n;
  Sink sink;
};

int run_params(const ParamsArgs& a) {
  const int given = !a.kappa.empty() + !a.y.empty() + a.n.has_value();
  if (given != 1) throw std::invalid_argument("give exactly one of --kappa, --y, --n");
  hvir::ModelParameters p;
  if (!a.kappa.empty())
    p = hvir::from_kappa(hvir::parse_rational(a.kappa));
  else if (!a.y.empty())
    p = hvir::from_y(hvir::parse_rational(a.y));
  else
    p = hvir::from_n(*a.n);
  json doc = provenance("params", {{"kappa", a.kappa}, {"y", a.y}, {"n", a.n ? json(*a.n) : json()}});
  doc["result"] = p;
  std::ostringstream text;
  text << "kappa = " << (p.kappa_exact ? p.kappa_exact->to_string() : fmt("%.15g", p.kappa)) << "\n"
       << "y     = " << (p.y_exact ? p.y_exact->to_string() : fmt("%.15g", p.y)) << "\n"
       << "n     = " << fmt("%.15g", p.n) << "\n"
       << "c     = " << (p.c_exact ? p.c_exact->to_string() : fmt("%.15g", p.c)) << "\n";
  a.sink.emit(a.sink.format == "json" ? hvir::dump(doc) : text.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypotrochoid fields and the Virasoro identity module: exact algebra, correlators and checks"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CoeffsArgs coeffs;
  auto* c_coeffs = app.add_subcommand("coeffs", "Composition coefficients C_lambda by both recursions");
  c_coeffs->add_option("--m-max", coeffs.m_max, "Largest weight (1..12)")->required()->check(CLI::Range(1, 12));
  add_sink(c_coeffs, coeffs.sink);

  DescendantArgs desc;
  auto* c_desc = app.add_subcommand("descendant", "Normal-ordered T_{k,m}; optional hypotrochoid-basis solve");
  c_desc->add_option("-k", desc.k, "Arms k >= 2")->required()->check(CLI::Range(2, 64));
  c_desc->add_option("-m", desc.m, "Order m >= 1")->required()->check(CLI::Range(1, 12));
  c_desc->add_flag("--solve-basis", desc.solve, "Express a target vector through hypotrochoid fields");
  c_desc->add_option("--target", desc.target, "Target field, e.g. 'L[-2,-2,-2]' (default L_{-k}^m 1)");
  c_desc->add_flag("--unordered", desc.unordered, "Also list the words before normal ordering");
  add_sink(c_desc, desc.sink);

  CorrelatorArgs corr;
  auto* c_corr = app.add_subcommand("correlator", "Exact sphere correlator of identity-module insertions");
  c_corr->add_option("spec", corr.spec, "Insertions, e.g. 'T[2,1]@x T[2,1]@y' (empty: 1)")->required();
  c_corr->add_option("--at", corr.at, "Numeric point value label=p/q (repeatable)");
  c_corr->add_option("--c", corr.c, "Central charge p/q for the numeric value");
  add_sink(c_corr, corr.sink);

  CheckArgs check;
  auto* c_check = app.add_subcommand("check", "Run acceptance suites; exit 0 iff all pass");
  c_check->add_option("suite", check.suite, "Suite name")
      ->check(CLI::IsMember(hvir::suite_names()))
      ->capture_default_str();
  add_sink(c_check, check.sink);

  CurveArgs curve;
  auto* c_curve = app.add_subcommand("curve", "Sample a hypotrochoid and report simplicity");
  c_curve->add_option("-k", curve.spec.k, "Arms k >= 2")->required()->check(CLI::Range(2, 64));
  c_curve->add_option("-b", curve.b, "Radius parameter b > 0 (default 1.15 * (k-1)^{1/k})");
  c_curve->add_option("--eps", curve.spec.eps, "Scale eps > 0")->capture_default_str();
  c_curve->add_option("--theta", curve.spec.theta, "Rotation theta")->capture_default_str();
  c_curve->add_option("--w-re", curve.w_re, "Re w")->capture_default_str();
  c_curve->add_option("--w-im", curve.w_im, "Im w")->capture_default_str();
  c_curve->add_option("-n,--samples", curve.n, "Number of samples")->check(CLI::Range(64, 1 << 22))->capture_default_str();
  curve.sink.format = "svg";
  add_sink(c_curve, curve.sink, {"svg", "csv", "json"});

  OperatorArgs oper;
  auto* c_oper = app.add_subcommand("operator", "Order-m expansion operators of f(id + eps h) and its inverse");
  c_oper->add_option("-m", oper.m, "Order m >= 1")->required()->check(CLI::Range(1, 8));
  c_oper->add_option("--which", oper.which, "box, tbox or closed")
      ->check(CLI::IsMember({"box", "tbox", "closed"}))
      ->capture_default_str();
  c_oper->add_option("--specialize", oper.specialize_k, "Evaluate at hhat_{k,w} for this k")->check(CLI::Range(2, 64));
  c_oper->add_flag("--symmetrize", oper.symmetrize, "Also print the symmetrized form");
  add_sink(c_oper, oper.sink);

  OpeArgs ope;
  auto* c_ope = app.add_subcommand("ope", "Singular part of T_{k,1}(x) T_{k',1}(y)");
  c_ope->add_option("-k", ope.k, "k >= 2")->required()->check(CLI::Range(2, 16));
  c_ope->add_option("--kp", ope.k_prime, "k' >= 2")->required()->check(CLI::Range(2, 16));
  c_ope->add_option("--depth", ope.depth, "Also list regular terms down to (x-y)^depth")->check(CLI::Range(0, 6));
  add_sink(c_ope, ope.sink);

  ExpansionArgs exp;
  auto* c_exp = app.add_subcommand("expansion", "Compare f(g^{-1}) with its expansion on the eps grid 2^-3..2^-10");
  c_exp->add_option("--functional", exp.functional, "evaluation, log_derivative or schwarzian")
      ->check(CLI::IsMember({"evaluation", "log_derivative", "schwarzian"}))
      ->capture_default_str();
  c_exp->add_option("-k", exp.k, "Arms k >= 2")->required()->check(CLI::Range(2, 16));
  c_exp->add_option("--order", exp.order, "Truncation order M (0..4)")->check(CLI::Range(0, 4))->capture_default_str();
  c_exp->add_option("--z0-re", exp.z0_re, "Re z0")->capture_default_str();
  c_exp->add_option("--z0-im", exp.z0_im, "Im z0")->capture_default_str();
  c_exp->add_option("--w-re", exp.w_re, "Re w")->capture_default_str();
  c_exp->add_option("--w-im", exp.w_im, "Im w")->capture_default_str();
  c_exp->add_option("--theta", exp.theta, "theta")->capture_default_str();
  c_exp->add_flag("--fourier", exp.fourier, "Also extract coefficients by Fourier projection");
  c_exp->add_option("--fourier-eps", exp.fourier_eps, "eps for the Fourier projection")->capture_default_str();
  c_exp->add_option("--n-theta", exp.n_theta, "theta grid size (>= 64)")->check(CLI::Range(64, 1 << 16))->capture_default_str();
  add_sink(c_exp, exp.sink);

  ParamsArgs params;
  auto* c_params = app.add_subcommand("params", "Consistent (kappa, n, y, c) from one of them");
  c_params->add_option("--kappa", params.kappa, "kappa as p/q in [8/3, 4]");
  c_params->add_option("--y", params.y, "y as p/q in [1/4, 1/2]");
  c_params->add_option("--n", params.n, "loop weight n in [0, 2]");
  add_sink(c_params, params.sink);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_coeffs->parsed()) return run_coeffs(coeffs);
    if (c_desc->parsed()) return run_descendant(desc);
    if (c_corr->parsed()) return run_correlator(corr);
    if (c_check->parsed()) return run_check(check);
    if (c_curve->parsed()) return run_curve(curve);
    if (c_oper->parsed()) return run_operator(oper);
    if (c_ope->parsed()) return run_ope(ope);
    if (c_exp->parsed()) return run_expansion(exp);
    if (c_params->parsed()) return run_params(params);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
