#include "hvir/mapexpr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hvir {

struct MapExpr::Node {
  Kind kind;
  Rational re;
  Rational im;
  int power = 0;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
};

namespace {

using NodePtr = std::shared_ptr<const MapExpr::Node>;
using Kind = MapExpr::Kind;

NodePtr make_const(const Rational& re, const Rational& im) {
  return std::make_shared<const MapExpr::Node>(MapExpr::Node{Kind::kConst, re, im, 0, nullptr, nullptr});
}

NodePtr make_var() {
  return std::make_shared<const MapExpr::Node>(MapExpr::Node{Kind::kVar, {}, {}, 0, nullptr, nullptr});
}

bool is_const(const NodePtr& n) { return n->kind == Kind::kConst; }
bool is_zero(const NodePtr& n) { return is_const(n) && n->re.is_zero() && n->im.is_zero(); }
bool is_one(const NodePtr& n) { return is_const(n) && n->re.is_one() && n->im.is_zero(); }

NodePtr make_node(Kind kind, NodePtr a, NodePtr b, int power = 0) {
  return std::make_shared<const MapExpr::Node>(MapExpr::Node{kind, {}, {}, power, std::move(a), std::move(b)});
}

NodePtr add(const NodePtr& a, const NodePtr& b) {
  if (is_zero(a)) return b;
  if (is_zero(b)) return a;
  if (is_const(a) && is_const(b)) return make_const(a->re + b->re, a->im + b->im);
  return make_node(Kind::kAdd, a, b);
}

NodePtr sub(const NodePtr& a, const NodePtr& b) {
  if (is_zero(b)) return a;
  if (is_const(a) && is_const(b)) return make_const(a->re - b->re, a->im - b->im);
  return make_node(Kind::kSub, a, b);
}

NodePtr mul(const NodePtr& a, const NodePtr& b) {
  if (is_zero(a) || is_zero(b)) return make_const(0, 0);
  if (is_one(a)) return b;
  if (is_one(b)) return a;
  if (is_const(a) && is_const(b))
    return make_const(a->re * b->re - a->im * b->im, a->re * b->im + a->im * b->re);
  return make_node(Kind::kMul, a, b);
}

NodePtr div(const NodePtr& a, const NodePtr& b) {
  if (is_zero(b)) throw std::domain_error("MapExpr: division by the constant 0");
  if (is_zero(a)) return a;
  if (is_one(b)) return a;
  if (is_const(a) && is_const(b)) {
    Rational n = b->re * b->re + b->im * b->im;
    return make_const((a->re * b->re + a->im * b->im) / n, (a->im * b->re - a->re * b->im) / n);
  }
  return make_node(Kind::kDiv, a, b);
}

NodePtr power(const NodePtr& a, int n) {
  if (n == 0) return make_const(1, 0);
  if (n == 1) return a;
  if (is_const(a)) {
    NodePtr base = n > 0 ? a : div(make_const(1, 0), a);
    NodePtr r = make_const(1, 0);
    for (int i = 0; i < std::abs(n); ++i) r = mul(r, base);
    return r;
  }
  if (a->kind == Kind::kPow) return power(a->a, a->power * n);
  return make_node(Kind::kPow, a, nullptr, n);
}

NodePtr exp_node(const NodePtr& a) {
  if (is_zero(a)) return make_const(1, 0);
  return make_node(Kind::kExp, a, nullptr);
}

NodePtr log_node(const NodePtr& a) {
  if (is_one(a)) return make_const(0, 0);
  if (is_zero(a)) throw std::domain_error("MapExpr: log of the constant 0");
  return make_node(Kind::kLog, a, nullptr);
}

NodePtr substitute(const NodePtr& n, const NodePtr& inner) {
  switch (n->kind) {
    case Kind::kConst: return n;
    case Kind::kVar: return inner;
    case Kind::kAdd: return add(substitute(n->a, inner), substitute(n->b, inner));
    case Kind::kSub: return sub(substitute(n->a, inner), substitute(n->b, inner));
    case Kind::kMul: return mul(substitute(n->a, inner), substitute(n->b, inner));
    case Kind::kDiv: return div(substitute(n->a, inner), substitute(n->b, inner));
    case Kind::kPow: return power(substitute(n->a, inner), n->power);
    case Kind::kExp: return exp_node(substitute(n->a, inner));
    case Kind::kLog: return log_node(substitute(n->a, inner));
  }
  throw std::logic_error("MapExpr: unknown node");
}

NodePtr differentiate(const NodePtr& n) {
  switch (n->kind) {
    case Kind::kConst: return make_const(0, 0);
    case Kind::kVar: return make_const(1, 0);
    case Kind::kAdd: return add(differentiate(n->a), differentiate(n->b));
    case Kind::kSub: return sub(differentiate(n->a), differentiate(n->b));
    case Kind::kMul: return add(mul(differentiate(n->a), n->b), mul(n->a, differentiate(n->b)));
    case Kind::kDiv:
      return div(sub(mul(differentiate(n->a), n->b), mul(n->a, differentiate(n->b))), power(n->b, 2));
    case Kind::kPow:
      return mul(mul(make_const(n->power, 0), power(n->a, n->power - 1)), differentiate(n->a));
    case Kind::kExp: return mul(n, differentiate(n->a));
    case Kind::kLog: return div(differentiate(n->a), n->a);
  }
  throw std::logic_error("MapExpr: unknown node");
}

// Truncated power series arithmetic, all of length order + 1.
using Series = std::vector<Complex>;

Series series_mul(const Series& a, const Series& b) {
  Series r(a.size(), Complex(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Series series_div(const Series& a, const Series& b) {
  if (b[0] == Complex(0)) throw std::domain_error("MapExpr: pole in the expansion point");
  Series q(a.size(), Complex(0));
  for (std::size_t n = 0; n < a.size(); ++n) {
    Complex acc = a[n];
    for (std::size_t j = 1; j <= n; ++j) acc -= b[j] * q[n - j];
    q[n] = acc / b[0];
  }
  return q;
}

Series series_exp(const Series& a) {
  Series e(a.size(), Complex(0));
  e[0] = std::exp(a[0]);
  for (std::size_t n = 1; n < a.size(); ++n) {
    Complex acc(0);
    for (std::size_t j = 1; j <= n; ++j) acc += static_cast<double>(j) * a[j] * e[n - j];
    e[n] = acc / static_cast<double>(n);
  }
  return e;
}

Series series_log(const Series& a) {
  if (a[0] == Complex(0)) throw std::domain_error("MapExpr: log of zero at the expansion point");
  Series l(a.size(), Complex(0));
  l[0] = std::log(a[0]);
  for (std::size_t n = 1; n < a.size(); ++n) {
    Complex acc(0);
    for (std::size_t j = 1; j < n; ++j) acc += static_cast<double>(j) * l[j] * a[n - j];
    l[n] = (a[n] - acc / static_cast<double>(n)) / a[0];
  }
  return l;
}

Series series_derivative(const Series& a) {
  Series d(a.size() > 1 ? a.size() - 1 : 1, Complex(0));
  for (std::size_t n = 1; n < a.size(); ++n) d[n - 1] = static_cast<double>(n) * a[n];
  return d;
}

Series taylor_of(const NodePtr& n, Complex z0, std::size_t len) {
  Series r(len, Complex(0));
  switch (n->kind) {
    case Kind::kConst:
      r[0] = Complex(n->re.to_double(), n->im.to_double());
      return r;
    case Kind::kVar:
      r[0] = z0;
      if (len > 1) r[1] = 1.0;
      return r;
    case Kind::kAdd:
    case Kind::kSub: {
      Series a = taylor_of(n->a, z0, len), b = taylor_of(n->b, z0, len);
      for (std::size_t i = 0; i < len; ++i) r[i] = n->kind == Kind::kAdd ? a[i] + b[i] : a[i] - b[i];
      return r;
    }
    case Kind::kMul: return series_mul(taylor_of(n->a, z0, len), taylor_of(n->b, z0, len));
    case Kind::kDiv: return series_div(taylor_of(n->a, z0, len), taylor_of(n->b, z0, len));
    case Kind::kPow: {
      Series a = taylor_of(n->a, z0, len);
      Series p(len, Complex(0));
      p[0] = 1.0;
      for (int i = 0; i < std::abs(n->power); ++i) p = series_mul(p, a);
      if (n->power < 0) {
        Series one(len, Complex(0));
        one[0] = 1.0;
        return series_div(one, p);
      }
      return p;
    }
    case Kind::kExp: return series_exp(taylor_of(n->a, z0, len));
    case Kind::kLog: return series_log(taylor_of(n->a, z0, len));
  }
  throw std::logic_error("MapExpr: unknown node");
}

std::optional<ExpForm> form_of(const NodePtr& n) {
  switch (n->kind) {
    case Kind::kConst:
      if (!n->im.is_zero()) return std::nullopt;
      return ExpForm{RatFunc(n->re), RatFunc()};
    case Kind::kVar: return ExpForm{RatFunc::x(), RatFunc()};
    case Kind::kAdd:
    case Kind::kSub: {
      auto a = form_of(n->a), b = form_of(n->b);
      if (!a || !b) return std::nullopt;
      RatFunc rb = n->kind == Kind::kAdd ? b->r : -b->r;
      if (a->r.is_zero()) return ExpForm{rb, b->p};
      if (b->r.is_zero()) return a;
      if (!(a->p == b->p)) return std::nullopt;
      return ExpForm{a->r + rb, a->p};
    }
    case Kind::kMul: {
      auto a = form_of(n->a), b = form_of(n->b);
      if (!a || !b) return std::nullopt;
      return ExpForm{a->r * b->r, a->p + b->p};
    }
    case Kind::kDiv: {
      auto a = form_of(n->a), b = form_of(n->b);
      if (!a || !b || b->r.is_zero()) return std::nullopt;
      return ExpForm{a->r / b->r, a->p - b->p};
    }
    case Kind::kPow: {
      auto a = form_of(n->a);
      if (!a || (n->power < 0 && a->r.is_zero())) return std::nullopt;
      return ExpForm{pow(a->r, n->power), a->p * RatFunc(n->power)};
    }
    case Kind::kExp: {
      auto a = form_of(n->a);
      if (!a || !a->p.is_zero()) return std::nullopt;
      return ExpForm{RatFunc(1), a->r};
    }
    case Kind::kLog: return std::nullopt;
  }
  return std::nullopt;
}

std::string const_string(const Rational& re, const Rational& im) {
  if (im.is_zero()) return re.to_string();
  std::string i_part = im.is_one() ? "i" : (im == Rational(-1) ? "-i" : im.to_string() + "*i");
  if (re.is_zero()) return i_part;
  return "(" + re.to_string() + (im.sign() < 0 ? " - " : " + ") +
         (im.sign() < 0 ? (im == Rational(-1) ? "i" : (-im).to_string() + "*i") : i_part) + ")";
}

std::string node_string(const NodePtr& n) {
  switch (n->kind) {
    case Kind::kConst: return const_string(n->re, n->im);
    case Kind::kVar: return "z";
    case Kind::kAdd: return "(" + node_string(n->a) + " + " + node_string(n->b) + ")";
    case Kind::kSub: return "(" + node_string(n->a) + " - " + node_string(n->b) + ")";
    case Kind::kMul: {
      std::string rhs = node_string(n->b);
      return node_string(n->a) + "*" + (n->b->kind == Kind::kDiv ? "(" + rhs + ")" : rhs);
    }
    case Kind::kDiv: {
      std::string rhs = node_string(n->b);
      bool wrap = n->b->kind == Kind::kMul || n->b->kind == Kind::kDiv;
      return node_string(n->a) + "/" + (wrap ? "(" + rhs + ")" : rhs);
    }
    case Kind::kPow: {
      std::string base = node_string(n->a);
      bool atomic = n->a->kind == Kind::kVar || n->a->kind == Kind::kExp || n->a->kind == Kind::kLog;
      return (atomic ? base : "(" + base + ")") + "^" +
             (n->power < 0 ? "(" + std::to_string(n->power) + ")" : std::to_string(n->power));
    }
    case Kind::kExp: return "exp(" + node_string(n->a) + ")";
    case Kind::kLog: return "log(" + node_string(n->a) + ")";
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    NodePtr n = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("MapExpr::parse: " + what + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  NodePtr expression() {
    NodePtr n = term();
    for (;;) {
      if (accept('+')) n = add(n, term());
      else if (accept('-')) n = sub(n, term());
      else return n;
    }
  }

  NodePtr term() {
    NodePtr n = unary();
    for (;;) {
      if (accept('*')) n = mul(n, unary());
      else if (accept('/')) n = div(n, unary());
      else return n;
    }
  }

  NodePtr unary() {
    if (accept('-')) return sub(make_const(0, 0), unary());
    return power_expr();
  }

  NodePtr power_expr() {
    NodePtr base = primary();
    if (!accept('^')) return base;
    bool negative = accept('-');
    bool paren = !negative && accept('(');
    if (paren) negative = accept('-');
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (paren) expect(')');
    return power(base, negative ? -e : e);
  }

  NodePtr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (accept('(')) {
      NodePtr n = expression();
      expect(')');
      return n;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string word(text_.substr(start, pos_ - start));
    if (word == "z") return make_var();
    if (word == "i") return make_const(0, 1);
    if (word == "exp" || word == "log") {
      expect('(');
      NodePtr arg = expression();
      expect(')');
      return word == "exp" ? exp_node(arg) : log_node(arg);
    }
    pos_ = start;
    fail(word.empty() ? "unexpected character" : "unknown name '" + word + "'");
  }

  NodePtr number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    long scale = 1;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      std::size_t frac_start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::size_t frac_len = pos_ - frac_start;
      if (frac_len > 15) fail("too many decimals");
      digits += std::string(text_.substr(frac_start, frac_len));
      for (std::size_t i = 0; i < frac_len; ++i) scale *= 10;
    }
    return make_const(Rational(mpz_class(digits), mpz_class(scale)), 0);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MapExpr MapExpr::constant(const Rational& re, const Rational& im) { return MapExpr(make_const(re, im)); }
MapExpr MapExpr::variable() { return MapExpr(make_var()); }
MapExpr MapExpr::parse(std::string_view text) { return MapExpr(Parser(text).parse()); }

MapExpr::Kind MapExpr::kind() const { return node_->kind; }
MapExpr MapExpr::with_domain(std::string domain) const { return MapExpr(node_, std::move(domain)); }

MapExpr operator+(const MapExpr& a, const MapExpr& b) { return MapExpr(add(a.node_, b.node_)); }
MapExpr operator-(const MapExpr& a, const MapExpr& b) { return MapExpr(sub(a.node_, b.node_)); }
MapExpr operator*(const MapExpr& a, const MapExpr& b) { return MapExpr(mul(a.node_, b.node_)); }
MapExpr operator/(const MapExpr& a, const MapExpr& b) { return MapExpr(div(a.node_, b.node_)); }
MapExpr pow(const MapExpr& base, int exponent) { return MapExpr(power(base.node_, exponent)); }
MapExpr exp(const MapExpr& a) { return MapExpr(exp_node(a.node_)); }
MapExpr log(const MapExpr& a) { return MapExpr(log_node(a.node_)); }

MapExpr MapExpr::compose(const MapExpr& inner) const { return MapExpr(substitute(node_, inner.node_)); }
MapExpr MapExpr::derivative() const { return MapExpr(differentiate(node_), domain_); }

Complex MapExpr::eval(Complex z) const { return taylor_of(node_, z, 1)[0]; }

std::vector<Complex> MapExpr::taylor(Complex z0, int order) const {
  if (order < 0) throw std::invalid_argument("MapExpr::taylor: negative order");
  return taylor_of(node_, z0, static_cast<std::size_t>(order) + 1);
}

std::optional<ExpForm> MapExpr::exp_form() const { return form_of(node_); }

bool MapExpr::is_constant() const { return is_const(node_); }

std::string MapExpr::to_string() const { return node_string(node_); }

// ---------------------------------------------------------------------------
// Schwarzian calculus

MapExpr schwarzian(const MapExpr& s) {
  MapExpr d1 = s.derivative();
  MapExpr d2 = d1.derivative();
  MapExpr d3 = d2.derivative();
  return d3 / d1 - MapExpr::constant(Rational(3, 2)) * pow(d2 / d1, 2);
}

std::optional<RatFunc> schwarzian_exact(const MapExpr& s) {
  auto f = s.exp_form();
  if (!f) return std::nullopt;
  // s' = (R' + R P') e^P, and s''/s' = R1'/R1 + P'.
  RatFunc r1 = f->r.derivative() + f->r * f->p.derivative();
  if (r1.is_zero()) throw SingularityError("schwarzian: map has identically vanishing derivative");
  RatFunc y = r1.derivative() / r1 + f->p.derivative();
  return y.derivative() - y * y / RatFunc(2);
}

std::vector<Complex> schwarzian_series(const MapExpr& s, Complex w, int order) {
  if (order < 0) throw std::invalid_argument("schwarzian_series: negative order");
  const int n = order + 3;
  std::vector<Complex> jet;
  try {
    jet = s.taylor(w, n);
  } catch (const std::domain_error& e) {
    throw SingularityError(std::string("schwarzian: ") + e.what());
  }
  Series d = series_derivative(jet);
  double scale = 1.0;
  for (const auto& x : d) scale += std::abs(x);
  if (std::abs(d[0]) <= 1e-14 * scale || !std::isfinite(std::abs(d[0])))
    throw SingularityError("schwarzian: s'(w) vanishes");
  Series dd = series_derivative(d);
  d.resize(dd.size());
  Series y = series_div(dd, d);
  Series yp = series_derivative(y);
  y.resize(yp.size());
  Series y2 = series_mul(y, y);
  Series out(static_cast<std::size_t>(order) + 1);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = yp[i] - 0.5 * y2[i];
  return out;
}

Complex schwarzian_at(const MapExpr& s, Complex w) { return schwarzian_series(s, w, 0)[0]; }

Complex one_point_Tk1_per_c(const MapExpr& s, int k, Complex w) {
  if (k < 2) throw std::domain_error("one_point_Tk1: k must be >= 2");
  return schwarzian_series(s, w, k - 2)[static_cast<std::size_t>(k - 2)] / 12.0;
}

std::optional<CPoly> one_point_Tk1_exact(const MapExpr& s, int k, const Rational& w) {
  if (k < 2) throw std::domain_error("one_point_Tk1: k must be >= 2");
  auto sch = schwarzian_exact(s);
  if (!sch) return std::nullopt;
  RatFunc d = *sch;
  for (int i = 0; i < k - 2; ++i) d = d.derivative();
  Rational value;
  try {
    value = d.eval(w);
  } catch (const std::domain_error&) {
    throw SingularityError("one_point_Tk1: Schwarzian is singular at w");
  }
  return CPoly::x() * (value / (factorial(k - 2) * Rational(12)));
}

TransformationReport transformation_check(const MapExpr& s, const MapExpr& g, const MapExpr& g_inv,
                                          Complex w) {
  const Complex gw = g.eval(w);
  const Complex back = g_inv.eval(gw);
  if (!(std::abs(back - w) <= 1e-9 * std::max(1.0, std::abs(w))))
    throw std::domain_error("transformation_check: g_inv does not invert g at w");
  const Complex gp = g.taylor(w, 1)[1];
  if (std::abs(gp) == 0.0) throw std::domain_error("transformation_check: g'(w) = 0");
  const MapExpr pulled = s.compose(g_inv);

  TransformationReport report;
  auto sf = s.exp_form();
  auto gf = g.exp_form();
  auto pf = pulled.exp_form();
  if (w.imag() == 0.0 && sf && gf && pf && gf->p.is_zero()) {
    try {
      Rational wq(mpq_class(w.real()));
      Rational gwq = gf->r.eval(wq);
      Rational gpq = gf->r.derivative().eval(wq);
      Rational lhs = gpq * gpq * schwarzian_exact(pulled)->eval(gwq) + schwarzian_exact(g)->eval(wq);
      Rational rhs = schwarzian_exact(s)->eval(wq);
      report.exact = true;
      report.holds = lhs == rhs;
      report.residual = std::abs((lhs - rhs).to_double());
      report.lhs = lhs.to_string();
      report.rhs = rhs.to_string();
      return report;
    } catch (const std::domain_error&) {
      // A pole on the exact route: fall through to the numeric evaluation,
      // which reports the singularity.
    }
  }
  const Complex lhs = gp * gp * schwarzian_at(pulled, gw) + schwarzian_at(g, w);
  const Complex rhs = schwarzian_at(s, w);
  report.residual = std::abs(lhs - rhs);
  report.holds = report.residual <= 1e-12 * std::max({1.0, std::abs(lhs), std::abs(rhs)});
  std::ostringstream l, r;
  l.precision(17);
  r.precision(17);
  l << lhs;
  r << rhs;
  report.lhs = l.str();
  report.rhs = r.str();
  return report;
}

double cauchy_riemann_residual(const MapExpr& s, int k, const std::vector<Complex>& grid, double h) {
  double worst = 0.0;
  auto f = [&](Complex z) { return one_point_Tk1_per_c(s, k, z); };
  auto d = [&](Complex z, Complex step) {
    return (-f(z + 2.0 * step) + 8.0 * f(z + step) - 8.0 * f(z - step) + f(z - 2.0 * step)) /
           (12.0 * h);
  };
  for (const Complex& z : grid) {
    Complex fx = d(z, Complex(h, 0));
    Complex fy = d(z, Complex(0, h));
    worst = std::max(worst, std::abs(fx + Complex(0, 1) * fy) / std::max(1.0, std::abs(fx)));
  }
  return worst;
}

}  // namespace hvir
