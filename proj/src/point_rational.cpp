#include "hvir/point_rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace hvir {

namespace {

int size_of(const std::vector<std::string>& labels) { return static_cast<int>(labels.size()); }

void require_same_points(const PointRational& a, const PointRational& b) {
  if (a.labels() != b.labels()) throw std::invalid_argument("PointRational: different point sets");
}

}  // namespace

PointRational::PointRational(std::vector<std::string> labels)
    : labels_(std::move(labels)), num_(size_of(labels_)) {
  if (!std::is_sorted(labels_.begin(), labels_.end()) ||
      std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
    throw std::invalid_argument("PointRational: labels must be sorted and distinct");
}

PointRational::PointRational(std::vector<std::string> labels, const CPoly& constant)
    : PointRational(std::move(labels)) {
  num_ = MPoly::constant(size_of(labels_), constant);
}

int PointRational::index_of(const std::string& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) throw std::out_of_range("PointRational: unknown point " + label);
  return static_cast<int>(it - labels_.begin());
}

MPoly PointRational::denominator_poly() const {
  MPoly d = MPoly::constant(size_of(labels_), CPoly(1));
  for (const auto& [p, e] : den_) d = d * hvir::difference_power(size_of(labels_), p.first, p.second, e);
  return d;
}

PointRational PointRational::difference_power(const std::vector<std::string>& labels, int i, int j,
                                              int e) {
  if (i == j) throw std::invalid_argument("difference_power: identical points");
  PointRational r(labels);
  const int n = size_of(labels);
  CPoly sign(1);
  if (i > j) {
    std::swap(i, j);
    if (e % 2 != 0) sign = CPoly(-1);
  }
  if (e >= 0) {
    r.num_ = hvir::difference_power(n, i, j, e) * sign;
  } else {
    r.num_ = MPoly::constant(n, sign);
    r.den_[{i, j}] = -e;
  }
  return r;
}

void PointRational::canonicalize() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    auto [i, j] = it->first;
    while (it->second > 0 && num_.identify(i, j).is_zero()) {
      num_ = num_.divide_difference(i, j);
      --it->second;
    }
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
}

PointRational PointRational::derivative(int var) const {
  const int n = size_of(labels_);
  std::vector<std::pair<Pair, int>> touching;
  for (const auto& [p, e] : den_)
    if (p.first == var || p.second == var) touching.emplace_back(p, e);

  auto diff = [n](const Pair& p) { return hvir::difference_power(n, p.first, p.second, 1); };
  MPoly all = MPoly::constant(n, CPoly(1));
  for (const auto& [p, e] : touching) all = all * diff(p);

  MPoly num = num_.derivative(var) * all;
  for (std::size_t a = 0; a < touching.size(); ++a) {
    const auto& [p, e] = touching[a];
    MPoly others = MPoly::constant(n, CPoly(1));
    for (std::size_t b = 0; b < touching.size(); ++b)
      if (b != a) others = others * diff(touching[b].first);
    const int s = (p.first == var) ? 1 : -1;
    num -= num_ * others * CPoly(Rational(s * e));
  }
  PointRational out(labels_);
  out.num_ = std::move(num);
  out.den_ = den_;
  for (const auto& [p, e] : touching) out.den_[p] += 1;
  out.canonicalize();
  return out;
}

CPoly PointRational::eval(const std::vector<Rational>& at) const {
  Rational d(1);
  for (const auto& [p, e] : den_) d *= pow(at.at(p.first) - at.at(p.second), e);
  if (d.is_zero()) throw std::domain_error("PointRational::eval: coincident points");
  return num_.eval(at) / d;
}

PointRational& PointRational::operator+=(const PointRational& o) {
  require_same_points(*this, o);
  const int n = size_of(labels_);
  std::map<Pair, int> common = den_;
  for (const auto& [p, e] : o.den_) common[p] = std::max(common[p], e);
  auto lift = [&](const PointRational& x) {
    MPoly m = x.num_;
    for (const auto& [p, e] : common) {
      auto it = x.den_.find(p);
      int have = it == x.den_.end() ? 0 : it->second;
      if (e > have) m = m * hvir::difference_power(n, p.first, p.second, e - have);
    }
    return m;
  };
  num_ = lift(*this) + lift(o);
  den_ = std::move(common);
  canonicalize();
  return *this;
}

PointRational& PointRational::operator-=(const PointRational& o) {
  PointRational neg = o;
  neg.num_ = -neg.num_;
  return *this += neg;
}

PointRational& PointRational::operator*=(const CPoly& s) {
  num_ *= s;
  canonicalize();
  return *this;
}

PointRational operator*(const PointRational& a, const PointRational& b) {
  require_same_points(a, b);
  PointRational out(a.labels_);
  out.num_ = a.num_ * b.num_;
  out.den_ = a.den_;
  for (const auto& [p, e] : b.den_) out.den_[p] += e;
  out.canonicalize();
  return out;
}

bool operator==(const PointRational& a, const PointRational& b) {
  return a.labels_ == b.labels_ && a.num_ == b.num_ && a.den_ == b.den_;
}

std::string PointRational::numerator_string() const { return num_.to_string(labels_); }

std::string PointRational::denominator_string() const {
  if (den_.empty()) return "1";
  std::string s;
  for (const auto& [p, e] : den_) {
    if (!s.empty()) s += "*";
    s += "(" + labels_[p.first] + " - " + labels_[p.second] + ")";
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string PointRational::to_string() const {
  std::string n = numerator_string();
  if (den_.empty()) return n;
  bool single = n.find_first_of(" /") == std::string::npos;
  const std::string d = denominator_string();
  return (single ? n : "(" + n + ")") + " / " + (den_.size() > 1 ? "(" + d + ")" : d);
}

bool equivalent(const PolyFraction& a, const PolyFraction& b) {
  return a.num * b.den == b.num * a.den;
}

PolyFraction as_fraction(const PointRational& f) { return {f.numerator(), f.denominator_poly()}; }

PolyFraction inversion_transform(const PointRational& f, const std::vector<int>& weights) {
  const int n = static_cast<int>(f.labels().size());
  if (static_cast<int>(weights.size()) != n)
    throw std::invalid_argument("inversion_transform: one weight per point");
  const MPoly& num = f.numerator();

  std::vector<int> top(n), power(n, 0);
  for (int i = 0; i < n; ++i) top[i] = std::max(0, num.degree_in(i));
  MPoly reflected(n);
  for (const auto& [e, c] : num.terms()) {
    MPoly::Exponents r(n);
    for (int i = 0; i < n; ++i) r[i] = top[i] - e[i];
    reflected.add(r, c);
  }
  // 1/w_i - 1/w_j = (w_j - w_i)/(w_i w_j).
  MPoly den = MPoly::constant(n, CPoly(1));
  for (const auto& [p, e] : f.denominator()) {
    den = den * difference_power(n, p.second, p.first, e);
    power[p.first] += e;
    power[p.second] += e;
  }
  // d(1/w)/dw = -w^{-2}, raised to the weight.
  int sign = 1;
  for (int i = 0; i < n; ++i) {
    power[i] -= top[i] + 2 * weights[i];
    if (weights[i] % 2 != 0) sign = -sign;
  }
  MPoly out_num = reflected * CPoly(sign);
  for (int i = 0; i < n; ++i) {
    if (power[i] > 0) out_num = out_num * pow(MPoly::variable(n, i), power[i]);
    if (power[i] < 0) den = den * pow(MPoly::variable(n, i), -power[i]);
  }
  return {out_num, den};
}

}  // namespace hvir
