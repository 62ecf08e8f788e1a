#include "hvir/mpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace hvir {

MPoly MPoly::constant(int n_vars, const CPoly& c) {
  MPoly p(n_vars);
  p.add(Exponents(static_cast<std::size_t>(n_vars), 0), c);
  return p;
}

MPoly MPoly::variable(int n_vars, int index) {
  if (index < 0 || index >= n_vars) throw std::out_of_range("MPoly::variable: index");
  Exponents e(static_cast<std::size_t>(n_vars), 0);
  e[index] = 1;
  MPoly p(n_vars);
  p.add(e, CPoly(1));
  return p;
}

int MPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

void MPoly::add(const Exponents& e, const CPoly& c) {
  if (static_cast<int>(e.size()) != n_vars_) throw std::invalid_argument("MPoly::add: arity");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::derivative(int var) const {
  MPoly out(n_vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents ne = e;
    ne[var] -= 1;
    out.add(ne, c * Rational(e[var]));
  }
  return out;
}

MPoly MPoly::identify(int from, int to) const {
  MPoly out(n_vars_);
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    ne[to] += ne[from];
    ne[from] = 0;
    out.add(ne, c);
  }
  return out;
}

MPoly MPoly::divide_difference(int a, int b) const {
  // Write N = sum_k x_a^k C_k and run synthetic division by x_a - x_b.
  const int top = degree_in(a);
  if (top < 0) return MPoly(n_vars_);
  std::vector<MPoly> coeffs(static_cast<std::size_t>(top) + 1, MPoly(n_vars_));
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    ne[a] = 0;
    coeffs[e[a]].add(ne, c);
  }
  const MPoly xb = variable(n_vars_, b);
  MPoly quotient(n_vars_);
  MPoly carry(n_vars_);
  for (int k = top; k >= 1; --k) {
    carry = coeffs[k] + xb * carry;
    for (const auto& [e, c] : carry.terms_) {
      Exponents ne = e;
      ne[a] += k - 1;
      quotient.add(ne, c);
    }
  }
  MPoly remainder = coeffs[0] + xb * carry;
  if (!remainder.is_zero()) throw std::domain_error("MPoly::divide_difference: not divisible");
  return quotient;
}

CPoly MPoly::eval(const std::vector<Rational>& at) const {
  if (static_cast<int>(at.size()) != n_vars_) throw std::invalid_argument("MPoly::eval: arity");
  CPoly out;
  for (const auto& [e, c] : terms_) {
    Rational m(1);
    for (int i = 0; i < n_vars_; ++i) m *= pow(at[i], e[i]);
    out += c * m;
  }
  return out;
}

MPoly MPoly::operator-() const {
  MPoly out(n_vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const CPoly& s) {
  MPoly out(n_vars_);
  for (const auto& [e, c] : terms_) out.add(e, c * s);
  return *this = std::move(out);
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.n_vars_ != b.n_vars_) throw std::invalid_argument("MPoly product: arity mismatch");
  MPoly out(a.n_vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MPoly::Exponents e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add(e, ca * cb);
    }
  return out;
}

MPoly pow(const MPoly& base, int exponent) {
  if (exponent < 0) throw std::domain_error("MPoly pow: negative exponent");
  MPoly r = MPoly::constant(base.n_vars(), CPoly(1));
  MPoly b = base;
  while (exponent > 0) {
    if (exponent & 1) r = r * b;
    b = b * b;
    exponent >>= 1;
  }
  return r;
}

MPoly difference_power(int n_vars, int a, int b, int e) {
  return pow(MPoly::variable(n_vars, a) - MPoly::variable(n_vars, b), e);
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (int i = 0; i < n_vars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coeff = c.to_string();
    bool negative_constant = c.is_constant() && c.coeff(0).sign() < 0;
    if (!first) os << (negative_constant ? " - " : " + ");
    else if (negative_constant) os << "-";
    first = false;
    if (negative_constant) coeff = (-c).to_string();
    if (mono.empty()) {
      os << (c.is_constant() || terms_.size() == 1 ? coeff : "(" + coeff + ")");
    } else if (coeff == "1") {
      os << mono;
    } else {
      os << (c.is_constant() ? coeff : "(" + coeff + ")") << "*" << mono;
    }
  }
  return os.str();
}

}  // namespace hvir
