#include "hvir/confderiv.hpp"

#include "hvir/composition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hvir {

// ---------------------------------------------------------------------------
// DirectionMonomial

DirectionMonomial::DirectionMonomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_)
    if (e < 0) throw std::invalid_argument("DirectionMonomial: negative exponent");
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

DirectionMonomial DirectionMonomial::h_dh_power(int n) {
  if (n < 0) throw std::invalid_argument("h_dh_power: negative power");
  return DirectionMonomial(n == 0 ? std::vector<int>{1} : std::vector<int>{1, n});
}

int DirectionMonomial::exponent(int a) const {
  return a >= 0 && a < static_cast<int>(exps_.size()) ? exps_[a] : 0;
}

int DirectionMonomial::degree() const {
  int d = 0;
  for (int e : exps_) d += e;
  return d;
}

int DirectionMonomial::derivative_weight() const {
  int w = 0;
  for (std::size_t a = 0; a < exps_.size(); ++a) w += static_cast<int>(a) * exps_[a];
  return w;
}

DirectionMonomial operator*(const DirectionMonomial& a, const DirectionMonomial& b) {
  std::vector<int> e(std::max(a.exps_.size(), b.exps_.size()), 0);
  for (std::size_t i = 0; i < a.exps_.size(); ++i) e[i] += a.exps_[i];
  for (std::size_t i = 0; i < b.exps_.size(); ++i) e[i] += b.exps_[i];
  return DirectionMonomial(std::move(e));
}

std::strong_ordering operator<=>(const DirectionMonomial& a, const DirectionMonomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (auto c = a.derivative_weight() <=> b.derivative_weight(); c != 0) return c;
  return a.exps_ <=> b.exps_;
}

std::string DirectionMonomial::to_string() const {
  if (exps_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (std::size_t a = 0; a < exps_.size(); ++a) {
    if (exps_[a] == 0) continue;
    if (!first) os << " ";
    first = false;
    if (a == 0) os << "h";
    else if (a == 1) os << "dh";
    else os << "d" << a << "h";
    if (exps_[a] > 1) os << "^" << exps_[a];
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// DirectionPoly

DirectionPoly::DirectionPoly(const DirectionMonomial& m, const Rational& c) { add(m, c); }

void DirectionPoly::add(const DirectionMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DirectionPoly DirectionPoly::derivative() const {
  DirectionPoly out;
  for (const auto& [m, c] : terms_) {
    const auto& e = m.exps();
    for (std::size_t a = 0; a < e.size(); ++a) {
      if (e[a] == 0) continue;
      std::vector<int> ne = e;
      ne.resize(std::max(ne.size(), a + 2), 0);
      ne[a] -= 1;
      ne[a + 1] += 1;
      out.add(DirectionMonomial(std::move(ne)), c * Rational(e[a]));
    }
  }
  return out;
}

DirectionPoly& DirectionPoly::operator+=(const DirectionPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

DirectionPoly& DirectionPoly::operator-=(const DirectionPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

DirectionPoly operator*(const DirectionPoly& a, const DirectionPoly& b) {
  DirectionPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add(ma * mb, ca * cb);
  return out;
}

namespace {

std::string coeff_prefix(const Rational& c, bool first) {
  std::string s;
  Rational mag = c;
  if (c.sign() < 0) {
    s = first ? "-" : " - ";
    mag = -c;
  } else if (!first) {
    s = " + ";
  }
  if (!mag.is_one()) s += mag.to_string() + "*";
  return s;
}

std::string word_string(const NablaWord& w) {
  if (w.empty()) return "1";
  std::string s = "N[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += w[i].to_string();
  }
  return s + "]";
}

}  // namespace

std::string DirectionPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    s += coeff_prefix(c, first) + m.to_string();
    first = false;
  }
  return s;
}

DirectionPoly witt_bracket(const DirectionPoly& a, const DirectionPoly& b) {
  return a * b.derivative() - b * a.derivative();
}

// ---------------------------------------------------------------------------
// OperatorSum

OperatorSum OperatorSum::identity() {
  OperatorSum s;
  s.add({}, Rational(1));
  return s;
}

Rational OperatorSum::coeff(const NablaWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void OperatorSum::add(const NablaWord& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void OperatorSum::add_expanded(const std::vector<DirectionPoly>& word, const Rational& c) {
  NablaWord current;
  current.reserve(word.size());
  auto rec = [&](auto&& self, std::size_t i, const Rational& acc) -> void {
    if (i == word.size()) {
      add(current, acc);
      return;
    }
    for (const auto& [m, mc] : word[i].terms()) {
      current.push_back(m);
      self(self, i + 1, acc * mc);
      current.pop_back();
    }
  };
  rec(rec, 0, c);
}

OperatorSum& OperatorSum::operator+=(const OperatorSum& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

OperatorSum& OperatorSum::operator-=(const OperatorSum& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

OperatorSum& OperatorSum::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

OperatorSum operator*(const OperatorSum& a, const OperatorSum& b) {
  OperatorSum out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      NablaWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  return out;
}

std::string OperatorSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    s += coeff_prefix(c, first) + word_string(w);
    first = false;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Expansion operators

namespace {

// Intermediate operator of f(id + eps h) on monomial arguments (leftmost first).
class BoxRecursion {
 public:
  const OperatorSum& eval(const NablaWord& args) {
    if (auto it = memo_.find(args); it != memo_.end()) return it->second;
    OperatorSum out;
    if (args.size() == 1) {
      out.add(args, Rational(1));
    } else {
      NablaWord rest(args.begin() + 1, args.end());
      for (const auto& [w, c] : eval(rest).terms()) {
        NablaWord nw{args[0]};
        nw.insert(nw.end(), w.begin(), w.end());
        out.add(nw, c);
      }
      for (std::size_t i = 0; i + 1 < args.size(); ++i) {
        DirectionPoly merged = DirectionPoly(args[i]) * DirectionPoly(args[i + 1]).derivative();
        for (const auto& [m, mc] : merged.terms()) {
          NablaWord sub;
          sub.insert(sub.end(), args.begin(), args.begin() + static_cast<long>(i));
          sub.push_back(m);
          sub.insert(sub.end(), args.begin() + static_cast<long>(i) + 2, args.end());
          OperatorSum term = eval(sub);
          out -= term * mc;
        }
      }
    }
    return memo_.emplace(args, std::move(out)).first->second;
  }

 private:
  std::map<NablaWord, OperatorSum> memo_;
};

// Intermediate operator of f((id + eps h)^{-1}) on cells of merged arguments;
// only the cell sizes matter on the diagonal.
class TboxRecursion {
 public:
  const OperatorSum& eval(const std::vector<int>& cells) {
    if (auto it = memo_.find(cells); it != memo_.end()) return it->second;
    OperatorSum out;
    const DirectionMonomial head = DirectionMonomial::h_dh_power(cells[0] - 1);
    if (cells.size() == 1) {
      out.add({head}, Rational(-1));
    } else {
      std::vector<int> rest(cells.begin() + 1, cells.end());
      for (const auto& [w, c] : eval(rest).terms()) {
        NablaWord nw{head};
        nw.insert(nw.end(), w.begin(), w.end());
        out.add(nw, -c);
      }
      for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
        std::vector<int> sub;
        sub.insert(sub.end(), cells.begin(), cells.begin() + static_cast<long>(i));
        sub.push_back(cells[i] + cells[i + 1]);
        sub.insert(sub.end(), cells.begin() + static_cast<long>(i) + 2, cells.end());
        out -= eval(sub);
      }
    }
    return memo_.emplace(cells, std::move(out)).first->second;
  }

 private:
  std::map<std::vector<int>, OperatorSum> memo_;
};

}  // namespace

OperatorSum derive_box(int m) {
  if (m < 0) throw std::domain_error("derive_box: order must be >= 0");
  if (m == 0) return OperatorSum::identity();
  BoxRecursion rec;
  return rec.eval(NablaWord(static_cast<std::size_t>(m), DirectionMonomial::h()));
}

OperatorSum derive_tbox(int m) {
  if (m < 0) throw std::domain_error("derive_tbox: order must be >= 0");
  if (m == 0) return OperatorSum::identity();
  TboxRecursion rec;
  return rec.eval(std::vector<int>(static_cast<std::size_t>(m), 1));
}

OperatorSum tbox_closed(int m) {
  if (m <= 0) throw std::domain_error("tbox_closed: order must be >= 1");
  OperatorSum out;
  const Rational sign = (m % 2 == 0) ? Rational(1) : Rational(-1);
  for (const auto& lambda : enumerate_compositions(m)) {
    NablaWord w;
    for (auto it = lambda.parts().rbegin(); it != lambda.parts().rend(); ++it)
      w.push_back(DirectionMonomial::h_dh_power(*it - 1));
    out.add(w, sign * c_coeff(lambda));
  }
  return out;
}

namespace {

class WittNormalizer {
 public:
  const OperatorSum& normalize(const NablaWord& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    std::size_t i = 0;
    while (i + 1 < w.size() && !(w[i + 1] < w[i])) ++i;
    OperatorSum out;
    if (i + 1 >= w.size()) {
      out.add(w, Rational(1));
    } else {
      NablaWord swapped = w;
      std::swap(swapped[i], swapped[i + 1]);
      out += normalize(swapped);
      DirectionPoly br = witt_bracket(DirectionPoly(w[i]), DirectionPoly(w[i + 1]));
      for (const auto& [m, c] : br.terms()) {
        NablaWord shorter(w.begin(), w.begin() + static_cast<long>(i));
        shorter.push_back(m);
        shorter.insert(shorter.end(), w.begin() + static_cast<long>(i) + 2, w.end());
        OperatorSum term = normalize(shorter);
        out += term * c;
      }
    }
    return memo_.emplace(w, std::move(out)).first->second;
  }

 private:
  std::map<NablaWord, OperatorSum> memo_;
};

Rational distinct_orderings(const NablaWord& sorted) {
  Rational n = factorial(static_cast<int>(sorted.size()));
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    n /= factorial(static_cast<int>(j - i));
    i = j;
  }
  return n;
}

}  // namespace

OperatorSum witt_normal_form(const OperatorSum& s) {
  WittNormalizer norm;
  OperatorSum out;
  for (const auto& [w, c] : s.terms()) out += norm.normalize(w) * c;
  return out;
}

SymmetrizedSum symmetrize(const OperatorSum& s) {
  WittNormalizer norm;
  OperatorSum rest;
  for (const auto& [w, c] : s.terms()) rest += norm.normalize(w) * c;
  SymmetrizedSum out;
  // Peel off the longest words first: the symmetrized word normalizes to
  // (#orderings) * sorted word + strictly shorter words.
  while (!rest.is_zero()) {
    std::size_t longest = 0;
    for (const auto& [w, c] : rest.terms()) longest = std::max(longest, w.size());
    std::vector<std::pair<NablaWord, Rational>> top;
    for (const auto& [w, c] : rest.terms())
      if (w.size() == longest) top.emplace_back(w, c);
    for (const auto& [w, c] : top) {
      Rational b = c / distinct_orderings(w);
      out[w] += b;
      NablaWord perm = w;
      do {
        rest -= norm.normalize(perm) * b;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

SymmetrizedSum flip_single_derivatives(const SymmetrizedSum& s) {
  SymmetrizedSum out;
  for (const auto& [w, c] : s) out[w] = (w.size() % 2 == 0) ? c : -c;
  return out;
}

std::string to_string(const SymmetrizedSum& s) {
  if (s.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : s) {
    out += coeff_prefix(c, first) + "Sym" + word_string(w);
    first = false;
  }
  return out;
}

std::vector<OperatorSum> composition_check(int max_order) {
  if (max_order < 1) throw std::domain_error("composition_check: order must be >= 1");
  std::vector<OperatorSum> box, tbox;
  for (int m = 0; m <= max_order; ++m) {
    box.push_back(derive_box(m));
    tbox.push_back(derive_tbox(m));
  }
  WittNormalizer norm;
  std::vector<OperatorSum> out;
  for (int r = 1; r <= max_order; ++r) {
    OperatorSum total;
    for (int m = 0; m <= r; ++m) {
      Rational w = Rational(1) / (factorial(m) * factorial(r - m));
      total += (box[m] * tbox[r - m]) * w;
    }
    OperatorSum normal;
    for (const auto& [w, c] : total.terms()) normal += norm.normalize(w) * c;
    out.push_back(std::move(normal));
  }
  return out;
}

OperatorSum scale_directions(const OperatorSum& s, const Rational& a) {
  OperatorSum out;
  for (const auto& [w, c] : s.terms()) {
    int degree = 0;
    for (const auto& m : w) degree += m.degree();
    out.add(w, c * pow(a, degree));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Specialization at hhat_{k,w}

DeltaSum specialize(const OperatorSum& s, int k) {
  if (k < 2) throw std::domain_error("specialize: k must be >= 2");
  DeltaSum out;
  for (const auto& [w, c] : s.terms()) {
    DeltaWord dw;
    Rational coeff = c;
    for (const auto& m : w) {
      // d^a (z-w)^{1-k} = (1-k)_a (z-w)^{1-k-a}; (z-w)^p = -h_{p-1,w}.
      Rational a(1);
      int p = 0;
      for (std::size_t i = 0; i < m.exps().size(); ++i) {
        int e = m.exps()[i];
        if (e == 0) continue;
        a *= pow(falling_factorial(1 - k, static_cast<int>(i)), e);
        p += e * (1 - k - static_cast<int>(i));
      }
      coeff *= -a;
      dw.labels.push_back(p - 1);
    }
    if (coeff.is_zero()) continue;
    out[dw] += coeff;
    if (out[dw].is_zero()) out.erase(dw);
  }
  return out;
}

DeltaSum specialize_hypotrochoid(int m, int k) {
  if (m < 1) throw std::domain_error("specialize_hypotrochoid: m must be >= 1");
  return specialize(tbox_closed(m), k);
}

DeltaSum conjugate(const DeltaSum& s) {
  DeltaSum out;
  for (const auto& [w, c] : s) {
    DeltaWord flipped = w;
    flipped.antiholomorphic = !w.antiholomorphic;
    out[flipped] = c;
  }
  return out;
}

std::map<ModeWord, Rational> to_mode_words(const DeltaSum& s) {
  std::map<ModeWord, Rational> out;
  for (const auto& [w, c] : s) {
    if (w.antiholomorphic)
      throw std::invalid_argument("to_mode_words: antiholomorphic word has no holomorphic mode");
    out[w.labels] += c;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::string to_string(const DeltaSum& s) {
  if (s.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : s) {
    out += coeff_prefix(c, first);
    first = false;
    for (std::size_t i = 0; i < w.labels.size(); ++i) {
      out += w.antiholomorphic ? "Dbar[h_" : "D[h_";
      out += std::to_string(w.labels[i]) + "]";
    }
  }
  return out;
}

}  // namespace hvir
