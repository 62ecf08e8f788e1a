#include "hvir/virasoro.hpp"

#include "hvir/composition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hvir {

bool is_canonical(const ModeWord& word) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] > -2) return false;
    if (i > 0 && word[i - 1] > word[i]) return false;
  }
  return true;
}

int word_weight(const ModeWord& word) { return -std::accumulate(word.begin(), word.end(), 0); }

PBWVector PBWVector::vacuum() { return word({}); }

PBWVector PBWVector::word(ModeWord w, const CPoly& coeff) {
  PBWVector v;
  v.add(w, coeff);
  return v;
}

CPoly PBWVector::coeff(const ModeWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? CPoly() : it->second;
}

void PBWVector::add(const ModeWord& w, const CPoly& coeff) {
  if (!is_canonical(w)) throw std::invalid_argument("PBWVector: word is not canonical");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int PBWVector::homogeneous_weight() const {
  int weight = -1;
  for (const auto& [w, c] : terms_) {
    int ww = word_weight(w);
    if (weight >= 0 && ww != weight) return -1;
    weight = ww;
  }
  return weight;
}

PBWVector& PBWVector::operator+=(const PBWVector& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

PBWVector& PBWVector::operator-=(const PBWVector& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

PBWVector& PBWVector::operator*=(const CPoly& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

std::string PBWVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total word first reads closest to the usual displays.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [w, c] = *it;
    std::string coeff = c.to_string();
    bool neg = c.is_constant() && c.leading().sign() < 0;
    if (neg) coeff = (-c).to_string();
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    bool unit = c.is_constant() && (c.leading().is_one() || (-c).leading().is_one());
    if (!unit) os << (c.is_constant() ? coeff : "(" + coeff + ")") << " ";
    std::size_t i = 0;
    while (i < w.size()) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      os << "L_{" << w[i] << "}";
      if (j - i > 1) os << "^" << (j - i);
      i = j;
    }
    os << (w.empty() ? "1" : " 1");
  }
  return os.str();
}

Bracket vir_bracket(int m, int n) {
  Bracket b{m + n, Rational(m - n), CPoly()};
  if (m + n == 0) {
    long mm = m;
    b.central = CPoly::x() * Rational(mm * (mm * mm - 1), 12);
  }
  return b;
}

namespace {

// Per-thread memo of L_n applied to a canonical word.
using ModeKey = std::pair<int, ModeWord>;
thread_local std::map<ModeKey, PBWVector> apply_memo;

PBWVector apply_mode_word(int n, const ModeWord& w) {
  if (w.empty()) {
    if (n >= -1) return {};
    return PBWVector::word({n});
  }
  if (n <= w.front()) {
    ModeWord nw;
    nw.reserve(w.size() + 1);
    nw.push_back(n);
    nw.insert(nw.end(), w.begin(), w.end());
    return PBWVector::word(std::move(nw));
  }
  if (n == 0) return PBWVector::word(w, CPoly(word_weight(w)));

  ModeKey key{n, w};
  if (auto it = apply_memo.find(key); it != apply_memo.end()) return it->second;

  const int a = w.front();
  ModeWord rest(w.begin() + 1, w.end());
  PBWVector rest_vec = PBWVector::word(rest);

  // L_n L_a rest = L_a (L_n rest) + [L_n, L_a] rest.
  PBWVector result = apply_mode(a, apply_mode_word(n, rest));
  Bracket br = vir_bracket(n, a);
  if (!br.coefficient.is_zero()) result += apply_mode_word(br.mode, rest) * CPoly(br.coefficient);
  if (!br.central.is_zero()) result += rest_vec * br.central;

  apply_memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

PBWVector apply_mode(int n, const PBWVector& v) {
  PBWVector out;
  for (const auto& [w, c] : v.terms()) out += apply_mode_word(n, w) * c;
  return out;
}

PBWVector normal_order(const WordSum& input) {
  PBWVector out;
  for (const auto& [word, coeff] : input) {
    if (coeff.is_zero()) continue;
    PBWVector v = PBWVector::vacuum();
    for (auto it = word.rbegin(); it != word.rend() && !v.is_zero(); ++it) v = apply_mode(*it, v);
    out += v * coeff;
  }
  return out;
}

PBWVector l_minus_one_derivative(const PBWVector& v) { return apply_mode(-1, v); }

CPoly shapovalov(const PBWVector& u, const PBWVector& v) {
  CPoly total;
  for (const auto& [w, cu] : u.terms()) {
    // <L_{a1}..L_{aj} 1, v> = <1, L_{-aj} .. L_{-a1} v>; L_{-a1} acts first.
    PBWVector x = v;
    for (auto it = w.begin(); it != w.end() && !x.is_zero(); ++it) x = apply_mode(-*it, x);
    total += cu * x.vacuum_coeff();
  }
  return total;
}

std::map<ModeWord, Rational> descendant_terms(int k, int m) {
  if (k < 2) throw std::domain_error("descendant: k must be >= 2");
  if (m < 1) throw std::domain_error("descendant: m must be >= 1");
  std::map<ModeWord, Rational> terms;
  for (const auto& lambda : enumerate_compositions(m)) {
    ModeWord w;
    for (auto it = lambda.parts().rbegin(); it != lambda.parts().rend(); ++it) w.push_back(-k * *it);
    Rational coeff = c_coeff(lambda) * pow(Rational(k - 1), m - lambda.length());
    terms[w] += coeff;
  }
  return terms;
}

PBWVector descendant(int k, int m) {
  WordSum input;
  for (const auto& [w, c] : descendant_terms(k, m)) input.emplace_back(w, CPoly(c));
  return normal_order(input);
}

}  // namespace hvir
