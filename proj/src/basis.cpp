#include "hvir/basis.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace hvir {

std::string DescendantSymbol::to_string() const {
  std::ostringstream os;
  if (derivative_order == 1) os << "d";
  if (derivative_order > 1) os << "d^" << derivative_order;
  os << "T[" << k << "," << m << "]";
  return os.str();
}

bool FieldCombination::is_zero() const { return identity.is_zero() && terms.empty(); }

CPoly FieldCombination::coeff(const DescendantSymbol& s) const {
  auto it = terms.find(s);
  return it == terms.end() ? CPoly() : it->second;
}

void FieldCombination::add(const DescendantSymbol& s, const CPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

bool FieldCombination::is_c_independent() const {
  if (!identity.is_constant()) return false;
  for (const auto& [s, c] : terms)
    if (!c.is_constant()) return false;
  return true;
}

std::string FieldCombination::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](CPoly c, const std::string& name) {
    const bool negative = c.is_constant() && c.coeff(0).sign() < 0;
    if (negative) c = -c;
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    if (c == CPoly(1)) {
      os << name;
    } else {
      os << (c.is_constant() ? c.to_string() : "(" + c.to_string() + ")") << "*" << name;
    }
  };
  if (!identity.is_zero()) emit(identity, "1");
  for (const auto& [s, c] : terms) emit(c, s.to_string());
  return os.str();
}

PBWVector field_vector(const DescendantSymbol& s) {
  PBWVector v = descendant(s.k, s.m);
  for (int i = 0; i < s.derivative_order; ++i) v = l_minus_one_derivative(v);
  return v;
}

PBWVector expand(const FieldCombination& combination) {
  PBWVector v = PBWVector::vacuum() * combination.identity;
  for (const auto& [s, c] : combination.terms) v += field_vector(s) * c;
  return v;
}

std::vector<DescendantSymbol> basis_candidates(int weight) {
  std::vector<DescendantSymbol> out;
  if (weight >= 2) out.push_back({weight, 1, 0});
  for (int m = 2; 2 * m <= weight; ++m)
    for (int k = 2; k * m <= weight; ++k) out.push_back({k, m, weight - k * m});
  return out;
}

namespace {

struct CandidateMatrix {
  std::vector<DescendantSymbol> symbols;
  std::vector<PBWVector> vectors;
};

const CandidateMatrix& candidates_at(int weight) {
  thread_local std::map<int, CandidateMatrix> cache;
  if (auto it = cache.find(weight); it != cache.end()) return it->second;
  CandidateMatrix cm;
  cm.symbols = basis_candidates(weight);
  for (const auto& s : cm.symbols) cm.vectors.push_back(field_vector(s));
  return cache.emplace(weight, std::move(cm)).first->second;
}

}  // namespace

BasisSolution hypotrochoid_basis_solve(const PBWVector& target, int weight_cap) {
  BasisSolution solution;
  if (target.is_zero()) {
    solution.representable = true;
    return solution;
  }
  const int weight = target.homogeneous_weight();
  if (weight < 0) throw std::invalid_argument("hypotrochoid_basis_solve: target is not homogeneous");
  if (weight > weight_cap)
    throw std::domain_error("hypotrochoid_basis_solve: weight " + std::to_string(weight) +
                            " exceeds cap " + std::to_string(weight_cap));
  if (weight == 0) {
    solution.representable = true;
    solution.combination.identity = target.vacuum_coeff();
    return solution;
  }

  const CandidateMatrix& cm = candidates_at(weight);
  std::set<ModeWord> row_words;
  for (const auto& v : cm.vectors)
    for (const auto& [w, c] : v.terms()) row_words.insert(w);
  for (const auto& [w, c] : target.terms()) row_words.insert(w);
  std::vector<ModeWord> rows(row_words.begin(), row_words.end());

  const std::size_t n_rows = rows.size();
  const std::size_t n_cols = cm.symbols.size();
  std::vector<std::vector<Rational>> a(n_rows, std::vector<Rational>(n_cols, Rational(0)));
  std::vector<CPoly> rhs(n_rows);
  for (std::size_t r = 0; r < n_rows; ++r) {
    for (std::size_t col = 0; col < n_cols; ++col) {
      CPoly entry = cm.vectors[col].coeff(rows[r]);
      if (!entry.is_constant())
        throw std::logic_error("hypotrochoid_basis_solve: c-dependent field vector");
      a[r][col] = entry.coeff(0);
    }
    rhs[r] = target.coeff(rows[r]);
  }

  // Reduced row echelon form over Q; the right-hand side rides along in Q[c].
  std::vector<std::size_t> pivot_cols;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n_cols && pivot_row < n_rows; ++col) {
    std::size_t r = pivot_row;
    while (r < n_rows && a[r][col].is_zero()) ++r;
    if (r == n_rows) continue;
    std::swap(a[r], a[pivot_row]);
    std::swap(rhs[r], rhs[pivot_row]);
    Rational inv = Rational(1) / a[pivot_row][col];
    for (auto& x : a[pivot_row]) x *= inv;
    rhs[pivot_row] *= inv;
    for (std::size_t other = 0; other < n_rows; ++other) {
      if (other == pivot_row || a[other][col].is_zero()) continue;
      Rational f = a[other][col];
      for (std::size_t j = 0; j < n_cols; ++j) a[other][j] -= f * a[pivot_row][j];
      rhs[other] -= rhs[pivot_row] * f;
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }
  for (std::size_t r = pivot_row; r < n_rows; ++r)
    if (!rhs[r].is_zero()) return solution;

  solution.representable = true;
  for (std::size_t i = 0; i < pivot_cols.size(); ++i)
    solution.combination.add(cm.symbols[pivot_cols[i]], rhs[i]);
  return solution;
}

}  // namespace hvir
