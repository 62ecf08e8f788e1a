#include "hvir/composition.hpp"

#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hvir {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::domain_error("Composition: no parts");
  for (int p : parts_)
    if (p < 1) throw std::domain_error("Composition: part < 1");
}

int Composition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Composition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ")";
  return os.str();
}

namespace {

void enumerate_into(int remaining, std::vector<int>& prefix, std::vector<Composition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int first = 1; first <= remaining; ++first) {
    prefix.push_back(first);
    enumerate_into(remaining - first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Composition> enumerate_compositions(int m) {
  if (m <= 0) throw std::domain_error("enumerate_compositions: m must be >= 1");
  std::vector<Composition> out;
  out.reserve(std::size_t{1} << (m - 1));
  std::vector<int> prefix;
  enumerate_into(m, prefix, out);
  return out;
}

Rational CoefficientTable::weight_recursion(const Composition& lambda) {
  return lookup_or_compute(lambda.parts(), false);
}

Rational CoefficientTable::length_recursion(const Composition& lambda) {
  return lookup_or_compute(lambda.parts(), true);
}

std::size_t CoefficientTable::cached() const {
  std::shared_lock lock(mutex_);
  return weight_memo_.size() + length_memo_.size();
}

Rational CoefficientTable::lookup_or_compute(const std::vector<int>& parts, bool by_length) {
  int weight = std::accumulate(parts.begin(), parts.end(), 0);
  bool cacheable = weight <= weight_cap_;
  auto& memo = by_length ? length_memo_ : weight_memo_;
  if (cacheable) {
    std::shared_lock lock(mutex_);
    if (auto it = memo.find(parts); it != memo.end()) return it->second;
  }
  Rational value = by_length ? compute_length(parts) : compute_weight(parts);
  if (cacheable) {
    std::unique_lock lock(mutex_);
    memo.emplace(parts, value);
  }
  return value;
}

Rational CoefficientTable::compute_weight(const std::vector<int>& parts) {
  if (parts.size() == 1 && parts[0] == 1) return Rational(1);
  Rational total(0);
  if (parts.back() == 1) {
    std::vector<int> shorter(parts.begin(), parts.end() - 1);
    total += lookup_or_compute(shorter, false);
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 1) continue;
    std::vector<int> lowered = parts;
    --lowered[i];
    total += Rational(parts[i] - 1) * lookup_or_compute(lowered, false);
  }
  return total;
}

Rational CoefficientTable::compute_length(const std::vector<int>& parts) {
  const std::size_t j = parts.size();
  if (j == 1) return factorial(parts[0] - 1);

  // Sum over (l_1..l_{j-1}) with 1 <= l_i <= lambda_i, and l_j = 1.
  Rational total(0);
  std::vector<int> ell(j - 1, 1);
  while (true) {
    int steps = parts[j - 1] - 1;
    Rational weight(1);
    for (std::size_t i = 0; i + 1 < j; ++i) {
      steps += parts[i] - ell[i];
      weight *= factorial(parts[i] - 1) / (factorial(parts[i] - ell[i]) * factorial(ell[i] - 1));
    }
    total += factorial(steps) * weight * lookup_or_compute(ell, true);

    std::size_t pos = 0;
    while (pos < ell.size() && ell[pos] == parts[pos]) ell[pos++] = 1;
    if (pos == ell.size()) break;
    ++ell[pos];
  }
  return total;
}

namespace {
CoefficientTable& shared_table() {
  static CoefficientTable table;
  return table;
}
}  // namespace

Rational c_coeff(const Composition& lambda) { return shared_table().weight_recursion(lambda); }

Rational c_coeff_alt(const Composition& lambda) { return shared_table().length_recursion(lambda); }

}  // namespace hvir
