#include "hvir/ward.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hvir {

namespace {

class ContourRecursion {
 public:
  explicit ContourRecursion(std::vector<std::string> labels) : labels_(std::move(labels)) {}

  const PointRational& eval(const std::vector<ModeWord>& words) {
    if (auto it = memo_.find(words); it != memo_.end()) return it->second;
    PointRational result = compute(words);
    return memo_.emplace(words, std::move(result)).first->second;
  }

 private:
  PointRational compute(const std::vector<ModeWord>& words) {
    const int n = static_cast<int>(words.size());
    int first = 0;
    while (first < n && words[first].empty()) ++first;
    if (first == n) return PointRational(labels_, CPoly(1));

    const int k = -words[first].front();
    std::vector<ModeWord> stripped = words;
    stripped[first].erase(stripped[first].begin());

    PointRational total(labels_);
    for (int i = 0; i < n; ++i) {
      if (i == first || words[i].empty()) continue;
      const int weight = word_weight(words[i]);
      for (int p = 0; p <= weight + 1; ++p) {
        PointRational term(labels_);
        if (p == 0) {
          term = eval(stripped).derivative(i);
        } else if (p == 1) {
          term = eval(stripped) * CPoly(weight);
        } else {
          PBWVector moved = apply_mode(p - 1, PBWVector::word(words[i]));
          for (const auto& [w, c] : moved.terms()) {
            std::vector<ModeWord> next = stripped;
            next[i] = w;
            term += eval(next) * c;
          }
        }
        if (term.is_zero()) continue;
        PointRational factor = PointRational::difference_power(labels_, i, first, 1 - k - p);
        total -= factor * term * CPoly(binomial(1 - k, p));
      }
    }
    return total;
  }

  std::vector<std::string> labels_;
  std::map<std::vector<ModeWord>, PointRational> memo_;
};

}  // namespace

PointRational sphere_correlator(const std::vector<Insertion>& insertions) {
  std::vector<std::string> labels;
  for (const auto& ins : insertions) labels.push_back(ins.point);
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw std::domain_error("sphere_correlator: coincident insertion points");

  std::vector<const PBWVector*> by_point(labels.size());
  for (const auto& ins : insertions) {
    auto idx = std::lower_bound(labels.begin(), labels.end(), ins.point) - labels.begin();
    by_point[idx] = &ins.state;
  }

  ContourRecursion rec(labels);
  PointRational total(labels);
  std::vector<ModeWord> words(labels.size());
  auto expand = [&](auto&& self, std::size_t i, const CPoly& coeff) -> void {
    if (i == labels.size()) {
      total += rec.eval(words) * coeff;
      return;
    }
    for (const auto& [w, c] : by_point[i]->terms()) {
      words[i] = w;
      self(self, i + 1, coeff * c);
    }
  };
  expand(expand, 0, CPoly(1));
  return total;
}

bool permutation_invariance(const std::vector<Insertion>& insertions) {
  if (insertions.size() > 7) throw std::invalid_argument("permutation_invariance: too many insertions");
  const PointRational reference = sphere_correlator(insertions);
  std::vector<std::size_t> order(insertions.size());
  std::iota(order.begin(), order.end(), 0);
  while (std::next_permutation(order.begin(), order.end())) {
    std::vector<Insertion> permuted;
    for (std::size_t i : order) permuted.push_back(insertions[i]);
    if (!(sphere_correlator(permuted) == reference)) return false;
  }
  return true;
}

PBWVector tk1_state(int k) {
  if (k < 2) throw std::domain_error("tk1_state: k must be >= 2");
  return PBWVector::word({-k});
}

PointRational tk1_two_point_oracle(int k, int k_prime, const std::string& x, const std::string& y) {
  if (k < 2 || k_prime < 2) throw std::domain_error("tk1_two_point_oracle: k must be >= 2");
  if (x == y) throw std::domain_error("tk1_two_point_oracle: coincident points");
  const int a = k - 2;
  const int b = k_prime - 2;
  std::vector<std::string> labels{x, y};
  std::sort(labels.begin(), labels.end());
  const int ix = labels[0] == x ? 0 : 1;
  const int iy = 1 - ix;
  // d_x^a (x-y)^{-4} then d_y^b, the latter bringing a sign per derivative.
  Rational coeff = falling_factorial(-4, a) * falling_factorial(-4 - a, b);
  if (b % 2 != 0) coeff = -coeff;
  coeff /= factorial(a) * factorial(b);
  CPoly c_half = CPoly::x() / Rational(2);
  return PointRational::difference_power(labels, ix, iy, -4 - a - b) * (c_half * coeff);
}

bool inversion_invariance(const std::vector<Insertion>& insertions) {
  PointRational f = sphere_correlator(insertions);
  std::vector<int> weights(f.labels().size(), 0);
  for (const auto& ins : insertions) {
    int w = ins.state.is_zero() ? 0 : ins.state.homogeneous_weight();
    if (w < 0) throw std::invalid_argument("inversion_invariance: inhomogeneous insertion");
    weights[f.index_of(ins.point)] = w;
  }
  return equivalent(inversion_transform(f, weights), as_fraction(f));
}

}  // namespace hvir
