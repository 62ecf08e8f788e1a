#include "hvir/ope.hpp"

#include <stdexcept>

namespace hvir {

std::vector<OpeTerm> ope_with(int k, const PBWVector& b, int depth, int weight_cap) {
  if (k < 2) throw std::domain_error("ope: k must be >= 2");
  if (depth < 0) throw std::domain_error("ope: depth must be >= 0");
  const int weight = b.homogeneous_weight();
  if (weight < 0) throw std::invalid_argument("ope: B must be a nonzero homogeneous state");

  std::vector<OpeTerm> out;
  // L_n B vanishes for n > weight, so the highest pole is weight + k.
  for (int pole = weight + k; pole >= 1 - depth; --pole) {
    const int n = pole - k;
    PBWVector state = apply_mode(n, b) * CPoly(binomial(-n - 2, k - 2));
    if (state.is_zero()) continue;
    OpeTerm term;
    term.pole_order = pole;
    term.state = state;
    if (state.homogeneous_weight() <= weight_cap) {
      BasisSolution sol = hypotrochoid_basis_solve(state, weight_cap);
      term.resolved = sol.representable;
      term.combination = sol.combination;
    }
    out.push_back(std::move(term));
  }
  return out;
}

std::vector<OpeTerm> ope_Tk1(int k, int k_prime, int depth, int weight_cap) {
  if (k_prime < 2) throw std::domain_error("ope: k' must be >= 2");
  return ope_with(k, PBWVector::word({-k_prime}), depth, weight_cap);
}

}  // namespace hvir
