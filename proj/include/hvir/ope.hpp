#pragma once

#include "hvir/basis.hpp"
#include "hvir/virasoro.hpp"

#include <vector>

namespace hvir {

/// Coefficient of (x - y)^{-pole_order} in T_{k,1}(x) B(y).
struct OpeTerm {
  int pole_order = 0;
  /// Coefficient field at y as an identity-module vector.
  PBWVector state;
  /// The same field re-expressed through hypotrochoid fields; when
  /// resolved is false the state lies beyond the weight cap or outside
  /// their span and only `state` is meaningful.
  bool resolved = false;
  FieldCombination combination;
};

/// T_{k,1}(x) B(y) = sum_n binom(-n-2, k-2) (x-y)^{-n-k} (L_n B)(y), from
/// T_{k,1} = d^{k-2} T / (k-2)!. Returns the singular part (pole order >= 1)
/// followed by `depth` regular orders 0, -1, ..., highest pole first.
std::vector<OpeTerm> ope_with(int k, const PBWVector& b, int depth = 0, int weight_cap = 16);

/// ope_with(k, T_{k',1}, depth).
std::vector<OpeTerm> ope_Tk1(int k, int k_prime, int depth = 0, int weight_cap = 16);

}  // namespace hvir
