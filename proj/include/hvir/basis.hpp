#pragma once

#include "hvir/virasoro.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace hvir {

/// d^{derivative_order} T_{k,m}.
struct DescendantSymbol {
  int k = 2;
  int m = 1;
  int derivative_order = 0;

  int weight() const { return k * m + derivative_order; }
  std::string to_string() const;
  friend auto operator<=>(const DescendantSymbol&, const DescendantSymbol&) = default;
};

/// Linear combination of hypotrochoid fields (and the identity) with
/// coefficients in Q[c].
struct FieldCombination {
  CPoly identity;
  std::map<DescendantSymbol, CPoly> terms;

  bool is_zero() const;
  CPoly coeff(const DescendantSymbol& s) const;
  void add(const DescendantSymbol& s, const CPoly& c);
  /// True when no coefficient depends on c.
  bool is_c_independent() const;
  std::string to_string() const;
  friend bool operator==(const FieldCombination&, const FieldCombination&) = default;
};

/// The module vector L_{-1}^n T_{k,m} of a symbol.
PBWVector field_vector(const DescendantSymbol& s);

/// Sum of the module vectors of a combination.
PBWVector expand(const FieldCombination& combination);

/// Fields used to represent weight-N vectors: T_{N,1} and d^n T_{k,m} with
/// m >= 2, km + n = N. Derivatives of T_{k,1} are omitted because
/// L_{-1}^n L_{-k} 1 is a multiple of L_{-k-n} 1.
std::vector<DescendantSymbol> basis_candidates(int weight);

struct BasisSolution {
  bool representable = false;
  FieldCombination combination;
};

/// Solves target = sum of hypotrochoid fields exactly over Q(c).
///
/// The target must be homogeneous (std::invalid_argument otherwise) with
/// weight <= weight_cap (std::domain_error otherwise). A target outside the
/// span is reported with representable = false; it is not an error.
BasisSolution hypotrochoid_basis_solve(const PBWVector& target, int weight_cap = 16);

}  // namespace hvir
