#pragma once

#include "hvir/rational.hpp"

#include <map>
#include <shared_mutex>
#include <string>
#include <vector>

namespace hvir {

/// Ordered partition (composition) of a positive integer: every part >= 1.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return parts_[i]; }

  std::string to_string() const;

  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

/// All compositions of m in lexicographic order of their parts
/// ((1,1,1) < (1,2) < (2,1) < (3)); there are 2^(m-1) of them.
/// Throws std::domain_error for m <= 0.
std::vector<Composition> enumerate_compositions(int m);

/// Memo table for the coefficients C_lambda.
///
/// Entries are kept only for compositions of weight <= weight_cap; heavier
/// compositions are still computed, just not cached. Lookups and inserts
/// are guarded, so one table may be shared between threads.
class CoefficientTable {
 public:
  explicit CoefficientTable(int weight_cap = 16) : weight_cap_(weight_cap) {}

  /// C_lambda by the recursion on the weight:
  ///   C(l1..lj) = [lj == 1] C(l1..l(j-1)) + sum_i (li - 1) C(.., li - 1, ..),
  /// with C((1)) = 1.
  Rational weight_recursion(const Composition& lambda);

  /// C_lambda by the simultaneous recursion on weight and length, starting
  /// from C((n)) = (n-1)!.
  Rational length_recursion(const Composition& lambda);

  int weight_cap() const { return weight_cap_; }
  std::size_t cached() const;

 private:
  Rational lookup_or_compute(const std::vector<int>& parts, bool by_length);
  Rational compute_weight(const std::vector<int>& parts);
  Rational compute_length(const std::vector<int>& parts);

  int weight_cap_;
  mutable std::shared_mutex mutex_;
  std::map<std::vector<int>, Rational> weight_memo_;
  std::map<std::vector<int>, Rational> length_memo_;
};

/// C_lambda via the weight recursion (shared process-wide table).
Rational c_coeff(const Composition& lambda);
/// C_lambda via the weight-and-length recursion (shared process-wide table).
Rational c_coeff_alt(const Composition& lambda);

}  // namespace hvir
