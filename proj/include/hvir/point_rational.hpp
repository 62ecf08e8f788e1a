#pragma once

#include "hvir/mpoly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hvir {

/// Rational function of insertion points N / prod_{i<j} (w_i - w_j)^{e_ij},
/// with N in Q[c][w]. Points are the sorted labels; after canonicalize() no
/// denominator factor divides N, so equal functions have equal fields.
class PointRational {
 public:
  using Pair = std::pair<int, int>;

  PointRational() : PointRational(std::vector<std::string>{}) {}
  explicit PointRational(std::vector<std::string> labels);
  PointRational(std::vector<std::string> labels, const CPoly& constant);

  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(const std::string& label) const;
  const MPoly& numerator() const { return num_; }
  /// Exponent e_ij of (w_i - w_j), i < j; only positive entries are stored.
  const std::map<Pair, int>& denominator() const { return den_; }
  MPoly denominator_poly() const;
  bool is_zero() const { return num_.is_zero(); }

  /// (w_i - w_j)^e for any integer e and i != j.
  static PointRational difference_power(const std::vector<std::string>& labels, int i, int j, int e);

  PointRational derivative(int var) const;
  /// Value at rational points (one per label); throws std::domain_error
  /// where a denominator factor vanishes.
  CPoly eval(const std::vector<Rational>& at) const;

  PointRational& operator+=(const PointRational& o);
  PointRational& operator-=(const PointRational& o);
  PointRational& operator*=(const CPoly& s);
  friend PointRational operator+(PointRational a, const PointRational& b) { return a += b; }
  friend PointRational operator-(PointRational a, const PointRational& b) { return a -= b; }
  friend PointRational operator*(PointRational a, const CPoly& s) { return a *= s; }
  friend PointRational operator*(const PointRational& a, const PointRational& b);
  friend bool operator==(const PointRational& a, const PointRational& b);

  /// e.g. "(c/2) / (w1 - w2)^4".
  std::string to_string() const;
  std::string numerator_string() const;
  std::string denominator_string() const;

 private:
  void canonicalize();
  std::vector<std::string> labels_;
  MPoly num_;
  std::map<Pair, int> den_;
};

/// General quotient of polynomials in the point variables, used where the
/// denominator is not a product of point differences.
struct PolyFraction {
  MPoly num;
  MPoly den;
};

/// Equality by cross-multiplication.
bool equivalent(const PolyFraction& a, const PolyFraction& b);

/// f(1/w_1, ..., 1/w_n) * prod_i w_i^{-2 h_i}: the image of a correlator
/// under the inversion w -> 1/w with covariance factors for weights h_i.
PolyFraction inversion_transform(const PointRational& f, const std::vector<int>& weights);

PolyFraction as_fraction(const PointRational& f);

}  // namespace hvir
