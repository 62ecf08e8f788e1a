#pragma once

#include "hvir/point_rational.hpp"
#include "hvir/virasoro.hpp"

#include <string>
#include <vector>

namespace hvir {

/// A state of the identity module inserted at a symbolic point.
struct Insertion {
  PBWVector state;
  std::string point;
};

/// Vacuum correlation function on the sphere, exact in c and the points.
///
/// Peels the leftmost mode L_{-k} off the first non-vacuum insertion and
/// moves it onto the others:
///   <(L_{-k} v)(w0) prod u_i(w_i)> =
///     - sum_i sum_{p>=0} binom(1-k, p) (w_i - w0)^{1-k-p} <v(w0) .. (L_{p-1} u_i)(w_i) ..>,
/// where L_{-1} acts as d/dw_i and L_0 as the weight. Throws
/// std::domain_error when two insertions share a point.
PointRational sphere_correlator(const std::vector<Insertion>& insertions);

/// True iff every ordering of the insertions gives the same correlator.
bool permutation_invariance(const std::vector<Insertion>& insertions);

/// T_{k,1} = L_{-k} 1.
PBWVector tk1_state(int k);

/// (c/2) / ((k-2)! (k'-2)!) d_x^{k-2} d_y^{k'-2} (x - y)^{-4} in closed form.
PointRational tk1_two_point_oracle(int k, int k_prime, const std::string& x = "x",
                                   const std::string& y = "y");

/// Symbolic check that <T T> and <T T T> style correlators are invariant
/// under w -> 1/w with the covariance factor of each insertion weight.
bool inversion_invariance(const std::vector<Insertion>& insertions);

}  // namespace hvir
