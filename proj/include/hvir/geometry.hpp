#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <vector>

namespace hvir {

using Complex = std::complex<double>;

/// Serial reference or OpenMP-parallel evaluation of a numeric kernel; both
/// give identical results.
enum class Execution { kSerial, kParallel };

/// Parameters of the curve w + eps e^{i theta} (b e^{i alpha} + b^{1-k} e^{(1-k) i alpha}).
struct HypotrochoidSpec {
  int k = 2;
  Complex w{0.0, 0.0};
  double eps = 1.0;
  double theta = 0.0;
  double b = 2.0;

  /// Throws std::invalid_argument unless k >= 2, eps > 0, b > 0.
  void validate() const;
};

struct CurveSamples {
  std::vector<double> alpha;
  std::vector<Complex> points;
};

Complex curve_point(const HypotrochoidSpec& spec, double alpha);
/// dz/d alpha.
Complex curve_tangent(const HypotrochoidSpec& spec, double alpha);

/// g(z) = z + eps^k e^{k i theta} / (z - w)^{k-1}; throws std::domain_error at z = w.
Complex map_eval(const HypotrochoidSpec& spec, Complex z);
Complex map_derivative(const HypotrochoidSpec& spec, Complex z);

/// Uniform grid alpha_j = 2 pi j / n, j = 0..n-1.
CurveSamples sample_curve(const HypotrochoidSpec& spec, int n_samples);

/// (k-1)^{1/k}.
double cusp_threshold_b(int k);

struct CuspThreshold {
  double b_star = 0.0;
  std::vector<double> cusp_angles;
};
CuspThreshold cusp_threshold(int k);

/// Number of pairs of non-adjacent segments of the closed polyline that meet.
long count_self_intersections(const std::vector<Complex>& polyline, Execution ex = Execution::kParallel);

/// Twice the signed area of the closed polyline (positive when counterclockwise).
double signed_area2(const std::vector<Complex>& polyline);

/// True iff the sampled closed curve has no self-intersection and winds
/// counterclockwise around w. At b within 1e-12 (relative) of the cusp
/// threshold the answer is false. Throws std::invalid_argument for
/// n_samples < 64.
bool simplicity_check(const HypotrochoidSpec& spec, int n_samples = 4096,
                      Execution ex = Execution::kParallel);

/// max_alpha |map_eval(w + b eps e^{i(theta+alpha)}) - curve_point(alpha)| on n points.
double circle_image_error(const HypotrochoidSpec& spec, int n_samples, Execution ex = Execution::kParallel);

/// Largest distance from a point of `from` to its nearest point of `to`.
double max_nearest_distance(const std::vector<Complex>& from, const std::vector<Complex>& to,
                            Execution ex = Execution::kParallel);

/// Rotation by 2 pi / k about w and reflection across the line through w at
/// angle theta both map the sampled point set onto itself within tolerance.
bool dk_symmetry_check(const HypotrochoidSpec& spec, double tolerance, int n_samples = 840,
                       Execution ex = Execution::kParallel);

/// min |g'(z)| over the circles |z - w| = r eps, for each r in radii.
double min_map_derivative(const HypotrochoidSpec& spec, const std::vector<double>& radii, int n_angles);

/// CSV with header "alpha,re,im"; full double precision.
void write_curve_csv(const HypotrochoidSpec& spec, int n_samples, std::ostream& out);
/// SVG 1.1 path (imaginary axis up); `comment` is embedded verbatim.
void write_curve_svg(const HypotrochoidSpec& spec, int n_samples, std::ostream& out,
                     const std::string& comment = "");

}  // namespace hvir
