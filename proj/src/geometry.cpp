#include "hvir/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace hvir {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const Complex kI(0.0, 1.0);

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

int orientation(Complex a, Complex b, Complex c) { return sign_of(cross(b - a, c - a)); }

bool within_box(Complex a, Complex b, Complex p) {
  return std::min(a.real(), b.real()) <= p.real() && p.real() <= std::max(a.real(), b.real()) &&
         std::min(a.imag(), b.imag()) <= p.imag() && p.imag() <= std::max(a.imag(), b.imag());
}

bool segments_meet(Complex p1, Complex p2, Complex q1, Complex q2) {
  if (std::max(p1.real(), p2.real()) < std::min(q1.real(), q2.real()) ||
      std::max(q1.real(), q2.real()) < std::min(p1.real(), p2.real()) ||
      std::max(p1.imag(), p2.imag()) < std::min(q1.imag(), q2.imag()) ||
      std::max(q1.imag(), q2.imag()) < std::min(p1.imag(), p2.imag()))
    return false;
  const int o1 = orientation(p1, p2, q1);
  const int o2 = orientation(p1, p2, q2);
  const int o3 = orientation(q1, q2, p1);
  const int o4 = orientation(q1, q2, p2);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && within_box(p1, p2, q1)) return true;
  if (o2 == 0 && within_box(p1, p2, q2)) return true;
  if (o3 == 0 && within_box(q1, q2, p1)) return true;
  if (o4 == 0 && within_box(q1, q2, p2)) return true;
  return false;
}

long intersections_from(const std::vector<Complex>& pts, long i) {
  const long n = static_cast<long>(pts.size());
  long count = 0;
  const Complex a = pts[i], b = pts[(i + 1) % n];
  for (long j = i + 2; j < n; ++j) {
    if (i == 0 && j == n - 1) continue;  // closing segment is adjacent to the first
    if (segments_meet(a, b, pts[j], pts[(j + 1) % n])) ++count;
  }
  return count;
}

double nearest_distance(const std::vector<Complex>& to, Complex p) {
  double best = std::numeric_limits<double>::infinity();
  for (const Complex& q : to) best = std::min(best, std::norm(p - q));
  return std::sqrt(best);
}

}  // namespace

void HypotrochoidSpec::validate() const {
  if (k < 2) throw std::invalid_argument("hypotrochoid: k must be >= 2");
  if (!(eps > 0.0)) throw std::invalid_argument("hypotrochoid: eps must be positive");
  if (!(b > 0.0)) throw std::invalid_argument("hypotrochoid: b must be positive");
}

Complex curve_point(const HypotrochoidSpec& spec, double alpha) {
  const double k = spec.k;
  const Complex shape = spec.b * std::exp(kI * alpha) +
                        std::pow(spec.b, 1.0 - k) * std::exp((1.0 - k) * kI * alpha);
  return spec.w + spec.eps * std::exp(kI * spec.theta) * shape;
}

Complex curve_tangent(const HypotrochoidSpec& spec, double alpha) {
  const double k = spec.k;
  const Complex shape = kI * spec.b * std::exp(kI * alpha) +
                        (1.0 - k) * kI * std::pow(spec.b, 1.0 - k) * std::exp((1.0 - k) * kI * alpha);
  return spec.eps * std::exp(kI * spec.theta) * shape;
}

Complex map_eval(const HypotrochoidSpec& spec, Complex z) {
  const Complex d = z - spec.w;
  if (d == Complex(0.0)) throw std::domain_error("map_eval: pole at z = w");
  return z + std::pow(spec.eps, spec.k) * std::exp(static_cast<double>(spec.k) * kI * spec.theta) /
                 std::pow(d, spec.k - 1);
}

Complex map_derivative(const HypotrochoidSpec& spec, Complex z) {
  const Complex d = z - spec.w;
  if (d == Complex(0.0)) throw std::domain_error("map_derivative: pole at z = w");
  return 1.0 - static_cast<double>(spec.k - 1) * std::pow(spec.eps, spec.k) *
                   std::exp(static_cast<double>(spec.k) * kI * spec.theta) / std::pow(d, spec.k);
}

CurveSamples sample_curve(const HypotrochoidSpec& spec, int n_samples) {
  if (n_samples < 1) throw std::invalid_argument("sample_curve: need at least one sample");
  CurveSamples s;
  s.alpha.resize(n_samples);
  s.points.resize(n_samples);
  for (int j = 0; j < n_samples; ++j) {
    s.alpha[j] = kTwoPi * j / n_samples;
    s.points[j] = curve_point(spec, s.alpha[j]);
  }
  return s;
}

double cusp_threshold_b(int k) {
  if (k < 2) throw std::invalid_argument("cusp_threshold: k must be >= 2");
  return std::pow(static_cast<double>(k - 1), 1.0 / k);
}

CuspThreshold cusp_threshold(int k) {
  CuspThreshold t;
  t.b_star = cusp_threshold_b(k);
  for (int j = 0; j < k; ++j) t.cusp_angles.push_back(kTwoPi * j / k);
  return t;
}

long count_self_intersections(const std::vector<Complex>& polyline, Execution ex) {
  const long n = static_cast<long>(polyline.size());
  if (n < 4) return 0;
  long total = 0;
  if (ex == Execution::kParallel) {
#pragma omp parallel for reduction(+ : total) schedule(dynamic, 16)
    for (long i = 0; i < n; ++i) total += intersections_from(polyline, i);
  } else {
    for (long i = 0; i < n; ++i) total += intersections_from(polyline, i);
  }
  return total;
}

double signed_area2(const std::vector<Complex>& polyline) {
  double a = 0.0;
  const std::size_t n = polyline.size();
  for (std::size_t i = 0; i < n; ++i) a += cross(polyline[i], polyline[(i + 1) % n]);
  return a;
}

bool simplicity_check(const HypotrochoidSpec& spec, int n_samples, Execution ex) {
  spec.validate();
  if (n_samples < 64) throw std::invalid_argument("simplicity_check: n_samples must be >= 64");
  const double b_star = cusp_threshold_b(spec.k);
  if (std::abs(spec.b - b_star) <= 1e-12 * b_star) return false;
  CurveSamples s = sample_curve(spec, n_samples);
  // Translate so the orientation test is centred on w.
  for (auto& p : s.points) p -= spec.w;
  if (signed_area2(s.points) <= 0.0) return false;
  return count_self_intersections(s.points, ex) == 0;
}

double circle_image_error(const HypotrochoidSpec& spec, int n_samples, Execution ex) {
  spec.validate();
  if (n_samples < 1) throw std::invalid_argument("circle_image_error: need at least one sample");
  double worst = 0.0;
  auto error_at = [&](int j) {
    const double alpha = kTwoPi * j / n_samples;
    const Complex z = spec.w + spec.b * spec.eps * std::exp(kI * (spec.theta + alpha));
    return std::abs(map_eval(spec, z) - curve_point(spec, alpha));
  };
  if (ex == Execution::kParallel) {
#pragma omp parallel for reduction(max : worst)
    for (int j = 0; j < n_samples; ++j) worst = std::max(worst, error_at(j));
  } else {
    for (int j = 0; j < n_samples; ++j) worst = std::max(worst, error_at(j));
  }
  return worst;
}

double max_nearest_distance(const std::vector<Complex>& from, const std::vector<Complex>& to,
                            Execution ex) {
  if (to.empty()) throw std::invalid_argument("max_nearest_distance: empty target set");
  const long n = static_cast<long>(from.size());
  double worst = 0.0;
  if (ex == Execution::kParallel) {
#pragma omp parallel for reduction(max : worst)
    for (long i = 0; i < n; ++i) worst = std::max(worst, nearest_distance(to, from[i]));
  } else {
    for (long i = 0; i < n; ++i) worst = std::max(worst, nearest_distance(to, from[i]));
  }
  return worst;
}

bool dk_symmetry_check(const HypotrochoidSpec& spec, double tolerance, int n_samples, Execution ex) {
  spec.validate();
  const CurveSamples s = sample_curve(spec, n_samples);
  const Complex rot = std::exp(kI * (kTwoPi / spec.k));
  const Complex axis = std::exp(2.0 * kI * spec.theta);
  std::vector<Complex> rotated, reflected;
  rotated.reserve(s.points.size());
  reflected.reserve(s.points.size());
  for (const Complex& p : s.points) {
    rotated.push_back(spec.w + rot * (p - spec.w));
    reflected.push_back(spec.w + axis * std::conj(p - spec.w));
  }
  return max_nearest_distance(rotated, s.points, ex) <= tolerance &&
         max_nearest_distance(reflected, s.points, ex) <= tolerance;
}

double min_map_derivative(const HypotrochoidSpec& spec, const std::vector<double>& radii, int n_angles) {
  spec.validate();
  double best = std::numeric_limits<double>::infinity();
  for (double r : radii)
    for (int j = 0; j < n_angles; ++j) {
      const Complex z = spec.w + r * spec.eps * std::exp(kI * (kTwoPi * j / n_angles));
      best = std::min(best, std::abs(map_derivative(spec, z)));
    }
  return best;
}

void write_curve_csv(const HypotrochoidSpec& spec, int n_samples, std::ostream& out) {
  const CurveSamples s = sample_curve(spec, n_samples);
  out << "alpha,re,im\n";
  char line[128];
  for (std::size_t j = 0; j < s.points.size(); ++j) {
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", s.alpha[j], s.points[j].real(),
                  s.points[j].imag());
    out << line;
  }
}

void write_curve_svg(const HypotrochoidSpec& spec, int n_samples, std::ostream& out,
                     const std::string& comment) {
  const CurveSamples s = sample_curve(spec, n_samples);
  // Every curve point lies within eps (b + b^{1-k}) of w.
  const double radius = spec.eps * (spec.b + std::pow(spec.b, 1.0 - spec.k));
  const double half = 1.1 * radius;
  char buf[256];
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"400\" height=\"400\" ";
  std::snprintf(buf, sizeof buf, "viewBox=\"%.9g %.9g %.9g %.9g\">\n", spec.w.real() - half,
                -spec.w.imag() - half, 2 * half, 2 * half);
  out << buf;
  if (!comment.empty()) out << "<!-- " << comment << " -->\n";
  std::snprintf(buf, sizeof buf, "<line x1=\"%.9g\" y1=\"0\" x2=\"%.9g\" y2=\"0\" stroke=\"#bbb\" stroke-width=\"%.9g\"/>\n",
                spec.w.real() - half, spec.w.real() + half, half / 400);
  out << buf;
  std::snprintf(buf, sizeof buf, "<line x1=\"0\" y1=\"%.9g\" x2=\"0\" y2=\"%.9g\" stroke=\"#bbb\" stroke-width=\"%.9g\"/>\n",
                -spec.w.imag() - half, -spec.w.imag() + half, half / 400);
  out << buf;
  out << "<path fill=\"none\" stroke=\"black\" stroke-width=\"";
  std::snprintf(buf, sizeof buf, "%.9g", half / 150);
  out << buf << "\" d=\"";
  for (std::size_t j = 0; j < s.points.size(); ++j) {
    std::snprintf(buf, sizeof buf, "%s%.9g %.9g ", j == 0 ? "M" : "L", s.points[j].real(), -s.points[j].imag());
    out << buf;
  }
  out << "Z\"/>\n</svg>\n";
}

}  // namespace hvir
