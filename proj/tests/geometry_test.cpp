#include "hvir/geometry.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <regex>
#include <sstream>

namespace hvir {
namespace {

HypotrochoidSpec spec(int k, double b, Complex w = 0.0, double eps = 1.0, double theta = 0.0) {
  HypotrochoidSpec s;
  s.k = k;
  s.b = b;
  s.w = w;
  s.eps = eps;
  s.theta = theta;
  return s;
}

void expect_near(Complex a, Complex b, double tol) { EXPECT_LT(std::abs(a - b), tol) << a << " vs " << b; }

TEST(Curve, Points) {
  expect_near(curve_point(spec(2, 2), 0.0), 2.5, 1e-15);
  expect_near(curve_point(spec(2, 2), M_PI / 2), Complex(0, 1.5), 1e-15);
  expect_near(curve_point(spec(3, 2), 0.0), 2.25, 1e-15);
}

TEST(Curve, Validation) {
  EXPECT_THROW(spec(1, 2).validate(), std::invalid_argument);
  EXPECT_THROW(spec(2, 0).validate(), std::invalid_argument);
  EXPECT_THROW(spec(2, 1, 0.0, -1.0).validate(), std::invalid_argument);
  EXPECT_NO_THROW(spec(3, 0.5).validate());
}

TEST(Map, Values) {
  expect_near(map_eval(spec(2, 2), 2.0), 2.5, 1e-15);
  EXPECT_THROW(map_eval(spec(2, 2, Complex(1, 1)), Complex(1, 1)), std::domain_error);
  const HypotrochoidSpec s = spec(4, 2, Complex(0.5, -1), 0.7, 0.3);
  const Complex far = s.w + 1e8;
  EXPECT_LT(std::abs(map_eval(s, far) - far), 1e-20);
  const Complex z(1.3, 0.4);
  const double h = 1e-5;
  const Complex fd = (map_eval(s, z + h) - map_eval(s, z - h)) / (2 * h);
  expect_near(map_derivative(s, z), fd, 1e-8);
}

TEST(Map, CircleImageIdentity) {
  for (int k = 2; k <= 6; ++k) {
    const HypotrochoidSpec s = spec(k, 1.2 * cusp_threshold_b(k), Complex(0.3, -0.2), 0.8, 0.4);
    EXPECT_LT(circle_image_error(s, 10000), 1e-12) << "k = " << k;
  }
}

TEST(Curve, Equivariance) {
  const HypotrochoidSpec unit = spec(5, 1.7);
  const HypotrochoidSpec moved = spec(5, 1.7, Complex(2, -3), 0.25, 1.1);
  for (double alpha : {0.0, 0.4, 2.0, 5.5})
    expect_near(curve_point(moved, alpha), moved.w + moved.eps * std::polar(1.0, moved.theta) * curve_point(unit, alpha),
                1e-14);
}

TEST(Cusp, Threshold) {
  EXPECT_DOUBLE_EQ(cusp_threshold_b(2), 1.0);
  EXPECT_DOUBLE_EQ(cusp_threshold_b(3), std::cbrt(2.0));
  const CuspThreshold t = cusp_threshold(4);
  ASSERT_EQ(t.cusp_angles.size(), 4u);
  EXPECT_DOUBLE_EQ(t.cusp_angles[1], M_PI / 2);
  for (int k = 2; k <= 6; ++k) {
    const CuspThreshold c = cusp_threshold(k);
    for (double alpha : c.cusp_angles) EXPECT_LT(std::abs(curve_tangent(spec(k, c.b_star), alpha)), 1e-10);
  }
}

TEST(Simplicity, Examples) {
  EXPECT_TRUE(simplicity_check(spec(2, 1.5)));
  EXPECT_TRUE(simplicity_check(spec(3, 1.3)));
  EXPECT_FALSE(simplicity_check(spec(3, 1.1)));
  EXPECT_FALSE(simplicity_check(spec(3, cusp_threshold_b(3))));
  EXPECT_THROW(simplicity_check(spec(3, 2), 32), std::invalid_argument);
}

TEST(Simplicity, BracketsTheThreshold) {
  for (int k = 2; k <= 6; ++k) {
    const double b_star = cusp_threshold_b(k);
    EXPECT_TRUE(simplicity_check(spec(k, 1.05 * b_star), 4096)) << "k = " << k;
    EXPECT_FALSE(simplicity_check(spec(k, 0.95 * b_star), 4096)) << "k = " << k;
  }
}

TEST(Polyline, IntersectionsAndArea) {
  const std::vector<Complex> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  EXPECT_EQ(count_self_intersections(square), 0);
  EXPECT_DOUBLE_EQ(signed_area2(square), 2.0);
  const std::vector<Complex> bowtie{{0, 0}, {1, 1}, {1, 0}, {0, 1}};
  EXPECT_EQ(count_self_intersections(bowtie), 1);
  const std::vector<Complex> clockwise(square.rbegin(), square.rend());
  EXPECT_DOUBLE_EQ(signed_area2(clockwise), -2.0);
}

TEST(Symmetry, Dihedral) {
  EXPECT_TRUE(dk_symmetry_check(spec(3, 2), 1e-9));
  EXPECT_TRUE(dk_symmetry_check(spec(3, 2, Complex(1, 0)), 1e-9));
  EXPECT_TRUE(dk_symmetry_check(spec(5, 1.6, Complex(-2, 3), 0.3, 0.7), 1e-9));
}

TEST(Symmetry, ThetaShiftByTwoPiOverK) {
  const int k = 4;
  const auto a = sample_curve(spec(k, 1.5, 0.0, 1.0, 0.2), 840);
  const auto b = sample_curve(spec(k, 1.5, 0.0, 1.0, 0.2 + 2 * M_PI / k), 840);
  EXPECT_LT(max_nearest_distance(a.points, b.points), 1e-12);
  EXPECT_LT(max_nearest_distance(b.points, a.points), 1e-12);
}

TEST(Sampling, Grid) {
  const auto s = sample_curve(spec(3, 2), 128);
  ASSERT_EQ(s.alpha.size(), 128u);
  EXPECT_EQ(s.alpha[0], 0.0);
  EXPECT_TRUE(std::is_sorted(s.alpha.begin(), s.alpha.end()));
  EXPECT_LT(s.alpha.back(), 2 * M_PI);
}

TEST(Kernels, SerialEqualsParallel) {
  for (int k = 2; k <= 6; ++k)
    for (double f : {0.9, 1.1}) {
      const HypotrochoidSpec s = spec(k, f * cusp_threshold_b(k), Complex(0.1, 0.2), 0.9, 0.3);
      const auto pts = sample_curve(s, 1024).points;
      EXPECT_EQ(count_self_intersections(pts, Execution::kSerial), count_self_intersections(pts, Execution::kParallel));
      EXPECT_EQ(circle_image_error(s, 5000, Execution::kSerial), circle_image_error(s, 5000, Execution::kParallel));
      EXPECT_EQ(simplicity_check(s, 1024, Execution::kSerial), simplicity_check(s, 1024, Execution::kParallel));
      auto shifted = s;
      shifted.theta += 0.05;
      const auto other = sample_curve(shifted, 700).points;
      EXPECT_EQ(max_nearest_distance(pts, other, Execution::kSerial),
                max_nearest_distance(pts, other, Execution::kParallel));
    }
}

TEST(Map, ConformalOutsideTheDisk) {
  for (int k = 2; k <= 6; ++k) {
    const HypotrochoidSpec s = spec(k, 1.1 * cusp_threshold_b(k), 0.0, 1.0, 0.5);
    EXPECT_GT(min_map_derivative(s, {s.b, 1.5 * s.b, 3 * s.b}, 720), 1e-3) << "k = " << k;
  }
}

TEST(Export, CsvRowsMatchCurvePoints) {
  const HypotrochoidSpec s = spec(3, 1.6, Complex(0.5, 0.5), 2.0, 0.1);
  std::ostringstream out;
  write_curve_csv(s, 64, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "alpha,re,im");
  std::getline(in, line);
  double alpha, re, im;
  ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf,%lf", &alpha, &re, &im), 3);
  EXPECT_EQ(alpha, 0.0);
  EXPECT_EQ(Complex(re, im), curve_point(s, 0.0));
  int rows = 1;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 64);
}

TEST(Export, SvgBoundingBox) {
  for (int k = 2; k <= 5; ++k) {
    const HypotrochoidSpec s = spec(k, 1.15 * cusp_threshold_b(k), 0.0, 1.5);
    std::ostringstream out;
    write_curve_svg(s, 256, out, "a -- b");
    const std::string svg = out.str();
    std::smatch m;
    ASSERT_TRUE(std::regex_search(svg, m, std::regex("viewBox=\"([-0-9.e]+) ([-0-9.e]+) ([-0-9.e]+) ([-0-9.e]+)\"")));
    const double extent = 2 * s.eps * (s.b + std::pow(s.b, 1 - k));
    EXPECT_GE(std::stod(m[3]), extent);
    EXPECT_GE(std::stod(m[4]), extent);
    EXPECT_NE(svg.find("<path"), std::string::npos);
    std::ostringstream again;
    write_curve_svg(s, 256, again, "a -- b");
    EXPECT_EQ(again.str(), svg);
  }
}

}  // namespace
}  // namespace hvir
