#include "hvir/composition.hpp"
#include "hvir/poly.hpp"
#include "hvir/ratfunc.hpp"
#include "hvir/rational.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <thread>

namespace hvir {
namespace {

TEST(Rational, LowestTermsAndSign) {
  Rational r(6, -4);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(0, 5).to_string(), "0");
  EXPECT_TRUE(Rational(4, 2).is_integer());
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("-7/21"), Rational(-1, 3));
  EXPECT_EQ(Rational::parse("12"), Rational(12));
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
}

TEST(Rational, CombinatorialHelpers) {
  EXPECT_EQ(factorial(0), Rational(1));
  EXPECT_EQ(factorial(10), Rational(3628800));
  EXPECT_EQ(binomial(5, 2), Rational(10));
  EXPECT_EQ(binomial(-1, 3), Rational(-1));
  EXPECT_EQ(binomial(-2, 2), Rational(3));
  EXPECT_EQ(falling_factorial(-1, 3), Rational(-6));
  EXPECT_EQ(pow(Rational(2, 3), -2), Rational(9, 4));
}

TEST(Rational, BigValuesStayExact) {
  Rational big = factorial(40);
  EXPECT_EQ(big / factorial(39), Rational(40));
  EXPECT_EQ((big + Rational(1)) - big, Rational(1));
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  return Rational(num(rng), den(rng));
}

CPoly random_cpoly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 3);
  std::vector<Rational> c(deg(rng) + 1);
  for (auto& x : c) x = random_rational(rng);
  return CPoly(c);
}

TEST(RingAxioms, RationalRandomTriples) {
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 500; ++i) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
  }
}

TEST(RingAxioms, CPolyRandomTriples) {
  std::mt19937_64 rng(777);
  for (int i = 0; i < 300; ++i) {
    CPoly a = random_cpoly(rng), b = random_cpoly(rng), c = random_cpoly(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, CPoly());
  }
}

TEST(CPoly, Examples) {
  const CPoly half_c = CPoly::monomial(Rational(1, 2), 1);
  EXPECT_EQ(half_c * CPoly(2), CPoly::x());
  EXPECT_EQ(half_c.eval(Rational(1, 2)), Rational(1, 4));
  EXPECT_TRUE(((CPoly::x() + CPoly(0)) * CPoly(0)).is_zero());
  EXPECT_EQ(half_c.to_string(), "c/2");
  EXPECT_EQ((CPoly::monomial(5, 2) + CPoly::monomial(22, 1)).to_string(), "5*c^2 + 22*c");
  EXPECT_EQ(CPoly().degree(), CPoly::kZeroDegree);
}

TEST(CPoly, DivisionAndGcd) {
  const CPoly x = CPoly::x();
  const CPoly a = (x - CPoly(1)) * (x + CPoly(2));
  const CPoly b = (x - CPoly(1)) * (x - CPoly(3));
  EXPECT_EQ(gcd(a, b), x - CPoly(1));
  auto [q, r] = a.divmod(x - CPoly(1));
  EXPECT_EQ(q, x + CPoly(2));
  EXPECT_TRUE(r.is_zero());
}

TEST(RatFunc, ReducesAndEvaluates) {
  const Poly x = Poly::x();
  RatFunc f((x - Poly(1)) * (x + Poly(1)), (x - Poly(1)) * Poly(2));
  EXPECT_EQ(f, RatFunc((x + Poly(1)) * Rational(1, 2)));
  RatFunc g(Poly(1), x);
  EXPECT_EQ(g.eval(4), Rational(1, 4));
  EXPECT_THROW(g.eval(0), std::domain_error);
  EXPECT_EQ(g.derivative(), RatFunc(Poly(-1), x * x));
  EXPECT_EQ(g.compose(RatFunc(x + Poly(1))).eval(1), Rational(1, 2));
}

TEST(Compositions, Enumeration) {
  const auto one = enumerate_compositions(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].parts(), std::vector<int>{1});

  const auto three = enumerate_compositions(3);
  std::vector<std::vector<int>> parts;
  for (const auto& c : three) parts.push_back(c.parts());
  const std::vector<std::vector<int>> want{{1, 1, 1}, {1, 2}, {2, 1}, {3}};
  EXPECT_EQ(parts, want);

  EXPECT_EQ(enumerate_compositions(5).size(), 16u);
  EXPECT_THROW(enumerate_compositions(0), std::domain_error);
  EXPECT_THROW(Composition({2, 0}), std::domain_error);
}

TEST(Compositions, CountMatchesPowerOfTwoAndAreDistinct) {
  for (int m = 1; m <= 12; ++m) {
    const auto all = enumerate_compositions(m);
    EXPECT_EQ(all.size(), std::size_t{1} << (m - 1));
    std::set<Composition> unique(all.begin(), all.end());
    EXPECT_EQ(unique.size(), all.size());
    for (const auto& c : all) EXPECT_EQ(c.weight(), m);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  }
}

TEST(Coefficients, Examples) {
  EXPECT_EQ(c_coeff(Composition({1})), Rational(1));
  EXPECT_EQ(c_coeff(Composition({3})), Rational(2));
  EXPECT_EQ(c_coeff(Composition({2, 1})), Rational(2));
  EXPECT_EQ(c_coeff(Composition({3, 1, 1})), Rational(12));
  EXPECT_EQ(c_coeff_alt(Composition({4})), Rational(6));
  EXPECT_EQ(c_coeff_alt(Composition({1, 2})), Rational(1));
  EXPECT_EQ(c_coeff_alt(Composition({2, 1})), Rational(2));
}

// Independent oracle: the number of ways to build lambda by the weight
// recursion, unrolled by brute force without any memo.
Rational brute_force(std::vector<int> parts) {
  if (parts == std::vector<int>{1}) return Rational(1);
  Rational total(0);
  if (parts.back() == 1 && parts.size() > 1) {
    std::vector<int> head(parts.begin(), parts.end() - 1);
    total += brute_force(head);
  }
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i] > 1) {
      std::vector<int> q = parts;
      --q[i];
      total += Rational(parts[i] - 1) * brute_force(q);
    }
  return total;
}

TEST(Coefficients, DualRecursionsAgreeThroughWeightTen) {
  CoefficientTable table;
  int count = 0;
  for (int m = 1; m <= 10; ++m)
    for (const auto& lambda : enumerate_compositions(m)) {
      ++count;
      const Rational a = table.weight_recursion(lambda);
      EXPECT_EQ(a, table.length_recursion(lambda)) << lambda.to_string();
      EXPECT_TRUE(a.is_integer());
      EXPECT_GT(a.sign(), 0);
    }
  EXPECT_EQ(count, 1023);
}

TEST(Coefficients, MatchUnmemoizedOracle) {
  for (int m = 1; m <= 7; ++m)
    for (const auto& lambda : enumerate_compositions(m))
      EXPECT_EQ(c_coeff(lambda), brute_force(lambda.parts())) << lambda.to_string();
}

TEST(Coefficients, PrependOneInvariance) {
  for (int m = 1; m <= 8; ++m)
    for (const auto& lambda : enumerate_compositions(m)) {
      std::vector<int> parts = lambda.parts();
      for (int ones = 1; ones <= 4; ++ones) {
        parts.insert(parts.begin(), 1);
        EXPECT_EQ(c_coeff(Composition(parts)), c_coeff(lambda));
      }
    }
}

TEST(Coefficients, HookClosedForm) {
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k <= 8; ++k) {
      std::vector<int> parts{n};
      parts.insert(parts.end(), k, 1);
      EXPECT_EQ(c_coeff_alt(Composition(parts)), factorial(n + k - 1) / factorial(k));
    }
}

TEST(Coefficients, SumOverWeightIsFactorial) {
  for (int m = 1; m <= 10; ++m) {
    Rational s(0);
    for (const auto& lambda : enumerate_compositions(m)) s += c_coeff(lambda);
    EXPECT_EQ(s, factorial(m)) << "m = " << m;
  }
}

TEST(CoefficientTable, WeightCapBoundsTheMemo) {
  CoefficientTable small(3);
  for (const auto& lambda : enumerate_compositions(6)) small.weight_recursion(lambda);
  const std::size_t cached = small.cached();
  std::size_t at_most = 0;
  for (int m = 1; m <= 3; ++m) at_most += 2 * enumerate_compositions(m).size();
  EXPECT_LE(cached, at_most);
  EXPECT_EQ(small.weight_recursion(Composition({3, 1, 1})), Rational(12));
}

TEST(CoefficientTable, SharedBetweenThreads) {
  CoefficientTable table;
  std::vector<Rational> results(4);
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&, t] {
      Rational s(0);
      for (const auto& lambda : enumerate_compositions(9)) s += table.weight_recursion(lambda);
      results[t] = s;
    });
  for (auto& th : pool) th.join();
  for (int t = 1; t < 4; ++t) EXPECT_EQ(results[t], results[0]);
}

}  // namespace
}  // namespace hvir
