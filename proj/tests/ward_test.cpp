#include "hvir/basis.hpp"
#include "hvir/grammar.hpp"
#include "hvir/mpoly.hpp"
#include "hvir/ope.hpp"
#include "hvir/point_rational.hpp"
#include "hvir/ward.hpp"

#include <gtest/gtest.h>

namespace hvir {

void PrintTo(const PointRational& p, std::ostream* os) { *os << p.to_string(); }
void PrintTo(const PBWVector& v, std::ostream* os) { *os << v.to_string(); }

namespace {

const CPoly c = CPoly::x();
const std::vector<std::string> xy{"x", "y"};

Insertion at(const PBWVector& v, const std::string& p) { return Insertion{v, p}; }

TEST(MPoly, ArithmeticAndDivision) {
  const MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
  const MPoly d = difference_power(2, 0, 1, 2);
  EXPECT_EQ(d, x * x - x * y * CPoly(2) + y * y);
  EXPECT_EQ(d.divide_difference(0, 1), x - y);
  EXPECT_THROW((x + y).divide_difference(0, 1), std::domain_error);
  EXPECT_EQ(d.derivative(1), (y - x) * CPoly(2));
  EXPECT_TRUE(d.identify(0, 1).is_zero());
  EXPECT_EQ(d.eval({Rational(3), Rational(1)}), CPoly(4));
  EXPECT_EQ(pow(x - y, 3), difference_power(2, 0, 1, 3));
}

TEST(PointRational, CanonicalAndText) {
  const PointRational a = PointRational::difference_power(xy, 0, 1, -4) * CPoly::monomial(Rational(1, 2), 1);
  EXPECT_EQ(a.to_string(), "(c/2) / (x - y)^4");
  const PointRational b = PointRational::difference_power(xy, 0, 1, 1) * PointRational::difference_power(xy, 0, 1, -5);
  EXPECT_EQ(b, PointRational::difference_power(xy, 0, 1, -4));
  EXPECT_EQ(PointRational::difference_power(xy, 1, 0, -1), PointRational::difference_power(xy, 0, 1, -1) * CPoly(-1));
  EXPECT_EQ(a.eval({Rational(2), Rational(0)}), CPoly::monomial(Rational(1, 32), 1));
  EXPECT_THROW(a.eval({Rational(1), Rational(1)}), std::domain_error);
}

TEST(PointRational, DerivativeOfPower) {
  const PointRational p = PointRational::difference_power(xy, 0, 1, -4);
  EXPECT_EQ(p.derivative(0), PointRational::difference_power(xy, 0, 1, -5) * CPoly(-4));
  EXPECT_EQ(p.derivative(1), PointRational::difference_power(xy, 0, 1, -5) * CPoly(4));
}

TEST(Correlator, VacuumAndOnePoint) {
  EXPECT_EQ(sphere_correlator({}), PointRational({}, CPoly(1)));
  EXPECT_EQ(sphere_correlator({at(PBWVector::vacuum(), "x")}).to_string(), "1");
  EXPECT_EQ(sphere_correlator({at(PBWVector::vacuum(), "x"), at(PBWVector::vacuum(), "y")}),
            PointRational(xy, CPoly(1)));
  EXPECT_TRUE(sphere_correlator({at(tk1_state(2), "x")}).is_zero());
  EXPECT_TRUE(sphere_correlator({at(tk1_state(2), "x"), at(tk1_state(3), "y")}).is_zero() == false);
  EXPECT_TRUE(sphere_correlator({at(tk1_state(2), "x"), at(PBWVector::vacuum(), "y")}).is_zero());
}

TEST(Correlator, TwoAndThreePoint) {
  const PointRational tt = sphere_correlator({at(tk1_state(2), "x"), at(tk1_state(2), "y")});
  EXPECT_EQ(tt.to_string(), "(c/2) / (x - y)^4");
  const PointRational ttt =
      sphere_correlator({at(tk1_state(2), "a"), at(tk1_state(2), "b"), at(tk1_state(2), "c")});
  EXPECT_EQ(ttt.to_string(), "c / ((a - b)^2*(a - c)^2*(b - c)^2)");
}

TEST(Correlator, TwoPointOracle) {
  for (int k = 2; k <= 6; ++k)
    for (int kp = 2; kp <= 6; ++kp)
      EXPECT_EQ(sphere_correlator({at(tk1_state(k), "x"), at(tk1_state(kp), "y")}), tk1_two_point_oracle(k, kp))
          << k << "," << kp;
  EXPECT_EQ(tk1_two_point_oracle(2, 3), PointRational::difference_power(xy, 0, 1, -5) * CPoly::monomial(2, 1));
  EXPECT_EQ(tk1_two_point_oracle(3, 3), PointRational::difference_power(xy, 0, 1, -6) * CPoly::monomial(-10, 1));
}

TEST(Correlator, DerivativeInsertionIsDerivative) {
  const PointRational tt = sphere_correlator({at(tk1_state(2), "x"), at(tk1_state(2), "y")});
  const PointRational dtt = sphere_correlator({at(field_vector({2, 1, 1}), "x"), at(tk1_state(2), "y")});
  EXPECT_EQ(dtt, tt.derivative(0));
  const PointRational t22 = sphere_correlator({at(descendant(2, 2), "x"), at(tk1_state(2), "y"), at(tk1_state(2), "z")});
  const PointRational dt22 =
      sphere_correlator({at(field_vector({2, 2, 1}), "x"), at(tk1_state(2), "y"), at(tk1_state(2), "z")});
  EXPECT_EQ(dt22, t22.derivative(t22.index_of("x")));
}

// L_{-1} annihilates the vacuum, so correlators are translation invariant.
TEST(Correlator, TranslationInvariance) {
  const std::vector<std::vector<Insertion>> cases{
      {at(tk1_state(2), "a"), at(tk1_state(2), "b"), at(tk1_state(2), "c")},
      {at(descendant(2, 2), "a"), at(tk1_state(4), "b")},
      {at(tk1_state(3), "a"), at(tk1_state(2), "b"), at(descendant(2, 2), "c")},
  };
  for (const auto& ins : cases) {
    const PointRational f = sphere_correlator(ins);
    PointRational total(f.labels());
    for (int i = 0; i < static_cast<int>(f.labels().size()); ++i) total += f.derivative(i);
    EXPECT_TRUE(total.is_zero()) << f.to_string();
  }
}

TEST(Correlator, GramMatrixMatchesTwoPointLimit) {
  // <v(x) u(y)> for weight-h states is <v,u>-like: (x-y)^{-2h} times a
  // pairing that is symmetric in v and u.
  const PBWVector a = PBWVector::word({-4}), b = PBWVector::word({-2, -2});
  const PointRational ab = sphere_correlator({at(a, "x"), at(b, "y")});
  const PointRational ba = sphere_correlator({at(b, "x"), at(a, "y")});
  EXPECT_EQ(ab, ba);
  EXPECT_EQ(ab.denominator().size(), 1u);
  EXPECT_EQ(ab.denominator().begin()->second, 8);
}

TEST(Correlator, Permutations) {
  EXPECT_TRUE(permutation_invariance({at(tk1_state(2), "a"), at(tk1_state(3), "b"), at(tk1_state(2), "c")}));
  EXPECT_TRUE(permutation_invariance({at(descendant(2, 2), "a"), at(tk1_state(2), "b"), at(tk1_state(2), "c")}));
  EXPECT_TRUE(permutation_invariance({at(tk1_state(2), "a"), at(tk1_state(2), "b"), at(tk1_state(2), "c"),
                                      at(tk1_state(2), "d")}));
}

TEST(Correlator, Inversion) {
  EXPECT_TRUE(inversion_invariance({at(tk1_state(2), "x"), at(tk1_state(2), "y")}));
  EXPECT_TRUE(inversion_invariance({at(tk1_state(2), "a"), at(tk1_state(2), "b"), at(tk1_state(2), "c")}));
}

TEST(Correlator, DuplicatePointIsRejected) {
  EXPECT_THROW(sphere_correlator({at(tk1_state(2), "x"), at(tk1_state(2), "x")}), std::domain_error);
}

TEST(Grammar, Insertions) {
  const auto ins = parse_insertions("  T[2,1]@x   dT[2,2]@y d^2T[3,1]@z L[-2,-4]@w 1@v ");
  ASSERT_EQ(ins.size(), 5u);
  EXPECT_EQ(ins[0].state, tk1_state(2));
  EXPECT_EQ(ins[1].state, field_vector({2, 2, 1}));
  EXPECT_EQ(ins[2].state, field_vector({3, 1, 2}));
  EXPECT_EQ(ins[3].state, PBWVector::word({-4, -2}) + PBWVector::word({-6}, CPoly(2)));
  EXPECT_EQ(ins[4].state, PBWVector::vacuum());
  EXPECT_EQ(ins[1].point, "y");
  EXPECT_TRUE(parse_insertions("").empty());
  EXPECT_TRUE(parse_insertions("   ").empty());
}

TEST(Grammar, Errors) {
  EXPECT_THROW(parse_insertions("T[2,1]"), ParseError);
  EXPECT_THROW(parse_insertions("T[1,1]@x"), ParseError);
  EXPECT_THROW(parse_insertions("T[2,0]@x"), ParseError);
  EXPECT_THROW(parse_insertions("T[2,1]@x@y"), ParseError);
  EXPECT_THROW(parse_insertions("T[2,1]@1x"), ParseError);
  EXPECT_THROW(parse_insertions("X@x"), ParseError);
  EXPECT_THROW(parse_field_vector("T[2,1] junk"), ParseError);
  try {
    parse_insertions("T[2,1]@x T[2;1]@y");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 12u);
  }
}

TEST(Grammar, Rationals) {
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(parse_rational(" 7 "), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1.5"), ParseError);
}

TEST(Ope, StressTensorWithItself) {
  const auto terms = ope_Tk1(2, 2);
  // The vanishing third-order pole is not listed.
  ASSERT_EQ(terms.size(), 3u);
  EXPECT_EQ(terms[0].pole_order, 4);
  EXPECT_EQ(terms[0].state, PBWVector::vacuum() * CPoly::monomial(Rational(1, 2), 1));
  EXPECT_EQ(terms[1].pole_order, 2);
  EXPECT_EQ(terms[1].state, tk1_state(2) * CPoly(2));
  EXPECT_EQ(terms[2].pole_order, 1);
  EXPECT_EQ(terms[2].state, PBWVector::word({-3}));
  ASSERT_TRUE(terms[2].resolved);
  FieldCombination dT;
  dT.add({3, 1, 0}, CPoly(1));
  EXPECT_EQ(terms[2].combination, dT);
}

TEST(Ope, LeadingPoleIsTheTwoPointFunction) {
  for (int k = 2; k <= 5; ++k)
    for (int kp = 2; kp <= 5; ++kp) {
      const auto terms = ope_Tk1(k, kp);
      ASSERT_FALSE(terms.empty());
      EXPECT_EQ(terms[0].pole_order, k + kp);
      const PointRational lead = PointRational::difference_power(xy, 0, 1, -(k + kp)) * terms[0].state.vacuum_coeff();
      EXPECT_EQ(lead, tk1_two_point_oracle(k, kp));
      for (const auto& t : terms) {
        EXPECT_GE(t.pole_order, 1);
        if (!t.state.is_zero()) {
          EXPECT_EQ(t.state.homogeneous_weight(), k + kp - t.pole_order);
        }
      }
    }
}

TEST(Ope, RegularTermsOnRequest) {
  const auto terms = ope_Tk1(2, 2, 2);
  ASSERT_EQ(terms.back().pole_order, -1);
  EXPECT_EQ(terms[terms.size() - 2].pole_order, 0);
  EXPECT_EQ(terms[terms.size() - 2].state, normal_order({{{-2, -2}, CPoly(1)}}));
}

}  // namespace
}  // namespace hvir
