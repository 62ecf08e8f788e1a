#include "hvir/basis.hpp"
#include "hvir/composition.hpp"
#include "hvir/params.hpp"
#include "hvir/virasoro.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <functional>

namespace hvir {

void PrintTo(const PBWVector& v, std::ostream* os) { *os << v.to_string(); }
void PrintTo(const FieldCombination& f, std::ostream* os) { *os << f.to_string(); }

namespace {

const CPoly c = CPoly::x();

PBWVector w(ModeWord word, const CPoly& coeff = CPoly(1)) { return PBWVector::word(std::move(word), coeff); }

PBWVector ordered(const ModeWord& word) { return normal_order({{word, CPoly(1)}}); }

TEST(Bracket, Examples) {
  const Bracket b = vir_bracket(2, -2);
  EXPECT_EQ(b.mode, 0);
  EXPECT_EQ(b.coefficient, Rational(4));
  EXPECT_EQ(b.central, CPoly::monomial(Rational(1, 2), 1));
  EXPECT_TRUE(vir_bracket(1, -1).central.is_zero());
  EXPECT_TRUE(vir_bracket(3, -2).central.is_zero());
  EXPECT_EQ(vir_bracket(3, -3).central, CPoly::monomial(2, 1));
  EXPECT_EQ(vir_bracket(-3, 5).coefficient, Rational(-8));
}

TEST(Bracket, Antisymmetric) {
  for (int m = -6; m <= 6; ++m)
    for (int n = -6; n <= 6; ++n) {
      const Bracket a = vir_bracket(m, n), b = vir_bracket(n, m);
      EXPECT_EQ(a.mode, b.mode);
      EXPECT_EQ(a.coefficient, -b.coefficient);
      EXPECT_EQ(a.central, CPoly() - b.central);
    }
}

TEST(PBWVector, CanonicalWords) {
  EXPECT_TRUE(is_canonical({}));
  EXPECT_TRUE(is_canonical({-4, -2}));
  EXPECT_TRUE(is_canonical({-3, -3}));
  EXPECT_FALSE(is_canonical({-2, -4}));
  EXPECT_FALSE(is_canonical({-1}));
  EXPECT_THROW(PBWVector::word({-2, -4}), std::invalid_argument);
  EXPECT_EQ(word_weight({-4, -2}), 6);
}

TEST(PBWVector, ArithmeticAndText) {
  PBWVector v = w({-2, -2}) + w({-4}, CPoly(3));
  EXPECT_EQ(v.homogeneous_weight(), 4);
  EXPECT_EQ((v - v).is_zero(), true);
  EXPECT_EQ((w({-2}) + w({-3})).homogeneous_weight(), -1);
  EXPECT_EQ(PBWVector::vacuum().homogeneous_weight(), 0);
  EXPECT_EQ(w({-2, -2, -2}).to_string(), "L_{-2}^3 1");
}

TEST(NormalOrder, Examples) {
  EXPECT_TRUE(ordered({-1}).is_zero());
  EXPECT_TRUE(ordered({0}).is_zero());
  EXPECT_TRUE(ordered({3, -2}).is_zero());
  EXPECT_EQ(ordered({2, -2}), PBWVector::vacuum() * CPoly::monomial(Rational(1, 2), 1));
  EXPECT_EQ(ordered({-1, -2}), w({-3}));
  EXPECT_EQ(ordered({-1, -3}), w({-4}, CPoly(2)));
  EXPECT_EQ(ordered({-2, -4}), w({-4, -2}) + w({-6}, CPoly(2)));
  EXPECT_EQ(ordered({0, -2, -3}), w({-3, -2}, CPoly(5)) + w({-5}, CPoly(5)));
}

// Jacobi identity realized on the module: L_a L_b v - L_b L_a v must equal
// [L_a, L_b] v for a spread of test vectors.
TEST(NormalOrder, CommutatorMatchesBracketOnModule) {
  const std::vector<PBWVector> vectors{PBWVector::vacuum(), w({-2}), w({-3, -2}), w({-2, -2}) + w({-5}, c)};
  for (const auto& v : vectors)
    for (int a = -6; a <= 6; ++a)
      for (int b = -6; b <= 6; ++b) {
        const PBWVector lhs = apply_mode(a, apply_mode(b, v)) - apply_mode(b, apply_mode(a, v));
        const Bracket br = vir_bracket(a, b);
        PBWVector rhs = apply_mode(br.mode, v) * CPoly(br.coefficient);
        if (!br.central.is_zero()) rhs += v * br.central;
        EXPECT_EQ(lhs, rhs) << "a=" << a << " b=" << b << " v=" << v.to_string();
      }
}

TEST(NormalOrder, ThreeModeJacobi) {
  const PBWVector v = w({-2});
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b)
      for (int d = -4; d <= 4; ++d) {
        auto comm = [&](int x, int y, const PBWVector& u) {
          return apply_mode(x, apply_mode(y, u)) - apply_mode(y, apply_mode(x, u));
        };
        // [L_a,[L_b,L_d]] + cyclic, the central terms commute out.
        auto nested = [&](int x, int y, int z) {
          const Bracket yz = vir_bracket(y, z);
          return comm(x, yz.mode, v) * CPoly(yz.coefficient);
        };
        PBWVector total = nested(a, b, d) + nested(b, d, a) + nested(d, a, b);
        EXPECT_TRUE(total.is_zero()) << a << "," << b << "," << d;
      }
}

TEST(Derivative, LMinusOne) {
  EXPECT_TRUE(l_minus_one_derivative(PBWVector::vacuum()).is_zero());
  EXPECT_EQ(l_minus_one_derivative(w({-2})), w({-3}));
  EXPECT_EQ(l_minus_one_derivative(w({-2, -2})), w({-3, -2}, CPoly(2)) + w({-5}));
}

TEST(Shapovalov, LowWeights) {
  EXPECT_EQ(shapovalov(PBWVector::vacuum(), PBWVector::vacuum()), CPoly(1));
  EXPECT_EQ(shapovalov(w({-2}), w({-2})), CPoly::monomial(Rational(1, 2), 1));
  EXPECT_TRUE(shapovalov(w({-2}), w({-3})).is_zero());
  EXPECT_EQ(shapovalov(w({-3}), w({-3})), CPoly::monomial(2, 1));
}

TEST(Shapovalov, WeightFourGramDeterminant) {
  const PBWVector a = w({-4}), b = w({-2, -2});
  const CPoly aa = shapovalov(a, a), ab = shapovalov(a, b), ba = shapovalov(b, a), bb = shapovalov(b, b);
  EXPECT_EQ(ab, ba);
  EXPECT_EQ(aa, CPoly::monomial(5, 1));
  EXPECT_EQ(ab, CPoly::monomial(3, 1));
  EXPECT_EQ(bb, CPoly::monomial(Rational(1, 2), 2) + CPoly::monomial(4, 1));
  const CPoly det = aa * bb - ab * ba;
  EXPECT_EQ(det, CPoly::monomial(Rational(5, 2), 3) + CPoly::monomial(11, 2));
}

TEST(Descendant, TermsFollowCompositions) {
  for (int k = 2; k <= 6; ++k)
    for (int m = 1; m <= 5; ++m) {
      const auto terms = descendant_terms(k, m);
      Rational total(0);
      for (const auto& [word, coeff] : terms) {
        EXPECT_EQ(word_weight(word), k * m);
        total += coeff;
      }
      // Setting every coefficient factor (k-1)^(m - len) to 1 would give m!.
      Rational expected(0);
      for (const auto& lambda : enumerate_compositions(m))
        expected += c_coeff(lambda) * pow(Rational(k - 1), m - static_cast<int>(lambda.parts().size()));
      EXPECT_EQ(total, expected);
    }
  EXPECT_THROW(descendant_terms(1, 2), std::domain_error);
  EXPECT_THROW(descendant_terms(2, 0), std::domain_error);
}

TEST(Descendant, LowOrders) {
  for (int k = 2; k <= 8; ++k) {
    EXPECT_EQ(descendant(k, 1), w({-k}));
    EXPECT_EQ(descendant(k, 2), w({-k, -k}) + w({-2 * k}, CPoly(k - 1)));
  }
  EXPECT_EQ(descendant(2, 3).homogeneous_weight(), 6);
  EXPECT_TRUE(descendant(3, 3).vacuum_coeff().is_zero());
}

DescendantSymbol T(int k, int m, int d = 0) { return {k, m, d}; }

FieldCombination combo(std::initializer_list<std::pair<DescendantSymbol, Rational>> terms) {
  FieldCombination f;
  for (const auto& [s, r] : terms) f.add(s, CPoly(r));
  return f;
}

TEST(Basis, Candidates) {
  const auto four = basis_candidates(4);
  std::vector<DescendantSymbol> want{T(2, 2), T(4, 1)};
  std::sort(want.begin(), want.end());
  auto got = four;
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, want);
  for (const auto& s : basis_candidates(9)) EXPECT_EQ(s.weight(), 9);
}

TEST(Basis, FieldVectorIsDerivative) {
  EXPECT_EQ(field_vector(T(2, 1, 1)), w({-3}));
  EXPECT_EQ(field_vector(T(3, 2, 2)), l_minus_one_derivative(l_minus_one_derivative(descendant(3, 2))));
  EXPECT_EQ(T(3, 2, 2).to_string(), "d^2T[3,2]");
}

TEST(Basis, SquareOfMode) {
  for (int k = 2; k <= 7; ++k) {
    const BasisSolution s = hypotrochoid_basis_solve(w({-k, -k}));
    ASSERT_TRUE(s.representable);
    EXPECT_EQ(s.combination, combo({{T(k, 2), 1}, {T(2 * k, 1), Rational(1 - k)}}));
  }
}

TEST(Basis, AdjacentModes) {
  for (int k = 2; k <= 7; ++k) {
    const BasisSolution s = hypotrochoid_basis_solve(w({-k - 1, -k}));
    ASSERT_TRUE(s.representable);
    const Rational a(1, 2 * (k - 1));
    EXPECT_EQ(s.combination, combo({{T(k, 2, 1), a}, {T(2 * k + 1, 1), a * Rational(-2 * k * (k - 1))}}));
  }
}

TEST(Basis, ModesTwoApart) {
  for (int k = 2; k <= 7; ++k) {
    const BasisSolution s = hypotrochoid_basis_solve(w({-k - 2, -k}));
    ASSERT_TRUE(s.representable);
    const Rational a(1, 2 * k * (k - 1));
    const FieldCombination want = combo({{T(k, 2, 2), a},
                                         {T(k + 1, 2), a * Rational(-2 * (k - 1) * (k - 1))},
                                         {T(2 * k + 2, 1), a * Rational(-2 * k * (k - 1) * (k + 1))}});
    EXPECT_EQ(s.combination, want) << s.combination.to_string();
    EXPECT_EQ(expand(want), w({-k - 2, -k}));
  }
}

TEST(Basis, CubeOfLMinusTwo) {
  const BasisSolution s = hypotrochoid_basis_solve(w({-2, -2, -2}));
  ASSERT_TRUE(s.representable);
  EXPECT_EQ(s.combination,
            combo({{T(2, 3), 1}, {T(2, 2, 2), Rational(-3, 4)}, {T(3, 2), Rational(3, 2)}, {T(6, 1), 3}}));
  EXPECT_TRUE(s.combination.is_c_independent());
}

TEST(Basis, DescendantsReconstructThemselves) {
  for (int k = 2; k <= 6; ++k)
    for (int m = 1; m <= 3; ++m) {
      const BasisSolution s = hypotrochoid_basis_solve(descendant(k, m), 18);
      ASSERT_TRUE(s.representable) << k << "," << m;
      EXPECT_EQ(s.combination, combo({{T(k, m), 1}}));
    }
}

// Up to weight 7 the candidates span every canonical word; at weight 8 there
// are seven words and six candidates, so some target must be rejected.
TEST(Basis, SpanThroughWeightSevenAndDeficitAtEight) {
  for (int weight = 2; weight <= 8; ++weight) {
    std::vector<ModeWord> words;
    std::function<void(ModeWord, int, int)> gen = [&](ModeWord prefix, int rest, int max_mode) {
      if (rest == 0) {
        words.push_back(prefix);
        return;
      }
      for (int n = std::min(rest, max_mode); n >= 2; --n) {
        if (rest - n == 1) continue;
        ModeWord next = prefix;
        next.push_back(-n);
        gen(next, rest - n, n);
      }
    };
    gen({}, weight, weight);
    int rejected = 0;
    for (const auto& word : words) {
      ASSERT_TRUE(is_canonical(word));
      const BasisSolution s = hypotrochoid_basis_solve(w(word));
      if (!s.representable) {
        ++rejected;
        continue;
      }
      EXPECT_EQ(expand(s.combination), w(word)) << w(word).to_string();
    }
    if (weight < 8) {
      EXPECT_EQ(rejected, 0) << "weight " << weight;
    } else {
      EXPECT_EQ(words.size(), 7u);
      EXPECT_EQ(basis_candidates(8).size(), 6u);
      EXPECT_GT(rejected, 0);
    }
  }
}

TEST(Basis, InputValidation) {
  EXPECT_THROW(hypotrochoid_basis_solve(w({-2}) + w({-3})), std::invalid_argument);
  EXPECT_THROW(hypotrochoid_basis_solve(w({-9, -9}), 16), std::domain_error);
  const BasisSolution vac = hypotrochoid_basis_solve(PBWVector::vacuum() * CPoly(2));
  ASSERT_TRUE(vac.representable);
  EXPECT_EQ(vac.combination.identity, CPoly(2));
}

TEST(Params, ExactPoints) {
  const ModelParameters p = from_kappa(Rational(3));
  ASSERT_TRUE(p.c_exact.has_value());
  EXPECT_EQ(*p.c_exact, Rational(1, 2));
  EXPECT_EQ(*p.y_exact, Rational(1, 3));
  EXPECT_NEAR(p.n, 1.0, 1e-14);
  EXPECT_EQ(*from_kappa(Rational(4)).c_exact, Rational(1));
  EXPECT_EQ(*from_kappa(Rational(8, 3)).c_exact, Rational(0));
  EXPECT_NEAR(from_kappa(Rational(8, 3)).n, 0.0, 1e-14);
  EXPECT_NEAR(from_kappa(Rational(4)).n, 2.0, 1e-14);
}

TEST(Params, BothCentralChargeFormulasAgree) {
  for (int num = 32; num <= 48; ++num) {
    const Rational kappa(num, 12);
    const ModelParameters p = from_kappa(kappa);
    EXPECT_EQ(central_charge_from_kappa(kappa), central_charge_from_y(*p.y_exact));
  }
}

TEST(Params, RoundTripThroughN) {
  for (int i = 0; i <= 40; ++i) {
    const double n = 2.0 * i / 40.0;
    const ModelParameters p = from_n(n);
    EXPECT_NEAR(from_kappa(Rational::parse(std::to_string(static_cast<long>(std::lround(p.kappa * 1e6))) + "/1000000")).n,
                n, 1e-5);
    EXPECT_NEAR(-2.0 * std::cos(2.0 * M_PI * p.y), n, 1e-12);
    EXPECT_NEAR(p.kappa, 2.0 / (1.0 - p.y), 1e-12);
  }
}

TEST(Params, OutOfRange) {
  EXPECT_THROW(from_kappa(Rational(5)), std::domain_error);
  EXPECT_THROW(from_kappa(Rational(2)), std::domain_error);
  EXPECT_THROW(from_y(Rational(3, 5)), std::domain_error);
  EXPECT_THROW(from_n(2.5), std::domain_error);
  EXPECT_THROW(from_n(-0.1), std::domain_error);
  EXPECT_NO_THROW(from_n(2.0 + 1e-13));
}

}  // namespace
}  // namespace hvir
