#include <gtest/gtest.h>

#include <algorithm>
#include <array>

#include "hamloc/theorems.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hamloc;
namespace th = hamloc::theorems;

namespace {

TruncPoly binomial_row(int n) {
  TruncPoly p(n);
  for (int i = 0; i <= n; ++i) p.add_term(0, i, Rational(oracle::choose(n + 1, i)));
  return p;
}

}  // namespace

TEST(CoefficientsAB, Examples) {
  auto ab = th::coefficients_AB(2);
  EXPECT_EQ(ab.a, 3);
  EXPECT_EQ(ab.b, 6);
  ab = th::coefficients_AB(3);
  EXPECT_EQ(ab.a, 10);
  EXPECT_EQ(ab.b, 20);
  // n = 1: (1 + w)^2 = 1 + 2w + w^2, so A is the w^0 coefficient.
  ab = th::coefficients_AB(1);
  EXPECT_EQ(ab.a, 1);
  EXPECT_EQ(ab.b, 2);
  EXPECT_EQ(code_of([] { (void)th::coefficients_AB(0); }), ErrorCode::Precondition);
}

TEST(CoefficientsAB, AgainstExpansionOracle) {
  for (int n = 1; n <= 30; ++n) {
    const auto ab = th::coefficients_AB(n);
    const auto series = oracle::geometric_power(n);
    EXPECT_EQ(Rational(ab.a), series[static_cast<std::size_t>(n - 1)]);
    EXPECT_EQ(Rational(ab.b), series[static_cast<std::size_t>(n)]);
    EXPECT_EQ(ab.b, 2 * ab.a);
    // Central binomial closed form.
    EXPECT_EQ(ab.b, oracle::choose(2 * n, n));
  }
}

TEST(CoefficientsAB, ClosedForms) {
  for (int n = 2; n <= 30; ++n) {
    const auto ab = th::coefficients_AB(n);
    EXPECT_TRUE(ab.statement_a_matches && ab.statement_b_matches && ab.proof_a_matches && ab.proof_b_matches) << n;
  }
  // At n = 1 the displayed sums for A miss the constant term.
  const auto one = th::coefficients_AB(1);
  EXPECT_FALSE(one.statement_a_matches);
  EXPECT_FALSE(one.proof_a_matches);
  EXPECT_TRUE(one.statement_b_matches);
}

TEST(ChernToEquivariant, Examples) {
  auto e = th::chern_to_equivariant(TruncPoly::constant(0, 1), 1, 1);
  EXPECT_EQ(e.total, TruncPoly::constant(0, 1) + TruncPoly::t(0));
  EXPECT_EQ(e.euler, TruncPoly::t(0));

  e = th::chern_to_equivariant(TruncPoly::constant(1, 1), 1, 1);
  EXPECT_EQ(e.euler, TruncPoly::t(1));

  const TruncPoly c = th::normal_chern_class(2);
  EXPECT_EQ(c, TruncPoly(2, {{0, 0, 1}, {0, 1, 1}, {0, 2, 1}}));
  EXPECT_EQ(th::chern_to_equivariant(c, 1, 2).euler, TruncPoly(2, {{2, 0, 1}, {1, 1, 1}, {0, 2, 1}}));

  EXPECT_EQ(code_of([] { (void)th::chern_to_equivariant(TruncPoly::constant(1, 1), 0, 1); }), ErrorCode::InvalidWeight);
  EXPECT_EQ(code_of([] { (void)th::chern_to_equivariant(TruncPoly(3, {{0, 0, 1}, {0, 3, 1}}), 1, 2); }),
            ErrorCode::Precondition);
}

TEST(ChernToEquivariant, NormalBundlesGiveModelEulerClasses) {
  for (int n = 1; n <= 12; ++n) {
    const TruncPoly c = th::normal_chern_class(n);
    for (const auto& [m, coeff] : c.terms()) EXPECT_TRUE(is_integer(coeff));
    const auto x = oracle::quotient_by_linear(n, 2);
    for (int k = 0; k <= n; ++k)
      EXPECT_EQ(th::chern_to_equivariant(c, 1, n).euler.coefficient(n - k, k), x[static_cast<std::size_t>(k)]);
    const HamiltonianModel m = grassmannian_model(n);
    EXPECT_EQ(th::chern_to_equivariant(c, -1, n).euler, m.y.euler_class);
  }
}

TEST(Divisibility, Examples) {
  const auto five = th::euler_divisibility_solutions(5, 1, th::DivisibilityVariant::Direct, 10);
  auto it = std::find_if(five.begin(), five.end(), [](const auto& s) { return s.a0 == 2; });
  ASSERT_NE(it, five.end());
  const auto want = oracle::quotient_by_linear(5, 2);
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(Rational(it->cofactor[static_cast<std::size_t>(k - 1)]), want[static_cast<std::size_t>(k)]);
  EXPECT_TRUE(th::verify_solution(*it));

  EXPECT_TRUE(th::euler_divisibility_solutions(2, 3, th::DivisibilityVariant::Direct, 50).empty());
  for (auto v : {th::DivisibilityVariant::Direct, th::DivisibilityVariant::WithTFactor})
    EXPECT_TRUE(th::euler_divisibility_solutions(3, 2, v, 50).empty());
  EXPECT_EQ(code_of([] { (void)th::euler_divisibility_solutions(1, 1, th::DivisibilityVariant::Direct, 5); }),
            ErrorCode::Precondition);
}

TEST(Divisibility, OnlyMEqualsOne) {
  for (int n = 2; n <= 12; ++n)
    for (int m = 2; m <= 6; ++m)
      for (auto v : {th::DivisibilityVariant::Direct, th::DivisibilityVariant::WithTFactor})
        EXPECT_TRUE(th::euler_divisibility_solutions(n, m, v, 100).empty()) << n << " " << m;
}

TEST(Divisibility, DirectVariantAtMOneSolvesEveryA0) {
  // With m = 1 the direct cofactor is (t + u)^{n+1}/(t + a0 u), always integral.
  for (int n = 2; n <= 8; ++n) {
    const auto sols = th::euler_divisibility_solutions(n, 1, th::DivisibilityVariant::Direct, 20);
    EXPECT_EQ(sols.size(), 41u);
    for (const auto& s : sols) {
      EXPECT_TRUE(th::verify_solution(s));
      const auto want = oracle::quotient_by_linear(n, s.a0);
      for (int k = 1; k <= n; ++k) EXPECT_EQ(Rational(s.cofactor[static_cast<std::size_t>(k - 1)]), want[static_cast<std::size_t>(k)]);
    }
  }
}

TEST(Divisibility, WithTFactorAtMOne) {
  for (int n = 2; n <= 12; ++n) {
    const auto sols = th::euler_divisibility_solutions(n, 1, th::DivisibilityVariant::WithTFactor, 100);
    if (n % 2 == 0) {
      EXPECT_TRUE(sols.empty()) << n;
    } else {
      ASSERT_EQ(sols.size(), 1u) << n;
      EXPECT_EQ(sols[0].a0, 2);
      EXPECT_TRUE(th::verify_solution(sols[0]));
    }
  }
}

TEST(Divisibility, FilterIsNecessary) {
  for (int n = 2; n <= 12; ++n)
    for (int m = 1; m <= 6; ++m)
      for (auto v : {th::DivisibilityVariant::Direct, th::DivisibilityVariant::WithTFactor})
        if (!th::euler_divisibility_solutions(n, m, v, 30).empty()) {
          EXPECT_TRUE(th::divisibility_filter(n, m));
        }
  EXPECT_TRUE(th::divisibility_filter(3, 2));
  EXPECT_FALSE(th::divisibility_filter(2, 2));
}

TEST(Divisibility, VerifyRejectsTamperedSolution) {
  auto s = th::euler_divisibility_solutions(4, 1, th::DivisibilityVariant::Direct, 3).front();
  s.cofactor[1] += 1;
  EXPECT_FALSE(th::verify_solution(s));
}

TEST(FactorSearch, Examples) {
  const auto three = th::non_semifree_factor_search(3, 10);
  ASSERT_EQ(three.size(), 1u);
  EXPECT_EQ(three[0].a0, 0);
  EXPECT_EQ(three[0].cofactor, (std::vector<BigInt>{2, 2}));
  EXPECT_TRUE(th::verify_solution(three[0]));
  EXPECT_TRUE(th::non_semifree_factor_search(2, 10).empty());
  for (const auto& s : th::non_semifree_factor_search(5, 10)) EXPECT_EQ(s.a0, 0);
}

TEST(FactorSearch, OddOnlyAndA0Zero) {
  for (int n = 2; n <= 9; ++n) {
    const auto sols = th::non_semifree_factor_search(n, 10);
    EXPECT_EQ(sols.empty(), n % 2 == 0) << n;
    for (const auto& s : sols) {
      EXPECT_EQ(s.a0, 0);
      EXPECT_TRUE(th::verify_solution(s));
      // The cofactor is (2t + u)^{n+1} / (2t (2t + 2u)), i.e. dehomogenized
      // (1 + u)^{n+1} / (1 + 2u) without its top term.
      const auto want = oracle::quotient_by_linear(n, 2);
      for (int k = 1; k < n; ++k) EXPECT_EQ(Rational(s.cofactor[static_cast<std::size_t>(k - 1)]), want[static_cast<std::size_t>(k)]);
    }
  }
}

TEST(Obstruction, Examples) {
  const auto o3 = th::non_semifree_obstruction(3);
  EXPECT_EQ(o3.raw_t_power, -6);
  EXPECT_EQ(o3.raw_coefficient, Rational(-5, 4));
  EXPECT_EQ(o3.normalized_x, Rational(-5, 2));
  EXPECT_EQ(o3.normalized_y, Rational(-5, 2));
  EXPECT_EQ(abs(o3.normalized_x), 2 * Rational(10) / 8);
  EXPECT_TRUE(o3.semifree_vanishes);
  EXPECT_EQ(code_of([] { (void)th::non_semifree_obstruction(4); }), ErrorCode::Precondition);
  EXPECT_EQ(code_of([] { (void)th::non_semifree_obstruction(1); }), ErrorCode::Precondition);
}

TEST(Obstruction, AgainstOracle) {
  for (int n = 3; n <= 15; n += 2) {
    const auto o = th::non_semifree_obstruction(n);
    EXPECT_EQ(o.raw, LaurentClass::monomial(0, -2 * n, 0, oracle::non_semifree_integral_of_one(n)));
    const Rational a(oracle::geometric_power(n)[static_cast<std::size_t>(n - 1)]);
    EXPECT_EQ(abs(o.normalized_x), 2 * a / oracle::qpow(2, n));
    EXPECT_EQ(o.normalized_x, o.normalized_y);
    EXPECT_NE(o.normalized_total, 0);
    EXPECT_TRUE(o.semifree_vanishes);
  }
}

TEST(EulerDerivation, Examples) {
  const auto d2 = th::derive_euler_classes(2);
  EXPECT_EQ(d2.a, Rational(2));
  EXPECT_EQ(d2.b, Rational(2));
  EXPECT_EQ(d2.e_x, TruncPoly(2, {{2, 0, 1}, {1, 1, 1}, {0, 2, 1}}));

  // (t + 2u)(t^3 + 2t^2u + 2tu^2) = (t + u)^4 mod u^4; the u^3 coefficient is 0.
  const auto d3 = th::derive_euler_classes(3);
  EXPECT_EQ(d3.e_x, TruncPoly(3, {{3, 0, 1}, {2, 1, 2}, {1, 2, 2}}));
  EXPECT_TRUE(d3.identity_holds);

  const auto d1 = th::derive_euler_classes(1);
  EXPECT_EQ(d1.e_x, TruncPoly::t(1));
  EXPECT_FALSE(d1.a.has_value());
  EXPECT_TRUE(d1.identity_holds && d1.integrals_vanish);
}

TEST(EulerDerivation, Range) {
  for (int n = 2; n <= 20; ++n) {
    const auto d = th::derive_euler_classes(n);
    EXPECT_EQ(d.a, Rational(2)) << n;
    EXPECT_EQ(d.b, Rational(2)) << n;
    EXPECT_TRUE(d.identity_holds && d.integrals_vanish);
    const auto c = oracle::quotient_by_linear(n, 2);
    for (int k = 0; k <= n; ++k) EXPECT_EQ(d.e_x.coefficient(n - k, k), c[static_cast<std::size_t>(k)]);
  }
}

TEST(FirstChernClass, FromFixedData) {
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(th::c1_from_fixed_data(grassmannian_model(n)), 2 * n);
  // Weights {1,1,2} at X, their negatives at Y, gap 2.
  EXPECT_EQ(th::c1_from_pair(4, 0, -4, 2), 4);
  EXPECT_EQ(th::c1_from_pair(-4, 2, 4, 0), 4);
  EXPECT_EQ(code_of([] { (void)th::c1_from_pair(1, 1, 2, 1); }), ErrorCode::DivisionByZero);
}

TEST(FirstChernClass, WeightBoundExamples) {
  const std::vector<int> w12{1, 2}, w112{1, 1, 2}, w123{1, 2, 3};
  auto b = th::semifree_c1_bound(2, w12);
  EXPECT_EQ(b.gap, 2);
  EXPECT_EQ(b.c1_coeff, 3);
  EXPECT_TRUE(b.bound_holds);
  b = th::semifree_c1_bound(3, w112);
  EXPECT_EQ(b.gap, 2);
  EXPECT_EQ(b.c1_coeff, 4);
  b = th::semifree_c1_bound(3, w123);
  EXPECT_EQ(b.gap, 6);
  EXPECT_EQ(b.c1_coeff, 2);

  const std::vector<int> ones{1, 1, 1}, twos{2, 2}, gap13{1, 3};
  EXPECT_EQ(code_of([&] { (void)th::semifree_c1_bound(3, ones); }), ErrorCode::Precondition);
  // Distinct weights must be exactly {1, ..., N}.
  EXPECT_EQ(code_of([&] { (void)th::semifree_c1_bound(2, twos); }), ErrorCode::Precondition);
  EXPECT_EQ(code_of([&] { (void)th::semifree_c1_bound(2, gap13); }), ErrorCode::Precondition);
  EXPECT_EQ(code_of([&] { (void)th::semifree_c1_bound(3, w12); }), ErrorCode::Precondition);
}

TEST(Betti, Examples) {
  EXPECT_EQ(th::betti_numbers(2, 2).betti, (std::vector<int>{1, 0, 1, 0, 2, 0, 1, 0, 1}));
  EXPECT_EQ(th::betti_numbers(1, 1).betti, (std::vector<int>{1, 0, 2, 0, 1}));
  for (int n = 1; n <= 20; ++n) {
    const auto b = th::betti_numbers(n, n);
    EXPECT_TRUE(b.palindromic);
    EXPECT_EQ(b.euler_characteristic, 2 * n + 2);
    EXPECT_EQ(b.betti[static_cast<std::size_t>(2 * n)], 2);
  }
  EXPECT_FALSE(th::betti_numbers(1, 3).palindromic);
}

TEST(TotalChernX, MatchesBinomialRow) {
  EXPECT_EQ(th::derive_total_chern_X(2), TruncPoly(2, {{0, 0, 1}, {0, 1, 3}, {0, 2, 3}}));
  EXPECT_EQ(th::derive_total_chern_X(3), TruncPoly(3, {{0, 0, 1}, {0, 1, 4}, {0, 2, 6}, {0, 3, 4}}));
  for (int n = 2; n <= 30; ++n) EXPECT_EQ(th::derive_total_chern_X(n), binomial_row(n)) << n;
  EXPECT_EQ(code_of([] { (void)th::derive_total_chern_X(1); }), ErrorCode::Precondition);
}

TEST(ChernConsistency, HoldsAndDetectsMutation) {
  for (int n = 1; n <= 20; ++n) {
    EXPECT_TRUE(th::chern_consistency(n)) << n;
    EXPECT_FALSE(th::chern_consistency(n, th::GlobalChernFormula{3})) << n;
  }
}

TEST(ModuleBasis, HoldsAndDetectsPerturbation) {
  for (int n = 1; n <= 20; ++n) {
    EXPECT_TRUE(th::module_basis_check(n)) << n;
    EXPECT_FALSE(th::module_basis_check(n, TruncPoly::g(n).pow(static_cast<unsigned>(n)))) << n;
  }
}

TEST(RingPresentation, Examples) {
  auto r = th::ring_presentation(2);
  EXPECT_EQ(r.relations, (std::vector<std::string>{"x^3 = 2xy", "y^2 = x^2y"}));
  r = th::ring_presentation(3);
  EXPECT_EQ(r.relations, (std::vector<std::string>{"x^4 = 2xy", "y^2 = 0"}));
  r = th::ring_presentation(1);
  EXPECT_EQ(r.relations, (std::vector<std::string>{"x^2 = 2xy", "y^2 = 0"}));
}

// H*(S^2 x S^2) = Z[x1, x2]/(x1^2, x2^2) with x = x1 + x2, y = x2 satisfies
// the n = 1 relations.
TEST(RingPresentation, DimensionFourAgreesWithProductOfSpheres) {
  // Basis 1, x1, x2, x1x2 as bit masks; product of monomials vanishes on overlap.
  using Elem = std::array<int, 4>;
  auto mul = [](const Elem& a, const Elem& b) {
    Elem out{0, 0, 0, 0};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if ((i & j) == 0) out[static_cast<std::size_t>(i | j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    return out;
  };
  const Elem x{0, 1, 1, 0}, y{0, 0, 1, 0};
  const auto r = th::ring_presentation(1);
  const Elem x2 = mul(x, x), xy = mul(x, y), y2 = mul(y, y);
  const int c = static_cast<int>(r.relation_coeff.get_num().get_si());
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(x2[static_cast<std::size_t>(i)], c * xy[static_cast<std::size_t>(i)]);
    EXPECT_EQ(y2[static_cast<std::size_t>(i)], 0);
  }
  EXPECT_EQ(r.epsilon, 0);
}

TEST(RingPresentation, EpsilonRange) {
  for (int n = 1; n <= 20; ++n) {
    const auto r = th::ring_presentation(n);
    EXPECT_EQ(r.epsilon, n % 2 == 0 ? 1 : 0);
    EXPECT_TRUE(r.epsilon_matches);
    EXPECT_EQ(r.relation_coeff, 2);
    EXPECT_EQ(r.top_integral, 1);
  }
}

TEST(LocalizationSweep, NoFailures) {
  for (int n = 1; n <= 8; ++n) {
    const auto s = th::localization_sweep(n);
    EXPECT_EQ(s.failures, 0);
    EXPECT_GT(s.below_top, 0);
    EXPECT_GT(s.at_top, 0);
  }
}
