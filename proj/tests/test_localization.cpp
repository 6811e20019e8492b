#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "hamloc/localization.hpp"
#include "hamloc/model_io.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hamloc;

namespace {

bool has_violation(const std::vector<Violation>& vs, std::string_view name) {
  for (const auto& v : vs)
    if (v.invariant == name) return true;
  return false;
}

EquivariantInput constant_one(int n) { return {TruncPoly::constant(n, 1), TruncPoly::constant(n, 1), 0}; }

oracle::Dense to_dense(const TruncPoly& p) {
  oracle::Dense d(p.trunc_order(), p.max_t_power().value_or(0));
  for (const auto& [m, c] : p.terms()) d.c[static_cast<std::size_t>(m.t)][static_cast<std::size_t>(m.u)] = c;
  return d;
}

std::map<int, mpq_class> oracle_integral(int n, const EquivariantInput& a) {
  auto x = oracle::grass_component_integral(n, 1, to_dense(a.at_x));
  const auto y = oracle::grass_component_integral(n, -1, to_dense(a.at_y));
  for (const auto& [p, c] : y) x[p] += c;
  for (auto it = x.begin(); it != x.end();) it = it->second == 0 ? x.erase(it) : std::next(it);
  return x;
}

std::map<int, mpq_class> as_map(const LaurentClass& l) {
  std::map<int, mpq_class> out;
  for (const auto& [m, c] : l.terms()) out[m.t] = c;
  return out;
}

}  // namespace

TEST(ValidateModel, GrassmannianModelIsValid) {
  for (int n = 1; n <= 8; ++n) EXPECT_TRUE(validate_model(grassmannian_model(n)).empty()) << n;
}

TEST(ValidateModel, NonIntegralGap) {
  HamiltonianModel m = grassmannian_model(2);
  m.y.moment_value = Rational(3, 2);
  EXPECT_TRUE(has_violation(validate_model(m), "integral-moment-gap"));
}

TEST(ValidateModel, WeightMustDivideGap) {
  HamiltonianModel m = grassmannian_model(2);
  m.x.weights = {1, 2};
  const auto vs = validate_model(m);
  EXPECT_TRUE(has_violation(vs, "weight-divides-gap"));
}

TEST(ValidateModel, OtherInvariants) {
  HamiltonianModel m = grassmannian_model(2);
  m.total_dim = 10;
  EXPECT_TRUE(has_violation(validate_model(m), "dimension-balance"));

  m = grassmannian_model(2);
  m.y.weights = {1, -1};
  EXPECT_TRUE(has_violation(validate_model(m), "weight-direction"));

  m = grassmannian_model(2);
  m.x.weights = {0, 1};
  EXPECT_TRUE(has_violation(validate_model(m), "zero-weight"));

  m = grassmannian_model(2);
  m.x.orient_norm = 2;
  EXPECT_TRUE(has_violation(validate_model(m), "orientation"));

  m = grassmannian_model(2);
  m.x.euler_class.add_term(1, 0, 1);  // t-term without a generator power
  EXPECT_TRUE(has_violation(validate_model(m), "euler-class-shape"));

  m = grassmannian_model(2);
  m.x.weights = {1};
  EXPECT_TRUE(has_violation(validate_model(m), "normal-rank"));
}

TEST(ValidateModel, NonSemifreeModel) {
  for (int n : {3, 5, 7}) {
    const HamiltonianModel m = non_semifree_model(n);
    EXPECT_TRUE(validate_model(m).empty()) << n;
    EXPECT_EQ(m.x.weight_product(), BigInt(1) << (n - 1));
    EXPECT_EQ(m.moment_gap(), 2);
  }
  EXPECT_EQ(code_of([] { (void)non_semifree_model(4); }), ErrorCode::Precondition);
}

TEST(RestrictUTilde, Examples) {
  const HamiltonianModel g = grassmannian_model(2);
  EXPECT_EQ(restrict_u_tilde(g, ComponentName::X), TruncPoly::g(2));
  EXPECT_EQ(restrict_u_tilde(g, ComponentName::Y), TruncPoly::g(2) - TruncPoly::t(2));
  const HamiltonianModel ns = non_semifree_model(3);
  EXPECT_EQ(restrict_u_tilde(ns, ComponentName::Y), TruncPoly::g(3) - TruncPoly::monomial(3, 1, 0, 2));
  HamiltonianModel bad = g;
  bad.y.moment_value = Rational(1, 2);
  EXPECT_EQ(code_of([&] { (void)restrict_u_tilde(bad, ComponentName::Y); }), ErrorCode::Precondition);
}

TEST(IntegrateComponent, Examples) {
  const HamiltonianModel g1 = grassmannian_model(1);
  EXPECT_EQ(g1.x.euler_class, TruncPoly::t(1));
  EXPECT_TRUE(integrate_component(TruncPoly::constant(1, 1), g1.x).is_zero());
  EXPECT_EQ(integrate_component(TruncPoly::g(1), g1.x), LaurentClass::monomial(0, -1, 0));

  const HamiltonianModel g2 = grassmannian_model(2);
  EXPECT_EQ(g2.x.euler_class, TruncPoly(2, {{2, 0, 1}, {1, 1, 1}, {0, 2, 1}}));
  // Read the u^2 row of 1/(t^2 + tu + u^2): zero.
  const auto want = oracle::grass_component_integral(2, 1, oracle::Dense::one(2));
  EXPECT_TRUE(want.empty());
  EXPECT_TRUE(integrate_component(TruncPoly::constant(2, 1), g2.x).is_zero());
  EXPECT_EQ(code_of([&] { (void)integrate_component(TruncPoly::constant(1, 1), g2.x); }), ErrorCode::OrderMismatch);
}

TEST(Abbv, Examples) {
  for (int n = 1; n <= 6; ++n) {
    const auto v = abbv_integrate(grassmannian_model(n), constant_one(n));
    EXPECT_TRUE(v.value.is_zero());
    EXPECT_FALSE(v.obstruction);
  }
  for (int n = 2; n <= 3; ++n) {
    const HamiltonianModel m = grassmannian_model(n);
    const TruncPoly beta0 = m.y.euler_class;
    const auto v = abbv_integrate(m, {TruncPoly(n), beta0 * beta0, 4 * n});
    EXPECT_TRUE(v.is_scalar());
    EXPECT_EQ(v.scalar(), n % 2 == 0 ? 1 : 0);
  }
}

TEST(Abbv, RejectsInhomogeneousInput) {
  const HamiltonianModel m = grassmannian_model(2);
  EquivariantInput a{TruncPoly::constant(2, 1) + TruncPoly::t(2), TruncPoly::constant(2, 1), 0};
  EXPECT_FALSE(is_well_formed(m, a));
  EXPECT_EQ(code_of([&] { (void)abbv_integrate(m, a); }), ErrorCode::Precondition);
}

TEST(Abbv, FlagsObstruction) {
  const auto v = abbv_integrate(non_semifree_model(3), constant_one(3));
  EXPECT_TRUE(v.obstruction);
  EXPECT_EQ(v.value, LaurentClass::monomial(0, -6, 0, oracle::non_semifree_integral_of_one(3)));
}

// Every monomial u~^a (u~ + t)^b and t^j u~^i against the independent integrator.
TEST(Abbv, MonomialFamiliesMatchOracle) {
  for (int n = 1; n <= 5; ++n) {
    const HamiltonianModel m = grassmannian_model(n);
    const Localizer loc(m);
    const TruncPoly ux = restrict_u_tilde(m, ComponentName::X), uy = restrict_u_tilde(m, ComponentName::Y);
    const TruncPoly t = TruncPoly::t(n);
    for (int a = 0; a <= 2 * n; ++a)
      for (int b = 0; a + b <= 2 * n; ++b) {
        const EquivariantInput in{ux.pow(a) * (ux + t).pow(b), uy.pow(a) * (uy + t).pow(b), 2 * (a + b)};
        const auto v = loc.integrate(in);
        ASSERT_EQ(as_map(v.value), oracle_integral(n, in)) << "n=" << n << " a=" << a << " b=" << b;
        if (a + b < 2 * n) ASSERT_TRUE(v.value.is_zero());
        else ASSERT_TRUE(v.is_scalar());
        const EquivariantInput tj{t.pow(b) * ux.pow(a), t.pow(b) * uy.pow(a), 2 * (a + b)};
        ASSERT_EQ(as_map(loc.integrate(tj).value), oracle_integral(n, tj));
      }
  }
}

TEST(Abbv, VanishingBelowTopDegree) {
  for (int n = 1; n <= 20; ++n) {
    const HamiltonianModel m = grassmannian_model(n);
    const Localizer loc(m);
    const TruncPoly ux = restrict_u_tilde(m, ComponentName::X), uy = restrict_u_tilde(m, ComponentName::Y);
    const TruncPoly t = TruncPoly::t(n);
    for (int a = 0; a <= 2 * n; a += 3)
      for (int b = 0; a + b <= 2 * n; b += 2) {
        const auto v = loc.integrate({ux.pow(a) * (ux + t).pow(b), uy.pow(a) * (uy + t).pow(b), 2 * (a + b)});
        if (a + b < 2 * n) ASSERT_TRUE(v.value.is_zero()) << n << " " << a << " " << b;
        else ASSERT_TRUE(v.is_scalar() && !v.obstruction);
      }
  }
}

TEST(Abbv, Linearity) {
  std::mt19937 rng(17);
  for (int n = 1; n <= 4; ++n) {
    const Localizer loc(grassmannian_model(n));
    for (int trial = 0; trial < 40; ++trial) {
      // Homogeneous random classes of one degree.
      const int deg = 2 * std::uniform_int_distribution<int>(0, 2 * n)(rng);
      auto homog = [&] {
        TruncPoly p(n);
        for (int j = 0; j <= n && j <= deg / 2; ++j) p.add_term(deg / 2 - j, j, gen::small_rational(rng));
        return p;
      };
      const EquivariantInput c1{homog(), homog(), deg}, c2{homog(), homog(), deg};
      const Rational a = gen::small_rational(rng), b = gen::small_rational(rng);
      const EquivariantInput mix{c1.at_x * a + c2.at_x * b, c1.at_y * a + c2.at_y * b, deg};
      ASSERT_EQ(loc.integrate(mix).value, loc.integrate(c1).value * a + loc.integrate(c2).value * b);
    }
  }
}

TEST(Abbv, OrientationFlipNegatesOneComponent) {
  for (int n = 1; n <= 5; ++n) {
    HamiltonianModel m = grassmannian_model(n);
    const TruncPoly ux = restrict_u_tilde(m, ComponentName::X), uy = restrict_u_tilde(m, ComponentName::Y);
    const EquivariantInput in{ux.pow(2 * n), uy.pow(2 * n), 4 * n};
    const auto before = abbv_integrate(m, in);
    m.y.orient_norm = -1;
    const auto after = abbv_integrate(m, in);
    EXPECT_EQ(after.from_x, before.from_x);
    EXPECT_EQ(after.from_y, -before.from_y);
  }
}

TEST(LiftCofactor, GrassmannianModel) {
  for (int n = 1; n <= 10; ++n) {
    const auto l = lift_cofactor(grassmannian_model(n));
    ASSERT_TRUE(l.has_value());
    EXPECT_EQ(*l, TruncPoly::t(n) + TruncPoly::monomial(n, 0, 1, 2));
  }
}

TEST(DivideByLinear, MatchesRecurrence) {
  for (int n = 1; n <= 10; ++n) {
    const TruncPoly q = divide_by_linear(linear_power(n, 1, 1, static_cast<unsigned>(n + 1)), 1, 2);
    const auto c = oracle::quotient_by_linear(n, 2);
    for (int k = 0; k <= n; ++k) EXPECT_EQ(q.coefficient(n - k, k), c[static_cast<std::size_t>(k)]);
  }
  EXPECT_EQ(code_of([] { (void)divide_by_linear(TruncPoly::t(2), 0, 1); }), ErrorCode::UnsupportedShape);
  EXPECT_EQ(code_of([] { (void)divide_by_linear(TruncPoly::constant(2, 1), 1, 1); }), ErrorCode::UnsupportedShape);
}

TEST(ModelIo, RoundTrip) {
  for (int n = 1; n <= 4; ++n) {
    const HamiltonianModel m = grassmannian_model(n);
    const auto j = to_json(m);
    const HamiltonianModel back = model_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(to_json(back).dump(), j.dump());
    EXPECT_EQ(back.x.euler_class, m.x.euler_class);
    EXPECT_EQ(back.y.moment_value, m.y.moment_value);
  }
  const auto j = to_json(grassmannian_model(2).x);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"name", "half_dim", "moment_value", "weights", "euler_class", "orient_norm"}));
  EXPECT_EQ(j["moment_value"], "0");
}

TEST(ModelIo, MalformedInput) {
  EXPECT_EQ(code_of([] { (void)model_from_json(nlohmann::json::parse(R"({"total_dim": 4})")); }), ErrorCode::Parse);
  auto j = nlohmann::json::parse(to_json(grassmannian_model(1)).dump());
  j["components"][0]["moment_value"] = "1/0";
  EXPECT_EQ(code_of([&] { (void)model_from_json(j); }), ErrorCode::Parse);
}
