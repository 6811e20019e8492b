#include <array>
#include <vector>

#include "hamloc/error.hpp"
#include "hamloc/theorems.hpp"

namespace hamloc::theorems {

Obstruction non_semifree_obstruction(int n) {
  if (n < 3 || n % 2 == 0) throw Error(ErrorCode::Precondition, "the configuration exists only for odd n >= 3");
  const HamiltonianModel model = non_semifree_model(n);
  const EquivariantInput one{TruncPoly::constant(n, 1), TruncPoly::constant(n, 1), 0};
  const LocalizationValue v = abbv_integrate(model, one);

  Obstruction out;
  out.n = n;
  out.raw = v.value;
  if (auto lo = v.value.min_t_power()) {
    out.raw_t_power = *lo;
    out.raw_coefficient = v.value.coefficient(*lo, 0);
  }
  // (2t)^{n+1}/(4t) = 2^{n-1} t^n moves the contributions from t^{-2n} to t^{-n}.
  const Rational scale(BigInt(1) << static_cast<mp_bitcnt_t>(n - 1));
  out.normalized_x = scale * v.from_x.coefficient(-2 * n, 0);
  out.normalized_y = scale * v.from_y.coefficient(-2 * n, 0);
  out.normalized_total = out.normalized_x + out.normalized_y;

  const ABPair ab = coefficients_AB(n);
  out.expected_component = Rational(2 * ab.a) / Rational(BigInt(1) << static_cast<mp_bitcnt_t>(n));
  out.expected_component.canonicalize();
  if (n % 2 == 1) out.expected_component = -out.expected_component;

  out.semifree_vanishes = abbv_integrate(grassmannian_model(n), one).value.is_zero();
  return out;
}

namespace {

HamiltonianModel parametrized_model(int n, const Rational& a, const Rational& b) {
  HamiltonianModel m = grassmannian_model(n);
  const auto e = static_cast<unsigned>(n + 1);
  m.x.euler_class = divide_by_linear(linear_power(n, 1, 1, e), 1, a);
  m.y.euler_class = divide_by_linear(linear_power(n, -1, 1, e), -1, b);
  return m;
}

// Integrals of 1 and of c1^{S1}(M) = Gamma_F t + c1(M) [omega]|_F.
std::array<LaurentClass, 2> probe(int n, const Rational& a, const Rational& b) {
  const HamiltonianModel m = parametrized_model(n, a, b);
  const Localizer loc(m);
  const Rational c1 = c1_from_fixed_data(m);
  const EquivariantInput one{TruncPoly::constant(n, 1), TruncPoly::constant(n, 1), 0};
  const EquivariantInput chern{TruncPoly::monomial(n, 1, 0, m.x.weight_sum()) + TruncPoly::monomial(n, 0, 1, c1),
                               TruncPoly::monomial(n, 1, 0, m.y.weight_sum()) + TruncPoly::monomial(n, 0, 1, c1), 2};
  return {loc.integrate(one).value, loc.integrate(chern).value};
}

struct Row {
  Rational ca, cb, c0;  // ca·a + cb·b + c0 = 0
};

}  // namespace

EulerDerivation derive_euler_classes(int n) {
  if (n < 1) throw Error(ErrorCode::Precondition, "n must be at least 1");
  EulerDerivation out;
  out.n = n;
  const auto e = static_cast<unsigned>(n + 1);

  if (n == 1) {
    // Rank-one normal bundles: the Euler classes are the weights times t.
    out.e_x = TruncPoly::t(1);
    out.e_y = -TruncPoly::t(1);
  } else {
    const auto p00 = probe(n, 0, 0);
    const auto p10 = probe(n, 1, 0);
    const auto p01 = probe(n, 0, 1);
    const auto p23 = probe(n, 2, 3);

    std::vector<Row> rows;
    for (std::size_t i = 0; i < 2; ++i) {
      const LaurentClass da = p10[i] - p00[i];
      const LaurentClass db = p01[i] - p00[i];
      if (p23[i] != p00[i] + da * Rational(2) + db * Rational(3))
        throw Error(ErrorCode::InternalInvariant, "localization integral is not affine in (a, b)");
      TermMap support = p00[i].terms();
      support.insert(da.terms().begin(), da.terms().end());
      support.insert(db.terms().begin(), db.terms().end());
      for (const auto& [mono, unused] : support)
        rows.push_back({da.coefficient(mono.t, mono.u), db.coefficient(mono.t, mono.u),
                        p00[i].coefficient(mono.t, mono.u)});
    }

    std::optional<std::pair<Rational, Rational>> sol;
    for (std::size_t i = 0; i < rows.size() && !sol; ++i)
      for (std::size_t j = i + 1; j < rows.size() && !sol; ++j) {
        const Rational det = rows[i].ca * rows[j].cb - rows[i].cb * rows[j].ca;
        if (det == 0) continue;
        sol.emplace((-rows[i].c0 * rows[j].cb + rows[i].cb * rows[j].c0) / det,
                    (-rows[i].ca * rows[j].c0 + rows[i].c0 * rows[j].ca) / det);
      }
    if (!sol) throw Error(ErrorCode::InternalInvariant, "localization system for (a, b) is singular");
    for (const Row& r : rows)
      if (r.ca * sol->first + r.cb * sol->second + r.c0 != 0)
        throw Error(ErrorCode::InternalInvariant, "localization system for (a, b) is inconsistent");

    out.a = sol->first;
    out.b = sol->second;
    out.e_x = divide_by_linear(linear_power(n, 1, 1, e), 1, *out.a);
    out.e_y = divide_by_linear(linear_power(n, -1, 1, e), -1, *out.b);
  }

  out.identity_holds = linear_power(n, 1, 2, 1) * out.e_x == linear_power(n, 1, 1, e) &&
                       linear_power(n, -1, 2, 1) * out.e_y == linear_power(n, -1, 1, e);

  HamiltonianModel m = grassmannian_model(n);
  m.x.euler_class = out.e_x;
  m.y.euler_class = out.e_y;
  const Localizer loc(m);
  const Rational c1 = c1_from_fixed_data(m);
  const EquivariantInput one{TruncPoly::constant(n, 1), TruncPoly::constant(n, 1), 0};
  const EquivariantInput chern{TruncPoly::monomial(n, 1, 0, m.x.weight_sum()) + TruncPoly::monomial(n, 0, 1, c1),
                               TruncPoly::monomial(n, 1, 0, m.y.weight_sum()) + TruncPoly::monomial(n, 0, 1, c1), 2};
  out.integrals_vanish = loc.integrate(one).value.is_zero() && loc.integrate(chern).value.is_zero();
  return out;
}

VanishingSweep localization_sweep(int n) {
  if (n < 1) throw Error(ErrorCode::Precondition, "n must be at least 1");
  const HamiltonianModel m = grassmannian_model(n);
  const Localizer loc(m);
  const int top = m.total_dim;
  const TruncPoly ux = restrict_u_tilde(m, ComponentName::X);
  const TruncPoly uy = restrict_u_tilde(m, ComponentName::Y);
  const TruncPoly tx = TruncPoly::t(n);
  const TruncPoly zero(n);

  VanishingSweep out;
  out.n = n;
  auto check = [&](const TruncPoly& at_x, const TruncPoly& at_y, int degree) {
    const LocalizationValue v = loc.integrate({at_x, at_y, degree});
    bool ok;
    if (degree < top) {
      ++out.below_top;
      ok = v.value.is_zero();
    } else {
      ++out.at_top;
      ok = v.is_scalar() && !v.obstruction;
    }
    if (!ok) ++out.failures;
  };

  // Powers are built incrementally so each family costs one product per class.
  std::vector<TruncPoly> ux_pow{TruncPoly::constant(n, 1)}, uy_pow{TruncPoly::constant(n, 1)};
  std::vector<TruncPoly> uxt_pow{TruncPoly::constant(n, 1)}, uyt_pow{TruncPoly::constant(n, 1)};
  std::vector<TruncPoly> t_pow{TruncPoly::constant(n, 1)};
  for (int i = 1; i <= 2 * n; ++i) {
    ux_pow.push_back(ux_pow.back() * ux);
    uy_pow.push_back(uy_pow.back() * uy);
    uxt_pow.push_back(uxt_pow.back() * (ux + tx));
    uyt_pow.push_back(uyt_pow.back() * (uy + tx));
    t_pow.push_back(t_pow.back() * tx);
  }

  for (int i = 0; i <= 2 * n; ++i)
    for (int j = 0; i + j <= 2 * n; ++j) {
      const auto ii = static_cast<std::size_t>(i), jj = static_cast<std::size_t>(j);
      check(t_pow[jj] * ux_pow[ii], t_pow[jj] * uy_pow[ii], 2 * (i + j));
      check(ux_pow[ii] * uxt_pow[jj], uy_pow[ii] * uyt_pow[jj], 2 * (i + j));
    }

  // beta_i: zero on X, v^i e(N_Y) on Y, degree 2(n + i).
  for (int i = 0; i <= n; ++i) {
    const TruncPoly beta_y = TruncPoly::monomial(n, 0, i) * m.y.euler_class;
    for (int j = 0; n + i + j <= 2 * n; ++j) check(zero, t_pow[static_cast<std::size_t>(j)] * beta_y, 2 * (n + i + j));
  }
  return out;
}

}  // namespace hamloc::theorems
