#include "hamloc/error.hpp"
#include "hamloc/theorems.hpp"

namespace hamloc::theorems {

namespace {

// Restriction to a point: t^a g^b -> (g_value)^b s^{a+b} as a class in s
// alone (stored in the generator slot, truncated at s^{order+1}).
TruncPoly at_point(const TruncPoly& p, const Rational& g_value, int order) {
  TruncPoly out(order);
  for (const auto& [m, c] : p.terms()) {
    Rational gv = 1;
    for (int i = 0; i < m.u; ++i) gv *= g_value;
    out.add_term(0, m.t + m.u, c * gv);
  }
  return out;
}

TruncPoly binomial_row(int n) { return (TruncPoly::constant(n, 1) + TruncPoly::g(n)).pow(static_cast<unsigned>(n + 1)); }

}  // namespace

TruncPoly derive_total_chern_X(int n) {
  if (n < 2) throw Error(ErrorCode::Precondition, "n must be at least 2");
  const TruncPoly normal = normal_chern_class(n);
  const TruncPoly cx_normal = chern_to_equivariant(normal, 1, n).total;
  const TruncPoly cy_normal = chern_to_equivariant(normal, -1, n).total;

  // At a point of X the generator u restricts to -t; at a point of Y, v restricts to 0.
  const TruncPoly lhs = at_point(cx_normal, -1, n - 1);
  const TruncPoly rhs = at_point(cy_normal, 0, n - 1);
  const TruncPoly series = rhs * poly_invert_unit(lhs);  // 1 + sum a_i (-s)^i mod s^n

  TruncPoly cx(n);
  for (const auto& [m, c] : series.terms()) cx.add_term(0, m.u, m.u % 2 == 0 ? c : -c);
  // The top coefficient is the Euler characteristic of X.
  cx.add_term(0, n, n + 1);
  if (cx != binomial_row(n))
    throw Error(ErrorCode::InternalInvariant, "derived c(X) is " + cx.to_string());
  return cx;
}

bool chern_consistency(int n, GlobalChernFormula formula) {
  if (n < 1) throw Error(ErrorCode::Precondition, "n must be at least 1");
  const HamiltonianModel m = grassmannian_model(n);
  const TruncPoly one = TruncPoly::constant(n, 1);
  const TruncPoly t = TruncPoly::t(n);
  const TruncPoly c_f = n >= 2 ? derive_total_chern_X(n) : binomial_row(n);
  const TruncPoly normal = normal_chern_class(n);
  const auto e = static_cast<unsigned>(n + 1);

  for (ComponentName name : {ComponentName::X, ComponentName::Y}) {
    const TruncPoly u = restrict_u_tilde(m, name);
    const long lambda = name == ComponentName::X ? 1 : -1;
    const TruncPoly lhs = (one + t + u * Rational(formula.denominator_u_coeff)) * c_f *
                          chern_to_equivariant(normal, lambda, n).total;
    const TruncPoly rhs = (one + u).pow(e) * (one + t + u).pow(e);
    if (lhs != rhs) return false;
  }
  return true;
}

bool module_basis_check(int n, const std::optional<TruncPoly>& beta0_perturbation) {
  if (n < 1) throw Error(ErrorCode::Precondition, "n must be at least 1");
  const HamiltonianModel m = grassmannian_model(n);
  const TruncPoly t = TruncPoly::t(n);
  const TruncPoly ux = restrict_u_tilde(m, ComponentName::X);
  const TruncPoly uy = restrict_u_tilde(m, ComponentName::Y);
  const auto e = static_cast<unsigned>(n + 1);

  for (int i = 0; i <= n; ++i) {
    // beta_i|_X = 0, so the X side reduces to u^{n+1}(u+t)^i == 0.
    if (!(ux.pow(e) * (ux + t).pow(static_cast<unsigned>(i))).is_zero()) return false;
    TruncPoly beta_y = TruncPoly::monomial(n, 0, i) * m.y.euler_class;
    if (i == 0 && beta0_perturbation) beta_y += *beta0_perturbation;
    if ((uy * Rational(2) + t) * beta_y != uy.pow(e) * (uy + t).pow(static_cast<unsigned>(i))) return false;
  }
  return true;
}

}  // namespace hamloc::theorems
