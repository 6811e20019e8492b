#include "hamloc/error.hpp"
#include "hamloc/theorems.hpp"

namespace hamloc::theorems {

namespace {

std::string power(std::string_view var, int e) {
  std::string s(var);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

std::string scaled(const Rational& c, const std::string& monomial) {
  return c == 1 ? monomial : format_rational(c) + monomial;
}

}  // namespace

RingPresentation ring_presentation(int n) {
  if (n < 1) throw Error(ErrorCode::Precondition, "n must be at least 1");
  const HamiltonianModel m = grassmannian_model(n);
  const Localizer loc(m);
  const TruncPoly uy = restrict_u_tilde(m, ComponentName::Y);
  const TruncPoly zero(n);
  const TruncPoly& beta0_y = m.y.euler_class;

  RingPresentation out;
  out.n = n;

  // u~^{n+1} vanishes on X, so it is lambda·beta_0 with lambda|_Y = (v - t)^{n+1} / e(N_Y).
  const auto lambda = to_poly(uy.pow(static_cast<unsigned>(n + 1)) * loc.inverse_euler(ComponentName::Y));
  if (!lambda || !lambda->is_homogeneous(2))
    throw Error(ErrorCode::InternalInvariant, "u~^{n+1} is not a degree-2 multiple of beta_0");
  // Modulo t, lambda|_Y = c·v, i.e. lambda = c·u~ + (multiple of t).
  out.relation_coeff = lambda->coefficient(0, 1);

  const LocalizationValue square = loc.integrate({zero, beta0_y * beta0_y, 4 * n});
  const LocalizationValue top = loc.integrate({zero, uy.pow(static_cast<unsigned>(n)) * beta0_y, 4 * n});
  if (!square.is_scalar() || !top.is_scalar() || top.scalar() == 0)
    throw Error(ErrorCode::InternalInvariant, "top-degree integrals are not nonzero constants");
  out.top_integral = top.scalar();
  out.epsilon = square.scalar() / out.top_integral;
  out.epsilon_matches = out.epsilon == (n % 2 == 0 ? 1 : 0);

  out.relations.push_back(power("x", n + 1) + " = " + scaled(out.relation_coeff, "xy"));
  out.relations.push_back(out.epsilon == 0 ? "y^2 = 0" : "y^2 = " + scaled(out.epsilon, power("x", n) + "y"));
  out.betti = betti_numbers(n, n).betti;
  return out;
}

}  // namespace hamloc::theorems
