#include <utility>
#include <vector>

#include "hamloc/error.hpp"
#include "hamloc/localization.hpp"

namespace hamloc {

namespace {

// The g^k row of a·b without forming the rest of the product.
LaurentClass top_row(const TruncPoly& a, const LaurentClass& b, int k) {
  std::vector<std::vector<std::pair<int, const Rational*>>> rows(static_cast<std::size_t>(k) + 1);
  for (const auto& [m, c] : b.terms())
    if (m.u <= k) rows[static_cast<std::size_t>(m.u)].emplace_back(m.t, &c);

  LaurentClass out(0);
  Rational prod;
  for (const auto& [ma, ca] : a.terms()) {
    if (ma.u > k) continue;
    for (const auto& [tb, cb] : rows[static_cast<std::size_t>(k - ma.u)]) {
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb->get_mpq_t());
      out.add_term(ma.t + tb, 0, prod);
    }
  }
  return out;
}

LaurentClass fiber_integral(const TruncPoly& alpha, const LaurentClass& inverse, const FixedComponent& comp) {
  if (alpha.trunc_order() != comp.half_dim)
    throw Error(ErrorCode::OrderMismatch, "class on " + std::string(to_string(comp.name)) + " has order " +
                                              std::to_string(alpha.trunc_order()) + ", component has half-dimension " +
                                              std::to_string(comp.half_dim));
  return top_row(alpha, inverse, comp.half_dim) * Rational(comp.orient_norm);
}

}  // namespace

LaurentClass inverse_euler_class(const FixedComponent& comp) {
  return invert_euler_class(comp.euler_class, comp.normal_rank(), Rational(comp.weight_product()));
}

LaurentClass integrate_component(const TruncPoly& alpha_f, const FixedComponent& comp) {
  return fiber_integral(alpha_f, inverse_euler_class(comp), comp);
}

bool LocalizationValue::is_scalar() const {
  for (const auto& [m, c] : value.terms())
    if (m.t != 0) return false;
  return true;
}

Localizer::Localizer(HamiltonianModel model)
    : model_(std::move(model)), inv_x_(inverse_euler_class(model_.x)), inv_y_(inverse_euler_class(model_.y)) {}

LaurentClass Localizer::integrate_over(ComponentName name, const TruncPoly& alpha_f) const {
  return fiber_integral(alpha_f, inverse_euler(name), model_.component(name));
}

LocalizationValue Localizer::integrate(const EquivariantInput& alpha) const {
  if (!alpha.at_x.is_homogeneous(alpha.degree) || !alpha.at_y.is_homogeneous(alpha.degree))
    throw Error(ErrorCode::Precondition, "class is not homogeneous of degree " + std::to_string(alpha.degree));

  LocalizationValue out;
  out.degree = alpha.degree;
  out.total_dim = model_.total_dim;
  out.from_x = integrate_over(ComponentName::X, alpha.at_x);
  out.from_y = integrate_over(ComponentName::Y, alpha.at_y);
  out.value = out.from_x + out.from_y;

  // The integral over M is a polynomial in t of degree (deg - dim)/2; anything
  // else is an obstruction.
  const int excess = alpha.degree - model_.total_dim;
  if (excess < 0 || excess % 2 != 0) {
    out.obstruction = !out.value.is_zero();
  } else {
    for (const auto& [m, c] : out.value.terms())
      if (m.t != excess / 2) out.obstruction = true;
  }
  return out;
}

LocalizationValue abbv_integrate(const HamiltonianModel& m, const EquivariantInput& alpha) {
  return Localizer(m).integrate(alpha);
}

std::optional<TruncPoly> lift_cofactor(const HamiltonianModel& m) {
  const Rational gap = m.moment_gap();
  const int k = m.x.half_dim;
  const TruncPoly base = TruncPoly::g(k) + TruncPoly::monomial(k, 1, 0, gap);
  return to_poly(base.pow(static_cast<unsigned>(m.y.half_dim + 1)) * inverse_euler_class(m.x));
}

}  // namespace hamloc
