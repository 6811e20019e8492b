#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hamloc/poly.hpp"
#include "hamloc/rational.hpp"

namespace hamloc {

enum class ComponentName { X, Y };

std::string_view to_string(ComponentName name);

/// One connected component F of the fixed point set. Its ordinary cohomology
/// is modelled as Z[g]/g^{half_dim+1}, and orient_norm is the value of the
/// fiber integral of g^{half_dim}.
struct FixedComponent {
  ComponentName name = ComponentName::X;
  int half_dim = 0;
  Rational moment_value;
  std::vector<int> weights;
  TruncPoly euler_class;
  int orient_norm = 1;

  int normal_rank() const { return static_cast<int>(weights.size()); }
  /// Gamma_F, the sum of the weights.
  long weight_sum() const;
  BigInt weight_product() const;
};

struct HamiltonianModel {
  FixedComponent x;
  FixedComponent y;
  int total_dim = 0;

  const FixedComponent& component(ComponentName name) const { return name == ComponentName::X ? x : y; }
  /// phi(Y) - phi(X).
  Rational moment_gap() const { return y.moment_value - x.moment_value; }
};

struct Violation {
  std::string invariant;
  std::string detail;
};

/// Empty iff every model invariant holds. Invariant names:
/// "dimension-balance", "integral-moment-gap", "weight-divides-gap",
/// "zero-weight", "weight-direction", "normal-rank", "euler-class-shape",
/// "orientation".
std::vector<Violation> validate_model(const HamiltonianModel& m);

/// Restriction of the equivariant lift u~: u on X, v + (phi(X)-phi(Y))·t on Y.
/// Throws Error{Precondition} if the moment gap is not integral.
TruncPoly restrict_u_tilde(const HamiltonianModel& m, ComponentName comp);

/// A global equivariant class given by its two restrictions.
struct EquivariantInput {
  TruncPoly at_x;
  TruncPoly at_y;
  int degree = 0;
};

/// Both restrictions homogeneous of the declared degree, at the right orders.
bool is_well_formed(const HamiltonianModel& m, const EquivariantInput& alpha);

struct LocalizationValue {
  LaurentClass value{0};
  LaurentClass from_x{0};
  LaurentClass from_y{0};
  int degree = 0;
  int total_dim = 0;
  /// Set when the value contradicts degree counting: nonzero below the top
  /// degree, or not a pure constant in the top degree.
  bool obstruction = false;

  bool is_scalar() const;
  /// The t^0 coefficient.
  Rational scalar() const { return value.coefficient(0, 0); }
};

/// Fiber integral of alpha_F / e(N_F) over F: the g^{half_dim} row of
/// alpha_F · e^{-1}, scaled by orient_norm.
LaurentClass integrate_component(const TruncPoly& alpha_f, const FixedComponent& comp);

/// Precomputes both inverted Euler classes so repeated integrals over one
/// model only pay for the final row product.
class Localizer {
 public:
  explicit Localizer(HamiltonianModel model);

  const HamiltonianModel& model() const { return model_; }
  const LaurentClass& inverse_euler(ComponentName name) const {
    return name == ComponentName::X ? inv_x_ : inv_y_;
  }

  LaurentClass integrate_over(ComponentName name, const TruncPoly& alpha_f) const;
  LocalizationValue integrate(const EquivariantInput& alpha) const;

 private:
  HamiltonianModel model_;
  LaurentClass inv_x_;
  LaurentClass inv_y_;
};

/// Sum over the fixed components of the localized integrands. Degree
/// violations come back flagged as an obstruction and are not thrown.
LocalizationValue abbv_integrate(const HamiltonianModel& m, const EquivariantInput& alpha);

/// Inverse of e(N_F) for a component in the model's convention (leading
/// coefficient = product of the weights).
LaurentClass inverse_euler_class(const FixedComponent& comp);

/// Cofactor lambda with lambda · e(N_X) = (u + (phi(Y)-phi(X)) t)^{k_Y + 1},
/// or nullopt when the quotient is not a polynomial class.
std::optional<TruncPoly> lift_cofactor(const HamiltonianModel& m);

// Model builders.

/// Oriented 2-planes in R^{2n+2} with the diagonal circle action: X = Y = CP^n,
/// phi(X) = 0, phi(Y) = 1, e(N_X) = (t+u)^{n+1}/(t+2u), e(N_Y) = (-t+v)^{n+1}/(-t+2v).
HamiltonianModel grassmannian_model(int n);

/// The excluded non-semifree configuration (n odd, n >= 3): moment gap 2,
/// weights {2,...,2,1} at X, e(N_X) = (2t+u)^{n+1}/(4t), e(N_Y) = (-2t+v)^{n+1}/(-4t).
HamiltonianModel non_semifree_model(int n);

/// (t + u)^{n+1}-style helper: (a·t + b·g)^e at truncation order k.
TruncPoly linear_power(int k, const Rational& a, const Rational& b, unsigned e);

/// numerator / (a·t + b·g) as a polynomial class, for a != 0 and a quotient
/// that is polynomial modulo g^{k+1}. Throws Error{UnsupportedShape} otherwise.
TruncPoly divide_by_linear(const TruncPoly& numerator, const Rational& a, const Rational& b);

}  // namespace hamloc
