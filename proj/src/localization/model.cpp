#include <cstdlib>
#include <numeric>

#include "hamloc/error.hpp"
#include "hamloc/localization.hpp"

namespace hamloc {

std::string_view to_string(ComponentName name) { return name == ComponentName::X ? "X" : "Y"; }

long FixedComponent::weight_sum() const { return std::accumulate(weights.begin(), weights.end(), 0L); }

BigInt FixedComponent::weight_product() const {
  BigInt p = 1;
  for (int w : weights) p *= w;
  return p;
}

namespace {

void check_component(const HamiltonianModel& m, const FixedComponent& f, bool is_minimum,
                     std::vector<Violation>& out) {
  const std::string label(to_string(f.name));
  const int expected_rank = m.total_dim / 2 - f.half_dim;
  if (f.normal_rank() != expected_rank)
    out.push_back({"normal-rank", label + " has " + std::to_string(f.normal_rank()) + " weights, expected " +
                                      std::to_string(expected_rank)});
  for (int w : f.weights) {
    if (w == 0) {
      out.push_back({"zero-weight", label + " carries a zero weight"});
      continue;
    }
    if ((w > 0) != is_minimum)
      out.push_back({"weight-direction", label + " weight " + std::to_string(w) +
                                             (is_minimum ? " at the minimum must be positive"
                                                         : " at the maximum must be negative")});
  }
  if (f.orient_norm != 1 && f.orient_norm != -1)
    out.push_back({"orientation", label + " orient_norm must be +1 or -1"});
  if (f.euler_class.trunc_order() != f.half_dim) {
    out.push_back({"euler-class-shape", label + " Euler class has truncation order " +
                                            std::to_string(f.euler_class.trunc_order()) + ", expected " +
                                            std::to_string(f.half_dim)});
    return;
  }
  try {
    (void)invert_euler_class(f.euler_class, f.normal_rank(), Rational(f.weight_product()));
  } catch (const Error& e) {
    out.push_back({"euler-class-shape", label + ": " + e.what()});
  }
}

}  // namespace

std::vector<Violation> validate_model(const HamiltonianModel& m) {
  std::vector<Violation> out;
  if (2 * (m.x.half_dim + m.y.half_dim) != m.total_dim)
    out.push_back({"dimension-balance", "dim X + dim Y = " + std::to_string(2 * (m.x.half_dim + m.y.half_dim)) +
                                            " but dim M = " + std::to_string(m.total_dim)});

  const Rational gap = m.moment_gap();
  if (gap == 0) out.push_back({"distinct-moment-values", "phi(X) == phi(Y)"});
  if (!is_integer(gap)) {
    out.push_back({"integral-moment-gap", "phi(Y) - phi(X) = " + format_rational(gap) + " is not an integer"});
  } else if (gap != 0) {
    const BigInt g = abs(gap.get_num());
    for (const FixedComponent* f : {&m.x, &m.y})
      for (int w : f->weights)
        if (w != 0 && g % std::abs(w) != 0)
          out.push_back({"weight-divides-gap", "weight " + std::to_string(w) + " at " + std::string(to_string(f->name)) +
                                                   " does not divide the moment gap " + g.get_str()});
  }

  const bool x_is_min = m.x.moment_value < m.y.moment_value;
  check_component(m, m.x, x_is_min, out);
  check_component(m, m.y, !x_is_min, out);
  return out;
}

TruncPoly restrict_u_tilde(const HamiltonianModel& m, ComponentName comp) {
  if (comp == ComponentName::X) return TruncPoly::g(m.x.half_dim);
  const Rational shift = m.x.moment_value - m.y.moment_value;
  if (!is_integer(shift)) throw Error(ErrorCode::Precondition, "moment gap is not integral");
  return TruncPoly::g(m.y.half_dim) + TruncPoly::monomial(m.y.half_dim, 1, 0, shift);
}

bool is_well_formed(const HamiltonianModel& m, const EquivariantInput& alpha) {
  return alpha.at_x.trunc_order() == m.x.half_dim && alpha.at_y.trunc_order() == m.y.half_dim &&
         alpha.at_x.is_homogeneous(alpha.degree) && alpha.at_y.is_homogeneous(alpha.degree);
}

}  // namespace hamloc
