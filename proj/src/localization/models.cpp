#include "hamloc/error.hpp"
#include "hamloc/localization.hpp"

namespace hamloc {

TruncPoly linear_power(int k, const Rational& a, const Rational& b, unsigned e) {
  return (TruncPoly::monomial(k, 1, 0, a) + TruncPoly::monomial(k, 0, 1, b)).pow(e);
}

TruncPoly divide_by_linear(const TruncPoly& numerator, const Rational& a, const Rational& b) {
  if (a == 0) throw Error(ErrorCode::UnsupportedShape, "linear divisor has no t term");
  const int k = numerator.trunc_order();
  const TruncPoly divisor = TruncPoly::monomial(k, 1, 0, a) + TruncPoly::monomial(k, 0, 1, b);
  auto q = to_poly(numerator * invert_euler_class(divisor, 1, a));
  if (!q) throw Error(ErrorCode::UnsupportedShape, numerator.to_string() + " is not divisible by " + divisor.to_string());
  return *q;
}

HamiltonianModel grassmannian_model(int n) {
  if (n < 1) throw Error(ErrorCode::Precondition, "n must be at least 1");
  const auto e = static_cast<unsigned>(n + 1);
  HamiltonianModel m;
  m.total_dim = 4 * n;
  m.x = FixedComponent{ComponentName::X, n, Rational(0), std::vector<int>(static_cast<std::size_t>(n), 1),
                       divide_by_linear(linear_power(n, 1, 1, e), 1, 2), 1};
  m.y = FixedComponent{ComponentName::Y, n, Rational(1), std::vector<int>(static_cast<std::size_t>(n), -1),
                       divide_by_linear(linear_power(n, -1, 1, e), -1, 2), 1};
  return m;
}

HamiltonianModel non_semifree_model(int n) {
  if (n < 3 || n % 2 == 0) throw Error(ErrorCode::Precondition, "the non-semifree configuration needs odd n >= 3");
  const auto e = static_cast<unsigned>(n + 1);
  std::vector<int> wx(static_cast<std::size_t>(n), 2);
  wx.back() = 1;
  std::vector<int> wy(static_cast<std::size_t>(n), -2);
  wy.back() = -1;
  HamiltonianModel m;
  m.total_dim = 4 * n;
  m.x = FixedComponent{ComponentName::X, n, Rational(0), wx, divide_by_linear(linear_power(n, 2, 1, e), 4, 0), 1};
  m.y = FixedComponent{ComponentName::Y, n, Rational(2), wy, divide_by_linear(linear_power(n, -2, 1, e), -4, 0), 1};
  return m;
}

}  // namespace hamloc
