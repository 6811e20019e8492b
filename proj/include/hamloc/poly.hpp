#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "hamloc/rational.hpp"

namespace hamloc {

/// Exponent pair of t^t g^u, where g is the cohomology generator of the
/// fixed component the class lives on (u on X, v on Y).
struct Monomial {
  int t = 0;
  int u = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

using TermMap = std::map<Monomial, Rational>;

struct Term {
  int t;
  int u;
  Rational c;
};

struct PolyTag {
  static constexpr bool laurent = false;
};
struct LaurentTag {
  static constexpr bool laurent = true;
};

/// Sparse element of Q[t, g]/(g^{K+1}) (PolyTag) or Q[t, 1/t, g]/(g^{K+1})
/// (LaurentTag). Zero coefficients are never stored, so equality is
/// structural. Both t and g have cohomological degree 2.
template <class Tag>
class Graded {
 public:
  static constexpr bool is_laurent = Tag::laurent;

  Graded() = default;
  explicit Graded(int trunc_order);
  Graded(int trunc_order, std::initializer_list<Term> terms);

  static Graded constant(int trunc_order, const Rational& c);
  static Graded monomial(int trunc_order, int t_power, int u_power, const Rational& c = 1);
  static Graded t(int trunc_order) { return monomial(trunc_order, 1, 0); }
  static Graded g(int trunc_order) { return monomial(trunc_order, 0, 1); }

  int trunc_order() const noexcept { return order_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coefficient(int t_power, int u_power) const;

  /// Adds c·t^a g^b in place; terms with b > K vanish.
  void add_term(int t_power, int u_power, const Rational& c);

  std::optional<int> min_t_power() const;
  std::optional<int> max_t_power() const;

  /// True when every term has degree 2(a + b) == degree. The zero class is
  /// homogeneous of every degree.
  bool is_homogeneous(int degree) const;

  /// Same class viewed modulo g^{order+1}; order may shrink or grow.
  Graded with_order(int order) const;

  /// The g^k row as a class in t alone (truncation order 0).
  Graded g_row(int u_power) const;

  /// Reduction modulo t: keeps the t^0 terms.
  Graded at_t_zero() const;

  Graded pow(unsigned exponent) const;

  Graded& operator+=(const Graded& other);
  Graded& operator-=(const Graded& other);
  Graded& operator*=(const Rational& s);

  friend Graded operator+(Graded a, const Graded& b) { return a += b; }
  friend Graded operator-(Graded a, const Graded& b) { return a -= b; }
  friend Graded operator-(const Graded& a) { return a * Rational(-1); }
  friend Graded operator*(Graded a, const Rational& s) { return a *= s; }
  friend Graded operator*(const Rational& s, Graded a) { return a *= s; }
  friend Graded operator*(const Graded& a, const Graded& b) { return multiply(a, b); }

  friend bool operator==(const Graded& a, const Graded& b) {
    return a.order_ == b.order_ && a.terms_ == b.terms_;
  }

  /// Exact product, discarding g-powers above K. Throws Error{OrderMismatch}.
  static Graded multiply(const Graded& a, const Graded& b);

  /// Human-readable form such as "t^2 + 2*t*u - 1/2*u^2".
  std::string to_string(std::string_view generator = "u") const;

 private:
  void check_operand(const Graded& other) const;

  int order_ = 0;
  TermMap terms_;
};

using TruncPoly = Graded<PolyTag>;
using LaurentClass = Graded<LaurentTag>;

extern template class Graded<PolyTag>;
extern template class Graded<LaurentTag>;

LaurentClass to_laurent(const TruncPoly& p);

/// The same class as a polynomial, or nullopt if some t-power is negative.
std::optional<TruncPoly> to_poly(const LaurentClass& l);

inline LaurentClass operator*(const LaurentClass& a, const TruncPoly& b) { return a * to_laurent(b); }
inline LaurentClass operator*(const TruncPoly& a, const LaurentClass& b) { return to_laurent(a) * b; }

inline Rational coefficient(const TruncPoly& p, int t_power, int u_power) {
  return p.coefficient(t_power, u_power);
}
inline Rational coefficient(const LaurentClass& p, int t_power, int u_power) {
  return p.coefficient(t_power, u_power);
}

/// poly_mul_trunc: the truncated product of two classes of equal order.
inline TruncPoly poly_mul_trunc(const TruncPoly& p, const TruncPoly& q) { return TruncPoly::multiply(p, q); }

/// Inverse of c0 + eta where eta is nilpotent (every term carries g-power >= 1):
/// sum_{j=0..K} (-eta)^j / c0^{j+1}.
/// Throws Error{NotAUnit} for c0 == 0 and Error{UnsupportedShape} when some
/// term with g-power 0 has a positive t-power.
TruncPoly poly_invert_unit(const TruncPoly& p);

/// Inverse of an equivariant Euler class of rank d whose leading term is
/// leading·t^d and whose other terms all carry g-power >= 1 and t-power < d.
/// The result lives in the Laurent ring; e·L == 1 exactly.
/// Throws Error{MalformedEulerClass} on any shape violation.
LaurentClass invert_euler_class(const TruncPoly& e, int rank, const Rational& leading);

/// The single-weight form: the leading coefficient must be lambda^d.
LaurentClass laurent_invert_euler(const TruncPoly& e, int rank, long lambda);

}  // namespace hamloc
