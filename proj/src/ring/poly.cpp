#include "hamloc/poly.hpp"

#include <sstream>

#include "hamloc/error.hpp"
#include "hamloc/kernels.hpp"

namespace hamloc {

template <class Tag>
Graded<Tag>::Graded(int trunc_order) : order_(trunc_order) {
  if (trunc_order < 0) throw Error(ErrorCode::Precondition, "negative truncation order");
}

template <class Tag>
Graded<Tag>::Graded(int trunc_order, std::initializer_list<Term> terms) : Graded(trunc_order) {
  for (const auto& term : terms) add_term(term.t, term.u, term.c);
}

template <class Tag>
Graded<Tag> Graded<Tag>::constant(int trunc_order, const Rational& c) {
  return monomial(trunc_order, 0, 0, c);
}

template <class Tag>
Graded<Tag> Graded<Tag>::monomial(int trunc_order, int t_power, int u_power, const Rational& c) {
  Graded out(trunc_order);
  out.add_term(t_power, u_power, c);
  return out;
}

template <class Tag>
Rational Graded<Tag>::coefficient(int t_power, int u_power) const {
  auto it = terms_.find(Monomial{t_power, u_power});
  return it == terms_.end() ? Rational(0) : it->second;
}

template <class Tag>
void Graded<Tag>::add_term(int t_power, int u_power, const Rational& c) {
  if (u_power < 0) throw Error(ErrorCode::UnsupportedShape, "negative generator power");
  if constexpr (!Tag::laurent) {
    if (t_power < 0) throw Error(ErrorCode::UnsupportedShape, "negative t-power in a polynomial class");
  }
  if (u_power > order_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Monomial{t_power, u_power}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

template <class Tag>
std::optional<int> Graded<Tag>::min_t_power() const {
  std::optional<int> best;
  for (const auto& [m, c] : terms_)
    if (!best || m.t < *best) best = m.t;
  return best;
}

template <class Tag>
std::optional<int> Graded<Tag>::max_t_power() const {
  std::optional<int> best;
  for (const auto& [m, c] : terms_)
    if (!best || m.t > *best) best = m.t;
  return best;
}

template <class Tag>
bool Graded<Tag>::is_homogeneous(int degree) const {
  for (const auto& [m, c] : terms_)
    if (2 * (m.t + m.u) != degree) return false;
  return true;
}

template <class Tag>
Graded<Tag> Graded<Tag>::with_order(int order) const {
  Graded out(order);
  for (const auto& [m, c] : terms_) out.add_term(m.t, m.u, c);
  return out;
}

template <class Tag>
Graded<Tag> Graded<Tag>::g_row(int u_power) const {
  Graded out(0);
  for (const auto& [m, c] : terms_)
    if (m.u == u_power) out.add_term(m.t, 0, c);
  return out;
}

template <class Tag>
Graded<Tag> Graded<Tag>::at_t_zero() const {
  Graded out(order_);
  for (const auto& [m, c] : terms_)
    if (m.t == 0) out.add_term(0, m.u, c);
  return out;
}

template <class Tag>
Graded<Tag> Graded<Tag>::pow(unsigned exponent) const {
  Graded result = constant(order_, 1);
  Graded base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = multiply(result, base);
    exponent >>= 1U;
    if (exponent != 0) base = multiply(base, base);
  }
  return result;
}

template <class Tag>
void Graded<Tag>::check_operand(const Graded& other) const {
  if (order_ != other.order_)
    throw Error(ErrorCode::OrderMismatch,
                "truncation orders " + std::to_string(order_) + " and " + std::to_string(other.order_));
}

template <class Tag>
Graded<Tag>& Graded<Tag>::operator+=(const Graded& other) {
  check_operand(other);
  for (const auto& [m, c] : other.terms_) add_term(m.t, m.u, c);
  return *this;
}

template <class Tag>
Graded<Tag>& Graded<Tag>::operator-=(const Graded& other) {
  check_operand(other);
  for (const auto& [m, c] : other.terms_) add_term(m.t, m.u, -c);
  return *this;
}

template <class Tag>
Graded<Tag>& Graded<Tag>::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

template <class Tag>
Graded<Tag> Graded<Tag>::multiply(const Graded& a, const Graded& b) {
  a.check_operand(b);
  Graded out(a.order_);
  out.terms_ = kernels::multiply(a.terms_, b.terms_, a.order_);
  return out;
}

namespace {

void append_power(std::ostringstream& os, std::string_view var, int e, bool& first_factor) {
  if (e == 0) return;
  if (!first_factor) os << '*';
  os << var;
  if (e != 1) os << '^' << e;
  first_factor = false;
}

}  // namespace

template <class Tag>
std::string Graded<Tag>::to_string(std::string_view generator) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first_term = true;
  // Descending t-power reads like the usual presentation of Euler classes.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = c;
    if (c < 0) {
      os << (first_term ? "-" : " - ");
      mag = -c;
    } else if (!first_term) {
      os << " + ";
    }
    first_term = false;
    const bool bare = m.t == 0 && m.u == 0;
    bool first_factor = true;
    if (mag != 1 || bare) {
      os << format_rational(mag);
      first_factor = false;
    }
    append_power(os, "t", m.t, first_factor);
    append_power(os, generator, m.u, first_factor);
  }
  return os.str();
}

template class Graded<PolyTag>;
template class Graded<LaurentTag>;

LaurentClass to_laurent(const TruncPoly& p) {
  LaurentClass out(p.trunc_order());
  for (const auto& [m, c] : p.terms()) out.add_term(m.t, m.u, c);
  return out;
}

std::optional<TruncPoly> to_poly(const LaurentClass& l) {
  TruncPoly out(l.trunc_order());
  for (const auto& [m, c] : l.terms()) {
    if (m.t < 0) return std::nullopt;
    out.add_term(m.t, m.u, c);
  }
  return out;
}

}  // namespace hamloc
