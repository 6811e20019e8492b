#include <string>

#include "hamloc/error.hpp"
#include "hamloc/poly.hpp"

namespace hamloc {

namespace {

// 1 + q + q^2 + ... + q^K for nilpotent q (q^{K+1} == 0).
template <class G>
G geometric_sum(const G& q) {
  const int k = q.trunc_order();
  G sum = G::constant(k, 1);
  for (int j = 0; j < k; ++j) sum = G::constant(k, 1) + q * sum;
  return sum;
}

}  // namespace

TruncPoly poly_invert_unit(const TruncPoly& p) {
  const Rational c0 = p.coefficient(0, 0);
  if (c0 == 0) throw Error(ErrorCode::NotAUnit, "constant term is zero in " + p.to_string());

  TruncPoly eta(p.trunc_order());
  for (const auto& [m, c] : p.terms()) {
    if (m.t == 0 && m.u == 0) continue;
    if (m.u == 0)
      throw Error(ErrorCode::UnsupportedShape, "non-nilpotent term t^" + std::to_string(m.t) + " in " + p.to_string());
    eta.add_term(m.t, m.u, c);
  }
  const Rational inv_c0 = 1 / c0;
  return geometric_sum(eta * (-inv_c0)) * inv_c0;
}

LaurentClass invert_euler_class(const TruncPoly& e, int rank, const Rational& leading) {
  if (rank < 0) throw Error(ErrorCode::MalformedEulerClass, "negative rank");
  if (leading == 0) throw Error(ErrorCode::MalformedEulerClass, "zero leading coefficient");
  if (e.coefficient(rank, 0) != leading)
    throw Error(ErrorCode::MalformedEulerClass, "leading coefficient of t^" + std::to_string(rank) + " in " +
                                                    e.to_string() + " is not " + format_rational(leading));

  const int k = e.trunc_order();
  const Rational inv_lead = 1 / leading;
  LaurentClass eta(k);
  for (const auto& [m, c] : e.terms()) {
    if (m.t == rank && m.u == 0) continue;
    if (m.u == 0 || m.t >= rank)
      throw Error(ErrorCode::MalformedEulerClass, "term t^" + std::to_string(m.t) + "*g^" + std::to_string(m.u) +
                                                      " is not below the leading term in " + e.to_string());
    eta.add_term(m.t - rank, m.u, c * inv_lead);
  }
  return geometric_sum(-eta) * LaurentClass::monomial(k, -rank, 0, inv_lead);
}

LaurentClass laurent_invert_euler(const TruncPoly& e, int rank, long lambda) {
  if (lambda == 0) throw Error(ErrorCode::MalformedEulerClass, "weight zero");
  BigInt lead;
  mpz_pow_ui(lead.get_mpz_t(), BigInt(lambda).get_mpz_t(), static_cast<unsigned long>(rank < 0 ? 0 : rank));
  return invert_euler_class(e, rank, Rational(lead));
}

}  // namespace hamloc
