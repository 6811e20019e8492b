#include <algorithm>
#include <numeric>
#include <set>

#include "hamloc/error.hpp"
#include "hamloc/theorems.hpp"

namespace hamloc::theorems {

ClosedFormsAB closed_forms_AB(int n) {
  ClosedFormsAB f;
  auto term = [n](long k, long lower_top) -> BigInt { return binomial(n + 1, k) * binomial(lower_top, k - 1); };
  if (n % 2 == 0) {
    BigInt s = 0;
    for (long k = 1; k <= n / 2; ++k) s += term(k, n - 1);
    f.statement_a = s;
    f.statement_b = 2 * s;
  } else {
    BigInt s = 0;
    for (long k = 1; k <= (n - 1) / 2; ++k) s += term(k, n - 1);
    const long mid = (n + 1) / 2;
    f.statement_a = s + binomial(n + 1, mid) * binomial(n - 2, mid - 1);
    f.statement_b = 2 * s + binomial(n + 1, mid) * binomial(n - 1, mid - 1);
  }
  f.proof_a = 0;
  for (long k = 1; k <= n - 1; ++k) f.proof_a += term(k, n - 2);
  f.proof_b = 0;
  for (long k = 1; k <= n; ++k) f.proof_b += term(k, n - 1);
  return f;
}

ABPair coefficients_AB(int n) {
  if (n < 1) throw Error(ErrorCode::Precondition, "n must be at least 1");
  TruncPoly geometric(n);
  for (int i = 0; i <= n; ++i) geometric.add_term(0, i, 1);
  const TruncPoly power = geometric.pow(static_cast<unsigned>(n + 1));

  ABPair out;
  out.n = n;
  out.a = power.coefficient(0, n - 1).get_num();
  out.b = power.coefficient(0, n).get_num();
  if (out.b != 2 * out.a)
    throw Error(ErrorCode::InternalInvariant, "B != 2A at n = " + std::to_string(n));

  const ClosedFormsAB f = closed_forms_AB(n);
  out.statement_a_matches = f.statement_a == out.a;
  out.statement_b_matches = f.statement_b == out.b;
  out.proof_a_matches = f.proof_a == out.a;
  out.proof_b_matches = f.proof_b == out.b;
  return out;
}

EquivariantChern chern_to_equivariant(const TruncPoly& chern, long lambda, int rank) {
  if (lambda == 0) throw Error(ErrorCode::InvalidWeight, "weight must be nonzero");
  if (chern.coefficient(0, 0) != 1) throw Error(ErrorCode::Precondition, "total Chern class must start with 1");
  for (const auto& [m, c] : chern.terms()) {
    if (m.t != 0) throw Error(ErrorCode::Precondition, "ordinary Chern class cannot involve t");
    if (m.u > rank)
      throw Error(ErrorCode::Precondition, "c_" + std::to_string(m.u) + " exceeds the rank " + std::to_string(rank));
  }
  const int k = chern.trunc_order();
  const TruncPoly shifted = TruncPoly::constant(k, 1) + TruncPoly::monomial(k, 1, 0, lambda);
  const TruncPoly weight = TruncPoly::monomial(k, 1, 0, lambda);

  EquivariantChern out{TruncPoly(k), TruncPoly(k)};
  for (const auto& [m, c] : chern.terms()) {
    const auto co = static_cast<unsigned>(rank - m.u);
    const TruncPoly ci = TruncPoly::monomial(k, 0, m.u, c);
    out.total += ci * shifted.pow(co);
    out.euler += ci * weight.pow(co);
  }
  return out;
}

TruncPoly normal_chern_class(int n) {
  const TruncPoly one = TruncPoly::constant(n, 1);
  return (one + TruncPoly::g(n)).pow(static_cast<unsigned>(n + 1)) *
         poly_invert_unit(one + TruncPoly::monomial(n, 0, 1, 2));
}

BettiVector betti_numbers(int k_x, int k_y) {
  if (k_x < 0 || k_y < 0) throw Error(ErrorCode::Precondition, "negative half-dimension");
  BettiVector out;
  out.betti.assign(static_cast<std::size_t>(2 * (k_x + k_y) + 1), 0);
  for (int i = 0; i <= k_x; ++i) out.betti[static_cast<std::size_t>(2 * i)] += 1;
  // Y has Morse index codim(Y) = dim X.
  for (int j = 0; j <= k_y; ++j) out.betti[static_cast<std::size_t>(2 * k_x + 2 * j)] += 1;
  out.palindromic = std::equal(out.betti.begin(), out.betti.end(), out.betti.rbegin());
  for (std::size_t i = 0; i < out.betti.size(); ++i) out.euler_characteristic += (i % 2 == 0 ? 1 : -1) * out.betti[i];
  return out;
}

Rational c1_from_pair(long gamma_f, const Rational& phi_f, long gamma_f2, const Rational& phi_f2) {
  const Rational gap = phi_f2 - phi_f;
  if (gap == 0) throw Error(ErrorCode::DivisionByZero, "the two components have equal moment values");
  return Rational(gamma_f - gamma_f2) / gap;
}

Rational c1_from_fixed_data(const HamiltonianModel& m) {
  return c1_from_pair(m.x.weight_sum(), m.x.moment_value, m.y.weight_sum(), m.y.moment_value);
}

C1Bound semifree_c1_bound(int n, std::span<const int> weights) {
  if (static_cast<int>(weights.size()) != n)
    throw Error(ErrorCode::Precondition, "expected " + std::to_string(n) + " weights");
  if (std::any_of(weights.begin(), weights.end(), [](int w) { return w <= 0; }))
    throw Error(ErrorCode::Precondition, "weights at the minimum must be positive");
  const std::set<int> distinct(weights.begin(), weights.end());
  const int top = *distinct.rbegin();
  if (top < 2) throw Error(ErrorCode::Precondition, "all weights are 1: the action is semifree");
  if (static_cast<int>(distinct.size()) != top || *distinct.begin() != 1)
    throw Error(ErrorCode::Precondition, "distinct weights must be exactly {1, ..., N}");

  C1Bound out;
  out.gamma = std::accumulate(weights.begin(), weights.end(), 0L);
  out.gap = 1;
  for (int w : distinct) out.gap = std::lcm(out.gap, static_cast<long>(w));
  out.c1_coeff = Rational(2 * out.gamma, out.gap);
  out.c1_coeff.canonicalize();
  out.bound_holds = out.c1_coeff < 2 * n;
  return out;
}

}  // namespace hamloc::theorems
