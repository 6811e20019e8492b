#include <vector>

#include "hamloc/error.hpp"
#include "hamloc/theorems.hpp"

namespace hamloc::theorems {

std::string_view to_string(DivisibilityVariant v) {
  return v == DivisibilityVariant::Direct ? "direct" : "with-t-factor";
}

namespace {

// Dehomogenized at t = 1 (or 2t = 1): find c = (1, c_1, ..., c_{unknowns-1})
// with known · c == target in the first target.size() coefficients. The
// first `unknowns` equations determine c because known[0] == 1; the rest are
// consistency conditions. Returns nullopt when they fail or when some c_k is
// not an integer.
std::optional<std::vector<BigInt>> solve_cofactor(const std::vector<Rational>& known,
                                                  const std::vector<Rational>& target, std::size_t unknowns) {
  std::vector<Rational> c(unknowns, Rational(0));
  c[0] = 1;
  auto convolve = [&](std::size_t k) {
    Rational s = 0;
    for (std::size_t j = 0; j < known.size() && j <= k; ++j)
      if (k - j < unknowns) s += known[j] * c[k - j];
    return s;
  };
  for (std::size_t k = 1; k < unknowns; ++k) {
    c[k] = target[k] - convolve(k);  // c[k] is still 0, so convolve omits it
    if (!is_integer(c[k])) return std::nullopt;
  }
  for (std::size_t k = 0; k < target.size(); ++k)
    if (convolve(k) != target[k]) return std::nullopt;

  std::vector<BigInt> out;
  for (std::size_t k = 1; k < unknowns; ++k) out.push_back(c[k].get_num());
  return out;
}

// Sum of coeffs[k] · (scale·t)^{deg-k} u^k at truncation order n, coeffs[0] = 1.
TruncPoly homogenize(int n, const std::vector<BigInt>& tail, int deg, const Rational& scale) {
  TruncPoly p(n);
  Rational tpow = 1;
  std::vector<Rational> powers(static_cast<std::size_t>(deg) + 1);
  for (auto& pw : powers) {
    pw = tpow;
    tpow *= scale;
  }
  p.add_term(deg, 0, powers[static_cast<std::size_t>(deg)]);
  for (std::size_t k = 0; k < tail.size(); ++k) {
    const int u = static_cast<int>(k) + 1;
    p.add_term(deg - u, u, Rational(tail[k]) * powers[static_cast<std::size_t>(deg - u)]);
  }
  return p;
}

}  // namespace

bool divisibility_filter(int n, int m) {
  if (n < 1 || m < 1) throw Error(ErrorCode::Precondition, "n and m must be positive");
  BigInt mp = 1;
  for (int i = 0; i < n - 1; ++i) mp *= m;
  return (BigInt(n + 1) % mp) == 0;
}

std::vector<DivisibilitySolution> euler_divisibility_solutions(int n, int m, DivisibilityVariant variant,
                                                               long a0_bound) {
  if (n < 2 || m < 1 || a0_bound < 1) throw Error(ErrorCode::Precondition, "need n >= 2, m >= 1, a0_bound >= 1");
  std::vector<Rational> target(static_cast<std::size_t>(n) + 1);
  Rational mk = 1;
  for (int k = 0; k <= n; ++k) {
    target[static_cast<std::size_t>(k)] = Rational(binomial(n + 1, k)) / mk;
    mk *= m;
  }
  const std::size_t unknowns = variant == DivisibilityVariant::Direct ? n + 1 : n;

  std::vector<DivisibilitySolution> out;
  for (long a0 = -a0_bound; a0 <= a0_bound; ++a0) {
    Rational lin(a0, m);
    lin.canonicalize();
    if (auto c = solve_cofactor({Rational(1), lin}, target, unknowns))
      out.push_back(DivisibilitySolution{n, m, variant, a0, std::move(*c)});
  }
  return out;
}

bool verify_solution(const DivisibilitySolution& s) {
  if (s.n < 1 || s.m < 1) return false;
  const int n = s.n;
  Rational lin(s.a0, s.m);
  lin.canonicalize();
  const TruncPoly linear = TruncPoly::t(n) + TruncPoly::monomial(n, 0, 1, lin);
  const TruncPoly rhs = linear_power(n, 1, Rational(1, s.m), static_cast<unsigned>(n + 1));
  if (s.variant == DivisibilityVariant::Direct) {
    if (static_cast<int>(s.cofactor.size()) != n) return false;
    return linear * homogenize(n, s.cofactor, n, 1) == rhs;
  }
  if (static_cast<int>(s.cofactor.size()) != n - 1) return false;
  return TruncPoly::t(n) * linear * homogenize(n, s.cofactor, n - 1, 1) == rhs;
}

std::vector<FactorSolution> non_semifree_factor_search(int n, long a0_bound) {
  if (n < 2 || a0_bound < 0) throw Error(ErrorCode::Precondition, "need n >= 2 and a0_bound >= 0");
  std::vector<Rational> target(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) target[static_cast<std::size_t>(k)] = Rational(binomial(n + 1, k));

  std::vector<FactorSolution> out;
  for (long a0 = -a0_bound; a0 <= a0_bound; ++a0) {
    // (1 + a0 u)(1 + 2u) with 2t = 1.
    const std::vector<Rational> known{Rational(1), Rational(a0 + 2), Rational(2 * a0)};
    if (auto c = solve_cofactor(known, target, static_cast<std::size_t>(n)))
      out.push_back(FactorSolution{n, a0, std::move(*c)});
  }
  return out;
}

bool verify_solution(const FactorSolution& s) {
  const int n = s.n;
  if (static_cast<int>(s.cofactor.size()) != n - 1) return false;
  const TruncPoly lhs = linear_power(n, 2, s.a0, 1) * linear_power(n, 2, 2, 1) * homogenize(n, s.cofactor, n - 1, 2);
  return lhs == linear_power(n, 2, 1, static_cast<unsigned>(n + 1));
}

}  // namespace hamloc::theorems
