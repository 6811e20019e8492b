#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hamloc/localization.hpp"
#include "hamloc/poly.hpp"

// Executable forms of the algebraic steps in the classification of circle
// actions whose two fixed components X, Y satisfy dim X + dim Y = dim M.
// Each entry computes its conclusion from the ring and localization layers
// rather than restating it.
namespace hamloc::theorems {

// --- Coefficients of (1 + w + ... + w^n)^{n+1} -----------------------------

/// A and B are the coefficients of w^{n-1} and w^n in (1 + w + ... + w^n)^{n+1}.
struct ABPair {
  int n = 0;
  BigInt a;
  BigInt b;
  // Agreement of the two displayed closed forms (summed binomial products)
  // with the expansion.
  bool statement_a_matches = false;
  bool statement_b_matches = false;
  bool proof_a_matches = false;
  bool proof_b_matches = false;
};

struct ClosedFormsAB {
  BigInt statement_a, statement_b;
  BigInt proof_a, proof_b;
};

/// Grouped (statement) and ungrouped (proof) binomial sums.
ClosedFormsAB closed_forms_AB(int n);

/// Expansion in the truncated ring is the source of truth. Throws
/// Error{InternalInvariant} if B != 2A.
ABPair coefficients_AB(int n);

// --- Characteristic classes ---------------------------------------------------

struct EquivariantChern {
  TruncPoly total;  // sum c_i (1 + lambda t)^{d-i}
  TruncPoly euler;  // sum c_i (lambda t)^{d-i}
};

/// Equivariant total Chern class and Euler class of a rank-d bundle on which
/// the circle acts with the single weight lambda, from its ordinary total
/// Chern class (t-free, constant term 1, no g-power above d).
EquivariantChern chern_to_equivariant(const TruncPoly& chern, long lambda, int rank);

/// (1 + g)^{n+1} / (1 + 2g) at order n; the total Chern class of either normal
/// bundle of the model.
TruncPoly normal_chern_class(int n);

// --- Divisibility of the Euler class -------------------------------------------

enum class DivisibilityVariant { Direct, WithTFactor };

std::string_view to_string(DivisibilityVariant v);

/// An integer solution of
///   direct:        (t + a0/m u)(t^n + a1 t^{n-1} u + ... + a_n u^n) = (t + u/m)^{n+1}
///   with-t-factor: t (t + a0/m u)(t^{n-1} + ... + a_{n-1} u^{n-1}) = (t + u/m)^{n+1}
/// modulo u^{n+1}. cofactor holds a1, a2, ...
struct DivisibilitySolution {
  int n = 0;
  int m = 0;
  DivisibilityVariant variant = DivisibilityVariant::Direct;
  long a0 = 0;
  std::vector<BigInt> cofactor;
};

/// Necessary condition from the t u^n coefficient: m^{n-1} divides n + 1.
bool divisibility_filter(int n, int m);

/// Exhaustive over |a0| <= a0_bound; the remaining coefficients come from a
/// triangular solve and are kept only when all are integers.
std::vector<DivisibilitySolution> euler_divisibility_solutions(int n, int m, DivisibilityVariant variant,
                                                               long a0_bound);

/// Multiplies the solution back out in Q[t, u]/u^{n+1}.
bool verify_solution(const DivisibilitySolution& s);

/// Integer solution of
///   (2t + a0 u)(2t + 2u)((2t)^{n-1} + a1 (2t)^{n-2} u + ... + a_{n-1} u^{n-1}) = (2t + u)^{n+1}
/// modulo u^{n+1}.
struct FactorSolution {
  int n = 0;
  long a0 = 0;
  std::vector<BigInt> cofactor;  // a1 .. a_{n-1}
};

std::vector<FactorSolution> non_semifree_factor_search(int n, long a0_bound);
bool verify_solution(const FactorSolution& s);

// --- Localization consequences ----------------------------------------------------

/// Integral of 1 over the hypothetical non-semifree model.
struct Obstruction {
  int n = 0;
  LaurentClass raw{0};
  int raw_t_power = 0;
  Rational raw_coefficient;
  /// Per-component contributions after multiplying by (2t)^{n+1}/(4t),
  /// read at t^{-n}; each should be (-1)^n 2A / 2^n.
  Rational normalized_x;
  Rational normalized_y;
  Rational normalized_total;
  Rational expected_component;
  /// The same integral with the semifree Euler classes.
  bool semifree_vanishes = false;
};

/// Precondition: n odd, n >= 3.
Obstruction non_semifree_obstruction(int n);

struct EulerDerivation {
  int n = 0;
  std::optional<Rational> a;  // unset for n = 1
  std::optional<Rational> b;
  TruncPoly e_x;
  TruncPoly e_y;
  /// (t + 2u) e_X == (t + u)^{n+1} and (-t + 2v) e_Y == (-t + v)^{n+1}.
  bool identity_holds = false;
  /// Both localization integrals vanish at the solved (a, b).
  bool integrals_vanish = false;
};

/// Treats e(N_X) = (t+u)^{n+1}/(t+au), e(N_Y) = (-t+v)^{n+1}/(-t+bv) with a, b
/// unknown, probes the integrals of 1 and c1^{S1}(M) at integer (a, b), and
/// solves the resulting affine system. Throws Error{InternalInvariant} if the
/// system is singular or not affine.
EulerDerivation derive_euler_classes(int n);

/// c1(M) as a multiple of [omega]: (Gamma_F - Gamma_F') / (phi(F') - phi(F)).
Rational c1_from_pair(long gamma_f, const Rational& phi_f, long gamma_f2, const Rational& phi_f2);
Rational c1_from_fixed_data(const HamiltonianModel& m);

struct C1Bound {
  long gamma = 0;
  long gap = 0;
  Rational c1_coeff;
  bool bound_holds = false;
};

/// Weights at the minimum of a non-semifree action: n positive integers whose
/// distinct values are exactly {1, ..., N}, N >= 2. The moment gap is the least
/// common multiple of the weights; the bound is c1 < 2n.
C1Bound semifree_c1_bound(int n, std::span<const int> weights);

struct BettiVector {
  std::vector<int> betti;
  bool palindromic = false;
  int euler_characteristic = 0;
};

/// Betti numbers of M from a perfect Morse-Bott function with minimum X and
/// maximum Y, each with the cohomology of CP^k.
BettiVector betti_numbers(int k_x, int k_y);

/// c(X) recovered from the restriction-to-a-point identity and the Euler
/// characteristic of X.
TruncPoly derive_total_chern_X(int n);

/// Global equivariant total Chern class (1+u~)^{n+1}(1+t+u~)^{n+1}/(1+t+k u~);
/// k = 2 is the true formula.
struct GlobalChernFormula {
  int denominator_u_coeff = 2;
};

bool chern_consistency(int n, GlobalChernFormula formula = {});

/// (2u~ + t) beta_i == u~^{n+1} (u~ + t)^i on both components, 0 <= i <= n,
/// with beta_i|_X = 0 and beta_i|_Y = v^i e(N_Y). An optional perturbation is
/// added to beta_0|_Y.
bool module_basis_check(int n, const std::optional<TruncPoly>& beta0_perturbation = std::nullopt);

struct RingPresentation {
  int n = 0;
  /// c in x^{n+1} = c·xy.
  Rational relation_coeff;
  /// epsilon in y^2 = epsilon·x^n y.
  Rational epsilon;
  /// Integral of x^n y.
  Rational top_integral;
  std::vector<std::string> relations;
  std::vector<int> betti;
  bool epsilon_matches = false;
};

RingPresentation ring_presentation(int n);

/// Degree counting on the Grassmannian model: every class t^j u~^i, t^j beta_i
/// and u~^a (u~+t)^b of degree below 4n integrates to zero; those of degree
/// exactly 4n integrate to a constant.
struct VanishingSweep {
  int n = 0;
  int below_top = 0;
  int at_top = 0;
  int failures = 0;
};

VanishingSweep localization_sweep(int n);

}  // namespace hamloc::theorems
