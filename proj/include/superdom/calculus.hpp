#pragma once

#include <superdom/random.hpp>
#include <superdom/report.hpp>
#include <superdom/superfn.hpp>

#include <map>
#include <span>
#include <vector>

namespace superdom {

/// f^[1](x, v, t) with f(x + t v) - f(x) = t f^[1](x, v, t).
///
/// Everything lives on the extended space R^{2p+1|2q} with even coordinates
/// x_1..x_p, v_1..v_p, t and odd coordinates xi_1..xi_q, w_1..w_q.
struct BgnQuotient {
  SuperSpace extended;
  /// f(x) in the extended coordinates.
  std::vector<SuperFunction> lifted;
  /// f(x + t v).
  std::vector<SuperFunction> shifted;
  std::vector<SuperFunction> quotient;
};

BgnQuotient bgn_quotient(const Skeleton& f);

/// The difference-quotient identity, and agreement of f^[1](x, v, 0) with
/// the first derivative data.
CheckReport check_bgn(const Skeleton& f);

/// d_{b_1} ... d_{b_k} applied to every component, innermost derivative
/// last. Directions 0..p-1 are d/dx_i; p..p+q-1 are right derivatives in xi_j.
std::vector<SuperFunction> derivative(const Skeleton& f, std::span<const unsigned> directions);

/// All derivatives of order k, keyed by direction tuple.
std::map<std::vector<unsigned>, std::vector<SuperFunction>> derivative(const Skeleton& f, unsigned k);

/// Swapping adjacent directions multiplies by -1 exactly when both are odd.
CheckReport check_derivative_symmetry(const Skeleton& f, unsigned k);

/// df_lambda(x)(v), read off f_lambda(x + theta_{N+1} theta_{N+2} v) in lambda^{N+2}.
SuperVector lambda_differential(const Skeleton& f, const LambdaPoint& x, const LambdaPoint& v);

struct LinearitySample {
  LambdaPoint x;
  LambdaPoint v;
  GrassmannElement a;
};

/// df(x)(a v) = a df(x)(v), and the assembled f^(1)(x)(v) equals df(x)(v).
CheckReport check_lambda_linearity(const Skeleton& f, std::span<const LinearitySample> samples);

/// Factors h_j with f(y) - f(x0) = sum_j (y_j - x0_j) h_j(y), built by
/// telescoping through the difference quotient. Throws Error on
/// non-polynomial coefficients.
std::vector<Skeleton> hadamard_decompose(const Skeleton& f, std::span<const Rational> x0);
CheckReport check_hadamard(const Skeleton& f, std::span<const Rational> x0, std::span<const Skeleton> factors);

/// Each coefficient c_J replaced by its Taylor polynomial of order n - |J|
/// at x0 (dropped when n < |J|). Throws DomainError when x0 is outside the domain.
Skeleton taylor_polynomial(const Skeleton& f, std::span<const Rational> x0, unsigned n);
/// All partials of order <= n - |J| of every coefficient of f - p vanish at x0.
CheckReport check_taylor_polynomial(const Skeleton& f, const Skeleton& p, std::span<const Rational> x0, unsigned n);

/// d^k f_R(x_R)(e_{b_1}, ..., e_{b_k}) for even directions, read off
/// f(x_R + sum_i theta_{2i-1} theta_{2i} e_{b_i}).
SuperVector body_derivative(const Skeleton& f, std::span<const Rational> body, std::span<const unsigned> directions);

/// The f^(k) family at the given points: supersymmetry on basis and even
/// arguments, extension of d^k f_R, the increment identity for
/// theta_p-supported increments, and the expansion
/// f(x + y) = sum_k 1/k! f^(k)(x)(y, ..., y).
CheckReport check_def43(const Skeleton& f, std::span<const LambdaPoint> points, Rng& rng, unsigned max_order = 2);

}  // namespace superdom
