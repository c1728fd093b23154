#pragma once

#include "zf/rational.hpp"

namespace zf {

// P^n_k(x) for the symmetric binomial weight, via the three-term recursion.
double kraw_eval(int n, int k, double x);
Rational kraw_eval_exact(int n, int k, const Rational& x);

// sum_j (-1)^j C(x, j) C(n - x, k - j) with generalized binomial coefficients.
Rational kraw_sum_definition(int n, int k, const Rational& x);

// sum_{x=0}^{a} P^n_k(x) b_{n,1/2}(x) in closed form. The double version also
// forms the direct sum and throws IllConditioned if they disagree beyond 1e-10.
double kraw_partial_sum(int n, int k, int a);
Rational kraw_partial_sum_exact(int n, int k, int a);
Rational kraw_partial_sum_direct_exact(int n, int k, int a);

// b_{n,1/2}(floor(n/2)). Exact for n <= 64, long double product beyond.
double central_binomial_half(int n);
Rational central_binomial_half_exact(int n);

// E|X - n/2|^3 for X ~ B_{n,1/2} (raw), or E|S|^3 for the standardized law.
double binom_abs3(int n, bool standardized);
Rational binom_abs3_raw_exact(int n);

}  // namespace zf
