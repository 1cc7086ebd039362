#pragma once

#include <string>
#include <vector>

#include "eufro/rational.hpp"

namespace eufro {

// Cardinal B-spline f_n (density of a sum of n uniforms).
template <class S>
S bspline_eval(int n, const S& x);

enum class ExpSplineMode { direct_sum, ef_formula };

// Phi_n(x; t) = sum_k t^k f_{n+1}(x - k).
template <class S>
S exp_spline(int n, const S& x, const S& t, ExpSplineMode mode);

// Roots of P_{n,rho}, all negative, in decreasing order; n-1 of them when rho = 1.
struct RootList {
  int n = 0;
  Rational rho;
  std::vector<double> roots;
};

RootList ef_roots(int n, const Rational& rho, double tol = 1e-14);

// Z_{n,rho} as a sum of independent Bernoulli(p_j), p_j = 1/(1 + lambda_j).
struct BernoulliFactors {
  std::vector<double> probs;
};

BernoulliFactors bernoulli_factors(int n, const Rational& rho, double tol = 1e-14);

// Law of the sum of independent Bernoulli variables, support 0..size.
std::vector<double> convolve_bernoulli(const BernoulliFactors& f);

struct CardinalSolvability {
  bool solvable = true;
  bool by_classification = true;
  bool by_evaluation = true;
  std::string reason;
};

// Periodic cardinal interpolation of degree n at k + lam with period N.
CardinalSolvability cardinal_solvable(int n, const Rational& lam, int N);

// Closed-form answer alone.
bool cardinal_classification(int n, const Rational& lam, int N);
// Whether P_{n,1-lam} vanishes at some N-th root of unity.
bool ef_vanishes_on_roots_of_unity(int n, const Rational& rho, int N);

}  // namespace eufro
