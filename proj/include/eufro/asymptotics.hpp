#pragma once

#include "eufro/polynomial.hpp"

namespace eufro {

// Probabilists' Hermite polynomial He_m.
Polynomial<Rational> hermite_poly(int m);

// Correction polynomial of order nu in the local expansion; degree 4 nu. Memoized.
Polynomial<Rational> q_poly(int nu);

// sqrt(6/(pi(n+1))) e^{-x^2/2} (1 + sum_{nu<=ell} q_nu(x)/(n+1)^nu)
// with x = (k + rho - (n+1)/2) sqrt(12/(n+1)).
double llt_approx(int n, long k, double rho, int ell);

double clt_zscore(int n, double rho, long k);

// psi(t) = (e^t - 1)/t, the moment generating function of U(0,1).
double log_psi(double t);
double log_psi_d1(double t);
double log_psi_d2(double t);

struct SaddleResult {
  double a = 0.5;
  double t = 0;
  double m = 1;
  double log_m = 0;
  double sigma2 = 1.0 / 12;
};

SaddleResult saddle_solve(double a);

// m(a)^{n+1} / sqrt(2 pi (n+1) sigma^2(a)) with a = (k+rho)/(n+1).
double ldev_approx(int n, long k, double rho);

}  // namespace eufro
