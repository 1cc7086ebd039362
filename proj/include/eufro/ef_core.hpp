#pragma once

#include <vector>

#include "eufro/polynomial.hpp"
#include "eufro/rational.hpp"

namespace eufro {

// One row A_{n,0..n,rho} of the Euler-Frobenius triangle.
template <class S>
struct EFTable {
  int n = 0;
  S rho{};
  std::vector<S> values;
};

// A_{n,k,rho} via the triangle recursion; 0 for k outside 0..n.
Rational ef_number(int n, long k, const Rational& rho);

// A_{n,k,rho} as an exact polynomial in rho.
RhoPoly ef_number_poly(int n, long k);
std::vector<RhoPoly> ef_row_poly(int n);

// Whole row in a single rolling pass. Instantiated for Rational and double.
template <class S>
EFTable<S> ef_row(int n, const S& rho);

// P_{n,rho}(x) = sum_k A_{n,k,rho} x^k.
Polynomial<Rational> ef_polynomial(int n, const Rational& rho);

// Alternating-sum closed form; requires n >= 1 and 0 <= rho <= 1.
Rational ef_explicit(int n, long k, const Rational& rho);

// Eulerian numbers of type B from their own integer recursion.
BigInt type_b(int n, long k);
std::vector<BigInt> type_b_row(int n);

// B_m with B_1 = -1/2. Cached, safe for concurrent callers.
Rational bernoulli_number(int m);

Rational euler_polynomial_value(int n, const Rational& rho);
BigInt euler_number(int n);

// T_n from P_{n,1}(i); 0 for even n.
BigInt tangent_number(int n);
// T_n from the Bernoulli-number closed form; 0 for even n.
BigInt tangent_number_from_bernoulli(int n);

// E X^n for X geometric on {0,1,2,...} with P(X = j) = (1-p) p^j.
Rational geometric_moment(int n, const Rational& p);

// Coefficients of sum_k m^n A_{n,k,1/m} x^k (1+x)^{n-k}.
std::vector<Rational> benoumhani_poly(int m, int n);

struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(const Rational& r) : re(r) {}
  GaussianRational(const Rational& r, const Rational& i) : re(r), im(i) {}

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {Rational(a.re + b.re), Rational(a.im + b.im)};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};


// P_{n,rho}(x) for n = 0..N read off the exponential generating function
// (1-x) e^{rho z (1-x)} / (1 - x e^{z(1-x)}) by exact power-series division; x != 1.
std::vector<Rational> ef_gf_values(int N, const Rational& rho, const Rational& x);

}  // namespace eufro
