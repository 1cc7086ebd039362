#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>

namespace eufro {

// gmpxx reduces after arithmetic but not in the (num, den) constructor; use make_rational.
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(long num, long den = 1);

// Accepts "p/q", integers and decimal literals such as "0.37" or "-1.5e-3".
// Decimals are converted exactly, never through binary64.
Rational parse_rational(std::string_view text);

// Exact value of a finite double.
Rational to_rational(double x);

std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

BigInt floor_int(const Rational& q);
BigInt ceil_int(const Rational& q);
inline double floor_int(double x) { return std::floor(x); }

// {x} = x - floor(x), in [0, 1) for every sign of x.
Rational frac(const Rational& q);
inline double frac(double x) { return x - std::floor(x); }

// Narrowing with a range check.
long to_long(const BigInt& z);

Rational pow(const Rational& base, long exponent);
inline double pow(double base, long exponent) { return std::pow(base, static_cast<double>(exponent)); }

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

// Scalar conversion used by the templated numerics (Rational or double).
template <class S>
S scalar_from(const BigInt& z);
template <>
inline Rational scalar_from<Rational>(const BigInt& z) { return Rational(z); }
template <>
inline double scalar_from<double>(const BigInt& z) { return z.get_d(); }

template <class S>
S scalar_from(const Rational& q);
template <>
inline Rational scalar_from<Rational>(const Rational& q) { return q; }
template <>
inline double scalar_from<double>(const Rational& q) { return q.get_d(); }

// (x)_+^n: zero for x <= 0 (including n = 0), x^n otherwise.
template <class S>
S positive_power(const S& x, long n) {
  if (!(x > 0)) return S(0);
  S r(1);
  for (long i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace eufro
