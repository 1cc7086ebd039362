#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "eufro/rational.hpp"

namespace eufro {

// Dense univariate polynomial over a ring T; coefficient i multiplies x^i.
// T may itself be a Polynomial, which gives bivariate polynomials.
template <class T>
class Polynomial {
 public:
  using value_type = T;

  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
  static Polynomial monomial(const T& v, std::size_t degree) {
    std::vector<T> c(degree + 1);
    c[degree] = v;
    return Polynomial(std::move(c));
  }

  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coefficients() const { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T{}; }
  const T& leading() const { return c_.back(); }

  template <class U>
  U operator()(const U& x) const {
    U acc = lift<U>(T{});
    for (std::size_t i = c_.size(); i-- > 0;) acc = U(acc * x) + lift<U>(c_[i]);
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = T(c_[i] * static_cast<long>(i));
    return Polynomial(std::move(d));
  }

  // x^n p(1/x) for n >= degree.
  Polynomial reversed(std::size_t n) const {
    std::vector<T> r(n + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) r[n - i] = c_[i];
    return Polynomial(std::move(r));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& scale(const T& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& v : a.c_) v = T(-v);
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(Polynomial a, long s) {
    for (auto& v : a.c_) v = T(v * s);
    a.trim();
    return a;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  template <class U>
  static U lift(const T& v) {
    if constexpr (std::is_same_v<T, Rational> && std::is_same_v<U, double>) {
      return v.get_d();
    } else if constexpr (std::is_same_v<T, Rational> && std::is_same_v<U, long double>) {
      return static_cast<long double>(v.get_d());
    } else if constexpr (std::is_same_v<T, Rational> && std::is_same_v<U, std::complex<double>>) {
      return U(v.get_d(), 0.0);
    } else {
      return U(v);
    }
  }

  void trim() {
    while (!c_.empty() && c_.back() == T{}) c_.pop_back();
  }

  std::vector<T> c_;
};

using RhoPoly = Polynomial<Rational>;

// Human-readable rendering in a named variable, e.g. "1+2rho-2rho^2".
std::string to_string(const RhoPoly& p, const std::string& var = "x");

}  // namespace eufro
