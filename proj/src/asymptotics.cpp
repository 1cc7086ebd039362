#include "eufro/asymptotics.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "eufro/ef_core.hpp"

namespace eufro {

Polynomial<Rational> hermite_poly(int m) {
  if (m < 0) throw std::invalid_argument("hermite_poly: m must be nonnegative");
  Polynomial<Rational> prev{Rational(1)};
  if (m == 0) return prev;
  Polynomial<Rational> cur{Rational(0), Rational(1)};
  const Polynomial<Rational> x{Rational(0), Rational(1)};
  for (int j = 1; j < m; ++j) {
    Polynomial<Rational> next = x * cur - prev * j;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace {

Polynomial<Rational> build_q(int nu) {
  // c_m = B_{2m+2} / ((m+1)(2m+2)!)
  std::vector<Rational> c(nu + 1);
  for (int m = 1; m <= nu; ++m)
    c[m] = bernoulli_number(2 * m + 2) / (Rational(m + 1) * Rational(factorial(2 * m + 2)));

  Polynomial<Rational> total;
  std::vector<int> k(nu + 1, 0);
  std::function<void(int, int)> walk = [&](int m, int remaining) {
    if (m > nu) {
      if (remaining != 0) return;
      int s = 0;
      Rational w(1);
      for (int j = 1; j <= nu; ++j) {
        s += k[j];
        w *= pow(c[j], k[j]) / Rational(factorial(k[j]));
      }
      w *= pow(Rational(6), s);
      total += hermite_poly(2 * nu + 2 * s).scale(w);
      return;
    }
    for (int km = 0; km * m <= remaining; ++km) {
      k[m] = km;
      walk(m + 1, remaining - km * m);
    }
    k[m] = 0;
  };
  walk(1, nu);
  total.scale(pow(Rational(12), nu));
  return total;
}

}  // namespace

Polynomial<Rational> q_poly(int nu) {
  if (nu < 1) throw std::invalid_argument("q_poly: nu must be at least 1");
  static std::mutex mu;
  static std::map<int, Polynomial<Rational>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(nu);
    if (it != cache.end()) return it->second;
  }
  Polynomial<Rational> q = build_q(nu);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(nu, std::move(q)).first->second;
}

double llt_approx(int n, long k, double rho, int ell) {
  if (n < 1) throw std::invalid_argument("llt_approx: n must be at least 1");
  if (ell < 0) throw std::invalid_argument("llt_approx: ell must be nonnegative");
  double n1 = n + 1.0;
  double x = (static_cast<double>(k) + rho - n1 / 2) * std::sqrt(12 / n1);
  double corr = 1, scale = 1;
  for (int nu = 1; nu <= ell; ++nu) {
    scale /= n1;
    corr += q_poly(nu)(x) * scale;
  }
  return std::sqrt(6 / (std::numbers::pi * n1)) * std::exp(-x * x / 2) * corr;
}

double clt_zscore(int n, double rho, long k) {
  if (n < 2) throw std::invalid_argument("clt_zscore: n must be at least 2");
  return (static_cast<double>(k) - ((n + 1) / 2.0 - rho)) / std::sqrt((n + 1) / 12.0);
}

namespace {
constexpr double kSeriesCut = 0.25;
}

double log_psi(double t) {
  if (std::abs(t) < kSeriesCut) {
    double t2 = t * t;
    return t / 2 + t2 * (1.0 / 24 + t2 * (-1.0 / 2880 + t2 * (1.0 / 181440 + t2 * (-1.0 / 9676800))));
  }
  if (t > 0) return t + std::log1p(-std::exp(-t)) - std::log(t);
  return std::log1p(-std::exp(t)) - std::log(-t);
}

double log_psi_d1(double t) {
  if (std::abs(t) < kSeriesCut) {
    double t2 = t * t;
    return 0.5 + t * (1.0 / 12 + t2 * (-1.0 / 720 + t2 * (1.0 / 30240 + t2 * (-1.0 / 1209600 + t2 / 47900160))));
  }
  return -1 / std::expm1(-t) - 1 / t;
}

double log_psi_d2(double t) {
  if (std::abs(t) < kSeriesCut) {
    double t2 = t * t;
    return 1.0 / 12 + t2 * (-3.0 / 720 + t2 * (5.0 / 30240 + t2 * (-7.0 / 1209600 + t2 * 9 / 47900160)));
  }
  double s = std::sinh(t / 2);
  return 1 / (t * t) - 1 / (4 * s * s);
}

SaddleResult saddle_solve(double a) {
  if (!(a > 0 && a < 1)) throw std::domain_error("saddle_solve: a must lie in (0,1)");
  SaddleResult r;
  r.a = a;
  if (a == 0.5) return r;
  // Solve for b >= 1/2; t(1-b) = -t(b) with identical m and sigma^2.
  double b = a > 0.5 ? a : 1 - a;
  double lo = 0, hi = 1 / (1 - b) + 1;
  double t = std::min(12 * (b - 0.5), 1 / (1 - b));
  for (int it = 0; it < 200; ++it) {
    double f = log_psi_d1(t) - b;
    if (f == 0) break;
    if (f > 0) hi = t;
    else lo = t;
    double step = f / log_psi_d2(t);
    double next = t - step;
    if (!(next > lo && next < hi)) next = (lo + hi) / 2;
    if (std::abs(next - t) <= 1e-16 * std::max(1.0, std::abs(t))) {
      t = next;
      break;
    }
    t = next;
  }
  r.t = a > 0.5 ? t : -t;
  r.log_m = -b * t + log_psi(t);
  r.m = std::exp(r.log_m);
  r.sigma2 = log_psi_d2(t);
  return r;
}

double ldev_approx(int n, long k, double rho) {
  if (n < 1) throw std::invalid_argument("ldev_approx: n must be at least 1");
  double y = static_cast<double>(k) + rho;
  double n1 = n + 1.0;
  if (!(y > 0 && y < n1)) throw std::domain_error("ldev_approx: k + rho must lie in (0, n+1)");
  SaddleResult s = saddle_solve(y / n1);
  return std::exp(n1 * s.log_m - 0.5 * std::log(2 * std::numbers::pi * n1 * s.sigma2));
}

}  // namespace eufro
