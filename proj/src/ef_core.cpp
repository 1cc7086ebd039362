#include "eufro/ef_core.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace eufro {

template <class S>
EFTable<S> ef_row(int n, const S& rho) {
  if (n < 0) throw std::invalid_argument("ef_row: n must be nonnegative");
  std::vector<S> row{S(1)};
  std::vector<S> next;
  row.reserve(n + 1);
  next.reserve(n + 1);
  for (int m = 1; m <= n; ++m) {
    next.assign(m + 1, S(0));
    for (int k = 0; k <= m; ++k) {
      if (k < m) next[k] += S((S(k) + rho) * row[k]);
      if (k > 0) next[k] += S((S(m - k + 1) - rho) * row[k - 1]);
    }
    row.swap(next);
  }
  return {n, rho, std::move(row)};
}

template EFTable<Rational> ef_row<Rational>(int, const Rational&);
template EFTable<double> ef_row<double>(int, const double&);
template EFTable<long double> ef_row<long double>(int, const long double&);

Rational ef_number(int n, long k, const Rational& rho) {
  if (n < 0) throw std::invalid_argument("ef_number: n must be nonnegative");
  if (k < 0 || k > n) return Rational(0);
  return ef_row<Rational>(n, rho).values[k];
}

std::vector<RhoPoly> ef_row_poly(int n) {
  if (n < 0) throw std::invalid_argument("ef_row_poly: n must be nonnegative");
  std::vector<RhoPoly> row{RhoPoly{Rational(1)}};
  for (int m = 1; m <= n; ++m) {
    std::vector<RhoPoly> next(m + 1);
    for (int k = 0; k <= m; ++k) {
      if (k < m) next[k] += RhoPoly{Rational(k), Rational(1)} * row[k];
      if (k > 0) next[k] += RhoPoly{Rational(m - k + 1), Rational(-1)} * row[k - 1];
    }
    row.swap(next);
  }
  return row;
}

RhoPoly ef_number_poly(int n, long k) {
  if (n < 0) throw std::invalid_argument("ef_number_poly: n must be nonnegative");
  if (k < 0 || k > n) return {};
  return ef_row_poly(n)[k];
}

Polynomial<Rational> ef_polynomial(int n, const Rational& rho) {
  return Polynomial<Rational>(ef_row<Rational>(n, rho).values);
}

Rational ef_explicit(int n, long k, const Rational& rho) {
  if (n < 1) throw std::invalid_argument("ef_explicit: n must be at least 1");
  if (rho < 0 || rho > 1) throw std::domain_error("ef_explicit: rho must lie in [0,1]");
  Rational sum(0);
  for (long j = 0; j <= n + 1; ++j) {
    Rational term = Rational(binomial(n + 1, j)) * positive_power(Rational(k + rho - j), n);
    if (j % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

std::vector<BigInt> type_b_row(int n) {
  if (n < 0) throw std::invalid_argument("type_b_row: n must be nonnegative");
  std::vector<BigInt> row{BigInt(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<BigInt> next(m + 1, BigInt(0));
    for (int k = 0; k <= m; ++k) {
      if (k < m) next[k] += (2 * k + 1) * row[k];
      if (k > 0) next[k] += (2 * m - 2 * k + 1) * row[k - 1];
    }
    row.swap(next);
  }
  return row;
}

BigInt type_b(int n, long k) {
  if (k < 0 || k > n) return BigInt(0);
  return type_b_row(n)[k];
}

namespace {

// Coefficients g_m of t/(e^t - 1) = sum g_m t^m, grown on demand.
struct BernoulliCache {
  std::mutex mu;
  std::vector<Rational> g{Rational(1)};
  std::vector<Rational> inv_fact{Rational(1)};

  Rational get(int m) {
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(g.size()) <= m) {
      int j = static_cast<int>(g.size());
      inv_fact.push_back(inv_fact.back() / (j + 1));
      Rational s(0);
      // (e^t - 1)/t has coefficient 1/(i+1)! at t^i.
      for (int i = 1; i <= j; ++i) s += inv_fact[i] * g[j - i];
      g.push_back(-s);
    }
    return g[m] * Rational(factorial(m));
  }
};

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

}  // namespace

Rational bernoulli_number(int m) {
  if (m < 0) throw std::invalid_argument("bernoulli_number: m must be nonnegative");
  return bernoulli_cache().get(m);
}

Rational euler_polynomial_value(int n, const Rational& rho) {
  return ef_polynomial(n, rho)(Rational(-1)) / pow(Rational(2), n);
}

BigInt euler_number(int n) {
  if (n < 0) throw std::invalid_argument("euler_number: n must be nonnegative");
  Rational v = ef_polynomial(n, make_rational(1, 2))(Rational(-1));
  if (v.get_den() != 1) throw std::logic_error("euler_number: non-integral value");
  return v.get_num();
}

BigInt tangent_number(int n) {
  if (n < 1) throw std::invalid_argument("tangent_number: n must be at least 1");
  if (n % 2 == 0) return BigInt(0);
  int m = (n - 1) / 2;
  GaussianRational z = ef_polynomial(n, Rational(1))(GaussianRational(Rational(0), Rational(1)));
  // divide by i^m, i.e. multiply by (-i)^m
  GaussianRational minus_i(Rational(0), Rational(-1));
  for (int j = 0; j < m; ++j) z = z * minus_i;
  Rational t = z.re / pow(Rational(2), m);
  if (z.im != 0 || t.get_den() != 1) throw std::logic_error("tangent_number: P_{n,1}(i) has unexpected form");
  return t.get_num();
}

BigInt tangent_number_from_bernoulli(int n) {
  if (n < 1) throw std::invalid_argument("tangent_number_from_bernoulli: n must be at least 1");
  if (n % 2 == 0) return BigInt(0);
  long m = (n + 1) / 2;
  Rational p = pow(Rational(2), 2 * m);
  Rational t = p * (p - 1) / (2 * m) * bernoulli_number(static_cast<int>(2 * m));
  if (m % 2 == 0) t = -t;
  if (t.get_den() != 1) throw std::logic_error("tangent_number_from_bernoulli: non-integral value");
  return t.get_num();
}

Rational geometric_moment(int n, const Rational& p) {
  if (n < 1) throw std::invalid_argument("geometric_moment: n must be at least 1");
  if (p <= 0 || p >= 1) throw std::domain_error("geometric_moment: p must lie in (0,1)");
  return ef_polynomial(n, Rational(0))(p) / pow(Rational(1 - p), n);
}

std::vector<Rational> benoumhani_poly(int m, int n) {
  if (m < 1) throw std::invalid_argument("benoumhani_poly: m must be at least 1");
  auto row = ef_row<Rational>(n, make_rational(1, m)).values;
  Rational scale = pow(Rational(m), n);
  Polynomial<Rational> one_plus_x{Rational(1), Rational(1)};
  Polynomial<Rational> total;
  for (int k = 0; k <= n; ++k) {
    Polynomial<Rational> term = Polynomial<Rational>::monomial(Rational(scale * row[k]), k);
    for (int j = 0; j < n - k; ++j) term *= one_plus_x;
    total += term;
  }
  auto c = total.coefficients();
  if (c.empty()) c.push_back(Rational(0));
  return c;
}

std::string to_string(const RhoPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    const Rational& c = p.coefficients()[i];
    if (c == 0) continue;
    Rational a = abs(c);
    if (c < 0) os << '-';
    else if (!first) os << '+';
    first = false;
    bool unit = a == 1;
    if (i == 0 || !unit) {
      if (a.get_den() != 1 && i > 0) os << '(' << a.get_str() << ')';
      else os << a.get_str();
    }
    if (i > 0) os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}


std::vector<Rational> ef_gf_values(int N, const Rational& rho, const Rational& x) {
  if (N < 0) throw std::invalid_argument("ef_gf_values: N must be nonnegative");
  if (x == 1) throw std::domain_error("ef_gf_values: x = 1 is a pole of the generating function");
  Rational u = 1 - x;
  std::vector<Rational> a(N + 1), b(N + 1), c(N + 1);
  Rational fact(1), ru_pow(1), u_pow(1);
  for (int j = 0; j <= N; ++j) {
    if (j > 0) {
      fact *= j;
      ru_pow *= rho * u;
      u_pow *= u;
    }
    a[j] = u * ru_pow / fact;
    b[j] = j == 0 ? Rational(1 - x) : Rational(-x * u_pow / fact);
  }
  std::vector<Rational> values(N + 1);
  fact = 1;
  for (int j = 0; j <= N; ++j) {
    Rational s = a[j];
    for (int i = 1; i <= j; ++i) s -= b[i] * c[j - i];
    c[j] = s / b[0];
    if (j > 0) fact *= j;
    values[j] = c[j] * fact;
  }
  return values;
}

}  // namespace eufro
