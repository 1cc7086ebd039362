#include "eufro/uniform_sum.hpp"

#include <cmath>
#include <numbers>

#include "eufro/ef_core.hpp"
#include "eufro/polynomial.hpp"

namespace eufro {

namespace {

long ifloor(const Rational& x) { return to_long(floor_int(x)); }
long ifloor(double x) { return static_cast<long>(std::floor(x)); }

void require_n(int n, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be at least 1");
}

template <class S>
void reject_uniform_jumps(int n, const S& x, const char* who) {
  if (n == 1 && (x == S(0) || x == S(1)))
    throw std::domain_error(std::string(who) + ": f_1 is undetermined at 0 and 1");
}

}  // namespace

template <class S>
S irwin_hall_cdf(int n, const S& x) {
  require_n(n, "irwin_hall_cdf");
  if (!(x > 0)) return S(0);
  if (!(x < n)) return S(1);
  long top = ifloor(x);
  S sum(0);
  for (long j = 0; j <= top; ++j) {
    S term = S(scalar_from<S>(binomial(n, j)) * positive_power(S(x - S(j)), n));
    if (j % 2) sum -= term;
    else sum += term;
  }
  return S(sum / scalar_from<S>(factorial(n)));
}

template <class S>
S irwin_hall_pdf(int n, const S& x) {
  require_n(n, "irwin_hall_pdf");
  reject_uniform_jumps(n, x, "irwin_hall_pdf");
  if (!(x > 0) || !(x < n)) return S(0);
  long top = ifloor(x);
  S sum(0);
  for (long j = 0; j <= top; ++j) {
    S term = S(scalar_from<S>(binomial(n, j)) * positive_power(S(x - S(j)), n - 1));
    if (j % 2) sum -= term;
    else sum += term;
  }
  return S(sum / scalar_from<S>(factorial(n - 1)));
}

template <class S>
S pdf_via_ef(int n, const S& x) {
  require_n(n, "pdf_via_ef");
  reject_uniform_jumps(n, x, "pdf_via_ef");
  long k = ifloor(x);
  if (k < 0 || k > n - 1) return S(0);
  S r = S(x - S(k));
  return S(ef_row<S>(n - 1, r).values[k] / scalar_from<S>(factorial(n - 1)));
}

template Rational irwin_hall_cdf<Rational>(int, const Rational&);
template double irwin_hall_cdf<double>(int, const double&);
template Rational irwin_hall_pdf<Rational>(int, const Rational&);
template double irwin_hall_pdf<double>(int, const double&);
template Rational pdf_via_ef<Rational>(int, const Rational&);
template double pdf_via_ef<double>(int, const double&);

Rational slice_volume(int n, const Rational& s) {
  return irwin_hall_cdf(n, s) - irwin_hall_cdf(n, Rational(s - 1));
}

Rational ef_pmf(int n, const Rational& rho, long k) {
  require_n(n, "ef_pmf");
  long shift = ifloor(rho);
  return ef_number(n, k + shift, frac(rho)) / Rational(factorial(n));
}

EFDistribution ef_distribution(int n, const Rational& rho) {
  require_n(n, "ef_distribution");
  long shift = ifloor(rho);
  auto row = ef_row<Rational>(n, frac(rho)).values;
  Rational nf(factorial(n));
  std::size_t lo = 0, hi = row.size();
  while (lo < hi && row[lo] == 0) ++lo;
  while (hi > lo && row[hi - 1] == 0) --hi;
  EFDistribution d;
  d.n = n;
  d.rho = rho;
  d.pmf.offset = static_cast<long>(lo) - shift;
  for (std::size_t i = lo; i < hi; ++i) d.pmf.weights.push_back(row[i] / nf);
  return d;
}

Rational EFDistribution::mean() const {
  Rational s(0);
  for (std::size_t i = 0; i < pmf.weights.size(); ++i) s += pmf.weights[i] * (pmf.offset + static_cast<long>(i));
  return s;
}

Rational EFDistribution::variance() const {
  Rational mu = mean();
  Rational s(0);
  for (std::size_t i = 0; i < pmf.weights.size(); ++i) {
    Rational d = Rational(pmf.offset + static_cast<long>(i)) - mu;
    s += pmf.weights[i] * d * d;
  }
  return s;
}

Rational ef_cdf(int n, const Rational& rho, long k) {
  require_n(n, "ef_cdf");
  return irwin_hall_cdf(n, Rational(k + rho));
}

Rational ef_moment(int n, const Rational& rho, int m) {
  if (m < 0) throw std::invalid_argument("ef_moment: m must be nonnegative");
  auto d = ef_distribution(n, rho);
  Rational s(0);
  for (std::size_t i = 0; i < d.pmf.weights.size(); ++i)
    s += d.pmf.weights[i] * pow(Rational(d.pmf.offset + static_cast<long>(i)), m);
  return s;
}

std::vector<Rational> cumulants_from_moments(const std::vector<Rational>& raw) {
  std::vector<Rational> kappa(raw.size(), Rational(0));
  for (std::size_t m = 1; m < raw.size(); ++m) {
    Rational s = raw[m];
    for (std::size_t j = 1; j < m; ++j) s -= Rational(binomial(m - 1, j - 1)) * kappa[j] * raw[m - j];
    kappa[m] = s;
  }
  return kappa;
}

Rational ef_cumulant(int n, const Rational& rho, int m) {
  if (m < 1) throw std::invalid_argument("ef_cumulant: m must be at least 1");
  auto d = ef_distribution(n, rho);
  std::vector<Rational> raw(m + 1, Rational(0));
  for (std::size_t i = 0; i < d.pmf.weights.size(); ++i) {
    Rational k(d.pmf.offset + static_cast<long>(i));
    Rational p = d.pmf.weights[i];
    for (int j = 0; j <= m; ++j) {
      raw[j] += p;
      p *= k;
    }
  }
  return cumulants_from_moments(raw)[m];
}

Rational irwin_hall_moment(int n, int m) {
  require_n(n, "irwin_hall_moment");
  if (m < 0) throw std::invalid_argument("irwin_hall_moment: m must be nonnegative");
  // On [j, j+1] the density is (n-1)!^{-1} sum_{i<=j} (-1)^i C(n,i) (x-i)^{n-1}.
  Polynomial<Rational> piece;
  Rational total(0);
  for (int j = 0; j < n; ++j) {
    Polynomial<Rational> shifted{Rational(1)};
    Polynomial<Rational> lin{Rational(-j), Rational(1)};
    for (int e = 0; e < n - 1; ++e) shifted *= lin;
    shifted.scale(Rational(binomial(n, j)) * (j % 2 ? -1 : 1));
    piece += shifted;
    // integrate x^m * piece over [j, j+1]
    const auto& c = piece.coefficients();
    for (std::size_t d = 0; d < c.size(); ++d) {
      long e = static_cast<long>(d) + m + 1;
      total += c[d] * (pow(Rational(j + 1), e) - pow(Rational(j), e)) / e;
    }
  }
  return total / Rational(factorial(n - 1));
}

Rational ef_pgf_eval(int n, const Rational& rho, const Rational& x) {
  require_n(n, "ef_pgf_eval");
  if (rho < 0 || rho > 1) throw std::domain_error("ef_pgf_eval: rho must lie in [0,1]");
  return ef_polynomial(n, rho)(x) / Rational(factorial(n));
}

std::complex<double> char_fn_exact(int n, const Rational& rho, double t) {
  auto d = ef_distribution(n, rho);
  std::complex<double> s(0.0, 0.0);
  for (std::size_t i = 0; i < d.pmf.weights.size(); ++i) {
    double k = static_cast<double>(d.pmf.offset + static_cast<long>(i));
    s += d.pmf.weights[i].get_d() * std::polar(1.0, t * k);
  }
  return s;
}

std::complex<double> char_fn_series(int n, double rho, double t, long K) {
  require_n(n, "char_fn_series");
  if (K < 1) throw std::invalid_argument("char_fn_series: K must be at least 1");
  constexpr double two_pi = 2 * std::numbers::pi;
  if (std::abs(std::remainder(t, two_pi)) < 1e-9)
    throw std::domain_error("char_fn_series: t is a pole (multiple of 2*pi)");
  // i^{-n-1} (e^{it}-1)^{n+1} = (2 sin(t/2))^{n+1} e^{i(n+1)t/2}
  double amp = std::pow(2 * std::sin(t / 2), n + 1);
  std::complex<double> pre = amp * std::polar(1.0, (n + 1) * t / 2 - rho * t);
  std::complex<double> sum(0.0, 0.0);
  for (long a = K; a >= 1; --a) {
    for (long k : {a, -a}) {
      double phase = static_cast<double>(k) * rho;
      phase -= std::floor(phase);
      sum += std::polar(1.0, -two_pi * phase) / std::pow(t + two_pi * static_cast<double>(k), n + 1);
    }
  }
  sum += 1.0 / std::pow(t, n + 1);
  return pre * sum;
}

}  // namespace eufro
