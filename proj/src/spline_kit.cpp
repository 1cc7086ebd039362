#include "eufro/spline_kit.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eufro/ef_core.hpp"
#include "eufro/uniform_sum.hpp"

namespace eufro {

template <class S>
S bspline_eval(int n, const S& x) {
  return pdf_via_ef<S>(n, x);
}

template Rational bspline_eval<Rational>(int, const Rational&);
template double bspline_eval<double>(int, const double&);

namespace {

long ifloor(const Rational& x) { return to_long(floor_int(x)); }
long iceil(const Rational& x) { return to_long(ceil_int(x)); }
long ifloor(double x) { return static_cast<long>(std::floor(x)); }
long iceil(double x) { return static_cast<long>(std::ceil(x)); }

}  // namespace

template <class S>
S exp_spline(int n, const S& x, const S& t, ExpSplineMode mode) {
  if (n < 1) throw std::invalid_argument("exp_spline: n must be at least 1");
  if (t == S(0)) throw std::domain_error("exp_spline: t must be nonzero");
  if (mode == ExpSplineMode::direct_sum) {
    S sum(0);
    for (long k = iceil(S(x - S(n + 1))); k <= ifloor(x); ++k)
      sum += S(pow(t, k) * pdf_via_ef<S>(n + 1, S(x - S(k))));
    return sum;
  }
  // Phi(j + s) = t^j Phi(s), Phi(s) = t^{-n} P_{n,1-s}(t) / n! on [0,1)
  long j = ifloor(x);
  S s = S(x - S(j));
  auto row = ef_row<S>(n, S(S(1) - s)).values;
  S p(0);
  for (std::size_t i = row.size(); i-- > 0;) p = S(p * t + row[i]);
  return S(pow(t, j - n) * p / scalar_from<S>(factorial(n)));
}

template Rational exp_spline<Rational>(int, const Rational&, const Rational&, ExpSplineMode);
template double exp_spline<double>(int, const double&, const double&, ExpSplineMode);

namespace {

int exact_sign(const Polynomial<Rational>& p, double x) {
  return sgn(p(to_rational(x)));
}

long double eval_ld(const std::vector<long double>& c, long double x) {
  long double acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

// Root in (lo, hi) given opposite exact signs at the ends.
double isolate(const Polynomial<Rational>& p, double lo, double hi, double tol) {
  std::vector<long double> c, d;
  for (const auto& v : p.coefficients()) c.push_back(static_cast<long double>(v.get_d()));
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<long double>(i));
  int slo = exact_sign(p, lo);
  int shi = exact_sign(p, hi);
  if (slo == 0) return lo;
  if (shi == 0) return hi;
  if (slo == shi) throw std::logic_error("ef_roots: bracket without sign change; interlacing violated");
  long double a = lo, b = hi;
  for (int it = 0; it < 400; ++it) {
    long double mid = (a + b) / 2;
    if (b - a <= tol * std::max(std::abs(a), std::abs(b))) break;
    long double v = eval_ld(c, mid);
    int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) return static_cast<double>(mid);
    if (s == slo) a = mid;
    else b = mid;
  }
  long double x = (a + b) / 2;
  for (int it = 0; it < 3; ++it) {
    long double dv = eval_ld(d, x);
    if (dv == 0) break;
    long double next = x - eval_ld(c, x) / dv;
    if (!(next > lo && next < hi)) break;
    x = next;
  }
  return static_cast<double>(x);
}

}  // namespace

RootList ef_roots(int n, const Rational& rho, double tol) {
  if (n < 1) throw std::invalid_argument("ef_roots: n must be at least 1");
  if (rho <= 0 || rho > 1) throw std::domain_error("ef_roots: rho must lie in (0,1]");
  if (!(tol > 0)) throw std::invalid_argument("ef_roots: tol must be positive");
  std::vector<double> prev;
  for (int m = 1; m <= n; ++m) {
    Polynomial<Rational> p = ef_polynomial(m, rho);
    Rational bound(0);
    for (const auto& a : p.coefficients()) bound = std::max(bound, Rational(abs(a / p.leading())));
    double outer = -Rational(bound + 1).get_d() * (1 + 1e-12) - 1e-300;
    std::vector<double> ends{0.0};
    ends.insert(ends.end(), prev.begin(), prev.end());
    ends.push_back(outer);
    std::vector<double> roots;
    for (long r = 0; r < p.degree(); ++r) roots.push_back(isolate(p, ends[r + 1], ends[r], tol));
    prev = std::move(roots);
  }
  return {n, rho, prev};
}

BernoulliFactors bernoulli_factors(int n, const Rational& rho, double tol) {
  BernoulliFactors f;
  for (double r : ef_roots(n, rho, tol).roots) f.probs.push_back(1 / (1 - r));
  return f;
}

std::vector<double> convolve_bernoulli(const BernoulliFactors& f) {
  std::vector<double> pmf{1.0};
  for (double p : f.probs) {
    std::vector<double> next(pmf.size() + 1, 0.0);
    for (std::size_t k = 0; k < pmf.size(); ++k) {
      next[k] += pmf[k] * (1 - p);
      next[k + 1] += pmf[k] * p;
    }
    pmf.swap(next);
  }
  return pmf;
}

bool cardinal_classification(int n, const Rational& lam, int N) {
  if (n < 1 || N < 1) throw std::invalid_argument("cardinal_classification: n and N must be positive");
  if (lam < 0 || lam > 1) throw std::domain_error("cardinal_classification: lambda must lie in [0,1]");
  if (N % 2 == 1) return true;
  if (n % 2 == 0) return !(lam == 0 || lam == 1);
  return lam != make_rational(1, 2);
}

namespace {

// 0: nonzero, 1: zero, -1: below the margin of the numeric evaluation
int vanishes_at(const Polynomial<Rational>& p, int j, int N) {
  if ((4 * j) % N == 0) {
    static const GaussianRational units[4] = {GaussianRational(Rational(1)),
                                              GaussianRational(Rational(0), Rational(1)),
                                              GaussianRational(Rational(-1)),
                                              GaussianRational(Rational(0), Rational(-1))};
    GaussianRational v = p(units[(4 * j) / N]);
    return v.re == 0 && v.im == 0 ? 1 : 0;
  }
  constexpr mpfr_prec_t prec = 128;  // about 38 decimal digits
  mpfr_t angle, c, s, re, im, tmp, coef, scale;
  for (auto* v : {&angle, &c, &s, &re, &im, &tmp, &coef, &scale}) mpfr_init2(*v, prec);
  mpfr_const_pi(angle, MPFR_RNDN);
  mpfr_mul_si(angle, angle, 2 * j, MPFR_RNDN);
  mpfr_div_si(angle, angle, N, MPFR_RNDN);
  mpfr_sin_cos(s, c, angle, MPFR_RNDN);
  mpfr_set_zero(re, 1);
  mpfr_set_zero(im, 1);
  mpfr_set_zero(scale, 1);
  const auto& a = p.coefficients();
  for (std::size_t i = a.size(); i-- > 0;) {
    // (re + i im)(c + i s) + a_i
    mpfr_mul(tmp, re, c, MPFR_RNDN);
    mpfr_fms(tmp, im, s, tmp, MPFR_RNDN);  // im*s - re*c
    mpfr_neg(tmp, tmp, MPFR_RNDN);
    mpfr_mul(im, im, c, MPFR_RNDN);
    mpfr_fma(im, re, s, im, MPFR_RNDN);
    mpfr_set(re, tmp, MPFR_RNDN);
    mpfr_set_q(coef, a[i].get_mpq_t(), MPFR_RNDN);
    mpfr_add(re, re, coef, MPFR_RNDN);
    mpfr_abs(coef, coef, MPFR_RNDN);
    mpfr_add(scale, scale, coef, MPFR_RNDN);
  }
  mpfr_hypot(tmp, re, im, MPFR_RNDN);
  double rel = mpfr_zero_p(scale) ? 0.0 : mpfr_get_d(tmp, MPFR_RNDN) / mpfr_get_d(scale, MPFR_RNDN);
  for (auto* v : {&angle, &c, &s, &re, &im, &tmp, &coef, &scale}) mpfr_clear(*v);
  return rel < 1e-12 ? -1 : 0;
}

}  // namespace

bool ef_vanishes_on_roots_of_unity(int n, const Rational& rho, int N) {
  Polynomial<Rational> p = ef_polynomial(n, rho);
  for (int j = 0; j < N; ++j)
    if (vanishes_at(p, j, N) != 0) return true;
  return false;
}

CardinalSolvability cardinal_solvable(int n, const Rational& lam, int N) {
  CardinalSolvability r;
  r.by_classification = cardinal_classification(n, lam, N);
  Polynomial<Rational> p = ef_polynomial(n, Rational(1 - lam));
  bool zero = false, inconclusive = false;
  int where = -1;
  for (int j = 0; j < N && !zero; ++j) {
    int v = vanishes_at(p, j, N);
    if (v == 1) {
      zero = true;
      where = j;
    } else if (v == -1) {
      inconclusive = true;
      where = j;
    }
  }
  r.by_evaluation = zero ? false : (inconclusive ? r.by_classification : true);
  if (r.by_evaluation != r.by_classification)
    throw std::logic_error("cardinal_solvable: classification and root-of-unity evaluation disagree");
  r.solvable = r.by_classification;
  if (zero)
    r.reason = "P_{n,1-lambda} vanishes at the root of unity exp(2 pi i " + std::to_string(where) + "/" +
               std::to_string(N) + ")";
  else if (inconclusive)
    r.reason = "value at a root of unity below the numeric margin; classification decides";
  else
    r.reason = "P_{n,1-lambda} is nonzero at every N-th root of unity";
  return r;
}

}  // namespace eufro
