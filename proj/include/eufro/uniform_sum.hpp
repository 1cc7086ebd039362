#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "eufro/rational.hpp"

namespace eufro {

// Probability mass function on the contiguous support offset .. offset+size-1.
template <class W>
struct IntPmf {
  long offset = 0;
  std::vector<W> weights;

  long min_support() const { return offset; }
  long max_support() const { return offset + static_cast<long>(weights.size()) - 1; }
  W probability(long k) const {
    if (k < offset || k > max_support()) return W(0);
    return weights[static_cast<std::size_t>(k - offset)];
  }
  W total() const {
    W s(0);
    for (const auto& w : weights) s += w;
    return s;
  }
};

// Law of Z_{n,rho} for an arbitrary rational rho.
struct EFDistribution {
  int n = 0;
  Rational rho;
  IntPmf<Rational> pmf;

  Rational mean() const;
  Rational variance() const;
};

template <class S>
S irwin_hall_cdf(int n, const S& x);
template <class S>
S irwin_hall_pdf(int n, const S& x);
// f_n(x) = A_{n-1, floor x, {x}} / (n-1)!
template <class S>
S pdf_via_ef(int n, const S& x);

Rational slice_volume(int n, const Rational& s);

Rational ef_pmf(int n, const Rational& rho, long k);
EFDistribution ef_distribution(int n, const Rational& rho);
Rational ef_cdf(int n, const Rational& rho, long k);
Rational ef_moment(int n, const Rational& rho, int m);
Rational ef_cumulant(int n, const Rational& rho, int m);

// kappa_1..kappa_M from raw moments mu_0..mu_M (mu_0 = 1).
std::vector<Rational> cumulants_from_moments(const std::vector<Rational>& raw);

// E S_n^m, integrating the piecewise polynomial density exactly.
Rational irwin_hall_moment(int n, int m);

Rational ef_pgf_eval(int n, const Rational& rho, const Rational& x);

std::complex<double> char_fn_exact(int n, const Rational& rho, double t);
std::complex<double> char_fn_series(int n, double rho, double t, long K);

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QuadratureOptions {
  long max_intervals = 4'000'000;
  double min_width = 1e-10;
};

// A_{n,k,rho} from the Fourier integral of (sin t / t)^{n+1}; absolute error <= tol.
double ef_via_integral(int n, long k, double rho, double tol, const QuadratureOptions& opts = {});

}  // namespace eufro
