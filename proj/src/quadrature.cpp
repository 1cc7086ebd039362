#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

#include "eufro/uniform_sum.hpp"

namespace eufro {

namespace {

using real = long double;

constexpr real xgk[8] = {
    0.991455371120812639206854697526329L, 0.949107912342758524526189684047851L,
    0.864864423359769072789712788640926L, 0.741531185599394439863864773280788L,
    0.586087235467691130294144845693013L, 0.405845151377397166906606412076961L,
    0.207784955007898467600689403773245L, 0.000000000000000000000000000000000L};
constexpr real wgk[8] = {
    0.022935322010529224963732008058970L, 0.063092092629978553290700663189204L,
    0.104790010322250183839876322541518L, 0.140653259715525918745189590510238L,
    0.169004726639267902826583426598550L, 0.190350578064785409913256402421014L,
    0.204432940075298892414161999234649L, 0.209482141084727828012999174891714L};
constexpr real wg[4] = {0.129484966168864976313L, 0.279705391489276667901467771423780L,
                        0.381830050505118944950369775488975L, 0.417959183673469387755102040816327L};

struct Integrand {
  int power;
  real c;
  real operator()(real t) const {
    real s = std::sin(t) / t;
    real v = 1;
    for (int i = 0; i < power; ++i) v *= s;
    return std::cos(c * t) * v;
  }
};

struct Piece {
  real a, b, value, err;
  bool operator<(const Piece& o) const { return err < o.err; }
};

Piece kronrod15(const Integrand& f, real a, real b) {
  real center = (a + b) / 2, half = (b - a) / 2;
  real fc = f(center);
  real resk = fc * wgk[7], resg = fc * wg[3], resabs = std::abs(resk);
  real fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    real dx = half * xgk[j];
    fv1[j] = f(center - dx);
    fv2[j] = f(center + dx);
    real sum = fv1[j] + fv2[j];
    resk += wgk[j] * sum;
    resabs += wgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    if (j % 2 == 1) resg += wg[j / 2] * sum;
  }
  real mean = resk / 2;
  real resasc = wgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) resasc += wgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
  resk *= half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);
  real err = std::abs((resk - resg * half));
  if (resasc != 0 && err != 0) err = resasc * std::min<real>(1, std::pow(200 * err / resasc, 1.5L));
  err = std::max(err, 4 * std::numeric_limits<real>::epsilon() * resabs);
  return {a, b, resk, err};
}

struct Wave {
  real omega;
  std::complex<real> coeff;
};

// sin^p(t) cos(ct) as a sum of complex exponentials, equal frequencies merged.
std::vector<Wave> spectrum(int p, real c) {
  std::vector<Wave> w;
  std::complex<real> scale = std::pow(std::complex<real>(0, 2), -p) / real(2);
  real binom = 1;
  for (int j = 0; j <= p; ++j) {
    std::complex<real> d = scale * binom * real(j % 2 ? -1 : 1);
    w.push_back({p - 2 * j + c, d});
    w.push_back({p - 2 * j - c, d});
    binom = binom * (p - j) / (j + 1);
  }
  std::sort(w.begin(), w.end(), [](const Wave& x, const Wave& y) { return x.omega < y.omega; });
  std::vector<Wave> merged;
  for (const auto& x : w) {
    if (!merged.empty() && std::abs(merged.back().omega - x.omega) < 1e-12L) merged.back().coeff += x.coeff;
    else merged.push_back(x);
  }
  return merged;
}

// Integral of g over [T, inf): the constant term exactly, the rest bounded
// by integrating by parts once.
struct Tail {
  real value;
  real bound;
};

Tail tail_of(const std::vector<Wave>& waves, int p, real T) {
  Tail r{0, 0};
  real crude = std::pow(T, real(1 - p)) / (p - 1);
  for (const auto& w : waves) {
    if (std::abs(w.omega) < 1e-12L) {
      r.value += w.coeff.real() * crude;
    } else {
      real ibp = 2 / (std::abs(w.omega) * std::pow(T, real(p)));
      r.bound += std::abs(w.coeff) * std::min(ibp, crude);
    }
  }
  return r;
}

}  // namespace

double ef_via_integral(int n, long k, double rho, double tol, const QuadratureOptions& opts) {
  if (n < 1) throw std::invalid_argument("ef_via_integral: n must be at least 1");
  if (!(rho >= 0 && rho <= 1)) throw std::domain_error("ef_via_integral: rho must lie in [0,1]");
  if (!(tol > 0)) throw std::invalid_argument("ef_via_integral: tol must be positive");

  const int p = n + 1;
  const real c = 2 * real(k) + 2 * real(rho) - n - 1;
  real nfact = 1;
  for (int i = 2; i <= n; ++i) nfact *= i;
  const real to_A = 2 * nfact / std::numbers::pi_v<real>;
  const real eps = real(tol) / to_A;

  auto waves = spectrum(p, c);
  real T = std::numbers::pi_v<real>;
  Tail tail = tail_of(waves, p, T);
  while (tail.bound > eps / 2) {
    T *= 2;
    tail = tail_of(waves, p, T);
    if (T > 1e15L) throw QuadratureError("ef_via_integral: tail does not decay to the requested tolerance");
  }

  const real omega_max = p + std::abs(c);
  const real panel = std::min<real>(std::numbers::pi_v<real> / 2, 3 / omega_max);
  const long panels = static_cast<long>(std::ceil(T / panel));
  if (panels > opts.max_intervals)
    throw QuadratureError("ef_via_integral: tolerance " + std::to_string(tol) + " needs more than " +
                          std::to_string(opts.max_intervals) + " intervals");
  T = panels * panel;
  tail = tail_of(waves, p, T);

  Integrand f{p, c};
  std::priority_queue<Piece> open;
  std::vector<Piece> closed;
  real total_err = 0;
  for (long j = 0; j < panels; ++j) {
    Piece pc = kronrod15(f, j * panel, (j + 1) * panel);
    total_err += pc.err;
    open.push(pc);
  }
  long count = panels;
  const real budget = eps / 2;
  while (total_err > budget && !open.empty()) {
    Piece worst = open.top();
    open.pop();
    real mid = (worst.a + worst.b) / 2;
    if (worst.b - worst.a < opts.min_width * std::max<real>(1, worst.a)) {
      closed.push_back(worst);
      continue;
    }
    Piece left = kronrod15(f, worst.a, mid), right = kronrod15(f, mid, worst.b);
    total_err += left.err + right.err - worst.err;
    open.push(left);
    open.push(right);
    if (++count > opts.max_intervals)
      throw QuadratureError("ef_via_integral: subdivision limit reached before tolerance " + std::to_string(tol));
  }
  if (total_err > budget)
    throw QuadratureError("ef_via_integral: tolerance " + std::to_string(tol) + " unreachable at working precision");

  // Neumaier summation
  real sum = 0, comp = 0;
  auto add = [&](real v) {
    real t = sum + v;
    if (std::abs(sum) >= std::abs(v)) comp += (sum - t) + v;
    else comp += (v - t) + sum;
    sum = t;
  };
  while (!open.empty()) {
    add(open.top().value);
    open.pop();
  }
  for (const auto& pc : closed) add(pc.value);
  add(tail.value);
  return static_cast<double>(to_A * (sum + comp));
}

}  // namespace eufro
