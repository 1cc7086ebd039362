#include "eufro/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eufro/detail/fan_out.hpp"

namespace eufro {

long rho_round(double x, double rho) { return static_cast<long>(std::floor(x + 1 - rho)); }

BigInt rho_round(const Rational& x, const Rational& rho) { return floor_int(Rational(x + 1 - rho)); }

std::vector<double> sample_simplex(int n, RngStream& rng) {
  if (n < 2) throw std::invalid_argument("sample_simplex: n must be at least 2");
  std::vector<double> u(n + 1);
  u[0] = 0;
  u[n] = 1;
  for (int i = 1; i < n; ++i) u[i] = rng.uniform();
  std::sort(u.begin() + 1, u.end() - 1);
  std::vector<double> p(n);
  for (int i = 0; i < n; ++i) p[i] = u[i + 1] - u[i];
  return p;
}

double EmpiricalPmf::std_error(long k) const {
  if (samples == 0) return 0;
  double p = probability(k);
  return std::sqrt(p * (1 - p) / static_cast<double>(samples));
}

double EmpiricalPmf::mean_std_error() const {
  if (samples == 0) return 0;
  return std::sqrt(variance / static_cast<double>(samples));
}

EmpiricalPmf simulate_rounded_sum(int n, double rho, std::uint64_t samples, RngStream& rng) {
  if (n < 1) throw std::invalid_argument("simulate_rounded_sum: n must be at least 1");
  return detail::run_stream(samples, rng, [n, rho](RngStream& r) {
    double s = 0;
    for (int i = 0; i < n; ++i) s += r.uniform();
    return rho_round(s, rho);
  });
}

EmpiricalPmf simulate_rounded_sum(int n, double rho, std::uint64_t samples, const SimulationOptions& opts) {
  if (n < 1) throw std::invalid_argument("simulate_rounded_sum: n must be at least 1");
  return detail::fan_out(samples, opts, [n, rho](RngStream& r) {
    double s = 0;
    for (int i = 0; i < n; ++i) s += r.uniform();
    return rho_round(s, rho);
  });
}

namespace {

long symmetric_draw(int n, RngStream& r) {
  double s = 0;
  for (int i = 0; i < n; ++i) s += r.uniform() - 0.5;
  return rho_round(s, 0.5);
}

}  // namespace

EmpiricalPmf simulate_symmetric(int n, std::uint64_t samples, RngStream& rng) {
  if (n < 1) throw std::invalid_argument("simulate_symmetric: n must be at least 1");
  return detail::run_stream(samples, rng, [n](RngStream& r) { return symmetric_draw(n, r); });
}

EmpiricalPmf simulate_symmetric(int n, std::uint64_t samples, const SimulationOptions& opts) {
  if (n < 1) throw std::invalid_argument("simulate_symmetric: n must be at least 1");
  return detail::fan_out(samples, opts, [n](RngStream& r) { return symmetric_draw(n, r); });
}

IntPmf<Rational> discrepancy_exact_pmf(int n, const Rational& rho, const Rational& gamma) {
  if (n < 2) throw std::invalid_argument("discrepancy_exact_pmf: n must be at least 2");
  return ef_distribution(n - 1, Rational(n * rho - gamma)).pmf;
}

namespace {

void check(const DiscrepancyExperiment& e) {
  if (e.n < 2) throw std::invalid_argument("discrepancy experiment: n must be at least 2");
  if (e.N < 1) throw std::invalid_argument("discrepancy experiment: N must be at least 1");
  if (e.samples < 1) throw std::invalid_argument("discrepancy experiment: samples must be at least 1");
}

auto discrepancy_draw(const DiscrepancyExperiment& e) {
  return [n = e.n, rho = e.rho, scale = static_cast<double>(e.N) + e.gamma, N = e.N](RngStream& r) {
    auto p = sample_simplex(n, r);
    long total = 0;
    for (double pi : p) total += rho_round(scale * pi, rho);
    return total - N;
  };
}

}  // namespace

EmpiricalPmf simulate_discrepancy(const DiscrepancyExperiment& exp, RngStream& rng) {
  check(exp);
  return detail::run_stream(exp.samples, rng, discrepancy_draw(exp));
}

EmpiricalPmf simulate_discrepancy(const DiscrepancyExperiment& exp, unsigned streams) {
  check(exp);
  return detail::fan_out(exp.samples, SimulationOptions{exp.seed, streams}, discrepancy_draw(exp));
}

double total_variation(const EmpiricalPmf& empirical, const IntPmf<Rational>& exact) {
  long lo = std::min(empirical.pmf.min_support(), exact.min_support());
  long hi = std::max(empirical.pmf.max_support(), exact.max_support());
  if (empirical.pmf.weights.empty()) {
    lo = exact.min_support();
    hi = exact.max_support();
  }
  double s = 0;
  for (long k = lo; k <= hi; ++k) s += std::abs(empirical.probability(k) - exact.probability(k).get_d());
  return s / 2;
}

}  // namespace eufro
