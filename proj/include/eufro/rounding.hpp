#pragma once

#include <cstdint>
#include <vector>

#include "eufro/rational.hpp"
#include "eufro/rng.hpp"
#include "eufro/uniform_sum.hpp"

namespace eufro {

// floor(x + 1 - rho): rho = 1 rounds down, rho = 0 rounds up, rho = 1/2 rounds half up.
long rho_round(double x, double rho);
BigInt rho_round(const Rational& x, const Rational& rho);

// Uniform point of the (n-1)-simplex from spacings of n-1 sorted uniforms.
std::vector<double> sample_simplex(int n, RngStream& rng);

struct EmpiricalPmf {
  IntPmf<double> pmf;
  std::vector<std::uint64_t> counts;
  std::uint64_t samples = 0;
  double mean = 0;
  double variance = 0;

  double probability(long k) const { return pmf.probability(k); }
  // Binomial standard error of the estimate at k.
  double std_error(long k) const;
  double mean_std_error() const;
};

// Worker fan-out: stream i of `streams` draws from RngStream(seed, i).
struct SimulationOptions {
  std::uint64_t seed = 1;
  unsigned streams = 1;
};

EmpiricalPmf simulate_rounded_sum(int n, double rho, std::uint64_t samples, RngStream& rng);
EmpiricalPmf simulate_rounded_sum(int n, double rho, std::uint64_t samples, const SimulationOptions& opts);

// Standard rounding of a sum of n uniforms on [-1/2, 1/2].
EmpiricalPmf simulate_symmetric(int n, std::uint64_t samples, RngStream& rng);
EmpiricalPmf simulate_symmetric(int n, std::uint64_t samples, const SimulationOptions& opts);

// Limit law Z_{n-1, n rho - gamma} of sum_i round_rho((N+gamma) p_i) - N.
IntPmf<Rational> discrepancy_exact_pmf(int n, const Rational& rho, const Rational& gamma);

struct DiscrepancyExperiment {
  int n = 3;
  double rho = 0.5;
  double gamma = 0;
  long N = 10000;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
};

EmpiricalPmf simulate_discrepancy(const DiscrepancyExperiment& exp, RngStream& rng);
EmpiricalPmf simulate_discrepancy(const DiscrepancyExperiment& exp, unsigned streams = 1);

double total_variation(const EmpiricalPmf& empirical, const IntPmf<Rational>& exact);

}  // namespace eufro
