#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eufro/rational.hpp"
#include "eufro/rounding.hpp"

namespace eufro {

enum class ApportionMethod { divisor, hare, droop };

std::string to_string(ApportionMethod m);

struct ApportionmentOutcome {
  std::vector<long> seats;
  // Divisor D for divisor methods, the quota V/N (Hare) or V/(N+1) (Droop).
  Rational divisor_or_quota;
  ApportionMethod method = ApportionMethod::divisor;
  // Rounding parameter: as given (divisor) or as adjusted (Droop). Empty for Hare.
  std::optional<Rational> rho;
};

class TieError : public std::runtime_error {
 public:
  TieError(const std::string& what, std::vector<std::size_t> parties)
      : std::runtime_error(what), parties_(std::move(parties)) {}
  const std::vector<std::size_t>& parties() const { return parties_; }

 private:
  std::vector<std::size_t> parties_;
};

// seats_i = round_rho(v_i / D), D between the N-th and (N+1)-th largest jump threshold.
ApportionmentOutcome apportion_divisor(const std::vector<Rational>& votes, long N, const Rational& rho);
// Greatest remainders on the simple quota.
ApportionmentOutcome apportion_hare(const std::vector<Rational>& votes, long N);
// round_rho((N+1) v_i / V) with rho adjusted so the seats add up to N.
ApportionmentOutcome apportion_droop(const std::vector<Rational>& votes, long N);

// Named divisor methods. Default: d'Hondt/Jefferson -> 0, Sainte-Lague/Webster -> 1/2.
std::map<std::string, Rational> default_divisor_aliases();

// Limit density of the Hare seat excess s_1 - N p_1; zero outside (-1, 1).
// Evaluated by two independent formulas that must agree.
Rational hare_bias_density(int n, const Rational& x);

enum class QuotaMethod { hare, droop };

struct SeatBiasRow {
  long N = 0;
  long k = 0;           // s_1 - floor(N p_1)
  Rational shift;       // {N p_1}: the excess is k - shift
  double empirical = 0;
  double theoretical = 0;
  double std_error = 0;
};

// Party 1 has share p1; the other n-1 shares are (1-p1) times a uniform simplex point.
std::vector<SeatBiasRow> simulate_seat_bias(int n, const Rational& p1, QuotaMethod method,
                                            const std::vector<long>& N_list, std::uint64_t samples,
                                            RngStream& rng);
std::vector<SeatBiasRow> simulate_seat_bias(int n, const Rational& p1, QuotaMethod method,
                                            const std::vector<long>& N_list, std::uint64_t samples,
                                            const SimulationOptions& opts);

}  // namespace eufro
