#include "eufro/apportion.hpp"

#include <algorithm>
#include <numeric>

#include "eufro/detail/fan_out.hpp"
#include "eufro/ef_core.hpp"
#include "eufro/uniform_sum.hpp"

namespace eufro {

std::string to_string(ApportionMethod m) {
  switch (m) {
    case ApportionMethod::divisor: return "divisor";
    case ApportionMethod::hare: return "hare";
    case ApportionMethod::droop: return "droop";
  }
  return "?";
}

namespace {

Rational validated_total(const std::vector<Rational>& votes) {
  if (votes.empty()) throw std::invalid_argument("apportion: no parties");
  Rational total(0);
  for (const auto& v : votes) {
    if (v <= 0) throw std::invalid_argument("apportion: votes must be positive");
    total += v;
  }
  return total;
}

std::string party_list(const std::vector<std::size_t>& parties) {
  std::string s;
  for (auto p : parties) s += (s.empty() ? "" : ", ") + std::to_string(p + 1);
  return s;
}

// Order of remainders, largest first; ties keep party order.
std::vector<std::size_t> by_remainder(const std::vector<Rational>& r) {
  std::vector<std::size_t> idx(r.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return r[a] > r[b]; });
  return idx;
}

void check_cut(const std::vector<Rational>& r, const std::vector<std::size_t>& order, std::size_t cut,
               const char* method) {
  if (cut == 0 || cut >= r.size()) return;
  const Rational& at = r[order[cut - 1]];
  if (at != r[order[cut]]) return;
  std::vector<std::size_t> tied;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] == at) tied.push_back(i);
  throw TieError(std::string(method) + ": equal remainders at the last seat between parties " + party_list(tied),
                 tied);
}

}  // namespace

ApportionmentOutcome apportion_divisor(const std::vector<Rational>& votes, long N, const Rational& rho) {
  validated_total(votes);
  if (N < 0) throw std::invalid_argument("apportion_divisor: house size must be nonnegative");
  if (rho < 0 || rho > 1) throw std::domain_error("apportion_divisor: rho must lie in [0,1]");
  const std::size_t n = votes.size();
  if (rho == 0 && static_cast<std::size_t>(N) < n)
    throw std::invalid_argument("apportion_divisor: with rho = 0 every party gets a seat; house too small");

  // Party i holds at least s seats iff D <= v_i / (s - 1 + rho).
  struct Threshold {
    bool infinite;
    Rational value;
    std::size_t party;
  };
  std::vector<Threshold> th;
  th.reserve(n * (N + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (long s = 1; s <= N + 1; ++s) {
      Rational den = s - 1 + rho;
      if (den == 0) th.push_back({true, Rational(0), i});
      else th.push_back({false, votes[i] / den, i});
    }
  }
  auto greater = [](const Threshold& a, const Threshold& b) {
    if (a.infinite != b.infinite) return a.infinite;
    if (a.infinite) return a.party < b.party;
    if (a.value != b.value) return a.value > b.value;
    return a.party < b.party;
  };
  std::sort(th.begin(), th.end(), greater);

  const Threshold& below = th[N];  // (N+1)-th largest, always finite here
  Rational D;
  if (N == 0) {
    D = below.value * 2;
  } else {
    const Threshold& at = th[N - 1];
    if (!at.infinite && at.value == below.value) {
      std::vector<std::size_t> tied;
      for (const auto& t : th)
        if (!t.infinite && t.value == at.value) tied.push_back(t.party);
      std::sort(tied.begin(), tied.end());
      tied.erase(std::unique(tied.begin(), tied.end()), tied.end());
      throw TieError("divisor method: equal quotients compete for the last seat between parties " +
                         party_list(tied),
                     tied);
    }
    D = at.infinite ? Rational(below.value * 2) : Rational((at.value + below.value) / 2);
  }

  ApportionmentOutcome out;
  out.method = ApportionMethod::divisor;
  out.rho = rho;
  out.divisor_or_quota = D;
  out.seats.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) out.seats[i] = to_long(rho_round(Rational(votes[i] / D), rho));
  return out;
}

ApportionmentOutcome apportion_hare(const std::vector<Rational>& votes, long N) {
  Rational V = validated_total(votes);
  if (N < 1) throw std::invalid_argument("apportion_hare: house size must be at least 1");
  const std::size_t n = votes.size();
  std::vector<long> seats(n);
  std::vector<Rational> rem(n);
  long assigned = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rational q = N * votes[i] / V;
    seats[i] = to_long(floor_int(q));
    rem[i] = q - seats[i];
    assigned += seats[i];
  }
  std::size_t extra = static_cast<std::size_t>(N - assigned);
  auto order = by_remainder(rem);
  check_cut(rem, order, extra, "Hare method");
  for (std::size_t j = 0; j < extra; ++j) ++seats[order[j]];

  ApportionmentOutcome out;
  out.method = ApportionMethod::hare;
  out.seats = std::move(seats);
  out.divisor_or_quota = V / N;
  return out;
}

ApportionmentOutcome apportion_droop(const std::vector<Rational>& votes, long N) {
  Rational V = validated_total(votes);
  if (N < 1) throw std::invalid_argument("apportion_droop: house size must be at least 1");
  const long n = static_cast<long>(votes.size());
  std::vector<long> base(n);
  std::vector<Rational> rem(n);
  long assigned = 0;
  for (long i = 0; i < n; ++i) {
    Rational q = (N + 1) * votes[i] / V;
    base[i] = to_long(floor_int(q));
    rem[i] = q - base[i];
    assigned += base[i];
  }
  // round_rho(Q) = floor(Q) - j0 + [{Q} >= sigma] for rho = j0 + sigma, sigma in (0,1].
  long d = N - assigned;
  long j0 = d >= 0 ? 0 : (-d + n - 1) / n;
  long c = d + n * j0;
  auto order = by_remainder(rem);
  check_cut(rem, order, static_cast<std::size_t>(c), "Droop method");
  Rational sigma = c == 0 ? Rational(1) : rem[order[c - 1]];
  Rational rho = j0 + sigma;

  ApportionmentOutcome out;
  out.method = ApportionMethod::droop;
  out.rho = rho;
  out.divisor_or_quota = V / (N + 1);
  out.seats.resize(n);
  for (long i = 0; i < n; ++i) out.seats[i] = to_long(rho_round(Rational((N + 1) * votes[i] / V), rho));
  return out;
}

std::map<std::string, Rational> default_divisor_aliases() {
  return {{"dhondt", Rational(0)},
          {"jefferson", Rational(0)},
          {"sainte-lague", make_rational(1, 2)},
          {"webster", make_rational(1, 2)}};
}

Rational hare_bias_density(int n, const Rational& x) {
  if (n < 3) throw std::invalid_argument("hare_bias_density: n must be at least 3");
  if (x <= -1 || x >= 1) return Rational(0);
  Rational nx = n * x;
  Rational by_cdf = irwin_hall_cdf(n - 2, Rational(nx + n - 1)) - irwin_hall_cdf(n - 2, Rational(nx - 1));
  long fl = to_long(floor_int(nx));
  auto row = ef_row<Rational>(n - 2, frac(nx)).values;
  Rational by_ef(0);
  for (long j = 0; j <= n - 1; ++j) {
    long k = fl + j;
    if (k >= 0 && k <= n - 2) by_ef += row[k];
  }
  by_ef /= Rational(factorial(n - 2));
  if (by_cdf != by_ef) throw std::logic_error("hare_bias_density: the two formulas disagree");
  return by_cdf;
}

namespace {

struct SeatDraw {
  int n;
  QuotaMethod method;
  long N;
  long q1_floor;  // floor of party 1's quota, exact
  double r1;      // fractional part of party 1's quota, exact value rounded once
  long base_floor;  // floor(N p1)
  double rest;    // 1 - p1

  long operator()(RngStream& r) const {
    auto x = sample_simplex(n - 1, r);
    const double mult = method == QuotaMethod::hare ? static_cast<double>(N) : static_cast<double>(N + 1);
    long assigned = q1_floor;
    long above = 0;
    for (double xi : x) {
      double q = mult * rest * xi;
      double fl = std::floor(q);
      assigned += static_cast<long>(fl);
      if (q - fl > r1) ++above;
    }
    long d = N - assigned;
    long seat;
    if (method == QuotaMethod::hare) {
      seat = q1_floor + (above < d ? 1 : 0);
    } else {
      long j0 = d >= 0 ? 0 : (-d + n - 1) / n;
      long c = d + n * j0;
      seat = q1_floor - j0 + (above < c ? 1 : 0);
    }
    return seat - base_floor;
  }
};

std::vector<SeatBiasRow> seat_bias_rows(int n, const Rational& p1, QuotaMethod method, long N,
                                        const EmpiricalPmf& e) {
  Rational shift = frac(Rational(N * p1));
  Rational offset = method == QuotaMethod::hare ? Rational(0) : Rational(make_rational(1, n) - p1);
  std::vector<SeatBiasRow> rows;
  for (long k = -2; k <= 3; ++k) {
    Rational theory = hare_bias_density(n, Rational(k - shift + offset));
    double emp = e.probability(k);
    if (theory == 0 && emp == 0) continue;
    rows.push_back({N, k, shift, emp, theory.get_d(), e.std_error(k)});
  }
  return rows;
}

SeatDraw make_draw(int n, const Rational& p1, QuotaMethod method, long N) {
  if (n < 3) throw std::invalid_argument("simulate_seat_bias: n must be at least 3");
  if (p1 <= 0 || p1 >= 1) throw std::domain_error("simulate_seat_bias: p1 must lie in (0,1)");
  if (N < 1) throw std::invalid_argument("simulate_seat_bias: house sizes must be positive");
  Rational q1 = (method == QuotaMethod::hare ? N : N + 1) * p1;
  return SeatDraw{n,
                  method,
                  N,
                  to_long(floor_int(q1)),
                  frac(q1).get_d(),
                  to_long(floor_int(Rational(N * p1))),
                  Rational(1 - p1).get_d()};
}

}  // namespace

std::vector<SeatBiasRow> simulate_seat_bias(int n, const Rational& p1, QuotaMethod method,
                                            const std::vector<long>& N_list, std::uint64_t samples,
                                            RngStream& rng) {
  std::vector<SeatBiasRow> out;
  for (long N : N_list) {
    auto e = detail::run_stream(samples, rng, make_draw(n, p1, method, N));
    auto rows = seat_bias_rows(n, p1, method, N, e);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

std::vector<SeatBiasRow> simulate_seat_bias(int n, const Rational& p1, QuotaMethod method,
                                            const std::vector<long>& N_list, std::uint64_t samples,
                                            const SimulationOptions& opts) {
  std::vector<SeatBiasRow> out;
  for (std::size_t i = 0; i < N_list.size(); ++i) {
    long N = N_list[i];
    SimulationOptions o = opts;
    o.seed = opts.seed + 0x9e3779b97f4a7c15ULL * i;
    auto e = detail::fan_out(samples, o, make_draw(n, p1, method, N));
    auto rows = seat_bias_rows(n, p1, method, N, e);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

}  // namespace eufro
