#include "eufro/selftest.hpp"

#include <functional>

#include "eufro/asymptotics.hpp"
#include "eufro/ef_core.hpp"
#include "eufro/rounding.hpp"
#include "eufro/uniform_sum.hpp"

namespace eufro {

namespace {

const std::vector<Rational>& sample_rhos() {
  static const std::vector<Rational> r{Rational(0), make_rational(1, 7), make_rational(1, 2), make_rational(6, 7), Rational(1)};
  return r;
}

std::string where(int n, long k, const Rational& rho) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " rho=" + rho.get_str();
}

}  // namespace

std::vector<CheckResult> run_selftest(bool quick, std::uint64_t seed) {
  const int nmax = quick ? 10 : 25;
  const int ndist = quick ? 10 : 15;
  std::vector<CheckResult> out;
  auto run = [&](const std::string& name, const std::function<std::string()>& body) {
    CheckResult r{name, false, ""};
    try {
      r.detail = body();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(r);
  };

  run("row sums equal n!", [&]() -> std::string {
    for (int n = 0; n <= nmax; ++n)
      for (const auto& rho : sample_rhos()) {
        Rational s(0);
        for (const auto& v : ef_row<Rational>(n, rho).values) s += v;
        if (s != Rational(factorial(n))) return where(n, -1, rho);
      }
    return "";
  });
  run("reflection A(n,n-k,rho) = A(n,k,1-rho)", [&]() -> std::string {
    for (int n = 0; n <= nmax; ++n)
      for (const auto& rho : sample_rhos()) {
        auto a = ef_row<Rational>(n, rho).values, b = ef_row<Rational>(n, Rational(1 - rho)).values;
        for (int k = 0; k <= n; ++k)
          if (a[n - k] != b[k]) return where(n, k, rho);
      }
    return "";
  });
  run("shift A(n,k+1,0) = A(n,k,1)", [&]() -> std::string {
    for (int n = 1; n <= nmax; ++n) {
      auto a = ef_row<Rational>(n, Rational(0)).values, b = ef_row<Rational>(n, Rational(1)).values;
      for (int k = 0; k < n; ++k)
        if (a[k + 1] != b[k]) return where(n, k, Rational(0));
    }
    return "";
  });
  run("alternating sum equals recursion", [&]() -> std::string {
    for (int n = 1; n <= nmax; ++n)
      for (const auto& rho : sample_rhos()) {
        auto a = ef_row<Rational>(n, rho).values;
        for (int k = 0; k <= n; ++k)
          if (ef_explicit(n, k, rho) != a[k]) return where(n, k, rho);
      }
    return "";
  });
  run("rho-derivative identity", [&]() -> std::string {
    auto prev = ef_row_poly(0);
    for (int n = 1; n <= nmax; ++n) {
      auto row = ef_row_poly(n);
      for (int k = 0; k <= n; ++k) {
        RhoPoly rhs = (k < n ? prev[k] : RhoPoly{}) - (k > 0 ? prev[k - 1] : RhoPoly{});
        if (row[k].derivative() != rhs * n) return where(n, k, Rational(0));
      }
      prev = std::move(row);
    }
    return "";
  });
  run("type B numbers equal 2^n A(n,k,1/2)", [&]() -> std::string {
    for (int n = 0; n <= nmax; ++n) {
      auto b = type_b_row(n);
      auto a = ef_row<Rational>(n, make_rational(1, 2)).values;
      for (int k = 0; k <= n; ++k)
        if (Rational(b[k]) != a[k] * pow(Rational(2), n)) return where(n, k, make_rational(1, 2));
    }
    return "";
  });
  run("polynomial reflection x^n P(1/x)", [&]() -> std::string {
    for (int n = 0; n <= nmax; ++n)
      for (const auto& rho : sample_rhos())
        if (ef_polynomial(n, rho).reversed(n) != ef_polynomial(n, Rational(1 - rho))) return where(n, -1, rho);
    return "";
  });
  run("generating function coefficients", [&]() -> std::string {
    const Rational xs[] = {make_rational(-3, 4), make_rational(2, 5), make_rational(7, 3)};
    for (const auto& rho : sample_rhos())
      for (const auto& x : xs) {
        auto g = ef_gf_values(nmax, rho, x);
        for (int n = 0; n <= nmax; ++n)
          if (g[n] != ef_polynomial(n, rho)(x)) return where(n, -1, rho) + " x=" + x.get_str();
      }
    return "";
  });
  run("two density formulas agree", [&]() -> std::string {
    for (int n = 2; n <= ndist; ++n)
      for (int num = -3; num <= 8 * (n + 1); ++num) {
        Rational x(num, 8);
        x.canonicalize();
        if (pdf_via_ef(n, x) != irwin_hall_pdf(n, x)) return "n=" + std::to_string(n) + " x=" + x.get_str();
      }
    return "";
  });
  run("convolution and density recursions", [&]() -> std::string {
    for (int n = 2; n <= ndist; ++n)
      for (int num = 1; num < 7 * (n + 1); ++num) {
        Rational x(num, 7);
        x.canonicalize();
        Rational f1 = irwin_hall_pdf(n + 1, x);
        if (f1 != irwin_hall_cdf(n, x) - irwin_hall_cdf(n, Rational(x - 1)))
          return "convolution n=" + std::to_string(n) + " x=" + x.get_str();
        if (n * f1 != x * irwin_hall_pdf(n, x) + (n + 1 - x) * irwin_hall_pdf(n, Rational(x - 1)))
          return "density n=" + std::to_string(n) + " x=" + x.get_str();
      }
    return "";
  });
  run("moments of Z+rho match S_{n+1}", [&]() -> std::string {
    for (int n = 1; n <= (quick ? 8 : 12); ++n)
      for (const auto& rho : sample_rhos()) {
        auto d = ef_distribution(n, rho);
        for (int m = 1; m <= n; ++m) {
          Rational s(0);
          for (std::size_t i = 0; i < d.pmf.weights.size(); ++i)
            s += d.pmf.weights[i] * pow(Rational(d.pmf.offset + static_cast<long>(i) + rho), m);
          if (s != irwin_hall_moment(n + 1, m)) return where(n, m, rho);
        }
      }
    return "";
  });
  run("cumulants (n+1) B_m / m", [&]() -> std::string {
    for (int n = 2; n <= (quick ? 10 : 14); ++n)
      for (const auto& rho : {Rational(0), make_rational(1, 3), make_rational(1, 2)})
        for (int m = 2; m <= n; ++m)
          if (ef_cumulant(n, rho, m) != (n + 1) * bernoulli_number(m) / m) return where(n, m, rho);
    return "";
  });
  run("Euler and tangent numbers", [&]() -> std::string {
    const long euler[] = {1, -1, 5, -61, 1385};
    for (int i = 0; i < 5; ++i)
      if (euler_number(2 * i) != euler[i]) return "Euler E_" + std::to_string(2 * i);
    for (int n = 1; n <= 15; n += 2)
      if (tangent_number(n) != tangent_number_from_bernoulli(n)) return "tangent T_" + std::to_string(n);
    return "";
  });
  run("q_1 and q_2 polynomials", [&]() -> std::string {
    RhoPoly q1 = hermite_poly(4);
    q1.scale(make_rational(-1, 20));
    if (q_poly(1) != q1) return "q_1";
    RhoPoly q2{Rational(-195), Rational(0), Rational(-1620), Rational(0), Rational(2010),
               Rational(0),    Rational(-428), Rational(0), Rational(21)};
    q2.scale(make_rational(1, 16800));
    if (q_poly(2) != q2) return "q_2";
    return "";
  });
  run("rounded uniform sum law (seeded)", [&]() -> std::string {
    const std::uint64_t samples = quick ? 200000 : 1000000;
    RngStream rng(seed, 0);
    auto e = simulate_rounded_sum(5, 0.3, samples, rng);
    double tv = total_variation(e, ef_distribution(5, make_rational(3, 10)).pmf);
    if (tv >= 0.005) return "TV distance " + std::to_string(tv);
    return "";
  });
  return out;
}

}  // namespace eufro
