#include <doctest.h>

#include <cmath>
#include <random>

#include "eufro/ef_core.hpp"
#include "eufro/spline_kit.hpp"
#include "eufro/uniform_sum.hpp"
#include "oracles.hpp"

using namespace eufro;

namespace {

Rational R(long p, long q = 1) { return make_rational(p, q); }

}  // namespace

TEST_CASE("B-spline evaluation") {
  CHECK(bspline_eval<Rational>(2, R(1)) == 1);
  CHECK(bspline_eval<Rational>(4, R(2)) == R(2, 3));
  CHECK(bspline_eval<Rational>(3, R(-1)) == 0);
  CHECK(bspline_eval<double>(4, 2.0) == doctest::Approx(2.0 / 3).epsilon(1e-14));
}

TEST_CASE("exponential spline frozen values") {
  for (double x : {0.0, 0.25, 0.5, 0.9}) {
    for (double t : {-2.0, 0.5, 3.0}) {
      double expected = x + (1 - x) / t;
      CHECK(exp_spline<double>(1, x, t, ExpSplineMode::direct_sum) == doctest::Approx(expected).epsilon(1e-14));
      CHECK(exp_spline<double>(1, x, t, ExpSplineMode::ef_formula) == doctest::Approx(expected).epsilon(1e-14));
    }
  }
  CHECK(exp_spline<Rational>(2, R(1, 2), R(1), ExpSplineMode::direct_sum) == 1);
  CHECK(exp_spline<Rational>(2, R(1, 2), R(1), ExpSplineMode::ef_formula) == 1);
  CHECK_THROWS_AS(exp_spline<double>(2, 0.5, 0.0, ExpSplineMode::direct_sum), std::domain_error);
}

TEST_CASE("exponential spline modes agree exactly in rational arithmetic") {
  std::mt19937_64 gen(51);
  for (int i = 0; i < 200; ++i) {
    int n = 1 + i % 8;
    Rational x = oracle::random_rational(gen, -3, n + 3, 30);
    Rational t = oracle::random_rational(gen, -5, 5, 7);
    if (t == 0) continue;
    CHECK(exp_spline<Rational>(n, x, t, ExpSplineMode::direct_sum) ==
          exp_spline<Rational>(n, x, t, ExpSplineMode::ef_formula));
    CHECK(exp_spline<Rational>(n, Rational(x + 1), t, ExpSplineMode::direct_sum) ==
          t * exp_spline<Rational>(n, x, t, ExpSplineMode::direct_sum));
  }
}

TEST_CASE("exponential spline modes agree in binary64") {
  std::mt19937_64 gen(52);
  std::uniform_real_distribution<double> T(0.1, 10), unit(0, 1);
  for (int i = 0; i < 1000; ++i) {
    int n = 1 + i % 10;
    double x = -3 + (n + 6) * unit(gen);
    double t = T(gen) * (unit(gen) < 0.5 ? -1 : 1);
    double a = exp_spline<double>(n, x, t, ExpSplineMode::direct_sum);
    double b = exp_spline<double>(n, x, t, ExpSplineMode::ef_formula);
    REQUIRE(std::abs(a - b) <= 1e-10 * std::max(std::abs(a), 1e-300));
    double c = exp_spline<double>(n, x + 1, t, ExpSplineMode::ef_formula);
    REQUIRE(std::abs(c - t * b) <= 1e-12 * std::abs(t * b));
  }
}

TEST_CASE("partition of unity") {
  std::mt19937_64 gen(53);
  for (int n = 1; n <= 12; ++n)
    for (int i = 0; i < 20; ++i) {
      Rational x = oracle::random_rational(gen, -5, 5, 50);
      Rational s(0);
      for (long k = -30; k <= 30; ++k) s += bspline_eval<Rational>(n + 1, Rational(x - k));
      CHECK(s == 1);
    }
}

TEST_CASE("roots of Euler-Frobenius polynomials") {
  auto r2 = ef_roots(2, R(1, 2), 1e-12).roots;
  REQUIRE(r2.size() == 2);
  CHECK(r2[0] == doctest::Approx(-3 + 2 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(r2[1] == doctest::Approx(-3 - 2 * std::sqrt(2.0)).epsilon(1e-12));
  auto r1 = ef_roots(1, R(1, 2)).roots;
  REQUIRE(r1.size() == 1);
  CHECK(r1[0] == doctest::Approx(-1.0).epsilon(1e-15));
  for (int n = 1; n <= 10; ++n) CHECK(ef_roots(n, R(1)).roots.size() == static_cast<std::size_t>(n - 1));
  CHECK_THROWS_AS(ef_roots(3, R(0)), std::domain_error);
  // Eulerian polynomial at rho = 1, n = 3: 1 + 4x + x^2.
  auto e3 = ef_roots(3, R(1)).roots;
  CHECK(e3[0] == doctest::Approx(-2 + std::sqrt(3.0)).epsilon(1e-13));
}

TEST_CASE("roots are simple, negative, interlaced and small residual") {
  for (const auto& rho : {R(1, 7), R(1, 2), R(2, 3), R(1)}) {
    std::vector<double> prev;
    for (int n = 1; n <= 14; ++n) {
      auto roots = ef_roots(n, rho).roots;
      std::size_t expected = rho == 1 ? n - 1 : n;
      REQUIRE(roots.size() == expected);
      for (std::size_t i = 0; i < roots.size(); ++i) {
        CHECK(roots[i] < 0);
        if (i > 0) CHECK(roots[i] < roots[i - 1]);
      }
      // interlacing: each previous root sits strictly between consecutive new roots
      for (std::size_t i = 0; i < prev.size(); ++i) {
        CHECK(prev[i] < roots[i]);
        if (i + 1 < roots.size()) CHECK(prev[i] > roots[i + 1]);
      }
      auto p = ef_polynomial(n, rho);
      long double scale = 0;
      for (const auto& c : p.coefficients()) scale = std::max(scale, std::fabs(static_cast<long double>(c.get_d())));
      for (double r : roots) {
        // residual relative to the size of the terms at r
        long double acc = 0, mag = 0;
        for (std::size_t i = p.coefficients().size(); i-- > 0;) {
          acc = acc * r + p.coefficients()[i].get_d();
          mag = mag * std::fabs(r) + std::fabs(p.coefficients()[i].get_d());
        }
        CHECK(std::fabs(acc) < 1e-10 * mag);
      }
      prev = roots;
    }
  }
}

TEST_CASE("Bernoulli factors reproduce the law") {
  auto f1 = bernoulli_factors(1, R(1, 2));
  REQUIRE(f1.probs.size() == 1);
  CHECK(f1.probs[0] == doctest::Approx(0.5).epsilon(1e-15));
  auto f2 = bernoulli_factors(2, R(1, 2));
  CHECK(f2.probs[0] == doctest::Approx(1 / (1 + (3 - 2 * std::sqrt(2.0)))).epsilon(1e-12));
  CHECK(f2.probs[1] == doctest::Approx(1 / (1 + (3 + 2 * std::sqrt(2.0)))).epsilon(1e-12));
  auto pmf2 = convolve_bernoulli(f2);
  CHECK(pmf2[0] == doctest::Approx(1.0 / 8).epsilon(1e-12));
  CHECK(pmf2[1] == doctest::Approx(3.0 / 4).epsilon(1e-12));
  CHECK(pmf2[2] == doctest::Approx(1.0 / 8).epsilon(1e-12));

  for (const auto& rho : {R(1, 5), R(1, 2), R(9, 10), R(1)}) {
    for (int n = 1; n <= 12; ++n) {
      auto f = bernoulli_factors(n, rho);
      double sum = 0;
      for (double p : f.probs) {
        CHECK(p > 0);
        CHECK(p <= 1);
        sum += p;
      }
      CHECK(std::abs(sum - Rational(make_rational(n + 1, 2) - rho).get_d()) < 1e-9);
      auto pmf = convolve_bernoulli(f);
      auto exact = ef_distribution(n, rho).pmf;
      for (std::size_t k = 0; k < pmf.size(); ++k)
        CHECK(std::abs(pmf[k] - exact.probability(static_cast<long>(k)).get_d()) < 1e-9);
    }
  }
}

TEST_CASE("cardinal interpolation") {
  CHECK_FALSE(cardinal_solvable(4, R(0), 6).solvable);
  CHECK_FALSE(cardinal_solvable(2, R(1), 4).solvable);
  CHECK(cardinal_solvable(4, R(0), 7).solvable);
  CHECK_FALSE(cardinal_solvable(3, R(1, 2), 10).solvable);
  CHECK(cardinal_solvable(3, R(1, 4), 10).solvable);
  for (int n = 1; n <= 8; ++n)
    for (int N = 1; N <= 12; ++N)
      for (const auto& lam : {R(0), R(1, 4), R(1, 2), R(3, 4), R(1)}) {
        CardinalSolvability c;
        REQUIRE_NOTHROW(c = cardinal_solvable(n, lam, N));
        CHECK(c.by_classification == c.by_evaluation);
        CHECK(c.solvable == c.by_classification);
        CHECK(!c.reason.empty());
        CHECK(ef_vanishes_on_roots_of_unity(n, Rational(1 - lam), N) == !c.solvable);
      }
}
