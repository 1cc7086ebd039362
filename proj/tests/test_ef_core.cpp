#include <doctest.h>

#include <random>
#include <thread>

#include "eufro/ef_core.hpp"
#include "oracles.hpp"

using namespace eufro;
using oracle::Poly;

namespace {

Rational R(long p, long q = 1) { return make_rational(p, q); }

std::vector<Rational> sample_rhos(std::mt19937_64& gen, int count) {
  std::vector<Rational> out{R(0), R(1, 7), R(1, 2), R(6, 7), R(1)};
  for (int i = 0; i < count; ++i) out.push_back(oracle::random_rational(gen, -2, 3));
  return out;
}

}  // namespace

TEST_CASE("ef_number frozen values") {
  CHECK(ef_number(2, 1, R(1, 2)) == R(3, 2));
  CHECK(ef_number(4, 1, R(1)) == 11);
  CHECK(ef_number(3, 5, R(1, 3)) == 0);
  CHECK(ef_number(3, -1, R(1, 3)) == 0);
  CHECK(ef_number(3, 1, R(1, 2)) == R(23, 8));
  CHECK(ef_number(0, 0, R(5, 3)) == 1);
}

TEST_CASE("ef_number at rho = 1 counts permutations by descents") {
  for (int n = 1; n <= 8; ++n) {
    auto counts = oracle::eulerian_by_descents(n);
    for (int k = 0; k < n; ++k) CHECK(ef_number(n, k, R(1)) == counts[k]);
    CHECK(ef_number(n, n, R(1)) == 0);
  }
}

TEST_CASE("ef_number_poly frozen polynomials") {
  CHECK(ef_number_poly(1, 0) == RhoPoly{R(0), R(1)});
  CHECK(ef_number_poly(3, 2) == RhoPoly{R(4), R(0), R(-6), R(3)});
  CHECK(ef_number_poly(2, 2) == RhoPoly{R(1), R(-2), R(1)});
  CHECK(ef_number_poly(4, 7).is_zero());
  CHECK(to_string(ef_number_poly(3, 1), "rho") == "1+3rho+3rho^2-3rho^3");
  CHECK(to_string(RhoPoly{R(1, 2), R(-3, 4)}, "rho") == "1/2-(3/4)rho");
}

TEST_CASE("ef_number_poly agrees with pointwise values and has the expected leading term") {
  std::mt19937_64 gen(11);
  for (int n = 0; n <= 12; ++n) {
    auto row = ef_row_poly(n);
    for (int k = 0; k <= n; ++k) {
      CHECK(row[k].degree() <= n);
      Rational lead = row[k].coeff(n);
      Rational expected = Rational(binomial(n, k));
      if (k % 2) expected = -expected;
      CHECK(lead == expected);
      for (int t = 0; t < 3; ++t) {
        Rational rho = oracle::random_rational(gen, -1, 2);
        CHECK(row[k](rho) == ef_number(n, k, rho));
      }
    }
  }
}

TEST_CASE("ef_row frozen rows") {
  auto r5 = ef_row<Rational>(5, R(1)).values;
  CHECK(r5 == std::vector<Rational>{R(1), R(26), R(66), R(26), R(1), R(0)});
  auto z5 = ef_row<Rational>(5, R(0)).values;
  CHECK(z5 == std::vector<Rational>{R(0), R(1), R(26), R(66), R(26), R(1)});
  auto r0 = ef_row<Rational>(0, R(2, 7)).values;
  CHECK(r0 == std::vector<Rational>{R(1)});
  auto r4 = ef_row<Rational>(4, R(1, 2)).values;
  CHECK(r4 == std::vector<Rational>{R(1, 16), R(76, 16), R(230, 16), R(76, 16), R(1, 16)});
  auto d = ef_row<double>(4, 0.5).values;
  for (int k = 0; k <= 4; ++k) CHECK(d[k] == doctest::Approx(r4[k].get_d()).epsilon(1e-15));
}

TEST_CASE("ef_row table invariants") {
  std::mt19937_64 gen(5);
  for (int n = 0; n <= 30; ++n) {
    Rational rho = oracle::random_rational(gen, 0, 1);
    auto v = ef_row<Rational>(n, rho).values;
    CHECK(v.front() == pow(rho, n));
    CHECK(v.back() == pow(Rational(1 - rho), n));
    for (const auto& x : v) CHECK(x >= 0);
  }
}

TEST_CASE("ef_explicit frozen values and domain") {
  CHECK(ef_explicit(2, 1, R(1, 2)) == R(3, 2));
  CHECK(ef_explicit(6, 2, R(1)) == 302);
  CHECK(ef_explicit(3, 0, R(1, 4)) == R(1, 64));
  CHECK_THROWS_AS(ef_explicit(3, 1, R(3, 2)), std::domain_error);
  CHECK_THROWS_AS(ef_explicit(3, 1, R(-1, 2)), std::domain_error);
}

TEST_CASE("type B numbers") {
  CHECK(type_b(5, 2) == 1682);
  CHECK(type_b(6, 3) == 23548);
  CHECK(type_b(2, 1) == 6);
  CHECK(type_b(3, 9) == 0);
  for (int n = 0; n <= 30; ++n) {
    auto b = type_b_row(n);
    auto a = ef_row<Rational>(n, R(1, 2)).values;
    Rational scale = pow(R(2), n);
    for (int k = 0; k <= n; ++k) CHECK(Rational(b[k]) == scale * a[k]);
  }
}

TEST_CASE("Bernoulli numbers match an independent algorithm") {
  CHECK(bernoulli_number(0) == 1);
  CHECK(bernoulli_number(1) == R(-1, 2));
  CHECK(bernoulli_number(2) == R(1, 6));
  CHECK(bernoulli_number(3) == 0);
  CHECK(bernoulli_number(4) == R(-1, 30));
  CHECK(bernoulli_number(6) == R(1, 42));
  for (int m = 0; m <= 40; ++m) CHECK(bernoulli_number(m) == oracle::bernoulli(m));
}

TEST_CASE("Euler polynomials and numbers") {
  CHECK(euler_polynomial_value(1, R(3, 4)) == R(1, 4));
  CHECK(euler_polynomial_value(0, R(9, 5)) == 1);
  CHECK(euler_polynomial_value(2, R(1, 2)) == R(-1, 4));
  CHECK(euler_number(2) == -1);
  CHECK(euler_number(4) == 5);
  CHECK(euler_number(3) == 0);
  for (int n = 0; n <= 20; ++n) CHECK(Rational(euler_number(n)) == oracle::euler_secant(n));
}

TEST_CASE("tangent numbers two ways and against the tan series") {
  CHECK(tangent_number(1) == 1);
  CHECK(tangent_number(3) == 2);
  CHECK(tangent_number(5) == 16);
  CHECK(tangent_number(4) == 0);
  for (int n = 1; n <= 21; ++n) {
    CHECK(tangent_number(n) == tangent_number_from_bernoulli(n));
    CHECK(Rational(tangent_number(n)) == oracle::tangent(n));
  }
}

TEST_CASE("geometric moments") {
  CHECK(geometric_moment(2, R(1, 2)) == 3);
  CHECK(geometric_moment(3, R(1, 2)) == 13);
  CHECK(geometric_moment(1, R(1, 3)) == R(1, 2));
  CHECK_THROWS_AS(geometric_moment(2, R(1)), std::domain_error);
  CHECK_THROWS_AS(geometric_moment(2, R(0)), std::domain_error);
  // Ordered set partitions: sum_k k! S(n,k).
  for (int n = 1; n <= 12; ++n) {
    BigInt fubini = 0;
    for (int k = 1; k <= n; ++k) fubini += factorial(k) * oracle::stirling2(n, k);
    CHECK(geometric_moment(n, R(1, 2)) == Rational(fubini));
  }
  // Partial sums of sum_j j^n (1-p) p^j approach the closed form from below.
  Rational p = R(1, 3), partial(0), pj(1);
  for (int j = 0; j < 80; ++j, pj *= p) partial += pow(R(j), 3) * (1 - p) * pj;
  Rational gap = geometric_moment(3, p) - partial;
  CHECK(gap > 0);
  CHECK(gap < make_rational(1, 1000000000));
}

TEST_CASE("Benoumhani polynomials") {
  CHECK(benoumhani_poly(1, 2) == std::vector<Rational>{R(1), R(3), R(2)});
  CHECK(benoumhani_poly(2, 1) == std::vector<Rational>{R(1), R(2)});
  CHECK(benoumhani_poly(5, 0) == std::vector<Rational>{R(1)});
  // m = 1 gives k! S(n+1, k+1).
  for (int n = 0; n <= 10; ++n) {
    auto c = benoumhani_poly(1, n);
    for (int k = 0; k <= n; ++k) {
      Rational expected(factorial(k) * oracle::stirling2(n + 1, k + 1));
      CHECK((k < static_cast<int>(c.size()) ? c[k] : Rational(0)) == expected);
    }
  }
}

TEST_CASE("row sums equal n!") {
  std::mt19937_64 gen(1);
  for (int n = 0; n <= 60; ++n) {
    Rational rho = oracle::random_rational(gen, -3, 4);
    Rational s(0);
    for (const auto& v : ef_row<Rational>(n, rho).values) s += v;
    CHECK(s == Rational(factorial(n)));
  }
}

TEST_CASE("reflection, shift and alternating-sum equivalence") {
  std::mt19937_64 gen(2);
  auto rhos = sample_rhos(gen, 3);
  for (int n = 0; n <= 25; ++n) {
    for (const auto& rho : rhos) {
      auto a = ef_row<Rational>(n, rho).values;
      auto b = ef_row<Rational>(n, Rational(1 - rho)).values;
      for (int k = 0; k <= n; ++k) CHECK(a[n - k] == b[k]);
    }
    if (n >= 1) {
      auto z = ef_row<Rational>(n, R(0)).values;
      auto o = ef_row<Rational>(n, R(1)).values;
      for (int k = 0; k < n; ++k) CHECK(z[k + 1] == o[k]);
      for (const auto& rho : {R(0), R(1, 7), R(1, 2), R(6, 7), R(1)}) {
        auto row = ef_row<Rational>(n, rho).values;
        for (int k = 0; k <= n; ++k) CHECK(ef_explicit(n, k, rho) == row[k]);
      }
    }
  }
}

TEST_CASE("rho-derivative identity") {
  for (int n = 1; n <= 20; ++n) {
    auto row = ef_row_poly(n);
    auto prev = ef_row_poly(n - 1);
    for (int k = 0; k <= n; ++k) {
      RhoPoly lhs = row[k].derivative();
      RhoPoly a = k <= n - 1 ? prev[k] : RhoPoly{};
      RhoPoly b = k >= 1 ? prev[k - 1] : RhoPoly{};
      CHECK(lhs == (a - b) * static_cast<long>(n));
    }
  }
}

TEST_CASE("binomial expansion in rho") {
  std::mt19937_64 gen(3);
  Poly one_minus_x{R(1), R(-1)};
  for (int n = 0; n <= 15; ++n) {
    Rational rho = oracle::random_rational(gen, -1, 2);
    Poly rhs;
    Poly power{R(1)};
    Rational rho_i(1);
    for (int i = 0; i <= n; ++i) {
      rhs += ef_polynomial(n - i, R(0)) * power * Poly{Rational(Rational(binomial(n, i)) * rho_i)};
      power *= one_minus_x;
      rho_i *= rho;
    }
    CHECK(rhs == ef_polynomial(n, rho));
  }
}

TEST_CASE("generating function coefficients") {
  std::mt19937_64 gen(4);
  for (int trial = 0; trial < 6; ++trial) {
    Rational rho = oracle::random_rational(gen, -1, 2);
    Rational x = oracle::random_rational(gen, -3, 3);
    if (x == 1) continue;
    auto vals = ef_gf_values(10, rho, x);
    for (int n = 0; n <= 10; ++n) CHECK(vals[n] == ef_polynomial(n, rho)(x));
  }
  CHECK_THROWS_AS(ef_gf_values(3, R(1, 2), R(1)), std::domain_error);
}

TEST_CASE("polynomial reflection") {
  std::mt19937_64 gen(6);
  for (int n = 0; n <= 20; ++n) {
    Rational rho = oracle::random_rational(gen, -1, 2);
    CHECK(ef_polynomial(n, rho).reversed(n) == ef_polynomial(n, Rational(1 - rho)));
  }
}

TEST_CASE("Bernoulli cache is safe for concurrent readers") {
  std::vector<std::thread> pool;
  std::vector<Rational> got(8);
  for (int i = 0; i < 8; ++i) pool.emplace_back([&, i] { got[i] = bernoulli_number(30 + 2 * i); });
  for (auto& t : pool) t.join();
  for (int i = 0; i < 8; ++i) CHECK(got[i] == oracle::bernoulli(30 + 2 * i));
}
