#include <doctest.h>

#include <thread>
#include <vector>

#include "oracles.hpp"
#include "stirsum/errors.hpp"
#include "stirsum/exactnum.hpp"

using namespace stirsum;
using namespace stirsum::exactnum;

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("stirling_first examples") {
  CHECK(stirling_first(0, 0) == 1);
  for (long k = 0; k <= 30; ++k) CHECK(stirling_first(k, k) == 1);
  CHECK(stirling_first(3, 1) == 2);
  CHECK(stirling_first(3, 2) == -3);
  CHECK(stirling_first(5, 0) == 0);
  CHECK_THROWS_AS(stirling_first(2, 3), DomainError);
  CHECK_THROWS_AS(stirling_first(-1, 0), DomainError);
  CHECK_THROWS_AS(stirling_first(3, -1), DomainError);
}

TEST_CASE("stirling rows match falling factorial expansion") {
  for (long k = 0; k <= 60; ++k) {
    const auto poly = oracle::falling_factorial_poly(k);
    for (long l = 0; l <= k; ++l) CHECK(stirling_first(k, l) == poly[static_cast<size_t>(l)]);
  }
}

TEST_CASE("rising factorial identity") {
  // (x)_k = (-1)^k sum (-1)^l S_k(l) x^l
  for (long k = 0; k <= 60; ++k) {
    const auto poly = oracle::rising_factorial_poly(k);
    for (long l = 0; l <= k; ++l) {
      BigInt rhs = stirling_first(k, l);
      if ((k + l) % 2 != 0) rhs = -rhs;
      CHECK(rhs == poly[static_cast<size_t>(l)]);
    }
  }
}

TEST_CASE("stirling row sums and recurrence") {
  for (long k = 0; k <= 100; ++k) {
    const auto& row = stirling_row(k);
    BigInt abs_sum = 0;
    BigInt sum = 0;
    for (const auto& s : row) {
      abs_sum += abs(s);
      sum += s;
    }
    CHECK(abs_sum == factorial(k));
    if (k >= 2) CHECK(sum == 0);
  }
  for (long k = 0; k < 80; ++k)
    for (long l = 1; l <= k + 1; ++l)
      CHECK(stirling_first(k + 1, l) == stirling_first(k, l - 1) - BigInt(k) * (l <= k ? stirling_first(k, l) : BigInt(0)));
}

TEST_CASE("bernoulli examples") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK_THROWS_AS(bernoulli(-1), DomainError);
}

TEST_CASE("bernoulli matches akiyama-tanigawa") {
  const auto table = oracle::bernoulli_table(80);
  for (long k = 0; k <= 80; ++k) CHECK(bernoulli(k) == table[static_cast<size_t>(k)]);
}

TEST_CASE("bernoulli odd vanishing, signs and von Staudt-Clausen") {
  for (long m = 1; m <= 30; ++m) {
    CHECK(bernoulli(2 * m + 1).is_zero());
    CHECK(bernoulli(2 * m).sign() == (m % 2 == 1 ? 1 : -1));
    BigInt prod = 1;
    for (long p = 2; p <= 2 * m + 1; ++p)
      if (is_prime(p) && (2 * m) % (p - 1) == 0) prod *= p;
    CHECK(bernoulli(2 * m).den() == prod);
  }
}

TEST_CASE("euler numbers") {
  CHECK(euler_number(0) == 1);
  CHECK(euler_number(1) == 0);
  CHECK(euler_number(4) == 5);
  const auto table = oracle::euler_table(60);
  for (long k = 0; k <= 60; ++k) CHECK(euler_number(k) == table[static_cast<size_t>(k)]);
  for (long m = 0; m <= 30; ++m) {
    CHECK(euler_number(2 * m + 1) == 0);
    CHECK(sgn(euler_number(2 * m)) == (m % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("tangent numbers") {
  CHECK(tangent_number(1) == Rational(1));
  CHECK(tangent_number(2) == Rational(2));
  CHECK(tangent_number(3) == Rational(16));
  for (long k = 1; k <= 30; ++k) {
    CHECK(tangent_number(k).is_integer());
    CHECK(tangent_number(k).sign() > 0);
  }
  CHECK_THROWS_AS(tangent_number(0), DomainError);
}

TEST_CASE("gregory numbers") {
  CHECK(gregory_number(0) == Rational(1));
  CHECK(gregory_number(1) == Rational(1, 2));
  CHECK(gregory_number(2) == Rational(-1, 12));
  CHECK(gregory_number(3) == Rational(1, 24));
  for (long k = 1; k <= 30; ++k) CHECK(gregory_number(k).sign() == (k % 2 == 1 ? 1 : -1));
  for (long k = 2; k < 30; ++k) CHECK(gregory_number(k + 1).abs() < gregory_number(k).abs());
}

TEST_CASE("stirling series numbers a_k") {
  CHECK(stirling_a(1) == Rational(1, 12));
  CHECK(stirling_a(3) == Rational(59, 360));
  CHECK(stirling_a(4) == Rational(29, 60));
  CHECK_THROWS_AS(stirling_a(0), DomainError);
}

TEST_CASE("extended double factorial") {
  CHECK(double_factorial_ext(5) == Rational(15));
  CHECK(double_factorial_ext(1) == Rational(1));
  CHECK(double_factorial_ext(-1) == Rational(1));
  CHECK(double_factorial_ext(-3) == Rational(-1));
  CHECK(double_factorial_ext(-5) == Rational(1, 3));
  CHECK(double_factorial_ext(-7) == Rational(-1, 15));
  CHECK_THROWS_AS(double_factorial_ext(4), DomainError);
  // (m)!! = m (m-2)!! holds across the extension
  for (long m = -15; m <= 15; m += 2) CHECK(double_factorial_ext(m) == Rational(m) * double_factorial_ext(m - 2));
}

TEST_CASE("generators are deterministic under concurrent access") {
  std::vector<std::thread> pool;
  std::vector<int> ok(8, 0);
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([t, &ok] {
      bool good = true;
      for (long k = 150 + t; k >= 0; k -= 7) {
        good = good && bernoulli(k) == bernoulli(k);
        good = good && stirling_row(k).size() == static_cast<size_t>(k + 1);
        good = good && euler_number(k % 90) == euler_number(k % 90);
      }
      ok[static_cast<size_t>(t)] = good ? 1 : 0;
    });
  }
  for (auto& th : pool) th.join();
  for (int v : ok) CHECK(v == 1);
  const auto table = oracle::bernoulli_table(157);
  for (long k = 0; k <= 157; ++k) CHECK(bernoulli(k) == table[static_cast<size_t>(k)]);
}
