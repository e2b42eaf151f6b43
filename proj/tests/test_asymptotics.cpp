#include <doctest.h>

#include "oracles.hpp"
#include "stirsum/asymptotics.hpp"
#include "stirsum/catalog.hpp"
#include "stirsum/errors.hpp"
#include "stirsum/exactnum.hpp"

using namespace stirsum;

namespace {

LogPowerSum mono(Rational c, Rational s, long m) { return {LogPowerTerm{std::move(c), std::move(s), m}}; }

}  // namespace

TEST_CASE("differentiate examples") {
  CHECK(differentiate(mono(1, 1, 0)) == mono(1, 0, 0));
  CHECK(differentiate(mono(1, 0, 1)) == mono(1, -1, 0));
  CHECK(differentiate(mono(1, 1, 1)) == normalize({{1, 0, 1}, {1, 0, 0}}));
  CHECK(differentiate(mono(5, 0, 0)).empty());
}

TEST_CASE("differentiate is linear") {
  const LogPowerSum f{{3, Rational(1, 2), 2}, {-2, -3, 1}};
  const LogPowerSum g{{7, Rational(-5, 2), 0}, {1, 2, 1}};
  LogPowerSum fg = f;
  fg.insert(fg.end(), g.begin(), g.end());
  LogPowerSum df = differentiate(f);
  const LogPowerSum dg = differentiate(g);
  df.insert(df.end(), dg.begin(), dg.end());
  CHECK(differentiate(fg) == normalize(df));
}

TEST_CASE("repeated derivative of x^s is the falling product") {
  for (const Rational& s : {Rational(-3), Rational(-2), Rational(-1), Rational(1, 2), Rational(3, 2), Rational(5, 2),
                            Rational(-1, 2), Rational(-3, 2), Rational(-5, 2)}) {
    LogPowerSum f = mono(1, s, 0);
    Rational expected(1);
    for (long k = 1; k <= 15; ++k) {
      expected *= s - Rational(k - 1);
      f = differentiate(f);
      REQUIRE(f.size() == 1);
      CHECK(f[0].coef == expected);
      CHECK(f[0].s == s - Rational(k));
      CHECK(f[0].m == 0);
    }
  }
}

TEST_CASE("em_tail examples") {
  const auto B = oracle::bernoulli_table(40);
  {
    const auto t = em_tail(mono(1, -1, 0), 30);
    for (long l = 1; l <= 30; ++l)
      CHECK(t.coefficient(0, Rational(-(l + 1))) == -B[static_cast<size_t>(l + 1)] / Rational(l + 1));
    // exponents in a group descend in integer steps; zero coefficients are not stored
    Rational prev;
    bool first = true;
    for (const auto& [e, c] : t.groups.at(0)) {
      CHECK_FALSE(c.is_zero());
      if (!first) {
        CHECK((prev - e).is_integer());
        CHECK(prev > e);
      }
      prev = e;
      first = false;
    }
  }
  {
    const auto t = em_tail(mono(1, Rational(1, 2), 0), 30);
    for (long l = 1; l <= 25; ++l) {
      const Rational df = exactnum::double_factorial_ext(2 * l - 3);
      // the sign is opposite to a closed form stated elsewhere; this one matches
      // sum sqrt(k) = ... + n^{-1/2}/24 + ... and the printed item 4 coefficients
      const Rational expected =
          df / (Rational(BigInt(BigInt(1) << static_cast<mp_bitcnt_t>(l))) * Rational(exactnum::factorial(l + 1))) *
          B[static_cast<size_t>(l + 1)];
      CHECK(t.coefficient(0, Rational(1, 2) - Rational(l)) == expected);
    }
  }
  {
    const auto t = em_tail(mono(1, 0, 1), 30);
    for (long l = 1; l <= 25; ++l) {
      Rational expected = B[static_cast<size_t>(l + 1)] / Rational(l * (l + 1));
      if (l % 2 == 0) expected = -expected;
      CHECK(t.coefficient(0, Rational(-l)) == expected);
    }
  }
}

TEST_CASE("em_tail reproduces catalog inner coefficients") {
  long checked = 0;
  for (const auto& id : all_formulas()) {
    const Formula& f = describe(id);
    if (id.family > 14) {
      CHECK_FALSE(f.em_function.has_value());
      continue;
    }
    REQUIRE(f.em_function.has_value());
    const auto tail = em_tail(*f.em_function, 24);
    for (const auto& part : f.series) {
      for (long l = 1; l <= 20; ++l) {
        INFO(id.str() << " " << part.name << " l=" << l);
        CHECK(em_inner(tail, part.log_power, part.n_power, part.shape, l) == part.inner(l));
        ++checked;
      }
    }
  }
  CHECK(checked == 35 * 20 - 3 * 20);
}

TEST_CASE("bernoulli polynomials: B_n(1) = B_n(0)") {
  // B_n(x) = sum_k binom(n, k) B_{n-k} x^k
  const auto B = oracle::bernoulli_table(60);
  for (long n = 2; n <= 60; ++n) {
    Rational at_one;
    for (long k = 0; k <= n; ++k) at_one += Rational(exactnum::binomial(n, k)) * B[static_cast<size_t>(n - k)];
    CHECK(at_one == B[static_cast<size_t>(n)]);
  }
}

TEST_CASE("boole tails") {
  const auto g = boole_tail(BooleFamily::gregory_leibniz, 10);
  CHECK(g(1).is_zero());
  CHECK(weniger_transform(g, 2)[2] == Rational(1, 4));
  const auto a = boole_tail(BooleFamily::alt_harmonic, 10);
  CHECK(a(1) == Rational(-1, 4));
  CHECK(parse_boole_family("gregory_leibniz") == BooleFamily::gregory_leibniz);
  CHECK(parse_boole_family("alt_harmonic") == BooleFamily::alt_harmonic);
  CHECK_THROWS_AS(parse_boole_family("riemann"), DomainError);
  // boole tails flow through the same transform as the catalog parts
  const auto cg = weniger_transform(g, 8);
  const auto cat = coefficients({15, 2}, 8);
  for (long k = 1; k <= 8; ++k) CHECK(Rational(1, 4) * cg[k] == cat[static_cast<size_t>(k - 1)]);
  const auto ca = weniger_transform(a, 8);
  const auto cat16 = coefficients({16, 1}, 8);
  for (long k = 1; k <= 8; ++k) CHECK(-ca[k] == cat16[static_cast<size_t>(k - 1)]);
}
