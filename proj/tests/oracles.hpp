// Independent reference computations used only by the tests.
#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "stirsum/bigreal.hpp"
#include "stirsum/rational.hpp"

namespace oracle {

using stirsum::BigInt;
using stirsum::BigReal;
using stirsum::Precision;
using stirsum::Rational;

// Akiyama-Tanigawa; that algorithm yields B_1 = +1/2, flipped here.
inline std::vector<Rational> bernoulli_table(long n_max) {
  std::vector<Rational> out;
  std::vector<Rational> a(static_cast<size_t>(n_max + 1));
  for (long m = 0; m <= n_max; ++m) {
    a[static_cast<size_t>(m)] = Rational(1, m + 1);
    for (long j = m; j >= 1; --j) {
      a[static_cast<size_t>(j - 1)] = Rational(j) * (a[static_cast<size_t>(j - 1)] - a[static_cast<size_t>(j)]);
    }
    out.push_back(m == 1 ? -a[0] : a[0]);
  }
  return out;
}

// Coefficients of x(x-1)...(x-k+1), lowest degree first.
inline std::vector<BigInt> falling_factorial_poly(long k) {
  std::vector<BigInt> p{BigInt(1)};
  for (long j = 0; j < k; ++j) {
    std::vector<BigInt> q(p.size() + 1, BigInt(0));
    for (size_t i = 0; i < p.size(); ++i) {
      q[i + 1] += p[i];
      q[i] -= BigInt(j) * p[i];
    }
    p = std::move(q);
  }
  return p;
}

// Coefficients of x(x+1)...(x+k-1), lowest degree first.
inline std::vector<BigInt> rising_factorial_poly(long k) {
  std::vector<BigInt> p{BigInt(1)};
  for (long j = 0; j < k; ++j) {
    std::vector<BigInt> q(p.size() + 1, BigInt(0));
    for (size_t i = 0; i < p.size(); ++i) {
      q[i + 1] += p[i];
      q[i] += BigInt(j) * p[i];
    }
    p = std::move(q);
  }
  return p;
}

// E_k = k! [x^k] 1/cosh(x), by power-series inversion.
inline std::vector<BigInt> euler_table(long n_max) {
  std::vector<Rational> cosh(static_cast<size_t>(n_max + 1));
  Rational fact(1);
  for (long k = 0; k <= n_max; ++k) {
    if (k > 0) fact *= Rational(k);
    cosh[static_cast<size_t>(k)] = k % 2 == 0 ? Rational(1) / fact : Rational(0);
  }
  std::vector<Rational> inv(static_cast<size_t>(n_max + 1));
  inv[0] = Rational(1);
  for (long k = 1; k <= n_max; ++k) {
    Rational s;
    for (long j = 1; j <= k; ++j) s += cosh[static_cast<size_t>(j)] * inv[static_cast<size_t>(k - j)];
    inv[static_cast<size_t>(k)] = -s;
  }
  std::vector<BigInt> out;
  BigInt f(1);
  for (long k = 0; k <= n_max; ++k) {
    if (k > 0) f *= k;
    const Rational e = inv[static_cast<size_t>(k)] * Rational(f);
    out.push_back(e.num());
  }
  return out;
}

inline Rational harmonic(long n) {
  mpq_class s(0);
  for (long k = 1; k <= n; ++k) s += mpq_class(1, k);
  return Rational(s);
}

// psi(x) ~ log x - 1/(2x) - sum B_{2k}/(2k x^{2k}); only valid for x large
// against the requested precision.
inline BigReal digamma_asymptotic(const BigReal& x, long terms, Precision p) {
  const auto B = bernoulli_table(2 * terms);
  BigReal out = stirsum::log(x.with_precision(p));
  out -= BigReal(1, p) / (BigReal(2, p) * x);
  const BigReal x2 = x * x;
  BigReal xp = x2;
  for (long k = 1; k <= terms; ++k) {
    out -= BigReal(B[static_cast<size_t>(2 * k)], p) / (BigReal(2 * k, p) * xp);
    xp *= x2;
  }
  return out;
}

inline std::string data_dir() { return STIRSUM_TEST_DATA_DIR; }

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// First `digits` significant digits of a reference decimal string.
inline std::string significant(const std::string& decimal, long digits) {
  std::string out;
  bool started = false;
  for (char ch : decimal) {
    if (ch < '0' || ch > '9') continue;
    if (!started && ch == '0') continue;
    started = true;
    out.push_back(ch);
    if (static_cast<long>(out.size()) == digits) break;
  }
  return out;
}

}  // namespace oracle
