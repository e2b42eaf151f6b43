#include "stirsum/kernels.hpp"

#include <algorithm>

#include <omp.h>

#include "stirsum/errors.hpp"
#include "stirsum/exactnum.hpp"

namespace stirsum::kernels {
namespace {

constexpr long kRealBlock = 512;
constexpr long kRationalBlock = 64;

void check_range(const std::vector<Rational>& inner, long k_begin, long k_end) {
  if (k_begin < 1) throw DomainError("weniger block must start at k >= 1");
  if (k_end > static_cast<long>(inner.size())) throw DomainError("weniger block needs a_l up to l = k_end");
}

}  // namespace

std::vector<Rational> weniger_block_serial(const std::vector<Rational>& inner, long k_begin, long k_end) {
  check_range(inner, k_begin, k_end);
  std::vector<Rational> out;
  for (long k = k_begin; k <= k_end; ++k) {
    Rational c;
    for (long l = 1; l <= k; ++l) {
      Rational t = inner[static_cast<size_t>(l - 1)] * Rational(exactnum::stirling_first(k, l));
      if ((k + l) % 2 != 0) t = -t;
      c += t;
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Rational> weniger_block_parallel(const std::vector<Rational>& inner, long k_begin, long k_end) {
  check_range(inner, k_begin, k_end);
  if (k_end < k_begin) return {};

  // Put a_1..a_{k_end} over one denominator; then (-1)^{k+l} S_k(l) = |S_k(l)|
  // turns every c_k into a single integer dot product.
  BigInt den = 1;
  for (long l = 0; l < k_end; ++l) {
    const BigInt& d = inner[static_cast<size_t>(l)].den();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<BigInt> scaled(static_cast<size_t>(k_end));
  for (long l = 0; l < k_end; ++l) {
    const Rational& a = inner[static_cast<size_t>(l)];
    scaled[static_cast<size_t>(l)] = a.num() * (den / a.den());
  }
  exactnum::stirling_row(k_end);  // fill the triangle before fanning out

  const long count = k_end - k_begin + 1;
  std::vector<Rational> out(static_cast<size_t>(count));
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = count - 1; i >= 0; --i) {
    const long k = k_begin + i;
    const auto& row = exactnum::stirling_row(k);
    BigInt acc = 0;
    BigInt mag;
    for (long l = 1; l <= k; ++l) {
      const BigInt& a = scaled[static_cast<size_t>(l - 1)];
      if (a == 0) continue;
      mpz_abs(mag.get_mpz_t(), row[static_cast<size_t>(l)].get_mpz_t());
      mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), mag.get_mpz_t());
    }
    out[static_cast<size_t>(i)] = Rational(acc, den);
  }
  return out;
}

BigReal sum_real_serial(long first, long last, const RealTerm& f, Precision p) {
  BigReal sum(p);
  BigReal term(p);
  for (long k = first; k <= last; ++k) {
    f(k, term);
    sum += term;
  }
  return sum;
}

BigReal sum_real_parallel(long first, long last, const RealTerm& f, Precision p) {
  if (last < first) return BigReal(p);
  const long n = last - first + 1;
  const long blocks = (n + kRealBlock - 1) / kRealBlock;
  std::vector<BigReal> partial(static_cast<size_t>(blocks), BigReal(p));
#pragma omp parallel
  {
    BigReal term(p);
#pragma omp for schedule(dynamic, 1)
    for (long b = 0; b < blocks; ++b) {
      const long lo = first + b * kRealBlock;
      const long hi = std::min(last, lo + kRealBlock - 1);
      BigReal& acc = partial[static_cast<size_t>(b)];
      for (long k = lo; k <= hi; ++k) {
        f(k, term);
        acc += term;
      }
    }
  }
  BigReal sum(p);
  for (const auto& s : partial) sum += s;
  return sum;
}

Rational sum_rational_serial(long first, long last, const RationalTerm& f) {
  Rational sum;
  for (long k = first; k <= last; ++k) sum += f(k);
  return sum;
}

Rational sum_rational_parallel(long first, long last, const RationalTerm& f) {
  if (last < first) return Rational();
  const long n = last - first + 1;
  const long blocks = (n + kRationalBlock - 1) / kRationalBlock;
  std::vector<Rational> partial(static_cast<size_t>(blocks));
#pragma omp parallel for schedule(dynamic, 1)
  for (long b = 0; b < blocks; ++b) {
    const long lo = first + b * kRationalBlock;
    const long hi = std::min(last, lo + kRationalBlock - 1);
    Rational acc;
    for (long k = lo; k <= hi; ++k) acc += f(k);
    partial[static_cast<size_t>(b)] = std::move(acc);
  }
  // pairwise tree keeps the operands balanced in size
  while (partial.size() > 1) {
    std::vector<Rational> next((partial.size() + 1) / 2);
    const long m = static_cast<long>(partial.size() / 2);
#pragma omp parallel for schedule(static)
    for (long i = 0; i < m; ++i) {
      next[static_cast<size_t>(i)] = partial[static_cast<size_t>(2 * i)] + partial[static_cast<size_t>(2 * i + 1)];
    }
    if (partial.size() % 2 == 1) next.back() = partial.back();
    partial = std::move(next);
  }
  return partial.front();
}

int max_threads() { return omp_get_max_threads(); }

void set_threads(int n) {
  if (n < 1) throw DomainError("thread count must be positive");
  omp_set_num_threads(n);
}

}  // namespace stirsum::kernels
