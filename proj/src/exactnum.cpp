#include "stirsum/exactnum.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "stirsum/errors.hpp"

namespace stirsum::exactnum {
namespace {

void require_index(long k, const char* what) {
  if (k < 0) throw DomainError(std::string(what) + ": negative index " + std::to_string(k));
}

class StirlingTriangle {
 public:
  StirlingTriangle() { rows_.push_back({BigInt(1)}); }

  const std::vector<BigInt>& row(long k) {
    {
      std::shared_lock lock(mu_);
      if (k < static_cast<long>(rows_.size())) return rows_[static_cast<size_t>(k)];
    }
    std::unique_lock lock(mu_);
    while (static_cast<long>(rows_.size()) <= k) {
      const auto& prev = rows_.back();
      const long m = static_cast<long>(rows_.size()) - 1;  // prev is row m
      std::vector<BigInt> next(static_cast<size_t>(m + 2));
      // S_{m+1}(l) = S_m(l-1) - m S_m(l)
      for (long l = 1; l <= m + 1; ++l) {
        BigInt v = prev[static_cast<size_t>(l - 1)];
        if (l <= m) v -= prev[static_cast<size_t>(l)] * m;
        next[static_cast<size_t>(l)] = std::move(v);
      }
      rows_.push_back(std::move(next));
    }
    return rows_[static_cast<size_t>(k)];
  }

 private:
  std::shared_mutex mu_;
  std::deque<std::vector<BigInt>> rows_;
};

// Bernoulli numbers from sum_{j=0}^{m} binom(m+1, j) B_j = 0. The even-index
// values are also kept scaled to a common denominator so each new entry is
// one integer dot product plus a single reduction.
class BernoulliCache {
 public:
  BernoulliCache() {
    values_.push_back(Rational(1));
    values_.push_back(Rational(-1, 2));
    common_den_ = 1;
    scaled_even_.push_back(BigInt(1));  // B_0 * common_den_
  }

  Rational get(long k) {
    {
      std::shared_lock lock(mu_);
      if (k < static_cast<long>(values_.size())) return values_[static_cast<size_t>(k)];
    }
    std::unique_lock lock(mu_);
    while (static_cast<long>(values_.size()) <= k) extend();
    return values_[static_cast<size_t>(k)];
  }

 private:
  void extend() {
    const long m = static_cast<long>(values_.size());
    if (m % 2 == 1) {
      values_.push_back(Rational(0));
      return;
    }
    // B_m = -(1/(m+1)) [ sum_{even j < m} binom(m+1, j) B_j + binom(m+1, 1) B_1 ]
    BigInt acc = 0;
    for (size_t i = 0; i < scaled_even_.size(); ++i) {
      acc += binomial(m + 1, static_cast<long>(2 * i)) * scaled_even_[i];
    }
    Rational sum(acc, common_den_);
    sum += Rational(m + 1) * Rational(-1, 2);
    Rational b = -sum / Rational(m + 1);

    const BigInt& d = b.den();
    BigInt g;
    mpz_gcd(g.get_mpz_t(), common_den_.get_mpz_t(), d.get_mpz_t());
    const BigInt factor = d / g;
    if (factor != 1) {
      common_den_ *= factor;
      for (auto& s : scaled_even_) s *= factor;
    }
    scaled_even_.push_back(b.num() * (common_den_ / d));
    values_.push_back(std::move(b));
  }

  std::shared_mutex mu_;
  std::vector<Rational> values_;
  BigInt common_den_;
  std::vector<BigInt> scaled_even_;  // B_{2i} * common_den_
};

class EulerCache {
 public:
  EulerCache() { values_.push_back(BigInt(1)); }

  BigInt get(long k) {
    {
      std::shared_lock lock(mu_);
      if (k < static_cast<long>(values_.size())) return values_[static_cast<size_t>(k)];
    }
    std::unique_lock lock(mu_);
    while (static_cast<long>(values_.size()) <= k) {
      const long m = static_cast<long>(values_.size());
      if (m % 2 == 1) {
        values_.push_back(BigInt(0));
        continue;
      }
      // sech x * cosh x = 1  =>  E_m = -sum_{even j < m} binom(m, j) E_j
      BigInt acc = 0;
      for (long j = 0; j < m; j += 2) acc += binomial(m, j) * values_[static_cast<size_t>(j)];
      values_.push_back(-acc);
    }
    return values_[static_cast<size_t>(k)];
  }

 private:
  std::shared_mutex mu_;
  std::vector<BigInt> values_;
};

// Lazily filled table for sequences defined by a closed form in k.
class DerivedCache {
 public:
  template <class F>
  Rational get(long k, F&& compute) {
    {
      std::shared_lock lock(mu_);
      if (k < static_cast<long>(values_.size()) && filled_[static_cast<size_t>(k)]) {
        return values_[static_cast<size_t>(k)];
      }
    }
    Rational v = compute(k);
    std::unique_lock lock(mu_);
    if (static_cast<long>(values_.size()) <= k) {
      values_.resize(static_cast<size_t>(k) + 1);
      filled_.resize(static_cast<size_t>(k) + 1, false);
    }
    values_[static_cast<size_t>(k)] = v;
    filled_[static_cast<size_t>(k)] = true;
    return v;
  }

 private:
  std::shared_mutex mu_;
  std::vector<Rational> values_;
  std::vector<bool> filled_;
};

StirlingTriangle& triangle() {
  static StirlingTriangle t;
  return t;
}
BernoulliCache& bernoulli_cache() {
  static BernoulliCache c;
  return c;
}
EulerCache& euler_cache() {
  static EulerCache c;
  return c;
}

}  // namespace

const std::vector<BigInt>& stirling_row(long k) {
  require_index(k, "stirling_row");
  return triangle().row(k);
}

BigInt stirling_first(long k, long l) {
  require_index(k, "stirling_first");
  require_index(l, "stirling_first");
  if (l > k) throw DomainError("stirling_first: l > k");
  return stirling_row(k)[static_cast<size_t>(l)];
}

Rational bernoulli(long k) {
  require_index(k, "bernoulli");
  return bernoulli_cache().get(k);
}

BigInt euler_number(long k) {
  require_index(k, "euler_number");
  return euler_cache().get(k);
}

Rational tangent_number(long k) {
  if (k < 1) throw DomainError("tangent_number: k must be >= 1");
  BigInt four_k;
  mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
  return Rational(BigInt(four_k * (four_k - 1))) * bernoulli(2 * k).abs() / Rational(2 * k);
}

Rational gregory_number(long k) {
  require_index(k, "gregory_number");
  static DerivedCache cache;
  return cache.get(k, [](long n) {
    const auto& row = stirling_row(n);
    Rational sum;
    for (long l = 0; l <= n; ++l) sum += Rational(row[static_cast<size_t>(l)], BigInt(l + 1));
    return sum / Rational(factorial(n));
  });
}

Rational stirling_a(long k) {
  if (k < 1) throw DomainError("stirling_a: k must be >= 1");
  static DerivedCache cache;
  return cache.get(k, [](long n) {
    const auto& row = stirling_row(n);
    Rational sum;
    for (long l = 1; l <= n; ++l) {
      Rational term(BigInt(l) * row[static_cast<size_t>(l)], BigInt((l + 1) * (l + 2)));
      if (l % 2 == 1) term = -term;
      sum += term;
    }
    sum /= Rational(2 * n);
    return n % 2 == 1 ? -sum : sum;
  });
}

Rational double_factorial_ext(long m) {
  if (m % 2 == 0) throw DomainError("double_factorial_ext: argument must be odd");
  if (m >= -1) {
    BigInt r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m < 0 ? 0 : m));
    return Rational(r);
  }
  const long j = (-m - 1) / 2;
  const Rational mag = Rational(1) / double_factorial_ext(2 * j - 1);
  return j % 2 == 0 ? mag : -mag;
}

BigInt factorial(long n) {
  require_index(n, "factorial");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt binomial(long n, long k) {
  require_index(n, "binomial");
  if (k < 0 || k > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace stirsum::exactnum
