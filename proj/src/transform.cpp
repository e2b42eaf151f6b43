#include "stirsum/transform.hpp"

#include <chrono>
#include <cmath>

#include "stirsum/errors.hpp"
#include "stirsum/exactnum.hpp"
#include "stirsum/kernels.hpp"

namespace stirsum {

Rational InnerCoefficients::operator()(long l) const {
  if (l < 1) throw DomainError("inner coefficients start at l = 1");
  if (support_hint && l > *support_hint) return Rational();
  return generator(l);
}

InnerCoefficients InnerCoefficients::zero() {
  return {[](long) { return Rational(); }, 0};
}

InnerCoefficients InnerCoefficients::finite(std::vector<Rational> values) {
  const long n = static_cast<long>(values.size());
  auto shared = std::make_shared<const std::vector<Rational>>(std::move(values));
  return {[shared](long l) {
            return l <= static_cast<long>(shared->size()) ? (*shared)[static_cast<size_t>(l - 1)] : Rational();
          },
          n};
}

CoefficientSequence::CoefficientSequence(InnerCoefficients inner) : inner_(std::move(inner)) {}

Rational CoefficientSequence::inner_at(long l) const { return inner_(l); }

void CoefficientSequence::ensure(long K) {
  const long have = static_cast<long>(c_.size());
  if (K <= have) return;
  const long target = std::max({K, have + have / 2, 32L});
  for (long l = static_cast<long>(a_.size()) + 1; l <= target; ++l) a_.push_back(inner_(l));
  auto block = kernels::weniger_block_parallel(a_, have + 1, target);
  for (auto& c : block) c_.push_back(std::move(c));
}

Rational CoefficientSequence::at(long k) {
  if (k < 1) throw DomainError("Stirling coefficients start at k = 1");
  std::lock_guard lock(mu_);
  ensure(k);
  return c_[static_cast<size_t>(k - 1)];
}

std::vector<Rational> CoefficientSequence::prefix(long K) {
  if (K < 0) throw DomainError("negative coefficient count");
  std::lock_guard lock(mu_);
  ensure(K);
  return {c_.begin(), c_.begin() + K};
}

long EvalContext::guard_digits() const {
  if (guard > 0) return guard;
  return 10 + (digits + 9) / 10;
}

void EvalContext::validate() const {
  if (digits < 1) throw DomainError("digits must be >= 1");
  if (guard != 0 && guard < 10) throw DomainError("guard must be >= 10");
  if (max_terms < 1) throw DomainError("max_terms must be >= 1");
  if (stop_rule < 2) throw DomainError("stop_rule must be >= 2");
  if (max_shift < 0) throw DomainError("max_shift must be >= 0");
}

StirlingCoefficients weniger_transform(const InnerCoefficients& a, long K) {
  if (K < 1) throw DomainError("weniger_transform needs K >= 1");
  std::vector<Rational> inner;
  for (long l = 1; l <= K; ++l) inner.push_back(a(l));
  return {kernels::weniger_block_parallel(inner, 1, K)};
}

StirlingCoefficients weniger_transform_serial(const InnerCoefficients& a, long K) {
  if (K < 1) throw DomainError("weniger_transform needs K >= 1");
  std::vector<Rational> inner;
  for (long l = 1; l <= K; ++l) inner.push_back(a(l));
  return {kernels::weniger_block_serial(inner, 1, K)};
}

BigReal pochhammer(const BigReal& x, long k) {
  if (k < 0) throw DomainError("pochhammer needs k >= 0");
  BigReal out(1, x.precision());
  BigReal factor(x);
  for (long i = 0; i < k; ++i) {
    out *= factor;
    factor += 1;
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

// Core loop shared by all coefficient sources. `coef(k)` returns nullopt once
// the source is exhausted (all further coefficients zero).
template <class CoefFn>
EvaluationReport run_series(CoefFn&& coef, const BigReal& x, DenominatorShape shape, const EvalContext& ctx) {
  ctx.validate();
  if (x.sign() <= 0) throw DomainError("Stirling series needs x > 0");
  const auto start = Clock::now();
  const Precision p = ctx.working_precision();
  const double drop = static_cast<double>(ctx.digits) + static_cast<double>(ctx.guard_digits()) / 2.0;

  const BigReal xp = x.with_precision(p);
  BigReal denom = shape == DenominatorShape::at_x ? xp : BigReal(1, p);
  BigReal sum(p);
  BigReal term(p);
  long small_run = 0;
  long k = 0;
  bool exhausted = false;

  auto small = [&](const BigReal& t) {
    if (t.is_zero()) return true;
    if (sum.is_zero()) return false;
    return t.log10_abs() < sum.log10_abs() - drop;
  };

  auto finish = [&](long used, bool converged) {
    EvaluationReport r;
    r.value = sum;
    r.terms_used = used;
    r.precision_used = ctx.working_digits();
    r.est_error = BigReal(p);
    if (!exhausted) {
      const auto next = coef(used + 1);
      if (next) {
        BigReal d = denom * (xp + (used + 1));
        BigReal t = BigReal(*next, p) / d;
        r.est_error = t.abs() * 2;
      }
    }
    r.elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (!converged) {
      throw NonConvergence("Stirling series did not reach " + std::to_string(ctx.digits) + " digits within " +
                               std::to_string(ctx.max_terms) + " terms",
                           std::move(r));
    }
    return r;
  };

  while (k < ctx.max_terms) {
    const auto c = coef(k + 1);
    if (!c) {
      exhausted = true;
      return finish(k, true);
    }
    ++k;
    denom *= xp + k;
    if (c->is_zero()) {
      term = BigReal(p);
    } else {
      term = BigReal(*c, p);
      term /= denom;
    }
    sum += term;
    small_run = small(term) ? small_run + 1 : 0;
    if (small_run >= ctx.stop_rule) return finish(k, true);
  }
  return finish(k, false);
}

}  // namespace

EvaluationReport eval_stirling_series(CoefficientSequence& c, const BigReal& x, DenominatorShape shape,
                                      const EvalContext& ctx) {
  // fetch in chunks so the lock is not taken per term
  std::vector<Rational> cache;
  auto coef = [&](long k) -> std::optional<Rational> {
    if (k > static_cast<long>(cache.size())) cache = c.prefix(std::max(k, 2 * static_cast<long>(cache.size()) + 16));
    return cache[static_cast<size_t>(k - 1)];
  };
  return run_series(coef, x, shape, ctx);
}

EvaluationReport eval_stirling_series(const InnerCoefficients& a, const BigReal& x, DenominatorShape shape,
                                      const EvalContext& ctx) {
  CoefficientSequence seq(a);
  if (a.support_hint && *a.support_hint == 0) {
    auto coef = [](long) -> std::optional<Rational> { return Rational(); };
    return run_series(coef, x, shape, ctx);
  }
  return eval_stirling_series(seq, x, shape, ctx);
}

EvaluationReport eval_stirling_series(const StirlingCoefficients& c, const BigReal& x, DenominatorShape shape,
                                      const EvalContext& ctx) {
  auto coef = [&](long k) -> std::optional<Rational> {
    if (k > c.size()) return std::nullopt;
    return c[k];
  };
  return run_series(coef, x, shape, ctx);
}

std::vector<BigReal> stirling_terms(CoefficientSequence& c, const BigReal& x, DenominatorShape shape, long K,
                                    Precision p) {
  if (x.sign() <= 0) throw DomainError("Stirling series needs x > 0");
  const auto coefs = c.prefix(K);
  const BigReal xp = x.with_precision(p);
  BigReal denom = shape == DenominatorShape::at_x ? xp : BigReal(1, p);
  std::vector<BigReal> out;
  out.reserve(static_cast<size_t>(K));
  for (long k = 1; k <= K; ++k) {
    denom *= xp + k;
    BigReal t(coefs[static_cast<size_t>(k - 1)], p);
    t /= denom;
    out.push_back(std::move(t));
  }
  return out;
}

ConsistencyReport verify_transform_consistency(const InnerCoefficients& a, const BigReal& x, long K, long digits) {
  if (K < 1) throw DomainError("verify_transform_consistency needs K >= 1");
  if (x.sign() <= 0) throw DomainError("verify_transform_consistency needs x > 0");
  const Precision p = Precision::digits(digits + 10);
  const BigReal xp = x.with_precision(p);

  BigReal power_sum(p);
  BigReal xpow = xp;
  for (long l = 1; l <= K; ++l) {
    xpow *= xp;
    power_sum += BigReal(a(l), p) / xpow;
  }

  CoefficientSequence seq(a);
  BigReal stirling_sum(p);
  for (const auto& t : stirling_terms(seq, xp, DenominatorShape::at_x, K, p)) stirling_sum += t;
  BigReal diff = stirling_sum - power_sum;
  return {std::move(power_sum), std::move(stirling_sum), std::move(diff)};
}

}  // namespace stirsum
