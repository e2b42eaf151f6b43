#include <algorithm>
#include <chrono>
#include <cmath>

#include "catalog_internal.hpp"
#include "stirsum/catalog.hpp"
#include "stirsum/errors.hpp"
#include "stirsum/exactnum.hpp"
#include "stirsum/kernels.hpp"

namespace stirsum {
namespace {

using Clock = std::chrono::steady_clock;

constexpr long kExactCap = 5000;
constexpr long kExactFactorialCap = 100000;
constexpr double kLn10 = 2.302585092994045684;

bool rational_family(Summand s) {
  switch (s) {
    case Summand::reciprocal:
    case Summand::reciprocal_square:
    case Summand::reciprocal_cube:
    case Summand::gregory_from_zero:
    case Summand::gregory_from_one:
    case Summand::alt_harmonic:
      return true;
    default:
      return false;
  }
}

Rational rational_summand(Summand s, long k) {
  switch (s) {
    case Summand::reciprocal: return Rational(1, k);
    case Summand::reciprocal_square: return Rational(BigInt(1), BigInt(k) * k);
    case Summand::reciprocal_cube: return Rational(BigInt(1), BigInt(k) * k * k);
    case Summand::gregory_from_zero: return Rational(k % 2 == 0 ? 1 : -1, 2 * k + 1);
    case Summand::gregory_from_one: return Rational(k % 2 == 1 ? 1 : -1, 2 * k - 1);
    case Summand::alt_harmonic: return Rational(k % 2 == 1 ? 1 : -1, k);
    default: throw DomainError("summand is not rational");
  }
}

void summand_into(Summand s, long k, BigReal& out) {
  mpfr_ptr v = out.get();
  const auto uk = static_cast<unsigned long>(k);
  switch (s) {
    case Summand::reciprocal:
      mpfr_set_ui(v, 1, MPFR_RNDN);
      mpfr_div_ui(v, v, uk, MPFR_RNDN);
      return;
    case Summand::reciprocal_square:
      mpfr_set_ui(v, uk, MPFR_RNDN);
      mpfr_sqr(v, v, MPFR_RNDN);
      mpfr_ui_div(v, 1, v, MPFR_RNDN);
      return;
    case Summand::reciprocal_cube:
      mpfr_set_ui(v, uk, MPFR_RNDN);
      mpfr_pow_ui(v, v, 3, MPFR_RNDN);
      mpfr_ui_div(v, 1, v, MPFR_RNDN);
      return;
    case Summand::sqrt:
      mpfr_sqrt_ui(v, uk, MPFR_RNDN);
      return;
    case Summand::k_sqrt:
      mpfr_sqrt_ui(v, uk, MPFR_RNDN);
      mpfr_mul_ui(v, v, uk, MPFR_RNDN);
      return;
    case Summand::k2_sqrt:
      mpfr_sqrt_ui(v, uk, MPFR_RNDN);
      mpfr_mul_ui(v, v, uk, MPFR_RNDN);
      mpfr_mul_ui(v, v, uk, MPFR_RNDN);
      return;
    case Summand::inv_sqrt:
      mpfr_set_ui(v, uk, MPFR_RNDN);
      mpfr_rec_sqrt(v, v, MPFR_RNDN);
      return;
    case Summand::inv_k_sqrt:
      mpfr_set_ui(v, uk, MPFR_RNDN);
      mpfr_rec_sqrt(v, v, MPFR_RNDN);
      mpfr_div_ui(v, v, uk, MPFR_RNDN);
      return;
    case Summand::inv_k2_sqrt:
      mpfr_set_ui(v, uk, MPFR_RNDN);
      mpfr_rec_sqrt(v, v, MPFR_RNDN);
      mpfr_div_ui(v, v, uk, MPFR_RNDN);
      mpfr_div_ui(v, v, uk, MPFR_RNDN);
      return;
    case Summand::log:
      mpfr_log_ui(v, uk, MPFR_RNDN);
      return;
    case Summand::k_log:
      if (k == 0) {
        mpfr_set_zero(v, 1);
        return;
      }
      mpfr_log_ui(v, uk, MPFR_RNDN);
      mpfr_mul_ui(v, v, uk, MPFR_RNDN);
      return;
    case Summand::log_over_k:
      mpfr_log_ui(v, uk, MPFR_RNDN);
      mpfr_div_ui(v, v, uk, MPFR_RNDN);
      return;
    case Summand::log_over_k2:
      mpfr_log_ui(v, uk, MPFR_RNDN);
      mpfr_div_ui(v, v, uk, MPFR_RNDN);
      mpfr_div_ui(v, v, uk, MPFR_RNDN);
      return;
    case Summand::log_squared:
      mpfr_log_ui(v, uk, MPFR_RNDN);
      mpfr_sqr(v, v, MPFR_RNDN);
      return;
    case Summand::gregory_from_zero:
    case Summand::gregory_from_one:
    case Summand::alt_harmonic: {
      const Rational r = rational_summand(s, k);
      mpfr_set_q(v, r.get().get_mpq_t(), MPFR_RNDN);
      return;
    }
  }
}

// (n + offset)^s log(n)^m (-1)^(...) for a prefactor or head term.
BigReal monomial(long n, long offset, const Rational& s, long m, const std::optional<Parity>& parity, Precision p) {
  const long base = n + offset;
  BigReal out(1, p);
  if (!s.is_zero()) {
    if (base == 0) {
      if (s.sign() < 0) throw DomainError("negative power of zero");
      return BigReal(p);
    }
    out = power(BigReal(base, p), s);
  }
  if (m > 0) {
    if (n <= 0) throw DomainError("log(n) needs n >= 1");
    const BigReal ln = log(BigReal(n, p));
    for (long i = 0; i < m; ++i) out *= ln;
  }
  if (parity && parity->sign_at(n) < 0) out = -out;
  return out;
}

double magnitude(const BigReal& x) { return x.is_zero() ? -1e300 : x.log10_abs(); }

double log_rel_term(double x, double K) {
  return std::lgamma(K) + std::lgamma(x) - std::lgamma(x + K + 1.0) + std::log(x * (x + 1.0));
}

bool reaches(double x, long K, long digits) {
  return log_rel_term(x, static_cast<double>(K)) < -static_cast<double>(digits) * kLn10;
}

// Every part with a nonzero power of n needs n >= 1 for the direct form.
bool direct_valid_at(const Formula& f, long n) {
  if (n >= 1) return true;
  for (const auto& part : f.series) {
    if (!part.n_power.is_zero() || part.log_power > 0) return false;
  }
  for (const auto& h : f.head) {
    if (h.log_power > 0 || (h.n_offset + n == 0 && h.n_power.sign() < 0)) return false;
  }
  return true;
}

}  // namespace

namespace detail {

BigReal head_term_value(const HeadTerm& h, long n, Precision p, long constant_digits,
                        const std::optional<ConstantId>& skip) {
  BigReal out = monomial(n, h.n_offset, h.n_power, h.log_power, h.parity, p);
  out *= BigReal(h.coef, p);
  for (const auto& [c, power] : h.constants) {
    if (skip && c == *skip) continue;
    const BigReal v = get_constant(c, constant_digits).with_precision(p);
    if (power >= 0) {
      for (long i = 0; i < power; ++i) out *= v;
    } else {
      for (long i = 0; i < -power; ++i) out /= v;
    }
  }
  return out;
}

DirectParts direct_parts(const Formula& f, long n, const EvalContext& ctx, const std::optional<ConstantId>& skip) {
  if (!direct_valid_at(f, n)) throw DomainError("the series form of " + f.id.str() + " is not valid at n = 0");
  const Precision p = ctx.working_precision();
  const long wd = ctx.working_digits();
  DirectParts out{BigReal(p), BigReal(p), BigReal(p), 0, BigReal(p), -1e300};

  for (const auto& h : f.head) {
    const bool skipped = skip && std::any_of(h.constants.begin(), h.constants.end(),
                                             [&](const auto& cp) { return cp.first == *skip; });
    const BigReal v = head_term_value(h, n, p, wd, skip);
    out.magnitude = std::max(out.magnitude, magnitude(v));
    if (skipped) {
      out.skip_factor += v;
    } else {
      out.head += v;
    }
  }

  for (const auto& part : f.series) {
    const BigReal factor = monomial(n, 0, part.n_power, part.log_power, part.parity, p);
    const BigReal x(n + part.x_offset, p);
    try {
      const auto r = eval_stirling_series(*part.coefficients, x, part.shape, ctx);
      const BigReal contrib = factor * r.value;
      out.magnitude = std::max(out.magnitude, magnitude(contrib));
      out.series += contrib;
      out.terms_used += r.terms_used;
      const BigReal est = factor.abs() * r.est_error;
      if (est > out.est_error) out.est_error = est;
    } catch (const NonConvergence& e) {
      EvaluationReport partial = e.partial();
      partial.value = out.head + out.skip_factor + out.series + factor * partial.value;
      partial.est_error = factor.abs() * partial.est_error;
      partial.terms_used += out.terms_used;
      throw NonConvergence(std::string("formula ") + f.id.str() + ", n = " + std::to_string(n) + ": " + e.what(),
                           std::move(partial));
    }
  }
  return out;
}

BigReal summand_sum(const Formula& f, long first, long last, Precision p) {
  const Summand s = f.summand;
  return kernels::sum_real_parallel(first, last, [s](long k, BigReal& out) { summand_into(s, k, out); }, p);
}

BigReal lhs_value(const Formula& f, long n, Precision p) {
  if (auto exact = brute_force_exact(f.id, n)) return BigReal(*exact, p);
  if (f.summand == Summand::log && n <= kExactFactorialCap) {
    return log(BigReal(exactnum::factorial(std::max(n, 1L)), p));
  }
  return summand_sum(f, f.sum_start, n, p);
}

long next_argument(long N) { return std::max(N + 16, (3 * N + 1) / 2); }

}  // namespace detail

double plan_argument(double x, long digits, long max_terms, long max_shift) {
  if (x >= 1.0 && reaches(x, max_terms, digits)) return x;
  const long budget = std::min(max_terms, std::max(60L, 2 * digits));
  const double start = std::max(x, 1.0);
  if (reaches(start, budget, digits) && start > x) return start;
  long lo = 0;  // fails
  long hi = 1;
  while (!reaches(start + static_cast<double>(hi), budget, digits)) {
    lo = hi;
    if (hi > max_shift) return -1;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    if (reaches(start + static_cast<double>(mid), budget, digits)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const double N = start + static_cast<double>(hi);
  if (N - x > static_cast<double>(max_shift)) return -1;
  return N;
}

EvaluationReport evaluate(const FormulaId& id, long n, const EvalContext& ctx_in) {
  ctx_in.validate();
  const Formula& f = describe(id);
  if (n < f.domain_min) {
    throw DomainError("formula " + id.str() + " needs n >= " + std::to_string(f.domain_min));
  }
  if (n > kBruteForceCap) throw DomainError("n above the supported cap of 10^7");
  const auto start = Clock::now();
  EvalContext ctx = ctx_in;

  for (int attempt = 0;; ++attempt) {
    const long target = ctx.working_digits();
    long N = n;
    if (ctx.allow_shift) {
      const double plan = plan_argument(static_cast<double>(n), target, ctx.max_terms, ctx.max_shift);
      if (plan < 0) {
        // out of reach: report what the series gives at n itself
        EvalContext direct = ctx;
        direct.allow_shift = false;
        if (!direct_valid_at(f, n)) {
          throw NonConvergence("formula " + id.str() + " cannot reach " + std::to_string(ctx.digits) +
                                   " digits at n = " + std::to_string(n) + " within the shift limit",
                               EvaluationReport{BigReal(ctx.working_precision()), 0, BigReal(ctx.working_precision()),
                                                ctx.working_digits(), 0.0, 0});
        }
        return evaluate(id, n, direct);
      }
      N = static_cast<long>(std::ceil(plan));
      if (!direct_valid_at(f, N)) N = 1;
    }

    std::optional<detail::DirectParts> parts;
    while (!parts) {
      try {
        parts = detail::direct_parts(f, N, ctx);
      } catch (const NonConvergence& e) {
        if (!ctx.allow_shift) throw;
        const long next = detail::next_argument(N);
        if (next - n > ctx.max_shift) {
          EvaluationReport partial = e.partial();
          partial.shift = N - n;
          throw NonConvergence(e.what(), std::move(partial));
        }
        N = next;
      }
    }

    const Precision p = ctx.working_precision();
    BigReal value = parts->head + parts->series;
    double mag = parts->magnitude;
    if (N > n) {
      const BigReal between = detail::summand_sum(f, n + 1, N, p);
      mag = std::max(mag, magnitude(between));
      value -= between;
    }
    const double loss = mag - magnitude(value);
    if (attempt == 0 && loss > static_cast<double>(ctx.guard_digits()) / 2.0) {
      ctx.guard = ctx.guard_digits() + static_cast<long>(std::ceil(loss)) + 5;
      continue;
    }

    EvaluationReport r;
    r.value = std::move(value);
    r.terms_used = parts->terms_used;
    r.est_error = parts->est_error;
    r.precision_used = ctx.working_digits();
    r.shift = N - n;
    r.elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
  }
}

std::vector<BigReal> term_sequence(const FormulaId& id, long n, long K, long digits) {
  const Formula& f = describe(id);
  if (K < 1) throw DomainError("term count must be >= 1");
  if (n < 1) throw DomainError("term sequences need n >= 1");
  const Precision p = Precision::digits(digits + 10);
  std::vector<BigReal> out(static_cast<size_t>(K), BigReal(p));
  for (const auto& part : f.series) {
    const BigReal factor = monomial(n, 0, part.n_power, part.log_power, part.parity, p);
    const auto terms = stirling_terms(*part.coefficients, BigReal(n + part.x_offset, p), part.shape, K, p);
    for (long k = 0; k < K; ++k) out[static_cast<size_t>(k)] += factor * terms[static_cast<size_t>(k)];
  }
  return out;
}

EvaluationReport evaluate_truncated(const FormulaId& id, long n, long K, long digits) {
  const auto start = Clock::now();
  const Formula& f = describe(id);
  if (n < std::max(f.domain_min, 1L)) throw DomainError("evaluate_truncated needs n >= max(domain_min, 1)");
  const Precision p = Precision::digits(digits + 10);
  const auto terms = term_sequence(id, n, K + 1, digits);
  BigReal value(p);
  for (const auto& h : f.head) value += detail::head_term_value(h, n, p, digits + 10);
  for (long k = 0; k < K; ++k) value += terms[static_cast<size_t>(k)];
  EvaluationReport r;
  r.value = std::move(value);
  r.terms_used = K;
  r.est_error = terms.back().abs() * 2;
  r.precision_used = digits + 10;
  r.elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

std::optional<Rational> brute_force_exact(const FormulaId& id, long n) {
  const Formula& f = describe(id);
  if (n < f.domain_min) throw DomainError("formula " + id.str() + " needs n >= " + std::to_string(f.domain_min));
  if (!rational_family(f.summand) || n > kExactCap) return std::nullopt;
  const Summand s = f.summand;
  return kernels::sum_rational_parallel(f.sum_start, n, [s](long k) { return rational_summand(s, k); });
}

BigReal brute_force(const FormulaId& id, long n, long digits) {
  const Formula& f = describe(id);
  if (n < f.domain_min) throw DomainError("formula " + id.str() + " needs n >= " + std::to_string(f.domain_min));
  if (n > kBruteForceCap) throw DomainError("brute force is capped at n = 10^7");
  if (digits < 1) throw DomainError("digits must be >= 1");
  return detail::lhs_value(f, n, Precision::digits(digits + 10));
}

BigReal summand_value(Summand s, long k, Precision p) {
  BigReal out(p);
  summand_into(s, k, out);
  return out;
}

}  // namespace stirsum
