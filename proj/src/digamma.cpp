#include <chrono>
#include <cmath>

#include "catalog_internal.hpp"
#include "stirsum/catalog.hpp"
#include "stirsum/errors.hpp"
#include "stirsum/kernels.hpp"

namespace stirsum {

// psi(y) = log y - 1/(2y) + sum_k c_k / (y)_{k+1} with the harmonic-tail
// coefficients; smaller arguments go through psi(x) = psi(x+m) - sum_{j<m} 1/(x+j).
EvaluationReport digamma_report(const BigReal& x, const EvalContext& ctx_in) {
  ctx_in.validate();
  if (x.sign() <= 0) throw DomainError("digamma needs x > 0");
  const auto start = std::chrono::steady_clock::now();
  CoefficientSequence& coefs = *describe({1, 1}).series.front().coefficients;
  EvalContext ctx = ctx_in;

  for (int attempt = 0;; ++attempt) {
    const Precision p = ctx.working_precision();
    const BigReal xp = x.with_precision(p);
    const double xd = x.to_double();
    long m = 0;
    if (ctx.allow_shift) {
      const double plan = plan_argument(xd, ctx.working_digits(), ctx.max_terms, ctx.max_shift);
      if (plan < 0) {
        throw NonConvergence("digamma cannot reach " + std::to_string(ctx.digits) + " digits within the shift limit",
                             EvaluationReport{BigReal(p), 0, BigReal(p), ctx.working_digits(), 0.0, 0});
      }
      m = static_cast<long>(std::ceil(plan - xd));
    }

    std::optional<EvaluationReport> series;
    BigReal y(p);
    while (!series) {
      y = xp + m;
      try {
        series = eval_stirling_series(coefs, y, DenominatorShape::at_x, ctx);
      } catch (const NonConvergence& e) {
        if (!ctx.allow_shift) throw;
        const long next = m == 0 ? 16 : detail::next_argument(m);
        if (next > ctx.max_shift) throw;
        m = next;
      }
    }

    const BigReal head = log(y) - BigReal(1, p) / (y * 2);
    BigReal value = head + series->value;
    double mag = head.log10_abs();
    if (m > 0) {
      const BigReal between = kernels::sum_real_parallel(
          0, m - 1,
          [&xp](long j, BigReal& out) {
            mpfr_add_si(out.get(), xp.get(), j, MPFR_RNDN);
            mpfr_ui_div(out.get(), 1, out.get(), MPFR_RNDN);
          },
          p);
      if (!between.is_zero()) mag = std::max(mag, between.log10_abs());
      value -= between;
    }
    const double loss = value.is_zero() ? 0.0 : mag - value.log10_abs();
    if (attempt == 0 && loss > static_cast<double>(ctx.guard_digits()) / 2.0) {
      ctx.guard = ctx.guard_digits() + static_cast<long>(std::ceil(loss)) + 5;
      continue;
    }
    EvaluationReport r = *series;
    r.value = std::move(value);
    r.precision_used = ctx.working_digits();
    r.shift = m;
    r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
}

BigReal digamma(const BigReal& x, long digits) {
  EvalContext ctx;
  ctx.digits = digits;
  return digamma_report(x, ctx).value;
}

}  // namespace stirsum
