#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stirsum/asymptotics.hpp"
#include "stirsum/bigreal.hpp"
#include "stirsum/constants.hpp"
#include "stirsum/rational.hpp"
#include "stirsum/transform.hpp"

namespace stirsum {

struct FormulaId {
  int family = 1;
  int variant = 1;

  // "4.1"; DomainError for malformed or unknown ids.
  static FormulaId parse(const std::string& text);
  std::string str() const;
  bool valid() const;

  friend bool operator==(const FormulaId&, const FormulaId&) = default;
  friend auto operator<=>(const FormulaId&, const FormulaId&) = default;
};

int variant_count(int family);  // 0 for an unknown family
std::vector<FormulaId> all_formulas();
std::vector<FormulaId> family_formulas(int family);  // DomainError for an unknown family

// (-1)^(n + offset) when present.
struct Parity {
  long offset = 0;
  long sign_at(long n) const { return (n + offset) % 2 == 0 ? 1 : -1; }
};

// coef * prod(constant^power) * (n + n_offset)^n_power * log(n)^log_power * parity
struct HeadTerm {
  Rational coef;
  std::vector<std::pair<ConstantId, long>> constants;
  Rational n_power;
  long n_offset = 0;
  long log_power = 0;
  std::optional<Parity> parity;

  std::string str() const;
};

// log(n)^log_power * n^n_power * parity * sum_k c_k / denominator_k(n + x_offset)
// with inner a_l = scale * sign * (-1)^l * summand(l).
struct SeriesPart {
  std::string name;  // "plain" or "log"
  long log_power = 0;
  Rational n_power;
  std::optional<Parity> parity;
  long x_offset = 0;
  DenominatorShape shape = DenominatorShape::at_x;
  Rational scale{1};
  int sign = 1;
  std::function<Rational(long)> summand;
  std::string summand_text;
  InnerCoefficients inner;
  CoefficientSequencePtr coefficients;  // shared lazy cache of c_k
};

enum class Summand {
  reciprocal,          // 1/k
  reciprocal_square,   // 1/k^2
  reciprocal_cube,     // 1/k^3
  sqrt,                // sqrt k
  k_sqrt,              // k sqrt k
  k2_sqrt,             // k^2 sqrt k
  inv_sqrt,            // 1/sqrt k
  inv_k_sqrt,          // 1/(k sqrt k)
  inv_k2_sqrt,         // 1/(k^2 sqrt k)
  log,                 // log k
  k_log,               // k log k
  log_over_k,          // log k / k
  log_over_k2,         // log k / k^2
  log_squared,         // log^2 k
  gregory_from_zero,   // (-1)^k / (2k+1)
  gregory_from_one,    // (-1)^{k+1} / (2k-1)
  alt_harmonic,        // (-1)^{k+1} / k
};

struct Formula {
  FormulaId id;
  std::string title;
  std::string lhs;
  long sum_start = 1;  // lower index of the left-hand sum
  Summand summand = Summand::reciprocal;
  std::vector<HeadTerm> head;
  std::vector<SeriesPart> series;
  long domain_min = 1;
  bool alternating = false;
  std::vector<ConstantId> constants;
  std::optional<ConstantId> recover_target;
  std::optional<LogPowerSum> em_function;  // f with LHS = sum f(k), families 1-14

  const SeriesPart& part(const std::string& name) const;  // DomainError if absent
};

const Formula& describe(const FormulaId& id);

// Exact c_1..c_K of the named part (the plain series by default).
std::vector<Rational> coefficients(const FormulaId& id, long K, const std::string& part = "plain");

// Left-hand side at n: value of the identity, with the recurrence shift when
// the series alone cannot reach ctx.digits at n.
EvaluationReport evaluate(const FormulaId& id, long n, const EvalContext& ctx);

// Head plus exactly K terms of every part, no shift. est_error is 2|term_{K+1}|.
EvaluationReport evaluate_truncated(const FormulaId& id, long n, long K, long digits);

// Combined k-th terms (summed over parts, prefactors included) for k = 1..K.
std::vector<BigReal> term_sequence(const FormulaId& id, long n, long K, long digits);

// Direct summation of the left-hand side at digits + 10.
BigReal brute_force(const FormulaId& id, long n, long digits);
// Exact left-hand side for the rational families, nullopt otherwise.
std::optional<Rational> brute_force_exact(const FormulaId& id, long n);
// Single summand f(k) at precision p.
BigReal summand_value(Summand s, long k, Precision p);
constexpr long kBruteForceCap = 10000000;

// Smallest argument N >= x at which the series is modelled to reach
// `digits` (relative to its own sum) within max_terms terms, or -1 when that
// needs N - x > max_shift.
double plan_argument(double x, long digits, long max_terms, long max_shift);

// psi(x) at `digits` digits through the harmonic-tail series.
BigReal digamma(const BigReal& x, long digits);
EvaluationReport digamma_report(const BigReal& x, const EvalContext& ctx);

}  // namespace stirsum
