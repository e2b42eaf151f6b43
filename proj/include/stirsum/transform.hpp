#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "stirsum/bigreal.hpp"
#include "stirsum/rational.hpp"

namespace stirsum {

// The inverse-power coefficients a_l (l >= 1) of sum_l a_l / x^{l+1}.
struct InnerCoefficients {
  std::function<Rational(long)> generator;
  std::optional<long> support_hint;  // a_l = 0 for l > support_hint

  Rational operator()(long l) const;

  static InnerCoefficients zero();
  // a_l = values[l-1] for l <= values.size(), zero afterwards.
  static InnerCoefficients finite(std::vector<Rational> values);
};

// c_1..c_K; values[k-1] = c_k. Beyond K the series is taken to be zero.
struct StirlingCoefficients {
  std::vector<Rational> values;

  long size() const { return static_cast<long>(values.size()); }
  const Rational& operator[](long k) const { return values.at(static_cast<size_t>(k - 1)); }
};

// Lazily extended c_k for one inner sequence. Thread-safe; prefixes already
// handed out never change.
class CoefficientSequence {
 public:
  explicit CoefficientSequence(InnerCoefficients inner);

  const InnerCoefficients& inner() const { return inner_; }
  Rational inner_at(long l) const;
  Rational at(long k);                    // c_k, k >= 1
  std::vector<Rational> prefix(long K);   // c_1..c_K

 private:
  void ensure(long K);

  InnerCoefficients inner_;
  std::mutex mu_;
  std::vector<Rational> a_;  // a_1..
  std::vector<Rational> c_;  // c_1..
};

using CoefficientSequencePtr = std::shared_ptr<CoefficientSequence>;

// Term k divides c_k by x(x+1)...(x+k) (at_x) or (x+1)...(x+k) (at_x_plus_1).
enum class DenominatorShape { at_x, at_x_plus_1 };

struct EvalContext {
  long digits = 30;
  long guard = 0;  // 0 selects 10 + ceil(digits/10)
  long max_terms = 400;
  long stop_rule = 3;
  // Catalog evaluation may move to a larger argument and subtract the
  // summands in between when the series alone cannot reach `digits`.
  bool allow_shift = true;
  long max_shift = 100000;

  long guard_digits() const;
  long working_digits() const { return digits + guard_digits(); }
  Precision working_precision() const { return Precision::digits(working_digits()); }
  void validate() const;  // throws DomainError
};

struct EvaluationReport {
  BigReal value;
  long terms_used = 0;
  BigReal est_error;
  long precision_used = 0;  // decimal digits of working precision
  double elapsed = 0.0;     // seconds
  long shift = 0;           // arguments skipped by the recurrence shift
};

class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, EvaluationReport partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const EvaluationReport& partial() const { return partial_; }

 private:
  EvaluationReport partial_;
};

// c_k = (-1)^k sum_{l=1}^{k} (-1)^l a_l S_k(l) for k = 1..K, exact.
StirlingCoefficients weniger_transform(const InnerCoefficients& a, long K);
// Same with the serial reference kernel.
StirlingCoefficients weniger_transform_serial(const InnerCoefficients& a, long K);

// (x)_k = x(x+1)...(x+k-1)
BigReal pochhammer(const BigReal& x, long k);

// Adaptive partial sum of sum_k c_k / denominator_k. Throws NonConvergence
// when max_terms is reached before the stop rule fires.
EvaluationReport eval_stirling_series(CoefficientSequence& c, const BigReal& x, DenominatorShape shape,
                                      const EvalContext& ctx);
EvaluationReport eval_stirling_series(const InnerCoefficients& a, const BigReal& x, DenominatorShape shape,
                                      const EvalContext& ctx);
EvaluationReport eval_stirling_series(const StirlingCoefficients& c, const BigReal& x, DenominatorShape shape,
                                      const EvalContext& ctx);

// The individual terms c_k / denominator_k for k = 1..K at precision p.
std::vector<BigReal> stirling_terms(CoefficientSequence& c, const BigReal& x, DenominatorShape shape, long K,
                                    Precision p);

struct ConsistencyReport {
  BigReal power_sum;     // sum_{l=1}^{K} a_l / x^{l+1}
  BigReal stirling_sum;  // sum_{k=1}^{K} c_k / (x)_{k+1}
  BigReal difference;    // stirling_sum - power_sum
};

ConsistencyReport verify_transform_consistency(const InnerCoefficients& a, const BigReal& x, long K, long digits);

}  // namespace stirsum
