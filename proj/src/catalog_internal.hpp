#pragma once

#include <optional>

#include "stirsum/catalog.hpp"

namespace stirsum::detail {

// Right-hand side of one formula at n, split so that constant recovery can
// solve for a head constant.
struct DirectParts {
  BigReal head;           // head terms, without those carrying `skip`
  BigReal skip_factor;    // sum of the skipped terms with the constant set to 1
  BigReal series;         // sum over parts of prefactor * Stirling sum
  long terms_used = 0;
  BigReal est_error;
  double magnitude = 0;   // log10 of the largest component, for cancellation checks
};

// Throws NonConvergence (partial value = head + partial series) if a part
// does not converge within ctx.max_terms.
DirectParts direct_parts(const Formula& f, long n, const EvalContext& ctx,
                         const std::optional<ConstantId>& skip = std::nullopt);

BigReal head_term_value(const HeadTerm& h, long n, Precision p, long constant_digits,
                        const std::optional<ConstantId>& skip = std::nullopt);

// sum_{k=first}^{last} of the formula's summand at precision p.
BigReal summand_sum(const Formula& f, long first, long last, Precision p);

// Left-hand side at n, exact where possible, at precision p.
BigReal lhs_value(const Formula& f, long n, Precision p);

// Next argument to try after a non-convergent attempt at N.
long next_argument(long N);

}  // namespace stirsum::detail
