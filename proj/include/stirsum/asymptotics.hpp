#pragma once

#include <map>
#include <string>
#include <vector>

#include "stirsum/rational.hpp"
#include "stirsum/transform.hpp"

namespace stirsum {

// coef * x^s * log(x)^m
struct LogPowerTerm {
  Rational coef;
  Rational s;
  long m = 0;

  friend bool operator==(const LogPowerTerm&, const LogPowerTerm&) = default;
};

using LogPowerSum = std::vector<LogPowerTerm>;

// Like terms merged, zero terms dropped, sorted by (m desc, s desc).
LogPowerSum normalize(LogPowerSum f);
LogPowerSum differentiate(const LogPowerSum& f);

// The Euler-Maclaurin tail -B_1 f(n) + sum_{k=2}^{L+1} (B_k/k!) f^{(k-1)}(n),
// collected by log power j. Each group maps exponent -> coefficient.
struct EMTail {
  std::map<long, std::map<Rational, Rational, std::greater<>>> groups;

  // Coefficient of n^e log(n)^j (zero when absent).
  Rational coefficient(long j, const Rational& e) const;
};

EMTail em_tail(const LogPowerSum& f, long L);

// Reads the inverse-power coefficients of one log-power group after pulling
// out the prefactor n^p: a_l is the coefficient of n^{p-l-1} for the at_x
// shape and of n^{p-l} for at_x_plus_1 (whose series carries an extra x).
Rational em_inner(const EMTail& tail, long j, const Rational& p, DenominatorShape shape, long l);

enum class BooleFamily { gregory_leibniz, alt_harmonic };

BooleFamily parse_boole_family(const std::string& name);  // DomainError for unknown names

// Inner coefficients of the two alternating families.
// gregory_leibniz: -(-1)^l E_l / 2^l, the item's (-1)^{k+1} sign folded in, so
// the transform gives c_k before the 1/4 prefactor.
// alt_harmonic: (-1)^{(l^2+l)/2} (2^{l+1}-1) |B_{l+1}| / (l+1) as printed.
InnerCoefficients boole_tail(BooleFamily family, long L);

}  // namespace stirsum
