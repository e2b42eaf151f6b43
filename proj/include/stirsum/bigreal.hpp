#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <mpfr.h>

#include "stirsum/rational.hpp"

namespace stirsum {

// Working precision of a BigReal, stored in bits but usually requested in
// decimal digits.
struct Precision {
  mpfr_prec_t bits = 64;

  static Precision digits(long decimal_digits);
  long decimal_digits() const;
  friend bool operator==(const Precision&, const Precision&) = default;
  friend auto operator<=>(const Precision&, const Precision&) = default;
};

// Arbitrary-precision binary float (MPFR), round-to-nearest throughout.
// Binary operations produce a result at the larger operand precision.
class BigReal {
 public:
  BigReal() : BigReal(Precision{}) {}
  explicit BigReal(Precision p);
  BigReal(long value, Precision p);
  BigReal(const Rational& value, Precision p);
  BigReal(const BigInt& value, Precision p);
  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  // Decimal literal such as "1e10", "-0.25", "3". Throws DomainError.
  static BigReal parse(std::string_view text, Precision p);

  Precision precision() const { return Precision{mpfr_get_prec(v_)}; }
  // Rounds in place to a new precision.
  void set_precision(Precision p);
  BigReal with_precision(Precision p) const;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  BigReal abs() const;
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // log10|x| as a double; -inf for zero.
  double log10_abs() const;
  // Nearest integer, throws DomainError if it does not fit in a long.
  long to_long() const;
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }

  // Decimal rendering with `digits` significant digits (rounded). Fixed
  // notation for moderate exponents, scientific otherwise.
  std::string str(long digits) const;
  // The first `digits` significant decimal digits, truncated toward zero,
  // with no sign or point. Used for exact-prefix comparisons.
  std::string truncated_digits(long digits) const;

  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);
  BigReal& operator+=(long o);
  BigReal& operator-=(long o);
  BigReal& operator*=(long o);
  BigReal& operator/=(long o);

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  friend BigReal operator+(BigReal a, long b) { return a += b; }
  friend BigReal operator-(BigReal a, long b) { return a -= b; }
  friend BigReal operator*(BigReal a, long b) { return a *= b; }
  friend BigReal operator/(BigReal a, long b) { return a /= b; }
  friend BigReal operator-(const BigReal& a);

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);

 private:
  mpfr_t v_;
};

std::ostream& operator<<(std::ostream& os, const BigReal& x);

// Elementary functions at the argument's precision.
BigReal sqrt(const BigReal& x);
BigReal log(const BigReal& x);          // DomainError for x <= 0
BigReal exp(const BigReal& x);
BigReal power(const BigReal& x, const Rational& r);  // DomainError for x <= 0
BigReal pow10(long exponent, Precision p);
BigReal pi(Precision p);
BigReal log2_constant(Precision p);

// |a - b| <= 10^-digits * max(|b|, floor), a relative test with an absolute floor.
bool agrees_to_digits(const BigReal& a, const BigReal& b, long digits, double floor = 0.0);

}  // namespace stirsum
