#include "stirsum/bigreal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "stirsum/errors.hpp"

namespace stirsum {
namespace {

constexpr double kLog2Of10 = 3.32192809488736234787;

mpfr_prec_t wider(const BigReal& a, const BigReal& b) {
  return std::max(mpfr_get_prec(a.get()), mpfr_get_prec(b.get()));
}

}  // namespace

Precision Precision::digits(long decimal_digits) {
  if (decimal_digits < 1) throw DomainError("precision must be at least one digit");
  return Precision{static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(decimal_digits) * kLog2Of10)) + 4};
}

long Precision::decimal_digits() const {
  return static_cast<long>(std::floor(static_cast<double>(bits - 4) / kLog2Of10));
}

BigReal::BigReal(Precision p) {
  mpfr_init2(v_, p.bits);
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long value, Precision p) {
  mpfr_init2(v_, p.bits);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigReal::BigReal(const Rational& value, Precision p) {
  mpfr_init2(v_, p.bits);
  mpfr_set_q(v_, value.get().get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const BigInt& value, Precision p) {
  mpfr_init2(v_, p.bits);
  mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::parse(std::string_view text, Precision p) {
  BigReal out(p);
  const std::string s(text);
  if (s.empty()) throw DomainError("empty number");
  char* end = nullptr;
  mpfr_strtofr(out.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0') throw DomainError("not a decimal number: '" + s + "'");
  if (!mpfr_number_p(out.v_)) throw DomainError("not a finite number: '" + s + "'");
  return out;
}

void BigReal::set_precision(Precision p) { mpfr_prec_round(v_, p.bits, MPFR_RNDN); }

BigReal BigReal::with_precision(Precision p) const {
  BigReal out(p);
  mpfr_set(out.v_, v_, MPFR_RNDN);
  return out;
}

BigReal BigReal::abs() const {
  BigReal out(precision());
  mpfr_abs(out.v_, v_, MPFR_RNDN);
  return out;
}

double BigReal::log10_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long exp2 = 0;
  const double mant = mpfr_get_d_2exp(&exp2, v_, MPFR_RNDN);
  return std::log10(std::fabs(mant)) + static_cast<double>(exp2) * 0.30102999566398119521;
}

long BigReal::to_long() const {
  if (!mpfr_fits_slong_p(v_, MPFR_RNDN)) throw DomainError("value does not fit in a machine integer");
  return mpfr_get_si(v_, MPFR_RNDN);
}

std::string BigReal::str(long digits) const {
  if (digits < 1) digits = 1;
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (mant.front() == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  // value = 0.mant * 10^exp10
  const long e = static_cast<long>(exp10);
  if (e >= -8 && e <= digits) {
    if (e <= 0) return sign + "0." + std::string(static_cast<size_t>(-e), '0') + mant;
    if (e >= static_cast<long>(mant.size())) return sign + mant + std::string(static_cast<size_t>(e) - mant.size(), '0');
    return sign + mant.substr(0, static_cast<size_t>(e)) + "." + mant.substr(static_cast<size_t>(e));
  }
  std::string out = sign + mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  return out + "e" + std::to_string(e - 1);
}

std::string BigReal::truncated_digits(long digits) const {
  if (is_zero()) return std::string(static_cast<size_t>(std::max(digits, 1L)), '0');
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), v_, MPFR_RNDZ);
  std::string mant(raw);
  mpfr_free_str(raw);
  if (!mant.empty() && mant.front() == '-') mant.erase(0, 1);
  return mant;
}

BigReal& BigReal::operator+=(const BigReal& o) {
  if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator-=(const BigReal& o) {
  if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(const BigReal& o) {
  if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(const BigReal& o) {
  if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator+=(long o) { mpfr_add_si(v_, v_, o, MPFR_RNDN); return *this; }
BigReal& BigReal::operator-=(long o) { mpfr_sub_si(v_, v_, o, MPFR_RNDN); return *this; }
BigReal& BigReal::operator*=(long o) { mpfr_mul_si(v_, v_, o, MPFR_RNDN); return *this; }
BigReal& BigReal::operator/=(long o) { mpfr_div_si(v_, v_, o, MPFR_RNDN); return *this; }

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal out(Precision{wider(a, b)});
  mpfr_add(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}
BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal out(Precision{wider(a, b)});
  mpfr_sub(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}
BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal out(Precision{wider(a, b)});
  mpfr_mul(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}
BigReal operator/(const BigReal& a, const BigReal& b) {
  BigReal out(Precision{wider(a, b)});
  mpfr_div(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}
BigReal operator-(const BigReal& a) {
  BigReal out(a.precision());
  mpfr_neg(out.v_, a.v_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::ostream& operator<<(std::ostream& os, const BigReal& x) {
  return os << x.str(std::max(1L, x.precision().decimal_digits()));
}

BigReal sqrt(const BigReal& x) {
  if (x.sign() < 0) throw DomainError("square root of a negative number");
  BigReal out(x.precision());
  mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigReal log(const BigReal& x) {
  if (x.sign() <= 0) throw DomainError("logarithm of a nonpositive number");
  BigReal out(x.precision());
  mpfr_log(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigReal exp(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_exp(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigReal power(const BigReal& x, const Rational& r) {
  if (x.sign() <= 0) throw DomainError("power of a nonpositive number");
  if (!r.num().fits_slong_p() || !r.den().fits_ulong_p()) throw DomainError("exponent too large");
  BigReal out(x.precision());
  if (r.is_integer()) {
    mpfr_pow_si(out.get(), x.get(), r.num().get_si(), MPFR_RNDN);
    return out;
  }
  const unsigned long den = r.den().get_ui();
  if (den == 2) {
    mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
  } else {
    mpfr_rootn_ui(out.get(), x.get(), den, MPFR_RNDN);
  }
  mpfr_pow_si(out.get(), out.get(), r.num().get_si(), MPFR_RNDN);
  return out;
}

BigReal pow10(long exponent, Precision p) {
  BigReal out(10, p);
  mpfr_pow_si(out.get(), out.get(), exponent, MPFR_RNDN);
  return out;
}

BigReal pi(Precision p) {
  BigReal out(p);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return out;
}

BigReal log2_constant(Precision p) {
  BigReal out(p);
  mpfr_const_log2(out.get(), MPFR_RNDN);
  return out;
}

bool agrees_to_digits(const BigReal& a, const BigReal& b, long digits, double floor) {
  const Precision p{std::max(a.precision().bits, b.precision().bits)};
  const BigReal diff = (a - b).abs();
  if (diff.is_zero()) return true;
  BigReal scale = b.abs();
  if (floor > 0.0) {
    BigReal f(p);
    mpfr_set_d(f.get(), floor, MPFR_RNDN);
    if (f > scale) scale = f;
  }
  return diff <= scale * pow10(-digits, p);
}

}  // namespace stirsum
