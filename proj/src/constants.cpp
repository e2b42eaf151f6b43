#include "stirsum/constants.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <zlib.h>

#include "catalog_internal.hpp"
#include "stirsum/catalog.hpp"
#include "stirsum/errors.hpp"

#ifndef STIRSUM_DATA_DIR
#define STIRSUM_DATA_DIR "data"
#endif

namespace stirsum {
namespace {

const std::vector<Rational>& zeta_points() {
  static const std::vector<Rational> s = {Rational(2), Rational(3), Rational(1, 2),
                                          Rational(3, 2), Rational(5, 2), Rational(7, 2)};
  return s;
}

const std::vector<Rational>& zeta_prime_points() {
  static const std::vector<Rational> s = {Rational(-1), Rational(2)};
  return s;
}

bool contains(const std::vector<Rational>& v, const Rational& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

std::string rational_arg(const Rational& s) {
  return s.is_integer() ? s.num().get_str() : s.num().get_str() + "/" + s.den().get_str();
}

}  // namespace

ConstantId ConstantId::parse(const std::string& text) {
  static const std::map<std::string, Tag> plain = {
      {"gamma", Tag::gamma}, {"stieltjes1", Tag::stieltjes1}, {"pi", Tag::pi},
      {"log2", Tag::log2},   {"log_pi", Tag::log_pi},         {"log_2pi", Tag::log_2pi}};
  if (const auto it = plain.find(text); it != plain.end()) return {it->second, {}};
  for (const auto& [prefix, tag] : {std::pair{std::string("zeta("), Tag::zeta},
                                    std::pair{std::string("zeta_prime("), Tag::zeta_prime}}) {
    if (text.size() > prefix.size() + 1 && text.compare(0, prefix.size(), prefix) == 0 && text.back() == ')') {
      const ConstantId id{tag, Rational::parse(text.substr(prefix.size(), text.size() - prefix.size() - 1))};
      id.validate();
      return id;
    }
  }
  throw DomainError("unknown constant '" + text + "'");
}

std::string ConstantId::str() const {
  switch (tag) {
    case Tag::gamma: return "gamma";
    case Tag::stieltjes1: return "stieltjes1";
    case Tag::pi: return "pi";
    case Tag::log2: return "log2";
    case Tag::log_pi: return "log_pi";
    case Tag::log_2pi: return "log_2pi";
    case Tag::zeta: return "zeta(" + rational_arg(s) + ")";
    case Tag::zeta_prime: return "zeta_prime(" + rational_arg(s) + ")";
  }
  return "?";
}

bool ConstantId::elementary() const {
  return tag == Tag::pi || tag == Tag::log2 || tag == Tag::log_pi || tag == Tag::log_2pi;
}

void ConstantId::validate() const {
  if (tag == Tag::zeta && !contains(zeta_points(), s)) {
    throw DomainError("zeta(" + rational_arg(s) + ") is not provided");
  }
  if (tag == Tag::zeta_prime && !contains(zeta_prime_points(), s)) {
    throw DomainError("zeta_prime(" + rational_arg(s) + ") is not provided");
  }
}

ReferenceDigits ReferenceDigits::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open reference digits file " + path.string());
  std::string header;
  std::getline(in, header);
  std::stringstream rest;
  rest << in.rdbuf();
  const std::string body = rest.str();

  std::istringstream hs(header);
  std::string word, algo, hex;
  hs >> word >> algo >> hex;
  if (word != "checksum" || algo != "crc32" || hex.empty()) {
    throw std::runtime_error("reference digits file lacks a checksum line: " + path.string());
  }
  const unsigned long expected = std::stoul(hex, nullptr, 16);
  const unsigned long actual =
      crc32(0L, reinterpret_cast<const Bytef*>(body.data()), static_cast<uInt>(body.size()));
  if (expected != actual) throw std::runtime_error("reference digits checksum mismatch in " + path.string());

  ReferenceDigits out;
  std::istringstream lines(body);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    const auto sp = line.find(' ');
    if (sp == std::string::npos) throw std::runtime_error("malformed reference line: " + line);
    out.entries_[line.substr(0, sp)] = line.substr(sp + 1);
  }
  return out;
}

std::filesystem::path ReferenceDigits::default_path() {
  if (const char* env = std::getenv("STIRSUM_REFERENCE_DIGITS"); env && *env) return env;
  return std::filesystem::path(STIRSUM_DATA_DIR) / "reference_digits.txt";
}

const ReferenceDigits& ReferenceDigits::instance() {
  static const ReferenceDigits r = load(default_path());
  return r;
}

std::optional<std::string> ReferenceDigits::find(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

BigReal ReferenceDigits::value(const std::string& key, Precision p) const {
  const auto s = find(key);
  if (!s) throw DomainError("no reference digits for '" + key + "'");
  return BigReal::parse(*s, p);
}

ConstantStore& ConstantStore::global() {
  static ConstantStore store;
  return store;
}

std::mutex& ConstantStore::slot_mutex(const ConstantId& id) {
  std::lock_guard lock(slots_mu_);
  auto& slot = slots_[id];
  if (!slot) slot = std::make_unique<std::mutex>();
  return *slot;
}

std::optional<BigReal> ConstantStore::cached(const ConstantId& id, long digits) const {
  std::shared_lock lock(mu_);
  const auto it = cache_.find(id);
  if (it == cache_.end() || it->second.digits < digits) return std::nullopt;
  return it->second.value;
}

void ConstantStore::put(const ConstantId& id, long digits, const BigReal& value) {
  std::unique_lock lock(mu_);
  auto& e = cache_[id];
  if (e.digits < digits) e = {digits, value};
}

long ConstantStore::computations() const {
  std::shared_lock lock(mu_);
  return computations_;
}

void ConstantStore::clear() {
  std::unique_lock lock(mu_);
  cache_.clear();
  computations_ = 0;
}

BigReal ConstantStore::get(const ConstantId& id, long digits) {
  if (digits < 1) throw DomainError("digits must be >= 1");
  id.validate();
  const Precision p = Precision::digits(digits);
  if (auto v = cached(id, digits)) return v->with_precision(p);

  std::lock_guard slot(slot_mutex(id));
  if (auto v = cached(id, digits)) return v->with_precision(p);

  BigReal value;
  const Precision wp = Precision::digits(digits + 10);
  switch (id.tag) {
    case ConstantId::Tag::pi:
      value = stirsum::pi(wp);
      break;
    case ConstantId::Tag::log2:
      value = log2_constant(wp);
      break;
    case ConstantId::Tag::log_pi:
      value = log(stirsum::pi(wp));
      break;
    case ConstantId::Tag::log_2pi:
      value = log(stirsum::pi(wp) * 2);
      break;
    default:
      value = recover_constant(FormulaId::parse(recovery_source(id)), 0, digits).value;
      break;
  }
  {
    std::unique_lock lock(mu_);
    ++computations_;
  }
  put(id, digits, value);
  return value.with_precision(p);
}

BigReal get_constant(const ConstantId& id, long digits) { return ConstantStore::global().get(id, digits); }

std::string recovery_source(const ConstantId& id) {
  switch (id.tag) {
    case ConstantId::Tag::gamma: return "1.1";
    case ConstantId::Tag::stieltjes1: return "12.1";
    case ConstantId::Tag::pi: return "15.1";
    case ConstantId::Tag::log2: return "16.1";
    case ConstantId::Tag::log_pi:
    case ConstantId::Tag::log_2pi: return "10.1";
    case ConstantId::Tag::zeta:
      if (id.s == Rational(2)) return "2.1";
      if (id.s == Rational(3)) return "3.1";
      if (id.s == Rational(1, 2)) return "7.1";
      if (id.s == Rational(3, 2)) return "8.1";
      if (id.s == Rational(5, 2)) return "9.1";
      if (id.s == Rational(7, 2)) return "6.1";
      break;
    case ConstantId::Tag::zeta_prime:
      if (id.s == Rational(-1)) return "11.1";
      if (id.s == Rational(2)) return "13.1";
      break;
  }
  throw DomainError("no recovery formula for " + id.str());
}

RecoveryResult recover_constant(const FormulaId& fid, long n0, long digits, bool resolve) {
  const auto start = std::chrono::steady_clock::now();
  if (digits < 1) throw DomainError("digits must be >= 1");
  const Formula& f = describe(fid);
  if (!f.recover_target) throw DomainError("formula " + fid.str() + " has no recoverable constant");
  const ConstantId target = *f.recover_target;
  if (n0 <= 0) n0 = digits + 10;
  if (n0 < 2) throw DomainError("recovery needs n0 >= 2");

  EvalContext ctx;
  ctx.digits = digits;
  ctx.allow_shift = false;
  for (const auto& c : f.constants) {
    if (c == target || c.elementary() || resolve) continue;
    if (!ConstantStore::global().cached(c, ctx.working_digits())) {
      throw DomainError("formula " + fid.str() + " has more than one unknown constant (" + c.str() +
                        " is not cached); recover it first or resolve it from the store");
    }
  }

  for (int attempt = 0;; ++attempt) {
    long N = n0;
    const double plan =
        plan_argument(static_cast<double>(n0), ctx.working_digits(), ctx.max_terms, EvalContext{}.max_shift);
    std::optional<detail::DirectParts> parts;
    bool planned = false;
    while (!parts) {
      try {
        parts = detail::direct_parts(f, N, ctx, target);
      } catch (const NonConvergence&) {
        long next = detail::next_argument(N);
        if (!planned && plan > 0) next = std::max(next, static_cast<long>(std::ceil(plan)));
        planned = true;
        if (next - n0 > EvalContext{}.max_shift) throw;
        N = next;
      }
    }
    const Precision p = ctx.working_precision();
    const BigReal lhs = detail::lhs_value(f, N, p);
    const BigReal rest = lhs - parts->head - parts->series;
    double mag = std::max(parts->magnitude, lhs.is_zero() ? -1e300 : lhs.log10_abs());
    const double loss = rest.is_zero() ? 0.0 : mag - rest.log10_abs();
    if (attempt == 0 && loss > static_cast<double>(ctx.guard_digits()) / 2.0) {
      ctx.guard = ctx.guard_digits() + static_cast<long>(std::ceil(loss)) + 5;
      continue;
    }
    RecoveryResult r;
    r.constant = target;
    r.value = rest / parts->skip_factor;
    r.n0_requested = n0;
    r.n0_used = N;
    r.terms_used = parts->terms_used;
    r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
}

BigReal elementary_log(const BigReal& x, long digits) {
  return log(x.with_precision(Precision::digits(digits + 5))).with_precision(Precision::digits(digits));
}

BigReal elementary_pi(long digits) { return pi(Precision::digits(digits)); }

BigReal elementary_power(const BigReal& x, const Rational& r, long digits) {
  return power(x.with_precision(Precision::digits(digits + 5)), r).with_precision(Precision::digits(digits));
}

}  // namespace stirsum
