#pragma once

#include <compare>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>

#include "stirsum/bigreal.hpp"
#include "stirsum/rational.hpp"

namespace stirsum {

struct ConstantId {
  enum class Tag { gamma, stieltjes1, pi, log2, log_pi, log_2pi, zeta, zeta_prime };

  Tag tag = Tag::gamma;
  Rational s;  // argument of zeta / zeta_prime, zero otherwise

  static ConstantId gamma() { return {Tag::gamma, {}}; }
  static ConstantId stieltjes1() { return {Tag::stieltjes1, {}}; }
  static ConstantId pi() { return {Tag::pi, {}}; }
  static ConstantId log2() { return {Tag::log2, {}}; }
  static ConstantId log_pi() { return {Tag::log_pi, {}}; }
  static ConstantId log_2pi() { return {Tag::log_2pi, {}}; }
  static ConstantId zeta(Rational s) { return {Tag::zeta, std::move(s)}; }
  static ConstantId zeta_prime(Rational s) { return {Tag::zeta_prime, std::move(s)}; }

  // "gamma", "zeta(3/2)", "zeta_prime(-1)", ... Throws DomainError for
  // anything outside the supported set.
  static ConstantId parse(const std::string& text);
  std::string str() const;
  bool elementary() const;  // pi and the logarithms, computed directly
  void validate() const;

  friend bool operator==(const ConstantId&, const ConstantId&) = default;
  friend std::strong_ordering operator<=>(const ConstantId& a, const ConstantId& b) {
    if (a.tag != b.tag) return a.tag <=> b.tag;
    return a.s <=> b.s;
  }
};

// The embedded 1000-digit oracle strings, keyed by the ConstantId spelling
// (plus a few reference-only entries such as "zeta(-1/2)").
class ReferenceDigits {
 public:
  // Parses and checks the crc32 line. Throws std::runtime_error on a bad file.
  static ReferenceDigits load(const std::filesystem::path& path);
  // The file named by STIRSUM_REFERENCE_DIGITS, else the installed data file.
  static const ReferenceDigits& instance();
  static std::filesystem::path default_path();

  std::optional<std::string> find(const std::string& key) const;
  // Reference value rounded to the given precision. Throws DomainError if absent.
  BigReal value(const std::string& key, Precision p) const;
  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

// Shared cache of constant values, read-concurrent and write-serialized.
// Non-elementary constants are recovered from the catalog formulas.
class ConstantStore {
 public:
  static ConstantStore& global();

  BigReal get(const ConstantId& id, long digits);
  // Returns the cached value if one with at least `digits` digits exists.
  std::optional<BigReal> cached(const ConstantId& id, long digits) const;
  void put(const ConstantId& id, long digits, const BigReal& value);
  long computations() const;  // number of cache misses served so far
  void clear();

 private:
  struct Entry {
    long digits = 0;
    BigReal value;
  };
  std::mutex& slot_mutex(const ConstantId& id);

  mutable std::shared_mutex mu_;
  std::map<ConstantId, Entry> cache_;
  std::mutex slots_mu_;
  std::map<ConstantId, std::unique_ptr<std::mutex>> slots_;
  long computations_ = 0;
};

// Served from the global store.
BigReal get_constant(const ConstantId& id, long digits);

// Which catalog formula each non-elementary constant is recovered from.
std::string recovery_source(const ConstantId& id);

struct FormulaId;

struct RecoveryResult {
  ConstantId constant;
  BigReal value;
  long n0_requested = 0;
  long n0_used = 0;
  long terms_used = 0;
  double elapsed = 0.0;
};

// Solves the formula's identity at n0 for its single unknown head constant.
// n0 <= 0 selects the default digits + 10. n0 is raised when the series
// cannot reach `digits` there within the term budget. With `resolve`, head
// constants other than the target are fetched from the store instead of
// being required in its cache.
RecoveryResult recover_constant(const FormulaId& id, long n0, long digits, bool resolve = false);

// log(x), pi, x^r at `digits` decimal digits.
BigReal elementary_log(const BigReal& x, long digits);
BigReal elementary_pi(long digits);
BigReal elementary_power(const BigReal& x, const Rational& r, long digits);

}  // namespace stirsum
