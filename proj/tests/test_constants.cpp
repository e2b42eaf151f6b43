#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

#include "oracles.hpp"
#include "stirsum/catalog.hpp"
#include "stirsum/constants.hpp"
#include "stirsum/errors.hpp"

using namespace stirsum;

namespace {

std::string reference_text(const std::string& key) { return *ReferenceDigits::instance().find(key); }

bool matches_reference(const BigReal& v, const std::string& key, long digits) {
  return v.truncated_digits(digits) == oracle::significant(reference_text(key), digits);
}

}  // namespace

TEST_CASE("reference digits load with checksum") {
  const auto& r = ReferenceDigits::instance();
  for (const char* key : {"gamma", "stieltjes1", "pi", "log2", "log_pi", "log_2pi", "zeta(2)", "zeta(3)", "zeta(1/2)",
                          "zeta(3/2)", "zeta(5/2)", "zeta(7/2)", "zeta(-1/2)", "zeta_prime(-1)", "zeta_prime(2)"}) {
    INFO(key);
    REQUIRE(r.find(key).has_value());
    CHECK(oracle::significant(*r.find(key), 2000).size() >= 1000);
  }
}

TEST_CASE("tampered reference file is rejected") {
  const auto src = ReferenceDigits::default_path();
  std::string text = oracle::read_file(src);
  const auto pos = text.find("gamma 0.57721");
  REQUIRE(pos != std::string::npos);
  text[pos + 10] = '8';
  const auto tmp = std::filesystem::temp_directory_path() / "stirsum_tampered_reference.txt";
  std::ofstream(tmp) << text;
  CHECK_THROWS(ReferenceDigits::load(tmp));
  std::filesystem::remove(tmp);
  CHECK_THROWS(ReferenceDigits::load("/nonexistent/reference.txt"));
}

TEST_CASE("reference path honours the environment override") {
  ::setenv("STIRSUM_REFERENCE_DIGITS", "/tmp/elsewhere.txt", 1);
  CHECK(ReferenceDigits::default_path() == std::filesystem::path("/tmp/elsewhere.txt"));
  ::unsetenv("STIRSUM_REFERENCE_DIGITS");
  CHECK(ReferenceDigits::default_path().filename() == "reference_digits.txt");
}

TEST_CASE("constant ids") {
  CHECK(ConstantId::parse("zeta(3/2)") == ConstantId::zeta(Rational(3, 2)));
  CHECK(ConstantId::parse("zeta_prime(-1)").str() == "zeta_prime(-1)");
  CHECK(ConstantId::parse("gamma") == ConstantId::gamma());
  CHECK_THROWS_AS(ConstantId::zeta(Rational(5)).validate(), DomainError);
  CHECK_THROWS_AS(ConstantId::zeta_prime(Rational(3)).validate(), DomainError);
  CHECK_THROWS_AS(get_constant(ConstantId::zeta(Rational(4)), 20), DomainError);
  CHECK_THROWS_AS(ConstantId::parse("zeta(x)"), DomainError);
}

TEST_CASE("get_constant examples") {
  const Precision p = Precision::digits(50);
  const BigReal z2 = get_constant(ConstantId::zeta(2), 30);
  const BigReal pi = elementary_pi(40);
  CHECK(agrees_to_digits(z2, pi * pi / BigReal(6, p), 30));
  CHECK(get_constant(ConstantId::gamma(), 50).truncated_digits(50) ==
        "57721566490153286060651209008240243104215933593992");
  CHECK(agrees_to_digits(get_constant(ConstantId::log_2pi(), 30),
                         get_constant(ConstantId::log2(), 35) + get_constant(ConstantId::log_pi(), 35), 30));
}

TEST_CASE("elementary functions") {
  const Precision p = Precision::digits(30);
  CHECK(elementary_log(BigReal(1, p), 30).is_zero());
  CHECK(elementary_power(BigReal(4, p), Rational(3, 2), 30) == BigReal(8, p));
  CHECK(elementary_pi(50).str(51) == "3.14159265358979323846264338327950288419716939937511");
  CHECK_THROWS_AS(elementary_log(BigReal(-1, p), 30), DomainError);
  CHECK_THROWS_AS(elementary_power(BigReal(0, p), Rational(1, 2), 30), DomainError);
}

TEST_CASE("recover_constant examples") {
  const auto g = recover_constant({1, 1}, 0, 100);
  CHECK(g.constant == ConstantId::gamma());
  CHECK(g.n0_requested == 110);
  CHECK(matches_reference(g.value, "gamma", 100));

  const Precision p = Precision::digits(40);
  const auto z2 = recover_constant({2, 1}, 40, 30);
  const BigReal pi = elementary_pi(40);
  CHECK(agrees_to_digits(z2.value, pi * pi / BigReal(6, p), 30));

  const auto g1 = recover_constant({12, 1}, 60, 50);
  CHECK(g1.constant == ConstantId::stieltjes1());
  CHECK(matches_reference(g1.value, "stieltjes1", 50));

  CHECK_THROWS_AS(recover_constant({1, 1}, 1, 30), DomainError);
}

TEST_CASE("recovery needs the other head constants of item 14") {
  ConstantStore::global().clear();
  CHECK_THROWS_AS(recover_constant({14, 1}, 0, 30), DomainError);
  const auto r = recover_constant({14, 1}, 0, 30, true);
  CHECK(r.constant == ConstantId::stieltjes1());
  CHECK(matches_reference(r.value, "stieltjes1", 30));
  CHECK_NOTHROW(recover_constant({14, 1}, 0, 30));
}

TEST_CASE("every recoverable constant matches its reference") {
  for (const auto& id : all_formulas()) {
    const Formula& f = describe(id);
    if (!f.recover_target || f.recover_target->elementary()) continue;
    for (long digits : {40L, 100L}) {
      INFO(id.str() << " digits=" << digits);
      const auto r = recover_constant(id, 0, digits, true);
      CHECK(matches_reference(r.value, r.constant.str(), digits));
    }
  }
}

TEST_CASE("recovery is stable in the recovery point") {
  for (const auto& id : all_formulas()) {
    const Formula& f = describe(id);
    if (!f.recover_target) continue;
    INFO(id.str());
    const auto a = recover_constant(id, 50, 40, true);
    const auto b = recover_constant(id, 57, 40, true);
    CHECK(agrees_to_digits(a.value, b.value, 38, 1.0));
  }
}

TEST_CASE("item 4 constant matches zeta(-1/2)") {
  const Precision p = Precision::digits(60);
  const BigReal z32 = recover_constant({4, 1}, 0, 50, true).value;
  const BigReal c = -z32 / (BigReal(4, p) * elementary_pi(60));
  CHECK(agrees_to_digits(c, ReferenceDigits::instance().value("zeta(-1/2)", p), 40));
}

TEST_CASE("cache monotonicity") {
  auto& store = ConstantStore::global();
  store.clear();
  const BigReal hi = store.get(ConstantId::zeta(3), 80);
  const long after = store.computations();
  const BigReal lo = store.get(ConstantId::zeta(3), 40);
  CHECK(store.computations() == after);
  CHECK(agrees_to_digits(lo, hi, 40));
  CHECK(store.cached(ConstantId::zeta(3), 80).has_value());
  CHECK_FALSE(store.cached(ConstantId::zeta(3), 81).has_value());
  store.get(ConstantId::zeta(3), 90);
  CHECK(store.computations() == after + 1);
}

TEST_CASE("concurrent constant requests") {
  ConstantStore::global().clear();
  const std::vector<ConstantId> ids{ConstantId::gamma(),          ConstantId::zeta(2),
                                    ConstantId::zeta(Rational(1, 2)), ConstantId::zeta(Rational(5, 2)),
                                    ConstantId::zeta_prime(-1),   ConstantId::log_pi()};
  std::vector<std::string> got(ids.size() * 2);
  std::vector<std::thread> pool;
  for (size_t i = 0; i < got.size(); ++i)
    pool.emplace_back([&, i] { got[i] = get_constant(ids[i % ids.size()], 45).truncated_digits(45); });
  for (auto& t : pool) t.join();
  for (size_t i = 0; i < ids.size(); ++i) {
    INFO(ids[i].str());
    CHECK(got[i] == got[i + ids.size()]);
    CHECK(got[i] == oracle::significant(reference_text(ids[i].str()), 45));
  }
}
