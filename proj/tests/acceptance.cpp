// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "stirsum/asymptotics.hpp"
#include "stirsum/catalog.hpp"
#include "stirsum/constants.hpp"
#include "stirsum/exactnum.hpp"

using namespace stirsum;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

Outcome golden_coefficients() {
  long parts = 0;
  long matched = 0;
  std::string misses;
  for (const auto& id : all_formulas()) {
    for (const auto& part : describe(id).series) {
      const std::string name = id.str() + (part.name == "log" ? ".log" : "");
      std::ifstream in(std::filesystem::path(oracle::data_dir()) / "golden" / (name + ".txt"));
      std::vector<Rational> golden;
      long k = 0;
      std::string q;
      while (in >> k >> q) golden.push_back(Rational::parse(q));
      ++parts;
      if (golden.size() >= 3 && coefficients(id, static_cast<long>(golden.size()), part.name) == golden) {
        ++matched;
      } else {
        misses += " " + name;
      }
    }
  }
  return {matched == parts && parts == 35,
          std::to_string(matched) + "/" + std::to_string(parts) + " printed series match" + misses};
}

Outcome brute_force_equivalence() {
  EvalContext ctx;
  ctx.digits = 30;
  const Precision p = Precision::digits(50);
  const BigReal tol = pow10(-25, p);
  BigReal worst(p);
  long cases = 0;
  long ok = 0;
  std::string misses;
  for (const auto& id : all_formulas()) {
    for (long n : {describe(id).domain_min + 2, 10L, 100L}) {
      ++cases;
      try {
        const BigReal d = (evaluate(id, n, ctx).value - brute_force(id, n, 40)).abs();
        if (d > worst) worst = d;
        if (d < tol) {
          ++ok;
          continue;
        }
      } catch (const std::exception&) {
      }
      misses += " " + id.str() + "@" + std::to_string(n);
    }
  }
  return {ok == cases, std::to_string(ok) + "/" + std::to_string(cases) + " cases, max |diff| " + worst.str(3) + misses};
}

Outcome cross_derivation() {
  long checked = 0;
  long ok = 0;
  for (const auto& id : all_formulas()) {
    if (id.family > 14) continue;
    const Formula& f = describe(id);
    if (!f.em_function) continue;
    const EMTail tail = em_tail(*f.em_function, 24);
    for (const auto& part : f.series) {
      for (long l = 1; l <= 20; ++l) {
        ++checked;
        if (em_inner(tail, part.log_power, part.n_power, part.shape, l) == part.inner(l)) ++ok;
      }
    }
  }
  return {checked == 640 && ok == checked, std::to_string(ok) + "/" + std::to_string(checked) + " inner coefficients equal"};
}

Outcome constant_recovery() {
  ConstantStore::global().clear();
  struct Want {
    FormulaId id;
    long digits;
  };
  const std::vector<Want> wants{{{1, 1}, 100}, {{8, 1}, 100}, {{12, 1}, 50}, {{11, 1}, 50}, {{13, 1}, 50}};
  long ok = 0;
  std::string detail;
  for (const auto& w : wants) {
    const auto r = recover_constant(w.id, 0, w.digits);
    const std::string key = r.constant.str();
    const bool match = r.value.truncated_digits(w.digits) ==
                       oracle::significant(*ReferenceDigits::instance().find(key), w.digits);
    if (match) ++ok;
    detail += " " + key + (match ? "" : "(mismatch)") + "@" + std::to_string(w.digits);
  }
  return {ok == static_cast<long>(wants.size()), std::to_string(ok) + "/5 match:" + detail};
}

Outcome digamma_claim() {
  EvalContext ctx;
  ctx.digits = 400;
  const Precision p = ctx.working_precision();
  const BigReal x = pow10(10, p);
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = digamma_report(x, ctx);
  const double elapsed = seconds_since(t0);

  EvalContext wide = ctx;
  wide.digits = 420;
  const auto r420 = digamma_report(x.with_precision(wide.working_precision()), wide);
  const bool stable = r.value.truncated_digits(400) == r420.value.truncated_digits(400);

  const auto r1 = digamma_report(x + BigReal(1, p), ctx);
  const bool recurrence = agrees_to_digits(r1.value - r.value, pow10(-10, p), 390);

  std::string detail = "psi(1e10) at 400 digits in " + fmt_seconds(elapsed) + " (" + std::to_string(r.terms_used) +
                       " terms), 420-digit recomputation " + (stable ? "agrees" : "differs") +
                       ", recurrence " + (recurrence ? "holds" : "fails") + " to 390 digits";
  return {elapsed <= 10.0 && stable && recurrence, detail};
}

Outcome convergence_property() {
  std::string nonmono;
  for (const auto& id : all_formulas()) {
    const auto t = term_sequence(id, 25, 201, 40);
    for (long k = 10; k <= 200; ++k) {
      if (!(t[static_cast<size_t>(k)].abs() < t[static_cast<size_t>(k - 1)].abs())) {
        nonmono += " " + id.str() + "(k=" + std::to_string(k) + ")";
        break;
      }
    }
  }
  long triples = 0;
  long bounded = 0;
  for (const auto& id : all_formulas()) {
    for (long n : {10L, 25L, 50L}) {
      const BigReal exact = brute_force(id, n, 70);
      for (long K : {5L, 10L, 20L}) {
        const auto r = evaluate_truncated(id, n, K, 60);
        ++triples;
        if ((r.value - exact).abs() <= r.est_error) ++bounded;
      }
    }
  }
  const double rate = static_cast<double>(bounded) / static_cast<double>(triples);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f%%", 100.0 * rate);
  std::string detail = "monotone at n=25: " + (nonmono.empty() ? std::string("all variants") : "violated by" + nonmono) +
                       "; 2x next-term bound holds in " + std::to_string(bounded) + "/" + std::to_string(triples) +
                       " triples (" + buf + ", need 95%)";
  return {nonmono.empty() && rate >= 0.95, detail};
}

Outcome exactnum_identities() {
  using namespace exactnum;
  std::vector<std::string> bad;
  for (long k = 0; k <= 100; ++k) {
    BigInt s = 0;
    for (const auto& v : stirling_row(k)) s += abs(v);
    if (s != factorial(k)) bad.push_back("stirling row " + std::to_string(k));
  }
  for (long m = 1; 2 * m <= 60; ++m) {
    if (2 * m + 1 <= 60 && !bernoulli(2 * m + 1).is_zero()) bad.push_back("B odd " + std::to_string(2 * m + 1));
    BigInt prod = 1;
    for (long p = 2; p <= 2 * m + 1; ++p) {
      bool prime = true;
      for (long d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
      if (prime && (2 * m) % (p - 1) == 0) prod *= p;
    }
    if (bernoulli(2 * m).den() != prod) bad.push_back("von Staudt-Clausen " + std::to_string(2 * m));
  }
  for (long k = 1; k <= 60; k += 2)
    if (euler_number(k) != 0) bad.push_back("E odd " + std::to_string(k));
  for (long k = 1; k <= 30; ++k)
    if (!tangent_number(k).is_integer()) bad.push_back("tangent " + std::to_string(k));
  if (gregory_number(1) != Rational(1, 2) || gregory_number(2) != Rational(-1, 12) || gregory_number(3) != Rational(1, 24))
    bad.push_back("gregory");
  std::string detail = bad.empty() ? "all identities exact" : std::to_string(bad.size()) + " failures, first: " + bad[0];
  return {bad.empty(), detail};
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "golden coefficient reproduction", 5.0, golden_coefficients},
      {2, "brute-force equivalence", 120.0, brute_force_equivalence},
      {3, "cross-derivation", 30.0, cross_derivation},
      {4, "constant recovery", 60.0, constant_recovery},
      {5, "digamma performance", 1e300, digamma_claim},
      {6, "convergence property", 1e300, convergence_property},
      {7, "exactnum identity suite", 1e300, exactnum_identities},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = seconds_since(t0);
    const bool pass = o.pass && s < c.limit;
    all = all && pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.number << " (" << c.name << "): " << o.detail << " ["
              << fmt_seconds(s) << (c.limit < 1e299 ? ", limit " + fmt_seconds(c.limit) : std::string()) << "]"
              << std::endl;
  }
  return all ? 0 : 1;
}
