// stirsum command-line front end.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stirsum/catalog.hpp"
#include "stirsum/errors.hpp"
#include "stirsum/kernels.hpp"

using namespace stirsum;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNonConvergence = 3;

// One output record: ordered string fields, rendered as a json line or as
// "key value" text lines.
class Record {
 public:
  Record& set(const std::string& key, std::string value) {
    fields_.emplace_back(key, std::move(value));
    return *this;
  }
  Record& set_list(const std::string& key, std::vector<std::string> values) {
    lists_.emplace_back(key, std::move(values));
    return *this;
  }

  void print(std::ostream& os, bool json) const {
    if (json) {
      ojson j = ojson::object();
      for (const auto& [k, v] : fields_) j[k] = v;
      for (const auto& [k, v] : lists_) j[k] = v;
      os << j.dump() << "\n";
      return;
    }
    for (const auto& [k, v] : fields_) os << k << " " << v << "\n";
    for (const auto& [k, v] : lists_) {
      os << k;
      for (const auto& s : v) os << " " << s;
      os << "\n";
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
  std::vector<std::pair<std::string, std::vector<std::string>>> lists_;
};

std::string ms(double seconds) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << seconds * 1000.0;
  return os.str();
}

std::string sci(const BigReal& x) { return x.is_zero() ? "0" : x.str(3); }

// Accepts "1000000" and "1e6".
long parse_count(const std::string& text) {
  try {
    size_t pos = 0;
    const long v = std::stol(text, &pos);
    if (pos == text.size()) return v;
  } catch (const std::exception&) {
  }
  try {
    size_t pos = 0;
    const double d = std::stod(text, &pos);
    if (pos == text.size() && d == std::floor(d) && std::fabs(d) < 9e15) return static_cast<long>(d);
  } catch (const std::exception&) {
  }
  throw DomainError("not an integer: '" + text + "'");
}

Record report_record(const std::string& command, const EvaluationReport& r, long digits) {
  Record rec;
  rec.set("command", command);
  rec.set("value", r.value.str(digits));
  rec.set("terms_used", std::to_string(r.terms_used));
  rec.set("est_error", sci(r.est_error));
  rec.set("precision_used", std::to_string(r.precision_used));
  rec.set("shift", std::to_string(r.shift));
  rec.set("elapsed_ms", ms(r.elapsed));
  return rec;
}

struct Common {
  bool json = false;
};

int cmd_list(const Common& c, int family) {
  const auto ids = family == 0 ? all_formulas() : family_formulas(family);
  for (const auto& id : ids) {
    const Formula& f = describe(id);
    std::vector<std::string> consts;
    for (const auto& k : f.constants) consts.push_back(k.str());
    if (c.json) {
      Record rec;
      rec.set("id", id.str()).set("lhs", f.lhs).set("title", f.title).set("domain_min", std::to_string(f.domain_min));
      rec.set("parts", std::to_string(f.series.size()));
      rec.set_list("constants", consts);
      rec.print(std::cout, true);
    } else {
      std::string joined;
      for (const auto& s : consts) joined += (joined.empty() ? "" : ",") + s;
      std::cout << id.str() << "\t" << f.lhs << "\t" << (joined.empty() ? "-" : joined) << "\t" << f.domain_min
                << "\n";
    }
  }
  return kExitOk;
}

int cmd_coeffs(const Common& c, const std::string& id_text, long K, const std::string& part) {
  if (K < 1) throw DomainError("-k must be >= 1");
  const FormulaId id = FormulaId::parse(id_text);
  const auto cs = coefficients(id, K, part);
  if (c.json) {
    std::vector<std::string> out;
    for (const auto& q : cs) out.push_back(q.str());
    Record rec;
    rec.set("command", "coeffs").set("id", id.str()).set("part", part).set_list("coefficients", out);
    rec.print(std::cout, true);
  } else {
    for (long k = 1; k <= K; ++k) std::cout << k << " " << cs[static_cast<size_t>(k - 1)].str() << "\n";
  }
  return kExitOk;
}

int cmd_eval(const Common& c, const std::string& id_text, const std::string& n_text, EvalContext ctx, bool compare) {
  const FormulaId id = FormulaId::parse(id_text);
  const long n = parse_count(n_text);
  try {
    const auto r = evaluate(id, n, ctx);
    Record rec = report_record("eval", r, ctx.digits);
    rec.set("id", id.str()).set("n", std::to_string(n)).set("digits", std::to_string(ctx.digits));
    if (compare) {
      const BigReal b = brute_force(id, n, ctx.digits + 10);
      rec.set("brute_force", b.str(ctx.digits));
      rec.set("difference", sci((r.value - b).abs()));
    }
    rec.print(std::cout, c.json);
    return kExitOk;
  } catch (const NonConvergence& e) {
    Record rec = report_record("eval", e.partial(), ctx.digits);
    rec.set("id", id.str()).set("n", std::to_string(n)).set("digits", std::to_string(ctx.digits));
    rec.set("status", "non-convergence").set("error", e.what());
    rec.print(std::cout, c.json);
    return kExitNonConvergence;
  }
}

int cmd_digamma(const Common& c, const std::string& x_text, EvalContext ctx) {
  const BigReal x = BigReal::parse(x_text, ctx.working_precision());
  if (x.sign() <= 0) throw DomainError("digamma needs x > 0");
  try {
    const auto r = digamma_report(x, ctx);
    Record rec = report_record("digamma", r, ctx.digits);
    rec.set("x", x_text).set("digits", std::to_string(ctx.digits));
    rec.print(std::cout, c.json);
    return kExitOk;
  } catch (const NonConvergence& e) {
    Record rec = report_record("digamma", e.partial(), ctx.digits);
    rec.set("x", x_text).set("status", "non-convergence").set("error", e.what());
    rec.print(std::cout, c.json);
    return kExitNonConvergence;
  }
}

int cmd_recover(const Common& c, const std::string& id_text, long digits, long n0, bool resolve) {
  const FormulaId id = FormulaId::parse(id_text);
  try {
    const auto r = recover_constant(id, n0, digits, resolve);
    Record rec;
    rec.set("command", "recover").set("id", id.str()).set("constant", r.constant.str());
    rec.set("value", r.value.str(digits)).set("digits", std::to_string(digits));
    rec.set("n0", std::to_string(r.n0_used)).set("n0_requested", std::to_string(r.n0_requested));
    rec.set("terms_used", std::to_string(r.terms_used)).set("elapsed_ms", ms(r.elapsed));
    if (const auto ref = ReferenceDigits::instance().find(r.constant.str())) {
      const BigReal rv = BigReal::parse(*ref, Precision::digits(digits + 20));
      rec.set("reference_match", r.value.truncated_digits(digits) == rv.truncated_digits(digits) ? "true" : "false");
    }
    rec.print(std::cout, c.json);
    return kExitOk;
  } catch (const NonConvergence& e) {
    Record rec;
    rec.set("command", "recover").set("id", id.str()).set("status", "non-convergence").set("error", e.what());
    rec.print(std::cout, c.json);
    return kExitNonConvergence;
  }
}

struct VerifyRow {
  FormulaId id;
  bool pass = true;
  bool converged = true;
  std::string max_diff = "0";
  std::vector<std::string> ns;
  std::string error;
};

int cmd_verify(const Common& c, bool all, int family, const std::vector<std::string>& n_texts, long digits) {
  if (!all && family == 0) throw DomainError("verify needs --all or --family");
  const auto ids = all ? all_formulas() : family_formulas(family);
  std::vector<long> fixed;
  for (const auto& t : n_texts) fixed.push_back(parse_count(t));
  EvalContext ctx;
  ctx.digits = digits;
  const Precision p = Precision::digits(digits + 10);
  const BigReal tol = pow10(-(digits - 5), p);

  std::vector<VerifyRow> rows(ids.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (size_t i = 0; i < ids.size(); ++i) {
    VerifyRow& row = rows[i];
    row.id = ids[i];
    const Formula& f = describe(row.id);
    std::vector<long> ns = fixed;
    if (ns.empty()) ns = {f.domain_min + 2, 10, 100};
    BigReal worst(p);
    try {
      for (long n : ns) {
        row.ns.push_back(std::to_string(n));
        const auto r = evaluate(row.id, n, ctx);
        const BigReal d = (r.value - brute_force(row.id, n, digits + 10)).abs();
        if (d > worst) worst = d;
      }
      row.max_diff = sci(worst);
      row.pass = worst < tol;
    } catch (const NonConvergence& e) {
      row.pass = false;
      row.converged = false;
      row.error = e.what();
    } catch (const std::exception& e) {
      row.pass = false;
      row.error = e.what();
    }
  }

  bool ok = true;
  bool converged = true;
  for (const auto& row : rows) {
    ok = ok && row.pass;
    converged = converged && row.converged;
    Record rec;
    rec.set("command", "verify").set("id", row.id.str()).set("status", row.pass ? "pass" : "fail");
    rec.set("max_difference", row.max_diff).set("digits", std::to_string(digits));
    rec.set_list("n", row.ns);
    if (!row.error.empty()) rec.set("error", row.error);
    if (c.json) {
      rec.print(std::cout, true);
    } else {
      std::string ns;
      for (const auto& s : row.ns) ns += (ns.empty() ? "" : ",") + s;
      std::cout << row.id.str() << "\t" << (row.pass ? "pass" : "FAIL") << "\tmax_diff=" << row.max_diff
                << "\tn=" << ns << (row.error.empty() ? "" : "\t" + row.error) << "\n";
    }
  }
  if (!converged) return kExitNonConvergence;
  return ok ? kExitOk : 1;
}

int cmd_bench(const Common& c, const std::string& target, const std::string& x_text, const std::string& id_text,
              const std::string& n_text, long digits, int repeat) {
  if (repeat < 1) throw DomainError("-r must be >= 1");
  EvalContext ctx;
  ctx.digits = digits;
  std::vector<double> times;
  long terms = 0;
  std::string label;
  for (int i = 0; i < repeat; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    if (target == "digamma") {
      const BigReal x = BigReal::parse(x_text, ctx.working_precision());
      terms = digamma_report(x, ctx).terms_used;
      label = "x=" + x_text;
    } else if (target == "eval") {
      const FormulaId id = FormulaId::parse(id_text);
      terms = evaluate(id, parse_count(n_text), ctx).terms_used;
      label = id.str() + " n=" + n_text;
    } else {
      throw DomainError("bench target must be 'digamma' or 'eval'");
    }
    times.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  std::vector<double> sorted = times;
  std::sort(sorted.begin(), sorted.end());
  const double median = sorted.size() % 2 == 1
                            ? sorted[sorted.size() / 2]
                            : (sorted[sorted.size() / 2 - 1] + sorted[sorted.size() / 2]) / 2.0;
  Record rec;
  rec.set("command", "bench").set("target", target).set("params", label).set("digits", std::to_string(digits));
  rec.set("repeat", std::to_string(repeat)).set("median_ms", ms(median)).set("min_ms", ms(sorted.front()));
  rec.set("terms_used", std::to_string(terms)).set("threads", std::to_string(kernels::max_threads()));
  rec.print(std::cout, c.json);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convergent Stirling-series summation formulas, digamma and constants"};
  app.require_subcommand(1);
  Common common;
  int threads = 0;
  app.add_flag("--json", common.json, "Emit json lines");
  app.add_option("--threads", threads, "OpenMP thread count")->check(CLI::PositiveNumber);

  int list_family = 0;
  auto* list = app.add_subcommand("list", "List the formula variants");
  list->add_option("--family", list_family, "Only this family");

  std::string id_text;
  long K = 0;
  std::string part = "plain";
  auto* coeffs = app.add_subcommand("coeffs", "Exact Stirling coefficients c_1..c_K");
  coeffs->add_option("id", id_text, "Formula id such as 4.1")->required();
  coeffs->add_option("-k", K, "Number of coefficients")->required();
  coeffs->add_option("--part", part, "Series part: plain or log");

  std::string n_text;
  EvalContext ctx;
  bool compare = false;
  bool no_shift = false;
  auto add_ctx = [&](CLI::App* sub) {
    sub->add_option("-d,--digits", ctx.digits, "Decimal digits");
    sub->add_option("--max-terms", ctx.max_terms, "Series term cap");
    sub->add_option("--guard", ctx.guard, "Guard digits (default 10 + digits/10)");
    sub->add_flag("--no-shift", no_shift, "Evaluate the series at the argument itself");
  };
  auto* eval = app.add_subcommand("eval", "Evaluate a formula at n");
  eval->add_option("id", id_text, "Formula id")->required();
  eval->add_option("-n", n_text, "Argument n")->required();
  eval->add_flag("--compare", compare, "Also print the brute-force sum and the difference");
  add_ctx(eval);

  std::string x_text;
  auto* dig = app.add_subcommand("digamma", "Digamma function psi(x)");
  dig->add_option("x", x_text, "Argument, e.g. 1e10")->required();
  add_ctx(dig);

  long n0 = 0;
  long rec_digits = 30;
  bool resolve = false;
  auto* rec = app.add_subcommand("recover", "Recover a formula's head constant");
  rec->add_option("id", id_text, "Formula id")->required();
  rec->add_option("-d,--digits", rec_digits, "Decimal digits");
  rec->add_option("--n0", n0, "Recovery point (default digits + 10)");
  rec->add_flag("--resolve", resolve, "Fetch other head constants instead of requiring them cached");

  bool verify_all = false;
  int verify_family = 0;
  std::vector<std::string> verify_n;
  long verify_digits = 30;
  auto* ver = app.add_subcommand("verify", "Check formulas against brute-force sums");
  ver->add_flag("--all", verify_all, "All 32 variants");
  ver->add_option("--family", verify_family, "One family");
  ver->add_option("-n", verify_n, "Arguments (default domain_min+2, 10, 100)");
  ver->add_option("-d,--digits", verify_digits, "Decimal digits");

  std::string bench_target;
  std::string bench_x = "1e10";
  std::string bench_id = "1.1";
  std::string bench_n = "1000";
  long bench_digits = 30;
  int bench_repeat = 3;
  auto* bench = app.add_subcommand("bench", "Time digamma or eval");
  bench->add_option("target", bench_target, "digamma or eval")->required();
  bench->add_option("--x", bench_x, "digamma argument");
  bench->add_option("--id", bench_id, "eval formula id");
  bench->add_option("-n", bench_n, "eval argument");
  bench->add_option("-d,--digits", bench_digits, "Decimal digits");
  bench->add_option("-r,--repeat", bench_repeat, "Repetitions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (threads > 0) kernels::set_threads(threads);
    ctx.allow_shift = !no_shift;
    if (*list) return cmd_list(common, list_family);
    if (*coeffs) return cmd_coeffs(common, id_text, K, part);
    if (*eval) return cmd_eval(common, id_text, n_text, ctx, compare);
    if (*dig) return cmd_digamma(common, x_text, ctx);
    if (*rec) return cmd_recover(common, id_text, rec_digits, n0, resolve);
    if (*ver) return cmd_verify(common, verify_all, verify_family, verify_n, verify_digits);
    if (*bench) return cmd_bench(common, bench_target, bench_x, bench_id, bench_n, bench_digits, bench_repeat);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NonConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNonConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
