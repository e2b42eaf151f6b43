#include "stirsum/catalog.hpp"

#include <charconv>
#include <sstream>

#include "stirsum/errors.hpp"
#include "stirsum/exactnum.hpp"

namespace stirsum {
namespace {

Rational B(long k) { return exactnum::bernoulli(k); }
Rational df(long m) { return exactnum::double_factorial_ext(m); }
Rational fact(long n) { return Rational(exactnum::factorial(n)); }
Rational pow2(long e) { return Rational(2).pow(e); }
Rational alt(long l) { return l % 2 == 0 ? Rational(1) : Rational(-1); }

HeadTerm nterm(Rational coef, Rational n_power, long log_power = 0) {
  HeadTerm h;
  h.coef = std::move(coef);
  h.n_power = std::move(n_power);
  h.log_power = log_power;
  return h;
}

HeadTerm cterm(Rational coef, std::vector<std::pair<ConstantId, long>> constants) {
  HeadTerm h;
  h.coef = std::move(coef);
  h.constants = std::move(constants);
  return h;
}

struct PartSpec {
  std::string name = "plain";
  long log_power = 0;
  Rational n_power;
  DenominatorShape shape = DenominatorShape::at_x;
  Rational scale{1};
  int sign = 1;
  std::function<Rational(long)> summand;
  std::string text;
  std::optional<Parity> parity;
  long x_offset = 0;
};

SeriesPart make_part(PartSpec spec) {
  SeriesPart p;
  p.name = spec.name;
  p.log_power = spec.log_power;
  p.n_power = spec.n_power;
  p.parity = spec.parity;
  p.x_offset = spec.x_offset;
  p.shape = spec.shape;
  p.scale = spec.scale;
  p.sign = spec.sign;
  p.summand = spec.summand;
  p.summand_text = spec.text;
  const Rational factor = spec.sign > 0 ? spec.scale : -spec.scale;
  auto summand = spec.summand;
  p.inner = {[factor, summand](long l) { return factor * alt(l) * summand(l); }, std::nullopt};
  p.coefficients = std::make_shared<CoefficientSequence>(p.inner);
  return p;
}

LogPowerSum f_power(Rational s, long m = 0) { return {{Rational(1), std::move(s), m}}; }

const ConstantId kGamma = ConstantId::gamma();
const ConstantId kPi = ConstantId::pi();

ConstantId zeta(long p, long q = 1) { return ConstantId::zeta(Rational(p, q)); }

void finish(Formula& f) {
  for (const auto& h : f.head) {
    for (const auto& [c, power] : h.constants) {
      (void)power;
      if (std::find(f.constants.begin(), f.constants.end(), c) == f.constants.end()) f.constants.push_back(c);
    }
  }
}

std::vector<Formula> build_table() {
  std::vector<Formula> t;
  auto add = [&](Formula f) {
    finish(f);
    t.push_back(std::move(f));
  };
  const auto at_x = DenominatorShape::at_x;
  const auto at_x1 = DenominatorShape::at_x_plus_1;

  // 1: harmonic numbers
  {
    Formula base;
    base.title = "harmonic series";
    base.lhs = "sum_{k=1}^{n} 1/k";
    base.summand = Summand::reciprocal;
    base.recover_target = kGamma;
    base.em_function = f_power(-1);

    Formula f = base;
    f.id = {1, 1};
    f.head = {nterm(1, 0, 1), cterm(1, {{kGamma, 1}}), nterm(Rational(1, 2), -1)};
    f.series = {make_part({.n_power = 0, .shape = at_x, .sign = -1,
                           .summand = [](long l) { return alt(l) * B(l + 1) / Rational(l + 1); },
                           .text = "(-1)^l B_{l+1}/(l+1)"})};
    add(f);

    f = base;
    f.id = {1, 2};
    f.head = {nterm(1, 0, 1), cterm(1, {{kGamma, 1}})};
    f.series = {make_part({.n_power = 0, .shape = at_x1, .sign = -1,
                           .summand = [](long l) { return alt(l) * B(l) / Rational(l); },
                           .text = "(-1)^l B_l/l"})};
    add(f);
  }

  // 2: zeta(2) partial sums
  {
    Formula base;
    base.title = "partial sums of zeta(2)";
    base.lhs = "sum_{k=1}^{n} 1/k^2";
    base.summand = Summand::reciprocal_square;
    base.recover_target = zeta(2);
    base.em_function = f_power(-2);

    Formula f = base;
    f.id = {2, 1};
    f.head = {cterm(1, {{zeta(2), 1}}), nterm(-1, -1), nterm(Rational(1, 2), -2)};
    f.series = {make_part({.n_power = -1, .shape = at_x, .sign = -1,
                           .summand = [](long l) { return alt(l) * B(l + 1); },
                           .text = "(-1)^l B_{l+1}"})};
    add(f);

    f = base;
    f.id = {2, 2};
    f.head = {cterm(1, {{zeta(2), 1}}), nterm(-1, -1)};
    f.series = {make_part({.n_power = 0, .shape = at_x, .sign = -1,
                           .summand = [](long l) { return alt(l) * B(l); },
                           .text = "(-1)^l B_l"})};
    add(f);
  }

  // 3: zeta(3) partial sums
  {
    Formula base;
    base.title = "partial sums of zeta(3)";
    base.lhs = "sum_{k=1}^{n} 1/k^3";
    base.summand = Summand::reciprocal_cube;
    base.recover_target = zeta(3);
    base.em_function = f_power(-3);

    Formula f = base;
    f.id = {3, 1};
    f.head = {cterm(1, {{zeta(3), 1}}), nterm(Rational(-1, 2), -2), nterm(Rational(1, 2), -3)};
    f.series = {make_part({.n_power = -2, .shape = at_x, .scale = Rational(1, 2), .sign = -1,
                           .summand = [](long l) { return alt(l) * Rational(l + 2) * B(l + 1); },
                           .text = "(-1)^l (l+2) B_{l+1}"})};
    add(f);

    f = base;
    f.id = {3, 2};
    f.head = {cterm(1, {{zeta(3), 1}}), nterm(Rational(-1, 2), -2)};
    f.series = {make_part({.n_power = -1, .shape = at_x, .scale = Rational(1, 2), .sign = -1,
                           .summand = [](long l) { return alt(l) * Rational(l + 1) * B(l); },
                           .text = "(-1)^l (l+1) B_l"})};
    add(f);
  }

  // 4: sums of square roots
  {
    Formula base;
    base.title = "sums of square roots";
    base.lhs = "sum_{k=0}^{n} sqrt(k)";
    base.sum_start = 0;
    base.domain_min = 0;
    base.summand = Summand::sqrt;
    base.recover_target = zeta(3, 2);
    base.em_function = f_power(Rational(1, 2));
    const HeadTerm lead = nterm(Rational(2, 3), Rational(3, 2));
    const HeadTerm cz = cterm(Rational(-1, 4), {{zeta(3, 2), 1}, {kPi, -1}});

    Formula f = base;
    f.id = {4, 1};
    f.head = {lead, nterm(Rational(1, 2), Rational(1, 2)), cz};
    f.series = {make_part({.n_power = Rational(1, 2), .shape = at_x1, .sign = 1,
                           .summand = [](long l) { return alt(l) * df(2 * l - 3) / (pow2(l) * fact(l + 1)) * B(l + 1); },
                           .text = "(-1)^l (2l-3)!!/(2^l (l+1)!) B_{l+1}"})};
    add(f);

    f = base;
    f.id = {4, 2};
    f.head = {lead, nterm(Rational(1, 2), Rational(1, 2)), cz, nterm(Rational(1, 24), Rational(-1, 2))};
    f.series = {make_part({.n_power = Rational(-1, 2), .shape = at_x1, .sign = 1,
                           .summand = [](long l) { return alt(l) * df(2 * l - 1) / (pow2(l + 1) * fact(l + 2)) * B(l + 2); },
                           .text = "(-1)^l (2l-1)!!/(2^{l+1} (l+2)!) B_{l+2}"})};
    add(f);

    f = base;
    f.id = {4, 3};
    f.head = {lead, cz};
    f.series = {make_part({.n_power = Rational(3, 2), .shape = at_x1, .sign = 1,
                           .summand = [](long l) { return alt(l) * df(2 * l - 5) / (pow2(l - 1) * fact(l)) * B(l); },
                           .text = "(-1)^l (2l-5)!!/(2^{l-1} l!) B_l"})};
    add(f);
  }

  // 5: sums of k sqrt(k)
  {
    Formula base;
    base.title = "partial sums of zeta(-3/2)";
    base.lhs = "sum_{k=0}^{n} k sqrt(k)";
    base.sum_start = 0;
    base.domain_min = 0;
    base.summand = Summand::k_sqrt;
    base.recover_target = zeta(5, 2);
    base.em_function = f_power(Rational(3, 2));
    const HeadTerm lead = nterm(Rational(2, 5), Rational(5, 2));
    const HeadTerm cz = cterm(Rational(-3, 16), {{zeta(5, 2), 1}, {kPi, -2}});

    Formula f = base;
    f.id = {5, 1};
    f.head = {lead, nterm(Rational(1, 2), Rational(3, 2)), cz};
    f.series = {make_part({.n_power = Rational(3, 2), .shape = at_x1, .scale = Rational(3, 2), .sign = -1,
                           .summand = [](long l) { return alt(l) * df(2 * l - 5) / (pow2(l - 1) * fact(l + 1)) * B(l + 1); },
                           .text = "(-1)^l (2l-5)!!/(2^{l-1} (l+1)!) B_{l+1}"})};
    add(f);

    f = base;
    f.id = {5, 2};
    f.head = {lead, nterm(Rational(1, 2), Rational(3, 2)), nterm(Rational(1, 8), Rational(1, 2)), cz};
    f.series = {make_part({.n_power = Rational(-1, 2), .shape = at_x1, .scale = Rational(3, 2), .sign = -1,
                           .summand = [](long l) { return alt(l) * df(2 * l - 1) / (pow2(l + 1) * fact(l + 3)) * B(l + 3); },
                           .text = "(-1)^l (2l-1)!!/(2^{l+1} (l+3)!) B_{l+3}"})};
    add(f);

    f = base;
    f.id = {5, 3};
    f.head = {lead, cz};
    f.series = {make_part({.n_power = Rational(5, 2), .shape = at_x1, .scale = Rational(3, 2), .sign = -1,
                           .summand = [](long l) { return alt(l) * df(2 * l - 7) / (pow2(l - 2) * fact(l)) * B(l); },
                           .text = "(-1)^l (2l-7)!!/(2^{l-2} l!) B_l"})};
    add(f);
  }

  // 6: sums of k^2 sqrt(k)
  {
    Formula base;
    base.title = "partial sums of zeta(-5/2)";
    base.lhs = "sum_{k=0}^{n} k^2 sqrt(k)";
    base.sum_start = 0;
    base.domain_min = 0;
    base.summand = Summand::k2_sqrt;
    base.recover_target = zeta(7, 2);
    base.em_function = f_power(Rational(5, 2));
    const HeadTerm lead = nterm(Rational(2, 7), Rational(7, 2));
    const HeadTerm cz = cterm(Rational(15, 64), {{zeta(7, 2), 1}, {kPi, -3}});

    Formula f = base;
    f.id = {6, 1};
    f.head = {lead, nterm(Rational(1, 2), Rational(5, 2)), cz};
    f.series = {make_part({.n_power = Rational(5, 2), .shape = at_x1, .scale = Rational(15, 4), .sign = 1,
                           .summand = [](long l) { return alt(l) * df(2 * l - 7) / (pow2(l - 2) * fact(l + 1)) * B(l + 1); },
                           .text = "(-1)^l (2l-7)!!/(2^{l-2} (l+1)!) B_{l+1}"})};
    add(f);

    f = base;
    f.id = {6, 2};
    f.head = {lead, nterm(Rational(1, 2), Rational(5, 2)), nterm(Rational(5, 24), Rational(3, 2)), cz,
              nterm(Rational(-1, 384), Rational(-1, 2))};
    f.series = {make_part({.n_power = Rational(-1, 2), .shape = at_x1, .scale = Rational(15, 4), .sign = 1,
                           .summand = [](long l) { return alt(l) * df(2 * l - 1) / (pow2(l + 1) * fact(l + 4)) * B(l + 4); },
                           .text = "(-1)^l (2l-1)!!/(2^{l+1} (l+4)!) B_{l+4}"})};
    add(f);

    f = base;
    f.id = {6, 3};
    f.head = {lead, cz};
    f.series = {make_part({.n_power = Rational(7, 2), .shape = at_x1, .scale = Rational(15, 4), .sign = 1,
                           .summand = [](long l) { return alt(l) * df(2 * l - 9) / (pow2(l - 3) * fact(l)) * B(l); },
                           .text = "(-1)^l (2l-9)!!/(2^{l-3} l!) B_l"})};
    add(f);
  }

  // 7: sums of inverse square roots
  {
    Formula base;
    base.title = "sums of inverse square roots";
    base.lhs = "sum_{k=1}^{n} 1/sqrt(k)";
    base.summand = Summand::inv_sqrt;
    base.recover_target = zeta(1, 2);
    base.em_function = f_power(Rational(-1, 2));

    Formula f = base;
    f.id = {7, 1};
    f.head = {nterm(2, Rational(1, 2)), cterm(1, {{zeta(1, 2), 1}}), nterm(Rational(1, 2), Rational(-1, 2))};
    f.series = {make_part({.n_power = Rational(-1, 2), .shape = at_x1, .sign = -1,
                           .summand = [](long l) { return alt(l) * df(2 * l - 1) / (pow2(l) * fact(l + 1)) * B(l + 1); },
                           .text = "(-1)^l (2l-1)!!/(2^l (l+1)!) B_{l+1}"})};
    add(f);

    f = base;
    f.id = {7, 2};
    f.head = {nterm(2, Rational(1, 2)), cterm(1, {{zeta(1, 2), 1}})};
    f.series = {make_part({.n_power = Rational(1, 2), .shape = at_x1, .sign = -1,
                           .summand = [](long l) { return alt(l) * df(2 * l - 3) / (pow2(l - 1) * fact(l)) * B(l); },
                           .text = "(-1)^l (2l-3)!!/(2^{l-1} l!) B_l"})};
    add(f);
  }

  // 8: zeta(3/2) partial sums
  {
    Formula base;
    base.title = "partial sums of zeta(3/2)";
    base.lhs = "sum_{k=1}^{n} 1/(k sqrt(k))";
    base.summand = Summand::inv_k_sqrt;
    base.recover_target = zeta(3, 2);
    base.em_function = f_power(Rational(-3, 2));

    Formula f = base;
    f.id = {8, 1};
    f.head = {cterm(1, {{zeta(3, 2), 1}}), nterm(-2, Rational(-1, 2)), nterm(Rational(1, 2), Rational(-3, 2))};
    f.series = {make_part({.n_power = Rational(-1, 2), .shape = at_x, .scale = 2, .sign = -1,
                           .summand = [](long l) { return alt(l) * df(2 * l + 1) / (pow2(l + 1) * fact(l + 1)) * B(l + 1); },
                           .text = "(-1)^l (2l+1)!!/(2^{l+1} (l+1)!) B_{l+1}"})};
    add(f);

    f = base;
    f.id = {8, 2};
    f.head = {cterm(1, {{zeta(3, 2), 1}}), nterm(-2, Rational(-1, 2))};
    f.series = {make_part({.n_power = Rational(-1, 2), .shape = at_x1, .scale = 2, .sign = -1,
                           .summand = [](long l) { return alt(l) * df(2 * l - 1) / (pow2(l) * fact(l)) * B(l); },
                           .text = "(-1)^l (2l-1)!!/(2^l l!) B_l"})};
    add(f);
  }

  // 9: zeta(5/2) partial sums
  {
    Formula base;
    base.title = "partial sums of zeta(5/2)";
    base.lhs = "sum_{k=1}^{n} 1/(k^2 sqrt(k))";
    base.summand = Summand::inv_k2_sqrt;
    base.recover_target = zeta(5, 2);
    base.em_function = f_power(Rational(-5, 2));

    Formula f = base;
    f.id = {9, 1};
    f.head = {cterm(1, {{zeta(5, 2), 1}}), nterm(Rational(-2, 3), Rational(-3, 2)),
              nterm(Rational(1, 2), Rational(-5, 2))};
    f.series = {make_part({.n_power = Rational(-3, 2), .shape = at_x, .scale = Rational(4, 3), .sign = -1,
                           .summand = [](long l) { return alt(l) * df(2 * l + 3) / (pow2(l + 2) * fact(l + 1)) * B(l + 1); },
                           .text = "(-1)^l (2l+3)!!/(2^{l+2} (l+1)!) B_{l+1}"})};
    add(f);

    f = base;
    f.id = {9, 2};
    f.head = {cterm(1, {{zeta(5, 2), 1}}), nterm(Rational(-2, 3), Rational(-3, 2))};
    f.series = {make_part({.n_power = Rational(-1, 2), .shape = at_x, .scale = Rational(4, 3), .sign = -1,
                           .summand = [](long l) { return alt(l) * df(2 * l + 1) / (pow2(l + 1) * fact(l)) * B(l); },
                           .text = "(-1)^l (2l+1)!!/(2^{l+1} l!) B_l"})};
    add(f);
  }

  // 10: log n!
  {
    Formula base;
    base.title = "convergent Stirling formulas";
    base.lhs = "sum_{k=1}^{n} log(k)";
    base.summand = Summand::log;
    base.recover_target = ConstantId::log_2pi();
    base.em_function = f_power(0, 1);
    const std::vector<HeadTerm> head = {nterm(1, 1, 1), nterm(-1, 1),
                                        cterm(Rational(1, 2), {{ConstantId::log_2pi(), 1}}),
                                        nterm(Rational(1, 2), 0, 1)};

    Formula f = base;
    f.id = {10, 1};
    f.head = head;
    f.series = {make_part({.n_power = 0, .shape = at_x1, .sign = 1,
                           .summand = [](long l) { return alt(l) * B(l + 1) / Rational(l * (l + 1)); },
                           .text = "(-1)^l B_{l+1}/(l(l+1))"})};
    add(f);

    f = base;
    f.id = {10, 2};
    f.head = head;
    f.head.push_back(nterm(Rational(1, 12), -1));
    f.series = {make_part({.n_power = 0, .shape = at_x, .sign = 1,
                           .summand = [](long l) { return alt(l) * B(l + 2) / Rational((l + 1) * (l + 2)); },
                           .text = "(-1)^l B_{l+2}/((l+1)(l+2))"})};
    add(f);

    f = base;
    f.id = {10, 3};
    f.head = head;
    f.series = {make_part({.n_power = 1, .shape = at_x1, .sign = 1,
                           .summand = [](long l) { return l < 2 ? Rational() : alt(l) * B(l) / Rational(l * (l - 1)); },
                           .text = "(-1)^l B_l/(l(l-1)), l >= 2"})};
    add(f);
  }

  // 11: sum k log k
  {
    Formula base;
    base.title = "first logarithmic sum";
    base.lhs = "sum_{k=0}^{n} k log(k)";
    base.sum_start = 0;
    base.summand = Summand::k_log;
    base.recover_target = ConstantId::zeta_prime(-1);
    base.em_function = f_power(1, 1);
    base.head = {nterm(Rational(1, 2), 2, 1), nterm(Rational(-1, 4), 2), nterm(Rational(1, 2), 1, 1),
                 nterm(Rational(1, 12), 0, 1), nterm(Rational(1, 12), 0),
                 cterm(-1, {{ConstantId::zeta_prime(-1), 1}})};

    Formula f = base;
    f.id = {11, 1};
    f.series = {make_part({.n_power = 0, .shape = at_x1, .sign = -1,
                           .summand = [](long l) { return alt(l) * B(l + 2) / Rational(l * (l + 1) * (l + 2)); },
                           .text = "(-1)^l B_{l+2}/(l(l+1)(l+2))"})};
    add(f);

    f = base;
    f.id = {11, 2};
    f.series = {make_part({.n_power = 0, .shape = at_x, .sign = -1,
                           .summand = [](long l) { return alt(l) * B(l + 3) / Rational((l + 1) * (l + 2) * (l + 3)); },
                           .text = "(-1)^l B_{l+3}/((l+1)(l+2)(l+3))"})};
    add(f);
  }

  // 12: sum log k / k
  {
    Formula f;
    f.id = {12, 1};
    f.title = "second logarithmic sum";
    f.lhs = "sum_{k=1}^{n} log(k)/k";
    f.summand = Summand::log_over_k;
    f.recover_target = ConstantId::stieltjes1();
    f.em_function = f_power(-1, 1);
    f.head = {nterm(Rational(1, 2), 0, 2), nterm(Rational(1, 2), -1, 1), cterm(1, {{ConstantId::stieltjes1(), 1}})};
    f.series = {
        make_part({.n_power = 0, .shape = at_x, .sign = 1,
                   .summand = [](long l) {
                     return alt(l) * B(l + 1) * Rational(exactnum::stirling_first(l + 1, 2)) / fact(l + 1);
                   },
                   .text = "(-1)^l B_{l+1} S_{l+1}(2)/(l+1)!"}),
        make_part({.name = "log", .log_power = 1, .n_power = 0, .shape = at_x, .sign = 1,
                   .summand = [](long l) { return B(l + 1) / Rational(l + 1); },
                   .text = "B_{l+1}/(l+1)"}),
    };
    add(f);
  }

  // 13: sum log k / k^2
  {
    Formula f;
    f.id = {13, 1};
    f.title = "third logarithmic sum";
    f.lhs = "sum_{k=1}^{n} log(k)/k^2";
    f.summand = Summand::log_over_k2;
    f.recover_target = ConstantId::zeta_prime(2);
    f.em_function = f_power(-2, 1);
    f.head = {cterm(-1, {{ConstantId::zeta_prime(2), 1}}), nterm(-1, -1, 1), nterm(-1, -1),
              nterm(Rational(1, 2), -2, 1)};
    f.series = {
        make_part({.n_power = -1, .shape = at_x, .sign = -1,
                   .summand = [](long l) {
                     Rational h;
                     for (long m = 0; m < l; ++m) h += Rational(m + 1, l - m);
                     return h * B(l + 1) / Rational(l + 1);
                   },
                   .text = "(1/(l+1)) (sum_{m=0}^{l-1} (m+1)/(l-m)) B_{l+1}"}),
        make_part({.name = "log", .log_power = 1, .n_power = -1, .shape = at_x, .sign = 1,
                   .summand = [](long l) { return B(l + 1); },
                   .text = "B_{l+1}"}),
    };
    add(f);
  }

  // 14: sum log^2 k
  {
    Formula f;
    f.id = {14, 1};
    f.title = "fourth logarithmic sum";
    f.lhs = "sum_{k=1}^{n} log(k)^2";
    f.summand = Summand::log_squared;
    f.recover_target = ConstantId::stieltjes1();
    f.em_function = f_power(0, 2);
    const auto l2 = ConstantId::log2();
    const auto lp = ConstantId::log_pi();
    f.head = {nterm(1, 1, 2),
              nterm(-2, 1, 1),
              nterm(2, 1),
              nterm(Rational(1, 2), 0, 2),
              nterm(Rational(1, 6), -1, 1),
              cterm(Rational(1, 2), {{kGamma, 2}}),
              cterm(Rational(-1, 24), {{kPi, 2}}),
              cterm(Rational(-1, 2), {{l2, 2}}),
              cterm(-1, {{l2, 1}, {lp, 1}}),
              cterm(Rational(-1, 2), {{lp, 2}}),
              cterm(1, {{ConstantId::stieltjes1(), 1}})};
    f.series = {
        make_part({.n_power = 0, .shape = at_x, .scale = 2, .sign = 1,
                   .summand = [](long l) {
                     return alt(l) * B(l + 2) * Rational(exactnum::stirling_first(l + 1, 2)) / fact(l + 2);
                   },
                   .text = "(-1)^l B_{l+2} S_{l+1}(2)/(l+2)!"}),
        make_part({.name = "log", .log_power = 1, .n_power = 0, .shape = at_x, .scale = 2, .sign = 1,
                   .summand = [](long l) { return B(l + 2) / Rational((l + 1) * (l + 2)); },
                   .text = "B_{l+2}/((l+1)(l+2))"}),
    };
    add(f);
  }

  // 15: Gregory-Leibniz partial sums
  {
    auto gregory = [](long l) { return alt(l) * Rational(exactnum::euler_number(l)) / pow2(l); };
    Formula f;
    f.title = "Gregory-Leibniz series";
    f.alternating = true;
    f.summand = Summand::gregory_from_zero;
    f.recover_target = kPi;

    f.id = {15, 1};
    f.lhs = "sum_{k=0}^{n} (-1)^k/(2k+1)";
    f.sum_start = 0;
    f.domain_min = 0;
    HeadTerm tail = nterm(Rational(-1, 4), -1);
    tail.n_offset = 1;
    tail.parity = Parity{1};
    f.head = {cterm(Rational(1, 4), {{kPi, 1}}), tail};
    f.series = {make_part({.n_power = 0, .shape = at_x, .scale = Rational(1, 4), .sign = -1,
                           .summand = gregory, .text = "(-1)^l E_l/2^l", .parity = Parity{1}, .x_offset = 1})};
    add(f);

    f.id = {15, 2};
    f.lhs = "sum_{k=1}^{n} (-1)^(k+1)/(2k-1)";
    f.sum_start = 1;
    f.domain_min = 1;
    f.summand = Summand::gregory_from_one;
    f.constants.clear();
    tail = nterm(Rational(-1, 4), -1);
    tail.parity = Parity{0};
    f.head = {cterm(Rational(1, 4), {{kPi, 1}}), tail};
    f.series = {make_part({.n_power = 0, .shape = at_x, .scale = Rational(1, 4), .sign = -1,
                           .summand = gregory, .text = "(-1)^l E_l/2^l", .parity = Parity{0}})};
    add(f);
  }

  // 16: alternating harmonic series
  {
    Formula f;
    f.id = {16, 1};
    f.title = "alternating harmonic series";
    f.lhs = "sum_{k=1}^{n} (-1)^(k+1)/k";
    f.alternating = true;
    f.summand = Summand::alt_harmonic;
    f.recover_target = ConstantId::log2();
    HeadTerm tail = nterm(Rational(-1, 2), -1);
    tail.parity = Parity{0};
    f.head = {cterm(1, {{ConstantId::log2(), 1}}), tail};
    f.series = {make_part({.n_power = 0, .shape = at_x, .sign = 1,
                           .summand = [](long l) {
                             const long q = (l * l + l) / 2;
                             BigInt p2;
                             mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(l + 1));
                             const Rational v = Rational(BigInt(p2 - 1)) * B(l + 1).abs() / Rational(l + 1);
                             return q % 2 == 0 ? v : -v;
                           },
                           .text = "(-1)^{(l^2+l)/2} (2^{l+1}-1) |B_{l+1}|/(l+1)", .parity = Parity{0}})};
    add(f);
  }
  return t;
}

const std::vector<Formula>& table() {
  static const std::vector<Formula> t = build_table();
  return t;
}

}  // namespace

FormulaId FormulaId::parse(const std::string& text) {
  const auto dot = text.find('.');
  auto to_int = [&](std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw DomainError("malformed formula id '" + text + "'");
    }
    return v;
  };
  FormulaId id;
  if (dot == std::string::npos) {
    id = {to_int(text), 1};
  } else {
    id = {to_int(std::string_view(text).substr(0, dot)), to_int(std::string_view(text).substr(dot + 1))};
  }
  if (!id.valid()) throw DomainError("unknown formula id '" + text + "'");
  return id;
}

std::string FormulaId::str() const { return std::to_string(family) + "." + std::to_string(variant); }

bool FormulaId::valid() const { return variant >= 1 && variant <= variant_count(family); }

int variant_count(int family) {
  switch (family) {
    case 4: case 5: case 6: case 10: return 3;
    case 12: case 13: case 14: case 16: return 1;
    case 1: case 2: case 3: case 7: case 8: case 9: case 11: case 15: return 2;
    default: return 0;
  }
}

std::vector<FormulaId> all_formulas() {
  std::vector<FormulaId> out;
  for (int f = 1; f <= 16; ++f) {
    for (int v = 1; v <= variant_count(f); ++v) out.push_back({f, v});
  }
  return out;
}

std::vector<FormulaId> family_formulas(int family) {
  if (variant_count(family) == 0) throw DomainError("unknown formula family " + std::to_string(family));
  std::vector<FormulaId> out;
  for (int v = 1; v <= variant_count(family); ++v) out.push_back({family, v});
  return out;
}

std::string HeadTerm::str() const {
  std::ostringstream os;
  os << coef.str();
  for (const auto& [c, p] : constants) {
    os << " * " << c.str();
    if (p != 1) os << "^" << p;
  }
  const std::string base = n_offset == 0 ? "n" : "(n+" + std::to_string(n_offset) + ")";
  if (!n_power.is_zero()) os << " * " << base << "^" << n_power.str();
  if (log_power > 0) os << " * log(n)^" << log_power;
  if (parity) os << " * (-1)^(n+" << parity->offset << ")";
  return os.str();
}

const SeriesPart& Formula::part(const std::string& name) const {
  for (const auto& p : series) {
    if (p.name == name) return p;
  }
  throw DomainError("formula " + id.str() + " has no '" + name + "' series");
}

const Formula& describe(const FormulaId& id) {
  if (!id.valid()) throw DomainError("unknown formula id " + id.str());
  for (const auto& f : table()) {
    if (f.id == id) return f;
  }
  throw DomainError("unknown formula id " + id.str());
}

std::vector<Rational> coefficients(const FormulaId& id, long K, const std::string& part) {
  if (K < 1) throw DomainError("coefficient count must be >= 1");
  return describe(id).part(part).coefficients->prefix(K);
}

}  // namespace stirsum
