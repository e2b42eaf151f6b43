#include "stirsum/asymptotics.hpp"

#include <algorithm>

#include "stirsum/errors.hpp"
#include "stirsum/exactnum.hpp"

namespace stirsum {

LogPowerSum normalize(LogPowerSum f) {
  std::map<std::pair<long, Rational>, Rational> merged;
  for (auto& t : f) {
    if (t.m < 0) throw DomainError("negative log power");
    merged[{t.m, t.s}] += t.coef;
  }
  LogPowerSum out;
  for (auto& [key, coef] : merged) {
    if (!coef.is_zero()) out.push_back({coef, key.second, key.first});
  }
  std::sort(out.begin(), out.end(), [](const LogPowerTerm& a, const LogPowerTerm& b) {
    return a.m != b.m ? a.m > b.m : a.s > b.s;
  });
  return out;
}

LogPowerSum differentiate(const LogPowerSum& f) {
  LogPowerSum out;
  for (const auto& t : f) {
    if (!t.s.is_zero()) out.push_back({t.coef * t.s, t.s - 1, t.m});
    if (t.m > 0) out.push_back({t.coef * Rational(t.m), t.s - 1, t.m - 1});
  }
  return normalize(std::move(out));
}

Rational EMTail::coefficient(long j, const Rational& e) const {
  const auto g = groups.find(j);
  if (g == groups.end()) return Rational();
  const auto it = g->second.find(e);
  return it == g->second.end() ? Rational() : it->second;
}

EMTail em_tail(const LogPowerSum& f, long L) {
  if (L < 1) throw DomainError("em_tail needs L >= 1");
  EMTail tail;
  auto add = [&](const LogPowerSum& g, const Rational& w) {
    for (const auto& t : g) {
      auto& slot = tail.groups[t.m][t.s];
      slot += w * t.coef;
    }
  };
  LogPowerSum deriv = normalize(f);
  add(deriv, -exactnum::bernoulli(1));
  for (long k = 2; k <= L + 1; ++k) {
    deriv = differentiate(deriv);
    const Rational b = exactnum::bernoulli(k);
    if (b.is_zero()) continue;
    add(deriv, b / Rational(exactnum::factorial(k)));
  }
  for (auto& [j, group] : tail.groups) {
    std::erase_if(group, [](const auto& kv) { return kv.second.is_zero(); });
  }
  std::erase_if(tail.groups, [](const auto& kv) { return kv.second.empty(); });
  return tail;
}

Rational em_inner(const EMTail& tail, long j, const Rational& p, DenominatorShape shape, long l) {
  if (l < 1) throw DomainError("inner coefficients start at l = 1");
  const Rational e = shape == DenominatorShape::at_x ? p - Rational(l + 1) : p - Rational(l);
  return tail.coefficient(j, e);
}

BooleFamily parse_boole_family(const std::string& name) {
  if (name == "gregory_leibniz") return BooleFamily::gregory_leibniz;
  if (name == "alt_harmonic") return BooleFamily::alt_harmonic;
  throw DomainError("unknown Boole family '" + name + "'");
}

InnerCoefficients boole_tail(BooleFamily family, long L) {
  if (L < 1) throw DomainError("boole_tail needs L >= 1");
  switch (family) {
    case BooleFamily::gregory_leibniz:
      return {[](long l) {
                const Rational e(exactnum::euler_number(l));
                const Rational v = e / Rational(2).pow(l);
                return l % 2 == 0 ? -v : v;
              },
              std::nullopt};
    case BooleFamily::alt_harmonic:
      return {[](long l) {
                const long q = (l * l + l) / 2;
                BigInt pow2;
                mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(l + 1));
                const Rational v = Rational(BigInt(pow2 - 1)) * exactnum::bernoulli(l + 1).abs() / Rational(l + 1);
                return q % 2 == 0 ? v : -v;
              },
              std::nullopt};
  }
  throw DomainError("unknown Boole family");
}

}  // namespace stirsum
