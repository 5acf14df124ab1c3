#include "efflog/enumerate.hpp"

namespace efflog {

namespace {

// Values contributed by level L exactly (L >= 1) at arrow type.
std::vector<Term> arrow_level(const Type& rho, const Type& tau, uint64_t level,
                              const EffectSignature& sig) {
  std::vector<Term> out;
  if (level == 1) {
    out.push_back(Term::lambda("x", rho, Term::diverge(tau)));
    if (rho == tau) out.push_back(Term::lambda("x", rho, Term::ret(Term::var("x"))));
  }
  // bodies "return W" where W first appears at fuel level-1
  std::vector<Term> prev = level >= 2 ? enumerate_values(tau, level - 2, sig) : std::vector<Term>{};
  std::vector<Term> cur = enumerate_values(tau, level - 1, sig);
  for (size_t i = prev.size(); i < cur.size(); ++i)
    out.push_back(Term::lambda("x", rho, Term::ret(cur[i])));
  return out;
}

}  // namespace

std::vector<Term> enumerate_values(const Type& tau, uint64_t fuel, const EffectSignature& sig) {
  switch (tau.kind()) {
    case Type::Kind::Unit:
      return {Term::star()};
    case Type::Kind::Nat: {
      std::vector<Term> out;
      out.reserve(fuel + 1);
      for (uint64_t n = 0; n <= fuel; ++n) out.push_back(Term::numeral(n));
      return out;
    }
    case Type::Kind::Arrow: {
      std::vector<Term> out;
      for (uint64_t level = 1; level <= fuel; ++level) {
        auto add = arrow_level(tau.domain(), tau.codomain(), level, sig);
        out.insert(out.end(), add.begin(), add.end());
      }
      return out;
    }
  }
  return {};
}

}  // namespace efflog
