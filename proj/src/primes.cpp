#include "chainreg/primes.hpp"

#include <algorithm>
#include <map>

#include "chainreg/error.hpp"

namespace chainreg {

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw InvalidArgument("associated primes: zero ideal");
  if (ideal.is_unit()) throw InvalidArgument("associated primes: unit ideal");
}

bool is_pure_power(const Monomial& m) { return m.factors().size() == 1; }

using Memo = std::map<std::vector<Monomial>, std::vector<MonomialIdeal>>;

// Splits on a mixed generator x_i^a * m as (J + <x_i^a>) cap (J + <m>) until
// only pure powers remain. Components may be redundant at this stage.
const std::vector<MonomialIdeal>& split(const MonomialIdeal& ideal, Memo& memo) {
  if (auto it = memo.find(ideal.gens()); it != memo.end()) return it->second;

  std::vector<MonomialIdeal> out;
  auto mixed = std::find_if(ideal.gens().begin(), ideal.gens().end(),
                            [](const Monomial& g) { return !is_pure_power(g); });
  if (mixed == ideal.gens().end()) {
    out.push_back(ideal);
  } else {
    const Factor first = mixed->factors().front();
    const Monomial power = Monomial::variable(ideal.ambient(), first.var, first.exp);
    const Monomial rest = quotient(*mixed, power);
    for (const Monomial& piece : {power, rest}) {
      MonomialIdeal bigger = ideal + MonomialIdeal(ideal.ambient(), {piece});
      const auto& sub = split(bigger, memo);
      out.insert(out.end(), sub.begin(), sub.end());
    }
  }
  return memo.emplace(ideal.gens(), std::move(out)).first->second;
}

}  // namespace

MonomialPrime::MonomialPrime(std::set<int> vars) : vars_(std::move(vars)) {
  if (vars_.empty()) throw InvalidArgument("monomial prime needs a variable");
  if (*vars_.begin() < 1) throw InvalidArgument("variable indices start at 1");
}

std::string MonomialPrime::to_string() const {
  std::string s = "<";
  for (int v : vars_) {
    if (s.size() > 1) s += ", ";
    s += "x" + std::to_string(v);
  }
  return s + ">";
}

std::vector<MonomialIdeal> irreducible_components(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal);
  Memo memo;
  std::vector<MonomialIdeal> all = split(ideal, memo);

  std::sort(all.begin(), all.end(), [](const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.gens() < b.gens();
  });
  all.erase(std::unique(all.begin(), all.end()), all.end());

  // An irreducible monomial ideal containing another component is redundant.
  std::vector<MonomialIdeal> kept;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < all.size() && !redundant; ++j) {
      redundant = j != i && is_subideal(all[j], all[i]);
    }
    if (!redundant) kept.push_back(all[i]);
  }
  return kept;
}

std::set<MonomialPrime> associated_primes(const MonomialIdeal& ideal) {
  std::set<MonomialPrime> primes;
  for (const MonomialIdeal& q : irreducible_components(ideal)) {
    std::set<int> vars;
    for (const Monomial& g : q.gens()) vars.insert(g.maxsupp());
    primes.emplace(std::move(vars));
  }
  return primes;
}

std::set<MonomialPrime> associated_primes_by_colon(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal);
  const std::vector<int> top = ideal.generator_lcm().dense();
  std::vector<int> u(top.size(), 0);
  std::set<MonomialPrime> primes;
  for (;;) {
    const MonomialIdeal q = colon(ideal, Monomial::from_exponents(u));
    bool prime = !q.is_unit() &&
                 std::all_of(q.gens().begin(), q.gens().end(), [](const Monomial& g) {
                   return g.degree() == 1;
                 });
    if (prime) {
      std::set<int> vars;
      for (const Monomial& g : q.gens()) vars.insert(g.maxsupp());
      primes.emplace(std::move(vars));
    }
    std::size_t i = 0;
    while (i < u.size() && u[i] == top[i]) u[i++] = 0;
    if (i == u.size()) break;
    ++u[i];
  }
  return primes;
}

}  // namespace chainreg
