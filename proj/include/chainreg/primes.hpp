#pragma once

#include <set>
#include <string>
#include <vector>

#include "chainreg/ideal.hpp"

namespace chainreg {

/// The monomial prime <x_i : i in vars>.
class MonomialPrime {
 public:
  /// Throws InvalidArgument if vars is empty or holds an index < 1.
  explicit MonomialPrime(std::set<int> vars);

  const std::set<int>& vars() const noexcept { return vars_; }
  std::string to_string() const;

  friend auto operator<=>(const MonomialPrime&, const MonomialPrime&) = default;

 private:
  std::set<int> vars_;
};

/// Irredundant irreducible components <x_i^{a_i} : i in F> of J, each given
/// by its generating pure powers, in a canonical order.
std::vector<MonomialIdeal> irreducible_components(const MonomialIdeal& ideal);

/// Ass(R/J): the supports of the irreducible components of J. Throws on the
/// zero or unit ideal.
std::set<MonomialPrime> associated_primes(const MonomialIdeal& ideal);

/// Independent route: P is associated iff J : u = P for some monomial u
/// dividing lcm(G(J)). Exponential in the size of that lcm; test use.
std::set<MonomialPrime> associated_primes_by_colon(const MonomialIdeal& ideal);

}  // namespace chainreg
