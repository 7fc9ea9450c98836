#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace chainreg {

/// One factor x_var^exp of a monomial; var >= 1, exp >= 1.
struct Factor {
  int var;
  int exp;

  auto operator<=>(const Factor&) const = default;
};

/// A monomial x^a in R_n = K[x_1, ..., x_n].
///
/// Stored sparsely as factors sorted by strictly increasing variable index,
/// together with the width n of the ring it lives in. The unit monomial has
/// no factors. Two monomials with the same exponents but different ambient
/// widths compare unequal; use with_ambient() to re-embed.
class Monomial {
 public:
  /// The unit monomial of R_0.
  Monomial() = default;

  /// The unit monomial of R_n.
  explicit Monomial(int ambient);

  /// Builds x^a from factors in any order. Repeated variables multiply.
  /// Throws InvalidArgument on an index outside [1, ambient], a
  /// non-positive exponent, or a negative ambient width.
  Monomial(int ambient, std::vector<Factor> factors);

  /// Builds from a dense exponent vector; the ambient width is its length.
  static Monomial from_exponents(std::span<const int> exponents);

  /// x_var^exp in R_ambient.
  static Monomial variable(int ambient, int var, int exp = 1);

  int ambient() const noexcept { return ambient_; }
  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }

  int exponent(int var) const;
  int degree() const noexcept;

  /// Largest variable index in the support; 0 for the unit monomial.
  int maxsupp() const noexcept;
  /// lambda(u): the exponent of the variable x_maxsupp. 0 for the unit.
  int last_exponent() const noexcept;
  /// w(u): the largest exponent. 0 for the unit.
  int max_exponent() const noexcept;

  std::vector<int> support() const;
  std::vector<int> dense() const;

  /// The same monomial viewed in R_n. Throws if maxsupp() > n.
  Monomial with_ambient(int n) const;

  /// Renders as "x1^4*x2", or "1" for the unit.
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  int ambient_ = 0;
  std::vector<Factor> factors_;
};

/// Exponentwise maximum. Throws on ambient mismatch.
Monomial lcm(const Monomial& u, const Monomial& v);
/// Exponentwise minimum. Throws on ambient mismatch.
Monomial gcd(const Monomial& u, const Monomial& v);
/// True iff u | v. Throws on ambient mismatch.
bool divides(const Monomial& u, const Monomial& v);
/// Product. Throws on ambient mismatch.
Monomial operator*(const Monomial& u, const Monomial& v);
/// u / v; requires v | u.
Monomial quotient(const Monomial& u, const Monomial& v);
/// u / gcd(u, v), the generator of <u> : v.
Monomial colon(const Monomial& u, const Monomial& v);

/// Lexicographic order with x_1 > x_2 > ... ; the display order of
/// generator lists.
bool lex_greater(const Monomial& u, const Monomial& v);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace chainreg
