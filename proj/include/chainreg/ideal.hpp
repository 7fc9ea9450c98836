#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chainreg/limits.hpp"
#include "chainreg/monomial.hpp"

namespace chainreg {

/// A monomial ideal J of R_n, held as its minimal generating set G(J).
///
/// Generators are kept in lex-descending order, which makes equality of
/// ideals plain equality of generator lists. The zero ideal has no
/// generators; the unit ideal has the single generator 1.
class MonomialIdeal {
 public:
  /// The zero ideal of R_0.
  MonomialIdeal() = default;

  /// <monomials> in R_ambient, minimalized. Every monomial must live in
  /// R_ambient exactly (same ambient width).
  MonomialIdeal(int ambient, std::vector<Monomial> monomials);

  static MonomialIdeal zero(int ambient);
  static MonomialIdeal unit(int ambient);

  int ambient() const noexcept { return ambient_; }
  const std::vector<Monomial>& gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept {
    return gens_.size() == 1 && gens_.front().is_one();
  }
  bool is_proper_nonzero() const noexcept { return !is_zero() && !is_unit(); }

  /// Largest maxsupp over G(J); 0 for the zero and unit ideals.
  int maxsupp() const noexcept;
  /// delta(J): largest degree of a minimal generator.
  int max_generator_degree() const noexcept;
  /// lcm of all generators (the top of the lcm lattice).
  Monomial generator_lcm() const;

  /// The extension <J> in R_n; requires n >= maxsupp().
  MonomialIdeal with_ambient(int n) const;

  /// Renders as "<x1^2, x3>" ("<0>" for the zero ideal).
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int ambient_ = 0;
  std::vector<Monomial> gens_;
};

/// The divisibility-minimal, deduplicated elements of a list of monomials
/// of R_ambient, as an ideal.
MonomialIdeal minimalize(int ambient, std::vector<Monomial> monomials);

/// u in J.
bool contains(const MonomialIdeal& ideal, const Monomial& u);
/// A subset of B (as ideals). Throws on ambient mismatch.
bool is_subideal(const MonomialIdeal& a, const MonomialIdeal& b);
/// A + B.
MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b);

/// J : u.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u);

/// Smallest d >= 0 with J : x_k^d = J : x_k^(d+1).
int colon_stable_exponent(const MonomialIdeal& ideal, int k);

/// J intersected with R_k, as an ideal of R_k. Throws if k < 0.
MonomialIdeal restrict_to(const MonomialIdeal& ideal, int k);

struct Weights {
  int lambda;   ///< min over G(J) of the exponent of the last variable
  int w;        ///< min over G(J) of the largest exponent
  int maxsupp;  ///< max over G(J) of the largest variable index
  int delta;    ///< max degree of a minimal generator
};

/// lambda, w, maxsupp and delta. Throws on the zero or unit ideal.
Weights weights(const MonomialIdeal& ideal);

/// Number of degree-j monomials of R_p not in J intersected with R_p.
/// Throws ResourceLimitExceeded when C(j+p-1, p-1) exceeds the cap.
std::uint64_t hilbert_count(const MonomialIdeal& ideal, int p, int j,
                            std::uint64_t cap = ResourceLimits{}.enumeration_cap);

/// Sum over j = 0..delta(J) of hilbert_count(J, maxsupp(J), j).
/// Zero exactly for the unit ideal; throws on the zero ideal.
std::uint64_t q_invariant(const MonomialIdeal& ideal,
                          std::uint64_t cap = ResourceLimits{}.enumeration_cap);

}  // namespace chainreg
