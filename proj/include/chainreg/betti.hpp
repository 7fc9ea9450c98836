#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "chainreg/field.hpp"
#include "chainreg/ideal.hpp"
#include "chainreg/limits.hpp"
#include "chainreg/simplicial.hpp"

namespace chainreg {

/// Multigraded Betti numbers beta_{i,a}(J) of the ideal J itself (so
/// beta_i(J) = beta_{i+1}(R/J)). Zero entries are not stored.
class BettiTable {
 public:
  using Key = std::pair<int, Monomial>;

  BettiTable(int ambient, FieldSpec field) : ambient_(ambient), field_(field) {}

  /// Adds a nonzero entry; zero values are ignored.
  void set(int i, Monomial degree, std::uint64_t value);
  std::uint64_t at(int i, const Monomial& degree) const;

  int ambient() const noexcept { return ambient_; }
  const FieldSpec& field() const noexcept { return field_; }
  const std::map<Key, std::uint64_t>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  /// Largest i with a nonzero entry. Throws on an empty table.
  int pd() const;
  /// Largest |a| - i over nonzero entries. Throws on an empty table.
  int reg() const;
  /// Sum of beta_{i,a} over a; or over everything when i is omitted.
  std::uint64_t total(std::optional<int> i = std::nullopt) const;
  /// Coarsened table: (i, total degree) -> sum of beta_{i,a}.
  std::map<std::pair<int, int>, std::uint64_t> graded() const;

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.ambient_ == b.ambient_ && a.entries_ == b.entries_;
  }

 private:
  int ambient_;
  FieldSpec field_;
  std::map<Key, std::uint64_t> entries_;
};

/// All distinct lcms of nonempty subsets of G(J), by subset enumeration.
/// Throws ResourceLimitExceeded when |G(J)| exceeds subset_generator_cap.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal,
                                  const ResourceLimits& limits = {});

/// The same set computed as the join-closure of G(J); bounded by
/// lattice_cap elements instead of a generator count.
std::vector<Monomial> lcm_lattice_closure(const MonomialIdeal& ideal,
                                          const ResourceLimits& limits = {});

/// Upper Koszul complex: faces F of supp(a) with x^a / x^F in J. Vertex
/// labels are variable indices.
SimplicialComplex koszul_complex(const MonomialIdeal& ideal, const Monomial& a);

/// beta_{i,a}(J) = dim H~_{i-1}(Koszul complex at a), evaluated on the lcm
/// lattice. Requires J nonzero and proper.
BettiTable betti_table(const MonomialIdeal& ideal, const FieldSpec& field = FieldSpec{},
                       const ResourceLimits& limits = {});

/// Reduced homology of the Koszul complex at a single multidegree, for
/// spot checks away from the lattice.
std::vector<std::uint64_t> koszul_homology(const MonomialIdeal& ideal, const Monomial& a,
                                           const FieldSpec& field = FieldSpec{});

int pd(const MonomialIdeal& ideal, const FieldSpec& field = FieldSpec{},
       const ResourceLimits& limits = {});
int reg(const MonomialIdeal& ideal, const FieldSpec& field = FieldSpec{},
        const ResourceLimits& limits = {});

/// reg J, with the unit ideal assigned 0. Throws on the zero ideal.
int reg_with_unit_convention(const MonomialIdeal& ideal,
                             const FieldSpec& field = FieldSpec{},
                             const ResourceLimits& limits = {});

/// Taylor-complex coefficients: x^a -> sum over nonempty S with lcm(S) = a
/// of (-1)^(|S|+1).
std::map<Monomial, long long> taylor_euler_coefficients(const MonomialIdeal& ideal,
                                                        const ResourceLimits& limits = {});

/// True iff sum_i (-1)^i beta_{i,a}(J) matches the Taylor coefficient at
/// every multidegree.
bool euler_consistency(const MonomialIdeal& ideal, const FieldSpec& field = FieldSpec{},
                       const ResourceLimits& limits = {});

struct ColonBoundsReport {
  int k = 0;
  int d = 0;
  int reg = 0;
  /// reg <J : x_k^e, x_k> for e = 0..d; nullopt where that ideal is <1>.
  std::vector<std::optional<int>> colon_regs;
  bool lower_bound_holds = false;
  bool membership_holds = false;
  bool saw_unit = false;

  bool holds() const noexcept { return lower_bound_holds && membership_holds; }
};

/// Checks max_e reg <J : x_k^e, x_k> <= reg J and reg J in
/// { reg <J : x_k^e, x_k> + e : 0 <= e <= d } with d the colon-stable
/// exponent. A unit ideal <J : x_k^e, x_k> counts as reg 0 in the candidate
/// set and is left out of the maximum.
ColonBoundsReport reg_colon_bounds_check(const MonomialIdeal& ideal, int k,
                                         const FieldSpec& field = FieldSpec{},
                                         const ResourceLimits& limits = {});

}  // namespace chainreg
