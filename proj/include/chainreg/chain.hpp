#pragma once

#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "chainreg/ideal.hpp"
#include "chainreg/limits.hpp"

namespace chainreg {

enum class Symmetry { Inc, Sym };

std::string to_string(Symmetry s);

/// All pi(u) for pi in Inc_{m,n}, by enumerating increasing placements of
/// supp(u) that extend to [m] with pi(m) <= n. Results live in R_n.
std::set<Monomial> inc_orbit(const Monomial& u, int m, int n);

/// The same orbit built by iterating the shift maps sigma_j (identity on
/// 1..j, +1 above) from R_m up to R_n.
std::set<Monomial> inc_orbit_by_shifts(const Monomial& u, int m, int n);

/// Image of u under sigma_j, in R_{ambient+1}.
Monomial shift(const Monomial& u, int j);

/// All distinct placements of u's exponent multiset onto [n].
std::set<Monomial> sym_orbit(const Monomial& u, int n);

/// <Inc_{n,n+1}(J)> in R_{n+1} for J in R_n.
MonomialIdeal inc_step(const MonomialIdeal& ideal);

/// A Pi-invariant chain (I_n) of monomial ideals.
///
/// The plain form is orbit-generated: a declared stability index r, a seed
/// I_r and optional head terms I_1..I_{r-1}; for n >= r the term is
/// <Pi_{r,n}(I_r)>. Derived chains (saturation, colon filtration,
/// m-saturation) carry a term function instead. The declared r is trusted.
///
/// Copies share one term cache, guarded by a mutex.
class IncChain {
 public:
  using TermFunction = std::function<MonomialIdeal(int)>;

  /// Throws InvalidArgument when r < 1, the seed is zero, the unit ideal or
  /// not in R_r, or a head term breaks <Pi_{m,n}(I_m)> within I_n.
  IncChain(int r, MonomialIdeal seed, Symmetry symmetry = Symmetry::Inc,
           std::vector<MonomialIdeal> head = {});

  /// A chain given by its terms. `terms` must be pure; `saturated` records
  /// that the construction guarantees I_{n+1} cap R_n = I_n.
  static IncChain derived(int r, std::string description, TermFunction terms,
                          bool saturated);

  int index() const noexcept;
  Symmetry symmetry() const noexcept;
  bool is_derived() const noexcept;
  bool saturated_by_construction() const noexcept;
  const std::string& description() const noexcept;
  /// Explicit head terms I_1..I_{r-1} (empty when defaulted to zero).
  const std::vector<MonomialIdeal>& head() const noexcept;

  /// I_r.
  MonomialIdeal seed() const { return term(index()); }
  /// I_n for n >= 1; throws InvalidArgument otherwise.
  MonomialIdeal term(int n) const;

 private:
  struct State;
  explicit IncChain(std::shared_ptr<State> state) : state_(std::move(state)) {}
  static IncChain orbit_unchecked(int r, MonomialIdeal seed, Symmetry symmetry);
  MonomialIdeal compute(int n) const;

  std::shared_ptr<State> state_;

  friend IncChain colon_filtration(const IncChain& chain, int e);
};

/// bar I_n = I cap R_n for the limit ideal I, as restrict(term(n + r), n).
MonomialIdeal saturated_truncation(const IncChain& chain, int n);

/// True iff restrict(term(m), n) is the same ideal for m = n + r .. n + r + extra.
bool saturated_truncation_audit(const IncChain& chain, int n, int extra = 5);

/// The saturated chain (bar I_n) of the chain's limit ideal, declared with
/// the same index.
IncChain saturation(const IncChain& chain);

enum class LambdaCertificate { ReachedW, Saturated, QuasiSaturated, TrailingConstant, Uncertified };

std::string to_string(LambdaCertificate c);

struct ChainInvariants {
  int lambda = 0;
  int w = 0;
  std::uint64_t q = 0;
  bool quasi_saturated = false;
  bool lambda_maximal = false;
  /// term(n) equals the saturated truncation for every n in the window.
  bool saturated_window = false;
  int horizon = 0;
  LambdaCertificate certificate = LambdaCertificate::Uncertified;
  /// lambda(term(n)) for n = r .. r + horizon.
  std::vector<int> lambda_series;
};

/// 2 * delta(I_r) + 4.
int default_lambda_horizon(const IncChain& chain);

/// lambda, w, q and the quasi-saturation and lambda-maximality flags.
/// lambda is the maximum of lambda(term(n)) over n in [r, r + horizon].
/// Throws InvalidArgument for a negative horizon or a zero/unit seed.
ChainInvariants chain_invariants(const IncChain& chain, int horizon);
ChainInvariants chain_invariants(const IncChain& chain);

/// I_{e,n} = <(I_n : x_{n-r+p}^e) cap R_{n-r+p-1}> in R_n for n >= r+1 and
/// zero below, with p = maxsupp(I_r), straight from the definition.
MonomialIdeal colon_filtration_term(const IncChain& chain, int e, int n);

/// The chain I_e, orbit-generated from I_{e,r+1} with declared index r+1.
IncChain colon_filtration(const IncChain& chain, int e);

/// The m-saturation: J_1 = 0, J_n = <sum_{k=2}^n x_k^m I_{k-1}> in R_n.
/// Declared index r+1. Throws InvalidArgument for m < 1.
IncChain m_saturation(const IncChain& chain, int m);

}  // namespace chainreg
