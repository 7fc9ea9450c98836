#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chainreg/betti.hpp"
#include "chainreg/chain.hpp"
#include "chainreg/field.hpp"
#include "chainreg/limits.hpp"

namespace chainreg {

enum class Metric { Pd, Reg, Gens, BettiTotal, AssPrimes };

std::string to_string(Metric m);
/// "pd", "reg", "gens", "betti_total", "ass_primes". Throws InvalidArgument.
Metric parse_metric(const std::string& name);

struct SeriesPoint {
  int n = 0;
  long long value = 0;

  friend bool operator==(const SeriesPoint&, const SeriesPoint&) = default;
};

/// value(n) = slope * n + intercept for every recorded n >= onset.
struct LinearFit {
  long long slope = 0;
  long long intercept = 0;
  int onset = 0;

  friend bool operator==(const LinearFit&, const LinearFit&) = default;
};

/// Minimum number of tail points before a fit is reported.
inline constexpr std::size_t kMinFitPoints = 4;

/// Longest exactly affine suffix of the points (in the given order), or
/// nullopt when it is shorter than kMinFitPoints. Throws InvalidArgument for
/// fewer than two points.
std::optional<LinearFit> detect_linear(std::span<const SeriesPoint> values);

struct SeriesReport {
  Metric metric = Metric::Pd;
  std::vector<SeriesPoint> values;
  std::optional<LinearFit> fit;
  /// First n whose computation tripped a resource guard; values stop before it.
  std::optional<int> guard_n;
  std::string guard_message;

  bool linear() const noexcept { return fit.has_value(); }
  bool complete() const noexcept { return !guard_n.has_value(); }
};

/// The metric at one term. Throws ResourceLimitExceeded from the engines.
long long metric_value(const MonomialIdeal& term, Metric metric, const FieldSpec& field,
                       const ResourceLimits& limits);

/// Evaluates the metric on term(n) for n = from..to. With limits.jobs > 1
/// the terms are spread over worker threads; the report is the same either
/// way. Requires index <= from <= to.
SeriesReport series(const IncChain& chain, Metric metric, int from, int to,
                    const FieldSpec& field = FieldSpec{}, const ResourceLimits& limits = {});

/// Saturated over [r, r + horizon] (or by construction), or quasi-saturated.
struct Applicability {
  bool saturated = false;
  bool quasi_saturated = false;
  /// First n from which the saturated-chain lemmas apply to the chain.
  int from = 0;

  bool applicable() const noexcept { return saturated || quasi_saturated; }
};

Applicability applicability(const IncChain& chain, int horizon);

struct PdTheoremReport {
  bool applicable = false;
  bool holds = false;
  std::vector<SeriesPoint> pd;
  std::optional<LinearFit> fit;
  /// pd = n - d on the fitted tail (slope 1).
  std::optional<int> d;
  /// d - 1, the limiting depth of R_n / I_n.
  std::optional<int> limiting_depth;
  std::string detail;
};

/// pd(term(n+1)) >= pd(term(n)) + 1 and pd(term(n)) <= n - 1 over
/// [from, r + horizon]; d is read off an exact slope-1 tail.
PdTheoremReport check_pd_theorem(const IncChain& chain, int horizon,
                                 const FieldSpec& field = FieldSpec{},
                                 const ResourceLimits& limits = {});

struct RegSlopeReport {
  int w = 0;
  bool quasi_saturated = false;
  bool lambda_maximal = false;
  std::vector<SeriesPoint> reg;
  /// Smallest and largest increment over the last kMinFitPoints values.
  long long slope_lower = 0;
  long long slope_upper = 0;
  /// |reg(n)/n - (w-1)| is non-increasing over the last kMinFitPoints values.
  bool consistent = false;
  /// max over the window of reg(n) - (w-1) n.
  long long upper_offset = 0;
  /// Quasi-saturated and lambda-maximal: every increment over the window is
  /// at least w-1 and the tail increments equal w-1. True when not applicable.
  bool hard_clause_applicable = false;
  bool hard_clause_holds = true;
  std::optional<LinearFit> fit;
};

/// reg(term(n)) over [r, r + horizon]. Throws InvalidArgument when the
/// window holds fewer than kMinFitPoints values.
RegSlopeReport check_reg_slope(const IncChain& chain, int horizon,
                               const FieldSpec& field = FieldSpec{},
                               const ResourceLimits& limits = {});

struct PropagationReport {
  bool applicable = false;
  bool bound_holds = true;
  bool successor_holds = true;
  int lambda = 0;
  std::size_t checked = 0;
  std::string first_violation;

  bool holds() const noexcept { return bound_holds && successor_holds; }
};

/// For every nonzero beta_{i,a}(term(n)) with a = (a_1..a_t, 0..0):
/// a_t >= lambda and beta_{i+1,(a,p)}(term(n+1)) != 0 for some p in
/// [lambda, a_t].
PropagationReport check_betti_propagation(const IncChain& chain, int n,
                                          const FieldSpec& field = FieldSpec{},
                                          const ResourceLimits& limits = {});

struct MsatReport {
  bool lambda_ok = false;
  bool w_ok = false;
  bool betti_ok = true;
  bool reg_ok = true;
  int lambda = 0;
  int w = 0;
  std::string first_violation;

  bool holds() const noexcept { return lambda_ok && w_ok && betti_ok && reg_ok; }
};

/// Betti and regularity recursions of the m-saturation for n in
/// [from, from + horizon], plus lambda = m and w = max(w, m).
MsatReport check_msat_identities(const IncChain& chain, int m, int horizon,
                                 const FieldSpec& field = FieldSpec{},
                                 const ResourceLimits& limits = {}, int from = 3);

struct ColonPropsReport {
  int e = 0;
  bool index_ok = true;
  std::uint64_t q = 0;
  std::uint64_t q_e = 0;
  bool q_ok = false;
  int w = 0;
  int w_e = 0;
  bool w_ok = false;
  bool reg_ok = true;
  /// q equality <=> I_{e,r+1} = <I_r>.
  bool seed_biconditional_ok = false;
  /// q equality <=> (quasi-saturated and e <= lambda - 1).
  bool lambda_biconditional_ok = false;
  bool quasi_saturated = false;
  int lambda = 0;
  std::string first_violation;

  bool holds() const noexcept {
    return index_ok && q_ok && w_ok && reg_ok && seed_biconditional_ok &&
           lambda_biconditional_ok;
  }
};

/// Properties of the colon filtration I_e over n in [r+1, r+1+horizon].
/// A unit term counts as w = 0 and reg = 0.
ColonPropsReport check_colon_filtration_props(const IncChain& chain, int e, int horizon,
                                              const FieldSpec& field = FieldSpec{},
                                              const ResourceLimits& limits = {});

struct RandomChainParams {
  std::uint64_t seed = 0;
  int r = 2;
  int gens = 2;
  int max_exponent = 2;
  int max_degree = 4;
  Symmetry symmetry = Symmetry::Inc;
};

/// Seed generators: a support of size in [1, min(r, max_degree)] drawn from
/// [r], exponents in [1, max_exponent], redrawn until the degree fits.
/// Deterministic in params.seed. Throws InvalidArgument for non-positive
/// parameters.
IncChain random_chain(const RandomChainParams& params);

}  // namespace chainreg
