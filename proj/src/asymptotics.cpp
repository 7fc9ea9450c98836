#include "chainreg/asymptotics.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include "chainreg/error.hpp"
#include "chainreg/primes.hpp"

namespace chainreg {

namespace {

BettiTable table_or_empty(const MonomialIdeal& ideal, const FieldSpec& field,
                          const ResourceLimits& limits) {
  if (ideal.is_zero()) return BettiTable(ideal.ambient(), field);
  return betti_table(ideal, field, limits);
}

std::vector<SeriesPoint> checked_series(const IncChain& chain, Metric metric, int from, int to,
                                        const FieldSpec& field, const ResourceLimits& limits) {
  SeriesReport report = series(chain, metric, from, to, field, limits);
  if (!report.complete()) {
    throw ResourceLimitExceeded("n = " + std::to_string(*report.guard_n) + ": " +
                                report.guard_message);
  }
  return std::move(report.values);
}

// x^a * x_{t}^p in R_n, a living in a smaller ring.
Monomial append(const Monomial& a, int n, int var, int exp) {
  return a.with_ambient(n) * Monomial::variable(n, var, exp);
}

std::string describe(int i, const Monomial& a) {
  return "beta_{" + std::to_string(i) + "," + a.to_string() + "}";
}

}  // namespace

std::string to_string(Metric m) {
  switch (m) {
    case Metric::Pd: return "pd";
    case Metric::Reg: return "reg";
    case Metric::Gens: return "gens";
    case Metric::BettiTotal: return "betti_total";
    case Metric::AssPrimes: return "ass_primes";
  }
  return "pd";
}

Metric parse_metric(const std::string& name) {
  for (Metric m : {Metric::Pd, Metric::Reg, Metric::Gens, Metric::BettiTotal, Metric::AssPrimes}) {
    if (to_string(m) == name) return m;
  }
  throw InvalidArgument("unknown metric '" + name +
                        "' (expected pd, reg, gens, betti_total or ass_primes)");
}

std::optional<LinearFit> detect_linear(std::span<const SeriesPoint> values) {
  if (values.size() < 2) throw InvalidArgument("detect_linear: need at least two points");
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i].n <= values[i - 1].n) {
      throw InvalidArgument("detect_linear: n must be strictly increasing");
    }
  }
  const SeriesPoint& last = values.back();
  const SeriesPoint& prev = values[values.size() - 2];
  const long long dn = last.n - prev.n;
  const long long dv = last.value - prev.value;
  if (dv % dn != 0) return std::nullopt;
  const long long slope = dv / dn;
  const long long intercept = last.value - slope * last.n;

  std::size_t start = values.size();
  while (start > 0 && values[start - 1].value == slope * values[start - 1].n + intercept) {
    --start;
  }
  if (values.size() - start < kMinFitPoints) return std::nullopt;
  return LinearFit{slope, intercept, values[start].n};
}

long long metric_value(const MonomialIdeal& term, Metric metric, const FieldSpec& field,
                       const ResourceLimits& limits) {
  switch (metric) {
    case Metric::Pd: return pd(term, field, limits);
    case Metric::Reg: return reg(term, field, limits);
    case Metric::Gens: return static_cast<long long>(term.size());
    case Metric::BettiTotal:
      return static_cast<long long>(betti_table(term, field, limits).total());
    case Metric::AssPrimes: return static_cast<long long>(associated_primes(term).size());
  }
  return 0;
}

SeriesReport series(const IncChain& chain, Metric metric, int from, int to,
                    const FieldSpec& field, const ResourceLimits& limits) {
  if (from < chain.index() || to < from) {
    throw InvalidArgument("series: need index <= from <= to, got index " +
                          std::to_string(chain.index()) + ", range [" + std::to_string(from) +
                          ", " + std::to_string(to) + "]");
  }
  const std::size_t count = static_cast<std::size_t>(to - from + 1);
  std::vector<std::optional<long long>> values(count);
  std::vector<std::string> guard(count);
  std::exception_ptr failure;
  std::mutex failure_mutex;

  ResourceLimits inner = limits;
  const unsigned workers = std::min<unsigned>(limits.jobs, static_cast<unsigned>(count));
  if (workers > 1) inner.jobs = 1;

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < count;) {
      try {
        values[k] = metric_value(chain.term(from + static_cast<int>(k)), metric, field, inner);
      } catch (const ResourceLimitExceeded& e) {
        guard[k] = e.what();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers > 1) {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  } else {
    // Sequential runs stop at the first guard: later terms are larger.
    for (std::size_t k = 0; k < count; ++k) {
      try {
        values[k] = metric_value(chain.term(from + static_cast<int>(k)), metric, field, inner);
      } catch (const ResourceLimitExceeded& e) {
        guard[k] = e.what();
        break;
      }
    }
  }
  if (failure) std::rethrow_exception(failure);

  SeriesReport report;
  report.metric = metric;
  for (std::size_t k = 0; k < count; ++k) {
    if (!values[k]) {
      report.guard_n = from + static_cast<int>(k);
      report.guard_message = guard[k];
      break;
    }
    report.values.push_back({from + static_cast<int>(k), *values[k]});
  }
  if (report.values.size() >= 2) report.fit = detect_linear(report.values);
  return report;
}

Applicability applicability(const IncChain& chain, int horizon) {
  const ChainInvariants inv = chain_invariants(chain, horizon);
  Applicability a;
  a.saturated = chain.saturated_by_construction() || inv.saturated_window;
  a.quasi_saturated = inv.quasi_saturated;
  const int r = chain.index();
  // A quasi-saturated chain is a shift of its saturated chain: I_n is
  // generated by the saturated truncation at n - r + p.
  a.from = a.saturated ? r : std::max(r, 2 * r - chain.seed().maxsupp());
  return a;
}

PdTheoremReport check_pd_theorem(const IncChain& chain, int horizon, const FieldSpec& field,
                                 const ResourceLimits& limits) {
  PdTheoremReport report;
  const Applicability app = applicability(chain, horizon);
  if (!app.applicable()) {
    report.detail = "chain is neither saturated over the window nor quasi-saturated";
    return report;
  }
  report.applicable = true;
  const int r = chain.index();
  report.pd = checked_series(chain, Metric::Pd, r, r + horizon, field, limits);

  report.holds = true;
  for (std::size_t k = 0; k < report.pd.size(); ++k) {
    const SeriesPoint& pt = report.pd[k];
    if (pt.value > pt.n - 1) {
      report.holds = false;
      report.detail = "pd exceeds n - 1 at n = " + std::to_string(pt.n);
      break;
    }
    if (k + 1 < report.pd.size() && pt.n >= app.from && report.pd[k + 1].value < pt.value + 1) {
      report.holds = false;
      report.detail = "pd does not increase from n = " + std::to_string(pt.n);
      break;
    }
  }
  if (report.pd.size() >= 2) report.fit = detect_linear(report.pd);
  if (report.fit && report.fit->slope == 1) {
    report.d = static_cast<int>(-report.fit->intercept);
    report.limiting_depth = *report.d - 1;
  }
  return report;
}

RegSlopeReport check_reg_slope(const IncChain& chain, int horizon, const FieldSpec& field,
                               const ResourceLimits& limits) {
  if (horizon + 1 < static_cast<int>(kMinFitPoints)) {
    throw InvalidArgument("check_reg_slope: horizon " + std::to_string(horizon) +
                          " gives fewer than " + std::to_string(kMinFitPoints) + " values");
  }
  const int r = chain.index();
  const ChainInvariants inv =
      chain_invariants(chain, std::max(horizon, default_lambda_horizon(chain)));
  RegSlopeReport report;
  report.w = inv.w;
  report.quasi_saturated = inv.quasi_saturated;
  report.lambda_maximal = inv.lambda_maximal;
  report.reg = checked_series(chain, Metric::Reg, r, r + horizon, field, limits);
  report.fit = detect_linear(report.reg);

  const long long s = inv.w - 1;
  const auto& v = report.reg;
  const std::size_t tail = v.size() - kMinFitPoints;
  report.slope_lower = v[tail + 1].value - v[tail].value;
  report.slope_upper = report.slope_lower;
  for (std::size_t k = tail + 1; k + 1 < v.size(); ++k) {
    const long long inc = v[k + 1].value - v[k].value;
    report.slope_lower = std::min(report.slope_lower, inc);
    report.slope_upper = std::max(report.slope_upper, inc);
  }

  // |reg(n)/n - s| as the exact fraction |reg(n) - s n| / n.
  report.consistent = true;
  for (std::size_t k = tail; k + 1 < v.size(); ++k) {
    const long long a = std::llabs(v[k].value - s * v[k].n);
    const long long b = std::llabs(v[k + 1].value - s * v[k + 1].n);
    if (b * v[k].n > a * v[k + 1].n) report.consistent = false;
  }

  report.upper_offset = v.front().value - s * v.front().n;
  for (const SeriesPoint& pt : v) {
    report.upper_offset = std::max(report.upper_offset, pt.value - s * pt.n);
  }

  report.hard_clause_applicable = inv.quasi_saturated && inv.lambda_maximal;
  if (report.hard_clause_applicable) {
    const int from = std::max(r, 2 * r - chain.seed().maxsupp());
    for (std::size_t k = 0; k + 1 < v.size(); ++k) {
      const long long inc = v[k + 1].value - v[k].value;
      if (v[k].n >= from && inc < s) report.hard_clause_holds = false;
      if (k >= tail && inc != s) report.hard_clause_holds = false;
    }
  }
  return report;
}

PropagationReport check_betti_propagation(const IncChain& chain, int n, const FieldSpec& field,
                                          const ResourceLimits& limits) {
  PropagationReport report;
  const ChainInvariants inv = chain_invariants(chain);
  const Applicability app = applicability(chain, default_lambda_horizon(chain));
  report.lambda = inv.lambda;
  if (!app.applicable() || n < app.from) return report;
  report.applicable = true;

  const BettiTable here = betti_table(chain.term(n), field, limits);
  const BettiTable next = betti_table(chain.term(n + 1), field, limits);
  for (const auto& [key, value] : here.entries()) {
    const auto& [i, a] = key;
    ++report.checked;
    const int t = a.maxsupp();
    const int at = a.last_exponent();
    if (at < inv.lambda) {
      report.bound_holds = false;
      if (report.first_violation.empty()) {
        report.first_violation = describe(i, a) + " has last exponent below lambda";
      }
    }
    bool found = false;
    for (int p = inv.lambda; p <= at && !found; ++p) {
      found = next.at(i + 1, append(a, n + 1, t + 1, p)) != 0;
    }
    if (!found) {
      report.successor_holds = false;
      if (report.first_violation.empty()) {
        report.first_violation = describe(i, a) + " has no successor in term " +
                                 std::to_string(n + 1);
      }
    }
  }
  return report;
}

MsatReport check_msat_identities(const IncChain& chain, int m, int horizon,
                                 const FieldSpec& field, const ResourceLimits& limits, int from) {
  if (horizon < 0) throw InvalidArgument("check_msat_identities: negative horizon");
  if (from < 2) throw InvalidArgument("check_msat_identities: recursions start at n = 2");
  const IncChain sat = m_saturation(chain, m);
  MsatReport report;

  const ChainInvariants inv = chain_invariants(sat);
  report.lambda = inv.lambda;
  report.w = inv.w;
  report.lambda_ok = inv.lambda == m;
  report.w_ok = inv.w == std::max(weights(chain.seed()).w, m);
  if (!report.lambda_ok || !report.w_ok) {
    report.first_violation = "lambda = " + std::to_string(inv.lambda) + ", w = " +
                             std::to_string(inv.w) + " for the " + std::to_string(m) +
                             "-saturation";
  }

  for (int n = from; n <= from + horizon; ++n) {
    const MonomialIdeal in_prev = chain.term(n - 1);
    const MonomialIdeal j_prev = sat.term(n - 1);
    const MonomialIdeal j_here = sat.term(n);
    const BettiTable ti = table_or_empty(in_prev, field, limits);
    const BettiTable tjp = table_or_empty(j_prev, field, limits);
    const BettiTable tj = table_or_empty(j_here, field, limits);

    std::map<BettiTable::Key, std::uint64_t> expected;
    for (const auto& [key, value] : ti.entries()) {
      expected[{key.first, append(key.second, n, n, m)}] += value;
    }
    for (const auto& [key, value] : tjp.entries()) {
      expected[{key.first + 1, append(key.second, n, n, m)}] += value;
    }
    std::map<BettiTable::Key, std::uint64_t> actual;
    for (const auto& [key, value] : tj.entries()) {
      if (key.second.exponent(n) == m) actual[key] = value;
    }
    if (expected != actual) {
      report.betti_ok = false;
      if (report.first_violation.empty()) {
        report.first_violation = "Betti recursion fails at n = " + std::to_string(n);
      }
    }

    if (!j_here.is_zero()) {
      std::optional<int> bound;
      if (!in_prev.is_zero()) bound = ti.reg() + m;
      if (!j_prev.is_zero()) {
        const int via_j = tjp.reg() + m - 1;
        bound = bound ? std::max(*bound, via_j) : via_j;
      }
      if (!bound || tj.reg() != *bound) {
        report.reg_ok = false;
        if (report.first_violation.empty()) {
          report.first_violation = "regularity recursion fails at n = " + std::to_string(n);
        }
      }
    }
  }
  return report;
}

ColonPropsReport check_colon_filtration_props(const IncChain& chain, int e, int horizon,
                                              const FieldSpec& field,
                                              const ResourceLimits& limits) {
  if (horizon < 0) throw InvalidArgument("check_colon_filtration_props: negative horizon");
  const int r = chain.index();
  const IncChain filtered = colon_filtration(chain, e);
  const MonomialIdeal seed = chain.seed();
  const MonomialIdeal seed_e = filtered.seed();
  const ChainInvariants inv = chain_invariants(chain);

  ColonPropsReport report;
  report.e = e;
  report.quasi_saturated = inv.quasi_saturated;
  report.lambda = inv.lambda;
  auto note = [&](const std::string& what) {
    if (report.first_violation.empty()) report.first_violation = what;
  };

  for (int n = r + 1; n <= r + 1 + horizon; ++n) {
    const MonomialIdeal direct = colon_filtration_term(chain, e, n);
    if (direct != filtered.term(n)) {
      report.index_ok = false;
      note("I_{e," + std::to_string(n) + "} is not generated by I_{e," + std::to_string(r + 1) +
           "}");
    }
    const int reg_e = reg_with_unit_convention(direct, field, limits);
    if (reg(chain.term(n), field, limits) < reg_e) {
      report.reg_ok = false;
      note("reg I_" + std::to_string(n) + " < reg I_{e," + std::to_string(n) + "}");
    }
  }

  report.q = q_invariant(seed);
  report.q_e = q_invariant(seed_e);
  report.q_ok = report.q_e <= report.q;
  if (!report.q_ok) note("q increased");

  report.w = inv.w;
  report.w_e = seed_e.is_unit() ? 0 : weights(seed_e).w;
  report.w_ok = report.w_e <= report.w && (e > report.w - 1 || report.w_e == report.w);
  if (!report.w_ok) note("w not preserved");

  const bool q_equal = report.q_e == report.q;
  const bool seed_equal = seed_e == seed.with_ambient(r + 1);
  report.seed_biconditional_ok = q_equal == seed_equal;
  if (!report.seed_biconditional_ok) note("q equality does not match I_{e,r+1} = <I_r>");
  report.lambda_biconditional_ok = q_equal == (inv.quasi_saturated && e <= inv.lambda - 1);
  if (!report.lambda_biconditional_ok) {
    note("q equality does not match quasi-saturation with e <= lambda - 1");
  }
  return report;
}

IncChain random_chain(const RandomChainParams& params) {
  if (params.r < 1 || params.gens < 1 || params.max_exponent < 1 || params.max_degree < 1) {
    throw InvalidArgument("random_chain: r, gens, max_exponent and max_degree must be positive");
  }
  std::mt19937_64 rng(params.seed);
  const int max_support = std::min(params.r, params.max_degree);
  std::uniform_int_distribution<int> support_size(1, max_support);
  std::uniform_int_distribution<int> exponent(1, params.max_exponent);

  std::vector<int> indices(static_cast<std::size_t>(params.r));
  std::vector<Monomial> gens;
  for (int g = 0; g < params.gens; ++g) {
    const int k = support_size(rng);
    for (int i = 0; i < params.r; ++i) indices[static_cast<std::size_t>(i)] = i + 1;
    // Partial Fisher-Yates: the first k entries are a uniform k-subset.
    for (int i = 0; i < k; ++i) {
      std::uniform_int_distribution<int> pick(i, params.r - 1);
      std::swap(indices[static_cast<std::size_t>(i)],
                indices[static_cast<std::size_t>(pick(rng))]);
    }
    std::vector<Factor> factors;
    int degree = 0;
    do {
      factors.clear();
      degree = 0;
      for (int i = 0; i < k; ++i) {
        const int a = exponent(rng);
        factors.push_back({indices[static_cast<std::size_t>(i)], a});
        degree += a;
      }
    } while (degree > params.max_degree);
    gens.emplace_back(params.r, std::move(factors));
  }
  // Every generator has positive degree, so the seed is nonzero and proper.
  return IncChain(params.r, MonomialIdeal(params.r, std::move(gens)), params.symmetry);
}

}  // namespace chainreg
