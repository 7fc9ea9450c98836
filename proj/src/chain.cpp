#include "chainreg/chain.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "chainreg/error.hpp"

namespace chainreg {

namespace {

void place_increasing(const std::vector<Factor>& factors, int m, int n, std::size_t j,
                      std::vector<Factor>& out, std::set<Monomial>& orbit) {
  if (j == factors.size()) {
    orbit.insert(Monomial(n, out));
    return;
  }
  const int last = factors.back().var;
  // Room needed above this position: the remaining gaps in supp(u) plus the
  // indices between maxsupp(u) and m.
  const int hi = n - (m - last) - (last - factors[j].var);
  const int lo = j == 0 ? factors[0].var : out[j - 1].var + (factors[j].var - factors[j - 1].var);
  for (int c = lo; c <= hi; ++c) {
    out[j] = {c, factors[j].exp};
    place_increasing(factors, m, n, j + 1, out, orbit);
  }
}

void check_orbit_args(const Monomial& u, int m, int n) {
  if (m < 0 || m > n) {
    throw InvalidArgument("orbit: need 0 <= m <= n, got m=" + std::to_string(m) +
                          ", n=" + std::to_string(n));
  }
  if (u.maxsupp() > m) {
    throw InvalidArgument("orbit: " + u.to_string() + " is not in R_" + std::to_string(m));
  }
}

MonomialIdeal orbit_closure(const MonomialIdeal& seed, int r, int n, Symmetry symmetry) {
  std::vector<Monomial> images;
  for (const Monomial& g : seed.gens()) {
    std::set<Monomial> orbit = symmetry == Symmetry::Inc ? inc_orbit(g, r, n) : sym_orbit(g, n);
    images.insert(images.end(), orbit.begin(), orbit.end());
  }
  return MonomialIdeal(n, std::move(images));
}

// <Pi_{m,n}(I_m)> in R_n.
MonomialIdeal extend(const MonomialIdeal& ideal, int n, Symmetry symmetry) {
  return orbit_closure(ideal, ideal.ambient(), n, symmetry);
}

}  // namespace

std::string to_string(Symmetry s) { return s == Symmetry::Inc ? "inc" : "sym"; }

std::set<Monomial> inc_orbit(const Monomial& u, int m, int n) {
  check_orbit_args(u, m, n);
  std::set<Monomial> orbit;
  if (u.is_one()) {
    orbit.insert(Monomial(n));
    return orbit;
  }
  std::vector<Factor> out(u.factors().size());
  place_increasing(u.factors(), m, n, 0, out, orbit);
  return orbit;
}

Monomial shift(const Monomial& u, int j) {
  std::vector<Factor> moved = u.factors();
  for (Factor& f : moved) {
    if (f.var > j) ++f.var;
  }
  return Monomial(u.ambient() + 1, std::move(moved));
}

std::set<Monomial> inc_orbit_by_shifts(const Monomial& u, int m, int n) {
  check_orbit_args(u, m, n);
  std::set<Monomial> current{u.with_ambient(m)};
  for (int t = m; t < n; ++t) {
    std::set<Monomial> next;
    for (const Monomial& v : current) {
      for (int j = 0; j <= t; ++j) next.insert(shift(v, j));
    }
    current = std::move(next);
  }
  return current;
}

std::set<Monomial> sym_orbit(const Monomial& u, int n) {
  if (n < 0 || u.maxsupp() > n) {
    throw InvalidArgument("sym_orbit: " + u.to_string() + " is not in R_" + std::to_string(n));
  }
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < u.factors().size(); ++i) exps[i] = u.factors()[i].exp;
  std::sort(exps.begin(), exps.end());
  std::set<Monomial> orbit;
  do {
    orbit.insert(Monomial::from_exponents(exps));
  } while (std::next_permutation(exps.begin(), exps.end()));
  return orbit;
}

MonomialIdeal inc_step(const MonomialIdeal& ideal) {
  const int n = ideal.ambient();
  std::vector<Monomial> images;
  for (const Monomial& g : ideal.gens()) {
    for (int j = 0; j <= n; ++j) images.push_back(shift(g, j));
  }
  return MonomialIdeal(n + 1, std::move(images));
}

struct IncChain::State {
  int r = 1;
  Symmetry symmetry = Symmetry::Inc;
  MonomialIdeal seed;
  std::vector<MonomialIdeal> head;
  TermFunction terms;  // set for derived chains
  bool saturated = false;
  std::string description;

  std::mutex mutex;
  std::map<int, MonomialIdeal> cache;
};

IncChain::IncChain(int r, MonomialIdeal seed, Symmetry symmetry, std::vector<MonomialIdeal> head)
    : state_(std::make_shared<State>()) {
  if (r < 1) throw InvalidArgument("chain index must be at least 1");
  if (seed.ambient() != r) {
    throw InvalidArgument("seed must live in R_" + std::to_string(r) + ", got R_" +
                          std::to_string(seed.ambient()));
  }
  if (!seed.is_proper_nonzero()) {
    throw InvalidArgument("seed must be a nonzero proper ideal, got " + seed.to_string());
  }
  if (!head.empty() && head.size() != static_cast<std::size_t>(r - 1)) {
    throw InvalidArgument("expected " + std::to_string(r - 1) + " head terms, got " +
                          std::to_string(head.size()));
  }
  for (std::size_t i = 0; i < head.size(); ++i) {
    if (head[i].ambient() != static_cast<int>(i) + 1) {
      throw InvalidArgument("head term I_" + std::to_string(i + 1) + " must live in R_" +
                            std::to_string(i + 1));
    }
  }
  // <Pi_{m,n}(I_m)> within I_n for m <= n <= r.
  for (int m = 1; m <= static_cast<int>(head.size()); ++m) {
    for (int n = m; n <= r; ++n) {
      const MonomialIdeal& target = n == r ? seed : head[static_cast<std::size_t>(n - 1)];
      if (!is_subideal(extend(head[static_cast<std::size_t>(m - 1)], n, symmetry), target)) {
        throw InvalidArgument("head term I_" + std::to_string(m) + " is not carried into I_" +
                              std::to_string(n));
      }
    }
  }
  state_->r = r;
  state_->symmetry = symmetry;
  state_->seed = std::move(seed);
  state_->head = std::move(head);
  state_->description = "orbit chain";
}

IncChain IncChain::orbit_unchecked(int r, MonomialIdeal seed, Symmetry symmetry) {
  auto state = std::make_shared<State>();
  state->r = r;
  state->symmetry = symmetry;
  state->seed = std::move(seed);
  state->description = "orbit chain";
  return IncChain(std::move(state));
}

IncChain IncChain::derived(int r, std::string description, TermFunction terms, bool saturated) {
  if (r < 1) throw InvalidArgument("chain index must be at least 1");
  auto state = std::make_shared<State>();
  state->r = r;
  state->terms = std::move(terms);
  state->saturated = saturated;
  state->description = std::move(description);
  return IncChain(std::move(state));
}

int IncChain::index() const noexcept { return state_->r; }
Symmetry IncChain::symmetry() const noexcept { return state_->symmetry; }
bool IncChain::is_derived() const noexcept { return static_cast<bool>(state_->terms); }
bool IncChain::saturated_by_construction() const noexcept { return state_->saturated; }
const std::string& IncChain::description() const noexcept { return state_->description; }
const std::vector<MonomialIdeal>& IncChain::head() const noexcept { return state_->head; }

MonomialIdeal IncChain::compute(int n) const {
  const State& s = *state_;
  if (s.terms) return s.terms(n);
  if (n < s.r) {
    return s.head.empty() ? MonomialIdeal::zero(n) : s.head[static_cast<std::size_t>(n - 1)];
  }
  if (n == s.r) return s.seed;
  return orbit_closure(s.seed, s.r, n, s.symmetry);
}

MonomialIdeal IncChain::term(int n) const {
  if (n < 1) throw InvalidArgument("chain terms start at n = 1");
  {
    std::lock_guard lock(state_->mutex);
    if (auto it = state_->cache.find(n); it != state_->cache.end()) return it->second;
  }
  MonomialIdeal value = compute(n);
  if (value.ambient() != n) {
    throw InvalidArgument("term " + std::to_string(n) + " produced an ideal of R_" +
                          std::to_string(value.ambient()));
  }
  std::lock_guard lock(state_->mutex);
  return state_->cache.emplace(n, std::move(value)).first->second;
}

MonomialIdeal saturated_truncation(const IncChain& chain, int n) {
  if (n < 1) throw InvalidArgument("saturated_truncation: n must be at least 1");
  if (chain.saturated_by_construction()) return chain.term(n);
  return restrict_to(chain.term(n + chain.index()), n);
}

bool saturated_truncation_audit(const IncChain& chain, int n, int extra) {
  const int r = chain.index();
  const MonomialIdeal reference = restrict_to(chain.term(n + r), n);
  for (int m = n + r + 1; m <= n + r + extra; ++m) {
    if (restrict_to(chain.term(m), n) != reference) return false;
  }
  return true;
}

IncChain saturation(const IncChain& chain) {
  if (chain.saturated_by_construction()) return chain;
  IncChain base = chain;
  return IncChain::derived(
      chain.index(), "saturation of " + chain.description(),
      [base](int n) { return saturated_truncation(base, n); }, true);
}

std::string to_string(LambdaCertificate c) {
  switch (c) {
    case LambdaCertificate::ReachedW: return "reached w";
    case LambdaCertificate::Saturated: return "saturated";
    case LambdaCertificate::QuasiSaturated: return "quasi-saturated";
    case LambdaCertificate::TrailingConstant: return "trailing constant";
    case LambdaCertificate::Uncertified: return "uncertified";
  }
  return "uncertified";
}

int default_lambda_horizon(const IncChain& chain) {
  return 2 * chain.seed().max_generator_degree() + 4;
}

ChainInvariants chain_invariants(const IncChain& chain) {
  return chain_invariants(chain, default_lambda_horizon(chain));
}

ChainInvariants chain_invariants(const IncChain& chain, int horizon) {
  if (horizon < 0) throw InvalidArgument("chain_invariants: negative horizon");
  const int r = chain.index();
  const MonomialIdeal seed = chain.seed();
  if (!seed.is_proper_nonzero()) {
    throw InvalidArgument("chain_invariants: seed must be nonzero and proper, got " +
                          seed.to_string());
  }
  ChainInvariants inv;
  inv.horizon = horizon;
  inv.w = weights(seed).w;
  inv.q = q_invariant(seed);

  inv.saturated_window = true;
  for (int n = r; n <= r + horizon; ++n) {
    const MonomialIdeal t = chain.term(n);
    inv.lambda_series.push_back(weights(t).lambda);
    if (!chain.saturated_by_construction() && inv.saturated_window) {
      inv.saturated_window = t == saturated_truncation(chain, n);
    }
  }
  inv.lambda = *std::max_element(inv.lambda_series.begin(), inv.lambda_series.end());

  // I_{0,r+1} = <I_r>: the e = 0 colon-filtration seed equals the extension.
  inv.quasi_saturated = colon_filtration_term(chain, 0, r + 1) == seed.with_ambient(r + 1);
  inv.lambda_maximal = inv.lambda == inv.w;

  const auto& series = inv.lambda_series;
  const std::size_t half = series.size() / 2;
  const bool trailing_constant =
      series.size() >= 2 &&
      std::all_of(series.begin() + static_cast<std::ptrdiff_t>(half), series.end(),
                  [&](int v) { return v == series.back(); });
  if (inv.lambda == inv.w) {
    inv.certificate = LambdaCertificate::ReachedW;
  } else if (inv.saturated_window) {
    inv.certificate = LambdaCertificate::Saturated;
  } else if (inv.quasi_saturated) {
    inv.certificate = LambdaCertificate::QuasiSaturated;
  } else if (trailing_constant) {
    inv.certificate = LambdaCertificate::TrailingConstant;
  }
  return inv;
}

MonomialIdeal colon_filtration_term(const IncChain& chain, int e, int n) {
  if (e < 0) throw InvalidArgument("colon filtration: e must be nonnegative");
  if (n < 1) throw InvalidArgument("colon filtration: n must be at least 1");
  const int r = chain.index();
  if (n <= r) return MonomialIdeal::zero(n);
  const int p = chain.seed().maxsupp();
  const int k = n - r + p;
  const MonomialIdeal quotient =
      e == 0 ? chain.term(n) : colon(chain.term(n), Monomial::variable(n, k, e));
  return restrict_to(quotient, k - 1).with_ambient(n);
}

IncChain colon_filtration(const IncChain& chain, int e) {
  if (e < 0) throw InvalidArgument("colon filtration: e must be nonnegative");
  const int r = chain.index();
  MonomialIdeal seed = colon_filtration_term(chain, e, r + 1);
  if (seed.is_zero()) throw InvalidArgument("colon filtration of a zero chain");
  IncChain out = IncChain::orbit_unchecked(r + 1, std::move(seed), Symmetry::Inc);
  out.state_->description = "colon filtration e=" + std::to_string(e) + " of " +
                            chain.description();
  return out;
}

IncChain m_saturation(const IncChain& chain, int m) {
  if (m < 1) throw InvalidArgument("m-saturation: m must be at least 1");
  IncChain base = chain;
  return IncChain::derived(
      chain.index() + 1, std::to_string(m) + "-saturation of " + chain.description(),
      [base, m](int n) {
        std::vector<Monomial> gens;
        for (int k = 2; k <= n; ++k) {
          const Monomial xk = Monomial::variable(n, k, m);
          const MonomialIdeal prev = base.term(k - 1);
          for (const Monomial& g : prev.gens()) {
            gens.push_back(xk * g.with_ambient(n));
          }
        }
        return MonomialIdeal(n, std::move(gens));
      },
      true);
}

}  // namespace chainreg
