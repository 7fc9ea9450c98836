#include "chainreg/betti.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "chainreg/error.hpp"

namespace chainreg {

namespace {

using Exponents = std::vector<int>;

struct ExponentsHash {
  std::size_t operator()(const Exponents& a) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int e : a) h = (h ^ static_cast<std::size_t>(e)) * 1099511628211ULL;
    return h;
  }
};

void require_proper_nonzero(const MonomialIdeal& ideal, const char* op) {
  if (ideal.is_zero()) throw InvalidArgument(std::string(op) + ": zero ideal");
  if (ideal.is_unit()) throw InvalidArgument(std::string(op) + ": unit ideal");
}

bool leq(const Exponents& g, const Exponents& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (g[i] > a[i]) return false;
  }
  return true;
}

std::vector<Exponents> dense_generators(const MonomialIdeal& ideal) {
  std::vector<Exponents> gens;
  gens.reserve(ideal.size());
  for (const Monomial& g : ideal.gens()) gens.push_back(g.dense());
  return gens;
}

// Facets of the upper Koszul complex at a: for each generator g dividing x^a,
// the positions i of supp(a) with g_i < a_i. The complex is generated by
// these sets since x^a / x^F is in J iff some such g has F inside its set.
std::vector<FaceMask> koszul_facets(const std::vector<Exponents>& gens,
                                    const Exponents& a,
                                    const std::vector<int>& support) {
  std::vector<FaceMask> masks;
  for (const Exponents& g : gens) {
    if (!leq(g, a)) continue;
    FaceMask m = 0;
    for (std::size_t j = 0; j < support.size(); ++j) {
      std::size_t v = static_cast<std::size_t>(support[j]);
      if (g[v] < a[v]) m |= FaceMask{1} << j;
    }
    masks.push_back(m);
  }
  return maximal_faces(std::move(masks));
}

// Reduced homology ranks of the complex generated by the facets, through
// whichever of the complex and its nerve has fewer vertices.
std::vector<std::uint64_t> facet_homology(const std::vector<FaceMask>& facets,
                                          std::size_t vertex_count,
                                          const FieldSpec& field, int vertex_cap) {
  if (facets.empty()) return {};
  FaceMask common = ~FaceMask{0};
  for (FaceMask f : facets) common &= f;
  if (common != 0) return {};  // cone

  if (facets.size() < vertex_count) {
    if (facets.size() > static_cast<std::size_t>(vertex_cap)) {
      throw ResourceLimitExceeded("Koszul complex nerve has " +
                                  std::to_string(facets.size()) + " vertices");
    }
    return homology_ranks(SimplicialComplex::nerve(facets), field);
  }
  if (vertex_count > static_cast<std::size_t>(vertex_cap)) {
    throw ResourceLimitExceeded("Koszul complex has " + std::to_string(vertex_count) +
                                " vertices");
  }
  std::vector<int> labels(vertex_count);
  for (std::size_t i = 0; i < vertex_count; ++i) labels[i] = static_cast<int>(i);
  return homology_ranks(SimplicialComplex::from_facets(std::move(labels), facets), field);
}

std::vector<int> support_positions(const Exponents& a) {
  std::vector<int> s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0) s.push_back(static_cast<int>(i));
  }
  return s;
}

std::vector<Exponents> closure(const std::vector<Exponents>& gens, std::size_t cap) {
  std::unordered_set<Exponents, ExponentsHash> seen(gens.begin(), gens.end());
  std::vector<Exponents> all(seen.begin(), seen.end());
  std::vector<Exponents> frontier = all;
  while (!frontier.empty()) {
    std::vector<Exponents> next;
    for (const Exponents& l : frontier) {
      for (const Exponents& g : gens) {
        if (leq(g, l)) continue;
        Exponents m = l;
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::max(m[i], g[i]);
        if (seen.insert(m).second) {
          if (seen.size() > cap) {
            throw ResourceLimitExceeded("lcm lattice exceeds " + std::to_string(cap) +
                                        " elements");
          }
          next.push_back(m);
          all.push_back(std::move(m));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

void BettiTable::set(int i, Monomial degree, std::uint64_t value) {
  if (degree.ambient() != ambient_) {
    throw InvalidArgument("Betti entry in the wrong ring");
  }
  if (value == 0) {
    entries_.erase({i, degree});
    return;
  }
  entries_[{i, std::move(degree)}] = value;
}

std::uint64_t BettiTable::at(int i, const Monomial& degree) const {
  auto it = entries_.find({i, degree});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::pd() const {
  if (entries_.empty()) throw InvalidArgument("pd of an empty Betti table");
  int p = 0;
  for (const auto& [key, value] : entries_) p = std::max(p, key.first);
  return p;
}

int BettiTable::reg() const {
  if (entries_.empty()) throw InvalidArgument("reg of an empty Betti table");
  bool first = true;
  int r = 0;
  for (const auto& [key, value] : entries_) {
    int v = key.second.degree() - key.first;
    r = first ? v : std::max(r, v);
    first = false;
  }
  return r;
}

std::uint64_t BettiTable::total(std::optional<int> i) const {
  std::uint64_t t = 0;
  for (const auto& [key, value] : entries_) {
    if (!i || key.first == *i) t += value;
  }
  return t;
}

std::map<std::pair<int, int>, std::uint64_t> BettiTable::graded() const {
  std::map<std::pair<int, int>, std::uint64_t> out;
  for (const auto& [key, value] : entries_) out[{key.first, key.second.degree()}] += value;
  return out;
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, const ResourceLimits& limits) {
  const auto& gens = ideal.gens();
  if (gens.size() > limits.subset_generator_cap) {
    throw ResourceLimitExceeded("lcm lattice: " + std::to_string(gens.size()) +
                                " generators exceed the subset cap of " +
                                std::to_string(limits.subset_generator_cap));
  }
  std::unordered_set<Monomial, MonomialHash> seen;
  const std::uint64_t subsets = std::uint64_t{1} << gens.size();
  for (std::uint64_t s = 1; s < subsets; ++s) {
    Monomial l(ideal.ambient());
    for (std::uint64_t rest = s; rest; rest &= rest - 1) {
      l = lcm(l, gens[static_cast<std::size_t>(std::countr_zero(rest))]);
    }
    seen.insert(std::move(l));
  }
  std::vector<Monomial> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> lcm_lattice_closure(const MonomialIdeal& ideal,
                                          const ResourceLimits& limits) {
  std::vector<Monomial> out;
  for (const Exponents& a : closure(dense_generators(ideal), limits.lattice_cap)) {
    out.push_back(Monomial::from_exponents(a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex koszul_complex(const MonomialIdeal& ideal, const Monomial& a) {
  if (a.ambient() != ideal.ambient()) {
    throw InvalidArgument("koszul_complex: ambient mismatch");
  }
  const Exponents dense = a.dense();
  const std::vector<int> support = support_positions(dense);
  std::vector<int> labels;
  for (int v : support) labels.push_back(v + 1);
  return SimplicialComplex::from_facets(
      std::move(labels), koszul_facets(dense_generators(ideal), dense, support));
}

std::vector<std::uint64_t> koszul_homology(const MonomialIdeal& ideal, const Monomial& a,
                                           const FieldSpec& field) {
  return homology_ranks(koszul_complex(ideal, a), field);
}

BettiTable betti_table(const MonomialIdeal& ideal, const FieldSpec& field,
                       const ResourceLimits& limits) {
  require_proper_nonzero(ideal, "betti_table");
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Exponents> gens = dense_generators(ideal);
  const std::vector<Exponents> lattice = closure(gens, limits.lattice_cap);

  std::vector<std::vector<std::uint64_t>> ranks(lattice.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    try {
      for (std::size_t idx; !stop && (idx = next++) < lattice.size();) {
        if (limits.term_budget.count() > 0 && idx % 64 == 0 &&
            std::chrono::steady_clock::now() - start > limits.term_budget) {
          throw ResourceLimitExceeded("Betti table exceeded its time budget of " +
                                      std::to_string(limits.term_budget.count()) + " ms");
        }
        const Exponents& a = lattice[idx];
        const std::vector<int> support = support_positions(a);
        ranks[idx] = facet_homology(koszul_facets(gens, a, support), support.size(), field,
                                    limits.vertex_cap);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      stop = true;
    }
  };

  if (limits.jobs < 2) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < limits.jobs; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  BettiTable table(ideal.ambient(), field);
  for (std::size_t idx = 0; idx < lattice.size(); ++idx) {
    for (std::size_t i = 0; i < ranks[idx].size(); ++i) {
      if (ranks[idx][i]) {
        table.set(static_cast<int>(i), Monomial::from_exponents(lattice[idx]), ranks[idx][i]);
      }
    }
  }
  return table;
}

int pd(const MonomialIdeal& ideal, const FieldSpec& field, const ResourceLimits& limits) {
  return betti_table(ideal, field, limits).pd();
}

int reg(const MonomialIdeal& ideal, const FieldSpec& field, const ResourceLimits& limits) {
  return betti_table(ideal, field, limits).reg();
}

int reg_with_unit_convention(const MonomialIdeal& ideal, const FieldSpec& field,
                             const ResourceLimits& limits) {
  if (ideal.is_unit()) return 0;
  return reg(ideal, field, limits);
}

std::map<Monomial, long long> taylor_euler_coefficients(const MonomialIdeal& ideal,
                                                        const ResourceLimits& limits) {
  const auto& gens = ideal.gens();
  if (gens.size() > limits.subset_generator_cap) {
    throw ResourceLimitExceeded("Taylor complex: " + std::to_string(gens.size()) +
                                " generators exceed the subset cap of " +
                                std::to_string(limits.subset_generator_cap));
  }
  std::map<Monomial, long long> coefficients;
  const std::uint64_t subsets = std::uint64_t{1} << gens.size();
  for (std::uint64_t s = 1; s < subsets; ++s) {
    Monomial l(ideal.ambient());
    for (std::uint64_t rest = s; rest; rest &= rest - 1) {
      l = lcm(l, gens[static_cast<std::size_t>(std::countr_zero(rest))]);
    }
    coefficients[l] += (std::popcount(s) % 2 == 1) ? 1 : -1;
  }
  std::erase_if(coefficients, [](const auto& kv) { return kv.second == 0; });
  return coefficients;
}

bool euler_consistency(const MonomialIdeal& ideal, const FieldSpec& field,
                       const ResourceLimits& limits) {
  const auto expected = taylor_euler_coefficients(ideal, limits);
  std::map<Monomial, long long> observed;
  const BettiTable table = betti_table(ideal, field, limits);
  for (const auto& [key, value] : table.entries()) {
    long long v = static_cast<long long>(value);
    observed[key.second] += (key.first % 2 == 0) ? v : -v;
  }
  std::erase_if(observed, [](const auto& kv) { return kv.second == 0; });
  return observed == expected;
}

ColonBoundsReport reg_colon_bounds_check(const MonomialIdeal& ideal, int k,
                                         const FieldSpec& field,
                                         const ResourceLimits& limits) {
  require_proper_nonzero(ideal, "reg_colon_bounds_check");
  ColonBoundsReport report;
  report.k = k;
  report.d = colon_stable_exponent(ideal, k);
  report.reg = reg(ideal, field, limits);

  const MonomialIdeal xk(ideal.ambient(), {Monomial::variable(ideal.ambient(), k)});
  const Monomial x = Monomial::variable(ideal.ambient(), k);
  Monomial power(ideal.ambient());
  int lower = 0;
  report.lower_bound_holds = true;
  for (int e = 0; e <= report.d; ++e, power = power * x) {
    const MonomialIdeal reduced = colon(ideal, power) + xk;
    int candidate;
    if (reduced.is_unit()) {
      report.colon_regs.push_back(std::nullopt);
      report.saw_unit = true;
      candidate = e;
    } else {
      int r = reg(reduced, field, limits);
      report.colon_regs.push_back(r);
      lower = std::max(lower, r);
      candidate = r + e;
    }
    if (candidate == report.reg) report.membership_holds = true;
  }
  report.lower_bound_holds = lower <= report.reg;
  return report;
}

}  // namespace chainreg
