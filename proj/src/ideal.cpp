#include "chainreg/ideal.hpp"

#include <algorithm>
#include <functional>

#include "chainreg/error.hpp"

namespace chainreg {

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal, const char* op) {
  if (ideal.is_zero()) {
    throw InvalidArgument(std::string(op) + ": zero ideal");
  }
  if (ideal.is_unit()) {
    throw InvalidArgument(std::string(op) + ": unit ideal");
  }
}

// C(n, k) saturating at max + 1 so caps can be compared without overflow.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k,
                              std::uint64_t max) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > max) return max + 1;
  }
  return static_cast<std::uint64_t>(c);
}

}  // namespace

MonomialIdeal::MonomialIdeal(int ambient, std::vector<Monomial> monomials)
    : ambient_(ambient) {
  if (ambient < 0) throw InvalidArgument("negative ambient width");
  for (const Monomial& m : monomials) {
    if (m.ambient() != ambient) {
      throw InvalidArgument("generator " + m.to_string() + " lives in R_" +
                            std::to_string(m.ambient()) + ", ideal in R_" +
                            std::to_string(ambient));
    }
  }
  std::sort(monomials.begin(), monomials.end(),
            [](const Monomial& a, const Monomial& b) {
              if (a.degree() != b.degree()) return a.degree() < b.degree();
              return a < b;
            });
  monomials.erase(std::unique(monomials.begin(), monomials.end()),
                  monomials.end());
  for (Monomial& m : monomials) {
    bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) {
      return divides(g, m);
    });
    if (!redundant) gens_.push_back(std::move(m));
  }
  std::sort(gens_.begin(), gens_.end(), lex_greater);
}

MonomialIdeal MonomialIdeal::zero(int ambient) { return MonomialIdeal(ambient, {}); }

MonomialIdeal MonomialIdeal::unit(int ambient) {
  return MonomialIdeal(ambient, {Monomial(ambient)});
}

int MonomialIdeal::maxsupp() const noexcept {
  int p = 0;
  for (const Monomial& g : gens_) p = std::max(p, g.maxsupp());
  return p;
}

int MonomialIdeal::max_generator_degree() const noexcept {
  int d = 0;
  for (const Monomial& g : gens_) d = std::max(d, g.degree());
  return d;
}

Monomial MonomialIdeal::generator_lcm() const {
  Monomial l(ambient_);
  for (const Monomial& g : gens_) l = lcm(l, g);
  return l;
}

MonomialIdeal MonomialIdeal::with_ambient(int n) const {
  if (n < 0) throw InvalidArgument("negative ambient width");
  std::vector<Monomial> moved;
  moved.reserve(gens_.size());
  for (const Monomial& g : gens_) moved.push_back(g.with_ambient(n));
  MonomialIdeal out;
  out.ambient_ = n;
  out.gens_ = std::move(moved);
  return out;
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "<0>";
  std::string s = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ">";
}

MonomialIdeal minimalize(int ambient, std::vector<Monomial> monomials) {
  return MonomialIdeal(ambient, std::move(monomials));
}

bool contains(const MonomialIdeal& ideal, const Monomial& u) {
  if (u.ambient() != ideal.ambient()) {
    throw InvalidArgument("membership: ambient mismatch");
  }
  return std::any_of(ideal.gens().begin(), ideal.gens().end(),
                     [&](const Monomial& g) { return divides(g, u); });
}

bool is_subideal(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient() != b.ambient()) {
    throw InvalidArgument("containment: ambient mismatch");
  }
  return std::all_of(a.gens().begin(), a.gens().end(),
                     [&](const Monomial& g) { return contains(b, g); });
}

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient() != b.ambient()) {
    throw InvalidArgument("ideal sum: ambient mismatch");
  }
  std::vector<Monomial> all = a.gens();
  all.insert(all.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.ambient(), std::move(all));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u) {
  std::vector<Monomial> quotients;
  quotients.reserve(ideal.size());
  for (const Monomial& g : ideal.gens()) quotients.push_back(colon(g, u));
  return MonomialIdeal(ideal.ambient(), std::move(quotients));
}

int colon_stable_exponent(const MonomialIdeal& ideal, int k) {
  if (k < 1 || k > ideal.ambient()) {
    throw InvalidArgument("colon_stable_exponent: variable x" +
                          std::to_string(k) + " outside R_" +
                          std::to_string(ideal.ambient()));
  }
  const Monomial xk = Monomial::variable(ideal.ambient(), k);
  MonomialIdeal current = ideal;
  for (int d = 0;; ++d) {
    MonomialIdeal next = colon(current, xk);
    if (next == current) return d;
    current = std::move(next);
  }
}

MonomialIdeal restrict_to(const MonomialIdeal& ideal, int k) {
  if (k < 0) throw InvalidArgument("restrict: negative width");
  std::vector<Monomial> kept;
  for (const Monomial& g : ideal.gens()) {
    if (g.maxsupp() <= k) kept.push_back(g.with_ambient(k));
  }
  return MonomialIdeal(k, std::move(kept));
}

Weights weights(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "weights");
  Weights out{0, 0, 0, 0};
  bool first = true;
  for (const Monomial& g : ideal.gens()) {
    int lam = g.last_exponent();
    int w = g.max_exponent();
    out.lambda = first ? lam : std::min(out.lambda, lam);
    out.w = first ? w : std::min(out.w, w);
    out.maxsupp = std::max(out.maxsupp, g.maxsupp());
    out.delta = std::max(out.delta, g.degree());
    first = false;
  }
  return out;
}

std::uint64_t hilbert_count(const MonomialIdeal& ideal, int p, int j,
                            std::uint64_t cap) {
  if (p < 0 || j < 0) {
    throw InvalidArgument("hilbert_count: negative width or degree");
  }
  const MonomialIdeal sub = restrict_to(ideal, std::min(p, ideal.ambient()));
  if (p == 0) return (j == 0 && !sub.is_unit()) ? 1 : 0;

  std::uint64_t candidates = binomial_capped(
      static_cast<std::uint64_t>(j + p - 1), static_cast<std::uint64_t>(p - 1), cap);
  if (candidates > cap) {
    throw ResourceLimitExceeded("hilbert_count: more than " +
                                std::to_string(cap) +
                                " candidate monomials of degree " +
                                std::to_string(j) + " in " +
                                std::to_string(p) + " variables");
  }

  std::vector<std::vector<int>> dense_gens;
  dense_gens.reserve(sub.size());
  for (const Monomial& g : sub.gens()) {
    std::vector<int> d = g.dense();
    d.resize(static_cast<std::size_t>(p), 0);
    dense_gens.push_back(std::move(d));
  }

  std::vector<int> a(static_cast<std::size_t>(p), 0);
  std::uint64_t outside = 0;
  std::function<void(int, int)> place = [&](int var, int left) {
    if (var == p - 1) {
      a[static_cast<std::size_t>(var)] = left;
      bool in_ideal = std::any_of(
          dense_gens.begin(), dense_gens.end(), [&](const std::vector<int>& g) {
            for (int i = 0; i < p; ++i) {
              if (g[static_cast<std::size_t>(i)] > a[static_cast<std::size_t>(i)]) {
                return false;
              }
            }
            return true;
          });
      if (!in_ideal) ++outside;
      return;
    }
    for (int e = left; e >= 0; --e) {
      a[static_cast<std::size_t>(var)] = e;
      place(var + 1, left - e);
    }
  };
  place(0, j);
  return outside;
}

std::uint64_t q_invariant(const MonomialIdeal& ideal, std::uint64_t cap) {
  if (ideal.is_zero()) throw InvalidArgument("q_invariant: zero ideal");
  if (ideal.is_unit()) return 0;
  const int p = ideal.maxsupp();
  const int delta = ideal.max_generator_degree();
  std::uint64_t q = 0;
  for (int j = 0; j <= delta; ++j) q += hilbert_count(ideal, p, j, cap);
  return q;
}

}  // namespace chainreg
