#include "chainreg/monomial.hpp"

#include <algorithm>
#include <functional>

#include "chainreg/error.hpp"

namespace chainreg {

namespace {

void require_same_ambient(const Monomial& u, const Monomial& v,
                          const char* op) {
  if (u.ambient() != v.ambient()) {
    throw InvalidArgument(std::string(op) + ": ambient mismatch (R_" +
                          std::to_string(u.ambient()) + " vs R_" +
                          std::to_string(v.ambient()) + ")");
  }
}

// Merges two sorted factor lists; combine(a, b) sees 0 for absent entries
// and a zero result drops the variable.
template <class Combine>
std::vector<Factor> merge(const std::vector<Factor>& a,
                          const std::vector<Factor>& b, Combine combine) {
  std::vector<Factor> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    int var;
    int ea = 0;
    int eb = 0;
    if (ib == b.end() || (ia != a.end() && ia->var < ib->var)) {
      var = ia->var;
      ea = (ia++)->exp;
    } else if (ia == a.end() || ib->var < ia->var) {
      var = ib->var;
      eb = (ib++)->exp;
    } else {
      var = ia->var;
      ea = (ia++)->exp;
      eb = (ib++)->exp;
    }
    if (int e = combine(ea, eb); e > 0) out.push_back({var, e});
  }
  return out;
}

}  // namespace

Monomial::Monomial(int ambient) : ambient_(ambient) {
  if (ambient < 0) throw InvalidArgument("negative ambient width");
}

Monomial::Monomial(int ambient, std::vector<Factor> factors)
    : ambient_(ambient) {
  if (ambient < 0) throw InvalidArgument("negative ambient width");
  for (const Factor& f : factors) {
    if (f.var < 1 || f.var > ambient) {
      throw InvalidArgument("variable index x" + std::to_string(f.var) +
                            " outside R_" + std::to_string(ambient));
    }
    if (f.exp < 1) {
      throw InvalidArgument("non-positive exponent on x" +
                            std::to_string(f.var));
    }
  }
  std::sort(factors.begin(), factors.end());
  for (const Factor& f : factors) {
    if (!factors_.empty() && factors_.back().var == f.var) {
      factors_.back().exp += f.exp;
    } else {
      factors_.push_back(f);
    }
  }
}

Monomial Monomial::from_exponents(std::span<const int> exponents) {
  Monomial m(static_cast<int>(exponents.size()));
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) throw InvalidArgument("negative exponent");
    if (exponents[i] > 0) {
      m.factors_.push_back({static_cast<int>(i) + 1, exponents[i]});
    }
  }
  return m;
}

Monomial Monomial::variable(int ambient, int var, int exp) {
  return Monomial(ambient, {{var, exp}});
}

int Monomial::exponent(int var) const {
  auto it = std::lower_bound(
      factors_.begin(), factors_.end(), var,
      [](const Factor& f, int v) { return f.var < v; });
  return (it != factors_.end() && it->var == var) ? it->exp : 0;
}

int Monomial::degree() const noexcept {
  int d = 0;
  for (const Factor& f : factors_) d += f.exp;
  return d;
}

int Monomial::maxsupp() const noexcept {
  return factors_.empty() ? 0 : factors_.back().var;
}

int Monomial::last_exponent() const noexcept {
  return factors_.empty() ? 0 : factors_.back().exp;
}

int Monomial::max_exponent() const noexcept {
  int w = 0;
  for (const Factor& f : factors_) w = std::max(w, f.exp);
  return w;
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  s.reserve(factors_.size());
  for (const Factor& f : factors_) s.push_back(f.var);
  return s;
}

std::vector<int> Monomial::dense() const {
  std::vector<int> a(static_cast<std::size_t>(ambient_), 0);
  for (const Factor& f : factors_) a[static_cast<std::size_t>(f.var - 1)] = f.exp;
  return a;
}

Monomial Monomial::with_ambient(int n) const {
  if (n < 0 || maxsupp() > n) {
    throw InvalidArgument(to_string() + " does not lie in R_" +
                          std::to_string(n));
  }
  Monomial m = *this;
  m.ambient_ = n;
  return m;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const Factor& f : factors_) {
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(f.var);
    if (f.exp != 1) s += '^' + std::to_string(f.exp);
  }
  return s;
}

Monomial lcm(const Monomial& u, const Monomial& v) {
  require_same_ambient(u, v, "lcm");
  return Monomial(u.ambient(), merge(u.factors(), v.factors(),
                                     [](int a, int b) { return std::max(a, b); }));
}

Monomial gcd(const Monomial& u, const Monomial& v) {
  require_same_ambient(u, v, "gcd");
  return Monomial(u.ambient(), merge(u.factors(), v.factors(),
                                     [](int a, int b) { return std::min(a, b); }));
}

bool divides(const Monomial& u, const Monomial& v) {
  require_same_ambient(u, v, "divides");
  auto iv = v.factors().begin();
  for (const Factor& f : u.factors()) {
    while (iv != v.factors().end() && iv->var < f.var) ++iv;
    if (iv == v.factors().end() || iv->var != f.var || iv->exp < f.exp) {
      return false;
    }
  }
  return true;
}

Monomial operator*(const Monomial& u, const Monomial& v) {
  require_same_ambient(u, v, "multiply");
  return Monomial(u.ambient(),
                  merge(u.factors(), v.factors(), std::plus<int>{}));
}

Monomial quotient(const Monomial& u, const Monomial& v) {
  if (!divides(v, u)) {
    throw InvalidArgument(v.to_string() + " does not divide " + u.to_string());
  }
  return Monomial(u.ambient(),
                  merge(u.factors(), v.factors(), std::minus<int>{}));
}

Monomial colon(const Monomial& u, const Monomial& v) {
  require_same_ambient(u, v, "colon");
  return Monomial(u.ambient(), merge(u.factors(), v.factors(), [](int a, int b) {
                    return std::max(a - b, 0);
                  }));
}

bool lex_greater(const Monomial& u, const Monomial& v) {
  const auto& a = u.factors();
  const auto& b = v.factors();
  for (std::size_t i = 0;; ++i) {
    if (i == a.size()) return false;
    if (i == b.size()) return true;
    if (a[i].var != b[i].var) return a[i].var < b[i].var;
    if (a[i].exp != b[i].exp) return a[i].exp > b[i].exp;
  }
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = static_cast<std::size_t>(m.ambient()) * 0x9e3779b97f4a7c15ULL;
  for (const Factor& f : m.factors()) {
    h ^= (static_cast<std::size_t>(f.var) << 20 ^ static_cast<std::size_t>(f.exp)) +
         0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace chainreg
