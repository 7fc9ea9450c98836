#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <thread>

#include "chainreg/asymptotics.hpp"
#include "chainreg/betti.hpp"
#include "chainreg/chain.hpp"
#include "chainreg/error.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace chainreg;
using testing::I;
using testing::M;

namespace {

IncChain lambda_jump() { return IncChain(3, I("x1^2, x2^2*x3, x3^2", 3)); }
IncChain squares_chain() { return IncChain(1, I("x1^2", 1)); }

MonomialIdeal squares(int n) {
  std::vector<Monomial> g;
  for (int i = 1; i <= n; ++i) g.push_back(Monomial::variable(n, i, 2));
  return MonomialIdeal(n, g);
}

Monomial random_monomial(std::mt19937_64& rng, int m, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::vector<int> d(static_cast<std::size_t>(m));
  for (auto& v : d) v = e(rng);
  return Monomial::from_exponents(d);
}

}  // namespace

TEST_CASE("Inc orbits") {
  const auto a = inc_orbit(M("x2^2*x3", 3), 3, 4);
  REQUIRE(inc_orbit_by_shifts(M("x2^2*x3", 3), 3, 4) == a);
  CHECK(a == std::set<Monomial>{M("x2^2*x3", 4), M("x2^2*x4", 4), M("x3^2*x4", 4)});
  const auto b = inc_orbit(M("x1^2", 3), 3, 4);
  REQUIRE(inc_orbit_by_shifts(M("x1^2", 3), 3, 4) == b);
  CHECK(b == std::set<Monomial>{M("x1^2", 4), M("x2^2", 4)});
  const Monomial u = M("x1*x3^2*x4", 5);
  CHECK(inc_orbit(u, 5, 5) == std::set<Monomial>{u});
  CHECK(inc_orbit(Monomial(2), 2, 4) == std::set<Monomial>{Monomial(4)});
  CHECK_THROWS_AS(inc_orbit(u, 5, 4), InvalidArgument);
  CHECK_THROWS_AS(inc_orbit(u, 3, 6), InvalidArgument);
  CHECK(shift(M("x1*x3", 3), 1) == M("x1*x4", 4));
  CHECK(shift(M("x1*x3", 3), 0) == M("x2*x4", 4));
  CHECK(shift(M("x1*x3", 3), 3) == M("x1*x3", 4));
}

TEST_CASE("direct enumeration, shift iteration and brute force agree") {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> width(1, 6);
  int checked = 0;
  for (int t = 0; t < 150; ++t) {
    const int m = width(rng);
    std::uniform_int_distribution<int> target(m, 10);
    const int n = target(rng);
    const Monomial u = random_monomial(rng, m, 2);
    const auto direct = inc_orbit(u, m, n);
    CHECK(direct == inc_orbit_by_shifts(u, m, n));
    CHECK(direct == oracle::inc_orbit(u, m, n));
    if (n <= 7) {
      const auto sym = sym_orbit(u.with_ambient(n), n);
      CHECK(std::includes(sym.begin(), sym.end(), direct.begin(), direct.end()));
      CHECK(sym == oracle::sym_orbit(u.with_ambient(n), n));
    }
    ++checked;
  }
  CHECK(checked == 150);
}

TEST_CASE("Sym orbits") {
  CHECK(sym_orbit(M("x1^2", 2), 2) == std::set<Monomial>{M("x1^2", 2), M("x2^2", 2)});
  CHECK(sym_orbit(M("x1*x2", 3), 3) ==
        std::set<Monomial>{M("x1*x2", 3), M("x1*x3", 3), M("x2*x3", 3)});
  const auto c = sym_orbit(M("x1^2*x2", 2), 2);
  REQUIRE(c == oracle::sym_orbit(M("x1^2*x2", 2), 2));
  CHECK(c == std::set<Monomial>{M("x1^2*x2", 2), M("x1*x2^2", 2)});
  CHECK_THROWS_AS(sym_orbit(M("x3", 3), 2), InvalidArgument);
}

TEST_CASE("chain terms") {
  const IncChain c = lambda_jump();
  CHECK(c.term(5) == squares(5));
  CHECK(c.term(4) == squares(4));
  CHECK(c.term(3) == I("x1^2, x2^2*x3, x3^2", 3));
  CHECK(c.term(2).is_zero());
  CHECK(c.term(1).is_zero());
  CHECK_THROWS_AS(c.term(0), InvalidArgument);

  const IncChain e34 = IncChain(6, I("x1^2*x3*x4*x5, x1*x3^2*x4*x5, x1*x3*x4^2*x5, "
                                     "x1*x3*x4*x5^2, x2*x3, x5*x6", 6));
  CHECK(e34.term(7) == I("x2*x3, x2*x4, x3*x4, x5*x6, x5*x7, x6*x7", 7));
  CHECK(e34.term(6) == e34.seed());

  for (int n = 3; n <= 7; ++n) CHECK(c.term(n + 1) == inc_step(c.term(n)));
  std::mt19937_64 rng(4);
  for (std::uint64_t s = 1; s <= 20; ++s) {
    RandomChainParams p;
    p.seed = s;
    p.r = 1 + static_cast<int>(s % 3);
    p.gens = 3;
    const IncChain rc = random_chain(p);
    for (int n = rc.index(); n <= rc.index() + 4; ++n) CHECK(rc.term(n + 1) == inc_step(rc.term(n)));
  }

  const IncChain sym(2, I("x1*x2^2", 2), Symmetry::Sym);
  CHECK(sym.term(3) == I("x1*x2^2, x1^2*x2, x1*x3^2, x1^2*x3, x2*x3^2, x2^2*x3", 3));
}

TEST_CASE("chain construction is validated") {
  CHECK_THROWS_AS(IncChain(0, I("x1", 0 + 1)), InvalidArgument);
  CHECK_THROWS_AS(IncChain(2, I("x1", 1)), InvalidArgument);
  CHECK_THROWS_AS(IncChain(2, MonomialIdeal::zero(2)), InvalidArgument);
  CHECK_THROWS_AS(IncChain(2, MonomialIdeal::unit(2)), InvalidArgument);
  // I_1 = <x1> is not carried into I_2 = <x2^2>.
  CHECK_THROWS_AS(IncChain(2, I("x2^2", 2), Symmetry::Inc, {I("x1", 1)}), InvalidArgument);
  CHECK_THROWS_AS(IncChain(3, I("x1", 3), Symmetry::Inc, {I("x1", 1)}), InvalidArgument);
  const IncChain ok(2, I("x1^2, x1*x2, x2^2", 2), Symmetry::Inc, {I("x1^2", 1)});
  CHECK(ok.term(1) == I("x1^2", 1));
  CHECK(ok.head().size() == 1);
}

TEST_CASE("concurrent term requests") {
  const IncChain c = IncChain(3, I("x1*x2^2, x2*x3", 3));
  std::vector<MonomialIdeal> seen(12);
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < 12; ++t) {
      pool.emplace_back([&, t] { seen[static_cast<std::size_t>(t)] = c.term(3 + t % 6); });
    }
  }
  const IncChain fresh = IncChain(3, I("x1*x2^2, x2*x3", 3));
  for (int t = 0; t < 12; ++t) CHECK(seen[static_cast<std::size_t>(t)] == fresh.term(3 + t % 6));
}

TEST_CASE("saturated truncation") {
  const IncChain c = lambda_jump();
  CHECK(saturated_truncation(c, 3) == squares(3));
  CHECK(saturated_truncation(c, 5) == c.term(5));
  for (int n = 1; n <= 6; ++n) {
    CHECK(saturated_truncation_audit(c, n));
    CHECK(restrict_to(saturated_truncation(c, n + 1), n) == saturated_truncation(c, n));
  }
  const IncChain sq = squares_chain();
  for (int n = 1; n <= 5; ++n) CHECK(saturated_truncation(sq, n) == sq.term(n));

  for (std::uint64_t s = 1; s <= 15; ++s) {
    RandomChainParams p;
    p.seed = s;
    p.r = 1 + static_cast<int>(s % 3);
    p.gens = 1 + static_cast<int>(s % 3);
    const IncChain rc = random_chain(p);
    const IncChain sat = saturation(rc);
    CHECK(sat.saturated_by_construction());
    for (int n = 1; n <= rc.index() + 3; ++n) {
      CHECK(saturated_truncation_audit(rc, n));
      CHECK(restrict_to(sat.term(n + 1), n) == sat.term(n));
      CHECK(is_subideal(rc.term(n), sat.term(n)));
    }
  }
}

TEST_CASE("chain invariants") {
  const ChainInvariants a = chain_invariants(lambda_jump());
  CHECK(a.lambda == 2);
  CHECK(a.lambda_series.front() == 1);
  CHECK(a.w == 2);
  CHECK(a.q == 11);
  CHECK(a.lambda_maximal);
  CHECK_FALSE(a.quasi_saturated);
  CHECK(a.certificate == LambdaCertificate::ReachedW);
  CHECK(a.horizon == default_lambda_horizon(lambda_jump()));
  CHECK(a.lambda_series.size() == static_cast<std::size_t>(a.horizon + 1));

  const ChainInvariants b = chain_invariants(squares_chain());
  CHECK(b.lambda == 2);
  CHECK(b.w == 2);
  CHECK(b.lambda_maximal);
  CHECK(b.quasi_saturated);
  CHECK(b.saturated_window);

  // <x1 x2^2, x2 x3>: lambda stays 1 < w = 2, saturated from the start.
  const ChainInvariants c = chain_invariants(saturation(IncChain(3, I("x1*x2^2, x2*x3", 3))));
  CHECK(c.lambda == 1);
  CHECK(c.w == 1);
  const ChainInvariants d = chain_invariants(IncChain(2, I("x1^2*x2, x2^3", 2)));
  CHECK(d.lambda == 1);
  CHECK(d.w == 2);
  CHECK(d.quasi_saturated);
  CHECK(d.certificate == LambdaCertificate::Saturated);
  CHECK_THROWS_AS(chain_invariants(lambda_jump(), -1), InvalidArgument);

  for (std::uint64_t s = 1; s <= 20; ++s) {
    RandomChainParams p;
    p.seed = s;
    p.r = 1 + static_cast<int>(s % 3);
    p.gens = 3;
    const ChainInvariants inv = chain_invariants(random_chain(p));
    CHECK(inv.lambda <= inv.w);
    CHECK(inv.lambda_maximal == (inv.lambda == inv.w));
    CHECK(std::is_sorted(inv.lambda_series.begin(), inv.lambda_series.end()));
  }
}

TEST_CASE("colon filtration") {
  const IncChain sq = squares_chain();
  const IncChain sq0 = colon_filtration(sq, 0);
  CHECK(sq0.index() == 2);
  CHECK(sq0.seed() == sq.seed().with_ambient(2));
  CHECK(q_invariant(sq0.seed()) == q_invariant(sq.seed()));

  const IncChain c = lambda_jump();
  const IncChain c0 = colon_filtration(c, 0);
  REQUIRE(restrict_to(c.term(4), 3) == squares(3));
  CHECK(c0.seed() == squares(3).with_ambient(4));
  CHECK(c0.seed() != c.seed().with_ambient(4));
  CHECK(q_invariant(c0.seed()) < q_invariant(c.seed()));

  // e = 2 on the squares chain: (<x1^2, x2^2> : x2^2) cap R_1 = <1>.
  CHECK(colon_filtration(sq, 2).seed().is_unit());

  for (int n = 1; n <= 6; ++n) {
    const MonomialIdeal direct = colon_filtration_term(c, 1, n);
    CHECK(direct.ambient() == n);
    if (n <= 3) CHECK(direct.is_zero());
  }
  CHECK_THROWS_AS(colon_filtration(c, -1), InvalidArgument);
  CHECK_THROWS_AS(colon_filtration_term(c, 0, 0), InvalidArgument);

  for (std::uint64_t s = 1; s <= 15; ++s) {
    RandomChainParams p;
    p.seed = s;
    p.r = 1 + static_cast<int>(s % 3);
    p.gens = 1 + static_cast<int>(s % 3);
    const IncChain rc = random_chain(p);
    const ChainInvariants inv = chain_invariants(rc);
    for (int e : {0, 1, 2, 3}) {
      const IncChain f = colon_filtration(rc, e);
      CHECK(f.index() == rc.index() + 1);
      for (int n = rc.index() + 1; n <= rc.index() + 4; ++n) {
        CHECK(f.term(n) == colon_filtration_term(rc, e, n));
        CHECK(reg(rc.term(n)) >= reg_with_unit_convention(f.term(n)));
      }
      const bool q_equal = q_invariant(f.seed()) == inv.q;
      CHECK(q_invariant(f.seed()) <= inv.q);
      CHECK(q_equal == (inv.quasi_saturated && e <= inv.lambda - 1));
    }
  }
}

TEST_CASE("m-saturation") {
  const IncChain c = lambda_jump();
  for (int m : {1, 2, 3}) {
    const IncChain j = m_saturation(c, m);
    const std::string xm = "^" + std::to_string(m);
    CHECK(j.term(1).is_zero());
    CHECK(j.term(2).is_zero());
    CHECK(j.term(3).is_zero());
    CHECK(j.term(4) == I("x1^2*x4" + xm + ", x2^2*x3*x4" + xm + ", x3^2*x4" + xm, 4));
    CHECK(j.term(5) == I("x1^2*x4" + xm + ", x2^2*x3*x4" + xm + ", x3^2*x4" + xm +
                             ", x1^2*x5" + xm + ", x2^2*x5" + xm + ", x3^2*x5" + xm +
                             ", x4^2*x5" + xm,
                         5));
    CHECK(j.saturated_by_construction());
    CHECK(j.index() == 4);
    for (int n = 1; n <= 7; ++n) CHECK(restrict_to(j.term(n + 1), n) == j.term(n));
  }
  CHECK_THROWS_AS(m_saturation(c, 0), InvalidArgument);

  for (std::uint64_t s = 1; s <= 10; ++s) {
    RandomChainParams p;
    p.seed = s;
    p.r = 1 + static_cast<int>(s % 3);
    p.gens = 2;
    const IncChain rc = random_chain(p);
    const int w = weights(rc.seed()).w;
    for (int m : {1, w, w + 1}) {
      const ChainInvariants inv = chain_invariants(m_saturation(rc, m));
      CHECK(inv.lambda == m);
      CHECK(inv.w == std::max(w, m));
      if (m >= w) CHECK(inv.lambda_maximal);
    }
  }
}
