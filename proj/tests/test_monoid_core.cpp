#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "chainreg/error.hpp"
#include "chainreg/primes.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace chainreg;
using testing::I;
using testing::M;

namespace {

Monomial random_monomial(std::mt19937_64& rng, int n, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::vector<int> d(static_cast<std::size_t>(n));
  for (auto& v : d) v = e(rng);
  return Monomial::from_exponents(d);
}

// J equals the intersection of the components on the box below 2 * lcm.
bool decomposition_matches(const MonomialIdeal& j, const std::vector<MonomialIdeal>& comps) {
  const int n = j.ambient();
  std::vector<int> bound = oracle::dense(j.generator_lcm(), n);
  for (int& b : bound) b = b + 1;
  bool ok = true;
  oracle::for_each_in_box(bound, [&](const oracle::Dense& a) {
    const Monomial u = oracle::from_dense(a);
    const bool in_all = std::all_of(comps.begin(), comps.end(),
                                    [&](const MonomialIdeal& c) { return contains(c, u); });
    if (in_all != contains(j, u)) ok = false;
  });
  return ok;
}

}  // namespace

TEST_CASE("monomial construction and formatting") {
  const Monomial u = M("x2*x1^2*x2", 3);
  CHECK(u.to_string() == "x1^2*x2^2");
  CHECK(u.degree() == 4);
  CHECK(u.ambient() == 3);
  CHECK(u.maxsupp() == 2);
  CHECK(Monomial(4).to_string() == "1");
  CHECK(Monomial(4).maxsupp() == 0);
  CHECK(u.dense() == std::vector<int>{2, 2, 0});
  CHECK(u.with_ambient(5).ambient() == 5);
  CHECK_THROWS_AS(u.with_ambient(1), InvalidArgument);
  CHECK_THROWS_AS(Monomial(2, {{3, 1}}), InvalidArgument);
  CHECK_THROWS_AS(Monomial(2, {{1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(Monomial(-1), InvalidArgument);
  CHECK(M("x1^4*x2", 2).last_exponent() == 1);
  CHECK(M("x1^4*x2", 2).max_exponent() == 4);
}

TEST_CASE("lcm") {
  CHECK(lcm(M("x1^4*x2", 3), M("x1^3*x3^2", 3)) == M("x1^4*x2*x3^2", 3));
  const Monomial u = M("x1*x3^5", 3);
  CHECK(lcm(u, Monomial(3)) == u);
  CHECK(lcm(M("x2^2*x3", 3), M("x3^2", 3)) == M("x2^2*x3^2", 3));
  CHECK_THROWS_AS(lcm(M("x1", 1), M("x1", 2)), InvalidArgument);
}

TEST_CASE("divides") {
  CHECK(divides(M("x1", 2), M("x1^2*x2", 2)));
  CHECK_FALSE(divides(M("x3", 3), M("x1^2", 3)));
  CHECK(divides(Monomial(3), M("x2*x3^4", 3)));
  CHECK_THROWS_AS(divides(M("x1", 1), M("x1", 2)), InvalidArgument);
}

TEST_CASE("minimalize") {
  CHECK(minimalize(3, {M("x1^2", 3), M("x1^2*x2", 3), M("x3", 3)}) == I("x1^2, x3", 3));
  const MonomialIdeal sq = minimalize(3, {M("x1^2", 3), M("x2^2", 3), M("x3^2", 3), M("x2^2*x3", 3)});
  CHECK(sq.gens() == std::vector<Monomial>{M("x1^2", 3), M("x2^2", 3), M("x3^2", 3)});
  CHECK(minimalize(3, {}).is_zero());
  CHECK(minimalize(2, {M("x1", 2), M("x1", 2)}).size() == 1);
  CHECK(MonomialIdeal::unit(3).is_unit());
  CHECK(MonomialIdeal::unit(3).to_string() == "<1>");
  CHECK(MonomialIdeal::zero(3).to_string() == "<0>");
  CHECK_THROWS_AS(minimalize(2, {M("x1", 3)}), InvalidArgument);
}

TEST_CASE("membership") {
  CHECK(contains(I("x1^2", 2), M("x1^3*x2", 2)));
  CHECK_FALSE(contains(I("x1^2, x3^2", 3), M("x2*x3", 3)));
  CHECK_FALSE(contains(MonomialIdeal::zero(3), Monomial(3)));
  CHECK_THROWS_AS(contains(I("x1", 1), M("x1", 2)), InvalidArgument);
}

TEST_CASE("colon") {
  CHECK(colon(I("x1*x3^2, x3^3", 3), M("x3", 3)) == I("x1*x3, x3^2", 3));
  CHECK(colon(I("x1^2", 1), M("x1^2", 1)).is_unit());
  // <x1 x_r^w, x_r^s> : (x1...x_r)^{w-1} = <x_r> for s >= w + 1, w >= 2.
  for (int r : {2, 3, 4}) {
    for (int w : {2, 3}) {
      for (int s : {w + 1, w + 3}) {
        std::vector<Factor> all;
        for (int i = 1; i <= r; ++i) all.push_back({i, w - 1});
        const MonomialIdeal j(r, {Monomial(r, {{1, 1}, {r, w}}), Monomial::variable(r, r, s)});
        CHECK(colon(j, Monomial(r, all)) == MonomialIdeal(r, {Monomial::variable(r, r)}));
      }
    }
  }
}

TEST_CASE("colon stable exponent") {
  // Oracle: the first d with J : x_k^d = J : x_k^{d+1}, by powers.
  auto oracle_d = [](const MonomialIdeal& j, int k) {
    for (int d = 0;; ++d) {
      const MonomialIdeal a = d == 0 ? j : colon(j, Monomial::variable(j.ambient(), k, d));
      if (a == colon(j, Monomial::variable(j.ambient(), k, d + 1))) return d;
    }
  };
  const MonomialIdeal a = I("x1^2", 1);
  const MonomialIdeal b = I("x2", 2);
  const MonomialIdeal c = I("x1*x2, x2^3", 2);
  REQUIRE(oracle_d(a, 1) == 2);
  REQUIRE(oracle_d(b, 1) == 0);
  REQUIRE(oracle_d(c, 2) == 3);
  CHECK(colon_stable_exponent(a, 1) == 2);
  CHECK(colon_stable_exponent(b, 1) == 0);
  CHECK(colon_stable_exponent(c, 2) == 3);
  CHECK_THROWS_AS(colon_stable_exponent(b, 3), InvalidArgument);
  CHECK_THROWS_AS(colon_stable_exponent(b, 0), InvalidArgument);

  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    const MonomialIdeal j = oracle::random_ideal(rng, 3, 3, 3);
    for (int k = 1; k <= 3; ++k) {
      const int d = colon_stable_exponent(j, k);
      CHECK(d == oracle_d(j, k));
      int bound = 0;
      for (const Monomial& g : j.gens()) bound = std::max(bound, g.exponent(k));
      CHECK(d <= bound);
    }
  }
}

TEST_CASE("restrict") {
  CHECK(restrict_to(I("x1^2, x2^2*x3, x3^2", 3), 2) == I("x1^2", 2));
  CHECK(restrict_to(I("x1^2, x2^2, x3^2, x4^2", 4), 3) == I("x1^2, x2^2, x3^2", 3));
  CHECK(restrict_to(I("x1^2, x2", 2), 0).is_zero());
  CHECK(restrict_to(I("x1^2, x2", 2), 0).ambient() == 0);
  CHECK_THROWS_AS(restrict_to(I("x1", 1), -1), InvalidArgument);
}

TEST_CASE("weights") {
  const Weights a = weights(I("x1^4*x2, x1^3*x3^2", 3));
  CHECK(a.lambda == 1);
  CHECK(a.w == 3);
  CHECK(a.maxsupp == 3);
  CHECK(a.delta == 5);
  const Weights b = weights(I("x1^2", 1));
  CHECK(b.lambda == 2);
  CHECK(b.w == 2);
  CHECK(b.maxsupp == 1);
  CHECK(b.delta == 2);
  const Weights c = weights(I("x1^2, x2^2*x3, x3^2", 3));
  CHECK(c.lambda == 1);
  CHECK(c.w == 2);
  CHECK(c.maxsupp == 3);
  CHECK(c.delta == 3);
  CHECK_THROWS_AS(weights(MonomialIdeal::zero(2)), InvalidArgument);
  CHECK_THROWS_AS(weights(MonomialIdeal::unit(2)), InvalidArgument);
}

TEST_CASE("hilbert count") {
  const MonomialIdeal sq = I("x1^2", 2);
  CHECK(hilbert_count(sq, 1, 0) == 1);
  CHECK(hilbert_count(sq, 1, 1) == 1);
  CHECK(hilbert_count(sq, 1, 2) == 0);
  const MonomialIdeal j = I("x1^2, x2^2*x3, x3^2", 3);
  REQUIRE(oracle::hilbert_count(j, 3, 3) == 3);
  CHECK(hilbert_count(j, 3, 3) == 3);
  for (int p = 0; p <= 4; ++p) CHECK(hilbert_count(j.with_ambient(4), p, 0) == 1);
  CHECK(hilbert_count(MonomialIdeal::unit(2), 2, 0) == 0);
  CHECK_THROWS_AS(hilbert_count(j, -1, 2), InvalidArgument);
  CHECK_THROWS_AS(hilbert_count(j, 2, -1), InvalidArgument);
  CHECK_THROWS_AS(hilbert_count(j, 12, 30, 1000), ResourceLimitExceeded);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const MonomialIdeal r = oracle::random_ideal(rng, 4, 3, 3);
    for (int p = 0; p <= 4; ++p) {
      for (int deg = 0; deg <= 5; ++deg) {
        CHECK(hilbert_count(r, p, deg) == oracle::hilbert_count(r, p, deg));
      }
    }
  }
}

TEST_CASE("q-invariant") {
  CHECK(q_invariant(I("x1^2", 2)) == 2);
  CHECK(q_invariant(MonomialIdeal::unit(3)) == 0);
  const MonomialIdeal j = I("x1^2, x2^2*x3, x3^2", 3);
  std::uint64_t expected = 0;
  for (int deg = 0; deg <= 3; ++deg) expected += oracle::hilbert_count(j, 3, deg);
  REQUIRE(expected == 11);
  CHECK(q_invariant(j) == 11);
  CHECK_THROWS_AS(q_invariant(MonomialIdeal::zero(2)), InvalidArgument);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const MonomialIdeal r = oracle::random_ideal(rng, 3, 3, 2);
    if (r.is_unit()) continue;
    CHECK(q_invariant(r) > 0);
  }
}

TEST_CASE("associated primes") {
  using P = std::set<MonomialPrime>;
  CHECK(associated_primes(I("x1*x2", 2)) == P{MonomialPrime({1}), MonomialPrime({2})});
  const MonomialIdeal mixed = I("x1^2, x1*x2", 2);
  REQUIRE(colon(mixed, M("x1", 2)) == I("x1, x2", 2));
  REQUIRE(colon(mixed, M("x2", 2)) == I("x1", 2));
  CHECK(associated_primes(mixed) == P{MonomialPrime({1}), MonomialPrime({1, 2})});
  CHECK(associated_primes(I("x1^2, x2^2", 2)) == P{MonomialPrime({1, 2})});
  CHECK(MonomialPrime({1, 3}).to_string() == "<x1, x3>");
  CHECK_THROWS_AS(MonomialPrime({}), InvalidArgument);
  CHECK_THROWS_AS(MonomialPrime({0}), InvalidArgument);
  CHECK_THROWS_AS(associated_primes(MonomialIdeal::zero(2)), InvalidArgument);
  CHECK_THROWS_AS(associated_primes(MonomialIdeal::unit(2)), InvalidArgument);
}

TEST_CASE("associated primes agree with the colon definition") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 60; ++t) {
    std::uniform_int_distribution<int> count(1, 5);
    const MonomialIdeal j = oracle::random_ideal(rng, 3, count(rng), 3);
    if (!j.is_proper_nonzero()) continue;
    CHECK(associated_primes(j) == associated_primes_by_colon(j));
    CHECK(decomposition_matches(j, irreducible_components(j)));
  }
}

TEST_CASE("algebraic identities") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 200; ++t) {
    const Monomial u = random_monomial(rng, 4, 3);
    const Monomial v = random_monomial(rng, 4, 3);
    CHECK(divides(u, v) == (lcm(u, v) == v));
    CHECK(gcd(u, v) * lcm(u, v) == u * v);
  }
  for (int t = 0; t < 60; ++t) {
    const MonomialIdeal j = oracle::random_ideal(rng, 4, 4, 3);
    std::vector<Monomial> shuffled = j.gens();
    shuffled.push_back(j.gens().front() * random_monomial(rng, 4, 1));
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(minimalize(4, shuffled) == j);
    CHECK(minimalize(4, j.gens()) == j);

    const Monomial u = random_monomial(rng, 4, 2);
    const Monomial v = random_monomial(rng, 4, 2);
    CHECK(colon(colon(j, u), v) == colon(j, u * v));

    for (int k = 0; k <= 4; ++k) {
      for (int k2 = 0; k2 <= 4; ++k2) {
        CHECK(restrict_to(restrict_to(j, k), k2).with_ambient(std::min(k, k2)) ==
              restrict_to(j, std::min(k, k2)));
      }
    }
    if (j.is_proper_nonzero()) {
      const Weights wt = weights(j);
      CHECK(wt.lambda <= wt.w);
    }
  }
}
