#include <doctest.h>

#include <map>
#include <optional>

#include "abelian/symplectic_lattice.hpp"
#include "oracles.hpp"

using namespace abelian;
using namespace testing_support;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("standard gram") {
  CHECK(standard_gram(1) == IntMatrix::from_rows({iv({0, 1}), iv({-1, 0})}));
  const IntMatrix j = standard_gram(2);
  CHECK(j == IntMatrix::from_rows({iv({0, 1, 0, 0}), iv({-1, 0, 0, 0}), iv({0, 0, 0, 1}), iv({0, 0, -1, 0})}));
  CHECK_THROWS_AS(standard_gram(0), DomainError);
  // w(e0 - e1, f0 - f1) = 1 + 1
  CHECK(SymplecticSpace(2).pairing(iv({1, 0, -1, 0}), iv({0, 1, 0, -1})) == 2);
  CHECK(omega(iv({1, 0, -1, 0}), iv({0, 1, 0, -1})) == 2);
}

TEST_CASE("indivisible vectors") {
  CHECK(is_indivisible(iv({1, 0, 0, 0})));
  CHECK_FALSE(is_indivisible(iv({2, 4, 0, 6})));
  CHECK(is_indivisible(iv({2, 3, 0, 0})));
  CHECK_THROWS_AS(is_indivisible(iv({0, 0, 0, 0})), DomainError);
}

TEST_CASE("saturation examples") {
  const Sublattice s(2, {iv({2, 0, 1, 0}), iv({0, 2, 0, 1})});
  CHECK(saturated_in_box(s, 3));
  CHECK(saturate(s) == s);
  CHECK(is_complete(s));

  const Sublattice line(1, {iv({3, 0})});
  CHECK(saturate(line) == Sublattice(1, {iv({1, 0})}));

  // e0 + e2, f0 + f2, e1, 2 f1 in genus 3
  const Sublattice cover(3, {iv({1, 0, 0, 0, 1, 0}), iv({0, 1, 0, 0, 0, 1}), iv({0, 0, 1, 0, 0, 0}),
                             iv({0, 0, 0, 2, 0, 0})});
  CHECK_FALSE(is_complete(cover));
  CHECK_FALSE(cover.contains(iv({0, 0, 0, 1, 0, 0})));
  CHECK(saturate(cover).contains(iv({0, 0, 0, 1, 0, 0})));
  CHECK(saturated_in_box(saturate(cover), 1));

  CHECK(is_complete(Sublattice(2, {iv({1, 0, -1, 0}), iv({0, 1, 0, -1})})));
  CHECK(is_complete(Sublattice::full(3)));
  CHECK_THROWS_AS(Sublattice(2, {iv({1, 0, 0, 0}), iv({2, 0, 0, 0})}), DomainError);
}

TEST_CASE("saturation is idempotent and agrees with brute force") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int g = static_cast<int>(uniform(rng, 1, 2));
    const auto r = static_cast<std::size_t>(uniform(rng, 1, 2 * g));
    std::vector<IntVector> vs;
    for (std::size_t i = 0; i < r; ++i) vs.push_back(random_vector(rng, static_cast<std::size_t>(2 * g), 3));
    if (rank(to_rational(IntMatrix::from_rows(vs))) != r) continue;
    const Sublattice s(g, vs);
    const Sublattice sat = saturate(s);
    CHECK(saturate(sat) == sat);
    CHECK(sat.rank() == s.rank());
    for (const auto& b : s.basis()) CHECK(sat.contains(b));
    CHECK(saturated_in_box(sat, 2));
  }
}

TEST_CASE("determinant examples") {
  CHECK(determinant(Sublattice::full(2)) == 1);
  CHECK(determinant(Sublattice(2, {iv({1, 0, -1, 0}), iv({0, 1, 0, -1})})) == 2);
  // dQ + Q with d = 7 inside genus 2: x1 = e0, x2 = 7 f0, x3 = e1, x4 = f1
  const Sublattice dq(2, {iv({1, 0, 0, 0}), iv({0, 7, 0, 0}), iv({0, 0, 1, 0}), iv({0, 0, 0, 1})});
  CHECK(determinant(dq) == 7);
  CHECK_THROWS_AS(determinant(Sublattice(2, {iv({1, 0, 0, 0})})), DomainError);
  CHECK_THROWS_AS(determinant(Sublattice(2, {iv({1, 0, 0, 0}), iv({0, 0, 1, 0})})), DomainError);
}

TEST_CASE("determinant is invariant under basis change and Sp action") {
  std::mt19937_64 rng(12);
  int checked = 0;
  while (checked < 50) {
    const int g = static_cast<int>(uniform(rng, 1, 4));
    auto s = random_complete(rng, g, 2 * static_cast<std::size_t>(uniform(rng, 1, g)));
    if (!s) continue;
    const Integer d = determinant(*s);
    const IntMatrix a = random_symplectic(rng, g);
    const SpMatrix sp(a);
    CHECK(determinant(sp.apply(*s)) == d);
    // unimodular change of basis: add a multiple of one basis vector to another
    auto basis = s->basis();
    if (basis.size() > 1) {
      for (std::size_t i = 0; i < basis[0].size(); ++i) basis[0][i] += 3 * basis[1][i];
    }
    std::swap(basis.front(), basis.back());
    CHECK(determinant(Sublattice(g, basis)) == d);
    ++checked;
  }
}

TEST_CASE("alternating normal form") {
  CHECK(alternating_normal_form(Sublattice::full(2)).divisors == std::vector<Integer>{1, 1});
  const Sublattice dq(2, {iv({0, 3, 0, 0}), iv({1, 0, 0, 0}), iv({0, 0, 1, 0}), iv({0, 0, 0, 1})});
  CHECK(alternating_normal_form(dq).divisors == std::vector<Integer>{1, 3});

  std::mt19937_64 rng(13);
  int checked = 0;
  while (checked < 60) {
    const std::size_t r = 2 * static_cast<std::size_t>(uniform(rng, 1, 3));
    IntMatrix g(r, r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t k = i + 1; k < r; ++k) {
        g(i, k) = uniform(rng, -12, 12);
        g(k, i) = -g(i, k);
      }
    }
    if (integer_determinant(g) == 0) continue;
    const auto nf = alternating_normal_form(g);
    // P^T G P is the block form
    const IntMatrix blocks = nf.change.transpose() * g * nf.change;
    IntMatrix expected(r, r);
    for (std::size_t i = 0; i < nf.divisors.size(); ++i) {
      expected(2 * i, 2 * i + 1) = nf.divisors[i];
      expected(2 * i + 1, 2 * i) = -nf.divisors[i];
    }
    CHECK(blocks == expected);
    CHECK(abs(integer_determinant(nf.change)) == 1);
    // Smith invariants come in equal pairs (d1, d1, d2, d2, ...)
    Integer prev = 1;
    for (std::size_t k = 1; k <= r; ++k) {
      const Integer dk = determinantal_divisor(g, k);
      const Integer invariant = dk / prev;
      CHECK(invariant == nf.divisors[(k - 1) / 2]);
      prev = dk;
    }
    for (std::size_t i = 1; i < nf.divisors.size(); ++i) CHECK(divides(nf.divisors[i - 1], nf.divisors[i]));
    ++checked;
  }
}

TEST_CASE("extend to symplectic basis") {
  CHECK(extend_to_symplectic_basis(iv({1, 0, 0, 0})).entries() == IntMatrix::identity(4));
  for (const auto& v : {iv({1, 0, 0, 1}), iv({2, 3, 0, 0}), iv({6, 10, 15, 0, 0, 7}), iv({0, 0, 0, 0, 0, 1})}) {
    const SpMatrix a = extend_to_symplectic_basis(v);
    CHECK(is_symplectic(a.entries()));
    CHECK(a.entries().column(0) == v);
    CHECK(a.inverse() * a == SpMatrix::identity(a.genus()));
  }
  CHECK_THROWS_AS(extend_to_symplectic_basis(iv({2, 4, 0, 6})), DomainError);

  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const int g = static_cast<int>(uniform(rng, 1, 5));
    IntVector v = random_vector(rng, static_cast<std::size_t>(2 * g), 30);
    if (is_zero(v)) continue;
    const Integer c = content(v);
    for (auto& x : v) x /= c;
    const SpMatrix a = extend_to_symplectic_basis(v);
    CHECK(is_symplectic(a.entries()));
    CHECK(a.entries().column(0) == v);
  }
}

TEST_CASE("rank-2 transitivity examples") {
  const Sublattice std2(2, {iv({1, 0, 0, 0}), iv({0, 1, 0, 0})});
  CHECK(map_rank2_sublattice(std2, std2).apply(std2) == std2);

  const Sublattice u(2, {iv({1, 0, 0, 0}), iv({0, 2, 1, 0})});
  const Sublattice u2(2, {iv({1, 0, -1, 0}), iv({0, 1, 0, -1})});
  const SpMatrix delta = map_rank2_sublattice(u, u2);
  CHECK(is_symplectic(delta.entries()));
  CHECK(same_image(delta.entries(), u, u2));

  const Sublattice det3(2, {iv({1, 0, 0, 0}), iv({0, 3, 1, 0})});
  const Sublattice det5(2, {iv({1, 0, 0, 0}), iv({0, 5, 1, 0})});
  CHECK_THROWS_WITH_AS(map_rank2_sublattice(det3, det5), "determinants differ", DomainError);
  // span{e0, 2 f0} is not complete
  CHECK_THROWS_AS(map_rank2_sublattice(Sublattice(2, {iv({1, 0, 0, 0}), iv({0, 2, 0, 0})}), u), DomainError);
}

TEST_CASE("rank-2 transitivity on random complete pairs") {
  std::mt19937_64 rng(15);
  std::map<std::pair<int, Integer>, std::vector<Sublattice>> pool;
  int produced = 0;
  while (produced < 120) {
    const int g = static_cast<int>(uniform(rng, 1, 5));
    auto s = random_complete(rng, g, 2);
    if (!s || determinant(*s) > 20) continue;
    pool[{g, determinant(*s)}].push_back(*s);
    ++produced;
  }
  int pairs = 0;
  for (const auto& [key, list] : pool) {
    for (std::size_t i = 0; i + 1 < list.size(); ++i) {
      const SpMatrix delta = map_rank2_sublattice(list[i], list[i + 1]);
      CHECK(is_symplectic(delta.entries()));
      CHECK(same_image(delta.entries(), list[i], list[i + 1]));
      ++pairs;
    }
  }
  CHECK(pairs > 50);
}

TEST_CASE("rank-4 transitivity") {
  const Sublattice full2 = Sublattice::full(2);
  CHECK(map_rank4_sublattice(full2, full2).apply(full2) == full2);

  std::mt19937_64 rng(16);
  int pairs = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const int g = static_cast<int>(uniform(rng, 2, 4));
    auto s = random_complete(rng, g, 4);
    if (!s || alternating_normal_form(*s).divisors[0] != 1) continue;
    // A second lattice of the same determinant: move s by a random symplectic matrix,
    // then by a random change of basis inside it.
    const SpMatrix a(random_symplectic(rng, g, 8));
    Sublattice t = a.apply(*s);
    const SpMatrix delta = map_rank4_sublattice(*s, t);
    CHECK(is_symplectic(delta.entries()));
    CHECK(same_image(delta.entries(), *s, t));
    ++pairs;
  }
  CHECK(pairs > 5);

  const Sublattice d2(3, {iv({1, 0, 0, 0, 0, 0}), iv({0, 1, 0, 0, 0, 0}), iv({0, 0, 1, 0, 0, 0}),
                          iv({0, 0, 0, 2, 1, 0})});
  const Sublattice d3(3, {iv({1, 0, 0, 0, 0, 0}), iv({0, 1, 0, 0, 0, 0}), iv({0, 0, 1, 0, 0, 0}),
                          iv({0, 0, 0, 3, 1, 0})});
  CHECK_THROWS_AS(map_rank4_sublattice(d2, d3), DomainError);

  // Complete, but the restricted form is 2 * standard: divisors (2, 2).
  const Sublattice twice(4, {iv({1, 0, 0, 0, 0, 0, 0, 0}), iv({0, 2, 0, 0, 1, 0, 0, 0}),
                             iv({0, 0, 1, 0, 0, 0, 0, 0}), iv({0, 0, 0, 2, 0, 0, 1, 0})});
  CHECK(is_complete(twice));
  CHECK(alternating_normal_form(twice).divisors == std::vector<Integer>{2, 2});
  CHECK_THROWS_WITH_AS(map_rank4_sublattice(twice, twice), "restricted form has first divisor > 1", DomainError);
}
