#include <doctest.h>

#include "abelian/realizability.hpp"
#include "oracles.hpp"

using namespace abelian;
using namespace testing_support;

namespace {

GaussianRational gq(const char* re, const char* im = "0") { return {parse_rational(re), parse_rational(im)}; }

CohomologyClass cls(int g, std::vector<GaussianRational> p) { return {g, std::move(p)}; }

const GaussianRational one = gq("1");
const GaussianRational i_unit = gq("0", "1");
const GaussianRational zero = gq("0");

}  // namespace

TEST_CASE("area") {
  CHECK(area(cls(2, {one, i_unit, zero, zero})) == 1);
  CHECK(area(cls(2, {one, i_unit, one, i_unit})) == 2);
  CHECK(area(cls(2, {gq("3"), gq("1/2"), gq("-1"), zero})) == 0);
  std::mt19937_64 rng(21);
  for (int t = 0; t < 50; ++t) {
    const auto c = random_class(rng, static_cast<int>(uniform(rng, 1, 4)), 20);
    CHECK(area(c) == area_oracle(c));
  }
}

TEST_CASE("period group and covolume") {
  auto p = period_group(cls(2, {one, i_unit, zero, zero}));
  CHECK(p.rank == 2);
  CHECK(covolume(p) == 1);

  p = period_group(cls(2, {one, i_unit, gq("1/2"), gq("0", "1/2")}));
  CHECK(p.rank == 2);
  CHECK(p.basis[0] == gq("1/2"));
  CHECK(p.basis[1] == gq("0", "1/2"));
  CHECK(covolume(p) == Rational(1, 4));

  CHECK(covolume(period_group(cls(1, {gq("2"), i_unit}))) == 2);

  p = period_group(cls(2, {one, gq("1/3"), zero, zero}));
  CHECK(p.rank == 1);
  CHECK_THROWS_AS(covolume(p), DomainError);
}

TEST_CASE("line determinant") {
  CHECK(line_determinant(cls(2, {one, i_unit, zero, zero})) == 1);
  CHECK(line_determinant(cls(2, {one, i_unit, one, i_unit})) == 2);
  CHECK(line_determinant(cls(2, {one, i_unit, gq("1/2"), gq("0", "1/2")})) == 5);
  CHECK_THROWS_AS(line_determinant(cls(2, {one, gq("2"), zero, zero})), DomainError);
}

TEST_CASE("single-class verdicts") {
  auto v = is_realizable_line(cls(2, {one, i_unit, zero, zero}));
  CHECK_FALSE(v.realizable);
  CHECK(v.reason == Reason::not_above_covolume);
  CHECK(v.area == 1);
  CHECK(*v.covolume == 1);
  CHECK(*v.det == 1);

  v = is_realizable_line(cls(2, {one, i_unit, one, i_unit}));
  CHECK(v.realizable);
  CHECK(*v.det == 2);

  v = is_realizable_line(cls(2, {one, gq("2"), gq("-3"), zero}));
  CHECK_FALSE(v.realizable);
  CHECK(to_string(v.reason) == "area <= 0");

  CHECK_THROWS_AS(is_realizable_line(cls(1, {one, i_unit})), DomainError);
  CHECK_THROWS_AS(is_realizable_line(cls(2, {zero, zero, zero, zero})), DomainError);
}

TEST_CASE("fundamental identity and invariance on random classes") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 150; ++t) {
    const int g = static_cast<int>(uniform(rng, 2, 4));
    auto c = random_class(rng, g, 30);
    if (area(c) == 0) continue;
    if (area(c) < 0) c = c.conj();
    const auto v = is_realizable_line(c);
    REQUIRE(v.period_rank == 2);
    CHECK(v.area == *v.det * *v.covolume);
    CHECK(v.realizable == (*v.det >= 2));

    const RatMatrix2 shear{{{Rational(1), Rational(uniform(rng, -5, 5))}, {Rational(0), Rational(1)}}};
    CHECK(is_realizable_line(sl2_act(shear, c)).realizable == v.realizable);
    const SpMatrix a(random_symplectic(rng, g));
    const auto moved = is_realizable_line(symplectic_act(a, c));
    CHECK(moved.realizable == v.realizable);
    CHECK(*moved.det == *v.det);
    const GaussianRational lambda(random_rational(rng, 7), random_rational(rng, 7));
    if (!lambda.is_zero()) CHECK(is_realizable_line(scale(lambda, c)).realizable == v.realizable);
  }
}

TEST_CASE("sl2 action") {
  const auto c = cls(2, {one, i_unit, zero, zero});
  const RatMatrix2 id{{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}};
  CHECK(sl2_act(id, c).periods == c.periods);
  const RatMatrix2 rot{{{Rational(0), Rational(1)}, {Rational(-1), Rational(0)}}};
  const auto r = sl2_act(rot, c);
  // Re' = Im, Im' = -Re
  CHECK(r.periods[0] == gq("0", "-1"));
  CHECK(r.periods[1] == one);
  CHECK(area(r) == area(c));
  CHECK(line_determinant(r) == line_determinant(c));
  const auto d = cls(2, {one, i_unit, one, i_unit});
  const RatMatrix2 shear{{{Rational(1), Rational(1)}, {Rational(0), Rational(1)}}};
  CHECK(is_realizable_line(sl2_act(shear, d)).realizable);
  const RatMatrix2 bad{{{Rational(2), Rational(0)}, {Rational(0), Rational(1)}}};
  CHECK_THROWS_AS(sl2_act(bad, c), DomainError);
}

TEST_CASE("hodge-riemann and isotropy") {
  const auto a = cls(2, {one, i_unit, zero, zero});
  CHECK(hodge_riemann_check({a}));
  CHECK_FALSE(hodge_riemann_check({cls(2, {one, gq("2"), zero, zero})}));
  CHECK_FALSE(hodge_riemann_check({a.conj()}));
  const auto a3 = cls(3, {one, i_unit, zero, zero, zero, zero});
  const auto b3 = cls(3, {zero, zero, one, i_unit, zero, zero});
  CHECK(hodge_riemann_check({a3, b3}));
  CHECK_FALSE(hodge_riemann_check({a3, b3.conj()}));
  CHECK_THROWS_AS(hodge_riemann_check({a3, a3}), DomainError);

  CHECK(isotropy_check(a, a));
  CHECK(isotropy_check(a, cls(2, {zero, zero, one, i_unit})));
  CHECK_FALSE(isotropy_check(cls(2, {one, zero, zero, zero}), cls(2, {zero, one, zero, zero})));
}

TEST_CASE("elliptic pairs") {
  const auto a2 = cls(2, {one, i_unit, zero, zero});
  const auto b2 = cls(2, {zero, zero, one, i_unit});
  auto v = is_realizable_elliptic_pair(a2, b2, true);
  CHECK(v.pfaffian == 1);
  CHECK(v.det == 2);
  CHECK(v.realizable);

  // U = span(e0, f0, e1, 2 f1 + e2) in genus 4
  const auto a4 = cls(4, {one, i_unit, zero, zero, zero, zero, zero, zero});
  const auto b4 = cls(4, {zero, zero, one, gq("0", "2"), i_unit, zero, zero, zero});
  v = is_realizable_elliptic_pair(a4, b4, true);
  CHECK(v.det == 4);
  CHECK(v.even);
  CHECK_FALSE(v.above_bound);
  CHECK(to_string(v.reason) == "det < 2g-2");

  v = elliptic_pair_criterion(3, 3);
  CHECK_FALSE(v.realizable);
  CHECK(v.reason == Reason::odd_determinant);
  CHECK(elliptic_pair_criterion(4, 3).realizable);

  // Gaussian-rational pairs always split over Q: the refuter fires.
  v = is_realizable_elliptic_pair(a2, b2, false);
  REQUIRE(v.witness);
  CHECK(v.reason == Reason::criterion_not_applicable);
  CHECK_FALSE(v.realizable);
  CHECK(omega(v.witness->xi, v.witness->eta) != 0);

  CHECK_THROWS_AS(is_realizable_elliptic_pair(a2, cls(2, {zero, one, zero, zero}), true), DomainError);
  CHECK_THROWS_AS(is_realizable_elliptic_pair(a2, b2.conj(), true), DomainError);
}

TEST_CASE("severi range") {
  CHECK(severi_range(2) == std::vector<std::pair<int, int>>{{2, 0}});
  CHECK(severi_range(6) == std::vector<std::pair<int, int>>{{2, 2}, {3, 1}, {4, 0}});
  CHECK(severi_range(4) == std::vector<std::pair<int, int>>{{2, 1}, {3, 0}});
  CHECK_THROWS_AS(severi_range(5), DomainError);
  for (int n = 1; n <= 20; ++n) {
    const auto r = severi_range(2 * n);
    CHECK(r.front().first == 2);
    CHECK(r.back().first == n + 1);
    for (const auto& [g, nodes] : r) CHECK(nodes >= 0);
  }
}

TEST_CASE("torus data") {
  auto t = torus_data({cls(2, {one, i_unit, zero, zero})});
  CHECK(t.lattice == Sublattice(2, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
  CHECK(t.periods(0, 0) == one);
  CHECK(t.periods(0, 1) == i_unit);

  t = torus_data({cls(2, {one, i_unit, one, i_unit})});
  CHECK(t.lattice.rank() == 2);
  CHECK(t.periods(0, 0) == one);
  CHECK(t.periods(0, 1) == i_unit);

  t = torus_data({cls(2, {gq("2"), i_unit, zero, zero})});
  CHECK(t.periods(0, 0) == gq("2"));
  CHECK(t.periods(0, 1) == i_unit);

  const auto pair = torus_data({cls(2, {one, i_unit, zero, zero}), cls(2, {zero, zero, one, i_unit})});
  CHECK(pair.lattice == Sublattice::full(2));
  CHECK_THROWS_AS(torus_data({cls(2, {one, zero, zero, zero})}), DomainError);
}

TEST_CASE("polyperiod dimension gap") {
  for (long g = 3; g <= 12; ++g) CHECK(polyperiod_dimension_gap(g, 3) == 0);
  CHECK(polyperiod_dimension_gap(5, 2) == -3);
  CHECK(polyperiod_dimension_gap(4, 4) == 1);
  CHECK_THROWS_AS(polyperiod_dimension_gap(3, 4), DomainError);
}

TEST_CASE("numeric mode") {
  using C = std::complex<double>;
  auto v = is_realizable_line_numeric(2, {C(1, 0), C(0, 1), C(1, 0), C(0, 1)});
  CHECK(v.realizable);
  CHECK_FALSE(v.heuristic);
  CHECK(*v.det == 2);
  v = is_realizable_line_numeric(2, {C(1, 0), C(0, 1), C(0, 0), C(0, 0)});
  CHECK_FALSE(v.realizable);
  CHECK(*v.covolume == doctest::Approx(1.0));
  v = is_realizable_line_numeric(2, {C(1, 0), C(0, 1), C(std::sqrt(2.0), 0), C(0, 0)});
  CHECK(v.realizable);
  CHECK(v.heuristic);
  CHECK(v.reason == Reason::presumed_dense);
  v = is_realizable_line_numeric(2, {C(1, 0), C(2, 0), C(0, 0), C(0, 0)});
  CHECK(v.reason == Reason::area_not_positive);
}
