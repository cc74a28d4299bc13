#include <doctest.h>

#include <algorithm>

#include "logres/errors.hpp"
#include "logres/log_calculus.hpp"
#include "oracles.hpp"

using namespace logres;

namespace {

Chart xu() { return make_chart({"x"}, 1, {"u"}, {{1}}); }
Chart uv() { return make_chart({}, 2, {"u", "v"}, {{1, 0}, {0, 1}}); }

std::vector<Polynomial> P(const Chart& C, std::vector<std::string> g) { return parse_ideal(C, g); }

KummerCenter center(std::vector<int> ord, std::vector<IVec> mono, int d) { return {ord, MonoidIdeal{mono}, d}; }

// Centers on k[x] x N(u) used by the admissibility biconditionals.
std::vector<KummerCenter> fixture_centers() {
  return {center({0}, {{1}}, 1), center({0}, {{1}}, 2), center({0}, {{3}}, 2), center({0}, {{2}}, 1),
          center({0}, {}, 1),    center({}, {{1}}, 1),  center({}, {{1}}, 2),  center({0}, {{1}}, 3)};
}

std::vector<MarkedIdeal> fixture_marked(const Chart& C) {
  return {{P(C, {"x^2", "u"}), 2},          {P(C, {"u^2", "x"}), 1}, {P(C, {"x^3", "x*u^3", "u^6"}), 3},
          {P(C, {"x^2 + u^3"}), 2},         {P(C, {"x*u", "u^2"}), 1}, {P(C, {"x^2", "x*u", "u^3"}), 2}};
}

}  // namespace

TEST_CASE("logarithmic order") {
  Chart C = xu();
  CHECK(max_logord(C, P(C, {"x^2", "u"})) == 2);
  CHECK(max_logord(C, P(C, {"u^2", "x"})) == 1);
  CHECK_FALSE(max_logord(C, P(C, {"u"})).has_value());
  CHECK(max_logord(C, P(C, {"1"})) == 0);
  CHECK(ideals_equal(C, cosupport(C, {P(C, {"x^2", "u"}), 2}), P(C, {"x", "u"})));
  CHECK(ideals_equal(C, cosupport(C, {P(C, {"x"}), 1}), P(C, {"x"})));
  CHECK(is_unit_ideal(C, cosupport(C, {P(C, {"1"}), 3})));
}

TEST_CASE("monomial saturation fixtures") {
  Chart U = uv();
  CHECK(monomial_saturation(U, P(U, {"u - v"})).gens == std::vector<IVec>{{1, 0}, {0, 1}});
  Chart N = make_chart({}, 1, {"u"}, {{1}});
  CHECK(monomial_saturation(N, P(N, {"u^2"})).gens == std::vector<IVec>{{2}});
  Chart C = xu();
  CHECK(monomial_saturation(C, P(C, {"x^2 + u^3"})).gens == std::vector<IVec>{{0}});
  CHECK(monomial_saturation(C, P(C, {"x*u^2 + u^3"})).gens == std::vector<IVec>{{2}});
  CHECK_THROWS_AS(monomial_saturation(C, {}), InvalidArgument);
}

TEST_CASE("monomial saturation agrees with the brute-force oracle") {
  std::mt19937 rng(41);
  Chart C = make_chart({"x", "y"}, 2, {"u", "v"}, {{1, 0}, {0, 1}});
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> I = {oracle::random_poly(rng, 4, 3, 3), oracle::random_poly(rng, 4, 2, 3)};
    if (is_zero_ideal(C, I)) continue;
    auto got = monomial_saturation(C, I).gens;
    std::sort(got.begin(), got.end());
    CHECK(got == oracle::brute_monomial_saturation(2, 2, I));
  }
}

TEST_CASE("clean part") {
  Chart U = uv();
  auto cp = clean_part(U, P(U, {"u - u*v"}));
  CHECK(cp.monomial == IVec{1, 0});
  CHECK(ideals_equal(U, cp.clean, P(U, {"1 - v"})));
  auto clean = clean_part(U, P(U, {"1 + u"}));
  CHECK(clean.monomial == IVec{0, 0});
  CHECK_THROWS_AS(clean_part(U, P(U, {"u - v"})), NotBalanced);
}

TEST_CASE("homogenization") {
  Chart XY = make_chart({"x", "y"}, 0, {}, {});
  CHECK(ideals_equal(XY, homogenize(XY, {P(XY, {"x*y"}), 2}).ideal, P(XY, {"x^2", "x*y", "y^2"})));
  Chart C = xu();
  CHECK(ideals_equal(C, homogenize(C, {P(C, {"x^2 + u"}), 1}).ideal, P(C, {"x^2 + u"})));
  auto I = P(C, {"x^3", "x*u^3", "u^6"});
  auto H = homogenize(C, {I, 3});
  CHECK(H.mark == 3);
  CHECK(ideals_equal(C, H.ideal, I));
}

TEST_CASE("coefficient ideals") {
  Chart C = xu();
  auto c = coefficient_ideal(C, {P(C, {"x^3", "x*u^3", "u^6"}), 3});
  CHECK(c.mark == 6);
  CHECK(ideals_equal(C, c.ideal, P(C, {"x^6", "x^4*u^3", "x^2*u^6", "u^9"})));
  auto one = coefficient_ideal(C, {P(C, {"x + u^2"}), 1});
  CHECK(one.mark == 1);
  CHECK(ideals_equal(C, one.ideal, P(C, {"x + u^2"})));
  auto two = coefficient_ideal(C, {P(C, {"x^2", "u"}), 2});
  CHECK(two.mark == 2);
  CHECK(ideals_equal(C, two.ideal, P(C, {"x^2", "u"})));
  auto r = restricted_coefficient_ideal(C, {P(C, {"x^3", "x*u^3", "u^6"}), 3}, 0);
  CHECK(ideals_equal(C, r.ideal, P(C, {"u^9"})));
}

TEST_CASE("marked sums and products") {
  Chart C = xu();
  auto s = marked_sum(C, {{P(C, {"x"}), 2}, {P(C, {"u"}), 3}});
  CHECK(s.mark == 6);
  CHECK(ideals_equal(C, s.ideal, P(C, {"x^3", "u^2"})));
  auto s1 = marked_sum(C, {{P(C, {"x"}), 1}, {P(C, {"u"}), 1}});
  CHECK(s1.mark == 1);
  CHECK(ideals_equal(C, s1.ideal, P(C, {"x", "u"})));
  auto p = marked_product(C, {{P(C, {"x"}), 2}, {P(C, {"x", "u"}), 3}});
  CHECK(p.mark == 5);
  CHECK(ideals_equal(C, p.ideal, P(C, {"x^2", "x*u"})));
}

TEST_CASE("integral closure of center powers and admissibility") {
  Chart C = xu();
  auto cl = integral_closure_of_center_power(C, center({0}, {{1}}, 2), 2);
  const Chart& R = cl.cover.chart;
  CHECK(R.names() == std::vector<std::string>{"x", "v"});
  CHECK(ideals_equal(R, cl.ideal, P(R, {"x^2", "x*v", "v^2"})));
  CHECK(ideals_equal(C, integral_closure_of_center_power(C, center({0}, {}, 1), 3).ideal, P(C, {"x^3"})));
  auto c32 = integral_closure_of_center_power(C, center({}, {{3}}, 2), 6);
  CHECK(ideals_equal(c32.cover.chart, c32.ideal, P(c32.cover.chart, {"v^18"})));

  MarkedIdeal I{P(C, {"x^2", "u"}), 2};
  CHECK(is_admissible(C, I, center({0}, {{1}}, 2)));
  CHECK_FALSE(is_admissible(C, I, center({0}, {{1}}, 1)));
  MarkedIdeal ne{P(C, {"x^3", "x*u^3", "u^6"}), 3};
  CHECK_FALSE(is_admissible(C, ne, center({0}, {{2}}, 1)));
  CHECK(is_admissible(C, ne, center({0}, {{3}}, 2)));
  MarkedIdeal restricted{P(C, {"u^6"}), 3};
  CHECK(is_admissible(C, restricted, center({}, {{2}}, 1)));
}

TEST_CASE("maximal contact selection") {
  Chart C = xu();
  auto mc = select_maximal_contact(C, {P(C, {"x^2", "u"}), 2});
  CHECK(mc.var == 0);
  CHECK(mc.shift.is_zero());
  CHECK(select_maximal_contact(C, {P(C, {"u^2", "x"}), 1}).var == 0);
  auto st = select_maximal_contact(C, {P(C, {"x + u^2"}), 1});
  CHECK(st.var == 0);
  CHECK(st.shift == C.variable(1).pow(2));
  CHECK(ideals_equal(C, map_ideal(P(C, {"x + u^2"}), st.images, 2), P(C, {"x"})));
  auto lin = select_maximal_contact(C, {P(C, {"x^2 - x*u + u^3"}), 2});
  CHECK(lin.shift == C.variable(1).scaled(Rational(-1, 2)));
  Chart XY = make_chart({"x", "y"}, 0, {}, {});
  // x is a contact only after inverting 1 + y
  CHECK_THROWS_AS(select_maximal_contact(XY, {P(XY, {"x^2 + x^2*y"}), 2}), NoMaximalContact);
  CHECK_THROWS_AS(select_maximal_contact(XY, {P(XY, {"x^2 + y^2 + x^2*y"}), 1}), NoMaximalContact);
}

TEST_CASE("property: homogenization keeps the order and the admissible centers") {
  Chart C = xu();
  for (const auto& M : fixture_marked(C)) {
    auto lo = max_logord(C, M.ideal);
    if (!lo || *lo != M.mark) continue;
    auto H = homogenize(C, M);
    CHECK(max_logord(C, H.ideal) == M.mark);
    for (const auto& J : fixture_centers()) CHECK(is_admissible(C, M, J) == is_admissible(C, H, J));
  }
}

TEST_CASE("property: marks scale with powers") {
  Chart C = xu();
  for (const auto& M : fixture_marked(C)) {
    MarkedIdeal M2{chart_power(C, M.ideal, 2), 2 * M.mark};
    for (const auto& J : fixture_centers()) CHECK(is_admissible(C, M, J) == is_admissible(C, M2, J));
  }
}

TEST_CASE("property: admissible centers lie in the cosupport") {
  Chart C = xu();
  for (const auto& M : fixture_marked(C))
    for (const auto& J : fixture_centers()) {
      if (!is_admissible(C, M, J)) continue;
      auto cl = integral_closure_of_center_power(C, J, 1, cosupport(C, M));
      const Chart& R = cl.cover.chart;
      std::vector<Polynomial> centre_ideal;
      for (int v : J.ordinary) centre_ideal.push_back(R.variable(v));
      for (const auto& g : J.monomial.gens) {
        IVec c;
        R.lattice_coords(qvec_scale(C.monomial_q(g), Rational(1, J.root)), c);
        centre_ideal.push_back(R.monomial(c));
      }
      CHECK(chart_contains(R, centre_ideal, cl.cover.ideal));
    }
}

TEST_CASE("property: order and saturation are stable under smooth and Kummer pullbacks") {
  std::mt19937 rng(77);
  Chart C = xu();
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Polynomial> I = {oracle::random_poly(rng, 2, 3, 3), oracle::random_poly(rng, 2, 2, 3)};
    if (is_zero_ideal(C, I)) continue;
    auto lo = max_logord(C, I);
    MonoidIdeal M = monomial_saturation(C, I);
    std::vector<Polynomial> Mp;
    for (const auto& g : M.gens) Mp.push_back(C.monomial(g));

    auto [Y, IY] = add_free_variable(C, {});
    std::vector<Polynomial> IYs;
    for (const auto& f : I) IYs.push_back(f.remap({0, 2}, 3));
    CHECK(max_logord(Y, IYs) == lo);
    std::vector<Polynomial> MY;
    for (const auto& g : monomial_saturation(Y, IYs).gens) MY.push_back(Y.monomial(g));
    std::vector<Polynomial> MpY;
    for (const auto& f : Mp) MpY.push_back(f.remap({0, 2}, 3));
    CHECK(ideals_equal(Y, MY, MpY));

    for (int d = 2; d <= 3; ++d) {
      auto cov = kummer_cover_pullback(C, {{1}}, d, I);
      CHECK(max_logord(cov.chart, cov.ideal) == lo);
      std::vector<Polynomial> Mc;
      for (const auto& g : monomial_saturation(cov.chart, cov.ideal).gens) Mc.push_back(cov.chart.monomial(g));
      CHECK(ideals_equal(cov.chart, Mc, map_ideal(Mp, cov.images, cov.chart.nvars())));
    }

    if (lo && *lo >= 1 && *lo <= 3) {
      MarkedIdeal m{I, *lo};
      MarkedIdeal mY{IYs, *lo};
      auto lift = [&](const std::vector<Polynomial>& v) {
        std::vector<Polynomial> out;
        for (const auto& f : v) out.push_back(f.remap({0, 2}, 3));
        return out;
      };
      CHECK(ideals_equal(Y, homogenize(Y, mY).ideal, lift(homogenize(C, m).ideal)));
      CHECK(ideals_equal(Y, coefficient_ideal(Y, mY).ideal, lift(coefficient_ideal(C, m).ideal)));
    }
  }
}
