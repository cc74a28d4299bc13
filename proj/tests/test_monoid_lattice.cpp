#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "logres/errors.hpp"
#include "logres/monoid.hpp"
#include "logres/parse.hpp"

using namespace logres;

namespace {

AffineMonoid free_monoid(int r, std::vector<std::string> names) {
  AffineMonoid M;
  M.rank = r;
  M.names = std::move(names);
  for (int i = 0; i < r; ++i) {
    IVec e(r, 0);
    e[i] = 1;
    M.gens.push_back(e);
  }
  return M;
}

// Brute force: nonnegative combinations of gens with small coefficients.
bool in_generated(const std::vector<IVec>& gens, const IVec& v, int bound) {
  std::size_t n = gens.size();
  std::vector<int> c(n, 0);
  for (;;) {
    IVec s(v.size(), 0);
    for (std::size_t i = 0; i < n; ++i) s = ivec_add(s, ivec_scale(gens[i], c[i]));
    if (s == v) return true;
    std::size_t i = 0;
    while (i < n && c[i] == bound) c[i++] = 0;
    if (i == n) return false;
    ++c[i];
  }
}

// Oracle: irreducible lattice points of the cone spanned by two rays in Z^2.
std::vector<IVec> brute_hilbert_2d(const IVec& a, const IVec& b) {
  std::vector<IVec> pts;
  for (long long x = -6; x <= 6; ++x)
    for (long long y = -6; y <= 6; ++y) {
      // v = s a + t b with s,t >= 0
      long long det = a[0] * b[1] - a[1] * b[0];
      long long s = x * b[1] - y * b[0], t = a[0] * y - a[1] * x;
      if (det < 0) {
        s = -s;
        t = -t;
      }
      if ((x || y) && s >= 0 && t >= 0) pts.push_back({x, y});
    }
  std::set<IVec> ptset(pts.begin(), pts.end());
  std::vector<IVec> irr;
  for (const auto& p : pts) {
    bool red = false;
    for (const auto& q : pts)
      if (q != p && ptset.count(ivec_sub(p, q))) red = true;
    if (!red) irr.push_back(p);
  }
  std::sort(irr.begin(), irr.end(), gradlex_less);
  return irr;
}

// Oracle for saturation in N^2: x with l*x in J^l for some l <= 4.
std::vector<IVec> brute_saturation_n2(const std::vector<IVec>& J) {
  auto in_power = [&](const IVec& v, int l) {
    std::vector<IVec> sums = {IVec{0, 0}};
    for (int k = 0; k < l; ++k) {
      std::vector<IVec> next;
      for (const auto& s : sums)
        for (const auto& g : J) next.push_back(ivec_add(s, g));
      sums = next;
    }
    for (const auto& s : sums)
      if (v[0] >= s[0] && v[1] >= s[1]) return true;
    return false;
  };
  std::vector<IVec> members;
  for (long long a = 0; a <= 8; ++a)
    for (long long b = 0; b <= 8; ++b)
      for (int l = 1; l <= 4; ++l)
        if (in_power(ivec_scale(IVec{a, b}, l), l)) {
          members.push_back({a, b});
          break;
        }
  std::vector<IVec> minimal;
  for (const auto& m : members) {
    bool red = false;
    for (const auto& o : members)
      if (o != m && o[0] <= m[0] && o[1] <= m[1]) red = true;
    if (!red) minimal.push_back(m);
  }
  std::sort(minimal.begin(), minimal.end(), gradlex_less);
  return minimal;
}

}  // namespace

TEST_CASE("hilbert basis fixtures") {
  CHECK(hilbert_basis(2, {{1, 0}, {1, 2}}) == std::vector<IVec>{{1, 0}, {1, 1}, {1, 2}});
  CHECK(hilbert_basis(2, {{1, 0}, {0, 1}}) == std::vector<IVec>{{1, 0}, {0, 1}});
  // x-chart of the blowup of (u^2, x): u=(1,0), x=(0,1), v=u^2/x=(2,-1)
  auto hb = hilbert_basis(2, {{1, 0}, {0, 1}, {2, -1}});
  CHECK(hb == std::vector<IVec>{{2, -1}, {1, 0}, {0, 1}});
  CHECK_THROWS_AS(hilbert_basis(2, {{1, 0}, {-1, 0}, {0, 1}}), NotSharp);
}

TEST_CASE("hilbert basis agrees with brute force on random 2d cones") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coord(-3, 3);
  int checked = 0;
  while (checked < 30) {
    IVec a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)};
    long long det = a[0] * b[1] - a[1] * b[0];
    if (det == 0) continue;
    CHECK(hilbert_basis(2, {a, b}) == brute_hilbert_2d(a, b));
    ++checked;
  }
}

TEST_CASE("hilbert basis is minimal") {
  std::vector<std::vector<IVec>> cones = {{{1, 0}, {1, 2}}, {{1, 0}, {1, 3}, {0, 1}}, {{2, -1}, {0, 1}},
                                          {{1, 0, 0}, {0, 1, 0}, {1, 1, 2}}};
  for (const auto& c : cones) {
    int dim = static_cast<int>(c[0].size());
    auto hb = hilbert_basis(dim, c);
    for (std::size_t i = 0; i < hb.size(); ++i) {
      std::vector<IVec> rest;
      for (std::size_t j = 0; j < hb.size(); ++j)
        if (j != i) rest.push_back(hb[j]);
      CHECK_FALSE(in_generated(rest, hb[i], 4));
    }
  }
}

TEST_CASE("monoid ideal saturation") {
  AffineMonoid N2 = free_monoid(2, {"u", "v"});
  CHECK(monoid_saturate_ideal(N2, {{{2, 0}, {0, 2}}}).gens == std::vector<IVec>{{2, 0}, {1, 1}, {0, 2}});
  AffineMonoid N1 = free_monoid(1, {"u"});
  CHECK(monoid_saturate_ideal(N1, {{{2}}}).gens == std::vector<IVec>{{2}});
  // refined rank-1 lattice: u^{3/2} is element 3 of the monoid of w = u^{1/2}
  AffineMonoid W = free_monoid(1, {"w"});
  CHECK(monoid_saturate_ideal(W, {{{3}}}).gens == std::vector<IVec>{{3}});
  CHECK(monoid_saturate_ideal(W, monoid_ideal_power(W, {{{3}}}, 2)).gens == std::vector<IVec>{{6}});
}

TEST_CASE("saturation agrees with the l <= 4 oracle") {
  AffineMonoid N2 = free_monoid(2, {"u", "v"});
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> c(0, 4), n(1, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<IVec> J;
    int k = n(rng);
    for (int i = 0; i < k; ++i) J.push_back({c(rng), c(rng)});
    CHECK(monoid_saturate_ideal(N2, {J}).gens == brute_saturation_n2(J));
  }
}

TEST_CASE("saturation is extensive and idempotent") {
  AffineMonoid M;
  M.rank = 2;
  M.names = {"u", "x", "v"};
  M.gens = {{1, 0}, {0, 1}, {2, -1}};
  std::vector<MonoidIdeal> ideals = {{{{2, 0}, {0, 3}}}, {{{2, -1}, {1, 1}}}, {{{4, 0}, {0, 1}}}};
  for (const auto& J : ideals) {
    MonoidIdeal S = monoid_saturate_ideal(M, J);
    for (const auto& g : J.gens) CHECK(monoid_ideal_contains(M, S, g));
    CHECK(monoid_saturate_ideal(M, S) == S);
    for (int j = 2; j <= 3; ++j) {
      MonoidIdeal lhs = monoid_ideal_power(M, S, j);
      MonoidIdeal rhs = monoid_saturate_ideal(M, monoid_ideal_power(M, J, j));
      for (const auto& g : lhs.gens) CHECK(monoid_ideal_contains(M, rhs, g));
    }
  }
}

TEST_CASE("kummer refinement") {
  AffineMonoid N1 = free_monoid(1, {"u"});
  KummerRefinement k = kummer_refine(N1, {{1}}, 2);
  CHECK(k.monoid.gens == std::vector<IVec>{{1}});
  CHECK(k.map({1}) == IVec{2});
  REQUIRE(k.characters.size() == 1);
  CHECK(k.characters[0].modulus == 2);
  CHECK(k.characters[0].value(k.monoid.gens[0]) == 1);

  KummerRefinement id = kummer_refine(N1, {}, 1);
  CHECK(id.monoid.gens == N1.gens);
  CHECK(id.monoid.names == N1.names);
  CHECK(id.characters.empty());

  AffineMonoid N2 = free_monoid(2, {"u", "v"});
  KummerRefinement k2 = kummer_refine(N2, {{1, 1}}, 2);
  // refined lattice Z^2 + Z(1/2,1/2); the Hilbert basis is u, v, (u+v)/2
  REQUIRE(k2.monoid.gens.size() == 3);
  std::set<IVec> images;
  for (const auto& g : k2.monoid.gens) images.insert(g);
  CHECK(images.count(k2.map({1, 0})));
  CHECK(images.count(k2.map({0, 1})));
  IVec half = ivec_add(k2.map({1, 0}), k2.map({0, 1}));
  bool found = false;
  for (const auto& g : k2.monoid.gens)
    if (ivec_scale(g, 2) == half) found = true;
  CHECK(found);
  CHECK(k2.characters.size() == 1);
}

TEST_CASE("toric presentations") {
  CHECK(present_monoid_algebra(free_monoid(2, {"u", "v"})).empty());
  AffineMonoid V;
  V.rank = 2;
  V.names = {"z1", "z2", "z3"};
  V.gens = {{2, 0}, {1, 1}, {0, 2}};
  auto rel = present_monoid_algebra(V);
  REQUIRE(rel.size() == 1);
  CHECK(rel[0] == parse_polynomial("z2^2 - z1*z3", V.names));

  AffineMonoid X;
  X.rank = 2;
  X.names = {"u", "x", "v"};
  X.gens = {{1, 0}, {0, 1}, {2, -1}};
  auto relx = present_monoid_algebra(X, 0);
  REQUIRE(relx.size() == 1);
  Ideal ix(3, relx);
  CHECK(ix.same_as(Ideal(3, {parse_polynomial("v*x - u^2", X.names)})));
}

TEST_CASE("relations vanish under the lattice character") {
  std::vector<AffineMonoid> ms;
  AffineMonoid A;
  A.rank = 2;
  A.names = {"a", "b", "c", "d"};
  A.gens = {{1, 0}, {1, 1}, {1, 2}, {1, 3}};
  ms.push_back(A);
  AffineMonoid B;
  B.rank = 3;
  B.names = {"a", "b", "c", "d"};
  B.gens = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}};
  ms.push_back(B);
  for (const auto& M : ms) {
    auto rel = present_monoid_algebra(M);
    CHECK_FALSE(rel.empty());
    for (const auto& f : rel) {
      // every term maps to a Laurent monomial; terms must cancel in pairs
      std::map<IVec, Rational> acc;
      for (const auto& t : f.terms()) {
        IVec deg(M.rank, 0);
        for (std::size_t j = 0; j < M.gens.size(); ++j) deg = ivec_add(deg, ivec_scale(M.gens[j], t.exps[j]));
        acc[deg] += t.coeff;
      }
      for (const auto& [deg, c] : acc) CHECK(c == 0);
    }
  }
}
