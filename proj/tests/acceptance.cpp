// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "logres/errors.hpp"
#include "logres/io.hpp"
#include "oracles.hpp"
#include "tree_compare.hpp"

using namespace logres;

namespace {

struct Report {
  std::vector<std::string> failures;
  int checks = 0;
  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

std::vector<Polynomial> P(const Chart& C, std::vector<std::string> g) { return parse_ideal(C, g); }
KummerCenter center(std::vector<int> ord, std::vector<IVec> mono, int d) { return {ord, MonoidIdeal{mono}, d}; }
Chart xu() { return make_chart({"x"}, 1, {"u"}, {{1}}); }

const TraceNode& node(const BlowupTree& T, const std::string& id) {
  const TraceNode* n = T.find(id);
  if (!n) throw InvalidArgument("missing chart " + id);
  return *n;
}

struct Problem {
  std::string name;
  Chart chart;
  std::vector<Polynomial> ideal;
};

std::vector<Problem> corpus() {
  std::ifstream in(std::string(LOGRES_FIXTURE_DIR) + "/corpus.json");
  if (!in) throw ParseError("cannot open corpus.json");
  auto doc = nlohmann::json::parse(in);
  std::vector<Problem> out;
  for (const auto& entry : doc.at("problems")) {
    ProblemSpec s = parse_problem(entry.at("problem").dump());
    Chart C = problem_chart(s);
    out.push_back({entry.at("name").get<std::string>(), C, problem_ideal(s, C)});
  }
  return out;
}

// Every step's children carry strictly smaller invariants.
bool invariants_decrease(const BlowupTree& T) {
  for (const auto& n : T.nodes) {
    if (!n.step) continue;
    for (const auto& id : n.step->children)
      if (compare_invariants(node(T, id).invariant, n.invariant) >= 0) return false;
  }
  return true;
}

void criterion1(Report& r) {
  Chart C = xu();
  auto I = P(C, {"u^2", "x"});
  auto T = principalize(C, I);
  r.check(T.steps() == 1, "exactly one blowup");
  const auto& root = node(T, "0");
  r.check(root.step && root.step->center_text == "(x, u^2)", "center (x, u^2)");
  r.check(T.leaves().size() == 2, "two leaf charts");
  for (const auto* leaf : T.leaves()) r.check(leaf->status == NodeStatus::LeafPrincipal, leaf->id + " principal");

  auto R = blow_up(C, center({0}, {{2}}, 1));
  r.check(R.charts.size() == 2, "blowup has two charts");
  for (const auto& B : R.charts) {
    const Chart& D = B.chart;
    if (B.generator_label == "x") {
      r.check(ideals_equal(D, D.relations, P(D, {"v*x - u^2"})), "x-chart relation v*x - u^2");
      r.check(ideals_equal(D, pullback(B, I), P(D, {"x"})), "x-chart pullback (x)");
    } else {
      r.check(D.relations.empty() && D.orbifold.empty(), "u^2-chart is smooth");
      r.check(ideals_equal(D, pullback(B, I), P(D, {"u^2"})), "u^2-chart pullback (u^2)");
    }
  }
  const auto& X = node(T, "0.1");
  r.check(ideals_equal(X.chart, {X.accumulated}, P(X.chart, {"x"})), "tree x-chart accumulates (x)");
  const auto& U = node(T, "0.2");
  r.check(ideals_equal(U.chart, {U.accumulated}, P(U.chart, {"u^2"})), "tree u^2-chart accumulates (u^2)");
}

void criterion2(Report& r) {
  Chart C = xu();
  MarkedIdeal M{P(C, {"x^2", "u"}), 2};
  auto mc = select_maximal_contact(C, M);
  r.check(mc.var == 0 && mc.shift.is_zero(), "maximal contact x");
  auto coef = coefficient_ideal(C, M);
  r.check(coef.mark == 2 && ideals_equal(C, coef.ideal, P(C, {"x^2", "u"})), "C = (x^2, u) with mark 2");
  auto rc = restricted_coefficient_ideal(C, M, 0);
  auto [H, Hideal] = restrict_to_hypersurface(C, 0, rc.ideal);
  r.check(rc.mark == 2 && ideals_equal(H, Hideal, P(H, {"u"})), "restriction (u)");
  KummerCenter clean{{}, monomial_saturation(H, Hideal), static_cast<int>(rc.mark)};
  r.check(center_to_string(H, clean) == "(u^(1/2))", "cleaning center (u^(1/2))");
  KummerCenter J = pushforward_center({0}, clean);
  r.check(center_to_string(C, J) == "(x, u^(1/2))", "pushforward center (x, u^(1/2))");
  auto cl = integral_closure_of_center_power(C, J, 2);
  const Chart& Rc = cl.cover.chart;
  std::string v = Rc.names()[1];
  r.check(ideals_equal(Rc, cl.ideal, P(Rc, {"x^2", "x*" + v, v + "^2"})), "(x, u^(1/2))^2 = (x^2, x u^(1/2), u)");
  r.check(is_admissible(C, M, J), "center admissible");

  auto T = order_reduce(C, M.ideal, M.mark);
  r.check(T.steps() == 1, "one Kummer blowup");
  const auto& W = node(T, "0.2");
  auto names = W.chart.names();
  r.check(names == std::vector<std::string>{"y", "w"}, "w-chart coordinates (y, w)");
  r.check(W.chart.orbifold.size() == 1 && W.chart.orbifold[0] == OrbifoldCharacter{2, {1, 1}},
          "w-chart Z/2 character with weights (1, 1)");
  r.check(ideals_equal(W.chart, {W.accumulated}, P(W.chart, {"w^2"})), "w-chart pullback (w^2)");
  r.check(check_final_state(T).empty(), "final state");
}

void criterion3(Report& r) {
  Chart C = xu();
  auto I = P(C, {"x^3", "x*u^3", "u^6"});
  r.check(ideals_equal(C, derive_ideal(C, I, 1), P(C, {"x^2", "u^3"})), "D<=1 = (x^2, u^3)");
  r.check(ideals_equal(C, derive_ideal(C, I, 2), P(C, {"x", "u^3"})), "D<=2 = (x, u^3)");
  auto coef = coefficient_ideal(C, {I, 3});
  r.check(coef.mark == 6 && ideals_equal(C, coef.ideal, P(C, {"x^6", "x^4*u^3", "x^2*u^6", "u^9"})),
          "C(I, 3) = (x^6, x^4 u^3, x^2 u^6, u^9) with mark 6");
  auto rc = restricted_coefficient_ideal(C, {I, 3}, 0);
  auto [H, Hideal] = restrict_to_hypersurface(C, 0, rc.ideal);
  r.check(rc.mark == 6 && ideals_equal(H, Hideal, P(H, {"u^9"})), "restriction (u^9, 6)");
  auto T = order_reduce(C, I, 3);
  const auto& root = node(T, "0");
  r.check(root.step && root.step->center_text == "(x, u^(3/2))", "center (x, u^(3/2))");
  const auto& X = node(T, "0.1");
  r.check(is_unit_ideal(X.chart, X.transform), "x-chart transform (1)");
  const auto& U = node(T, "0.2");
  r.check(max_logord(U.chart, U.transform) == 1, "u-chart transform has max_logord 1");
  r.check(check_final_state(T).empty(), "final state");
}

void criterion4(Report& r) {
  std::mt19937 rng(20240601);
  const std::vector<std::pair<int, int>> shapes = {{1, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2}};
  int compared = 0, nontrivial = 0;
  for (int trial = 0; compared < 60; ++trial) {
    auto [nord, nmono] = shapes[trial % shapes.size()];
    std::vector<std::string> ord = {"x", "y"}, mono = {"u", "v"};
    ord.resize(nord);
    mono.resize(nmono);
    std::vector<IVec> vecs;
    for (int j = 0; j < nmono; ++j) {
      IVec e(nmono, 0);
      e[j] = 1;
      vecs.push_back(e);
    }
    Chart C = make_chart(ord, nmono, mono, vecs);
    int n = nord + nmono;
    std::uniform_int_distribution<int> count(1, 3), terms(1, 3);
    std::vector<Polynomial> I;
    std::uniform_int_distribution<int> coin(0, 1), ex(0, 1);
    for (int k = count(rng); k > 0; --k) {
      if (coin(rng)) {
        I.push_back(oracle::random_poly(rng, n, terms(rng), 4));
        continue;
      }
      // degree <= 2 times a monomial of degree <= 2 keeps M(I) away from (1) more often
      Exponents m(n, 0);
      for (int j = 0; j < nmono; ++j) m[nord + j] = ex(rng);
      I.push_back(Polynomial::monomial(m) * oracle::random_poly(rng, n, terms(rng), 2));
    }
    if (is_zero_ideal(C, I)) continue;
    auto got = monomial_saturation(C, I).gens;
    std::sort(got.begin(), got.end());
    r.check(got == oracle::brute_monomial_saturation(nord, nmono, I), "oracle mismatch on " + ideal_to_string(C, I));
    nontrivial += got != std::vector<IVec>{IVec(nmono, 0)};
    ++compared;
  }
  r.check(nontrivial >= 20, "only " + std::to_string(nontrivial) + " ideals with M(I) != (1)");
}

void criterion5(Report& r) {
  using oracle::random_poly;
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> e(0, 2), mark(1, 3);
  const int kCases = 30;

  // D(N I) = N D(I)
  Chart A = make_chart({"x"}, 2, {"u", "w"}, {{1, 0}, {0, 1}});
  for (int t = 0; t < kCases; ++t) {
    std::vector<Polynomial> I = {random_poly(rng, 3, 3, 3), random_poly(rng, 3, 2, 3)};
    Polynomial N = A.monomial({e(rng), e(rng)});
    std::vector<Polynomial> NI, ND;
    for (const auto& f : I) NI.push_back(N * f);
    for (const auto& g : derive_ideal(A, I, 1)) ND.push_back(N * g);
    r.check(ideals_equal(A, derive_ideal(A, NI, 1), ND), "D(N I) = N D(I) on " + ideal_to_string(A, I));
  }

  // D<=i and restriction to x = 0: containment in general, equality for ideals pulled back from x = 0
  Chart B = make_chart({"x", "y"}, 1, {"u"}, {{1}});
  std::vector<Polynomial> drop_x = {Polynomial::constant(3, 0), B.variable(1), B.variable(2)};
  for (int t = 0; t < kCases; ++t) {
    std::vector<Polynomial> I = {random_poly(rng, 3, 3, 3), random_poly(rng, 3, 3, 3)};
    int i = 1 + t % 2;
    auto [H, J] = restrict_to_hypersurface(B, 0, I);
    auto [H1, DI] = restrict_to_hypersurface(B, 0, derive_ideal(B, I, i));
    r.check(chart_contains(H, DI, derive_ideal(H, J, i)), "D<=i(I|H) in D<=i(I)|H for " + ideal_to_string(B, I));
    auto pulled = canonical(B, map_ideal(I, drop_x, 3));
    auto [H2, DP] = restrict_to_hypersurface(B, 0, derive_ideal(B, pulled, i));
    r.check(ideals_equal(H, DP, derive_ideal(H, J, i)), "D<=i commutes with restriction for " + ideal_to_string(B, pulled));
  }

  // controlled transforms of admissible marked ideals of maximal order keep the order <= a
  Chart C = xu();
  const std::vector<std::pair<int, int>> roots = {{1, 2}, {1, 1}, {3, 2}, {2, 1}, {1, 3}, {2, 3}};  // u^(k/d)
  for (int t = 0; t < kCases; ++t) {
    auto [k, d] = roots[t % roots.size()];
    int a = mark(rng);
    std::uniform_int_distribution<int> xi(0, a + 1), uj(0, 4), c(-3, 3);
    // x^a alone keeps the order exactly a; the other terms have weight >= a in (x, u^(k/d))
    std::vector<Polynomial> I = {Polynomial::monomial({a, 0})};
    for (int g = 0; g < 2; ++g) {
      std::vector<Term> ts = {{Rational(1), {a + g, 1}}};
      for (int s = 0; s < 3; ++s) {
        int i = xi(rng), j = uj(rng), cf = c(rng);
        if (i * k + j * d >= a * k && cf != 0) ts.push_back({Rational(cf), {i, j}});
      }
      I.push_back(Polynomial::from_terms(2, ts));
    }
    KummerCenter J = center({0}, {{k}}, d);
    MarkedIdeal M{I, a};
    std::string label = ideal_to_string(C, I) + " mark " + std::to_string(a) + " at " + center_to_string(C, J);
    r.check(max_logord(C, I) == a, "order a for " + label);
    r.check(is_admissible(C, M, J), "admissible " + label);
    for (const auto& Bc : blow_up(C, J).charts) {
      auto lo = max_logord(Bc.chart, controlled_transform(Bc, I, a));
      r.check(lo && *lo <= a, "order does not increase on chart " + Bc.chart.id + " for " + label);
    }
  }

  // cleaning blowups along M(I)^(1/a) give clean transforms
  Chart U = make_chart({"x"}, 2, {"u", "v"}, {{1, 0}, {0, 1}});
  for (int t = 0, done = 0; done < kCases; ++t) {
    std::vector<Polynomial> I;
    for (int g = 0; g < 2; ++g) I.push_back(U.monomial({e(rng), e(rng)}) * random_poly(rng, 3, 2, 2));
    if (is_zero_ideal(U, I)) continue;
    MonoidIdeal N = monomial_saturation(U, I);
    if (N.gens.size() == 1 && is_zero(N.gens[0])) continue;
    ++done;
    int a = 1 + t % 2;
    KummerCenter J{{}, N, a};
    for (const auto& Bc : blow_up(U, J).charts) {
      auto S = monomial_saturation(Bc.chart, controlled_transform(Bc, I, a));
      r.check(S.gens.size() == 1 && is_zero(S.gens[0]),
              "clean transform on chart " + Bc.chart.id + " for " + ideal_to_string(U, I));
    }
  }

  // (I, a) and (I^2, 2a) have the same admissible centers
  const std::vector<KummerCenter> centers = {center({0}, {{1}}, 1), center({0}, {{1}}, 2), center({0}, {{3}}, 2),
                                             center({0}, {{2}}, 1), center({0}, {}, 1),    center({}, {{1}}, 1),
                                             center({}, {{1}}, 2),  center({0}, {{1}}, 3)};
  int admissible = 0;
  for (int t = 0; t < kCases; ++t) {
    std::vector<Polynomial> I = {random_poly(rng, 2, 2, 3), random_poly(rng, 2, 2, 3)};
    if (is_zero_ideal(C, I)) I = P(C, {"x^2", "u"});
    MarkedIdeal M{I, mark(rng)};
    MarkedIdeal M2{chart_power(C, I, 2), 2 * M.mark};
    for (const auto& J : centers) {
      bool a1 = is_admissible(C, M, J);
      admissible += a1;
      r.check(a1 == is_admissible(C, M2, J), "biconditional for " + ideal_to_string(C, I) + " at " + center_to_string(C, J));
    }
  }
  r.check(admissible > 0, "some random marked ideal has an admissible center");
}

void criterion6(Report& r) {
  for (const auto& p : corpus()) {
    auto X = principalize(p.chart, p.ideal);
    auto [Y, J] = add_free_variable(p.chart, p.ideal);
    auto YT = principalize(Y, J);
    for (const auto& e : treecmp::compare_reembedding(X, YT)) r.check(false, p.name + " " + e);
    r.check(true, p.name);
  }
}

void criterion7(Report& r) {
  Chart C = xu();
  auto I = P(C, {"x^2", "u"});
  auto base = order_reduce(C, I, 2);
  auto cover = kummer_cover_pullback(C, {{1}}, 2, I);
  r.check(ideals_equal(cover.chart, cover.ideal, P(cover.chart, {"x^2", "v^2"})), "pullback (x^2, v^2)");
  auto T = order_reduce(cover.chart, cover.ideal, 2);
  r.check(T.steps() == 1, "one blowup on the cover");
  const auto& root = node(T, "0");
  r.check(root.step && root.step->center_text == "(x, v)" && root.step->center.root == 1, "ordinary blowup at (x, v)");
  for (const auto& e : treecmp::compare_cover(base, T)) r.check(false, e);
}

void criterion8(Report& r) {
  auto problems = corpus();
  r.check(problems.size() >= 20, "corpus has at least 20 ideals");
  EngineConfig config;
  config.max_depth = 64;
  for (const auto& p : problems) {
    try {
      auto T = principalize(p.chart, p.ideal, config);
      for (const auto& f : check_final_state(T)) r.check(false, p.name + " " + f);
      r.check(invariants_decrease(T), p.name + " invariants decrease");
    } catch (const LogresError& e) {
      r.check(false, p.name + " " + e.what());
    }
  }
}

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<void(Report&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "one blowup principalizes (u^2, x)", 1, criterion1},
      {2, "order reduction of ((x^2, u), 2) by a Kummer blowup", 1, criterion2},
      {3, "notenough: coefficient ideal and center (x, u^(3/2))", 2, criterion3},
      {4, "monomial saturation agrees with the brute-force oracle", 60, criterion4},
      {5, "property suite", 600, criterion5},
      {6, "re-embedding with a free coordinate", 10, criterion6},
      {7, "Kummer cover u = v^2 of ((x^2, u), 2)", 2, criterion7},
      {8, "termination and final state on the corpus", 600, criterion8},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Report r;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(r);
    } catch (const std::exception& e) {
      r.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      std::ostringstream msg;
      msg << "time limit " << c.limit_seconds << " s exceeded";
      r.failures.push_back(msg.str());
    }
    bool ok = r.failures.empty();
    failed += !ok;
    std::printf("criterion %d: %s  %s  (%d checks, %.2f s)\n", c.number, ok ? "PASS" : "FAIL", c.title.c_str(), r.checks,
                secs);
    for (const auto& f : r.failures) std::printf("    %s\n", f.c_str());
  }
  return failed == 0 ? 0 : 1;
}
