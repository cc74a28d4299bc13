#include "logres/log_calculus.hpp"

#include <algorithm>
#include <sstream>

#include "logres/errors.hpp"

namespace logres {

namespace {

bool is_unit_basis(const std::vector<Polynomial>& b) { return b.size() == 1 && b[0].is_constant(); }

long long factorial(long long n) {
  if (n > 20) throw InvalidArgument("mark " + std::to_string(n) + "! exceeds the 64-bit range");
  long long f = 1;
  for (long long i = 2; i <= n; ++i) f *= i;
  return f;
}

// D^{<=i}(I) for i = 0..a-1, stopping once the chain stabilizes.
std::vector<std::vector<Polynomial>> derivative_chain(const Chart& C, const std::vector<Polynomial>& I, long long a) {
  std::vector<std::vector<Polynomial>> out = {canonical(C, I)};
  while (static_cast<long long>(out.size()) < a) {
    std::vector<Polynomial> next = derive_ideal(C, out.back(), 1);
    if (ideals_equal(C, next, out.back())) break;
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<Polynomial> ideal_union(std::vector<Polynomial> a, const std::vector<Polynomial>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<Polynomial> monoid_ideal_polys(const Chart& C, const MonoidIdeal& N) {
  std::vector<Polynomial> out;
  for (const auto& g : N.gens) out.push_back(C.monomial(g));
  return out;
}

}  // namespace

std::optional<int> max_logord(const Chart& C, const std::vector<Polynomial>& I) {
  std::vector<Polynomial> cur = canonical(C, I);
  for (int a = 0;; ++a) {
    if (is_unit_basis(cur)) return a;
    std::vector<Polynomial> next = derive_ideal(C, cur, 1);
    if (next == cur) return std::nullopt;
    cur = std::move(next);
  }
}

std::vector<Polynomial> cosupport(const Chart& C, const MarkedIdeal& M) {
  return derive_ideal(C, M.ideal, static_cast<int>(M.mark - 1));
}

MonoidIdeal monomial_saturation(const Chart& C, const std::vector<Polynomial>& I) {
  std::vector<Polynomial> cur = canonical(C, I);
  if (cur.empty()) throw InvalidArgument("monomial saturation of the zero ideal");
  for (;;) {
    std::vector<Polynomial> next = derive_ideal(C, cur, 1);
    if (next == cur) break;
    cur = std::move(next);
  }
  if (is_unit_basis(cur)) return MonoidIdeal{{IVec(C.monoid.rank, 0)}};
  std::vector<IVec> elems;
  std::vector<Polynomial> monos;
  for (const auto& g : cur) {
    if (!g.is_monomial()) continue;
    const Exponents& e = g.leading().exps;
    bool pure = true;
    for (int i = 0; i < C.num_ordinary(); ++i)
      if (e[i]) pure = false;
    if (!pure) continue;
    elems.push_back(C.degree_of(e));
    monos.push_back(g);
  }
  if (!ideals_equal(C, monos, cur)) throw NotMonomialFixpoint("derivation fixpoint " + ideal_to_string(C, cur));
  return minimalize(C.monoid, elems);
}

CleanPart clean_part(const Chart& C, const std::vector<Polynomial>& I) {
  MonoidIdeal M = monomial_saturation(C, I);
  if (M.gens.size() != 1) {
    std::ostringstream os;
    os << "monomial saturation has " << M.gens.size() << " generators";
    throw NotBalanced(os.str());
  }
  CleanPart out;
  out.monomial = M.gens[0];
  if (is_zero(out.monomial)) {
    out.clean = canonical(C, I);
    return out;
  }
  Ideal colon = ideal_colon(chart_ideal(C, I), C.monomial(out.monomial));
  out.clean = canonical(C, colon.basis());
  return out;
}

std::vector<Polynomial> chart_product(const Chart& C, const std::vector<Polynomial>& A,
                                      const std::vector<Polynomial>& B) {
  std::vector<Polynomial> out;
  for (const auto& a : A)
    for (const auto& b : B) out.push_back(a * b);
  return canonical(C, prune_generators(std::move(out)));
}

std::vector<Polynomial> chart_power(const Chart& C, const std::vector<Polynomial>& A, long long n) {
  if (n == 0) return {C.constant(1)};
  std::vector<Polynomial> base = canonical(C, A);
  std::vector<Polynomial> acc;
  bool have = false;
  while (n > 0) {
    if (n & 1) {
      acc = have ? chart_product(C, acc, base) : base;
      have = true;
    }
    n >>= 1;
    if (n) base = chart_product(C, base, base);
  }
  return acc;
}

MarkedIdeal homogenize(const Chart& C, const MarkedIdeal& M) {
  int a = static_cast<int>(M.mark);
  std::vector<Polynomial> T = derive_ideal(C, M.ideal, a - 1);
  std::vector<Polynomial> H = canonical(C, M.ideal);
  std::vector<Polynomial> Tpow = {C.constant(1)};
  for (int i = 1; i <= a - 1; ++i) {
    Tpow = chart_product(C, Tpow, T);
    H = ideal_union(H, chart_product(C, derive_ideal(C, M.ideal, i), Tpow));
  }
  return {canonical(C, H), M.mark};
}

MarkedIdeal coefficient_ideal(const Chart& C, const MarkedIdeal& M) {
  long long a = M.mark;
  long long f = factorial(a);
  auto chain = derivative_chain(C, M.ideal, a);
  std::vector<Polynomial> out;
  for (long long i = 0; i < a; ++i) {
    const auto& D = chain[std::min<std::size_t>(i, chain.size() - 1)];
    out = ideal_union(out, chart_power(C, D, f / (a - i)));
  }
  return {canonical(C, out), f};
}

MarkedIdeal restricted_coefficient_ideal(const Chart& C, const MarkedIdeal& M, int var) {
  long long a = M.mark;
  auto chain = derivative_chain(C, M.ideal, a);
  std::vector<std::vector<Polynomial>> restricted;
  for (const auto& D : chain) {
    std::vector<Polynomial> r;
    for (const auto& g : D) r.push_back(g.set_zero(var));
    restricted.push_back(canonical(C, r));
  }
  // the zero ideal carries no information in its mark
  if (restricted.back().empty()) return {{}, a > 20 ? 1 : factorial(a)};
  long long f = factorial(a);
  std::vector<Polynomial> out;
  for (long long i = 0; i < a; ++i) {
    const auto& r = restricted[std::min<std::size_t>(i, restricted.size() - 1)];
    out = ideal_union(out, chart_power(C, r, f / (a - i)));
  }
  return {canonical(C, out), f};
}

MarkedIdeal marked_sum(const Chart& C, const std::vector<MarkedIdeal>& parts) {
  long long prod = 1;
  for (const auto& p : parts) prod *= p.mark;
  std::vector<Polynomial> out;
  for (const auto& p : parts) out = ideal_union(out, chart_power(C, p.ideal, prod / p.mark));
  return {canonical(C, out), prod};
}

MarkedIdeal marked_product(const Chart& C, const std::vector<MarkedIdeal>& parts) {
  std::vector<Polynomial> out = {C.constant(1)};
  long long sum = 0;
  for (const auto& p : parts) {
    out = chart_product(C, out, p.ideal);
    sum += p.mark;
  }
  return {out, sum};
}

CenterClosure integral_closure_of_center_power(const Chart& C, const KummerCenter& J, long long a,
                                               const std::vector<Polynomial>& I) {
  CenterClosure out;
  out.cover = kummer_cover_pullback(C, J.monomial.gens, J.root, I);
  const Chart& R = out.cover.chart;
  MonoidIdeal N;
  for (const auto& g : J.monomial.gens) {
    IVec c;
    if (!R.lattice_coords(qvec_scale(C.monomial_q(g), Rational(1, J.root)), c))
      throw InvalidArgument("center root is not integral on the refined chart");
    N.gens.push_back(c);
  }
  N = minimalize(R.monoid, N.gens);
  std::vector<Polynomial> ord;
  for (int v : J.ordinary) ord.push_back(R.variable(v));
  std::vector<Polynomial> sum;
  for (long long j = 0; j <= a; ++j) {
    if (j < a && ord.empty()) continue;
    if (j > 0 && N.gens.empty()) break;
    std::vector<Polynomial> mono = {R.constant(1)};
    if (j > 0) mono = monoid_ideal_polys(R, monoid_saturate_ideal(R.monoid, monoid_ideal_power(R.monoid, N, static_cast<int>(j))));
    sum = ideal_union(sum, chart_product(R, mono, chart_power(R, ord, a - j)));
  }
  out.ideal = canonical(R, sum);
  return out;
}

bool is_admissible(const Chart& C, const MarkedIdeal& M, const KummerCenter& J) {
  CenterClosure cl = integral_closure_of_center_power(C, J, M.mark, M.ideal);
  return chart_contains(cl.cover.chart, cl.ideal, cl.cover.ideal);
}

MaximalContact select_maximal_contact(const Chart& C, const MarkedIdeal& M) {
  std::vector<Polynomial> T = derive_ideal(C, M.ideal, static_cast<int>(M.mark - 1));
  for (const auto& g : T)
    for (int i = 0; i < C.num_ordinary(); ++i) {
      if (g.degree_in(i) != 1) continue;
      Rational c = 0;
      bool linear = true;
      std::vector<Term> rest;
      for (const auto& t : g.terms()) {
        if (t.exps[i] == 0) {
          rest.push_back(t);
          continue;
        }
        if (exp_degree(t.exps) != 1) linear = false;
        c = t.coeff;
      }
      if (!linear) continue;
      MaximalContact mc;
      mc.var = i;
      mc.shift = Polynomial::from_terms(C.nvars(), rest).scaled(Rational(1) / c);
      mc.images = substitution_images(C, i, mc.shift);
      return mc;
    }
  throw NoMaximalContact("no generator of " + ideal_to_string(C, T) + " is linear in an ordinary coordinate");
}

}  // namespace logres
