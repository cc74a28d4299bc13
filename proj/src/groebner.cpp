#include "logres/groebner.hpp"

#include <algorithm>
#include <set>

#include "logres/errors.hpp"

namespace logres {

namespace {

struct Pair {
  std::size_t i, j;
  Exponents lcm;
};

Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord) {
  Polynomial p = f.reordered(ord);
  std::vector<Term> rem;
  while (!p.is_zero()) {
    const Term lt = p.leading();
    const Polynomial* div = nullptr;
    for (const auto& g : basis) {
      if (divides(g.leading().exps, lt.exps)) {
        div = &g;
        break;
      }
    }
    if (div) {
      Exponents e = exp_sub(lt.exps, div->leading().exps);
      p = p - div->times_monomial(e, lt.coeff / div->leading().coeff);
    } else {
      rem.push_back(lt);
      p = p - Polynomial::from_terms(p.nvars(), {lt}, ord);
    }
  }
  return Polynomial::from_terms(f.nvars(), std::move(rem), ord);
}

Polynomial spoly(const Polynomial& f, const Polynomial& g, const Exponents& lcm) {
  Polynomial a = f.times_monomial(exp_sub(lcm, f.leading().exps), 1 / f.leading().coeff);
  Polynomial b = g.times_monomial(exp_sub(lcm, g.leading().exps), 1 / g.leading().coeff);
  return a - b;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord) {
  return reduce_full(f, basis, ord);
}

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& input,
                                       const MonomialOrder& ord) {
  std::vector<Polynomial> G;
  for (const auto& f : input) {
    if (f.is_zero()) continue;
    Polynomial p = f.reordered(ord).make_monic();
    if (p.is_constant()) return {Polynomial::constant(f.nvars(), 1).reordered(ord)};
    G.push_back(p);
  }
  if (G.empty()) return {};
  // Inter-reduce the input once to keep the pair set small.
  std::sort(G.begin(), G.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.compare(a.leading().exps, b.leading().exps) < 0;
  });
  {
    std::vector<Polynomial> H;
    for (const auto& g : G) {
      Polynomial r = reduce_full(g, H, ord);
      if (r.is_zero()) continue;
      if (r.is_constant()) return {Polynomial::constant(g.nvars(), 1).reordered(ord)};
      H.push_back(r.make_monic());
    }
    G = std::move(H);
  }

  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> done;
  auto add_pairs = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i)
      pairs.push_back({i, k, exp_lcm(G[i].leading().exps, G[k].leading().exps)});
  };
  for (std::size_t k = 1; k < G.size(); ++k) add_pairs(k);

  auto processed = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return done.count({a, b}) > 0;
  };

  while (!pairs.empty()) {
    // normal selection strategy: smallest lcm
    auto it = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      return ord.compare(a.lcm, b.lcm) < 0;
    });
    Pair pr = *it;
    pairs.erase(it);
    done.insert({pr.i, pr.j});
    const Exponents& li = G[pr.i].leading().exps;
    const Exponents& lj = G[pr.j].leading().exps;
    if (coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (divides(G[k].leading().exps, pr.lcm) && processed(pr.i, k) && processed(pr.j, k))
        chain = true;
    }
    if (chain) continue;
    Polynomial s = reduce_full(spoly(G[pr.i], G[pr.j], pr.lcm), G, ord);
    if (s.is_zero()) continue;
    if (s.is_constant()) return {Polynomial::constant(s.nvars(), 1).reordered(ord)};
    G.push_back(s.make_monic());
    add_pairs(G.size() - 1);
  }

  // minimalize
  std::vector<Polynomial> M;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& a = G[j].leading().exps;
      const auto& b = G[i].leading().exps;
      if (divides(a, b) && (a != b || j < i)) redundant = true;
    }
    if (!redundant) M.push_back(G[i]);
  }
  // tail-reduce
  std::vector<Polynomial> R;
  for (std::size_t i = 0; i < M.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < M.size(); ++j)
      if (j != i) others.push_back(M[j]);
    R.push_back(reduce_full(M[i], others, ord).make_monic());
  }
  std::sort(R.begin(), R.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.compare(a.leading().exps, b.leading().exps) < 0;
  });
  return R;
}

Ideal::Ideal(int nvars, std::vector<Polynomial> gens) : nvars_(nvars) {
  for (auto& g : gens) {
    if (g.nvars() != nvars) throw InvalidArgument("generator lives in a different ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(int nvars) { return Ideal(nvars, {Polynomial::constant(nvars, 1)}); }

const std::vector<Polynomial>& Ideal::basis() const {
  if (!gb_) gb_ = std::make_shared<const std::vector<Polynomial>>(groebner_basis(gens_));
  return *gb_;
}

bool Ideal::is_unit() const {
  const auto& b = basis();
  return b.size() == 1 && b[0].is_constant();
}

bool Ideal::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  return normal_form(f, basis()).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

std::vector<Polynomial> prune_generators(std::vector<Polynomial> gens) {
  std::vector<Polynomial> uniq;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    Polynomial m = g.make_monic();
    if (m.is_constant()) return {m};
    bool dup = false;
    for (const auto& u : uniq)
      if (u == m) {
        dup = true;
        break;
      }
    if (!dup) uniq.push_back(std::move(m));
  }
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < uniq.size(); ++i) {
    const auto& g = uniq[i];
    bool redundant = false;
    for (std::size_t j = 0; j < uniq.size() && !redundant; ++j) {
      if (i == j || !uniq[j].is_monomial()) continue;
      const auto& e = uniq[j].leading().exps;
      bool all = true;
      for (const auto& t : g.terms())
        if (!divides(e, t.exps)) {
          all = false;
          break;
        }
      if (!all) continue;
      // g is a multiple of the monomial uniq[j]
      if (!(g.is_monomial() && g.leading().exps == e) || j < i) redundant = true;
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.nvars(), prune_generators(std::move(g)));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> g;
  for (const auto& p : a.generators())
    for (const auto& q : b.generators()) g.push_back(p * q);
  return Ideal(a.nvars(), prune_generators(std::move(g)));
}

Ideal ideal_power(const Ideal& a, int n) {
  if (n < 0) throw InvalidArgument("negative ideal power");
  Ideal result = Ideal::unit(a.nvars());
  Ideal base = a;
  while (n > 0) {
    if (n & 1) result = ideal_product(result, base);
    n >>= 1;
    if (n) base = ideal_product(base, base);
  }
  return result;
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  int n = a.nvars();
  std::vector<int> shift(n);
  for (int i = 0; i < n; ++i) shift[i] = i + 1;
  Polynomial t = Polynomial::variable(n + 1, 0);
  Polynomial one_minus_t = Polynomial::constant(n + 1, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(t * g.remap(shift, n + 1));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.remap(shift, n + 1));
  auto gb = groebner_basis(gens, MonomialOrder::elimination(1));
  std::vector<int> back(n + 1);
  back[0] = -1;
  for (int i = 0; i < n; ++i) back[i + 1] = i;
  std::vector<Polynomial> out;
  for (const auto& g : gb)
    if (g.degree_in(0) == 0) out.push_back(g.remap(back, n));
  return Ideal(n, std::move(out));
}

Ideal ideal_colon(const Ideal& I, const Polynomial& m) {
  if (m.is_zero()) throw InvalidArgument("colon by zero");
  if (I.is_zero()) return Ideal(I.nvars());
  if (m.is_constant()) return I;
  Ideal inter = ideal_intersection(I, Ideal(I.nvars(), {m}));
  std::vector<Polynomial> out;
  for (const auto& g : inter.generators()) out.push_back(exact_divide(g, m));
  return Ideal(I.nvars(), std::move(out));
}

Ideal saturate_by_element(const Ideal& I, const Polynomial& m) {
  Ideal cur = I;
  for (;;) {
    Ideal next = ideal_colon(cur, m);
    if (cur.contains(next)) return cur;
    cur = next;
  }
}

Polynomial partial_derivative(const Polynomial& f, int var) { return f.derivative(var); }

}  // namespace logres
