#include "logres/chart.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "logres/errors.hpp"
#include "logres/parse.hpp"

namespace logres {

namespace {

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

long long denominator_lcm(const std::vector<QVec>& vs) {
  long long l = 1;
  for (const auto& v : vs)
    for (const auto& x : v) l = lcm_ll(l, x.get_den().get_si());
  return l;
}

IVec scaled_integral(const QVec& v, long long D) {
  IVec r;
  for (const auto& x : v) {
    Rational y = x * Rational(static_cast<long>(D));
    y.canonicalize();
    r.push_back(y.get_num().get_si());
  }
  return r;
}

std::vector<QVec> to_q_rows(const std::vector<IVec>& rows) {
  std::vector<QVec> out;
  for (const auto& r : rows) out.push_back(to_q(r));
  return out;
}

long long mod_pos(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

std::vector<int> removal_map(int n, int var) {
  std::vector<int> map(n);
  for (int i = 0; i < n; ++i) map[i] = i < var ? i : (i == var ? -1 : i - 1);
  return map;
}

std::vector<int> insertion_map(int n, int pos) {
  std::vector<int> map(n);
  for (int i = 0; i < n; ++i) map[i] = i < pos ? i : i + 1;
  return map;
}

}  // namespace

std::vector<std::string> Chart::names() const {
  std::vector<std::string> out = ordinary;
  out.insert(out.end(), monoid.names.begin(), monoid.names.end());
  return out;
}

int Chart::index_of(const std::string& name) const {
  auto all = names();
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] == name) return static_cast<int>(i);
  return -1;
}

QVec Chart::monomial_q(const IVec& lattice_elem) const {
  QVec q(root_dim, Rational(0));
  for (std::size_t k = 0; k < lattice.size(); ++k)
    if (lattice_elem[k] != 0) q = qvec_add(q, qvec_scale(lattice[k], Rational(static_cast<long>(lattice_elem[k]))));
  return q;
}

QVec Chart::var_q(int var) const {
  if (is_ordinary(var)) return ordinary_q[var];
  return monomial_q(monoid.gens[var - num_ordinary()]);
}

bool Chart::lattice_coords(const QVec& q, IVec& out) const {
  if (lattice.empty()) {
    for (const auto& x : q)
      if (x != 0) return false;
    out.clear();
    return true;
  }
  QVec c;
  if (!solve_in_span(lattice, q, c) || !is_integral(c)) return false;
  out = to_i(c);
  return true;
}

Polynomial Chart::monomial(const IVec& lattice_elem) const {
  std::vector<int> exps;
  if (!monoid.decompose(lattice_elem, exps)) throw InvalidArgument("lattice element is not in the chart monoid");
  Exponents e(nvars(), 0);
  for (int j = 0; j < num_monomial(); ++j) e[num_ordinary() + j] = exps[j];
  return Polynomial::monomial(e);
}

IVec Chart::degree_of(const Exponents& e) const {
  IVec d(monoid.rank, 0);
  for (int j = 0; j < num_monomial(); ++j)
    if (e[num_ordinary() + j]) d = ivec_add(d, ivec_scale(monoid.gens[j], e[num_ordinary() + j]));
  return d;
}

std::string fresh_name(bool monomial, std::set<std::string>& used) {
  static const std::vector<std::string> mono = {"v", "w", "s", "t"};
  static const std::vector<std::string> ord = {"y", "z"};
  const auto& cycle = monomial ? mono : ord;
  for (int round = 1;; ++round)
    for (const auto& base : cycle) {
      std::string name = round == 1 ? base : base + std::to_string(round);
      if (!used.count(name)) {
        used.insert(name);
        return name;
      }
    }
}

std::vector<OrbifoldCharacter> compute_orbifold(const Chart& C) {
  int n = C.nvars();
  if (n == 0) return {};
  std::vector<QVec> qs;
  for (int v = 0; v < n; ++v) qs.push_back(C.var_q(v));
  long long D = denominator_lcm(qs);
  long long mod = D;
  for (const auto& rc : C.root_characters) mod = lcm_ll(mod, rc.modulus);
  if (mod == 1) return {};
  std::vector<IVec> ints;
  for (const auto& q : qs) ints.push_back(scaled_integral(q, D));
  std::vector<IVec> P = lattice_basis(ints);
  int R = static_cast<int>(P.size());
  if (R == 0) return {};
  std::vector<QVec> Pq = to_q_rows(P);
  std::vector<IVec> coords;
  for (const auto& v : ints) {
    QVec c;
    solve_in_span(Pq, to_q(v), c);
    coords.push_back(to_i(c));
  }
  auto member = [&](const IVec& c) {
    IVec lam(C.root_dim, 0);
    for (int k = 0; k < R; ++k) lam = ivec_add(lam, ivec_scale(P[k], c[k]));
    for (auto& x : lam) {
      if (x % D != 0) return false;
      x /= D;
    }
    for (const auto& rc : C.root_characters)
      if (mod_pos(dot(rc.functional, lam), rc.modulus) != 0) return false;
    return true;
  };
  double boxsize = 1;
  for (int k = 0; k < R; ++k) boxsize *= static_cast<double>(mod);
  if (boxsize > 4e6) throw InvalidArgument("stabilizer too large to enumerate");
  std::vector<IVec> kgens;
  for (int k = 0; k < R; ++k) {
    IVec e(R, 0);
    e[k] = mod;
    kgens.push_back(e);
  }
  IVec c(R, 0);
  for (;;) {
    int i = 0;
    while (i < R && c[i] == mod - 1) c[i++] = 0;
    if (i == R) break;
    ++c[i];
    if (member(c)) kgens.push_back(c);
  }
  SmithData sd = smith_characters(lattice_basis(kgens));
  std::vector<OrbifoldCharacter> out;
  for (std::size_t i = 0; i < sd.diag.size(); ++i) {
    long long d = sd.diag[i];
    if (d <= 1) continue;
    std::vector<long long> w;
    for (const auto& cv : coords) w.push_back(mod_pos(dot(sd.U[i], cv), d));
    std::vector<long long> best = w;
    for (long long k = 2; k < d; ++k) {
      if (std::gcd(k, d) != 1) continue;
      std::vector<long long> cand;
      for (long long x : w) cand.push_back(mod_pos(x * k, d));
      best = std::min(best, cand);
    }
    out.push_back({d, best});
  }
  std::sort(out.begin(), out.end(), [](const OrbifoldCharacter& a, const OrbifoldCharacter& b) {
    if (a.modulus != b.modulus) return a.modulus < b.modulus;
    return a.weights < b.weights;
  });
  return out;
}

bool is_semi_invariant(const Chart& C, const Polynomial& f) {
  for (const auto& ch : C.orbifold) {
    long long first = -1;
    for (const auto& t : f.terms()) {
      long long w = 0;
      for (int v = 0; v < C.nvars(); ++v) w += static_cast<long long>(t.exps[v]) * ch.weights[v];
      w = mod_pos(w, ch.modulus);
      if (first < 0) first = w;
      if (w != first) return false;
    }
  }
  return true;
}

Chart make_chart(const std::vector<std::string>& ordinary, int rank,
                 const std::vector<std::string>& monomial_names, const std::vector<IVec>& gens,
                 const std::vector<OrbifoldCharacter>& characters) {
  if (monomial_names.size() != gens.size()) throw InvalidArgument("one name per monoid generator is required");
  std::set<std::string> seen;
  for (const auto& n : ordinary)
    if (!seen.insert(n).second) throw InvalidArgument("duplicate variable name '" + n + "'");
  for (const auto& n : monomial_names)
    if (!seen.insert(n).second) throw InvalidArgument("duplicate variable name '" + n + "'");
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != rank) throw InvalidArgument("monoid generator has the wrong rank");
    if (is_zero(g)) throw InvalidArgument("monoid generator is zero");
  }
  if (rank > 0) {
    std::vector<IVec> hb = hilbert_basis(rank, gens);
    std::set<IVec> a(hb.begin(), hb.end()), b(gens.begin(), gens.end());
    if (a != b || b.size() != gens.size())
      throw InvalidArgument("monoid generators must be the Hilbert basis of their cone");
  } else if (!gens.empty()) {
    throw InvalidArgument("rank 0 monoid has no generators");
  }
  Chart C;
  int n0 = static_cast<int>(ordinary.size());
  C.root_dim = n0 + rank;
  C.ordinary = ordinary;
  for (int i = 0; i < n0; ++i) {
    QVec q(C.root_dim, Rational(0));
    q[i] = 1;
    C.ordinary_q.push_back(q);
  }
  for (int k = 0; k < rank; ++k) {
    QVec q(C.root_dim, Rational(0));
    q[n0 + k] = 1;
    C.lattice.push_back(q);
  }
  C.monoid.rank = rank;
  C.monoid.names = monomial_names;
  C.monoid.gens = gens;
  int nv = C.nvars();
  for (const auto& ch : characters) {
    if (ch.modulus < 1) throw InvalidArgument("character modulus must be positive");
    if (static_cast<int>(ch.weights.size()) != nv) throw InvalidArgument("character needs one weight per variable");
    RootCharacter rc;
    rc.modulus = ch.modulus;
    rc.functional.assign(C.root_dim, 0);
    for (int i = 0; i < n0; ++i) rc.functional[i] = mod_pos(ch.weights[i], ch.modulus);
    if (rank > 0) {
      // functional on the lattice with the prescribed values on the generators
      IVec phi(rank, 0);
      bool found = false;
      for (;;) {
        bool ok = true;
        for (std::size_t j = 0; j < gens.size() && ok; ++j)
          if (mod_pos(dot(phi, gens[j]) - ch.weights[n0 + j], ch.modulus) != 0) ok = false;
        if (ok) {
          found = true;
          break;
        }
        int i = 0;
        while (i < rank && phi[i] == ch.modulus - 1) phi[i++] = 0;
        if (i == rank) break;
        ++phi[i];
      }
      if (!found) throw InvalidArgument("character weights are not compatible with the monoid");
      for (int k = 0; k < rank; ++k) rc.functional[n0 + k] = phi[k];
    }
    C.root_characters.push_back(rc);
  }
  C.relations = present_monoid_algebra(C.monoid, n0);
  C.orbifold = compute_orbifold(C);
  return C;
}

Chart assemble_chart(const ChartLayout& L) {
  Chart C;
  C.id = L.id;
  C.root_dim = L.root_dim;
  C.ordinary = L.ordinary;
  C.ordinary_q = L.ordinary_q;
  C.root_characters = L.root_characters;
  std::vector<QVec> lgens;
  for (const auto& g : L.lattice_gens) {
    bool z = true;
    for (const auto& x : g)
      if (x != 0) z = false;
    if (!z) lgens.push_back(g);
  }
  long long D = denominator_lcm(lgens);
  std::vector<IVec> ints;
  for (const auto& g : lgens) ints.push_back(scaled_integral(g, D));
  for (const auto& row : lattice_basis(ints))
    C.lattice.push_back(qvec_scale(to_q(row), Rational(1, static_cast<unsigned long>(D))));
  int r = static_cast<int>(C.lattice.size());
  C.monoid.rank = r;
  std::vector<IVec> dirs;
  for (const auto& g : L.cone_gens) {
    QVec c;
    if (!solve_in_span(C.lattice, g, c)) throw InvalidArgument("cone generator outside the lattice span");
    IVec d = clear_denominators(c);
    if (!is_zero(d)) dirs.push_back(d);
  }
  std::vector<IVec> hb = r > 0 ? hilbert_basis(r, dirs) : std::vector<IVec>{};
  std::set<std::string> used = L.avoid;
  for (const auto& n : L.ordinary) used.insert(n);
  std::vector<int> known_of(hb.size(), -1);
  for (std::size_t i = 0; i < hb.size(); ++i) {
    QVec q = C.monomial_q(hb[i]);
    for (std::size_t k = 0; k < L.known.size(); ++k)
      if (L.known[k].first == q) {
        known_of[i] = static_cast<int>(k);
        break;
      }
  }
  std::vector<std::size_t> order(hb.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    int ka = known_of[a] < 0 ? 1 << 30 : known_of[a];
    int kb = known_of[b] < 0 ? 1 << 30 : known_of[b];
    return ka < kb;
  });
  for (std::size_t i : order) {
    std::string name;
    if (known_of[i] >= 0) {
      name = L.known[known_of[i]].second;
      used.insert(name);
    } else {
      name = fresh_name(true, used);
    }
    C.monoid.gens.push_back(hb[i]);
    C.monoid.names.push_back(name);
  }
  C.relations = present_monoid_algebra(C.monoid, C.num_ordinary());
  C.orbifold = compute_orbifold(C);
  return C;
}

Ideal chart_ideal(const Chart& C, const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> all = gens;
  all.insert(all.end(), C.relations.begin(), C.relations.end());
  return Ideal(C.nvars(), all);
}

bool in_relations(const Chart& C, const Polynomial& f) {
  if (f.is_zero()) return true;
  if (C.relations.empty()) return false;
  return normal_form(f, C.relations).is_zero();
}

std::vector<Polynomial> canonical(const Chart& C, const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> out;
  Ideal I = chart_ideal(C, gens);
  for (const auto& g : I.basis())
    if (!in_relations(C, g)) out.push_back(g);
  return out;
}

bool chart_contains(const Chart& C, const std::vector<Polynomial>& I, const Polynomial& f) {
  return chart_ideal(C, I).contains(f);
}

bool chart_contains(const Chart& C, const std::vector<Polynomial>& I, const std::vector<Polynomial>& J) {
  Ideal A = chart_ideal(C, I);
  for (const auto& f : J)
    if (!A.contains(f)) return false;
  return true;
}

bool ideals_equal(const Chart& C, const std::vector<Polynomial>& A, const std::vector<Polynomial>& B) {
  return chart_contains(C, A, B) && chart_contains(C, B, A);
}

bool is_unit_ideal(const Chart& C, const std::vector<Polynomial>& I) { return chart_ideal(C, I).is_unit(); }

bool is_zero_ideal(const Chart& C, const std::vector<Polynomial>& I) {
  for (const auto& f : I)
    if (!in_relations(C, f)) return false;
  return true;
}

std::string ideal_to_string(const Chart& C, const std::vector<Polynomial>& I) {
  auto basis = canonical(C, I);
  if (basis.empty()) return "(0)";
  auto names = C.names();
  std::string s = "(";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i) s += ", ";
    s += basis[i].to_string(names);
  }
  return s + ")";
}

std::vector<Polynomial> parse_ideal(const Chart& C, const std::vector<std::string>& gens) {
  std::vector<Polynomial> out;
  auto names = C.names();
  for (const auto& g : gens) out.push_back(parse_polynomial(g, names));
  return out;
}

std::vector<LogDerivation> derivation_basis(const Chart& C) {
  std::vector<LogDerivation> out;
  for (int i = 0; i < C.num_ordinary(); ++i) out.push_back({LogDerivation::Kind::Ordinary, i, {}});
  for (int k = 0; k < C.monoid.rank; ++k) {
    IVec e(C.monoid.rank, 0);
    e[k] = 1;
    out.push_back({LogDerivation::Kind::Monomial, 0, e});
  }
  return out;
}

Polynomial apply_derivation(const Chart& C, const LogDerivation& D, const Polynomial& f) {
  if (D.kind == LogDerivation::Kind::Ordinary) return f.derivative(D.index);
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    long long s = dot(D.dual, C.degree_of(t.exps));
    if (s != 0) terms.push_back({t.coeff * Rational(static_cast<long>(s)), t.exps});
  }
  return Polynomial::from_terms(C.nvars(), std::move(terms));
}

std::vector<Polynomial> derive_ideal(const Chart& C, const std::vector<Polynomial>& I, int order) {
  std::vector<Polynomial> cur = canonical(C, I);
  auto basis = derivation_basis(C);
  for (int k = 0; k < order; ++k) {
    if (cur.size() == 1 && cur[0].is_constant()) break;
    std::vector<Polynomial> next = cur;
    for (const auto& g : cur)
      for (const auto& D : basis) {
        Polynomial dg = apply_derivation(C, D, g);
        if (!dg.is_zero()) next.push_back(dg);
      }
    std::vector<Polynomial> nc = canonical(C, next);
    if (nc == cur) break;
    cur = std::move(nc);
  }
  return cur;
}

std::pair<Chart, std::vector<Polynomial>> restrict_to_hypersurface(const Chart& C, int var,
                                                                   const std::vector<Polynomial>& I) {
  if (var < 0 || !C.is_ordinary(var)) throw InvalidArgument("restriction needs an ordinary variable");
  int n = C.nvars();
  auto map = removal_map(n, var);
  Chart R = C;
  R.ordinary.erase(R.ordinary.begin() + var);
  R.ordinary_q.erase(R.ordinary_q.begin() + var);
  R.relations.clear();
  for (const auto& f : C.relations) R.relations.push_back(f.remap(map, n - 1));
  R.divisors.clear();
  for (const auto& f : C.divisors) R.divisors.push_back(f.set_zero(var).remap(map, n - 1));
  for (auto& ch : R.orbifold) ch.weights.erase(ch.weights.begin() + var);
  std::vector<Polynomial> J;
  for (const auto& f : I) J.push_back(f.set_zero(var).remap(map, n - 1));
  return {R, canonical(R, J)};
}

std::vector<Polynomial> substitution_images(const Chart& C, int var, const Polynomial& h) {
  if (h.degree_in(var) > 0) throw InvalidArgument("substituted polynomial must not involve the coordinate");
  std::vector<Polynomial> images;
  for (int i = 0; i < C.nvars(); ++i) images.push_back(C.variable(i));
  images[var] = C.variable(var) - h;
  return images;
}

std::vector<Polynomial> map_ideal(const std::vector<Polynomial>& I, const std::vector<Polynomial>& images,
                                  int target_nvars) {
  std::vector<Polynomial> out;
  for (const auto& f : I) out.push_back(f.substitute(images, target_nvars));
  return out;
}

std::vector<Polynomial> substitute_coordinate(const Chart& C, int var, const Polynomial& h,
                                              const std::vector<Polynomial>& I) {
  if (!C.is_ordinary(var)) throw InvalidArgument("only ordinary coordinates can be substituted");
  return canonical(C, map_ideal(I, substitution_images(C, var, h), C.nvars()));
}

std::pair<Chart, std::vector<Polynomial>> add_free_variable(const Chart& C, const std::vector<Polynomial>& I,
                                                            const std::string& name) {
  std::set<std::string> used;
  for (const auto& n : C.names()) used.insert(n);
  std::string nm = name;
  if (nm.empty()) nm = fresh_name(false, used);
  else if (used.count(nm)) throw InvalidArgument("variable name '" + nm + "' already in use");
  int n = C.nvars();
  int pos = C.num_ordinary();
  auto map = insertion_map(n, pos);
  Chart Y = C;
  Y.root_dim = C.root_dim + 1;
  for (auto& q : Y.ordinary_q) q.push_back(Rational(0));
  for (auto& q : Y.lattice) q.push_back(Rational(0));
  for (auto& rc : Y.root_characters) rc.functional.push_back(0);
  QVec e(Y.root_dim, Rational(0));
  e.back() = 1;
  Y.ordinary.push_back(nm);
  Y.ordinary_q.push_back(e);
  Y.relations.clear();
  for (const auto& f : C.relations) Y.relations.push_back(f.remap(map, n + 1));
  Y.divisors.clear();
  for (const auto& f : C.divisors) Y.divisors.push_back(f.remap(map, n + 1));
  for (auto& ch : Y.orbifold) ch.weights.insert(ch.weights.begin() + pos, 0);
  std::vector<Polynomial> J;
  for (const auto& f : I) J.push_back(f.remap(map, n + 1));
  J.push_back(Y.variable(pos));
  return {Y, canonical(Y, J)};
}

CoverPullback kummer_cover_pullback(const Chart& C, const std::vector<IVec>& elements, int d,
                                    const std::vector<Polynomial>& I) {
  if (d < 1) throw InvalidArgument("root index must be positive");
  for (const auto& e : elements)
    if (!C.monoid.contains(e)) throw InvalidArgument("cover element is not in the monoid");
  ChartLayout L;
  L.id = C.id;
  L.root_dim = C.root_dim;
  L.ordinary = C.ordinary;
  L.ordinary_q = C.ordinary_q;
  L.root_characters = C.root_characters;
  L.lattice_gens = C.lattice;
  for (const auto& e : elements) L.lattice_gens.push_back(qvec_scale(C.monomial_q(e), Rational(1, d)));
  for (int j = 0; j < C.num_monomial(); ++j) {
    L.cone_gens.push_back(C.monomial_q(C.monoid.gens[j]));
    L.known.push_back({C.monomial_q(C.monoid.gens[j]), C.monoid.names[j]});
  }
  for (const auto& n : C.names()) L.avoid.insert(n);
  CoverPullback out;
  out.chart = assemble_chart(L);
  out.chart.parent = C.parent;
  out.chart.step = C.step;
  out.chart.divisors.clear();
  int n = out.chart.nvars();
  for (int i = 0; i < C.num_ordinary(); ++i) out.images.push_back(out.chart.variable(i));
  for (int j = 0; j < C.num_monomial(); ++j) {
    IVec c;
    out.chart.lattice_coords(C.monomial_q(C.monoid.gens[j]), c);
    out.images.push_back(out.chart.monomial(c));
  }
  for (const auto& f : C.divisors) out.chart.divisors.push_back(f.substitute(out.images, n));
  out.ideal = canonical(out.chart, map_ideal(I, out.images, n));
  return out;
}

}  // namespace logres
