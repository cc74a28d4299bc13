#include "logres/monoid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "logres/errors.hpp"

namespace logres {

namespace {

IVec primitive(IVec v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, std::llabs(x));
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

void subsets(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  for (;;) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Enumerate all integer points in the box [lo, hi].
void box_points(const IVec& lo, const IVec& hi, const std::function<void(const IVec&)>& fn) {
  std::size_t n = lo.size();
  if (n == 0) {
    fn(IVec{});
    return;
  }
  IVec p = lo;
  for (;;) {
    fn(p);
    std::size_t i = 0;
    while (i < n) {
      if (p[i] < hi[i]) {
        ++p[i];
        break;
      }
      p[i] = lo[i];
      ++i;
    }
    if (i == n) return;
  }
}

}  // namespace

bool gradlex_less(const IVec& a, const IVec& b) {
  long long sa = std::accumulate(a.begin(), a.end(), 0LL);
  long long sb = std::accumulate(b.begin(), b.end(), 0LL);
  if (sa != sb) return sa < sb;
  return a > b;
}

Cone Cone::from_generators(int dim, const std::vector<IVec>& gens) {
  Cone c;
  c.dim = dim;
  std::set<IVec> uniq;
  for (const auto& g : gens)
    if (!is_zero(g)) uniq.insert(primitive(g));
  std::vector<IVec> g(uniq.begin(), uniq.end());
  std::vector<QVec> q;
  for (const auto& v : g) q.push_back(to_q(v));
  if (dim > 0 && rank_q(q) != dim) throw InvalidArgument("cone is not full-dimensional");
  std::set<IVec> facets;
  if (dim == 1) {
    bool pos = false, neg = false;
    for (const auto& v : g) (v[0] > 0 ? pos : neg) = true;
    if (pos && !neg) facets.insert(IVec{1});
    if (neg && !pos) facets.insert(IVec{-1});
  } else if (dim > 1) {
    subsets(static_cast<int>(g.size()), dim - 1, [&](const std::vector<int>& idx) {
      std::vector<IVec> vs;
      for (int i : idx) vs.push_back(g[i]);
      IVec n;
      if (!hyperplane_normal(vs, dim, n)) return;
      bool pos = false, neg = false;
      for (const auto& v : g) {
        long long s = dot(n, v);
        if (s > 0) pos = true;
        if (s < 0) neg = true;
      }
      if (pos && neg) return;
      if (neg) n = ivec_scale(n, -1);
      facets.insert(n);
    });
  }
  c.facets.assign(facets.begin(), facets.end());
  // extreme rays: generators lying on dim-1 independent facets
  for (const auto& v : g) {
    std::vector<QVec> tight;
    for (const auto& f : c.facets)
      if (dot(f, v) == 0) tight.push_back(to_q(f));
    if (dim == 0 || rank_q(tight) == dim - 1) c.rays.push_back(v);
  }
  return c;
}

bool Cone::contains(const IVec& v) const {
  for (const auto& f : facets)
    if (dot(f, v) < 0) return false;
  return true;
}

bool Cone::contains(const QVec& v) const {
  for (const auto& f : facets) {
    Rational s = 0;
    for (std::size_t i = 0; i < f.size(); ++i) s += Rational(static_cast<long>(f[i])) * v[i];
    if (s < 0) return false;
  }
  return true;
}

bool Cone::is_pointed() const {
  if (dim == 0) return true;
  std::vector<QVec> q;
  for (const auto& f : facets) q.push_back(to_q(f));
  return rank_q(q) == dim;
}

std::vector<IVec> hilbert_basis(int dim, const std::vector<IVec>& gens) {
  if (dim == 0) return {};
  Cone c = Cone::from_generators(dim, gens);
  if (!c.is_pointed()) throw NotSharp("cone spanned by the generators contains a line");
  IVec lo(dim, 0), hi(dim, 0);
  for (const auto& r : c.rays)
    for (int i = 0; i < dim; ++i) {
      if (r[i] < 0) lo[i] += r[i];
      if (r[i] > 0) hi[i] += r[i];
    }
  IVec height(dim, 0);
  for (const auto& f : c.facets) height = ivec_add(height, f);
  std::vector<IVec> cand;
  box_points(lo, hi, [&](const IVec& p) {
    if (!is_zero(p) && c.contains(p)) cand.push_back(p);
  });
  std::stable_sort(cand.begin(), cand.end(), [&](const IVec& a, const IVec& b) {
    long long ha = dot(height, a), hb = dot(height, b);
    if (ha != hb) return ha < hb;
    return gradlex_less(a, b);
  });
  std::vector<IVec> basis;
  for (const auto& p : cand) {
    bool reducible = false;
    for (const auto& a : basis) {
      IVec b = ivec_sub(p, a);
      if (!is_zero(b) && c.contains(b)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(p);
  }
  std::sort(basis.begin(), basis.end(), gradlex_less);
  return basis;
}

Cone AffineMonoid::cone() const { return Cone::from_generators(rank, gens); }

bool AffineMonoid::contains(const IVec& v) const {
  if (rank == 0) return true;
  return cone().contains(v);
}

bool AffineMonoid::decompose(const IVec& v, std::vector<int>& exps) const {
  exps.assign(gens.size(), 0);
  if (is_zero(v)) return true;
  if (rank == 0) return false;
  Cone c = cone();
  if (!c.contains(v)) return false;
  std::set<IVec> failed;
  std::function<bool(const IVec&)> go = [&](const IVec& w) -> bool {
    if (is_zero(w)) return true;
    if (failed.count(w)) return false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      IVec rest = ivec_sub(w, gens[i]);
      if (!c.contains(rest)) continue;
      exps[i]++;
      if (go(rest)) return true;
      exps[i]--;
    }
    failed.insert(w);
    return false;
  };
  return go(v);
}

bool monoid_ideal_contains(const AffineMonoid& M, const MonoidIdeal& J, const IVec& v) {
  for (const auto& g : J.gens)
    if (M.contains(ivec_sub(v, g))) return true;
  return false;
}

MonoidIdeal minimalize(const AffineMonoid& M, std::vector<IVec> elems) {
  std::sort(elems.begin(), elems.end(), gradlex_less);
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  MonoidIdeal out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < elems.size() && !redundant; ++j)
      if (i != j && M.contains(ivec_sub(elems[i], elems[j]))) redundant = true;
    if (!redundant) out.gens.push_back(elems[i]);
  }
  return out;
}

MonoidIdeal monoid_saturate_ideal(const AffineMonoid& M, const MonoidIdeal& J) {
  if (J.gens.empty()) return J;
  int r = M.rank;
  if (r == 0) return MonoidIdeal{{IVec{}}};
  // Newton polyhedron conv(J) + cone(M), homogenized to a cone in dimension r+1.
  std::vector<IVec> hgens;
  for (const auto& g : J.gens) {
    IVec h = g;
    h.push_back(1);
    hgens.push_back(h);
  }
  for (const auto& m : M.gens) {
    IVec h = m;
    h.push_back(0);
    hgens.push_back(h);
  }
  Cone newton = Cone::from_generators(r + 1, hgens);
  // Minimal generators lie in conv(J) + sum [0,1) * generators of M.
  IVec lo = J.gens[0], hi = J.gens[0];
  for (const auto& g : J.gens)
    for (int i = 0; i < r; ++i) {
      lo[i] = std::min(lo[i], g[i]);
      hi[i] = std::max(hi[i], g[i]);
    }
  for (const auto& m : M.gens)
    for (int i = 0; i < r; ++i) {
      if (m[i] < 0) lo[i] += m[i];
      if (m[i] > 0) hi[i] += m[i];
    }
  std::vector<IVec> pts;
  box_points(lo, hi, [&](const IVec& p) {
    IVec h = p;
    h.push_back(1);
    if (newton.contains(h) && M.contains(p)) pts.push_back(p);
  });
  return minimalize(M, pts);
}

MonoidIdeal monoid_ideal_power(const AffineMonoid& M, const MonoidIdeal& J, int n) {
  std::vector<IVec> cur = {IVec(M.rank, 0)};
  for (int k = 0; k < n; ++k) {
    std::vector<IVec> next;
    for (const auto& a : cur)
      for (const auto& b : J.gens) next.push_back(ivec_add(a, b));
    cur = minimalize(M, next).gens;
  }
  return minimalize(M, cur);
}

long long LatticeCharacter::value(const IVec& v) const {
  long long s = dot(functional, v) % modulus;
  return s < 0 ? s + modulus : s;
}

IVec KummerRefinement::map(const IVec& old) const {
  IVec r(monoid.rank, 0);
  for (std::size_t i = 0; i < old.size(); ++i) r = ivec_add(r, ivec_scale(embedding[i], old[i]));
  return r;
}

KummerRefinement kummer_refine(const AffineMonoid& M, const std::vector<IVec>& elements, int d) {
  if (d < 1) throw InvalidArgument("root index must be positive");
  for (const auto& e : elements)
    if (!M.contains(e)) throw InvalidArgument("refined element is not in the monoid");
  int r = M.rank;
  // Work in d-scaled coordinates: d*L' = d*Z^r + sum Z*e.
  std::vector<IVec> gens;
  for (int i = 0; i < r; ++i) {
    IVec e(r, 0);
    e[i] = d;
    gens.push_back(e);
  }
  for (const auto& e : elements) gens.push_back(e);
  std::vector<IVec> B = lattice_basis(gens);
  std::vector<QVec> Bq;
  for (const auto& b : B) Bq.push_back(to_q(b));
  auto coords = [&](const IVec& scaled) {
    QVec c;
    if (!solve_in_span(Bq, to_q(scaled), c)) throw InvalidArgument("vector outside the refined lattice");
    return to_i(c);
  };
  KummerRefinement out;
  out.monoid.rank = r;
  out.lattice = B;
  out.scale = d;
  for (int i = 0; i < r; ++i) {
    IVec e(r, 0);
    e[i] = d;
    out.embedding.push_back(coords(e));
  }
  std::vector<IVec> images;
  for (const auto& g : M.gens) images.push_back(out.map(g));
  std::vector<IVec> hb = hilbert_basis(r, images);
  std::set<std::string> used(M.names.begin(), M.names.end());
  for (std::size_t i = 0; i < images.size(); ++i)
    if (std::find(hb.begin(), hb.end(), images[i]) != hb.end()) {
      out.monoid.gens.push_back(images[i]);
      out.monoid.names.push_back(M.names[i]);
    }
  int fresh = 0;
  for (const auto& h : hb) {
    if (std::find(out.monoid.gens.begin(), out.monoid.gens.end(), h) != out.monoid.gens.end()) continue;
    std::string name;
    do {
      name = fresh == 0 ? "w" : "w" + std::to_string(fresh);
      ++fresh;
    } while (used.count(name));
    used.insert(name);
    out.monoid.gens.push_back(h);
    out.monoid.names.push_back(name);
  }
  SmithData sd = smith_characters(out.embedding);
  for (std::size_t i = 0; i < sd.diag.size(); ++i)
    if (sd.diag[i] > 1) out.characters.push_back({sd.diag[i], sd.U[i]});
  return out;
}

std::vector<Polynomial> present_monoid_algebra(const AffineMonoid& M, int offset) {
  int t = static_cast<int>(M.gens.size());
  int r = M.rank;
  int nv = offset + t;
  if (t == 0) return {};
  std::vector<IVec> rows;
  for (int j = 0; j < t; ++j) {
    IVec row(r + t, 0);
    for (int i = 0; i < r; ++i) row[i] = M.gens[j][i];
    row[r + j] = 1;
    rows.push_back(row);
  }
  std::vector<IVec> H = lattice_basis(rows);
  std::vector<Polynomial> binomials;
  for (const auto& h : H) {
    bool kernel = true;
    for (int i = 0; i < r; ++i)
      if (h[i] != 0) kernel = false;
    if (!kernel) continue;
    Exponents plus(nv, 0), minus(nv, 0);
    for (int j = 0; j < t; ++j) {
      long long k = h[r + j];
      if (k > 0) plus[offset + j] = static_cast<int>(k);
      if (k < 0) minus[offset + j] = static_cast<int>(-k);
    }
    binomials.push_back(Polynomial::monomial(plus) - Polynomial::monomial(minus));
  }
  if (binomials.empty()) return {};
  Exponents all(nv, 0);
  for (int j = 0; j < t; ++j) all[offset + j] = 1;
  Ideal toric = saturate_by_element(Ideal(nv, binomials), Polynomial::monomial(all));
  return toric.basis();
}

}  // namespace logres
