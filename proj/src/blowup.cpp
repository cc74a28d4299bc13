#include "logres/blowup.hpp"

#include <algorithm>

#include "logres/errors.hpp"

namespace logres {

namespace {

std::string monomial_label(const Chart& C, const IVec& n, int d) {
  Polynomial m = C.monomial(n);
  std::string s = m.to_string(C.names());
  if (d == 1) return s;
  int var = -1;
  int nonzero = 0;
  for (std::size_t k = 0; k < m.leading().exps.size(); ++k)
    if (m.leading().exps[k]) var = static_cast<int>(k), ++nonzero;
  if (nonzero == 1) {
    Rational e(static_cast<long>(m.leading().exps[var]), static_cast<unsigned long>(d));
    e.canonicalize();
    std::string base = C.names()[var];
    if (e == 1) return base;
    return base + "^" + (e.get_den() == 1 ? e.get_num().get_str() : "(" + rational_to_string(e) + ")");
  }
  if (nonzero > 1) s = "(" + s + ")";
  return s + "^(1/" + std::to_string(d) + ")";
}

std::vector<IVec> sorted_minimal(const Chart& C, const MonoidIdeal& N) {
  std::vector<IVec> g = minimalize(C.monoid, N.gens).gens;
  std::sort(g.begin(), g.end(), gradlex_less);
  return g;
}

bool is_zero_q(const QVec& q) {
  for (const auto& x : q)
    if (x != 0) return false;
  return true;
}

}  // namespace

std::vector<QVec> center_generators(const Chart& C, const KummerCenter& J) {
  std::vector<QVec> out;
  for (int v : J.ordinary) out.push_back(C.ordinary_q[v]);
  for (const auto& n : sorted_minimal(C, J.monomial))
    out.push_back(qvec_scale(C.monomial_q(n), Rational(1, J.root)));
  return out;
}

std::string center_to_string(const Chart& C, const KummerCenter& J) {
  std::vector<std::string> parts;
  auto names = C.names();
  for (int v : J.ordinary) parts.push_back(names[v]);
  for (const auto& n : sorted_minimal(C, J.monomial)) parts.push_back(monomial_label(C, n, J.root));
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
  return s + ")";
}

BlowupResult blow_up(const Chart& C, const KummerCenter& J) {
  if (J.root < 1) throw InvalidArgument("root index must be positive");
  for (int v : J.ordinary)
    if (v < 0 || !C.is_ordinary(v)) throw InvalidArgument("center coordinate is not an ordinary variable");
  for (const auto& n : J.monomial.gens)
    if (!C.monoid.contains(n)) throw InvalidArgument("center monomial is not in the chart monoid");
  std::vector<QVec> gens = center_generators(C, J);
  if (gens.empty()) throw EmptyCenter("center has no generators");
  int nord_center = static_cast<int>(J.ordinary.size());
  std::vector<std::string> labels;
  {
    auto names = C.names();
    for (int v : J.ordinary) labels.push_back(names[v]);
    for (const auto& n : sorted_minimal(C, J.monomial)) labels.push_back(monomial_label(C, n, J.root));
  }

  BlowupResult out;
  out.center = J;
  out.parent = C.id;
  std::set<std::string> sibling_names;
  for (const auto& n : C.names()) sibling_names.insert(n);

  std::vector<int> indices;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (is_zero_q(gens[i])) indices = {static_cast<int>(i)};
  if (indices.empty())
    for (std::size_t i = 0; i < gens.size(); ++i) indices.push_back(static_cast<int>(i));

  for (int i : indices) {
    const QVec& gq = gens[i];
    bool g_ordinary = i < nord_center;
    ChartLayout L;
    L.id = C.id + "." + std::to_string(i + 1);
    L.root_dim = C.root_dim;
    L.root_characters = C.root_characters;
    L.lattice_gens = C.lattice;
    L.lattice_gens.push_back(gq);
    for (int j = 0; j < C.num_monomial(); ++j) L.cone_gens.push_back(C.var_q(C.num_ordinary() + j));
    if (g_ordinary) L.cone_gens.push_back(gq);
    for (std::size_t j = nord_center; j < gens.size(); ++j)
      if (static_cast<int>(j) != i) L.cone_gens.push_back(qvec_sub(gens[j], gq));

    std::set<std::string> used = sibling_names;
    // ordinary variables: ratios get fresh names, the chart generator leaves
    std::vector<int> ordinary_source;  // parent ordinary index for each child ordinary
    for (int v = 0; v < C.num_ordinary(); ++v) {
      auto it = std::find(J.ordinary.begin(), J.ordinary.end(), v);
      if (it == J.ordinary.end()) {
        L.ordinary.push_back(C.ordinary[v]);
        L.ordinary_q.push_back(C.ordinary_q[v]);
      } else if (it - J.ordinary.begin() == i) {
        continue;
      } else {
        L.ordinary.push_back("");
        L.ordinary_q.push_back(qvec_sub(C.ordinary_q[v], gq));
      }
      ordinary_source.push_back(v);
    }
    for (std::size_t k = 0; k < L.ordinary.size(); ++k)
      if (L.ordinary[k].empty()) L.ordinary[k] = fresh_name(false, used);
    for (int v = 0; v < C.nvars(); ++v) L.known.push_back({C.var_q(v), C.names()[v]});
    L.avoid = used;
    Chart child;
    try {
      child = assemble_chart(L);
    } catch (const NotSharp&) {
      continue;
    }
    child.parent = C.id;

    BlowupChart B;
    B.generator = i;
    B.generator_label = labels[i];
    IVec gc;
    if (!child.lattice_coords(gq, gc)) throw InvalidArgument("center generator is not a chart lattice element");
    B.exceptional = child.monomial(gc);
    int n = child.nvars();
    std::vector<Polynomial> images(C.nvars());
    for (std::size_t k = 0; k < ordinary_source.size(); ++k) {
      int v = ordinary_source[k];
      bool in_center = std::find(J.ordinary.begin(), J.ordinary.end(), v) != J.ordinary.end();
      Polynomial y = child.variable(static_cast<int>(k));
      images[v] = in_center ? y * B.exceptional : y;
    }
    if (g_ordinary) images[J.ordinary[i]] = B.exceptional;
    for (int j = 0; j < C.num_monomial(); ++j) {
      IVec c;
      if (!child.lattice_coords(C.var_q(C.num_ordinary() + j), c))
        throw InvalidArgument("parent monomial is not a chart lattice element");
      images[C.num_ordinary() + j] = child.monomial(c);
    }
    for (const auto& f : C.divisors) {
      Ideal s = saturate_by_element(chart_ideal(child, {f.substitute(images, n)}), B.exceptional);
      for (const auto& g : canonical(child, s.basis())) child.divisors.push_back(g);
    }
    B.images = std::move(images);
    B.chart = std::move(child);
    for (const auto& nm : B.chart.names()) sibling_names.insert(nm);
    out.charts.push_back(std::move(B));
  }
  return out;
}

std::vector<Polynomial> pullback(const BlowupChart& B, const std::vector<Polynomial>& I) {
  return canonical(B.chart, map_ideal(I, B.images, B.chart.nvars()));
}

std::vector<Polynomial> controlled_transform(const BlowupChart& B, const std::vector<Polynomial>& I, long long a) {
  const Chart& C = B.chart;
  std::vector<Polynomial> pulled = map_ideal(I, B.images, C.nvars());
  Polynomial ma = B.exceptional.pow(static_cast<int>(a));
  Ideal E = chart_ideal(C, {ma});
  for (const auto& f : pulled)
    if (!E.contains(f))
      throw NotDivisible("pullback " + f.to_string(C.names()) + " is not divisible by " + ma.to_string(C.names()) +
                         " on chart " + C.id);
  if (pulled.empty()) return {};
  Ideal colon = ideal_colon(chart_ideal(C, pulled), ma);
  return canonical(C, colon.basis());
}

std::vector<Polynomial> strict_transform(const BlowupChart& B, const std::vector<Polynomial>& I) {
  const Chart& C = B.chart;
  std::vector<Polynomial> pulled = map_ideal(I, B.images, C.nvars());
  if (is_zero_ideal(C, pulled)) return {};
  Ideal s = saturate_by_element(chart_ideal(C, pulled), B.exceptional);
  return canonical(C, s.basis());
}

KummerCenter pushforward_center(const std::vector<int>& chain, const KummerCenter& J) {
  KummerCenter out = J;
  out.ordinary = chain;
  for (int v : J.ordinary)
    if (std::find(chain.begin(), chain.end(), v) == chain.end()) out.ordinary.push_back(v);
  return out;
}

}  // namespace logres
