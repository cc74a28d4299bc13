#include "logres/engine.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "logres/errors.hpp"

namespace logres {

int compare_invariants(const Invariant& a, const Invariant& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == b[i]) continue;
    if (a[i].infinite) return 1;
    if (b[i].infinite) return -1;
    return a[i].value < b[i].value ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

std::string invariant_to_string(const Invariant& inv) {
  std::string s = "(";
  for (std::size_t i = 0; i < inv.size(); ++i) {
    if (i) s += ", ";
    s += inv[i].infinite ? "inf" : rational_to_string(inv[i].value);
  }
  return s + ")";
}

std::string status_name(NodeStatus s) {
  switch (s) {
    case NodeStatus::Active: return "active";
    case NodeStatus::LeafPrincipal: return "leaf-principal";
    case NodeStatus::LeafReduced: return "leaf-reduced";
    case NodeStatus::LeafEmpty: return "leaf-empty";
    case NodeStatus::Error: return "error";
  }
  return "error";
}

namespace {

InvariantEntry inf_entry() { return {true, Rational(0)}; }
InvariantEntry entry(long long num, long long den) {
  Rational r(static_cast<long>(num), static_cast<unsigned long>(den));
  r.canonicalize();
  return {false, r};
}

std::vector<Polynomial> identity_images(const Chart& C) {
  std::vector<Polynomial> out;
  for (int v = 0; v < C.nvars(); ++v) out.push_back(C.variable(v));
  return out;
}

std::vector<Polynomial> compose(const std::vector<Polynomial>& first, const std::vector<Polynomial>& then, int n) {
  return map_ideal(first, then, n);
}

// (N)^{1/d} with the root index reduced as far as the lattice allows.
KummerCenter normalized_center(const std::vector<int>& chain, const MonoidIdeal& N, long long d) {
  long long g = d;
  for (const auto& n : N.gens)
    for (long long c : n) g = std::gcd(g, c < 0 ? -c : c);
  KummerCenter J;
  J.ordinary = chain;
  J.root = static_cast<int>(d / g);
  for (const auto& n : N.gens) {
    IVec m;
    for (long long c : n) m.push_back(c / g);
    J.monomial.gens.push_back(m);
  }
  return J;
}

struct Context {
  std::vector<Polynomial> level0;
  long long mark0 = 1;
};

// A single generator of J up to the chart relations, if J is principal.
std::optional<Polynomial> principal_generator(const Chart& C, const std::vector<Polynomial>& J) {
  for (const auto& g : J)
    if (chart_contains(C, {g}, J)) return g;
  return std::nullopt;
}

bool divisorial_allowed(const Chart& C, const std::vector<int>& chain, const Context& ctx) {
  if (chain.empty()) return true;
  if (ctx.mark0 != 1) return false;
  for (int v : chain)
    if (!chart_contains(C, ctx.level0, C.variable(v))) return false;
  return true;
}

Plan plan_level(const Chart& C, const std::vector<Polynomial>& Jin, long long a, const std::vector<int>& chain, int L,
                int k0, Context ctx, const std::vector<Polynomial>& subst) {
  Plan p;
  p.level = L;
  p.chain = chain;
  p.substitution = subst;
  std::vector<Polynomial> J = canonical(C, Jin);
  if (J.empty()) {
    if (L == 0) {
      p.leaf_status = NodeStatus::LeafEmpty;
      return p;
    }
    p.kind = Plan::Kind::Kummer;
    p.action = "base-case";
    p.center = {chain, {}, 1};
    p.entries = {inf_entry()};
    return p;
  }
  MonoidIdeal M = monomial_saturation(C, J);
  bool m_unit = M.gens.size() == 1 && is_zero(M.gens[0]);
  if (!m_unit && L >= k0) {
    p.kind = Plan::Kind::Kummer;
    p.action = "initial-cleaning";
    p.center = normalized_center(chain, M, a);
    p.entries = {inf_entry()};
    return p;
  }
  if (M.gens.size() != 1) {
    if (k0 == kNoK0) {
      p.unbalanced = true;
      return p;
    }
    throw NotBalanced("level " + std::to_string(L) + " ideal " + ideal_to_string(C, J) + " on chart " + C.id);
  }
  std::vector<Polynomial> Jc = m_unit ? J : canonical(C, ideal_colon(chart_ideal(C, J), C.monomial(M.gens[0])).basis());
  std::optional<int> lo = max_logord(C, Jc);
  if (!lo) throw NotMonomialFixpoint("clean part without finite order on chart " + C.id);
  long long b = *lo;
  if (b < a) {
    if (!m_unit) {
      p.kind = Plan::Kind::Kummer;
      p.action = "final-cleaning";
      p.center = normalized_center(chain, M, a);
      p.entries = {entry(b, a)};
      return p;
    }
    if (L == 0) {
      p.leaf_status = is_unit_ideal(C, J) ? NodeStatus::LeafPrincipal : NodeStatus::LeafReduced;
      return p;
    }
    throw InvalidArgument("coefficient ideal of reduced order at level " + std::to_string(L) + " on chart " + C.id);
  }
  MarkedIdeal H = homogenize(C, {Jc, b});
  MaximalContact mc;
  try {
    mc = select_maximal_contact(C, H);
  } catch (const NoMaximalContact& e) {
    std::optional<Polynomial> g;
    if (b == 1 && a == 1 && divisorial_allowed(C, chain, ctx)) g = principal_generator(C, Jc);
    if (g) {
      p.kind = Plan::Kind::Divisorial;
      p.action = "divisorial";
      p.center = {chain, {}, 1};
      p.divisor = *g;
      p.entries = {entry(1, 1), inf_entry()};
      return p;
    }
    std::string msg = e.what();
    throw NoMaximalContact(msg.substr(msg.find(": ") + 2) + " (level " + std::to_string(L) + ", chart " + C.id +
                           ")");
  }
  int n = C.nvars();
  std::vector<Polynomial> Hs = canonical(C, map_ideal(H.ideal, mc.images, n));
  ctx.level0 = map_ideal(ctx.level0, mc.images, n);
  MarkedIdeal Cc = restricted_coefficient_ideal(C, {Hs, b}, mc.var);
  std::vector<int> next_chain = chain;
  next_chain.push_back(mc.var);
  Plan sub = plan_level(C, Cc.ideal, Cc.mark, next_chain, L + 1, k0, ctx, compose(subst, mc.images, n));
  sub.entries.insert(sub.entries.begin(), entry(b, a));
  return sub;
}

struct Runner {
  const EngineConfig& config;
  BlowupTree& tree;

  int child_k0(const TraceNode& child, const Plan& parent) {
    Plan bal;
    try {
      bal = plan_chart(child.chart, child.transform, child.mark, kNoK0);
    } catch (const LogresError&) {
      return parent.action == "initial-cleaning" ? parent.level + 1 : parent.level;
    }
    const Invariant& ec = bal.entries;
    const Invariant& ep = parent.entries;
    std::size_t n = std::min(ec.size(), ep.size());
    std::optional<std::size_t> j;
    for (std::size_t i = 0; i < n && !j; ++i)
      if (ec[i] != ep[i]) j = i;
    if (!j && ec.size() != ep.size()) j = n;
    if (bal.unbalanced && (!j || static_cast<int>(*j) >= bal.level)) return bal.level;
    if (j) return static_cast<int>(*j) + 1;
    return parent.action == "initial-cleaning" ? parent.level + 1 : parent.level;
  }

  void expand(TraceNode node) {
    Plan plan = plan_chart(node.chart, node.transform, node.mark, node.k0);
    node.invariant = plan.entries;
    if (plan.kind == Plan::Kind::Leaf) {
      node.status = plan.leaf_status;
      tree.nodes.push_back(std::move(node));
      return;
    }
    if (node.depth >= config.max_depth)
      throw DepthExceeded("more than " + std::to_string(config.max_depth) + " blowups below chart " + node.chart.id);
    const Chart& C = node.chart;
    int n = C.nvars();
    const auto& phi = plan.substitution;
    Chart Cs = C;
    Cs.divisors = canonical(C, map_ideal(C.divisors, phi, n));
    std::vector<Polynomial> Is = canonical(C, map_ideal(node.transform, phi, n));
    std::vector<Polynomial> roots = map_ideal(node.root_images, phi, n);
    std::vector<Polynomial> strict;
    if (node.has_strict) strict = canonical(C, map_ideal(node.strict, phi, n));

    StepRecord step;
    step.action = plan.action;
    step.level = plan.level;
    step.center = plan.center;
    step.images = phi;
    auto names = C.names();
    for (int v = 0; v < n; ++v)
      if (phi[v] != C.variable(v)) step.substitution.push_back(names[v] + " -> " + phi[v].to_string(names));

    std::vector<TraceNode> children;
    auto make_child = [&](const Chart& chart, const std::vector<Polynomial>& images, const Polynomial& mE,
                          const std::vector<Polynomial>& transform, const std::string& label) {
      TraceNode ch;
      ch.id = chart.id;
      ch.parent = node.id;
      ch.depth = node.depth + 1;
      ch.chart = chart;
      ch.mark = node.mark;
      ch.transform = transform;
      int m = chart.nvars();
      ch.accumulated = node.accumulated.substitute(images, m) * mE.pow(static_cast<int>(node.mark));
      ch.root_images = map_ideal(roots, images, m);
      ch.exceptional = mE;
      ch.generator_label = label;
      if (node.has_strict) {
        ch.has_strict = true;
        std::vector<Polynomial> pulled = map_ideal(strict, images, m);
        if (is_zero_ideal(chart, pulled)) ch.strict = {};
        else ch.strict = canonical(chart, saturate_by_element(chart_ideal(chart, pulled), mE).basis());
      }
      children.push_back(std::move(ch));
    };

    if (plan.kind == Plan::Kind::Kummer) {
      step.kind = "kummer";
      step.center_text = center_to_string(Cs, plan.center);
      step.center_generators = center_generators(Cs, plan.center);
      BlowupResult R = blow_up(Cs, plan.center);
      for (const auto& B : R.charts)
        make_child(B.chart, B.images, B.exceptional, controlled_transform(B, Is, node.mark), B.generator_label);
    } else {
      step.kind = "divisorial";
      const Polynomial& g = plan.divisor;
      step.divisor = g;
      std::string gs = g.to_string(names);
      std::string text = "(";
      for (int v : plan.chain) text += names[v] + ", ";
      step.center_text = text + gs + ")";
      for (int v : plan.chain) step.center_generators.push_back(C.var_q(v));
      Chart D = Cs;
      D.id = C.id + "." + std::to_string(plan.chain.size() + 1);
      D.parent = C.id;
      D.divisors.push_back(g);
      D.divisors = canonical(D, D.divisors);
      std::vector<Polynomial> images = identity_images(C);
      for (int v : plan.chain) images[v] = C.variable(v) * g;
      std::vector<Polynomial> pulled = map_ideal(Is, images, n);
      Ideal E = chart_ideal(D, {g.pow(static_cast<int>(node.mark))});
      for (const auto& f : pulled)
        if (!E.contains(f)) throw NotDivisible("divisorial transform on chart " + C.id);
      std::vector<Polynomial> T = canonical(D, ideal_colon(chart_ideal(D, pulled), g.pow(static_cast<int>(node.mark))).basis());
      make_child(D, images, g, T, gs);
    }
    for (auto& ch : children) {
      ch.k0 = child_k0(ch, plan);
      step.children.push_back(ch.id);
    }
    node.step = step;
    tree.nodes.push_back(std::move(node));
    for (auto& ch : children) expand(std::move(ch));
  }
};

BlowupTree run(const Chart& C, const std::vector<Polynomial>& I, long long a, const std::string& mode,
               const EngineConfig& config) {
  if (a < 1) throw InvalidArgument("mark must be positive");
  BlowupTree tree;
  tree.mode = mode;
  tree.root_chart = C;
  tree.root_ideal = canonical(C, I);
  tree.mark = a;
  TraceNode root;
  root.id = C.id;
  root.chart = C;
  root.mark = a;
  root.transform = tree.root_ideal;
  root.accumulated = C.constant(1);
  root.root_images = identity_images(C);
  root.k0 = 0;
  if (config.track_strict) {
    root.has_strict = true;
    root.strict = canonical(C, config.strict_root);
  }
  Runner r{config, tree};
  r.expand(std::move(root));
  return tree;
}

}  // namespace

Plan plan_chart(const Chart& C, const std::vector<Polynomial>& I, long long a, int k0) {
  Context ctx;
  ctx.level0 = canonical(C, I);
  ctx.mark0 = a;
  return plan_level(C, I, a, {}, 0, k0, ctx, identity_images(C));
}

const TraceNode* BlowupTree::find(const std::string& id) const {
  for (const auto& n : nodes)
    if (n.id == id) return &n;
  return nullptr;
}

std::vector<const TraceNode*> BlowupTree::leaves() const {
  std::vector<const TraceNode*> out;
  for (const auto& n : nodes)
    if (!n.step) out.push_back(&n);
  return out;
}

int BlowupTree::steps() const {
  int s = 0;
  for (const auto& n : nodes) s += n.step.has_value();
  return s;
}

BlowupTree order_reduce(const Chart& C, const std::vector<Polynomial>& I, long long a, const EngineConfig& config) {
  return run(C, I, a, "order-reduce", config);
}

BlowupTree principalize(const Chart& C, const std::vector<Polynomial>& I, const EngineConfig& config) {
  return run(C, I, 1, "principalize", config);
}

Invariant invariant(const Chart& C, const std::vector<Polynomial>& I, long long a, int k0) {
  return plan_chart(C, I, a, k0).entries;
}

std::vector<std::string> check_final_state(const BlowupTree& T) {
  std::vector<std::string> errors;
  for (const auto& n : T.nodes) {
    if (n.step) continue;
    if (n.status == NodeStatus::LeafEmpty) continue;
    const Chart& C = n.chart;
    if (n.status == NodeStatus::LeafPrincipal && !is_unit_ideal(C, n.transform))
      errors.push_back(n.id + ": principal leaf with a non-unit transform");
    auto lhs = map_ideal(T.root_ideal, n.root_images, C.nvars());
    auto rhs = chart_product(C, {n.accumulated}, n.transform);
    if (!ideals_equal(C, lhs, rhs)) errors.push_back(n.id + ": pullback differs from factor times transform");
    if (C.divisors.empty()) {
      bool monomial = n.accumulated.is_monomial();
      if (monomial)
        for (int v = 0; v < C.num_ordinary(); ++v)
          if (n.accumulated.leading().exps[v]) monomial = false;
      if (!monomial) errors.push_back(n.id + ": accumulated factor is not a monomial");
    }
  }
  return errors;
}

Resolution resolve_embedded(const Chart& C, const std::vector<Polynomial>& IZ, int codim, const EngineConfig& config) {
  if (codim < 1) throw InvalidArgument("codimension must be positive");
  EngineConfig cfg = config;
  cfg.track_strict = true;
  cfg.strict_root = IZ;
  Resolution out;
  out.tree = principalize(C, IZ, cfg);
  const BlowupTree& T = out.tree;
  for (int i = 0; i < codim; ++i) out.invariant.push_back(entry(1, 1));
  out.invariant.push_back(inf_entry());

  // Does the center of the node's step contain the strict transform of Z?
  auto center_contains_z = [](const TraceNode& n, const std::vector<Polynomial>& Zs) {
    const Chart& K = n.chart;
    const StepRecord& st = *n.step;
    for (int v : st.center.ordinary)
      if (!chart_contains(K, Zs, K.variable(v))) return false;
    for (const auto& m : st.center.monomial.gens)
      if (!chart_contains(K, Zs, K.monomial(m))) return false;
    if (st.kind == "divisorial" && !chart_contains(K, Zs, st.divisor)) return false;
    return true;
  };

  std::vector<const TraceNode*> found;
  std::vector<const TraceNode*> stack = {&T.nodes.front()};
  while (!stack.empty()) {
    const TraceNode* n = stack.back();
    stack.pop_back();
    if (n->strict.empty() || is_unit_ideal(n->chart, n->strict)) continue;
    if (!n->step) throw NotSynchronized("Z is never blown up over chart " + n->id);
    auto Zs = canonical(n->chart, map_ideal(n->strict, n->step->images, n->chart.nvars()));
    if (center_contains_z(*n, Zs)) {
      if (compare_invariants(n->invariant, out.invariant) != 0)
        throw NotSynchronized("Z is blown up with invariant " + invariant_to_string(n->invariant) + " on chart " +
                              n->id + " instead of " + invariant_to_string(out.invariant));
      found.push_back(n);
      continue;
    }
    for (auto it = n->step->children.rbegin(); it != n->step->children.rend(); ++it) stack.push_back(T.find(*it));
  }
  if (found.empty()) throw NotSynchronized("Z is never blown up");

  std::vector<Invariant> above;
  for (const auto& n : T.nodes)
    if (n.step && compare_invariants(n.invariant, out.invariant) > 0 &&
        std::none_of(above.begin(), above.end(), [&](const Invariant& v) { return v == n.invariant; }))
      above.push_back(n.invariant);
  out.stage = static_cast<int>(above.size());

  for (const TraceNode* n : found) {
    ZChart z;
    z.node = n->id;
    z.chart = n->chart;
    z.strict = n->strict;
    const StepRecord& st = *n->step;
    int nv = n->chart.nvars();
    auto straight = canonical(n->chart, map_ideal(n->strict, st.images, nv));
    std::vector<Polynomial> coords;
    for (int v : st.center.ordinary) coords.push_back(n->chart.variable(v));
    if (st.kind == "kummer" && st.center.monomial.gens.empty() && static_cast<int>(coords.size()) == codim &&
        ideals_equal(n->chart, straight, coords)) {
      Chart R = n->chart;
      std::vector<int> vars = st.center.ordinary;
      std::sort(vars.rbegin(), vars.rend());
      for (int v : vars) R = restrict_to_hypersurface(R, v, {}).first;
      z.restricted = R;
      z.log_smooth = true;
    } else if (codim == 1) {
      auto g = principal_generator(n->chart, straight);
      z.log_smooth = g && max_logord(n->chart, {*g}) == 1;
    }
    out.charts.push_back(std::move(z));
  }
  return out;
}

}  // namespace logres
