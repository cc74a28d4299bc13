#include "logres/io.hpp"

#include <set>

#include "logres/errors.hpp"
#include "logres/parse.hpp"

namespace logres {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] void invalid(const std::string& path, const std::string& msg) { throw ParseError(path + ": " + msg); }

const json& field(const json& obj, const std::string& path, const std::string& key) {
  if (!obj.contains(key)) invalid(path, "missing field '" + key + "'");
  return obj.at(key);
}

void only_keys(const json& obj, const std::string& path, const std::set<std::string>& keys) {
  for (const auto& [k, v] : obj.items())
    if (!keys.count(k)) invalid(path + "/" + k, "unknown field");
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) invalid(path, "expected a string");
  return j.get<std::string>();
}

long long as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) invalid(path, "expected an integer");
  return j.get<long long>();
}

std::vector<std::string> as_strings(const json& j, const std::string& path) {
  if (!j.is_array()) invalid(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_string(j[i], path + "/" + std::to_string(i)));
  return out;
}

IVec as_ivec(const json& j, const std::string& path) {
  if (!j.is_array()) invalid(path, "expected an array of integers");
  IVec out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], path + "/" + std::to_string(i)));
  return out;
}

ojson strings(const Chart& C, const std::vector<Polynomial>& polys) {
  ojson a = ojson::array();
  auto names = C.names();
  for (const auto& p : polys) a.push_back(p.to_string(names));
  return a;
}

ojson qvec_json(const QVec& q) {
  ojson a = ojson::array();
  for (const auto& x : q) a.push_back(rational_to_string(x));
  return a;
}

ojson invariant_json(const Invariant& inv) {
  ojson a = ojson::array();
  for (const auto& e : inv) a.push_back(e.infinite ? "inf" : rational_to_string(e.value));
  return a;
}

ojson center_json(const Chart& C, const KummerCenter& J) {
  ojson c;
  ojson ord = ojson::array();
  auto names = C.names();
  for (int v : J.ordinary) ord.push_back(names[v]);
  c["ordinary"] = ord;
  ojson mono = ojson::array();
  for (const auto& n : J.monomial.gens) {
    ojson m;
    m["vector"] = n;
    m["root"] = J.root;
    mono.push_back(m);
  }
  c["monomial"] = mono;
  c["root"] = J.root;
  return c;
}

ojson node_json(const TraceNode& n) {
  const Chart& C = n.chart;
  auto names = C.names();
  ojson j;
  j["id"] = n.id;
  j["parent"] = n.parent.empty() ? ojson(nullptr) : ojson(n.parent);
  j["depth"] = n.depth;
  j["status"] = status_name(n.status);
  j["invariant"] = invariant_json(n.invariant);
  j["invariant_text"] = invariant_to_string(n.invariant);
  j["k0"] = n.k0;
  j["mark"] = n.mark;
  j["chart"] = chart_json(C);
  j["transform"] = strings(C, n.transform);
  j["accumulated"] = n.accumulated.to_string(names);
  j["root_images"] = strings(C, n.root_images);
  if (n.parent.empty()) {
    j["incoming"] = nullptr;
  } else {
    ojson in;
    in["generator"] = n.generator_label;
    in["exceptional"] = n.exceptional.to_string(names);
    j["incoming"] = in;
  }
  if (n.has_strict) j["strict"] = strings(C, n.strict);
  if (n.step) {
    const StepRecord& s = *n.step;
    ojson st;
    st["kind"] = s.kind;
    st["action"] = s.action;
    st["level"] = s.level;
    st["center"] = center_json(C, s.center);
    st["center_text"] = s.center_text;
    ojson gens = ojson::array();
    for (const auto& q : s.center_generators) gens.push_back(qvec_json(q));
    st["center_generators"] = gens;
    st["divisor"] = s.kind == "divisorial" ? ojson(s.divisor.to_string(names)) : ojson(nullptr);
    st["substitution"] = s.substitution;
    st["children"] = s.children;
    j["step"] = st;
  } else {
    j["step"] = nullptr;
  }
  return j;
}

ojson tree_json(const BlowupTree& T) {
  ojson j;
  j["format"] = "logres-trace";
  j["version"] = kTraceVersion;
  j["mode"] = T.mode;
  j["mark"] = T.mark;
  j["root_ideal"] = strings(T.root_chart, T.root_ideal);
  j["steps"] = T.steps();
  ojson nodes = ojson::array();
  for (const auto& n : T.nodes) nodes.push_back(node_json(n));
  j["nodes"] = nodes;
  return j;
}

const std::set<std::string> kStatuses = {"active", "leaf-principal", "leaf-reduced", "leaf-empty", "error"};

}  // namespace

ProblemSpec parse_problem(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::string what = e.what();
    auto pos = what.find("] ");
    throw ParseError(line_column(text, e.byte) + ": " + (pos == std::string::npos ? what : what.substr(pos + 2)));
  }
  if (!j.is_object()) invalid("/", "expected an object");
  only_keys(j, "", {"chart", "ideal", "mark", "codim", "config"});
  ProblemSpec s;
  const json& chart = field(j, "", "chart");
  if (!chart.is_object()) invalid("/chart", "expected an object");
  only_keys(chart, "/chart", {"ordinary", "monoid", "orbifold"});
  if (chart.contains("ordinary")) s.ordinary = as_strings(chart["ordinary"], "/chart/ordinary");
  if (chart.contains("monoid")) {
    const json& m = chart["monoid"];
    if (!m.is_object()) invalid("/chart/monoid", "expected an object");
    only_keys(m, "/chart/monoid", {"rank", "generators"});
    s.rank = static_cast<int>(as_int(field(m, "/chart/monoid", "rank"), "/chart/monoid/rank"));
    if (s.rank < 0) invalid("/chart/monoid/rank", "rank must be non-negative");
    const json& gens = field(m, "/chart/monoid", "generators");
    if (!gens.is_array()) invalid("/chart/monoid/generators", "expected an array");
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::string p = "/chart/monoid/generators/" + std::to_string(i);
      if (!gens[i].is_object()) invalid(p, "expected an object");
      only_keys(gens[i], p, {"name", "vector"});
      MonoidGeneratorSpec g;
      g.name = as_string(field(gens[i], p, "name"), p + "/name");
      g.vector = as_ivec(field(gens[i], p, "vector"), p + "/vector");
      if (static_cast<int>(g.vector.size()) != s.rank)
        invalid(p + "/vector", "expected " + std::to_string(s.rank) + " entries");
      s.generators.push_back(g);
    }
  }
  if (chart.contains("orbifold")) {
    const json& o = chart["orbifold"];
    if (!o.is_array()) invalid("/chart/orbifold", "expected an array");
    for (std::size_t i = 0; i < o.size(); ++i) {
      std::string p = "/chart/orbifold/" + std::to_string(i);
      if (!o[i].is_object()) invalid(p, "expected an object");
      only_keys(o[i], p, {"modulus", "weights"});
      OrbifoldCharacter ch;
      ch.modulus = as_int(field(o[i], p, "modulus"), p + "/modulus");
      for (long long w : as_ivec(field(o[i], p, "weights"), p + "/weights")) ch.weights.push_back(w);
      s.orbifold.push_back(ch);
    }
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < s.ordinary.size(); ++i)
    if (!seen.insert(s.ordinary[i]).second)
      invalid("/chart/ordinary/" + std::to_string(i), "duplicate variable name '" + s.ordinary[i] + "'");
  for (std::size_t i = 0; i < s.generators.size(); ++i)
    if (!seen.insert(s.generators[i].name).second)
      invalid("/chart/monoid/generators/" + std::to_string(i) + "/name",
              "duplicate variable name '" + s.generators[i].name + "'");
  for (std::size_t i = 0; i < s.orbifold.size(); ++i)
    if (s.orbifold[i].weights.size() != seen.size())
      invalid("/chart/orbifold/" + std::to_string(i) + "/weights", "expected one weight per variable");

  s.ideal = as_strings(field(j, "", "ideal"), "/ideal");
  if (j.contains("mark")) {
    s.mark = as_int(j["mark"], "/mark");
    if (s.mark < 1) invalid("/mark", "mark must be positive");
  }
  if (j.contains("codim")) {
    s.codim = static_cast<int>(as_int(j["codim"], "/codim"));
    if (*s.codim < 1) invalid("/codim", "codimension must be positive");
  }
  if (j.contains("config")) {
    const json& c = j["config"];
    if (!c.is_object()) invalid("/config", "expected an object");
    only_keys(c, "/config", {"max_depth", "verbosity"});
    if (c.contains("max_depth")) {
      s.max_depth = static_cast<int>(as_int(c["max_depth"], "/config/max_depth"));
      if (s.max_depth < 0) invalid("/config/max_depth", "must be non-negative");
    }
    if (c.contains("verbosity")) {
      s.verbosity = as_string(c["verbosity"], "/config/verbosity");
      if (s.verbosity != "quiet" && s.verbosity != "normal" && s.verbosity != "verbose")
        invalid("/config/verbosity", "expected quiet, normal or verbose");
    }
  }
  // chart and generator checks
  Chart C;
  try {
    C = problem_chart(s);
  } catch (const InvalidArgument& e) {
    std::string msg = e.what();
    invalid("/chart", msg.substr(msg.find(": ") + 2));
  }
  auto names = C.names();
  for (std::size_t i = 0; i < s.ideal.size(); ++i) {
    try {
      parse_polynomial(s.ideal[i], names);
    } catch (const ParseError& e) {
      std::string msg = e.what();
      invalid("/ideal/" + std::to_string(i), msg.substr(msg.find(": ") + 2));
    }
  }
  return s;
}

std::string emit_problem(const ProblemSpec& s) {
  ojson j;
  ojson chart;
  chart["ordinary"] = s.ordinary;
  ojson m;
  m["rank"] = s.rank;
  ojson gens = ojson::array();
  for (const auto& g : s.generators) {
    ojson e;
    e["name"] = g.name;
    e["vector"] = g.vector;
    gens.push_back(e);
  }
  m["generators"] = gens;
  chart["monoid"] = m;
  if (!s.orbifold.empty()) {
    ojson o = ojson::array();
    for (const auto& ch : s.orbifold) {
      ojson e;
      e["modulus"] = ch.modulus;
      e["weights"] = ch.weights;
      o.push_back(e);
    }
    chart["orbifold"] = o;
  }
  j["chart"] = chart;
  j["ideal"] = s.ideal;
  j["mark"] = s.mark;
  if (s.codim) j["codim"] = *s.codim;
  ojson c;
  c["max_depth"] = s.max_depth;
  c["verbosity"] = s.verbosity;
  j["config"] = c;
  return j.dump(2) + "\n";
}

Chart problem_chart(const ProblemSpec& s) {
  std::vector<std::string> names;
  std::vector<IVec> gens;
  for (const auto& g : s.generators) {
    names.push_back(g.name);
    gens.push_back(g.vector);
  }
  return make_chart(s.ordinary, s.rank, names, gens, s.orbifold);
}

std::vector<Polynomial> problem_ideal(const ProblemSpec& s, const Chart& C) { return parse_ideal(C, s.ideal); }

ojson chart_json(const Chart& C) {
  ojson j;
  j["id"] = C.id;
  j["ordinary"] = C.ordinary;
  auto names = C.names();
  ojson mono = ojson::array();
  for (int k = 0; k < C.num_monomial(); ++k) {
    ojson e;
    e["name"] = names[C.num_ordinary() + k];
    e["vector"] = C.monoid.gens[k];
    mono.push_back(e);
  }
  j["monomial"] = mono;
  ojson lat = ojson::array();
  for (const auto& q : C.lattice) lat.push_back(qvec_json(q));
  j["lattice"] = lat;
  ojson roots = ojson::array();
  for (int v = 0; v < C.nvars(); ++v) roots.push_back(qvec_json(C.var_q(v)));
  j["root_vectors"] = roots;
  j["relations"] = strings(C, C.relations);
  ojson orb = ojson::array();
  for (const auto& ch : C.orbifold) {
    ojson e;
    e["modulus"] = ch.modulus;
    e["weights"] = ch.weights;
    orb.push_back(e);
  }
  j["orbifold"] = orb;
  j["divisors"] = strings(C, C.divisors);
  return j;
}

TraceDocument trace_document(const BlowupTree& T) {
  TraceDocument d;
  d.mode = T.mode;
  d.data = tree_json(T);
  return d;
}

TraceDocument resolution_document(const Resolution& R) {
  TraceDocument d;
  d.mode = "resolve";
  d.data = tree_json(R.tree);
  d.data["mode"] = "resolve";
  ojson r;
  r["stage"] = R.stage;
  r["invariant"] = invariant_json(R.invariant);
  ojson charts = ojson::array();
  for (const auto& z : R.charts) {
    ojson e;
    e["node"] = z.node;
    e["strict"] = strings(z.chart, z.strict);
    e["log_smooth"] = z.log_smooth;
    e["restricted"] = z.restricted ? chart_json(*z.restricted) : ojson(nullptr);
    charts.push_back(e);
  }
  r["charts"] = charts;
  d.data["resolution"] = r;
  return d;
}

std::string emit_trace(const TraceDocument& doc) { return doc.data.dump(2) + "\n"; }

TraceDocument parse_trace(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    throw ParseError(line_column(text, e.byte) + ": malformed trace");
  }
  if (!j.is_object() || j.value("format", "") != "logres-trace") invalid("/format", "not a logres trace");
  if (!j.contains("version") || !j["version"].is_number_integer() || j["version"].get<int>() != kTraceVersion)
    invalid("/version", "unsupported trace version");
  if (!j.contains("mode") || !j["mode"].is_string()) invalid("/mode", "expected a string");
  if (!j.contains("nodes") || !j["nodes"].is_array() || j["nodes"].empty()) invalid("/nodes", "expected nodes");
  std::set<std::string> ids;
  for (std::size_t i = 0; i < j["nodes"].size(); ++i) {
    const auto& n = j["nodes"][i];
    std::string p = "/nodes/" + std::to_string(i);
    if (!n.is_object()) invalid(p, "expected an object");
    for (const char* key : {"id", "status", "invariant", "transform", "chart", "step"})
      if (!n.contains(key)) invalid(p, std::string("missing field '") + key + "'");
    if (!n["id"].is_string() || !ids.insert(n["id"].get<std::string>()).second) invalid(p + "/id", "bad or repeated id");
    if (!n["status"].is_string() || !kStatuses.count(n["status"].get<std::string>()))
      invalid(p + "/status", "unknown status");
    if (!n["invariant"].is_array()) invalid(p + "/invariant", "expected an array");
    for (const auto& e : n["invariant"])
      if (!e.is_string()) invalid(p + "/invariant", "entries must be strings");
    if (!n["transform"].is_array()) invalid(p + "/transform", "expected an array");
  }
  for (std::size_t i = 0; i < j["nodes"].size(); ++i) {
    const auto& st = j["nodes"][i]["step"];
    if (st.is_null()) continue;
    std::string p = "/nodes/" + std::to_string(i) + "/step";
    if (!st.is_object() || !st.contains("children") || !st["children"].is_array()) invalid(p, "expected children");
    for (const auto& c : st["children"])
      if (!c.is_string() || !ids.count(c.get<std::string>())) invalid(p + "/children", "unknown child id");
  }
  TraceDocument d;
  d.version = j["version"].get<int>();
  d.mode = j["mode"].get<std::string>();
  d.data = std::move(j);
  return d;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string emit_dot(const BlowupTree& T) {
  std::string out = "digraph logres {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (const auto& n : T.nodes) {
    out += "  \"" + n.id + "\" [label=\"" + dot_escape(n.id) + "\\n" + dot_escape(invariant_to_string(n.invariant)) +
           "\\n" + status_name(n.status) + "\"];\n";
  }
  for (const auto& n : T.nodes) {
    if (!n.step) continue;
    for (const auto& c : n.step->children) {
      const TraceNode* ch = T.find(c);
      std::string label = n.step->center_text;
      if (ch && !ch->generator_label.empty()) label += " : " + ch->generator_label;
      out += "  \"" + n.id + "\" -> \"" + c + "\" [label=\"" + dot_escape(label) + "\"];\n";
    }
  }
  return out + "}\n";
}

std::string error_record(const std::string& kind, const std::string& message, const std::string& chart) {
  ojson j;
  j["error"] = kind;
  j["message"] = message;
  if (!chart.empty()) j["chart"] = chart;
  return j.dump();
}

}  // namespace logres
