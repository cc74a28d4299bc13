// Command-line front end: one subcommand per engine operation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "logres/errors.hpp"
#include "logres/io.hpp"

using namespace logres;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInput = 2, kAlgorithm = 3, kFinalState = 4 };

struct Options {
  std::string input;
  std::string trace;
  std::string dot;
  int max_depth = -1;
  int codim = 0;
  int k0 = 0;
  bool quiet = false;
  bool verbose = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

std::string message_of(const LogresError& e) {
  std::string msg = e.what();
  auto pos = msg.find(": ");
  return pos == std::string::npos ? msg : msg.substr(pos + 2);
}

// Chart id mentioned as "chart <id>" in an engine message, if any.
std::string chart_of(const std::string& msg) {
  auto pos = msg.rfind("chart ");
  if (pos == std::string::npos) return "";
  std::string id;
  for (std::size_t i = pos + 6; i < msg.size() && (std::isdigit(static_cast<unsigned char>(msg[i])) || msg[i] == '.');
       ++i)
    id += msg[i];
  while (!id.empty() && id.back() == '.') id.pop_back();
  return id;
}

void print_tree(const BlowupTree& T, bool verbose) {
  for (const auto& n : T.nodes) {
    std::cout << std::string(2 * n.depth, ' ') << n.id << "  " << invariant_to_string(n.invariant) << "  "
              << status_name(n.status);
    if (n.step) std::cout << "  " << n.step->action << " " << n.step->center_text;
    std::cout << "\n";
    if (verbose) {
      std::string pad(2 * n.depth + 4, ' ');
      auto names = n.chart.names();
      std::cout << pad << "variables:";
      for (const auto& s : names) std::cout << " " << s;
      std::cout << "\n" << pad << "transform: " << ideal_to_string(n.chart, n.transform) << "\n";
      if (!n.chart.relations.empty()) std::cout << pad << "relations: " << ideal_to_string(n.chart, n.chart.relations) << "\n";
      if (n.step)
        for (const auto& s : n.step->substitution) std::cout << pad << "substitute " << s << "\n";
    }
  }
}

struct Loaded {
  ProblemSpec spec;
  Chart chart;
  std::vector<Polynomial> ideal;
  EngineConfig config;
};

Loaded load(const Options& o) {
  Loaded l;
  l.spec = parse_problem(read_file(o.input));
  l.chart = problem_chart(l.spec);
  l.ideal = problem_ideal(l.spec, l.chart);
  l.config.max_depth = o.max_depth >= 0 ? o.max_depth : l.spec.max_depth;
  return l;
}

bool quiet(const Options& o, const Loaded& l) { return o.quiet || (!o.verbose && l.spec.verbosity == "quiet"); }
bool verbose(const Options& o, const Loaded& l) { return o.verbose || (!o.quiet && l.spec.verbosity == "verbose"); }

int finish_tree(const Options& o, const Loaded& l, const BlowupTree& T, const TraceDocument& doc) {
  if (!o.trace.empty()) write_file(o.trace, emit_trace(doc));
  if (!o.dot.empty()) write_file(o.dot, emit_dot(T));
  auto failures = check_final_state(T);
  if (!quiet(o, l)) {
    print_tree(T, verbose(o, l));
    std::cout << "steps: " << T.steps() << ", leaves: " << T.leaves().size() << "\n";
  }
  if (!failures.empty()) {
    for (const auto& f : failures) std::cerr << error_record("FinalState", f, f.substr(0, f.find(':'))) << "\n";
    return kFinalState;
  }
  return kOk;
}

int run_principalize(const Options& o) {
  Loaded l = load(o);
  BlowupTree T = principalize(l.chart, l.ideal, l.config);
  return finish_tree(o, l, T, trace_document(T));
}

int run_order_reduce(const Options& o) {
  Loaded l = load(o);
  BlowupTree T = order_reduce(l.chart, l.ideal, l.spec.mark, l.config);
  return finish_tree(o, l, T, trace_document(T));
}

int run_clean(const Options& o) {
  Loaded l = load(o);
  const Chart& C = l.chart;
  MonoidIdeal M = monomial_saturation(C, l.ideal);
  std::cout << "M(I) = " << center_to_string(C, KummerCenter{{}, M, 1}) << "\n";
  if (M.gens.size() == 1 && is_zero(M.gens[0])) {
    std::cout << "ideal is clean\n";
    return kOk;
  }
  KummerCenter J{{}, M, static_cast<int>(l.spec.mark)};
  BlowupResult R = blow_up(C, J);
  std::cout << "center: " << center_to_string(C, R.center) << "\n";
  for (const auto& B : R.charts) {
    auto T = controlled_transform(B, l.ideal, l.spec.mark);
    auto names = B.chart.names();
    std::cout << "chart " << B.chart.id << " [" << B.generator_label << "]: I O = (" << B.exceptional.to_string(names)
              << ")";
    if (l.spec.mark != 1) std::cout << "^" << l.spec.mark;
    std::cout << " * " << ideal_to_string(B.chart, T) << "\n";
  }
  return kOk;
}

int run_invariant(const Options& o) {
  Loaded l = load(o);
  std::cout << invariant_to_string(invariant(l.chart, l.ideal, l.spec.mark, o.k0)) << "\n";
  return kOk;
}

int run_resolve(const Options& o) {
  Loaded l = load(o);
  int codim = o.codim > 0 ? o.codim : l.spec.codim.value_or(1);
  Resolution R = resolve_embedded(l.chart, l.ideal, codim, l.config);
  int code = finish_tree(o, l, R.tree, resolution_document(R));
  if (!quiet(o, l)) {
    std::cout << "stage: " << R.stage << " " << invariant_to_string(R.invariant) << "\n";
    for (const auto& z : R.charts)
      std::cout << "Z-chart " << z.node << ": " << ideal_to_string(z.chart, z.strict)
                << (z.log_smooth ? " log-smooth" : " singular") << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Logarithmic principalization on toroidal charts"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub, bool tree) {
    sub->add_option("input", o.input, "problem file (JSON)")->required()->check(CLI::ExistingFile);
    if (tree) {
      sub->add_option("--trace", o.trace, "write the trace document");
      sub->add_option("--dot", o.dot, "write the tree in DOT format");
      sub->add_option("--max-depth", o.max_depth, "blowup budget per path")->check(CLI::NonNegativeNumber);
    }
    auto* q = sub->add_flag("-q,--quiet", o.quiet, "no summary output");
    sub->add_flag("-v,--verbose", o.verbose, "print chart data")->excludes(q);
  };
  auto* p = app.add_subcommand("principalize", "principalize the ideal");
  common(p, true);
  auto* r = app.add_subcommand("order-reduce", "reduce the order of the marked ideal below its mark");
  common(r, true);
  auto* c = app.add_subcommand("clean", "monomial saturation and the cleaning blowup");
  common(c, false);
  auto* i = app.add_subcommand("invariant", "invariant string of the marked ideal");
  common(i, false);
  i->add_option("--k0", o.k0, "auxiliary level for initial cleaning")->check(CLI::NonNegativeNumber);
  auto* z = app.add_subcommand("resolve", "embedded resolution of the subvariety cut out by the ideal");
  common(z, true);
  z->add_option("--codim", o.codim, "codimension of the subvariety")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (p->parsed()) return run_principalize(o);
    if (r->parsed()) return run_order_reduce(o);
    if (c->parsed()) return run_clean(o);
    if (i->parsed()) return run_invariant(o);
    if (z->parsed()) return run_resolve(o);
  } catch (const ParseError& e) {
    std::cerr << error_record(e.kind(), message_of(e)) << "\n";
    return kInput;
  } catch (const LogresError& e) {
    std::string msg = message_of(e);
    std::cerr << error_record(e.kind(), msg, chart_of(msg)) << "\n";
    return e.kind() == "InvalidArgument" ? kInput : kAlgorithm;
  }
  return kUsage;
}
