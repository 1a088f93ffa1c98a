// Command-line front end. Exit codes: 0 computed, 1 input error,
// 2 precondition failure or out-of-scope verdict, 3 invariant violation.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "raag/error.hpp"
#include "raag/report.hpp"

using namespace raag;
using nlohmann::json;

namespace {

// "@name" selects a built-in graph; anything else is a JSON file.
DefiningGraph load(const std::string& arg) {
  if (arg == "@pentagon") return pentagon();
  if (arg == "@petersen") return petersen();
  if (arg == "@dodecahedron") return dodecahedron();
  if (arg == "@dodeca-double") return dodecahedron_double();
  if (!arg.empty() && arg[0] == '@') throw InputError("unknown built-in graph '" + arg + "'");
  return load_graph(arg);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, sep);)
    if (!item.empty()) out.push_back(item);
  return out;
}

EmbeddedCycle parse_cycle(const DefiningGraph& g, const std::string& text) {
  std::vector<Vertex> vs;
  for (const auto& name : split(text, ',')) vs.push_back(g.index(name));
  return EmbeddedCycle(g, vs);
}

struct Output {
  bool json = false;
  bool dot = false;
};

void emit(const Output& o, const json& j, const std::string& text, const std::string& dot = "") {
  if (o.dot && !dot.empty()) std::cout << dot;
  else if (o.json) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

std::string cycle_text(const DefiningGraph& g, const EmbeddedCycle& c) {
  std::string s;
  for (Vertex v : c.vertices()) s += (s.empty() ? "" : " ") + g.name(v);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorics of atomic right-angled Artin groups"};
  app.require_subcommand(1);
  Output out;
  int exit_code = 0;
  auto flags = [&](CLI::App* c) {
    c->add_flag("--json", out.json, "JSON output");
    c->add_flag("--dot", out.dot, "Graphviz output where meaningful");
  };
  std::string graph, graph2, cycle, word, vertex;
  int radius = 0, max_len = 0, k = 2, samples = 8;

  auto* atomic = app.add_subcommand("check-atomic", "Atomicity test with failure witnesses");
  atomic->add_option("graph", graph, "graph JSON or @builtin")->required();
  flags(atomic);
  atomic->callback([&] {
    auto g = load(graph);
    auto r = check_atomic(g);
    std::string text = r.is_atomic ? "atomic\n" : "not atomic\n";
    for (const auto& f : r.failures) text += "  " + to_string(f.kind) + (f.vertex >= 0 ? " at " + g.name(f.vertex) : "") + "\n";
    emit(out, to_json(g, r), text, graph_to_dot(g));
  });

  auto* tight = app.add_subcommand("tight-cycles", "Embedded cycles without 1- or 2-shortcuts");
  tight->add_option("graph", graph)->required();
  tight->add_option("--max-len", max_len, "longest cycle (default |V|)");
  flags(tight);
  tight->callback([&] {
    auto g = load(graph);
    auto cs = tight_cycles(g, max_len > 0 ? max_len : static_cast<int>(g.size()));
    json j = json::array();
    std::string text;
    for (const auto& c : cs) {
      j.push_back(to_json(g, c));
      text += cycle_text(g, c) + "\n";
    }
    emit(out, {{"count", cs.size()}, {"cycles", j}}, text);
  });

  auto* wh = app.add_subcommand("whitehead", "Whitehead graphs of vertices");
  wh->add_option("graph", graph)->required();
  wh->add_option("--vertex", vertex, "single vertex (default all)");
  flags(wh);
  wh->callback([&] {
    auto g = load(graph);
    auto cs = tight_cycles(g, static_cast<int>(g.size()));
    json j = json::object();
    std::string text, dot = "graph whitehead {\n";
    for (Vertex v = 0; v < static_cast<Vertex>(g.size()); ++v) {
      if (!vertex.empty() && g.name(v) != vertex) continue;
      auto w = whitehead_graph(g, v, cs);
      j[g.name(v)] = to_json(g, w);
      text += g.name(v) + ": " + std::to_string(w.edges.size()) + " edges" + (w.connected() ? "" : ", disconnected") + "\n";
      for (auto [a, b] : w.edges)
        dot += "  \"" + g.name(v) + ":" + g.name(a) + "\" -- \"" + g.name(v) + ":" + g.name(b) + "\";\n";
    }
    if (!vertex.empty()) g.index(vertex);
    emit(out, j, text, dot + "}\n");
  });

  bool stats = false;
  auto* ball = app.add_subcommand("flat-ball", "Finite ball of the flat space");
  ball->add_option("graph", graph)->required();
  ball->add_option("--radius", radius, "radius (>= 2)")->required();
  ball->add_flag("--stats", stats, "structure statistics (default)");
  flags(ball);
  ball->callback([&] {
    auto b = build_ball(load(graph), radius);
    auto c = check_ball(b);
    json j = to_json(c);
    j["radius"] = radius;
    std::string text = std::to_string(c.vertices) + " vertices (" + std::to_string(c.cone) + " cone, " +
                       std::to_string(c.singular) + " singular, " + std::to_string(c.flat) + " flat), " +
                       std::to_string(c.squares) + " squares; link checks " + (c.ok() ? "pass" : "FAIL") + "\n";
    emit(out, j, text, ball_to_dot(b));
    if (!c.ok()) exit_code = 3;
  });

  auto lift_of = [&](const DefiningGraph& g, const FlatBall& b) { return lift_cycle(b.group(), parse_cycle(g, cycle)); };
  auto* diag = app.add_subcommand("diagram", "Dual disk diagram of a lifted cycle");
  diag->add_option("graph", graph)->required();
  diag->add_option("--cycle", cycle, "comma-separated vertices")->required();
  diag->add_option("--radius", radius, "ball radius (default 4)");
  flags(diag);
  diag->callback([&] {
    auto g = load(graph);
    auto b = build_ball(g, radius > 0 ? radius : 4);
    auto d = build_diagram(b, lift_of(g, b));
    auto rep = shell_report(d);
    std::string text = std::to_string(d.arcs.size()) + " arcs, " + std::to_string(d.crossings.size()) + " crossings, core of " +
                       std::to_string(d.core.size()) + " region(s), " + to_string(rep.shell_case) + ", score " +
                       std::to_string(rep.total_score) + "\n";
    emit(out, to_json(g, d), text, diagram_to_dot(g, d));
  });

  auto* taut = app.add_subcommand("taut", "Tautness of a lifted cycle");
  taut->add_option("graph", graph)->required();
  taut->add_option("--cycle", cycle, "comma-separated vertices")->required();
  taut->add_option("--radius", radius, "ball radius (default 4)");
  flags(taut);
  taut->callback([&] {
    auto g = load(graph);
    auto b = build_ball(g, radius > 0 ? radius : 4);
    auto c = lift_of(g, b);
    json j = {{"tight", is_tight(g, parse_cycle(g, cycle))}};
    std::string text;
    for (int i : {1, 2}) {
      auto cut = find_icut(b, c, i);
      j["cut" + std::to_string(i)] = cut ? to_json(g, *cut) : json(nullptr);
      if (cut) text += std::to_string(i) + "-cut between flats " + std::to_string(cut->v) + " and " + std::to_string(cut->w) + "\n";
    }
    bool t = j["cut1"].is_null() && j["cut2"].is_null();
    j["taut"] = t;
    text += t ? "taut\n" : "not taut\n";
    emit(out, j, text);
  });

  auto* qi = app.add_subcommand("classify-qi", "Quasi-isometry classification of two atomic RAAGs");
  qi->add_option("graph1", graph)->required();
  qi->add_option("graph2", graph2)->required();
  flags(qi);
  qi->callback([&] {
    auto g1 = load(graph), g2 = load(graph2);
    auto c = classify_qi(g1, g2);
    emit(out, to_json(g1, g2, c), to_string(c.verdict) + " (" + c.reason + ")\n");
    if (c.verdict == QiVerdict::OutOfScope) exit_code = 2;
  });

  auto* og = app.add_subcommand("out-group", "Order of Out(G) for atomic graphs");
  og->add_option("graph", graph)->required();
  flags(og);
  og->callback([&] {
    auto r = out_group(load(graph));
    emit(out, to_json(r), std::to_string(r.out_order) + "  (" + r.extension + ")\n");
  });

  auto* con = app.add_subcommand("construct", "Build a graph: double, glue-k or dodeca-double");
  std::string kind;
  con->add_option("kind", kind, "double | glue-k | dodeca-double")->required();
  con->add_option("graph", graph, "input graph (double, glue-k)");
  con->add_option("--vertex", vertex, "star centre (double, glue-k)");
  con->add_option("--k", k, "number of copies (glue-k)");
  flags(con);
  con->callback([&] {
    DefiningGraph g;
    if (kind == "dodeca-double") {
      g = dodecahedron_double();
    } else if (kind == "double" || kind == "glue-k") {
      if (graph.empty() || vertex.empty()) throw InputError(kind + " needs a graph and --vertex");
      auto base = load(graph);
      g = kind == "double" ? double_along_closed_star(base, base.index(vertex))
                           : glue_k_copies_along_star(base, base.index(vertex), k);
    } else {
      throw InputError("unknown construction '" + kind + "'");
    }
    out.json = true;
    emit(out, json::parse(graph_to_json(g)), "", graph_to_dot(g));
  });

  auto* nf = app.add_subcommand("normal-form", "Normal form of a word");
  nf->add_option("graph", graph)->required();
  nf->add_option("--word", word, "tokens like \"a b^-1 c\"")->required();
  flags(nf);
  nf->callback([&] {
    auto g = load(graph);
    Raag G(g);
    auto w = G.normal_form(parse_word(g, word));
    auto s = format_word(g, w);
    emit(out, {{"normal_form", s}, {"length", w.size()}}, (s.empty() ? "1" : s) + "\n");
  });

  auto* rep = app.add_subcommand("report", "Full analysis bundle");
  rep->add_option("graph", graph)->required();
  rep->add_option("--radius", radius, "flat-ball radius (default 4)");
  rep->add_option("--samples", samples, "tight cycles to lift and test");
  flags(rep);
  rep->callback([&] {
    auto g = load(graph);
    ReportOptions opt;
    if (radius > 0) opt.ball_radius = radius;
    opt.taut_samples = samples;
    auto r = run_report(g, opt);
    emit(out, r, report_summary(r));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return 3;
  }
  return exit_code;
}
