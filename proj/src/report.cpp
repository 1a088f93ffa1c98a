#include "raag/report.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "raag/error.hpp"

namespace raag {

using nlohmann::json;

namespace {

const char* kind_name(VertexKind k) {
  return k == VertexKind::Cone ? "cone" : k == VertexKind::Singular ? "singular" : "flat";
}

json names(const DefiningGraph& g, const std::vector<Vertex>& vs) {
  json a = json::array();
  for (Vertex v : vs) a.push_back(g.name(v));
  return a;
}

// Runs a section, turning exceptions into {"error": ...}.
json section(const std::function<json()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {{"error", e.what()}};
  }
}

}  // namespace

json to_json(const DefiningGraph& g, const EmbeddedCycle& c) { return names(g, c.vertices()); }

json to_json(const DefiningGraph& g, const WhiteheadGraph& w) {
  json edges = json::array();
  for (auto [a, b] : w.edges) edges.push_back({g.name(a), g.name(b)});
  return {{"link", names(g, w.link)}, {"edges", edges}, {"connected", w.connected()}};
}

json to_json(const BallCheck& c) {
  return {{"vertices", c.vertices},
          {"edges", c.edges},
          {"squares", c.squares},
          {"cone", c.cone},
          {"singular", c.singular},
          {"flat", c.flat},
          {"interior_checked", c.interior_checked},
          {"bad_edges", c.bad_edges},
          {"bad_squares", c.bad_squares},
          {"bad_cone_links", c.bad_cone_links},
          {"bad_singular_links", c.bad_singular_links},
          {"bad_flat_links", c.bad_flat_links},
          {"short_link_cycles", c.short_link_cycles},
          {"ok", c.ok()}};
}

json to_json(const DefiningGraph& g, const CosetKey& k) { return format_key(g, k); }

json to_json(const ShellReport& r) {
  json recs = json::array();
  for (const auto& x : r.records)
    recs.push_back({{"region", x.region},
                    {"sides", x.sides},
                    {"corners", x.corners},
                    {"internal_sides", x.internal_sides},
                    {"score", x.score},
                    {"shell", to_string(x.shell)}});
  return {{"records", recs}, {"total_score", r.total_score}, {"case", to_string(r.shell_case)}, {"ladder", r.ladder}};
}

json to_json(const DefiningGraph& g, const DiskDiagram& d) {
  json boundary = json::array();
  for (std::size_t k = 0; k < 2 * d.boundary.length(); ++k) boundary.push_back(format_key(g, d.boundary.vertex(k)));
  json arcs = json::array();
  for (const auto& a : d.arcs)
    arcs.push_back({{"ends", {a.a, a.b}},
                    {"hyperplane", {{"type", g.name(a.hyperplane.type)}, {"rep", format_word(g, a.hyperplane.rep)}}}});
  json crossings = json::array();
  for (auto [x, y] : d.crossings) crossings.push_back({x, y});
  json regions = json::array();
  for (const auto& r : d.regions) {
    json x = {{"vertex", format_key(g, r.vertex)},
              {"kind", kind_name(r.vertex.kind)},
              {"internal", r.internal},
              {"sides", r.side_arcs},
              {"across", r.across}};
    if (!r.internal) x["boundary_vertex"] = r.boundary_vertex;
    regions.push_back(x);
  }
  json j = {{"boundary", boundary},
            {"arcs", arcs},
            {"crossings", crossings},
            {"regions", regions},
            {"core", d.core},
            {"valid_fillings", d.valid_fillings},
            {"minimal_unique", d.minimal_unique}};
  if (!d.core.empty()) j["shells"] = to_json(shell_report(d));
  return j;
}

json to_json(const DefiningGraph& g, const CutWitness& w) {
  json path = json::array();
  for (const auto& k : w.path) path.push_back(format_key(g, k));
  return {{"i", w.i}, {"v", w.v}, {"w", w.w}, {"path", path}};
}

std::string diagram_to_dot(const DefiningGraph& g, const DiskDiagram& d) {
  const int N = static_cast<int>(2 * d.boundary.length());
  const double step = 2 * std::numbers::pi / N, scale = 4.0;
  std::ostringstream out;
  out << "graph diagram {\n  node [fontsize=9];\n";
  for (int k = 0; k < N; ++k) {
    const auto& key = d.boundary.vertex(k);
    out << "  v" << k << " [label=\"" << format_key(g, key) << "\", shape=" << (key.kind == VertexKind::Flat ? "box" : "ellipse")
        << ", pos=\"" << scale * std::cos(step * k) << "," << scale * std::sin(step * k) << "!\"];\n";
    out << "  p" << k << " [label=\"\", shape=point, pos=\"" << scale * std::cos(step * (k + 0.5)) << ","
        << scale * std::sin(step * (k + 0.5)) << "!\"];\n";
  }
  for (int k = 0; k < N; ++k)
    out << "  v" << k << " -- p" << k << " [color=gray];\n  p" << k << " -- v" << (k + 1) % N << " [color=gray];\n";
  for (const auto& a : d.arcs)
    out << "  p" << a.a << " -- p" << a.b << " [label=\"" << g.name(a.hyperplane.type) << "\"];\n";
  out << "  core [shape=plaintext, pos=\"0,0!\", label=\"core:";
  for (int r : d.core) out << " " << format_key(g, d.regions[r].vertex);
  out << "\"];\n}\n";
  return out.str();
}

std::string ball_to_dot(const FlatBall& b) {
  std::ostringstream out;
  out << "graph ball {\n  node [fontsize=8];\n";
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto k = b.kind(static_cast<int>(i));
    out << "  n" << i << " [label=\"" << format_key(b.graph(), b.key(static_cast<int>(i))) << "\", shape="
        << (k == VertexKind::Cone ? "circle" : k == VertexKind::Singular ? "diamond" : "box") << "];\n";
  }
  for (auto [x, y] : b.edges()) out << "  n" << x << " -- n" << y << ";\n";
  out << "}\n";
  return out.str();
}

json run_report(const DefiningGraph& g, const ReportOptions& opt) {
  json r;
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({g.name(u), g.name(v)});
  r["graph"] = {{"vertices", g.names()}, {"edges", edges}};
  r["options"] = {{"ball_radius", opt.ball_radius}, {"taut_samples", opt.taut_samples}};
  AtomicityReport atom;
  r["atomicity"] = section([&] {
    atom = check_atomic(g);
    return to_json(g, atom);
  });
  const json skipped = {{"skipped", "graph is not atomic"}};

  std::vector<EmbeddedCycle> tight;
  r["tight_cycles"] = section([&] {
    tight = tight_cycles(g, static_cast<int>(g.size()));
    json list = json::array();
    for (const auto& c : tight) list.push_back(to_json(g, c));
    return json{{"count", tight.size()}, {"cycles", list}};
  });

  r["whitehead"] = atom.is_atomic ? section([&] {
    json w = json::object();
    for (Vertex v = 0; v < static_cast<Vertex>(g.size()); ++v) w[g.name(v)] = to_json(g, whitehead_graph(g, v, tight));
    return w;
  })
                                  : skipped;

  std::optional<FlatBall> ball;
  r["flat_ball"] = section([&] {
    ball.emplace(build_ball(g, opt.ball_radius));
    json j = to_json(check_ball(*ball));
    j["radius"] = opt.ball_radius;
    return j;
  });

  r["taut"] = atom.is_atomic && ball ? section([&] {
    json rows = json::array();
    bool pass = true;
    int n = std::min<int>(opt.taut_samples, static_cast<int>(tight.size()));
    for (int i = 0; i < n; ++i) {
      auto lift = lift_cycle(ball->group(), tight[i]);
      bool taut = is_taut(*ball, lift);
      auto d = build_diagram(*ball, lift);
      bool single = d.core.size() == 1;
      pass = pass && taut && single;
      rows.push_back({{"cycle", to_json(g, tight[i])},
                      {"taut", taut},
                      {"core_size", d.core.size()},
                      {"shell_case", to_string(shell_report(d).shell_case)}});
    }
    return json{{"sampled", n}, {"pass", pass}, {"cycles", rows}};
  })
                                       : skipped;

  r["out_group"] = atom.is_atomic ? section([&] { return to_json(out_group(g)); }) : skipped;
  return r;
}

std::string report_summary(const json& r) {
  std::ostringstream out;
  auto status = [](const json& s) -> std::string {
    if (s.contains("error")) return "error: " + s["error"].get<std::string>();
    if (s.contains("skipped")) return "skipped (" + s["skipped"].get<std::string>() + ")";
    return "";
  };
  out << "graph: " << r["graph"]["vertices"].size() << " vertices, " << r["graph"]["edges"].size() << " edges\n";
  const auto& a = r["atomicity"];
  out << "atomic: " << (a.contains("is_atomic") ? (a["is_atomic"].get<bool>() ? "yes" : "no") : status(a)) << "\n";
  const auto& t = r["tight_cycles"];
  out << "tight cycles: " << (t.contains("count") ? std::to_string(t["count"].get<int>()) : status(t)) << "\n";
  const auto& w = r["whitehead"];
  if (w.contains("skipped") || w.contains("error")) {
    out << "whitehead: " << status(w) << "\n";
  } else {
    int connected = 0;
    for (const auto& [name, x] : w.items()) connected += x["connected"].get<bool>();
    out << "whitehead: " << connected << "/" << w.size() << " connected\n";
  }
  const auto& b = r["flat_ball"];
  out << "flat ball: "
      << (b.contains("ok") ? std::to_string(b["vertices"].get<int>()) + " vertices, checks " + (b["ok"].get<bool>() ? "pass" : "FAIL")
                           : status(b))
      << "\n";
  const auto& tt = r["taut"];
  out << "taut lifts: "
      << (tt.contains("pass") ? std::to_string(tt["sampled"].get<int>()) + " sampled, " + (tt["pass"].get<bool>() ? "pass" : "FAIL")
                              : status(tt))
      << "\n";
  const auto& o = r["out_group"];
  out << "|Out(G)|: " << (o.contains("out_order") ? std::to_string(o["out_order"].get<std::uint64_t>()) : status(o)) << "\n";
  return out.str();
}

}  // namespace raag
