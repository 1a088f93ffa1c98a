#include "raag/rigidity.hpp"

#include <algorithm>
#include <set>

#include "raag/error.hpp"

namespace raag {

std::string to_string(QiVerdict v) {
  switch (v) {
    case QiVerdict::QuasiIsometric: return "quasi_isometric_with_isomorphism";
    case QiVerdict::NotQuasiIsometric: return "not_quasi_isometric";
    case QiVerdict::OutOfScope: return "out_of_scope";
  }
  return "out_of_scope";
}

QiClassification classify_qi(const DefiningGraph& g1, const DefiningGraph& g2) {
  QiClassification c;
  c.first = check_atomic(g1);
  c.second = check_atomic(g2);
  if (!c.first.is_atomic || !c.second.is_atomic) {
    c.verdict = QiVerdict::OutOfScope;
    c.reason = !c.first.is_atomic && !c.second.is_atomic ? "neither graph is atomic"
               : !c.first.is_atomic                      ? "first graph is not atomic"
                                                         : "second graph is not atomic";
    return c;
  }
  c.witness = find_isomorphism(g1, g2);
  c.verdict = c.witness ? QiVerdict::QuasiIsometric : QiVerdict::NotQuasiIsometric;
  c.reason = c.witness ? "atomic and isomorphic" : "atomic and not isomorphic";
  return c;
}

OutGroupReport out_group(const DefiningGraph& g) {
  if (!check_atomic(g).is_atomic) throw PreconditionError("out-group computation requires an atomic graph");
  OutGroupReport r;
  r.vertices = static_cast<int>(g.size());
  if (r.vertices >= 64) throw PreconditionError("2^|V| does not fit in 64 bits");
  r.h_order = std::uint64_t{1} << r.vertices;
  r.aut_order = automorphism_group_order(g);
  if (r.aut_order > UINT64_MAX / r.h_order) throw PreconditionError("|Out| does not fit in 64 bits");
  r.out_order = r.h_order * r.aut_order;
  r.extension = "1 -> Z_2^" + std::to_string(r.vertices) + " -> Out(G) -> Aut(Gamma) -> 1, |Aut(Gamma)| = " +
                std::to_string(r.aut_order);
  return r;
}

EdgeMap induced_edge_map(const DefiningGraph& g1, const DefiningGraph& g2, const GraphIsomorphism& phi) {
  if (!is_isomorphism(g1, g2, phi)) throw PreconditionError("not an isomorphism");
  EdgeMap f;
  for (auto [u, v] : g1.edges()) f.push_back(*g2.edge_index(phi.vertex_map[u], phi.vertex_map[v]));
  return f;
}

namespace {

void check_lemma_hypotheses(const DefiningGraph& g, const char* which) {
  for (Vertex v = 0; v < static_cast<Vertex>(g.size()); ++v)
    if (g.degree(v) < 2)
      throw PreconditionError(std::string(which) + " graph has vertex " + g.name(v) + " of valence < 2");
  int gi = girth(g);
  if (gi != kInfiniteGirth && gi < 4) throw PreconditionError(std::string(which) + " graph has a cycle of length < 4");
}

bool share_vertex(const Edge& a, const Edge& b) {
  return a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second;
}

std::string edge_name(const DefiningGraph& g, const Edge& e) { return g.name(e.first) + "-" + g.name(e.second); }

}  // namespace

GraphIsomorphism edges_to_isomorphism(const DefiningGraph& g1, const DefiningGraph& g2, const EdgeMap& f) {
  check_lemma_hypotheses(g1, "first");
  check_lemma_hypotheses(g2, "second");
  const auto& e1 = g1.edges();
  const auto& e2 = g2.edges();
  if (f.size() != e1.size() || e1.size() != e2.size()) throw PreconditionError("edge map is not a bijection");
  std::vector<char> hit(e2.size(), 0);
  for (std::size_t i : f) {
    if (i >= e2.size() || hit[i]) throw PreconditionError("edge map is not a bijection");
    hit[i] = 1;
  }
  for (std::size_t i = 0; i < e1.size(); ++i)
    for (std::size_t j = i + 1; j < e1.size(); ++j)
      if (share_vertex(e1[i], e1[j]) != share_vertex(e2[f[i]], e2[f[j]]))
        throw PreconditionError("edge map does not preserve adjacency: " + edge_name(g1, e1[i]) + ", " +
                                edge_name(g1, e1[j]));
  GraphIsomorphism phi;
  phi.vertex_map.assign(g1.size(), -1);
  for (Vertex v = 0; v < static_cast<Vertex>(g1.size()); ++v) {
    std::set<Vertex> common;
    bool first = true;
    for (Vertex w : g1.neighbors(v)) {
      const Edge& img = e2[f[*g1.edge_index(v, w)]];
      std::set<Vertex> ends{img.first, img.second};
      if (first) common = ends;
      else {
        std::set<Vertex> keep;
        std::set_intersection(common.begin(), common.end(), ends.begin(), ends.end(), std::inserter(keep, keep.end()));
        common = std::move(keep);
      }
      first = false;
    }
    if (common.size() != 1) throw PreconditionError("not induced by isomorphism (at vertex " + g1.name(v) + ")");
    phi.vertex_map[v] = *common.begin();
  }
  if (!is_isomorphism(g1, g2, phi) || induced_edge_map(g1, g2, phi) != f)
    throw PreconditionError("not induced by isomorphism");
  return phi;
}

nlohmann::json to_json(const DefiningGraph& g, const AtomicityReport& r) {
  nlohmann::json j;
  j["is_atomic"] = r.is_atomic;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : r.failures) {
    nlohmann::json x;
    x["kind"] = to_string(f.kind);
    if (f.vertex >= 0) x["vertex"] = g.name(f.vertex);
    if (!f.cycle.empty()) {
      x["cycle"] = nlohmann::json::array();
      for (Vertex v : f.cycle) x["cycle"].push_back(g.name(v));
    }
    j["failures"].push_back(x);
  }
  return j;
}

nlohmann::json to_json(const DefiningGraph& g1, const DefiningGraph& g2, const QiClassification& c) {
  nlohmann::json j;
  j["verdict"] = to_string(c.verdict);
  j["reason"] = c.reason;
  j["first"] = to_json(g1, c.first);
  j["second"] = to_json(g2, c.second);
  if (c.witness) {
    nlohmann::json w = nlohmann::json::object();
    for (Vertex v = 0; v < static_cast<Vertex>(g1.size()); ++v) w[g1.name(v)] = g2.name(c.witness->vertex_map[v]);
    j["witness"] = w;
  }
  return j;
}

nlohmann::json to_json(const OutGroupReport& r) {
  return {{"vertices", r.vertices},   {"h_order", r.h_order},     {"aut_order", r.aut_order},
          {"out_order", r.out_order}, {"extension", r.extension}};
}

}  // namespace raag
