#include "raag/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "json.hpp"
#include "raag/error.hpp"

namespace raag {

using nlohmann::json;

DefiningGraph::DefiningGraph(std::vector<std::string> vertices,
                             const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(vertices)) {
  std::sort(names_.begin(), names_.end());
  if (std::adjacent_find(names_.begin(), names_.end()) != names_.end())
    throw InputError("duplicate vertex identifier '" +
                     *std::adjacent_find(names_.begin(), names_.end()) + "'");
  const std::size_t n = names_.size();
  adj_.assign(n, {});
  matrix_.assign(n * n, 0);
  for (const auto& [a, b] : edges) {
    Vertex u = index(a), v = index(b);
    if (u == v) throw InputError("loop at vertex '" + a + "'");
    if (u > v) std::swap(u, v);
    if (matrix_[u * n + v]) throw InputError("repeated edge {" + a + "," + b + "}");
    matrix_[u * n + v] = matrix_[v * n + u] = 1;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    edges_.emplace_back(u, v);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  std::sort(edges_.begin(), edges_.end());
}

std::optional<Vertex> DefiningGraph::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<Vertex>(it - names_.begin());
}

Vertex DefiningGraph::index(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw InputError("unknown vertex '" + std::string(name) + "'");
}

std::optional<std::size_t> DefiningGraph::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

VertexSet DefiningGraph::closed_star(Vertex v) const {
  VertexSet s = adj_[v];
  s.insert(std::upper_bound(s.begin(), s.end(), v), v);
  return s;
}

VertexSet DefiningGraph::vertex_set(const std::vector<std::string>& names) const {
  VertexSet s;
  for (const auto& nm : names) s.push_back(index(nm));
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// ---- serialization -------------------------------------------------------

DefiningGraph graph_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    throw InputError("graph JSON must be an object with \"vertices\" and \"edges\"");
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  try {
    for (const auto& v : doc.at("vertices")) vertices.push_back(v.get<std::string>());
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("each edge must be a pair of vertex names");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed graph JSON: ") + e.what());
  }
  return DefiningGraph(std::move(vertices), edges);
}

DefiningGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return graph_from_json(ss.str());
}

std::string graph_to_json(const DefiningGraph& g) {
  json doc;
  doc["vertices"] = g.names();
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({g.name(u), g.name(v)});
  doc["edges"] = edges;
  return doc.dump();
}

std::string graph_to_dot(const DefiningGraph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (const auto& v : g.names()) out << "  \"" << v << "\";\n";
  for (auto [u, v] : g.edges()) out << "  \"" << g.name(u) << "\" -- \"" << g.name(v) << "\";\n";
  out << "}\n";
  return out.str();
}

// ---- primitives ----------------------------------------------------------

std::vector<VertexSet> components(const DefiningGraph& g, const std::vector<char>& removed) {
  const int n = static_cast<int>(g.size());
  std::vector<int> comp(n, -1);
  std::vector<VertexSet> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0 || (!removed.empty() && removed[s])) continue;
    VertexSet c;
    std::vector<int> stack{s};
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      c.push_back(v);
      for (int w : g.neighbors(v)) {
        if (comp[w] >= 0 || (!removed.empty() && removed[w])) continue;
        comp[w] = comp[s];
        stack.push_back(w);
      }
    }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

bool is_connected(const DefiningGraph& g) { return components(g).size() <= 1; }

int girth(const DefiningGraph& g) {
  const int n = static_cast<int>(g.size());
  int best = kInfiniteGirth;
  std::vector<int> dist(n), parent(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          q.push(w);
        } else if (parent[v] != w) {
          int len = dist[v] + dist[w] + 1;
          if (best == kInfiniteGirth || len < best) best = len;
        }
      }
    }
  }
  return best;
}

std::vector<std::vector<int>> distance_matrix(const DefiningGraph& g) {
  const int n = static_cast<int>(g.size());
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    auto& row = d[s];
    row[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v))
        if (row[w] < 0) {
          row[w] = row[v] + 1;
          q.push(w);
        }
    }
  }
  return d;
}

VertexSet orthogonal_complement(const DefiningGraph& g, const VertexSet& vs) {
  VertexSet out;
  for (Vertex w = 0; w < static_cast<Vertex>(g.size()); ++w) {
    bool all = std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return g.adjacent(v, w); });
    if (all) out.push_back(w);
  }
  return out;
}

VertexSet cut_vertices(const DefiningGraph& g) {
  if (!is_connected(g)) throw PreconditionError("cut_vertices requires a connected graph");
  const int n = static_cast<int>(g.size());
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> is_cut(n, 0);
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (int w : g.neighbors(v)) {
      if (w == parent) continue;
      if (disc[w] >= 0) {
        low[v] = std::min(low[v], disc[w]);
        continue;
      }
      ++children;
      dfs(w, v);
      low[v] = std::min(low[v], low[w]);
      if (parent >= 0 && low[w] >= disc[v]) is_cut[v] = 1;
    }
    if (parent < 0 && children > 1) is_cut[v] = 1;
  };
  if (n > 0) dfs(0, -1);
  VertexSet out;
  for (int v = 0; v < n; ++v)
    if (is_cut[v]) out.push_back(v);
  return out;
}

bool separates_closed_edge(const DefiningGraph& g, Vertex u, Vertex v) {
  std::vector<char> removed(g.size(), 0);
  removed[u] = removed[v] = 1;
  return components(g, removed).size() > 1;
}

bool separating_closed_star(const DefiningGraph& g, Vertex v) {
  std::vector<char> removed(g.size(), 1);
  for (const auto& c : components(g))
    if (std::binary_search(c.begin(), c.end(), v))
      for (Vertex w : c) removed[w] = 0;
  for (Vertex w : g.closed_star(v)) removed[w] = 1;
  return components(g, removed).size() > 1;
}

// ---- atomicity -----------------------------------------------------------

namespace {

// Embedded cycles of length <= max_len, each once: least vertex first and
// second vertex smaller than last.
std::vector<std::vector<Vertex>> short_cycles(const DefiningGraph& g, int max_len) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  std::vector<char> on_path(g.size(), 0);
  std::function<void(Vertex)> extend = [&](Vertex v) {
    for (Vertex w : g.neighbors(v)) {
      if (w == path.front() && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
      if (w <= path.front() || on_path[w] || static_cast<int>(path.size()) >= max_len) continue;
      path.push_back(w);
      on_path[w] = 1;
      extend(w);
      on_path[w] = 0;
      path.pop_back();
    }
  };
  for (Vertex s = 0; s < static_cast<Vertex>(g.size()); ++s) {
    path = {s};
    on_path[s] = 1;
    extend(s);
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

AtomicityReport check_atomic(const DefiningGraph& g) {
  if (g.empty()) throw PreconditionError("empty graph");
  AtomicityReport report;
  using K = AtomicityFailure::Kind;
  if (!is_connected(g)) report.failures.push_back({K::Disconnected, -1, {}});
  for (Vertex v = 0; v < static_cast<Vertex>(g.size()); ++v)
    if (g.degree(v) < 2) report.failures.push_back({K::LowValence, v, {}});
  for (auto& c : short_cycles(g, 4)) report.failures.push_back({K::ShortCycle, -1, std::move(c)});
  for (Vertex v = 0; v < static_cast<Vertex>(g.size()); ++v)
    if (separating_closed_star(g, v)) report.failures.push_back({K::SeparatingStar, v, {}});
  report.is_atomic = report.failures.empty();
  return report;
}

std::string to_string(AtomicityFailure::Kind kind) {
  switch (kind) {
    case AtomicityFailure::Kind::Disconnected: return "disconnected";
    case AtomicityFailure::Kind::LowValence: return "vertex_of_valence_lt_2";
    case AtomicityFailure::Kind::ShortCycle: return "short_cycle";
    case AtomicityFailure::Kind::SeparatingStar: return "separating_closed_star";
  }
  return "unknown";
}

// ---- isomorphism ---------------------------------------------------------

namespace {

struct IsoSearch {
  const DefiningGraph& g1;
  const DefiningGraph& g2;
  std::vector<std::vector<int>> d1, d2;
  std::vector<std::vector<int>> profile1, profile2;
  std::vector<Vertex> order;
  std::vector<Vertex> map;   // g1 -> g2
  std::vector<char> used;    // in g2
  bool want_all = false;
  std::vector<GraphIsomorphism> found;

  static std::vector<std::vector<int>> profiles(const std::vector<std::vector<int>>& d) {
    const std::size_t n = d.size();
    std::vector<std::vector<int>> p(n, std::vector<int>(n + 1, 0));
    for (std::size_t v = 0; v < n; ++v)
      for (int x : d[v]) ++p[v][x < 0 ? n : static_cast<std::size_t>(x)];
    return p;
  }

  IsoSearch(const DefiningGraph& a, const DefiningGraph& b)
      : g1(a), g2(b), d1(distance_matrix(a)), d2(distance_matrix(b)) {
    profile1 = profiles(d1);
    profile2 = profiles(d2);
    const int n = static_cast<int>(a.size());
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::queue<int> q;
      q.push(s);
      seen[s] = 1;
      while (!q.empty()) {
        int v = q.front();
        q.pop();
        order.push_back(v);
        for (int w : a.neighbors(v))
          if (!seen[w]) {
            seen[w] = 1;
            q.push(w);
          }
      }
    }
    map.assign(n, -1);
    used.assign(b.size(), 0);
  }

  bool compatible(Vertex v, Vertex w) const {
    if (profile1[v] != profile2[w]) return false;
    for (Vertex u = 0; u < static_cast<Vertex>(map.size()); ++u)
      if (map[u] >= 0 && d1[v][u] != d2[w][map[u]]) return false;
    return true;
  }

  bool pin(const std::vector<Edge>& fixed) {
    for (auto [v, w] : fixed) {
      if (map[v] == w) continue;
      if (map[v] >= 0 || used[w] || !compatible(v, w)) return false;
      map[v] = w;
      used[w] = 1;
    }
    return true;
  }

  bool run(std::size_t i) {
    if (i == order.size()) {
      found.push_back({map});
      return !want_all;
    }
    Vertex v = order[i];
    if (map[v] >= 0) return run(i + 1);
    for (Vertex w = 0; w < static_cast<Vertex>(g2.size()); ++w) {
      if (used[w] || !compatible(v, w)) continue;
      map[v] = w;
      used[w] = 1;
      if (run(i + 1)) return true;
      map[v] = -1;
      used[w] = 0;
    }
    return false;
  }
};

bool cheap_invariants_match(const DefiningGraph& g1, const DefiningGraph& g2) {
  if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count()) return false;
  std::vector<int> a, b;
  for (Vertex v = 0; v < static_cast<Vertex>(g1.size()); ++v) a.push_back(g1.degree(v));
  for (Vertex v = 0; v < static_cast<Vertex>(g2.size()); ++v) b.push_back(g2.degree(v));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

std::optional<GraphIsomorphism> find_isomorphism(const DefiningGraph& g1, const DefiningGraph& g2,
                                                 const std::vector<Edge>& fixed) {
  if (!cheap_invariants_match(g1, g2)) return std::nullopt;
  IsoSearch search(g1, g2);
  if (!search.pin(fixed)) return std::nullopt;
  if (!search.run(0)) return std::nullopt;
  return search.found.front();
}

std::optional<GraphIsomorphism> find_isomorphism(const DefiningGraph& g1, const DefiningGraph& g2) {
  return find_isomorphism(g1, g2, {});
}

bool is_isomorphism(const DefiningGraph& g1, const DefiningGraph& g2, const GraphIsomorphism& phi) {
  if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count() ||
      phi.vertex_map.size() != g1.size())
    return false;
  std::vector<char> hit(g2.size(), 0);
  for (Vertex w : phi.vertex_map) {
    if (w < 0 || w >= static_cast<Vertex>(g2.size()) || hit[w]) return false;
    hit[w] = 1;
  }
  for (auto [u, v] : g1.edges())
    if (!g2.adjacent(phi.vertex_map[u], phi.vertex_map[v])) return false;
  return true;
}

GraphIsomorphism inverse(const GraphIsomorphism& phi) {
  GraphIsomorphism inv{std::vector<Vertex>(phi.vertex_map.size(), -1)};
  for (std::size_t v = 0; v < phi.vertex_map.size(); ++v) inv.vertex_map[phi.vertex_map[v]] = static_cast<Vertex>(v);
  return inv;
}

GraphIsomorphism compose(const GraphIsomorphism& second, const GraphIsomorphism& first) {
  GraphIsomorphism out{first.vertex_map};
  for (auto& w : out.vertex_map) w = second.vertex_map[w];
  return out;
}

std::uint64_t automorphism_group_order(const DefiningGraph& g) {
  std::uint64_t order = 1;
  std::vector<Edge> fixed;
  for (Vertex v = 0; v < static_cast<Vertex>(g.size()); ++v) {
    std::uint64_t orbit = 0;
    for (Vertex x = 0; x < static_cast<Vertex>(g.size()); ++x) {
      auto pinned = fixed;
      pinned.emplace_back(v, x);
      if (find_isomorphism(g, g, pinned)) ++orbit;
    }
    order *= orbit;
    fixed.emplace_back(v, v);
  }
  return order;
}

std::uint64_t count_isomorphisms(const DefiningGraph& g1, const DefiningGraph& g2) {
  return find_isomorphism(g1, g2) ? automorphism_group_order(g1) : 0;
}

std::vector<GraphIsomorphism> all_automorphisms(const DefiningGraph& g) {
  IsoSearch search(g, g);
  search.want_all = true;
  search.run(0);
  std::sort(search.found.begin(), search.found.end(),
            [](const auto& a, const auto& b) { return a.vertex_map < b.vertex_map; });
  return search.found;
}

// ---- constructions -------------------------------------------------------

DefiningGraph glue_copies_along(const DefiningGraph& g, const VertexSet& shared, int k) {
  if (k < 1) throw PreconditionError("copy count must be positive");
  std::vector<char> is_shared(g.size(), 0);
  for (Vertex v : shared) is_shared.at(v) = 1;
  auto copy_name = [&](Vertex v, int i) {
    return is_shared[v] ? g.name(v) : g.name(v) + "#" + std::to_string(i);
  };
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  for (Vertex v = 0; v < static_cast<Vertex>(g.size()); ++v) {
    if (is_shared[v]) {
      vertices.push_back(g.name(v));
      continue;
    }
    for (int i = 1; i <= k; ++i) vertices.push_back(copy_name(v, i));
  }
  for (auto [u, v] : g.edges()) {
    if (is_shared[u] && is_shared[v]) {
      edges.emplace_back(g.name(u), g.name(v));
      continue;
    }
    for (int i = 1; i <= k; ++i) edges.emplace_back(copy_name(u, i), copy_name(v, i));
  }
  return DefiningGraph(std::move(vertices), edges);
}

DefiningGraph double_along_closed_star(const DefiningGraph& g, Vertex v) {
  return glue_copies_along(g, g.closed_star(v), 2);
}

DefiningGraph glue_k_copies_along_star(const DefiningGraph& g, Vertex v, int k) {
  if (k < 2) throw PreconditionError("glue_k_copies_along_star requires k >= 2");
  return glue_copies_along(g, g.closed_star(v), k);
}

DefiningGraph cycle_graph(int n, std::string_view prefix) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  for (int i = 0; i < n; ++i) edges.emplace_back(names[i], names[(i + 1) % n]);
  return DefiningGraph(names, edges);
}

DefiningGraph pentagon() {
  return DefiningGraph({"a", "b", "c", "d", "e"},
                       {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "a"}});
}

DefiningGraph path_graph(const std::vector<std::string>& names) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i + 1 < names.size(); ++i) edges.emplace_back(names[i], names[i + 1]);
  return DefiningGraph(names, edges);
}

DefiningGraph star_graph(int leaves) {
  std::vector<std::string> names{"c"};
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < leaves; ++i) {
    names.push_back("l" + std::to_string(i));
    edges.emplace_back("c", names.back());
  }
  return DefiningGraph(names, edges);
}

DefiningGraph dodecahedron() {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  auto u = [](int i) { return "u" + std::to_string(((i % 10) + 10) % 10); };
  auto v = [](int i) { return "v" + std::to_string(((i % 10) + 10) % 10); };
  for (int i = 0; i < 10; ++i) {
    names.push_back(u(i));
    names.push_back(v(i));
  }
  for (int i = 0; i < 10; ++i) {
    edges.emplace_back(u(i), u(i + 1));
    edges.emplace_back(u(i), v(i));
  }
  // vi-v(i+2) arises from both ends; keep it once
  std::set<std::pair<std::string, std::string>> inner;
  for (int i = 0; i < 10; ++i) {
    auto a = v(i), b = v(i + 2);
    if (a > b) std::swap(a, b);
    inner.emplace(a, b);
  }
  edges.insert(edges.end(), inner.begin(), inner.end());
  return DefiningGraph(names, edges);
}

DefiningGraph dodecahedron_double() {
  DefiningGraph d = dodecahedron();
  return glue_copies_along(d, d.vertex_set({"v0", "v2", "v4", "v6", "v8"}), 2);
}

DefiningGraph petersen() {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < 5; ++i) {
    names.push_back("o" + std::to_string(i));
    names.push_back("i" + std::to_string(i));
  }
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back("o" + std::to_string(i), "o" + std::to_string((i + 1) % 5));
    edges.emplace_back("o" + std::to_string(i), "i" + std::to_string(i));
    edges.emplace_back("i" + std::to_string(i), "i" + std::to_string((i + 2) % 5));
  }
  return DefiningGraph(names, edges);
}

DefiningGraph relabel(const DefiningGraph& g, const std::vector<std::string>& new_names) {
  if (new_names.size() != g.size()) throw InputError("relabel: name count mismatch");
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(new_names[u], new_names[v]);
  return DefiningGraph(new_names, edges);
}

DefiningGraph barycentric_subdivision(const DefiningGraph& g) {
  std::vector<std::string> names = g.names();
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [u, v] : g.edges()) {
    std::string mid = g.name(u) + "|" + g.name(v);
    names.push_back(mid);
    edges.emplace_back(g.name(u), mid);
    edges.emplace_back(g.name(v), mid);
  }
  return DefiningGraph(std::move(names), edges);
}

}  // namespace raag
