#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "doctest.h"
#include "raag/error.hpp"
#include "raag/graph.hpp"
#include "test_util.hpp"

using namespace raag;

namespace {

// Oracle: automorphisms counted by plain adjacency-checked backtracking.
std::uint64_t brute_force_isomorphism_count(const DefiningGraph& g1, const DefiningGraph& g2) {
  if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count()) return 0;
  const int n = static_cast<int>(g1.size());
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::uint64_t count = 0;
  std::function<void(int)> go = [&](int v) {
    if (v == n) {
      ++count;
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || g1.degree(v) != g2.degree(w)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = g1.adjacent(u, v) == g2.adjacent(map[u], w);
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      go(v + 1);
      used[w] = 0;
    }
  };
  go(0);
  return count;
}

// Oracle: shortest cycle by exhaustive DFS over simple paths.
int brute_force_girth(const DefiningGraph& g) {
  int best = kInfiniteGirth;
  std::vector<char> on(g.size(), 0);
  std::vector<int> path;
  std::function<void(int)> dfs = [&](int v) {
    if (best != kInfiniteGirth && static_cast<int>(path.size()) >= best) return;
    for (int w : g.neighbors(v)) {
      if (w == path.front() && path.size() >= 3) {
        int len = static_cast<int>(path.size());
        if (best == kInfiniteGirth || len < best) best = len;
      }
      if (on[w] || w < path.front()) continue;
      on[w] = 1;
      path.push_back(w);
      dfs(w);
      path.pop_back();
      on[w] = 0;
    }
  };
  for (int s = 0; s < static_cast<int>(g.size()); ++s) {
    path = {s};
    on[s] = 1;
    dfs(s);
    on[s] = 0;
  }
  return best;
}

VertexSet brute_force_cut_vertices(const DefiningGraph& g) {
  VertexSet out;
  for (int v = 0; v < static_cast<int>(g.size()); ++v) {
    std::vector<char> removed(g.size(), 0);
    removed[v] = 1;
    if (components(g, removed).size() > 1) out.push_back(v);
  }
  return out;
}

bool has_failure(const AtomicityReport& r, AtomicityFailure::Kind k, Vertex v = -1) {
  return std::any_of(r.failures.begin(), r.failures.end(),
                     [&](const auto& f) { return f.kind == k && (v < 0 || f.vertex == v); });
}

}  // namespace

TEST_CASE("defining graph validation") {
  CHECK_THROWS_AS(DefiningGraph({"a", "a"}, {}), InputError);
  CHECK_THROWS_AS(DefiningGraph({"a"}, {{"a", "a"}}), InputError);
  CHECK_THROWS_AS(DefiningGraph({"a", "b"}, {{"a", "c"}}), InputError);
  CHECK_THROWS_AS(DefiningGraph({"a", "b"}, {{"a", "b"}, {"b", "a"}}), InputError);
  DefiningGraph g({"b", "a"}, {{"b", "a"}});
  CHECK(g.name(0) == "a");
  CHECK(g.adjacent(0, 1));
}

TEST_CASE("json round trip and parse errors") {
  auto g = dodecahedron_double();
  CHECK(graph_from_json(graph_to_json(g)) == g);
  CHECK(graph_to_json(g) == graph_to_json(graph_from_json(graph_to_json(g))));
  try {
    graph_from_json("{\"vertices\": [\"a\",\n \"b\"], \"edges\": [[\"a\" \"b\"]]}");
    FAIL("expected parse error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(graph_from_json("{\"vertices\": []}"), InputError);
  CHECK(graph_to_dot(pentagon()).find("\"a\" -- \"b\";") != std::string::npos);
}

TEST_CASE("check_atomic fixtures") {
  CHECK(check_atomic(pentagon()).is_atomic);
  auto path = check_atomic(path_graph({"a", "b", "c"}));
  CHECK_FALSE(path.is_atomic);
  CHECK(has_failure(path, AtomicityFailure::Kind::LowValence, 0));

  auto p = pentagon();
  auto doubled = double_along_closed_star(p, p.index("a"));
  auto r = check_atomic(doubled);
  CHECK_FALSE(r.is_atomic);
  CHECK(has_failure(r, AtomicityFailure::Kind::SeparatingStar, doubled.index("a")));

  CHECK(check_atomic(dodecahedron_double()).is_atomic);
  CHECK(check_atomic(dodecahedron()).is_atomic);
  CHECK(check_atomic(petersen()).is_atomic);

  auto square = cycle_graph(4);
  auto sq = check_atomic(square);
  REQUIRE(has_failure(sq, AtomicityFailure::Kind::ShortCycle));
  for (const auto& f : sq.failures)
    if (f.kind == AtomicityFailure::Kind::ShortCycle) CHECK(f.cycle.size() == 4);

  DefiningGraph two({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
  CHECK(has_failure(check_atomic(two), AtomicityFailure::Kind::Disconnected));
  CHECK_THROWS_AS(check_atomic(DefiningGraph()), PreconditionError);
}

TEST_CASE("separating closed star: empty remainder does not separate") {
  auto k13 = star_graph(3);
  CHECK_FALSE(separating_closed_star(k13, k13.index("c")));
  // Leaf star {l0, c} leaves l1, l2 apart.
  CHECK(separating_closed_star(k13, k13.index("l0")));
}

TEST_CASE("girth") {
  CHECK(girth(pentagon()) == 5);
  CHECK(girth(path_graph({"a", "b", "c", "d"})) == kInfiniteGirth);
  CHECK(girth(star_graph(4)) == kInfiniteGirth);
  CHECK(girth(dodecahedron()) == brute_force_girth(dodecahedron()));
  CHECK(girth(dodecahedron()) == 5);
  CHECK(girth(dodecahedron_double()) == 5);
  CHECK(girth(cycle_graph(4)) == 4);
}

TEST_CASE("orthogonal complement") {
  auto p = pentagon();
  auto names = [&](const VertexSet& s) {
    std::vector<std::string> out;
    for (Vertex v : s) out.push_back(p.name(v));
    return out;
  };
  CHECK(names(orthogonal_complement(p, p.vertex_set({"a"}))) == std::vector<std::string>{"b", "e"});
  CHECK(names(orthogonal_complement(p, p.vertex_set({"a", "c"}))) == std::vector<std::string>{"b"});
  CHECK(orthogonal_complement(p, p.vertex_set({"a", "b"})).empty());
}

TEST_CASE("orthogonal complement is antitone") {
  std::mt19937 rng(7);
  auto g = dodecahedron_double();
  for (int trial = 0; trial < 200; ++trial) {
    VertexSet vs, ws;
    for (Vertex v = 0; v < static_cast<Vertex>(g.size()); ++v) {
      int r = static_cast<int>(rng() % 12);
      if (r == 0) vs.push_back(v);
      if (r <= 1) ws.push_back(v);
    }
    auto cv = orthogonal_complement(g, vs);
    auto cw = orthogonal_complement(g, ws);
    CHECK(std::includes(cv.begin(), cv.end(), cw.begin(), cw.end()));
    for (Vertex v : vs) CHECK_FALSE(std::binary_search(cv.begin(), cv.end(), v));
  }
}

TEST_CASE("cut vertices") {
  CHECK(cut_vertices(pentagon()).empty());
  auto wedge = test::pentagon_wedge();
  CHECK(cut_vertices(wedge) == VertexSet{wedge.index("v")});
  auto dd = dodecahedron_double();
  CHECK(cut_vertices(dd) == brute_force_cut_vertices(dd));
  CHECK(cut_vertices(dd).empty());
  DefiningGraph two({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
  CHECK_THROWS_AS(cut_vertices(two), PreconditionError);
  for (const auto& g : test::random_corpus(40, 11)) CHECK(cut_vertices(g) == brute_force_cut_vertices(g));
}

TEST_CASE("atomic graphs have no cut vertices or separating closed edges") {
  for (const auto& g : test::atomic_corpus()) {
    REQUIRE(check_atomic(g).is_atomic);
    CHECK(girth(g) >= 5);
    CHECK(cut_vertices(g).empty());
    for (auto [u, v] : g.edges()) CHECK_FALSE(separates_closed_edge(g, u, v));
  }
}

TEST_CASE("isomorphism") {
  auto p = pentagon();
  auto q = relabel(p, {"x3", "x1", "x4", "x0", "x2"});
  auto phi = find_isomorphism(p, q);
  REQUIRE(phi);
  CHECK(is_isomorphism(p, q, *phi));
  CHECK_FALSE(find_isomorphism(p, cycle_graph(6)));
  CHECK(brute_force_isomorphism_count(p, p) == 10);
  CHECK(count_isomorphisms(p, q) == 10);
  CHECK(all_automorphisms(p).size() == 10);
}

TEST_CASE("isomorphism is an equivalence") {
  std::mt19937 rng(3);
  for (const auto& g : test::atomic_corpus()) {
    auto self = find_isomorphism(g, g);
    REQUIRE(self);
    auto names = g.names();
    std::shuffle(names.begin(), names.end(), rng);
    for (auto& n : names) n = "r_" + n;
    auto h = relabel(g, names);
    auto names2 = h.names();
    std::shuffle(names2.begin(), names2.end(), rng);
    for (auto& n : names2) n = "s_" + n;
    auto k = relabel(h, names2);
    auto gh = find_isomorphism(g, h);
    auto hg = find_isomorphism(h, g);
    auto hk = find_isomorphism(h, k);
    REQUIRE(gh);
    REQUIRE(hg);
    REQUIRE(hk);
    CHECK(is_isomorphism(g, k, compose(*hk, *gh)));
    CHECK(is_isomorphism(h, g, inverse(*gh)));
  }
}

TEST_CASE("automorphism group orders") {
  CHECK(automorphism_group_order(pentagon()) == 10);
  CHECK(automorphism_group_order(DefiningGraph({"a", "b"}, {{"a", "b"}})) == 2);
  CHECK(automorphism_group_order(dodecahedron()) == 120);
  CHECK(brute_force_isomorphism_count(dodecahedron(), dodecahedron()) == 120);
  CHECK(automorphism_group_order(petersen()) == 120);
  CHECK(automorphism_group_order(star_graph(5)) == 120);
  auto dd = dodecahedron_double();
  CHECK(automorphism_group_order(dd) == brute_force_isomorphism_count(dd, dd));
}

TEST_CASE("doubling along a closed star") {
  auto p = pentagon();
  auto d = double_along_closed_star(p, p.index("a"));
  CHECK(d.size() == 7);
  CHECK(d.edge_count() == 8);
  CHECK(d.find("a"));
  CHECK(d.find("c#1"));
  CHECK(d.find("d#2"));
  auto k = star_graph(3);
  CHECK(double_along_closed_star(k, k.index("c")) == k);

  // |V'| = 2|V| - |St(v)|, |E'| = 2|E| - |E(St(v))| on every vertex of the corpus.
  for (const auto& g : test::atomic_corpus()) {
    for (Vertex v = 0; v < static_cast<Vertex>(g.size()); ++v) {
      auto star = g.closed_star(v);
      auto dv = double_along_closed_star(g, v);
      CHECK(dv.size() == 2 * g.size() - star.size());
      CHECK(dv.edge_count() == 2 * g.edge_count() - static_cast<std::size_t>(g.degree(v)));
    }
  }
}

TEST_CASE("gluing k copies along a star") {
  auto p = pentagon();
  auto a = p.index("a");
  CHECK(find_isomorphism(glue_k_copies_along_star(p, a, 2), double_along_closed_star(p, a)));
  auto g3 = glue_k_copies_along_star(p, a, 3);
  CHECK(g3.size() == 9);
  CHECK(g3.edge_count() == 11);
  CHECK_THROWS_AS(glue_k_copies_along_star(p, a, 1), PreconditionError);
  for (int k = 2; k <= 5; ++k)
    for (const auto& g : test::atomic_corpus())
      CHECK_FALSE(check_atomic(glue_k_copies_along_star(g, 0, k)).is_atomic);
}

TEST_CASE("dodecahedron double") {
  auto dd = dodecahedron_double();
  CHECK(dd.size() == 35);
  CHECK(dd.edge_count() == 55);
  CHECK(girth(dd) == 5);
  CHECK(check_atomic(dd).is_atomic);
  int valence4 = 0;
  for (Vertex v = 0; v < 35; ++v) valence4 += dd.degree(v) == 4;
  CHECK(valence4 == 5);
}
