#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "raag/error.hpp"
#include "raag/report.hpp"
#include "raag/rigidity.hpp"
#include "test_util.hpp"

using namespace raag;

namespace {

DefiningGraph shuffled_copy(const DefiningGraph& g, unsigned seed) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < g.size(); ++i) names.push_back("x" + std::to_string(i));
  std::mt19937 rng(seed);
  std::shuffle(names.begin(), names.end(), rng);
  return relabel(g, names);
}

GraphIsomorphism identity(std::size_t n) {
  GraphIsomorphism id;
  id.vertex_map.resize(n);
  std::iota(id.vertex_map.begin(), id.vertex_map.end(), 0);
  return id;
}

}  // namespace

TEST_CASE("quasi-isometry classification") {
  auto p = pentagon();
  auto q = relabel(p, {"p", "q", "r", "s", "t"});
  auto c = classify_qi(p, q);
  CHECK(c.verdict == QiVerdict::QuasiIsometric);
  REQUIRE(c.witness);
  CHECK(is_isomorphism(p, q, *c.witness));
  auto back = classify_qi(q, p);
  CHECK(back.verdict == QiVerdict::QuasiIsometric);
  CHECK(is_isomorphism(q, p, inverse(*c.witness)));

  CHECK(classify_qi(p, dodecahedron_double()).verdict == QiVerdict::NotQuasiIsometric);
  CHECK(classify_qi(dodecahedron_double(), p).verdict == QiVerdict::NotQuasiIsometric);
  CHECK(classify_qi(petersen(), dodecahedron()).verdict == QiVerdict::NotQuasiIsometric);

  auto doubled = double_along_closed_star(p, p.index("a"));
  auto o = classify_qi(p, doubled);
  CHECK(o.verdict == QiVerdict::OutOfScope);
  CHECK_FALSE(o.witness);
  CHECK(o.first.is_atomic);
  CHECK_FALSE(o.second.is_atomic);
  CHECK(classify_qi(doubled, p).verdict == QiVerdict::OutOfScope);
  CHECK(to_string(QiVerdict::OutOfScope) == "out_of_scope");
}

TEST_CASE("outer automorphism group orders") {
  auto r = out_group(pentagon());
  CHECK(r.h_order == 32);
  CHECK(r.aut_order == 10);
  CHECK(r.out_order == 320);
  for (const auto& g : test::atomic_corpus()) {
    auto x = out_group(g);
    CHECK(x.h_order == (std::uint64_t{1} << g.size()));
    CHECK(x.out_order == x.h_order * x.aut_order);
    CHECK(x.aut_order == count_isomorphisms(g, g));
  }
  auto dd = out_group(dodecahedron_double());
  CHECK(dd.h_order == (std::uint64_t{1} << 35));
  CHECK_THROWS_AS(out_group(double_along_closed_star(pentagon(), 0)), PreconditionError);
}

TEST_CASE("edge maps to isomorphisms") {
  auto p = pentagon();
  auto id = identity(5);
  CHECK(edges_to_isomorphism(p, p, induced_edge_map(p, p, id)) == id);
  GraphIsomorphism rot{{1, 2, 3, 4, 0}};
  REQUIRE(is_isomorphism(p, p, rot));
  CHECK(edges_to_isomorphism(p, p, induced_edge_map(p, p, rot)) == rot);

  for (const auto& g : {pentagon(), petersen(), dodecahedron()})
    for (const auto& phi : all_automorphisms(g)) CHECK(edges_to_isomorphism(g, g, induced_edge_map(g, g, phi)) == phi);

  auto dd = dodecahedron_double();
  for (unsigned seed = 1; seed <= 5; ++seed) {
    auto copy = shuffled_copy(dd, seed);
    auto phi = find_isomorphism(dd, copy);
    REQUIRE(phi);
    auto f = induced_edge_map(dd, copy, *phi);
    auto psi = edges_to_isomorphism(dd, copy, f);
    CHECK(psi == *phi);
    auto back = edges_to_isomorphism(copy, dd, induced_edge_map(copy, dd, inverse(psi)));
    CHECK(compose(back, psi) == identity(dd.size()));
    CHECK(compose(psi, back) == identity(dd.size()));
  }
}

TEST_CASE("edge map errors") {
  auto p = pentagon();
  auto f = induced_edge_map(p, p, identity(5));
  auto bad = f;
  std::swap(bad[0], bad[2]);
  CHECK_THROWS_AS(edges_to_isomorphism(p, p, bad), PreconditionError);
  auto dup = f;
  dup[1] = dup[0];
  CHECK_THROWS_AS(edges_to_isomorphism(p, p, dup), PreconditionError);
  CHECK_THROWS_AS(edges_to_isomorphism(p, p, {0, 1}), PreconditionError);
  auto path = path_graph({"a", "b", "c"});
  CHECK_THROWS_AS(edges_to_isomorphism(path, path, {0, 1}), PreconditionError);
  auto tri = cycle_graph(3);
  CHECK_THROWS_AS(edges_to_isomorphism(tri, tri, {0, 1, 2}), PreconditionError);
  try {
    edges_to_isomorphism(p, p, bad);
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("does not preserve adjacency") != std::string::npos);
  }
}

TEST_CASE("report bundle") {
  auto r = run_report(pentagon());
  CHECK(r["atomicity"]["is_atomic"] == true);
  CHECK(r["tight_cycles"]["count"] == 1);
  for (const auto& [v, w] : r["whitehead"].items()) {
    CHECK(w["edges"].size() == 1);
    CHECK(w["connected"] == true);
  }
  CHECK(r["flat_ball"]["ok"] == true);
  CHECK(r["taut"]["pass"] == true);
  CHECK(r["out_group"]["out_order"] == 320);
  CHECK(run_report(pentagon()).dump() == r.dump());
  CHECK(report_summary(r).find("atomic: yes") != std::string::npos);

  auto d = run_report(double_along_closed_star(pentagon(), 0));
  CHECK(d["atomicity"]["is_atomic"] == false);
  CHECK(d["whitehead"].contains("skipped"));
  CHECK(d["taut"].contains("skipped"));
  CHECK(d["out_group"].contains("skipped"));
  CHECK(d["flat_ball"]["ok"] == true);

  auto bad = run_report(pentagon(), {1, 2});
  CHECK(bad["flat_ball"].contains("error"));
  CHECK(bad["taut"].contains("skipped"));
}

TEST_CASE("invalid graph JSON reports position") {
  try {
    graph_from_json("{\"vertices\": [\"a\", \n \"b\"], \"edges\": [[\"a\" \"b\"]]}");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}
