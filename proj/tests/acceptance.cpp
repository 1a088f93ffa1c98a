// Acceptance run: one PASS/FAIL line per criterion. Optional argument: path
// to the raagtool binary, used to compare repeated CLI report runs.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "raag/report.hpp"
#include "test_util.hpp"

using namespace raag;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << "s";
  return o.str();
}

Outcome atomicity() {
  auto t = Clock::now();
  auto p = pentagon();
  int wrong = 0, checked = 0;
  auto expect = [&](const DefiningGraph& g, bool atomic) {
    ++checked;
    wrong += check_atomic(g).is_atomic != atomic;
  };
  expect(p, true);
  expect(dodecahedron_double(), true);
  for (Vertex v = 0; v < 5; ++v) {
    expect(double_along_closed_star(p, v), false);
    for (int k = 2; k <= 4; ++k) expect(glue_k_copies_along_star(p, v, k), false);
  }
  for (const auto& g : {petersen(), dodecahedron()})
    for (int k = 2; k <= 3; ++k) expect(glue_k_copies_along_star(g, 0, k), false);
  double s = seconds_since(t);
  return {wrong == 0 && s < 1.0,
          std::to_string(checked) + " fixtures, " + std::to_string(wrong) + " wrong, " + fmt_seconds(s)};
}

Outcome whitehead_fixtures() {
  auto t = Clock::now();
  auto g = dodecahedron_double();
  auto tight = tight_cycles(g, static_cast<int>(g.size()));
  int wrong = 0, v3 = 0, v4 = 0;
  for (Vertex v = 0; v < static_cast<Vertex>(g.size()); ++v) {
    auto w = whitehead_graph(g, v, tight);
    // K3 and K4 minus an edge are the only simple graphs with these counts.
    if (g.degree(v) == 3) {
      ++v3;
      wrong += !(w.link.size() == 3 && w.edges.size() == 3);
    } else if (g.degree(v) == 4) {
      ++v4;
      wrong += !(w.link.size() == 4 && w.edges.size() == 5);
    } else {
      ++wrong;
    }
  }
  double s = seconds_since(t);
  return {wrong == 0 && s < 30.0, std::to_string(v3) + " valence-3 and " + std::to_string(v4) + " valence-4 vertices, " +
                                      std::to_string(wrong) + " mismatches, " + fmt_seconds(s)};
}

Outcome whitehead_lemma() {
  auto t = Clock::now();
  auto corpus = test::random_corpus(220, 2024, 12);
  int violations = 0;
  std::size_t vertices = 0;
  for (const auto& g : corpus) {
    auto r = check_whitehead_lemma(g);
    vertices += r.rows.size();
    for (const auto& row : r.rows) violations += row.whitehead_connected == row.cut_vertex;
  }
  double s = seconds_since(t);
  return {corpus.size() >= 200 && violations == 0 && s < 120.0,
          std::to_string(corpus.size()) + " graphs, " + std::to_string(vertices) + " vertices, " +
              std::to_string(violations) + " violations, " + fmt_seconds(s)};
}

Outcome coloring_lemma() {
  std::mt19937 rng(77);
  int valid = 0, violations = 0;
  for (const auto& g : test::atomic_corpus()) {
    auto tight = tight_cycles(g, static_cast<int>(g.size()));
    for (int trial = 0; trial < 1500; ++trial) {
      EdgeColoring col(g.edge_count());
      // Gray edges at one hub so they pairwise meet; few or no white edges.
      Vertex hub = static_cast<Vertex>(rng() % g.size());
      bool allow_white = trial % 2 == 1;
      for (std::size_t i = 0; i < col.size(); ++i) {
        auto [a, b] = g.edges()[i];
        bool at_hub = a == hub || b == hub;
        col[i] = (at_hub && rng() % 2) ? EdgeColor::Gray
                 : (allow_white && rng() % 8 == 0) ? EdgeColor::White
                                                    : EdgeColor::Black;
      }
      auto r = check_coloring_lemma(g, col, tight);
      if (!r.valid_hypotheses) continue;
      ++valid;
      violations += !r.conclusion_holds;
    }
  }
  return {valid >= 500 && violations == 0,
          std::to_string(valid) + " valid colorings, " + std::to_string(violations) + " violations"};
}

int count_shells(const ShellReport& r, ShellClass c) {
  return static_cast<int>(std::count_if(r.records.begin(), r.records.end(), [&](const auto& x) { return x.shell == c; }));
}

Outcome shell_inequality() {
  int diagrams = 0, violations = 0;
  auto check = [&](const Raag& G, const DiskDiagram& d) {
    ++diagrams;
    auto rep = shell_report(d);
    bool ok = check_diagram(G, d).empty() && rep.total_score >= 4 && rep.shell_case != ShellCase::Other;
    // Two 1-shells and nothing else means the core is a ladder.
    if (rep.shell_case == ShellCase::Two1Shells ||
        (count_shells(rep, ShellClass::One) == 2 && count_shells(rep, ShellClass::Two) == 0))
      ok = ok && rep.ladder;
    violations += !ok;
  };
  for (const auto& [g, radius, chain] : {std::tuple{pentagon(), 8, 3}, std::tuple{dodecahedron(), 6, 2},
                                         std::tuple{petersen(), 6, 2}, std::tuple{dodecahedron_double(), 4, 1}}) {
    auto G = make_raag(g);
    auto b = build_ball(G, radius);
    for (const auto& c : test::glued_cycles(*G, 60, chain, 11)) check(*G, build_diagram(b, c));
    for (const auto& c : tight_cycles(g, static_cast<int>(g.size()))) check(*G, build_diagram(b, lift_cycle(*G, c)));
  }
  return {diagrams > 0 && violations == 0,
          std::to_string(diagrams) + " diagrams, " + std::to_string(violations) + " violations"};
}

Outcome tight_taut() {
  auto t = Clock::now();
  int rows = 0, mismatches = 0, multi_cell = 0;
  for (const auto& g : {pentagon(), dodecahedron_double()}) {
    auto b = build_ball(g, 4);
    for (const auto& r : scan_lifts(b, 9)) {
      ++rows;
      mismatches += r.tight != r.taut;
      multi_cell += r.taut && r.core_size != 1;
    }
  }
  double s = seconds_since(t);
  return {mismatches == 0 && multi_cell == 0 && s < 300.0,
          std::to_string(rows) + " cycles, " + std::to_string(mismatches) + " tight/taut mismatches, " +
              std::to_string(multi_cell) + " taut lifts with multi-cell core, " + fmt_seconds(s)};
}

// Words of length <= 6 over the pentagon packed base 11, letter code
// 2*gen + inverse + 1, first letter in the lowest digit.
struct WordCodes {
  static constexpr int kMax = 6;
  static constexpr int kBase = 11;
  static int encode(const Word& w) {
    int code = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it) code = code * kBase + 2 * it->gen + it->inverse + 1;
    return code;
  }
  static Word decode(int code) {
    Word w;
    for (; code; code /= kBase) {
      int d = code % kBase - 1;
      w.push_back({static_cast<Vertex>(d / 2), (d & 1) != 0});
    }
    return w;
  }
  static bool valid(int code) {
    for (; code; code /= kBase)
      if (code % kBase == 0) return false;
    return true;
  }
};

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

Outcome word_oracles() {
  auto G = make_raag(pentagon());
  int limit = 1;
  for (int i = 0; i < WordCodes::kMax; ++i) limit *= WordCodes::kBase;
  // Congruence closure: join each word to its commuting swaps and free reductions.
  std::vector<int> parent(limit);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<int> words;
  for (int code = 0; code < limit; ++code) {
    if (!WordCodes::valid(code)) continue;
    words.push_back(code);
    Word w = WordCodes::decode(code);
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      Word next = w;
      if (w[i].gen == w[i + 1].gen && w[i].inverse != w[i + 1].inverse) next.erase(next.begin() + i, next.begin() + i + 2);
      else if (G->commute(w[i].gen, w[i + 1].gen)) std::swap(next[i], next[i + 1]);
      else continue;
      parent[find_root(parent, code)] = find_root(parent, WordCodes::encode(next));
    }
  }
  std::vector<int> class_nf(limit, -1);
  std::vector<int> nf_class(limit, -1);
  int mismatches = 0;
  for (int code : words) {
    int root = find_root(parent, code);
    int nf = WordCodes::encode(G->normal_form(WordCodes::decode(code)));
    if (class_nf[root] < 0) class_nf[root] = nf;
    if (nf_class[nf] < 0) nf_class[nf] = root;
    mismatches += class_nf[root] != nf || nf_class[nf] != root;
  }

  // Coset keys against subgroup membership on all pairs of elements of length <= 3.
  auto p = G->graph();
  std::set<Word> elems;
  for (const auto& w : test::all_words(*G, 3)) elems.insert(G->normal_form(w));
  std::vector<GroupElement> xs;
  for (const auto& w : elems) xs.emplace_back(G, w);
  std::vector<std::tuple<VertexKind, Vertex, Vertex, VertexSet>> kinds{{VertexKind::Cone, -1, -1, VertexSet{}}};
  for (Vertex u = 0; u < 5; ++u) kinds.emplace_back(VertexKind::Singular, u, -1, VertexSet{u});
  for (auto [u, w] : p.edges()) kinds.emplace_back(VertexKind::Flat, u, w, VertexSet{u, w});
  long pairs = 0;
  int key_mismatches = 0;
  for (const auto& [kind, u, w, s] : kinds) {
    std::vector<CosetKey> keys;
    for (const auto& x : xs) keys.push_back(coset_key(x, kind, u, w));
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i; j < xs.size(); ++j, ++pairs)
        key_mismatches += (keys[i] == keys[j]) != in_special_subgroup(xs[i].inverse() * xs[j], s);
  }
  return {mismatches == 0 && key_mismatches == 0,
          std::to_string(words.size()) + " words, " + std::to_string(mismatches) + " normal-form mismatches; " +
              std::to_string(pairs) + " coset pairs, " + std::to_string(key_mismatches) + " key mismatches"};
}

Outcome flat_ball_checks() {
  auto t = Clock::now();
  bool ok = true;
  std::string detail;
  for (const auto& [name, g] : {std::pair{"pentagon", pentagon()}, std::pair{"dodeca-double", dodecahedron_double()}}) {
    auto c = check_ball(build_ball(g, 6));
    ok = ok && c.ok() && c.interior_checked > 0;
    detail += std::string(name) + ": " + std::to_string(c.vertices) + " vertices, " +
              std::to_string(c.bad_squares + c.bad_cone_links + c.bad_singular_links + c.bad_flat_links +
                             c.short_link_cycles + c.bad_edges) +
              " violations; ";
  }
  double s = seconds_since(t);
  return {ok && s < 60.0, detail + fmt_seconds(s)};
}

Outcome rigidity_numbers() {
  auto p = pentagon();
  auto q = relabel(p, {"p", "q", "r", "s", "t"});
  auto a = classify_qi(p, q);
  bool ok = a.verdict == QiVerdict::QuasiIsometric && a.witness && is_isomorphism(p, q, *a.witness);
  ok = ok && classify_qi(p, dodecahedron_double()).verdict == QiVerdict::NotQuasiIsometric;
  ok = ok && classify_qi(p, double_along_closed_star(p, 0)).verdict == QiVerdict::OutOfScope;
  auto o = out_group(p);
  ok = ok && o.out_order == 320 && o.aut_order == 10;
  return {ok, "|Out| = " + std::to_string(o.out_order) + " (|Aut| = " + std::to_string(o.aut_order) + ")"};
}

std::string run_cli(const std::string& cmd) {
  std::string out;
  if (FILE* f = popen(cmd.c_str(), "r")) {
    char buf[4096];
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, f)) > 0;) out.append(buf, n);
    pclose(f);
  }
  return out;
}

Outcome determinism(const std::string& tool) {
  int runs = 0, diffs = 0;
  int threads = omp_get_max_threads();
  for (const auto& g : {pentagon(), dodecahedron_double(), double_along_closed_star(pentagon(), 0)}) {
    omp_set_num_threads(threads);
    auto first = run_report(g).dump();
    for (int n : {1, threads, 1}) {
      omp_set_num_threads(n);
      ++runs;
      diffs += run_report(g).dump() != first;
    }
  }
  omp_set_num_threads(threads);
  if (!tool.empty()) {
    for (const char* g : {"@pentagon", "@dodeca-double"}) {
      auto cmd = tool + " report " + g + " --json";
      auto first = run_cli(cmd);
      ++runs;
      diffs += first.empty() || run_cli(cmd) != first || run_cli("OMP_NUM_THREADS=1 " + cmd) != first;
    }
  }
  return {diffs == 0, std::to_string(runs) + " repeated reports" + (tool.empty() ? " (in-process only)" : "") + ", " +
                          std::to_string(diffs) + " differ"};
}

}  // namespace

int main(int argc, char** argv) {
  std::string tool = argc > 1 ? argv[1] : "";
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"atomicity fixtures", atomicity},
      {"whitehead fixtures on the dodecahedron double", whitehead_fixtures},
      {"whitehead connectivity vs cut vertices", whitehead_lemma},
      {"no-cuts coloring property", coloring_lemma},
      {"shell inequality and shell cases", shell_inequality},
      {"tight cycles lift to taut cycles", tight_taut},
      {"word-algebra oracle equivalence", word_oracles},
      {"flat-ball structure at radius 6", flat_ball_checks},
      {"rigidity numbers", rigidity_numbers},
      {"report determinism", [&] { return determinism(tool); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
              << o.detail << ")" << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
