#pragma once

#include <optional>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

/// Embedded cycle stored as its canonical vertex sequence: starts at the
/// least vertex and runs in the direction whose second vertex is smaller.
class EmbeddedCycle {
 public:
  EmbeddedCycle() = default;
  /// Canonicalizes. Throws InputError unless the sequence is an embedded
  /// cycle of g (length >= 3, no repeats, consecutive vertices adjacent).
  EmbeddedCycle(const DefiningGraph& g, std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return v_; }
  std::size_t length() const { return v_.size(); }
  Vertex operator[](std::size_t i) const { return v_[i % v_.size()]; }
  /// Position of v along the cycle, or -1.
  int position(Vertex v) const;
  /// Number of edges on the shorter arc between positions i and j.
  int cycle_distance(int i, int j) const;
  bool contains(Vertex v) const { return position(v) >= 0; }
  std::vector<Edge> edges() const;

  auto operator<=>(const EmbeddedCycle&) const = default;

 private:
  explicit EmbeddedCycle(std::vector<Vertex> canonical) : v_(std::move(canonical)) {}
  friend struct CycleBuilder;
  std::vector<Vertex> v_;
};

enum class Exec { Serial, Parallel };

/// All embedded cycles of length <= max_len, canonical and sorted.
std::vector<EmbeddedCycle> enumerate_cycles(const DefiningGraph& g, int max_len, Exec exec = Exec::Parallel);

/// A path of exactly i edges, endpoints on c, whose endpoints are more than
/// i apart along c. Returned as its vertex sequence.
std::optional<std::vector<Vertex>> find_shortcut(const DefiningGraph& g, const EmbeddedCycle& c, int i);
bool is_tight(const DefiningGraph& g, const EmbeddedCycle& c);

/// All tight cycles of length <= max_len, canonical and sorted. Searches
/// induced paths only and prunes partial paths that already carry a
/// 2-shortcut.
std::vector<EmbeddedCycle> tight_cycles(const DefiningGraph& g, int max_len, Exec exec = Exec::Parallel);

struct WhiteheadGraph {
  Vertex base = -1;
  VertexSet link;
  /// Pairs of link vertices (a < b), sorted.
  std::vector<Edge> edges;

  bool connected() const;
};

WhiteheadGraph whitehead_graph(const DefiningGraph& g, Vertex v, int max_len);
/// Whitehead graph read off a precomputed tight-cycle list.
WhiteheadGraph whitehead_graph(const DefiningGraph& g, Vertex v, const std::vector<EmbeddedCycle>& tight);

struct WhiteheadLemmaRow {
  Vertex vertex = -1;
  bool whitehead_connected = false;
  bool cut_vertex = false;
  bool agrees = false;
};

struct WhiteheadLemmaReport {
  std::vector<WhiteheadLemmaRow> rows;
  bool pass = false;
};

/// Wh(v) connected iff v is not a cut vertex, at every vertex. Requires a
/// connected graph of girth >= 5 (PreconditionError otherwise).
WhiteheadLemmaReport check_whitehead_lemma(const DefiningGraph& g);

enum class EdgeColor { Black, White, Gray };
/// Indexed by DefiningGraph::edge_index.
using EdgeColoring = std::vector<EdgeColor>;

struct ColoringLemmaResult {
  bool gray_edges_meet = false;
  bool tight_cycles_monochrome = false;
  bool valid_hypotheses = false;
  bool conclusion_holds = false;
};

/// Requires atomic g and a coloring of every edge (PreconditionError otherwise).
ColoringLemmaResult check_coloring_lemma(const DefiningGraph& g, const EdgeColoring& coloring);
/// Same, against a precomputed list of all tight cycles of g.
ColoringLemmaResult check_coloring_lemma(const DefiningGraph& g, const EdgeColoring& coloring,
                                         const std::vector<EmbeddedCycle>& tight);

}  // namespace raag
