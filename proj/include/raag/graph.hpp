#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace raag {

using Vertex = int;
/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simplicial graph. Vertices are stored sorted by name, so vertex
/// index order is the total order used by every downstream normal form.
class DefiningGraph {
 public:
  DefiningGraph() = default;
  DefiningGraph(std::vector<std::string> vertices,
                const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& name(Vertex v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Vertex> find(std::string_view name) const;
  /// Throws InputError for unknown names.
  Vertex index(std::string_view name) const;

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const { return matrix_[u * size() + v] != 0; }
  /// Edges (u < v), sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

  VertexSet closed_star(Vertex v) const;
  VertexSet vertex_set(const std::vector<std::string>& names) const;

  bool operator==(const DefiningGraph& other) const {
    return names_ == other.names_ && edges_ == other.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint8_t> matrix_;
  std::vector<Edge> edges_;
};

// ---- serialization -------------------------------------------------------

DefiningGraph graph_from_json(std::string_view text);
DefiningGraph load_graph(const std::string& path);
std::string graph_to_json(const DefiningGraph& g);
std::string graph_to_dot(const DefiningGraph& g, std::string_view name = "G");

// ---- primitives ----------------------------------------------------------

inline constexpr int kInfiniteGirth = -1;

bool is_connected(const DefiningGraph& g);
/// Connected components as sorted vertex sets, ordered by least vertex.
std::vector<VertexSet> components(const DefiningGraph& g, const std::vector<char>& removed = {});
/// Length of a shortest embedded cycle, or kInfiniteGirth for forests.
int girth(const DefiningGraph& g);
/// All-pairs BFS distances; -1 for unreachable pairs.
std::vector<std::vector<int>> distance_matrix(const DefiningGraph& g);

/// {w : w adjacent to every v in vs}.
VertexSet orthogonal_complement(const DefiningGraph& g, const VertexSet& vs);

/// Articulation points. Throws PreconditionError on disconnected input.
VertexSet cut_vertices(const DefiningGraph& g);
/// Removing the closed edge (both endpoints) leaves a disconnected graph.
bool separates_closed_edge(const DefiningGraph& g, Vertex u, Vertex v);
/// Closed star of v separates the component containing v. An empty
/// remainder does not count as separating.
bool separating_closed_star(const DefiningGraph& g, Vertex v);

// ---- atomicity -----------------------------------------------------------

struct AtomicityFailure {
  enum class Kind { Disconnected, LowValence, ShortCycle, SeparatingStar };
  Kind kind;
  Vertex vertex = -1;            // LowValence, SeparatingStar
  std::vector<Vertex> cycle;     // ShortCycle (length 3 or 4)
};

struct AtomicityReport {
  bool is_atomic = false;
  std::vector<AtomicityFailure> failures;
};

/// Throws PreconditionError("empty graph") on the empty graph.
AtomicityReport check_atomic(const DefiningGraph& g);
std::string to_string(AtomicityFailure::Kind kind);

// ---- isomorphism ---------------------------------------------------------

/// vertex_map[v] is the image in the target of source vertex v.
struct GraphIsomorphism {
  std::vector<Vertex> vertex_map;
  bool operator==(const GraphIsomorphism&) const = default;
};

/// Backtracking search pruned by degree, distance profile and pairwise
/// distances. Deterministic: tries source vertices in BFS order from the
/// least vertex and target candidates in index order.
std::optional<GraphIsomorphism> find_isomorphism(const DefiningGraph& g1, const DefiningGraph& g2);
/// Same search with some images pinned in advance.
std::optional<GraphIsomorphism> find_isomorphism(const DefiningGraph& g1, const DefiningGraph& g2,
                                                 const std::vector<Edge>& fixed);
bool is_isomorphism(const DefiningGraph& g1, const DefiningGraph& g2, const GraphIsomorphism& phi);
GraphIsomorphism inverse(const GraphIsomorphism& phi);
GraphIsomorphism compose(const GraphIsomorphism& second, const GraphIsomorphism& first);

/// |Aut(g)| via a stabilizer chain (orbit sizes multiplied down the chain).
std::uint64_t automorphism_group_order(const DefiningGraph& g);
/// Number of distinct isomorphisms g1 -> g2 (0 or |Aut(g1)|).
std::uint64_t count_isomorphisms(const DefiningGraph& g1, const DefiningGraph& g2);
/// Every automorphism, in lexicographic order of vertex_map. Intended for
/// graphs with small automorphism groups.
std::vector<GraphIsomorphism> all_automorphisms(const DefiningGraph& g);

// ---- constructions -------------------------------------------------------

/// k copies of g glued along the full subgraph spanned by `shared`.
/// Shared vertices keep their name; copy i of any other vertex x is "x#i".
DefiningGraph glue_copies_along(const DefiningGraph& g, const VertexSet& shared, int k);
DefiningGraph double_along_closed_star(const DefiningGraph& g, Vertex v);
/// Throws PreconditionError when k < 2.
DefiningGraph glue_k_copies_along_star(const DefiningGraph& g, Vertex v, int k);

DefiningGraph cycle_graph(int n, std::string_view prefix = "");
/// Pentagon on a-b-c-d-e.
DefiningGraph pentagon();
DefiningGraph path_graph(const std::vector<std::string>& names);
DefiningGraph star_graph(int leaves);
/// 1-skeleton of the dodecahedron as the generalized Petersen graph
/// GP(10,2): outer cycle u0..u9, spokes ui-vi, inner edges vi-v(i+2).
DefiningGraph dodecahedron();
/// The dodecahedron doubled along the face v0 v2 v4 v6 v8.
DefiningGraph dodecahedron_double();
DefiningGraph petersen();
/// Rename vertices through a permutation of names (for relabeling tests).
DefiningGraph relabel(const DefiningGraph& g, const std::vector<std::string>& new_names);
/// Γ': one vertex per vertex of g and one per edge ("u|w"), each edge vertex
/// joined to its two endpoints.
DefiningGraph barycentric_subdivision(const DefiningGraph& g);

}  // namespace raag
