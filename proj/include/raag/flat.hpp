#pragma once

#include <array>
#include <optional>
#include <unordered_map>
#include <vector>

#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace raag {

/// Finite piece of the flat space F(Γ): the union of the translates gC of
/// the fundamental domain C for |g| <= (radius - 2) / 2. A literal edge ball
/// is infinite (the cones a^k all sit at distance 2), so the radius bounds
/// the level 2|g|, 2|g| + 1, 2|g| + 2 of g, g<u>, g<u,w> with g the
/// shortest representative. Level bounds edge distance from above.
class FlatBall {
 public:
  using Square = std::array<int, 4>;  // cone, singular, flat, singular

  FlatBall(RaagPtr group, int radius);

  const Raag& group() const { return *group_; }
  const RaagPtr& group_ptr() const { return group_; }
  const DefiningGraph& graph() const { return group_->graph(); }
  int radius() const { return radius_; }
  /// Every vertex of level <= complete_radius has its full star present
  /// (cone vertices) or its star truncated only in the infinite directions.
  int complete_radius() const { return radius_ - 2; }
  int word_bound() const { return word_bound_; }

  std::size_t size() const { return keys_.size(); }
  const std::vector<CosetKey>& vertices() const { return keys_; }
  const CosetKey& key(int v) const { return keys_[v]; }
  VertexKind kind(int v) const { return keys_[v].kind; }
  int level(int v) const { return level_[v]; }
  /// Edge distance from the base cone inside the ball.
  int distance(int v) const { return dist_[v]; }
  bool interior(int v) const { return level_[v] <= complete_radius(); }
  std::optional<int> find(const CosetKey& k) const;
  /// Throws PreconditionError when k is outside the ball.
  int index(const CosetKey& k) const;

  /// Edges (a < b), sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<Square>& squares() const { return squares_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  /// Indices into squares() of the squares containing v.
  const std::vector<int>& squares_at(int v) const { return squares_at_[v]; }
  bool adjacent(int a, int b) const;
  /// Interned stabilizer_key of a singular vertex; -1 for other kinds.
  int stabilizer_id(int v) const { return stab_id_[v]; }

 private:
  RaagPtr group_;
  int radius_;
  int word_bound_;
  std::vector<CosetKey> keys_;
  std::vector<int> level_;
  std::vector<int> dist_;
  std::unordered_map<CosetKey, int, CosetKeyHash> index_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<Square> squares_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> squares_at_;
  std::vector<int> stab_id_;
};

/// Throws PreconditionError for radius < 2.
FlatBall build_ball(const DefiningGraph& g, int radius);
FlatBall build_ball(RaagPtr group, int radius);

/// All elements of length <= max_len, in normal form, sorted shortlex.
std::vector<Word> elements_up_to(const Raag& group, int max_len);

// ---- structural checks -------------------------------------------------------

/// Link of v in the square complex: one vertex per edge at v (named by the
/// neighbour key), one edge per square corner at v. Parallel corners give
/// repeated edges, so the link is returned as an edge list over neighbour
/// indices.
struct Link {
  std::vector<int> vertices;                 // ball indices of neighbours
  std::vector<std::pair<int, int>> edges;    // positions into `vertices`
};
Link square_link(const FlatBall& b, int v);
/// Girth of a multigraph link: 2 if some corner pair is doubled.
int link_girth(const Link& l);
/// Link of a cone vertex with the square diagonals added: singular and flat
/// neighbours, joined when they share a square. Names are coset keys.
DefiningGraph cone_link_simplicial(const FlatBall& b, int cone);

struct BallCheck {
  std::size_t vertices = 0, edges = 0, squares = 0;
  std::size_t cone = 0, singular = 0, flat = 0;
  std::size_t interior_checked = 0;
  int bad_edges = 0;            // same-type or cone-flat edges
  int bad_squares = 0;          // not (g, g<u>, g<u,w>, g<w>)
  int bad_cone_links = 0;       // not ≅ Γ' (simplicial) or ≅ Γ (square link)
  int bad_singular_links = 0;   // not complete bipartite cones × Lk(u)
  int bad_flat_links = 0;       // window not complete bipartite
  int short_link_cycles = 0;    // interior link girth < 4
  bool ok() const {
    return bad_edges + bad_squares + bad_cone_links + bad_singular_links + bad_flat_links + short_link_cycles == 0;
  }
};
BallCheck check_ball(const FlatBall& b);

// ---- turns, coarse length and parallel sets ----------------------------------

/// A flat–singular–flat arc, as ball indices.
struct FullEdge {
  int flat1 = -1, singular = -1, flat2 = -1;
};

enum class Turn { Legal, Illegal };

/// Key identifying the infinite cyclic stabilizer r<u>r^-1 of the singular
/// vertex r<u>: (u, shortest representative of r<St(u)>).
CosetKey stabilizer_key(const Raag& group, const CosetKey& singular);
/// Throws PreconditionError unless e1 != e2 share a flat endpoint.
Turn classify_turn(const FlatBall& b, const FullEdge& e1, const FullEdge& e2);
/// Path as alternating flat, singular, ..., flat ball indices. Legal turns + 1.
int coarse_length(const FlatBall& b, const std::vector<int>& path);

/// D∞(f1, f2) <= 1 for flat keys: some u in both edges with r1^-1 r2 ∈ <St(u)>.
bool same_parallel_set(const Raag& group, const CosetKey& f1, const CosetKey& f2);
bool same_parallel_set(const FlatBall& b, int f1, int f2);
/// D∞(f1, f2) <= 2: a in edge 1, c in edge 2, a = c or a ~ c, and
/// r1^-1 r2 ∈ <St(a)><St(c)>.
bool within_coarse_two(const Raag& group, const CosetKey& f1, const CosetKey& f2);

/// Full-edge path realizing D∞ <= 1 (stalling) or <= 2 as a sequence of
/// keys, flat first and last. Empty when the bound does not hold.
std::vector<CosetKey> stalling_path(const Raag& group, const CosetKey& f1, const CosetKey& f2);
std::vector<CosetKey> coarse_two_path(const Raag& group, const CosetKey& f1, const CosetKey& f2);
int coarse_length(const Raag& group, const std::vector<CosetKey>& path);

struct CoarseDistance {
  std::optional<int> value;  // exact when certified
  int lower_bound = 0;
  std::optional<int> ball_upper_bound;  // best path found inside the ball
};
/// Exact for D∞ <= 3 when the ball contains a witness; otherwise reports the
/// certified lower bound and the in-ball upper bound.
CoarseDistance coarse_distance(const FlatBall& b, int f1, int f2);
/// Turn-cost shortest path inside the ball (0-1 Dijkstra), or nullopt.
std::optional<int> ball_coarse_distance(const FlatBall& b, int f1, int f2);
/// Flats of the ball reachable from f by stalling paths inside the ball.
std::vector<int> stalling_component(const FlatBall& b, int f);

struct ParallelSetSlice {
  int singular = -1;
  std::vector<int> flats;  // sorted ball indices
};
ParallelSetSlice parallel_set_slice(const FlatBall& b, int singular);
/// Components of the ball 1-skeleton, minus the closed stars of the slice's
/// flats, that contain a cone vertex.
int slice_complement_components(const FlatBall& b, const ParallelSetSlice& s);

enum class ParallelIntersection { Equal, StandardFlat, Small };
ParallelIntersection classify_parallel_intersection(const DefiningGraph& g, Vertex u, Vertex v);
std::string to_string(ParallelIntersection p);

enum class QuarterPlaneCase { Case1, Case2, Case3 };
/// Throws PreconditionError unless both labels are nonempty and span a join.
QuarterPlaneCase quarter_plane_case(const DefiningGraph& g, const VertexSet& alpha, const VertexSet& beta);
std::string to_string(QuarterPlaneCase c);

// ---- hyperplanes ----------------------------------------------------------------

/// Hyperplane of type t through the coset rep<Lk(t)>.
struct HyperplaneKey {
  Vertex type = -1;
  Word rep;
  auto operator<=>(const HyperplaneKey&) const = default;
};

/// Hyperplane dual to the edge between vertex keys a and b of F.
/// Throws PreconditionError if they are not adjacent in F.
HyperplaneKey dual_hyperplane(const Raag& group, const CosetKey& a, const CosetKey& b);
/// The neighbour of x across hyperplane h, or nullopt if x is not on the
/// carrier of h.
std::optional<CosetKey> across(const Raag& group, const CosetKey& x, const HyperplaneKey& h);
/// Whether keys a, b are adjacent vertices of F.
bool adjacent_in_f(const Raag& group, const CosetKey& a, const CosetKey& b);
/// Whether (c, s1, f, s2) is a square of F.
bool is_square(const Raag& group, const CosetKey& c, const CosetKey& s1, const CosetKey& f, const CosetKey& s2);

}  // namespace raag
