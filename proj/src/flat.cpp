#include "raag/flat.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "raag/error.hpp"

namespace raag {

namespace {

int kind_offset(VertexKind k) { return k == VertexKind::Cone ? 0 : k == VertexKind::Singular ? 1 : 2; }

std::vector<char> star_indicator(const Raag& group, Vertex u) { return group.indicator(group.graph().closed_star(u)); }

std::vector<char> link_indicator(const Raag& group, Vertex u) {
  VertexSet lk = group.graph().neighbors(u);
  std::sort(lk.begin(), lk.end());
  return group.indicator(lk);
}

Word power(Vertex t, int k) { return Word(std::abs(k), Letter{t, k < 0}); }

Word quotient(const Raag& group, const Word& x, const Word& y) { return group.multiply(group.invert(x), y); }

bool edge_has(const CosetKey& f, Vertex u) { return f.u == u || f.w == u; }

Vertex other_end(const CosetKey& f, Vertex u) { return f.u == u ? f.w : f.u; }

}  // namespace

std::vector<Word> elements_up_to(const Raag& group, int max_len) {
  std::vector<Word> out{{}};
  std::set<Word> seen{{}};
  std::size_t layer_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i)
      for (Vertex v = 0; v < static_cast<Vertex>(group.rank()); ++v)
        for (bool inv : {false, true}) {
          Word w = out[i];
          w.push_back({v, inv});
          w = group.normal_form(w);
          if (static_cast<int>(w.size()) == len && seen.insert(w).second) out.push_back(w);
        }
    layer_begin = layer_end;
  }
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

FlatBall::FlatBall(RaagPtr group, int radius) : group_(std::move(group)), radius_(radius) {
  if (radius < 2) throw PreconditionError("ball radius must be at least 2");
  word_bound_ = (radius - 2) / 2;
  const Raag& G = *group_;
  const auto& g = G.graph();
  std::unordered_map<CosetKey, int, CosetKeyHash> tmp;
  std::vector<CosetKey> keys;
  auto intern = [&](CosetKey k) {
    auto [it, inserted] = tmp.emplace(k, static_cast<int>(keys.size()));
    if (inserted) keys.push_back(std::move(k));
    return it->second;
  };
  std::set<std::pair<int, int>> edge_set;
  std::set<Square> square_set;
  for (const Word& x : elements_up_to(G, word_bound_)) {
    int cone = intern(coset_key(G, x, VertexKind::Cone));
    std::vector<int> sing(g.size());
    for (Vertex u = 0; u < static_cast<Vertex>(g.size()); ++u) {
      sing[u] = intern(coset_key(G, x, VertexKind::Singular, u));
      edge_set.insert({cone, sing[u]});
    }
    for (auto [u, w] : g.edges()) {
      int f = intern(coset_key(G, x, VertexKind::Flat, u, w));
      edge_set.insert({sing[u], f});
      edge_set.insert({sing[w], f});
      square_set.insert({cone, sing[u], f, sing[w]});
    }
  }
  // Reindex by (level, key).
  std::vector<int> order(keys.size());
  std::vector<int> depth(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    order[i] = static_cast<int>(i);
    depth[i] = 2 * static_cast<int>(keys[i].rep.size()) + kind_offset(keys[i].kind);
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return depth[a] != depth[b] ? depth[a] < depth[b] : keys[a] < keys[b];
  });
  std::vector<int> new_index(keys.size());
  for (std::size_t i = 0; i < order.size(); ++i) new_index[order[i]] = static_cast<int>(i);
  keys_.resize(keys.size());
  level_.resize(keys.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    keys_[i] = std::move(keys[order[i]]);
    level_[i] = depth[order[i]];
    index_.emplace(keys_[i], static_cast<int>(i));
  }
  adj_.assign(keys_.size(), {});
  for (auto [a, b] : edge_set) {
    int x = new_index[a], y = new_index[b];
    edges_.emplace_back(std::min(x, y), std::max(x, y));
    adj_[x].push_back(y);
    adj_[y].push_back(x);
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto& a : adj_) std::sort(a.begin(), a.end());
  for (const auto& s : square_set) squares_.push_back({new_index[s[0]], new_index[s[1]], new_index[s[2]], new_index[s[3]]});
  std::sort(squares_.begin(), squares_.end());
  squares_at_.assign(keys_.size(), {});
  for (std::size_t i = 0; i < squares_.size(); ++i)
    for (int v : squares_[i]) squares_at_[v].push_back(static_cast<int>(i));
  dist_.assign(keys_.size(), -1);
  dist_[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : adj_[x])
      if (dist_[y] < 0) {
        dist_[y] = dist_[x] + 1;
        queue.push_back(y);
      }
  }
  // Intern the cyclic stabilizers of singular vertices.
  std::map<CosetKey, int> stab_ids;
  stab_id_.assign(keys_.size(), -1);
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    if (keys_[i].kind != VertexKind::Singular) continue;
    auto [it, inserted] = stab_ids.emplace(stabilizer_key(G, keys_[i]), static_cast<int>(stab_ids.size()));
    stab_id_[i] = it->second;
  }
}

std::optional<int> FlatBall::find(const CosetKey& k) const {
  auto it = index_.find(k);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int FlatBall::index(const CosetKey& k) const {
  auto v = find(k);
  if (!v) throw PreconditionError("vertex " + format_key(graph(), k) + " is outside the ball (insufficient radius)");
  return *v;
}

bool FlatBall::adjacent(int a, int b) const { return std::binary_search(adj_[a].begin(), adj_[a].end(), b); }

FlatBall build_ball(RaagPtr group, int radius) { return FlatBall(std::move(group), radius); }
FlatBall build_ball(const DefiningGraph& g, int radius) { return FlatBall(make_raag(g), radius); }

// ---- structural checks -------------------------------------------------------

Link square_link(const FlatBall& b, int v) {
  Link l;
  l.vertices = b.neighbors(v);
  auto pos = [&](int x) { return static_cast<int>(std::lower_bound(l.vertices.begin(), l.vertices.end(), x) - l.vertices.begin()); };
  for (int si : b.squares_at(v)) {
    const auto& sq = b.squares()[si];
    int p = static_cast<int>(std::find(sq.begin(), sq.end(), v) - sq.begin());
    int x = pos(sq[(p + 1) % 4]), y = pos(sq[(p + 3) % 4]);
    l.edges.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(l.edges.begin(), l.edges.end());
  return l;
}

int link_girth(const Link& l) {
  if (std::adjacent_find(l.edges.begin(), l.edges.end()) != l.edges.end()) return 2;
  int n = static_cast<int>(l.vertices.size());
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : l.edges) {
    if (a == b) return 1;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  int best = kInfiniteGirth;
  for (int r = 0; r < n; ++r) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::vector<int> q{r};
    dist[r] = 0;
    for (std::size_t h = 0; h < q.size(); ++h) {
      int x = q[h];
      for (int y : adj[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push_back(y);
        } else if (parent[x] != y) {
          int len = dist[x] + dist[y] + 1;
          if (best == kInfiniteGirth || len < best) best = len;
        }
      }
    }
  }
  return best;
}

DefiningGraph cone_link_simplicial(const FlatBall& b, int cone) {
  std::set<std::string> names;
  std::set<std::pair<std::string, std::string>> edges;
  for (int si : b.squares_at(cone)) {
    const auto& sq = b.squares()[si];
    auto s1 = format_key(b.graph(), b.key(sq[1]));
    auto f = format_key(b.graph(), b.key(sq[2]));
    auto s2 = format_key(b.graph(), b.key(sq[3]));
    names.insert({s1, f, s2});
    edges.insert({s1, f});
    edges.insert({s2, f});
  }
  for (int s : b.neighbors(cone)) names.insert(format_key(b.graph(), b.key(s)));
  return DefiningGraph(std::vector<std::string>(names.begin(), names.end()),
                       std::vector<std::pair<std::string, std::string>>(edges.begin(), edges.end()));
}

namespace {

// The cone link relabeled by vertex type: g<u> -> "u", g<u,w> -> "u|w".
bool cone_link_is_subdivision(const FlatBall& b, int cone, const DefiningGraph& expected) {
  const auto& g = b.graph();
  std::set<std::string> names;
  std::set<std::pair<std::string, std::string>> edges;
  std::set<std::pair<Vertex, Vertex>> square_link_edges;
  std::size_t singulars = 0;
  for (int s : b.neighbors(cone)) {
    if (b.kind(s) != VertexKind::Singular) return false;
    names.insert(g.name(b.key(s).u));
    ++singulars;
  }
  if (names.size() != singulars) return false;
  for (int si : b.squares_at(cone)) {
    const auto& sq = b.squares()[si];
    const auto& f = b.key(sq[2]);
    std::string mid = g.name(f.u) + "|" + g.name(f.w);
    names.insert(mid);
    edges.insert({g.name(b.key(sq[1]).u), mid});
    edges.insert({g.name(b.key(sq[3]).u), mid});
    if (!square_link_edges.insert({b.key(sq[1]).u, b.key(sq[3]).u}).second) return false;
  }
  if (square_link_edges.size() != g.edge_count()) return false;
  try {
    DefiningGraph got(std::vector<std::string>(names.begin(), names.end()),
                      std::vector<std::pair<std::string, std::string>>(edges.begin(), edges.end()));
    return got == expected;
  } catch (const InputError&) {
    return false;
  }
}

bool singular_link_ok(const FlatBall& b, int s) {
  Link l = square_link(b, s);
  std::size_t cones = 0, flats = 0;
  for (int v : l.vertices) (b.kind(v) == VertexKind::Cone ? cones : flats)++;
  if (static_cast<int>(flats) != b.graph().degree(b.key(s).u)) return false;
  if (l.edges.size() != cones * flats) return false;
  for (auto [x, y] : l.edges)
    if (b.kind(l.vertices[x]) == b.kind(l.vertices[y])) return false;
  return std::adjacent_find(l.edges.begin(), l.edges.end()) == l.edges.end();
}

bool flat_window_ok(const FlatBall& b, int f) {
  const Raag& G = b.group();
  const auto& key = b.key(f);
  int k = (b.word_bound() - static_cast<int>(key.rep.size())) / 2;
  if (k < 1) return true;
  Vertex u = key.u, w = key.w;
  for (int i = -k; i <= k; ++i)
    for (int j = -k; j <= k; ++j) {
      Word ui = G.multiply(key.rep, power(u, i));
      Word wj = G.multiply(key.rep, power(w, j));
      Word c = G.multiply(ui, power(w, j));
      auto sc = b.find(coset_key(G, c, VertexKind::Cone));
      auto sw = b.find(coset_key(G, ui, VertexKind::Singular, w));
      auto su = b.find(coset_key(G, wj, VertexKind::Singular, u));
      if (!sc || !sw || !su) return false;
      FlatBall::Square sq = u < w ? FlatBall::Square{*sc, *su, f, *sw} : FlatBall::Square{*sc, *sw, f, *su};
      if (!std::binary_search(b.squares().begin(), b.squares().end(), sq)) return false;
    }
  return true;
}

}  // namespace

BallCheck check_ball(const FlatBall& b) {
  BallCheck r;
  r.vertices = b.size();
  r.edges = b.edges().size();
  r.squares = b.squares().size();
  for (std::size_t v = 0; v < b.size(); ++v) {
    switch (b.kind(static_cast<int>(v))) {
      case VertexKind::Cone: ++r.cone; break;
      case VertexKind::Singular: ++r.singular; break;
      case VertexKind::Flat: ++r.flat; break;
    }
  }
  for (auto [x, y] : b.edges()) {
    auto kx = b.kind(x), ky = b.kind(y);
    bool ok = (kx == VertexKind::Singular) != (ky == VertexKind::Singular);
    if (!ok) ++r.bad_edges;
  }
  const Raag& G = b.group();
  for (const auto& sq : b.squares())
    if (!is_square(G, b.key(sq[0]), b.key(sq[1]), b.key(sq[2]), b.key(sq[3]))) ++r.bad_squares;
  DefiningGraph sub = barycentric_subdivision(b.graph());
  for (std::size_t i = 0; i < b.size(); ++i) {
    int v = static_cast<int>(i);
    if (!b.interior(v)) continue;
    ++r.interior_checked;
    int gi = link_girth(square_link(b, v));
    if (gi != kInfiniteGirth && gi < 4) ++r.short_link_cycles;
    switch (b.kind(v)) {
      case VertexKind::Cone:
        if (!cone_link_is_subdivision(b, v, sub)) ++r.bad_cone_links;
        break;
      case VertexKind::Singular:
        if (!singular_link_ok(b, v)) ++r.bad_singular_links;
        break;
      case VertexKind::Flat:
        if (b.level(v) <= b.radius() - 4 && !flat_window_ok(b, v)) ++r.bad_flat_links;
        break;
    }
  }
  return r;
}

// ---- turns, coarse length and parallel sets ----------------------------------

CosetKey stabilizer_key(const Raag& group, const CosetKey& singular) {
  if (singular.kind != VertexKind::Singular) throw PreconditionError("stabilizer key needs a singular vertex");
  CosetKey k;
  k.kind = VertexKind::Singular;
  k.u = singular.u;
  k.rep = group.coset_rep(singular.rep, star_indicator(group, singular.u));
  return k;
}

namespace {

void check_full_edge(const FlatBall& b, const FullEdge& e) {
  auto in = [&](int v) { return v >= 0 && v < static_cast<int>(b.size()); };
  if (!in(e.flat1) || !in(e.singular) || !in(e.flat2) || b.kind(e.flat1) != VertexKind::Flat ||
      b.kind(e.singular) != VertexKind::Singular || b.kind(e.flat2) != VertexKind::Flat || e.flat1 == e.flat2 ||
      !b.adjacent(e.flat1, e.singular) || !b.adjacent(e.singular, e.flat2))
    throw PreconditionError("not a full edge of the ball");
}

}  // namespace

Turn classify_turn(const FlatBall& b, const FullEdge& e1, const FullEdge& e2) {
  check_full_edge(b, e1);
  check_full_edge(b, e2);
  bool same = e1.singular == e2.singular && std::minmax(e1.flat1, e1.flat2) == std::minmax(e2.flat1, e2.flat2);
  bool share = e1.flat1 == e2.flat1 || e1.flat1 == e2.flat2 || e1.flat2 == e2.flat1 || e1.flat2 == e2.flat2;
  if (same || !share) throw PreconditionError("turn needs two distinct full edges sharing a flat vertex");
  return b.stabilizer_id(e1.singular) == b.stabilizer_id(e2.singular) ? Turn::Illegal : Turn::Legal;
}

int coarse_length(const FlatBall& b, const std::vector<int>& path) {
  std::vector<CosetKey> keys;
  for (int v : path) keys.push_back(b.key(v));
  return coarse_length(b.group(), keys);
}

int coarse_length(const Raag& group, const std::vector<CosetKey>& path) {
  if (path.empty() || path.size() % 2 == 0) throw PreconditionError("full-edge path must be flat, singular, ..., flat");
  for (std::size_t i = 0; i < path.size(); ++i) {
    VertexKind want = i % 2 == 0 ? VertexKind::Flat : VertexKind::Singular;
    if (path[i].kind != want) throw PreconditionError("full-edge path must alternate flat and singular vertices");
    if (i > 0 && !adjacent_in_f(group, path[i - 1], path[i])) throw PreconditionError("full-edge path is not connected");
  }
  if (path.size() == 1) return 0;
  int legal = 0;
  for (std::size_t i = 2; i + 2 < path.size(); i += 2)
    if (stabilizer_key(group, path[i - 1]) != stabilizer_key(group, path[i + 1])) ++legal;
  return legal + 1;
}

namespace {

std::optional<Vertex> parallel_direction(const Raag& group, const CosetKey& f1, const CosetKey& f2) {
  Word x = quotient(group, f1.rep, f2.rep);
  for (Vertex u : {f1.u, f1.w})
    if (edge_has(f2, u) && group.coset_rep(x, star_indicator(group, u)).empty()) return u;
  return std::nullopt;
}

void check_flat(const CosetKey& f) {
  if (f.kind != VertexKind::Flat) throw PreconditionError("flat vertex expected");
}

// x y x -> x on an alternating key sequence.
std::vector<CosetKey> reduce_path(const std::vector<CosetKey>& path) {
  std::vector<CosetKey> out;
  for (const auto& k : path) {
    if (!out.empty() && out.back() == k) continue;
    if (out.size() >= 2 && out[out.size() - 2] == k) {
      out.pop_back();
      continue;
    }
    out.push_back(k);
  }
  return out;
}

// Stalling path along direction u; requires r1^-1 r2 ∈ <St(u)>.
std::vector<CosetKey> stall_along(const Raag& group, const CosetKey& f1, const CosetKey& f2, Vertex u) {
  Word b = quotient(group, f1.rep, f2.rep);
  std::vector<CosetKey> path{f1};
  Word r = f1.rep;
  path.push_back(coset_key(group, r, VertexKind::Singular, u));
  for (Letter y : b) {
    Word next = group.multiply(r, Word{y});
    if (y.gen != u) {
      path.push_back(coset_key(group, next, VertexKind::Flat, u, y.gen));
      path.push_back(coset_key(group, next, VertexKind::Singular, u));
    }
    r = std::move(next);
  }
  path.push_back(f2);
  return reduce_path(path);
}

}  // namespace

bool same_parallel_set(const Raag& group, const CosetKey& f1, const CosetKey& f2) {
  check_flat(f1);
  check_flat(f2);
  return f1 == f2 || parallel_direction(group, f1, f2).has_value();
}

bool same_parallel_set(const FlatBall& b, int f1, int f2) { return same_parallel_set(b.group(), b.key(f1), b.key(f2)); }

namespace {

struct TwoWitness {
  Vertex a, c;
  Word p;
};

std::optional<TwoWitness> coarse_two_witness(const Raag& group, const CosetKey& f1, const CosetKey& f2) {
  Word x = quotient(group, f1.rep, f2.rep);
  const auto& g = group.graph();
  for (Vertex a : {f1.u, f1.w})
    for (Vertex c : {f2.u, f2.w}) {
      if (a != c && !g.adjacent(a, c)) continue;
      auto split = group.split_product(x, star_indicator(group, a), star_indicator(group, c));
      if (split) return TwoWitness{a, c, split->first};
    }
  return std::nullopt;
}

}  // namespace

bool within_coarse_two(const Raag& group, const CosetKey& f1, const CosetKey& f2) {
  check_flat(f1);
  check_flat(f2);
  return f1 == f2 || coarse_two_witness(group, f1, f2).has_value();
}

std::vector<CosetKey> stalling_path(const Raag& group, const CosetKey& f1, const CosetKey& f2) {
  check_flat(f1);
  check_flat(f2);
  if (f1 == f2) return {f1};
  auto u = parallel_direction(group, f1, f2);
  if (!u) return {};
  return stall_along(group, f1, f2, *u);
}

std::vector<CosetKey> coarse_two_path(const Raag& group, const CosetKey& f1, const CosetKey& f2) {
  if (same_parallel_set(group, f1, f2)) return stalling_path(group, f1, f2);
  auto wit = coarse_two_witness(group, f1, f2);
  if (!wit) return {};
  CosetKey mid = coset_key(group, group.multiply(f1.rep, wit->p), VertexKind::Flat, wit->a, wit->c);
  auto first = stall_along(group, f1, mid, wit->a);
  auto second = stall_along(group, mid, f2, wit->c);
  first.insert(first.end(), second.begin() + 1, second.end());
  return reduce_path(first);
}

std::optional<int> ball_coarse_distance(const FlatBall& b, int f1, int f2) {
  if (b.kind(f1) != VertexKind::Flat || b.kind(f2) != VertexKind::Flat) throw PreconditionError("flat vertex expected");
  if (f1 == f2) return 0;
  // State: (flat, singular it was entered through); 0-1 BFS.
  std::map<std::pair<int, int>, int> dist;
  std::deque<std::pair<int, int>> q;
  auto relax = [&](int f, int s, int d, bool front) {
    auto [it, inserted] = dist.emplace(std::make_pair(f, s), d);
    if (!inserted) {
      if (it->second <= d) return;
      it->second = d;
    }
    if (front) q.emplace_front(f, s);
    else q.emplace_back(f, s);
  };
  for (int s : b.neighbors(f1))
    for (int f : b.neighbors(s))
      if (f != f1 && b.kind(f) == VertexKind::Flat) relax(f, s, 1, false);
  std::optional<int> best;
  while (!q.empty()) {
    auto [f, s_in] = q.front();
    q.pop_front();
    int d = dist[{f, s_in}];
    if (best && d >= *best) continue;
    if (f == f2) {
      best = d;
      continue;
    }
    for (int s : b.neighbors(f)) {
      bool legal = b.stabilizer_id(s) != b.stabilizer_id(s_in);
      for (int f_next : b.neighbors(s))
        if (f_next != f && b.kind(f_next) == VertexKind::Flat) relax(f_next, s, d + (legal ? 1 : 0), !legal);
    }
  }
  return best;
}

CoarseDistance coarse_distance(const FlatBall& b, int f1, int f2) {
  const Raag& G = b.group();
  CoarseDistance r;
  if (f1 == f2) {
    r.value = 0;
    r.ball_upper_bound = 0;
    return r;
  }
  r.ball_upper_bound = ball_coarse_distance(b, f1, f2);
  if (same_parallel_set(b, f1, f2)) r.value = 1;
  else if (within_coarse_two(G, b.key(f1), b.key(f2))) r.value = 2;
  else if (r.ball_upper_bound == 3) r.value = 3;
  r.lower_bound = r.value ? *r.value : 3;
  return r;
}

std::vector<int> stalling_component(const FlatBall& b, int f) {
  if (b.kind(f) != VertexKind::Flat) throw PreconditionError("flat vertex expected");
  std::set<int> out{f};
  std::set<int> directions;
  for (int s : b.neighbors(f)) directions.insert(b.stabilizer_id(s));
  for (int dir : directions) {
    std::vector<int> stack{f};
    std::set<int> seen{f};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int s : b.neighbors(x)) {
        if (b.stabilizer_id(s) != dir) continue;
        for (int y : b.neighbors(s))
          if (b.kind(y) == VertexKind::Flat && seen.insert(y).second) stack.push_back(y);
      }
    }
    out.insert(seen.begin(), seen.end());
  }
  return {out.begin(), out.end()};
}

ParallelSetSlice parallel_set_slice(const FlatBall& b, int singular) {
  if (b.kind(singular) != VertexKind::Singular) throw PreconditionError("singular vertex expected");
  const Raag& G = b.group();
  const auto& s = b.key(singular);
  auto star = star_indicator(G, s.u);
  ParallelSetSlice slice;
  slice.singular = singular;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const auto& f = b.key(static_cast<int>(i));
    if (f.kind != VertexKind::Flat || !edge_has(f, s.u)) continue;
    if (G.coset_rep(quotient(G, s.rep, f.rep), star).empty()) slice.flats.push_back(static_cast<int>(i));
  }
  return slice;
}

int slice_complement_components(const FlatBall& b, const ParallelSetSlice& s) {
  std::vector<char> removed(b.size(), 0);
  for (int f : s.flats) {
    removed[f] = 1;
    for (int x : b.neighbors(f)) removed[x] = 1;
  }
  std::vector<char> seen(b.size(), 0);
  int count = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (removed[i] || seen[i] || b.kind(static_cast<int>(i)) != VertexKind::Cone) continue;
    ++count;
    std::vector<int> stack{static_cast<int>(i)};
    seen[i] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : b.neighbors(x))
        if (!removed[y] && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
  }
  return count;
}

ParallelIntersection classify_parallel_intersection(const DefiningGraph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= static_cast<Vertex>(g.size()) || v >= static_cast<Vertex>(g.size()))
    throw PreconditionError("vertex out of range");
  if (u == v) return ParallelIntersection::Equal;
  return g.adjacent(u, v) ? ParallelIntersection::StandardFlat : ParallelIntersection::Small;
}

std::string to_string(ParallelIntersection p) {
  switch (p) {
    case ParallelIntersection::Equal: return "equal";
    case ParallelIntersection::StandardFlat: return "standard_flat";
    case ParallelIntersection::Small: return "small";
  }
  return "unknown";
}

QuarterPlaneCase quarter_plane_case(const DefiningGraph& g, const VertexSet& alpha, const VertexSet& beta) {
  if (alpha.empty() || beta.empty()) throw PreconditionError("quarter-plane labels must be nonempty");
  for (Vertex a : alpha)
    for (Vertex b : beta)
      if (!g.adjacent(a, b)) throw PreconditionError("quarter-plane labels must span a join");
  bool one_a = orthogonal_complement(g, alpha).size() == 1;
  bool one_b = orthogonal_complement(g, beta).size() == 1;
  if (one_a && one_b) return QuarterPlaneCase::Case1;
  if (one_a || one_b) return QuarterPlaneCase::Case2;
  return QuarterPlaneCase::Case3;
}

std::string to_string(QuarterPlaneCase c) {
  switch (c) {
    case QuarterPlaneCase::Case1: return "case1";
    case QuarterPlaneCase::Case2: return "case2";
    case QuarterPlaneCase::Case3: return "case3";
  }
  return "unknown";
}

// ---- hyperplanes ----------------------------------------------------------------

bool adjacent_in_f(const Raag& group, const CosetKey& a, const CosetKey& b) {
  if (kind_offset(a.kind) > kind_offset(b.kind)) return adjacent_in_f(group, b, a);
  std::vector<char> in(group.rank(), 0);
  if (a.kind == VertexKind::Cone && b.kind == VertexKind::Singular) {
    in[b.u] = 1;
    return group.coset_rep(a.rep, in) == b.rep;
  }
  if (a.kind == VertexKind::Singular && b.kind == VertexKind::Flat) {
    if (!edge_has(b, a.u)) return false;
    in[b.u] = in[b.w] = 1;
    return group.coset_rep(a.rep, in) == b.rep;
  }
  return false;
}

bool is_square(const Raag& group, const CosetKey& c, const CosetKey& s1, const CosetKey& f, const CosetKey& s2) {
  if (c.kind != VertexKind::Cone || s1.kind != VertexKind::Singular || f.kind != VertexKind::Flat ||
      s2.kind != VertexKind::Singular)
    return false;
  if (s1.u == s2.u || !group.graph().adjacent(s1.u, s2.u)) return false;
  return coset_key(group, c.rep, VertexKind::Singular, s1.u) == s1 &&
         coset_key(group, c.rep, VertexKind::Singular, s2.u) == s2 &&
         coset_key(group, c.rep, VertexKind::Flat, s1.u, s2.u) == f;
}

HyperplaneKey dual_hyperplane(const Raag& group, const CosetKey& a, const CosetKey& b) {
  if (!adjacent_in_f(group, a, b)) throw PreconditionError("dual hyperplane needs an edge of F");
  const CosetKey& lo = kind_offset(a.kind) < kind_offset(b.kind) ? a : b;
  const CosetKey& hi = kind_offset(a.kind) < kind_offset(b.kind) ? b : a;
  HyperplaneKey h;
  if (lo.kind == VertexKind::Cone) {
    h.type = hi.u;
    h.rep = group.coset_rep(lo.rep, link_indicator(group, h.type));
  } else {
    h.type = other_end(hi, lo.u);
    h.rep = group.coset_rep(lo.rep, link_indicator(group, h.type));
  }
  return h;
}

std::optional<CosetKey> across(const Raag& group, const CosetKey& x, const HyperplaneKey& h) {
  const Vertex t = h.type;
  auto lk = link_indicator(group, t);
  switch (x.kind) {
    case VertexKind::Cone:
      if (group.coset_rep(x.rep, lk) != h.rep) return std::nullopt;
      return coset_key(group, x.rep, VertexKind::Singular, t);
    case VertexKind::Singular: {
      if (x.u == t) {
        auto k = group.power_mod_subgroup(quotient(group, x.rep, h.rep), t, lk);
        if (!k) return std::nullopt;
        return coset_key(group, group.multiply(x.rep, power(t, *k)), VertexKind::Cone);
      }
      if (!group.graph().adjacent(x.u, t) || group.coset_rep(x.rep, lk) != h.rep) return std::nullopt;
      return coset_key(group, x.rep, VertexKind::Flat, x.u, t);
    }
    case VertexKind::Flat: {
      if (!edge_has(x, t)) return std::nullopt;
      auto k = group.power_mod_subgroup(quotient(group, x.rep, h.rep), t, lk);
      if (!k) return std::nullopt;
      return coset_key(group, group.multiply(x.rep, power(t, *k)), VertexKind::Singular, other_end(x, t));
    }
  }
  return std::nullopt;
}

}  // namespace raag
