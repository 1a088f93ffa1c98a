#include "raag/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>

#include "raag/error.hpp"

namespace raag {

void validate_cycle(const Raag& group, const FullEdgeCycle& c) {
  const std::size_t n = c.flats.size();
  if (n < 3 || c.singulars.size() != n) throw PreconditionError("cycle required: need at least 3 full edges");
  std::set<CosetKey> flats(c.flats.begin(), c.flats.end()), singulars(c.singulars.begin(), c.singulars.end());
  if (flats.size() != n || singulars.size() != n) throw PreconditionError("cycle required: repeated vertex");
  for (std::size_t i = 0; i < n; ++i) {
    if (c.flats[i].kind != VertexKind::Flat || c.singulars[i].kind != VertexKind::Singular)
      throw PreconditionError("cycle required: full edges alternate flat and singular vertices");
    if (!adjacent_in_f(group, c.singulars[i], c.flats[i]) || !adjacent_in_f(group, c.singulars[i], c.flats[(i + 1) % n]))
      throw PreconditionError("cycle required: consecutive vertices are not adjacent");
  }
}

FullEdgeCycle lift_cycle(const Raag& group, const EmbeddedCycle& cycle) {
  FullEdgeCycle c;
  const std::size_t n = cycle.length();
  for (std::size_t i = 0; i < n; ++i) {
    c.flats.push_back(coset_key(group, {}, VertexKind::Flat, cycle[i], cycle[i + 1]));
    c.singulars.push_back(coset_key(group, {}, VertexKind::Singular, cycle[i + 1]));
  }
  return c;
}

std::optional<FullEdgeCycle> glue_lifts(const Raag& group, const EmbeddedCycle& cycle, const std::vector<Word>& translates) {
  // Full edge: (singular, lower flat, upper flat).
  std::map<std::tuple<CosetKey, CosetKey, CosetKey>, int> count;
  for (const Word& g : translates) {
    Word x = group.normal_form(g);
    for (std::size_t i = 0; i < cycle.length(); ++i) {
      auto f1 = coset_key(group, x, VertexKind::Flat, cycle[i], cycle[i + 1]);
      auto f2 = coset_key(group, x, VertexKind::Flat, cycle[i + 1], cycle[i + 2]);
      auto s = coset_key(group, x, VertexKind::Singular, cycle[i + 1]);
      ++count[{s, std::min(f1, f2), std::max(f1, f2)}];
    }
  }
  std::map<CosetKey, std::vector<std::pair<CosetKey, CosetKey>>> at;  // flat -> (singular, other flat)
  for (const auto& [e, k] : count) {
    if (k > 2) return std::nullopt;
    if (k == 2) continue;
    const auto& [s, f1, f2] = e;
    at[f1].emplace_back(s, f2);
    at[f2].emplace_back(s, f1);
  }
  if (at.empty()) return std::nullopt;
  for (const auto& [f, es] : at)
    if (es.size() != 2) return std::nullopt;
  FullEdgeCycle c;
  CosetKey start = at.begin()->first, cur = start, prev_s;
  bool first = true;
  do {
    const auto& es = at[cur];
    const auto& next = first || es[0].first != prev_s ? es[0] : es[1];
    c.flats.push_back(cur);
    c.singulars.push_back(next.first);
    prev_s = next.first;
    cur = next.second;
    first = false;
    if (c.flats.size() > at.size()) return std::nullopt;
  } while (cur != start);
  if (c.flats.size() != at.size()) return std::nullopt;
  try {
    validate_cycle(group, c);
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
  return c;
}

namespace {

constexpr std::size_t kMaxFillings = 200000;

// Non-crossing perfect matchings of sorted circle positions.
void matchings(const std::vector<int>& pts, std::size_t lo, std::size_t hi,
               std::vector<std::pair<int, int>>& cur, std::vector<std::vector<std::pair<int, int>>>& out) {
  if (lo >= hi) {
    out.push_back(cur);
    return;
  }
  for (std::size_t k = lo + 1; k < hi; k += 2) {
    cur.emplace_back(pts[lo], pts[k]);
    std::vector<std::vector<std::pair<int, int>>> inner;
    std::vector<std::pair<int, int>> tmp;
    matchings(pts, lo + 1, k, tmp, inner);
    for (auto& m : inner) {
      auto saved = cur.size();
      cur.insert(cur.end(), m.begin(), m.end());
      matchings(pts, k + 1, hi, cur, out);
      cur.resize(saved);
    }
    cur.pop_back();
  }
}

bool chords_cross(const DiagramArc& x, const DiagramArc& y) {
  return (x.a < y.a && y.a < x.b && x.b < y.b) || (y.a < x.a && x.a < y.b && y.b < x.b);
}

struct Point {
  double x, y;
};

// Planar map of the boundary circle plus straight chords.
struct PlanarMap {
  struct Half {
    int to;
    int arc;  // -1 on the circle
    double angle;
  };
  std::vector<Point> pos;
  std::vector<std::vector<Half>> out;  // sorted by angle
  std::vector<int> face_of;           // per half-edge, flattened
  std::vector<int> offset;
  int faces = 0;
  int edges = 0;

  int half_id(int node, int k) const { return offset[node] + k; }
  int index_of(int node, int to, int arc) const {
    for (std::size_t k = 0; k < out[node].size(); ++k)
      if (out[node][k].to == to && out[node][k].arc == arc) return static_cast<int>(k);
    throw InvariantError("planar map: missing twin half-edge");
  }
};

struct Crossing {
  int node;
  int arc1, arc2;
};

PlanarMap build_map(int n_points, const std::vector<DiagramArc>& arcs, std::vector<Crossing>& crossings) {
  // Nodes 0..N-1: boundary vertices; N..2N-1: crossing points on boundary edges.
  const int N = n_points;
  const double step = 2.0 * std::numbers::pi / N;
  PlanarMap m;
  m.pos.resize(2 * N);
  for (int k = 0; k < N; ++k) {
    m.pos[k] = {std::cos(step * k), std::sin(step * k)};
    m.pos[N + k] = {std::cos(step * (k + 0.5)), std::sin(step * (k + 0.5))};
  }
  std::vector<std::vector<std::pair<double, int>>> along(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      if (!chords_cross(arcs[i], arcs[j])) continue;
      Point p = m.pos[N + arcs[i].a], q = m.pos[N + arcs[i].b];
      Point r = m.pos[N + arcs[j].a], s = m.pos[N + arcs[j].b];
      double dx = q.x - p.x, dy = q.y - p.y, ex = s.x - r.x, ey = s.y - r.y;
      double den = dx * ey - dy * ex;
      double t = ((r.x - p.x) * ey - (r.y - p.y) * ex) / den;
      double u = ((r.x - p.x) * dy - (r.y - p.y) * dx) / den;
      int node = static_cast<int>(m.pos.size());
      m.pos.push_back({p.x + t * dx, p.y + t * dy});
      along[i].emplace_back(t, node);
      along[j].emplace_back(u, node);
      crossings.push_back({node, static_cast<int>(i), static_cast<int>(j)});
    }
  m.out.assign(m.pos.size(), {});
  auto angle_to = [&](int from, int to) { return std::atan2(m.pos[to].y - m.pos[from].y, m.pos[to].x - m.pos[from].x); };
  auto add = [&](int a, int b, int arc, double ang_ab, double ang_ba) {
    m.out[a].push_back({b, arc, ang_ab});
    m.out[b].push_back({a, arc, ang_ba});
    ++m.edges;
  };
  for (int k = 0; k < N; ++k) {
    double tv = step * k, tp = step * (k + 0.5), tn = step * (k + 1);
    // Circle segments use tangent directions at each end.
    add(k, N + k, -1, tv + std::numbers::pi / 2, tp - std::numbers::pi / 2);
    add(N + k, (k + 1) % N, -1, tp + std::numbers::pi / 2, tn - std::numbers::pi / 2);
  }
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    auto& pts = along[i];
    std::sort(pts.begin(), pts.end());
    std::vector<int> chain{N + arcs[i].a};
    for (auto& [t, node] : pts) chain.push_back(node);
    chain.push_back(N + arcs[i].b);
    for (std::size_t k = 0; k + 1 < chain.size(); ++k)
      add(chain[k], chain[k + 1], static_cast<int>(i), angle_to(chain[k], chain[k + 1]), angle_to(chain[k + 1], chain[k]));
  }
  m.offset.assign(m.out.size() + 1, 0);
  for (std::size_t v = 0; v < m.out.size(); ++v) {
    for (auto& h : m.out[v]) h.angle = std::remainder(h.angle, 2 * std::numbers::pi);
    std::sort(m.out[v].begin(), m.out[v].end(), [](const auto& x, const auto& y) { return x.angle < y.angle; });
    m.offset[v + 1] = m.offset[v] + static_cast<int>(m.out[v].size());
  }
  // Trace faces keeping each face on the left of its half-edges.
  m.face_of.assign(m.offset.back(), -1);
  for (std::size_t v = 0; v < m.out.size(); ++v)
    for (std::size_t k = 0; k < m.out[v].size(); ++k) {
      if (m.face_of[m.half_id(static_cast<int>(v), static_cast<int>(k))] >= 0) continue;
      int node = static_cast<int>(v), idx = static_cast<int>(k);
      while (m.face_of[m.half_id(node, idx)] < 0) {
        m.face_of[m.half_id(node, idx)] = m.faces;
        const auto& h = m.out[node][idx];
        int back = m.index_of(h.to, node, h.arc);
        int deg = static_cast<int>(m.out[h.to].size());
        idx = (back + deg - 1) % deg;
        node = h.to;
      }
      ++m.faces;
    }
  if (static_cast<int>(m.out.size()) - m.edges + m.faces != 2) throw InvariantError("planar map violates Euler's formula");
  return m;
}

struct Evaluated {
  bool valid = false;
  bool outside_ball = false;
  DiskDiagram diagram;
};

Evaluated evaluate(const FlatBall& b, const FullEdgeCycle& c, std::vector<DiagramArc> arcs) {
  const Raag& G = b.group();
  Evaluated ev;
  std::sort(arcs.begin(), arcs.end());
  const int N = static_cast<int>(2 * c.length());
  std::vector<std::pair<int, int>> cross;
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j)
      if (chords_cross(arcs[i], arcs[j])) {
        // Crossing hyperplanes have adjacent types.
        if (!G.graph().adjacent(arcs[i].hyperplane.type, arcs[j].hyperplane.type)) return ev;
        cross.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
  std::set<std::pair<int, int>> cross_set(cross.begin(), cross.end());
  for (auto [i, j] : cross)
    for (std::size_t k = j + 1; k < arcs.size(); ++k)
      if (cross_set.count({i, static_cast<int>(k)}) && cross_set.count({j, static_cast<int>(k)})) return ev;

  std::vector<Crossing> crossings;
  PlanarMap m = build_map(N, arcs, crossings);
  const int outer = m.face_of[m.half_id(N, m.index_of(N, 0, -1))];

  // Per face: boundary vertices and sides.
  std::vector<std::vector<int>> bverts(m.faces);
  std::vector<std::vector<std::pair<int, int>>> sides(m.faces);  // (arc, neighbouring face)
  for (std::size_t v = 0; v < m.out.size(); ++v)
    for (std::size_t k = 0; k < m.out[v].size(); ++k) {
      int f = m.face_of[m.half_id(static_cast<int>(v), static_cast<int>(k))];
      if (f == outer) continue;
      if (static_cast<int>(v) < N) bverts[f].push_back(static_cast<int>(v));
    }
  // Sides in walk order: follow each face's cycle once.
  std::vector<char> done(m.faces, 0);
  for (std::size_t v = 0; v < m.out.size(); ++v)
    for (std::size_t k = 0; k < m.out[v].size(); ++k) {
      int f = m.face_of[m.half_id(static_cast<int>(v), static_cast<int>(k))];
      if (f == outer || done[f]) continue;
      done[f] = 1;
      int node = static_cast<int>(v), idx = static_cast<int>(k);
      do {
        const auto& h = m.out[node][idx];
        int back = m.index_of(h.to, node, h.arc);
        if (h.arc >= 0) sides[f].emplace_back(h.arc, m.face_of[m.half_id(h.to, back)]);
        int deg = static_cast<int>(m.out[h.to].size());
        idx = (back + deg - 1) % deg;
        node = h.to;
      } while (!(node == static_cast<int>(v) && idx == static_cast<int>(k)));
    }
  for (int f = 0; f < m.faces; ++f)
    if (f != outer && bverts[f].size() > 1) return ev;  // separating cell

  // Label faces by walking across arcs from the boundary.
  std::vector<std::optional<CosetKey>> label(m.faces);
  std::vector<int> queue;
  for (int f = 0; f < m.faces; ++f)
    if (f != outer && !bverts[f].empty()) {
      label[f] = c.vertex(bverts[f][0]);
      queue.push_back(f);
    }
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int f = queue[h];
    for (auto [arc, g] : sides[f]) {
      auto next = across(G, *label[f], arcs[arc].hyperplane);
      if (!next) return ev;
      if (!label[g]) {
        label[g] = *next;
        queue.push_back(g);
      } else if (*label[g] != *next) {
        return ev;
      }
    }
  }
  for (int f = 0; f < m.faces; ++f)
    if (f != outer && !label[f]) throw InvariantError("diagram region unreachable from the boundary");

  // Squares at crossings.
  for (const auto& x : crossings) {
    std::vector<CosetKey> around;
    for (std::size_t k = 0; k < m.out[x.node].size(); ++k) around.push_back(*label[m.face_of[m.half_id(x.node, static_cast<int>(k))]]);
    if (around.size() != 4) throw InvariantError("crossing of degree other than 4");
    auto cone = std::find_if(around.begin(), around.end(), [](const auto& k) { return k.kind == VertexKind::Cone; });
    if (cone == around.end()) return ev;
    std::rotate(around.begin(), cone, around.end());
    if (!is_square(G, around[0], around[1], around[2], around[3])) return ev;
  }
  ev.valid = true;
  for (int f = 0; f < m.faces; ++f)
    if (f != outer && !b.find(*label[f])) ev.outside_ball = true;

  // Assemble in canonical order.
  std::vector<int> face_ids;
  for (int f = 0; f < m.faces; ++f)
    if (f != outer) face_ids.push_back(f);
  auto region_order = [&](int f) {
    return std::make_tuple(bverts[f].empty(), bverts[f].empty() ? -1 : bverts[f][0], *label[f]);
  };
  std::sort(face_ids.begin(), face_ids.end(), [&](int x, int y) { return region_order(x) < region_order(y); });
  std::vector<int> region_of(m.faces, -1);
  for (std::size_t i = 0; i < face_ids.size(); ++i) region_of[face_ids[i]] = static_cast<int>(i);
  DiskDiagram& d = ev.diagram;
  d.boundary = c;
  d.arcs = std::move(arcs);
  d.crossings = std::move(cross);
  for (int f : face_ids) {
    DiagramRegion r;
    r.vertex = *label[f];
    r.internal = bverts[f].empty();
    r.boundary_vertex = r.internal ? -1 : bverts[f][0];
    auto s = sides[f];
    if (!s.empty()) std::rotate(s.begin(), std::min_element(s.begin(), s.end()), s.end());
    for (auto [arc, g] : s) {
      r.side_arcs.push_back(arc);
      r.across.push_back(region_of[g]);
    }
    if (r.internal) d.core.push_back(static_cast<int>(d.regions.size()));
    d.regions.push_back(std::move(r));
  }
  return ev;
}

bool same_shape(const DiskDiagram& x, const DiskDiagram& y) { return x.arcs == y.arcs; }

}  // namespace

std::vector<DiskDiagram> all_fillings(const FlatBall& b, const FullEdgeCycle& c, unsigned seed) {
  const Raag& G = b.group();
  validate_cycle(G, c);
  const int N = static_cast<int>(2 * c.length());
  for (int k = 0; k < N; ++k)
    if (!b.find(c.vertex(k))) throw PreconditionError("insufficient radius: cycle leaves the ball");
  std::map<HyperplaneKey, std::vector<int>> by_plane;
  for (int j = 0; j < N; ++j) by_plane[dual_hyperplane(G, c.vertex(j), c.vertex((j + 1) % N))].push_back(j);
  std::vector<std::pair<HyperplaneKey, std::vector<std::vector<std::pair<int, int>>>>> options;
  std::size_t total = 1;
  for (auto& [h, pts] : by_plane) {
    if (pts.size() % 2) throw InvariantError("hyperplane crossed an odd number of times by a closed loop");
    std::vector<std::vector<std::pair<int, int>>> ms;
    std::vector<std::pair<int, int>> cur;
    matchings(pts, 0, pts.size(), cur, ms);
    total *= ms.size();
    if (total > kMaxFillings) throw PreconditionError("diagram search space too large");
    options.emplace_back(h, std::move(ms));
  }
  if (seed != 0) {
    std::mt19937 rng(seed);
    std::shuffle(options.begin(), options.end(), rng);
    for (auto& [h, ms] : options) std::shuffle(ms.begin(), ms.end(), rng);
  }
  std::vector<DiskDiagram> out;
  bool outside = false;
  std::vector<std::size_t> odo(options.size(), 0);
  for (std::size_t iter = 0; iter < total; ++iter) {
    std::vector<DiagramArc> arcs;
    for (std::size_t h = 0; h < options.size(); ++h)
      for (auto [x, y] : options[h].second[odo[h]]) arcs.push_back({x, y, options[h].first});
    auto ev = evaluate(b, c, std::move(arcs));
    if (ev.valid) {
      if (ev.outside_ball) outside = true;
      else out.push_back(std::move(ev.diagram));
    }
    for (std::size_t h = 0; h < odo.size(); ++h) {
      if (++odo[h] < options[h].second.size()) break;
      odo[h] = 0;
    }
  }
  if (out.empty() && outside) throw PreconditionError("insufficient radius: filling leaves the ball");
  return out;
}

DiskDiagram build_diagram(const FlatBall& b, const FullEdgeCycle& c) {
  auto all = all_fillings(b, c);
  if (all.empty()) throw InvariantError("no valid dual disk diagram found");
  auto best = std::min_element(all.begin(), all.end(), [](const auto& x, const auto& y) {
    return x.crossings.size() != y.crossings.size() ? x.crossings.size() < y.crossings.size() : x.arcs < y.arcs;
  });
  DiskDiagram d = *best;
  d.valid_fillings = static_cast<int>(all.size());
  for (const auto& other : all)
    if (other.crossings.size() == d.crossings.size() && !same_shape(other, d)) d.minimal_unique = false;
  return d;
}

}  // namespace raag
