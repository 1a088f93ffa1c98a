#include "raag/cycles.hpp"

#include <algorithm>
#include <functional>

#include "raag/error.hpp"

namespace raag {

struct CycleBuilder {
  static EmbeddedCycle make(std::vector<Vertex> canonical) { return EmbeddedCycle(std::move(canonical)); }
};

namespace {

std::vector<Vertex> canonicalize(std::vector<Vertex> v) {
  auto least = std::min_element(v.begin(), v.end());
  std::rotate(v.begin(), least, v.end());
  if (v.size() > 2 && v.back() < v[1]) std::reverse(v.begin() + 1, v.end());
  return v;
}

void sort_unique(std::vector<EmbeddedCycle>& cycles) {
  std::sort(cycles.begin(), cycles.end());
  cycles.erase(std::unique(cycles.begin(), cycles.end()), cycles.end());
}

// Runs `search(start, out)` for every start vertex, in parallel when asked,
// and returns the sorted union.
std::vector<EmbeddedCycle> per_start(const DefiningGraph& g, Exec exec,
                                     const std::function<void(Vertex, std::vector<EmbeddedCycle>&)>& search) {
  const int n = static_cast<int>(g.size());
  std::vector<std::vector<EmbeddedCycle>> found(n);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int s = 0; s < n; ++s) search(s, found[s]);
  } else {
    for (int s = 0; s < n; ++s) search(s, found[s]);
  }
  std::vector<EmbeddedCycle> out;
  for (auto& f : found) out.insert(out.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
  sort_unique(out);
  return out;
}

}  // namespace

EmbeddedCycle::EmbeddedCycle(const DefiningGraph& g, std::vector<Vertex> vertices) {
  if (vertices.size() < 3) throw InputError("cycle needs at least three vertices");
  auto sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InputError("cycle repeats a vertex");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Vertex a = vertices[i], b = vertices[(i + 1) % vertices.size()];
    if (a < 0 || b < 0 || a >= static_cast<Vertex>(g.size()) || b >= static_cast<Vertex>(g.size()) ||
        !g.adjacent(a, b))
      throw InputError("consecutive cycle vertices are not adjacent");
  }
  v_ = canonicalize(std::move(vertices));
}

int EmbeddedCycle::position(Vertex v) const {
  auto it = std::find(v_.begin(), v_.end(), v);
  return it == v_.end() ? -1 : static_cast<int>(it - v_.begin());
}

int EmbeddedCycle::cycle_distance(int i, int j) const {
  int n = static_cast<int>(v_.size());
  int d = std::abs(i - j) % n;
  return std::min(d, n - d);
}

std::vector<Edge> EmbeddedCycle::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    Vertex a = v_[i], b = v_[(i + 1) % v_.size()];
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  return out;
}

std::vector<EmbeddedCycle> enumerate_cycles(const DefiningGraph& g, int max_len, Exec exec) {
  if (max_len < 3) throw PreconditionError("max_len must be at least 3");
  return per_start(g, exec, [&](Vertex s, std::vector<EmbeddedCycle>& out) {
    std::vector<char> on(g.size(), 0);
    std::vector<Vertex> path{s};
    on[s] = 1;
    std::function<void()> dfs = [&]() {
      Vertex last = path.back();
      for (Vertex w : g.neighbors(last)) {
        if (w == s && path.size() >= 3 && path[1] < last) out.push_back(CycleBuilder::make(path));
        if (w <= s || on[w] || static_cast<int>(path.size()) >= max_len) continue;
        on[w] = 1;
        path.push_back(w);
        dfs();
        path.pop_back();
        on[w] = 0;
      }
    };
    dfs();
  });
}

std::optional<std::vector<Vertex>> find_shortcut(const DefiningGraph& g, const EmbeddedCycle& c, int i) {
  if (i < 1) throw PreconditionError("shortcut length must be at least 1");
  std::vector<char> on(g.size(), 0);
  std::vector<Vertex> path;
  std::function<bool(int)> dfs = [&](int start_pos) -> bool {
    if (static_cast<int>(path.size()) == i + 1) {
      int q = c.position(path.back());
      return q >= 0 && c.cycle_distance(start_pos, q) > i;
    }
    for (Vertex w : g.neighbors(path.back())) {
      if (on[w]) continue;
      on[w] = 1;
      path.push_back(w);
      if (dfs(start_pos)) return true;
      path.pop_back();
      on[w] = 0;
    }
    return false;
  };
  for (int p = 0; p < static_cast<int>(c.length()); ++p) {
    path = {c[p]};
    std::fill(on.begin(), on.end(), 0);
    on[c[p]] = 1;
    if (dfs(p)) return path;
  }
  return std::nullopt;
}

bool is_tight(const DefiningGraph& g, const EmbeddedCycle& c) {
  return !find_shortcut(g, c, 1) && !find_shortcut(g, c, 2);
}

std::vector<EmbeddedCycle> tight_cycles(const DefiningGraph& g, int max_len, Exec exec) {
  if (max_len < 3) throw PreconditionError("max_len must be at least 3");
  return per_start(g, exec, [&](Vertex s, std::vector<EmbeddedCycle>& out) {
    std::vector<int> pos(g.size(), -1);
    std::vector<Vertex> path{s};
    pos[s] = 0;
    // Rejects w when some off-path x adjacent to w and to an earlier path
    // vertex would be a 2-shortcut of every cycle extending path + w.
    auto forces_shortcut = [&](Vertex w, int k) {
      for (Vertex x : g.neighbors(w)) {
        if (pos[x] >= 0) continue;
        for (Vertex y : g.neighbors(x)) {
          int i = pos[y];
          if (i >= 2 && k - i > 2) return true;
        }
      }
      return false;
    };
    std::function<void()> dfs = [&]() {
      Vertex last = path.back();
      int k = static_cast<int>(path.size());
      for (Vertex w : g.neighbors(last)) {
        if (w <= s || pos[w] >= 0) continue;
        // Induced: w may touch only the last vertex and, when closing, s.
        bool chord = false;
        for (Vertex y : g.neighbors(w))
          if (pos[y] > 0 && y != last) chord = true;
        if (chord) continue;
        bool closes = k >= 2 && g.adjacent(w, s);
        if (closes) {
          if (path[1] < w && k + 1 <= max_len) {
            path.push_back(w);
            auto c = CycleBuilder::make(path);
            if (is_tight(g, c)) out.push_back(std::move(c));
            path.pop_back();
          }
          continue;
        }
        if (k + 1 >= max_len || forces_shortcut(w, k)) continue;
        pos[w] = k;
        path.push_back(w);
        dfs();
        path.pop_back();
        pos[w] = -1;
      }
    };
    dfs();
  });
}

bool WhiteheadGraph::connected() const {
  if (link.size() <= 1) return true;
  std::vector<char> seen(link.size(), 0);
  auto idx = [&](Vertex v) { return static_cast<std::size_t>(std::lower_bound(link.begin(), link.end(), v) - link.begin()); };
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t a = stack.back();
    stack.pop_back();
    for (auto [x, y] : edges) {
      std::size_t ix = idx(x), iy = idx(y), other;
      if (ix == a) other = iy;
      else if (iy == a) other = ix;
      else continue;
      if (!seen[other]) {
        seen[other] = 1;
        ++count;
        stack.push_back(other);
      }
    }
  }
  return count == link.size();
}

WhiteheadGraph whitehead_graph(const DefiningGraph& g, Vertex v, const std::vector<EmbeddedCycle>& tight) {
  if (v < 0 || v >= static_cast<Vertex>(g.size())) throw PreconditionError("vertex out of range");
  WhiteheadGraph wh;
  wh.base = v;
  wh.link = g.neighbors(v);
  std::sort(wh.link.begin(), wh.link.end());
  for (const auto& c : tight) {
    int p = c.position(v);
    if (p < 0) continue;
    int n = static_cast<int>(c.length());
    Vertex a = c[(p + n - 1) % n], b = c[(p + 1) % n];
    wh.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(wh.edges.begin(), wh.edges.end());
  wh.edges.erase(std::unique(wh.edges.begin(), wh.edges.end()), wh.edges.end());
  return wh;
}

WhiteheadGraph whitehead_graph(const DefiningGraph& g, Vertex v, int max_len) {
  return whitehead_graph(g, v, tight_cycles(g, std::max(max_len, 3)));
}

WhiteheadLemmaReport check_whitehead_lemma(const DefiningGraph& g) {
  if (g.empty() || !is_connected(g)) throw PreconditionError("Whitehead lemma check requires a connected graph");
  int gi = girth(g);
  if (gi != kInfiniteGirth && gi < 5) throw PreconditionError("Whitehead lemma check requires girth >= 5");
  auto tight = tight_cycles(g, std::max<int>(3, static_cast<int>(g.size())));
  auto cuts = cut_vertices(g);
  WhiteheadLemmaReport report;
  report.pass = true;
  for (Vertex v = 0; v < static_cast<Vertex>(g.size()); ++v) {
    WhiteheadLemmaRow row;
    row.vertex = v;
    row.whitehead_connected = whitehead_graph(g, v, tight).connected();
    row.cut_vertex = std::binary_search(cuts.begin(), cuts.end(), v);
    row.agrees = row.whitehead_connected != row.cut_vertex;
    report.pass = report.pass && row.agrees;
    report.rows.push_back(row);
  }
  return report;
}

ColoringLemmaResult check_coloring_lemma(const DefiningGraph& g, const EdgeColoring& coloring,
                                         const std::vector<EmbeddedCycle>& tight) {
  if (coloring.size() != g.edge_count()) throw PreconditionError("coloring must assign a color to every edge");
  ColoringLemmaResult r;
  std::vector<Edge> gray;
  bool any_black = false, any_white = false;
  for (std::size_t i = 0; i < coloring.size(); ++i) {
    if (coloring[i] == EdgeColor::Gray) gray.push_back(g.edges()[i]);
    any_black = any_black || coloring[i] == EdgeColor::Black;
    any_white = any_white || coloring[i] == EdgeColor::White;
  }
  r.gray_edges_meet = true;
  for (std::size_t i = 0; i < gray.size() && r.gray_edges_meet; ++i)
    for (std::size_t j = i + 1; j < gray.size(); ++j) {
      auto [a, b] = gray[i];
      auto [c, d] = gray[j];
      if (a != c && a != d && b != c && b != d) {
        r.gray_edges_meet = false;
        break;
      }
    }
  r.tight_cycles_monochrome = true;
  for (const auto& c : tight) {
    bool black = false, white = false;
    for (auto [a, b] : c.edges()) {
      auto col = coloring[*g.edge_index(a, b)];
      black = black || col == EdgeColor::Black;
      white = white || col == EdgeColor::White;
    }
    if (black && white) {
      r.tight_cycles_monochrome = false;
      break;
    }
  }
  r.valid_hypotheses = r.gray_edges_meet && r.tight_cycles_monochrome;
  r.conclusion_holds = !any_black || !any_white;
  return r;
}

ColoringLemmaResult check_coloring_lemma(const DefiningGraph& g, const EdgeColoring& coloring) {
  if (g.empty() || !check_atomic(g).is_atomic) throw PreconditionError("coloring lemma requires an atomic graph");
  return check_coloring_lemma(g, coloring, tight_cycles(g, static_cast<int>(g.size())));
}

}  // namespace raag
