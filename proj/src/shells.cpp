#include <algorithm>
#include <exception>
#include <map>
#include <set>

#include "raag/diagram.hpp"
#include "raag/error.hpp"

namespace raag {

std::vector<std::string> check_diagram(const Raag& group, const DiskDiagram& d) {
  std::vector<std::string> bad;
  std::set<std::pair<int, int>> cross(d.crossings.begin(), d.crossings.end());
  for (auto [i, j] : d.crossings)
    for (std::size_t k = j + 1; k < d.arcs.size(); ++k)
      if (cross.count({i, static_cast<int>(k)}) && cross.count({j, static_cast<int>(k)}))
        bad.push_back("three pairwise crossing arcs");
  if (d.core.empty()) bad.push_back("empty core");
  std::set<int> seen_boundary;
  std::map<int, std::vector<std::pair<int, int>>> arc_sides;  // arc -> (region, across)
  for (std::size_t r = 0; r < d.regions.size(); ++r) {
    const auto& reg = d.regions[r];
    if (!reg.internal && !seen_boundary.insert(reg.boundary_vertex).second) bad.push_back("separating cell");
    if (reg.vertex.kind == VertexKind::Cone && !reg.internal) bad.push_back("cone region on the boundary");
    if (!reg.internal && reg.side_arcs.size() == 2 &&
        cross.count({std::min(reg.side_arcs[0], reg.side_arcs[1]), std::max(reg.side_arcs[0], reg.side_arcs[1])}) &&
        reg.vertex.kind != VertexKind::Flat)
      bad.push_back("corner region is not flat");
    for (std::size_t k = 0; k < reg.side_arcs.size(); ++k) {
      const auto& other = d.regions[reg.across[k]].vertex;
      if (!adjacent_in_f(group, reg.vertex, other)) bad.push_back("regions across an arc are not adjacent");
      arc_sides[reg.side_arcs[k]].emplace_back(static_cast<int>(r), reg.across[k]);
    }
  }
  if (seen_boundary.size() != 2 * d.boundary.length()) bad.push_back("boundary vertex without a region");
  // One side of each arc holds cones and off-type singulars, the other flats
  // and singulars of the arc's type; the flats form one parallel set.
  for (const auto& [arc, pairs] : arc_sides) {
    const Vertex t = d.arcs[arc].hyperplane.type;
    auto flat_side = [&](const CosetKey& k) {
      return k.kind == VertexKind::Flat || (k.kind == VertexKind::Singular && k.u == t);
    };
    std::vector<CosetKey> flats;
    for (auto [r, o] : pairs) {
      const auto& x = d.regions[r].vertex;
      const auto& y = d.regions[o].vertex;
      if (flat_side(x) == flat_side(y)) bad.push_back("arc " + std::to_string(arc) + " separates regions of one side");
      if (x.kind == VertexKind::Flat) flats.push_back(x);
    }
    for (std::size_t k = 1; k < flats.size(); ++k)
      if (!same_parallel_set(group, flats[0], flats[k]))
        bad.push_back("flat side of arc " + std::to_string(arc) + " is not a stalling path");
  }
  return bad;
}

std::string to_string(ShellClass s) {
  switch (s) {
    case ShellClass::Zero: return "0-shell";
    case ShellClass::One: return "1-shell";
    case ShellClass::Two: return "2-shell";
    case ShellClass::None: return "none";
  }
  return "none";
}

std::string to_string(ShellCase s) {
  switch (s) {
    case ShellCase::SingleCell: return "single_cell";
    case ShellCase::Two1Shells: return "two_1shells";
    case ShellCase::One1ShellTwo2Shells: return "one_1shell_two_2shells";
    case ShellCase::Four2Shells: return "four_2shells";
    case ShellCase::Other: return "other";
  }
  return "other";
}

ShellReport shell_report(const DiskDiagram& d) {
  if (d.core.empty()) throw PreconditionError("shell report needs a nonempty core");
  ShellReport rep;
  std::set<int> core(d.core.begin(), d.core.end());
  std::map<int, std::set<int>> dual;
  int ones = 0, twos = 0;
  for (int r : d.core) {
    const auto& reg = d.regions[r];
    ShellRecord rec;
    rec.region = r;
    rec.sides = static_cast<int>(reg.side_arcs.size());
    std::vector<char> inner(rec.sides);
    for (int k = 0; k < rec.sides; ++k) {
      inner[k] = core.count(reg.across[k]) > 0;
      if (inner[k]) {
        ++rec.internal_sides;
        dual[r].insert(reg.across[k]);
      }
    }
    for (int k = 0; k < rec.sides; ++k)
      if (!inner[k] && !inner[(k + 1) % rec.sides]) ++rec.corners;
    rec.score = rec.corners - rec.sides + 4;
    rec.shell = rec.score == 4 ? ShellClass::Zero
              : rec.score == 2 ? ShellClass::One
              : rec.score == 1 ? ShellClass::Two
                               : ShellClass::None;
    ones += rec.shell == ShellClass::One;
    twos += rec.shell == ShellClass::Two;
    rep.total_score += rec.score;
    rep.records.push_back(rec);
  }
  const int k = static_cast<int>(d.core.size());
  if (k == 1) rep.shell_case = ShellCase::SingleCell;
  else if (ones >= 2) rep.shell_case = ShellCase::Two1Shells;
  else if (ones >= 1 && twos >= 2) rep.shell_case = ShellCase::One1ShellTwo2Shells;
  else if (twos >= 4) rep.shell_case = ShellCase::Four2Shells;
  // Ladder: the core's adjacency graph is a path.
  if (k >= 2) {
    int ends = 0, edges = 0;
    bool ok = true;
    for (int r : d.core) {
      int deg = static_cast<int>(dual[r].size());
      edges += deg;
      ends += deg == 1;
      ok = ok && deg >= 1 && deg <= 2;
    }
    std::set<int> seen{d.core[0]};
    std::vector<int> stack{d.core[0]};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : dual[x])
        if (seen.insert(y).second) stack.push_back(y);
    }
    rep.ladder = ok && ends == 2 && edges / 2 == k - 1 && static_cast<int>(seen.size()) == k;
  }
  return rep;
}

int cycle_arc_length(const Raag& group, const FullEdgeCycle& c, int p, int q) {
  const int n = static_cast<int>(c.length());
  if (p == q) return 0;
  int legal = 0;
  for (int k = (p + 1) % n; k != q; k = (k + 1) % n)
    if (stabilizer_key(group, c.singulars[(k + n - 1) % n]) != stabilizer_key(group, c.singulars[k])) ++legal;
  return legal + 1;
}

std::optional<CutWitness> find_icut(const FlatBall& b, const FullEdgeCycle& c, int i) {
  if (i != 1 && i != 2) throw PreconditionError("i-cuts are defined for i in {1, 2}");
  const Raag& G = b.group();
  validate_cycle(G, c);
  for (std::size_t k = 0; k < c.length(); ++k)
    if (!b.find(c.flats[k]) || !b.find(c.singulars[k])) throw PreconditionError("insufficient radius: cycle leaves the ball");
  const int n = static_cast<int>(c.length());
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      if (cycle_arc_length(G, c, p, q) <= i || cycle_arc_length(G, c, q, p) <= i) continue;
      std::vector<CosetKey> path = stalling_path(G, c.flats[p], c.flats[q]);
      if (path.empty() && i == 2) path = coarse_two_path(G, c.flats[p], c.flats[q]);
      if (path.empty()) continue;
      return CutWitness{i, p, q, std::move(path)};
    }
  return std::nullopt;
}

bool is_taut(const FlatBall& b, const FullEdgeCycle& c) { return !find_icut(b, c, 1) && !find_icut(b, c, 2); }

bool verify_taut_diagram_lemma(const FlatBall& b, const FullEdgeCycle& c) {
  if (!is_taut(b, c)) throw PreconditionError("the diagram lemma needs a taut cycle");
  return build_diagram(b, c).core.size() == 1;
}

namespace {

LiftScanRow scan_one(const FlatBall& b, const EmbeddedCycle& cycle) {
  LiftScanRow row;
  row.cycle = cycle;
  row.tight = is_tight(b.graph(), cycle);
  auto lift = lift_cycle(b.group(), cycle);
  row.taut = is_taut(b, lift);
  auto d = build_diagram(b, lift);
  row.core_size = static_cast<int>(d.core.size());
  row.diagram_violations = check_diagram(b.group(), d);
  if (!d.core.empty()) row.shells = shell_report(d);
  return row;
}

}  // namespace

std::vector<LiftScanRow> scan_lifts(const FlatBall& b, int max_len, Exec exec) {
  auto cycles = enumerate_cycles(b.graph(), max_len, exec);
  std::vector<LiftScanRow> rows(cycles.size());
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < cycles.size(); ++i) rows[i] = scan_one(b, cycles[i]);
    return rows;
  }
  std::vector<std::exception_ptr> errors(cycles.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    try {
      rows[i] = scan_one(b, cycles[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

}  // namespace raag
