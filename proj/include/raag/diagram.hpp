#pragma once

#include <optional>
#include <string>
#include <vector>

#include "raag/cycles.hpp"
#include "raag/flat.hpp"

namespace raag {

/// Closed full-edge path: singulars[i] joins flats[i] and flats[i + 1 mod n].
struct FullEdgeCycle {
  std::vector<CosetKey> flats;
  std::vector<CosetKey> singulars;

  std::size_t length() const { return flats.size(); }
  /// Boundary vertex k of the edge loop f0, s0, f1, s1, ...
  const CosetKey& vertex(std::size_t k) const { return k % 2 == 0 ? flats[k / 2] : singulars[k / 2]; }
  auto operator<=>(const FullEdgeCycle&) const = default;
};

/// Throws PreconditionError("cycle required") unless c is an embedded closed
/// full-edge path of length >= 3.
void validate_cycle(const Raag& group, const FullEdgeCycle& c);

/// Lift of a Γ-cycle v1..vn: flats <v_i, v_i+1> and singulars <v_i+1> of
/// the base fundamental domain.
FullEdgeCycle lift_cycle(const Raag& group, const EmbeddedCycle& cycle);

/// Boundary of the union of the translates g·lift(cycle), g in `translates`,
/// where full edges shared by two translates cancel. Nullopt unless the
/// remainder is a single embedded full-edge cycle.
std::optional<FullEdgeCycle> glue_lifts(const Raag& group, const EmbeddedCycle& cycle, const std::vector<Word>& translates);

/// Chord of the boundary circle between crossing points a < b. Crossing
/// point j sits on boundary edge j, which joins vertex j and vertex j + 1.
struct DiagramArc {
  int a = 0, b = 0;
  HyperplaneKey hyperplane;
  auto operator<=>(const DiagramArc&) const = default;
};

struct DiagramRegion {
  CosetKey vertex;
  bool internal = false;
  int boundary_vertex = -1;    // index into the edge loop, -1 if internal
  std::vector<int> side_arcs;  // arcs bounding the region, in cyclic order
  std::vector<int> across;     // region on the far side of each side
};

struct DiskDiagram {
  FullEdgeCycle boundary;
  std::vector<DiagramArc> arcs;                 // sorted
  std::vector<std::pair<int, int>> crossings;   // arc index pairs, sorted
  std::vector<DiagramRegion> regions;           // sorted by (internal, boundary_vertex, vertex)
  std::vector<int> core;                        // internal regions
  int valid_fillings = 0;   // arc systems passing every check
  bool minimal_unique = true;
};

/// Dual disk diagram of c. Every arc system pairing same-hyperplane crossings
/// without self-crossings is labelled by walking across arcs; systems whose
/// labels are inconsistent, whose crossings are not squares of F, or that
/// contain a triangle or separating cell are rejected. The valid system
/// with fewest crossings is returned.
DiskDiagram build_diagram(const FlatBall& b, const FullEdgeCycle& c);
/// Every valid filling, in enumeration order given by a shuffle of the
/// hyperplanes under `seed` (0 keeps the sorted order).
std::vector<DiskDiagram> all_fillings(const FlatBall& b, const FullEdgeCycle& c, unsigned seed = 0);

/// Structural invariants of a diagram; empty when all hold.
std::vector<std::string> check_diagram(const Raag& group, const DiskDiagram& d);

enum class ShellClass { Zero, One, Two, None };
enum class ShellCase { SingleCell, Two1Shells, One1ShellTwo2Shells, Four2Shells, Other };
std::string to_string(ShellClass s);
std::string to_string(ShellCase s);

struct ShellRecord {
  int region = -1;
  int sides = 0;     // n_i
  int corners = 0;   // C_i
  int internal_sides = 0;
  int score = 0;     // C_i - n_i + 4
  ShellClass shell = ShellClass::None;
  bool operator==(const ShellRecord&) const = default;
};

struct ShellReport {
  std::vector<ShellRecord> records;
  int total_score = 0;
  ShellCase shell_case = ShellCase::Other;
  bool ladder = false;
  bool operator==(const ShellReport&) const = default;
};

/// Throws PreconditionError on an empty core.
ShellReport shell_report(const DiskDiagram& d);

struct CutWitness {
  int i = 0;
  int v = -1, w = -1;  // positions in c.flats
  std::vector<CosetKey> path;
};

/// Coarse length of the cycle arc from flat p forward to flat q.
int cycle_arc_length(const Raag& group, const FullEdgeCycle& c, int p, int q);
/// Throws PreconditionError for i outside {1, 2}.
std::optional<CutWitness> find_icut(const FlatBall& b, const FullEdgeCycle& c, int i);
bool is_taut(const FlatBall& b, const FullEdgeCycle& c);
/// Throws PreconditionError unless c is taut.
bool verify_taut_diagram_lemma(const FlatBall& b, const FullEdgeCycle& c);

// ---- batch scans ----------------------------------------------------------------

struct LiftScanRow {
  EmbeddedCycle cycle;
  bool tight = false;
  bool taut = false;
  int core_size = 0;
  ShellReport shells;
  std::vector<std::string> diagram_violations;
  bool operator==(const LiftScanRow&) const = default;
};

/// Lifts every embedded cycle of length <= max_len into b and reports
/// tightness, tautness and the diagram core.
std::vector<LiftScanRow> scan_lifts(const FlatBall& b, int max_len, Exec exec = Exec::Parallel);

}  // namespace raag
