#pragma once

#include <string>

#include "json.hpp"
#include "raag/cycles.hpp"
#include "raag/diagram.hpp"
#include "raag/flat.hpp"
#include "raag/rigidity.hpp"

namespace raag {

nlohmann::json to_json(const DefiningGraph& g, const EmbeddedCycle& c);
nlohmann::json to_json(const DefiningGraph& g, const WhiteheadGraph& w);
nlohmann::json to_json(const BallCheck& c);
nlohmann::json to_json(const DefiningGraph& g, const CosetKey& k);
nlohmann::json to_json(const ShellReport& r);
nlohmann::json to_json(const DefiningGraph& g, const DiskDiagram& d);
nlohmann::json to_json(const DefiningGraph& g, const CutWitness& w);

/// DOT drawing of a diagram: boundary points on a circle, arcs as edges,
/// regions labelled by their vertex of F.
std::string diagram_to_dot(const DefiningGraph& g, const DiskDiagram& d);
std::string ball_to_dot(const FlatBall& b);

struct ReportOptions {
  int ball_radius = 4;
  int taut_samples = 8;
};

/// Full analysis bundle. Sections that fail record {"error": ...} instead
/// of aborting; sections needing an atomic graph are skipped otherwise.
/// Output depends only on the graph and the options.
nlohmann::json run_report(const DefiningGraph& g, const ReportOptions& opt = {});
std::string report_summary(const nlohmann::json& report);

}  // namespace raag
