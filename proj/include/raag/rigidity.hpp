#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "raag/graph.hpp"

namespace raag {

enum class QiVerdict { QuasiIsometric, NotQuasiIsometric, OutOfScope };
std::string to_string(QiVerdict v);

struct QiClassification {
  QiVerdict verdict = QiVerdict::OutOfScope;
  std::optional<GraphIsomorphism> witness;  // g1 -> g2, when quasi-isometric
  std::string reason;
  AtomicityReport first, second;
};

/// Atomic RAAGs are quasi-isometric exactly when their graphs are
/// isomorphic. Pairs with a non-atomic input are out of scope.
QiClassification classify_qi(const DefiningGraph& g1, const DefiningGraph& g2);

struct OutGroupReport {
  int vertices = 0;
  std::uint64_t h_order = 0;    // 2^|V|
  std::uint64_t aut_order = 0;  // |Aut(Γ)|
  std::uint64_t out_order = 0;
  std::string extension;
};

/// Throws PreconditionError for non-atomic graphs or when the order does not
/// fit in 64 bits.
OutGroupReport out_group(const DefiningGraph& g);

/// edge_map[i] is the index in g2.edges() of the image of g1.edges()[i].
using EdgeMap = std::vector<std::size_t>;
EdgeMap induced_edge_map(const DefiningGraph& g1, const DefiningGraph& g2, const GraphIsomorphism& phi);
/// The vertex map sending v to the common vertex of the images of the edges
/// at v. Throws PreconditionError if a graph has a vertex of valence < 2 or
/// a cycle of length < 4, if the map is not a bijection preserving edge
/// adjacency (the message names a witness pair), or if it is not induced by
/// an isomorphism.
GraphIsomorphism edges_to_isomorphism(const DefiningGraph& g1, const DefiningGraph& g2, const EdgeMap& f);

nlohmann::json to_json(const DefiningGraph& g, const AtomicityReport& r);
nlohmann::json to_json(const DefiningGraph& g1, const DefiningGraph& g2, const QiClassification& c);
nlohmann::json to_json(const OutGroupReport& r);

}  // namespace raag
