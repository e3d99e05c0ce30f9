#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fanforge/multigraph.hpp"

namespace fanforge {

// Kind of the subgraph spanned by a 3-edge set: a wye (3-edge star with
// distinct leaves), a triangle, or neither. Edge-set semantics: only the
// three edges themselves matter, never other edges of the host.
enum class TripleKind { None, Wye, Triangle };

TripleKind classify_triple(const Multigraph& g, EdgeId a, EdgeId b, EdgeId c);

enum class FanClass { TriangleToTriangle, WyeToTriangle, WyeToWye };

const char* fan_class_name(FanClass c);

// A recognized fan: an edge ordering whose consecutive triples alternate
// wyes and triangles, together with the resolved hub/spokes/rim. rim_path
// lists the rim vertices in ordering order; when the rim closes on itself
// (the ends coincide) wraps is set and the host is a wheel.
struct Fan {
    std::vector<EdgeId> ordering;
    FanClass fan_class = FanClass::WyeToWye;
    VertexId hub = -1;
    std::vector<EdgeId> spokes;
    std::vector<EdgeId> rim;
    std::vector<VertexId> rim_path;
    bool wraps = false;

    EdgeSet edge_set() const { return EdgeSet(ordering.begin(), ordering.end()); }
};

std::vector<std::array<EdgeId, 3>> find_wyes(const Multigraph& g);
std::vector<std::array<EdgeId, 3>> find_triangles(const Multigraph& g);

// Validates the ordering against the alternation conditions and resolves the
// fan's structure; nullopt when the list is not a fan ordering.
std::optional<Fan> is_fan_ordering(const Multigraph& g, const std::vector<EdgeId>& ordering);

// All wye-to-wye fan orderings, one Fan per reversal pair (the direction with
// the smaller first edge id is kept).
std::vector<Fan> all_wye_to_wye_fans(const Multigraph& g);

// Maximal wye-to-wye fans: fans whose subgraph is not properly contained in
// another wye-to-wye fan. When one maximal edge set admits several orderings
// beyond reversal, all are reported.
std::vector<Fan> maximal_wye_to_wye_fans(const Multigraph& g);

struct InnerFan {
    EdgeSet edges;  // the enclosing ordering minus its two extreme rim edges
    Fan enclosing;  // a maximal wye-to-wye fan witnessing the inner part
    bool degenerated = false; // single spoke
};

// Inner parts F of maximal wye-to-wye fans with G/F 3-connected and an
// h-minor, including degenerated ones.
std::vector<InnerFan> inner_fans(const Multigraph& g, const Multigraph& h);

// Membership test used by family validation and the lifting constructions.
// `beams`, when supplied, must be maximal_wye_to_wye_fans(g); callers with
// many queries against one host precompute it once.
bool is_h_inner_fan(const Multigraph& g, const Multigraph& h, const EdgeSet& edges,
                    const std::vector<Fan>* beams = nullptr);

// Maximal fans whose inner part equals the given edge set.
std::vector<Fan> enclosing_fans_of_inner(const Multigraph& g, const EdgeSet& edges,
                                         const std::vector<Fan>* beams = nullptr);

// Fan orderings realizing exactly this edge set (empty when the set spans no
// fan of g).
std::vector<Fan> fan_orderings_of_set(const Multigraph& g, const EdgeSet& edges);
inline bool is_fan_of(const Multigraph& g, const EdgeSet& edges) {
    return !fan_orderings_of_set(g, edges).empty();
}

bool edge_in_wye(const Multigraph& g, EdgeId e);
bool edges_share_wye(const Multigraph& g, EdgeId e1, EdgeId e2);

std::string fan_to_json(const Fan& fan);

} // namespace fanforge
