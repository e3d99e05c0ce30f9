#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanforge/multigraph.hpp"

namespace fanforge {

enum class MinorOp { Contract, DeleteEdge, DeleteVertex };

struct MinorStep {
    MinorOp op;
    int id; // edge or vertex identifier, valid at replay time
    bool operator==(const MinorStep&) const = default;
};

// Witnessed minor containment: replaying the steps from the host graph ends
// in a graph isomorphic to the minor under final_isomorphism.
struct MinorCertificate {
    std::vector<MinorStep> steps;
    std::map<VertexId, VertexId> final_isomorphism; // reduced vertex -> minor vertex
};

Multigraph replay(const Multigraph& g, const std::vector<MinorStep>& steps);
bool verify_certificate(const Multigraph& g, const Multigraph& h, const MinorCertificate& cert);

std::string certificate_to_json(const MinorCertificate& cert);
MinorCertificate certificate_from_json(const std::string& text);

// Exhaustive minor search (h must be simple): deletions before contractions
// at each node, memoized on canonical form. Loops, parallel duplicates and
// unusable components are discarded eagerly. An h with a single vertex and no
// edge is a minor of every nonempty graph.
std::optional<MinorCertificate> has_minor(const Multigraph& g, const Multigraph& h);
bool has_minor_quick(const Multigraph& g, const Multigraph& h); // no certificate assembly

enum class SplitterMode { Contract, Delete };

struct SplitterStep {
    EdgeId edge;
    SplitterMode mode;
};

// One splitter step: an edge whose contraction or deletion keeps the graph
// 3-connected and simple with an h-minor. Preconditions (g simple,
// 3-connected, >= 4 vertices, not a wheel, not isomorphic to h, h-minor
// present) are reported as distinct precondition errors; an exhausted search
// throws theorem_violation since the step is guaranteed to exist.
SplitterStep splitter_edge(const Multigraph& g, const Multigraph& h);

} // namespace fanforge
