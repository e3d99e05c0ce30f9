#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanforge/multigraph.hpp"

namespace fanforge {

// Canonical label string: equal strings iff the multigraphs are isomorphic
// (respecting loop counts and edge multiplicities). Backtracking over a
// color-refined vertex ordering, keeping the lexicographically least code.
std::string canonical_form(const Multigraph& g);

// The vertex order realizing the canonical code; two graphs with equal codes
// are matched position by position.
std::vector<VertexId> canonical_order(const Multigraph& g);

bool is_isomorphic(const Multigraph& g, const Multigraph& h);

// Vertex bijection g -> h when isomorphic.
std::optional<std::map<VertexId, VertexId>> isomorphism(const Multigraph& g,
                                                        const Multigraph& h);

} // namespace fanforge
