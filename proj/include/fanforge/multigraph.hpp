#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fanforge/errors.hpp"

namespace fanforge {

using VertexId = int;
using EdgeId = int;
using EdgeSet = std::set<EdgeId>;

struct Endpoints {
    VertexId u = -1;
    VertexId v = -1;
    bool operator==(const Endpoints&) const = default;
};

// Labeled multigraph (loops and parallel edges allowed) with stable edge
// identifiers. Derivation operations (contract/delete/simplify/...) are free
// functions returning new values; a Multigraph is never mutated after it has
// been handed to one of them, so values are safe to share across threads.
//
// Edge identifiers are never reused along a derivation chain: surviving edges
// keep their ids through contractions and deletions. Each vertex carries the
// set of original vertices it absorbed (contraction history); those sets
// partition the original vertex set of the chain.
class Multigraph {
public:
    Multigraph() = default;

    VertexId add_vertex();
    void add_vertex(VertexId v);
    EdgeId add_edge(VertexId u, VertexId v);
    void add_edge(EdgeId id, VertexId u, VertexId v);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool empty() const { return vertices_.empty(); }

    bool has_vertex(VertexId v) const { return vertices_.count(v) > 0; }
    bool has_edge(EdgeId e) const { return edges_.count(e) > 0; }

    Endpoints endpoints(EdgeId e) const;
    bool is_loop(EdgeId e) const;
    // For e = uv, the endpoint other than w. Loops return w.
    VertexId other_end(EdgeId e, VertexId w) const;

    const std::set<VertexId>& vertices() const { return vertices_; }
    const std::map<EdgeId, Endpoints>& edges() const { return edges_; }
    EdgeSet edge_ids() const;

    std::vector<EdgeId> incident_edges(VertexId v) const;
    std::set<VertexId> neighbors(VertexId v) const;
    int degree(VertexId v) const; // loops count twice
    bool adjacent(VertexId u, VertexId v) const;
    std::optional<EdgeId> edge_between(VertexId u, VertexId v) const; // lowest id
    std::vector<EdgeId> edges_between(VertexId u, VertexId v) const;

    bool is_simple() const;

    const std::map<VertexId, std::set<VertexId>>& history() const { return history_; }

    // One line per edge, "u v"; the internal textual multigraph format.
    std::string to_edge_list() const;
    static Multigraph from_edge_list(const std::string& text);

    std::string describe() const; // short human-readable summary

private:
    friend Multigraph contract_edge(const Multigraph&, EdgeId);
    friend Multigraph delete_edge(const Multigraph&, EdgeId);
    friend Multigraph delete_vertices(const Multigraph&, const std::set<VertexId>&);

    std::set<VertexId> vertices_;
    std::map<EdgeId, Endpoints> edges_;
    std::map<VertexId, std::set<VertexId>> history_;
    VertexId next_vertex_ = 0;
    EdgeId next_edge_ = 0;
};

// --- derivation operations (pure) ---

// G/e. Endpoints merge into the smaller vertex id; parallels and loops
// produced by the merge are kept. Contracting a loop is an error.
Multigraph contract_edge(const Multigraph& g, EdgeId e);
// G/X, contracting in increasing edge-id order. Loops inside X that appear
// because of earlier contractions are skipped (they carry no identification).
Multigraph contract_edges(const Multigraph& g, const EdgeSet& xs);
Multigraph delete_edge(const Multigraph& g, EdgeId e);
Multigraph delete_edges(const Multigraph& g, const EdgeSet& xs);
Multigraph delete_vertex(const Multigraph& g, VertexId v);
Multigraph delete_vertices(const Multigraph& g, const std::set<VertexId>& vs);

// si(G): drop loops, keep the lowest edge id in each parallel class.
Multigraph simplify(const Multigraph& g);
// co(G): drop degree-<2 vertices to a fixpoint, then contract each maximal
// path whose internal vertices have degree 2 down to a single edge. A closed
// degree-2 handle keeps a parallel pair rather than becoming a loop, and a
// bare cycle component reduces to C3.
Multigraph cosimplify(const Multigraph& g);

// --- structure queries ---

bool is_connected(const Multigraph& g); // empty graph counts as connected
// Paper-sense k-connectivity: every vertex set of size < k leaves a connected
// remainder (no minimum-order requirement). Checked by subset enumeration.
bool is_k_connected(const Multigraph& g, int k);
inline bool is_three_connected(const Multigraph& g) { return is_k_connected(g, 3); }

std::vector<std::set<VertexId>> components(const Multigraph& g);

// G[X] for X an edge set: the subgraph on exactly those edges and the
// vertices they cover.
Multigraph edge_subgraph(const Multigraph& g, const EdgeSet& x);
std::set<VertexId> covered_vertices(const Multigraph& g, const EdgeSet& x);

// r_G(X) = vertices of G[X] minus components of G[X].
int rank(const Multigraph& g, const EdgeSet& x);
int rank_sum(const Multigraph& g, const std::vector<EdgeSet>& family);

// Edge partition into blocks (maximal 2-connected subgraphs, bridges, and
// loops).
std::vector<EdgeSet> blocks(const Multigraph& g);

bool has_triangle(const Multigraph& g);
bool is_wheel(const Multigraph& g);
// The wheel's hub when is_wheel holds (W3 = K4 reports the smallest vertex).
std::optional<VertexId> wheel_hub(const Multigraph& g);

// --- named generators (canonical labelings, vertices 0..n-1) ---

Multigraph make_complete(int n);
Multigraph make_cycle(int n);
Multigraph make_path(int n);
Multigraph make_wheel(int rim); // rim >= 3; rim+1 vertices, hub is vertex 0
Multigraph make_prism();        // triangular prism
Multigraph make_complete_bipartite(int a, int b);
Multigraph make_hypercube(int d);

} // namespace fanforge
