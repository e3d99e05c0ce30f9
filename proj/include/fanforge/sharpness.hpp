#pragma once

#include <string>
#include <vector>

#include "fanforge/multigraph.hpp"

namespace fanforge {

// One generated sharpness instance: the host g, the contracted target h, the
// distinguished edge sets, and the structural self-checks that gate emission.
struct SharpnessPair {
    std::string kind; // "j1", "j2", "trianglefree"
    int n = 0, m = 0, k = 0;
    Multigraph g;
    Multigraph h;
    EdgeSet a_edges; // pendant-incident edges of the gadget (j1/j2)
    EdgeSet b_edges; // the gadget's contracted core (j1/j2)
    EdgeSet z_edges; // the cross matching (trianglefree)
    std::vector<std::pair<std::string, bool>> checks;

    bool checks_pass() const;
    std::string to_json() const;
};

// The ladder gadgets glued onto K_m. which is 1 or 2; m <= 0 picks the
// smallest m >= 2n+1 under which no K_m edge can survive into an h-minor
// (each simplified quotient si(g/x) falls short of h's edge count). Emission
// is refused (std::runtime_error) when a structural self-check fails.
SharpnessPair generate_j(int which, int n, int m = -1);
int smallest_feasible_m(int which, int n);

// Two hypercube copies Q_{k+1} joined by a matching on stable k-sets,
// contracted to h = g/Z.
SharpnessPair generate_trianglefree(int k);

} // namespace fanforge
