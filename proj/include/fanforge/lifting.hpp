#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanforge/families.hpp"
#include "fanforge/minor.hpp"

namespace fanforge {

// Audit record of one contraction lift: the index classes over the input
// family, the chi/psi/Phi choices, the per-index output subfamilies, and the
// outcome of every runtime claim check. Kept for tooling; the lift itself
// re-validates its output independently of this record.
struct LiftingTrace {
    EdgeId step_edge = -1;
    SplitterMode mode = SplitterMode::Contract;
    std::vector<int> I1, I2, I3, J1, J2, J3, K, L;
    std::map<int, EdgeId> chi;
    std::map<int, EdgeId> psi;
    std::map<int, int> phi; // K u L -> I
    std::map<int, std::vector<EdgeSet>> subfamilies;
    bool x_included = false;
    std::vector<std::pair<std::string, bool>> claims;
    std::vector<std::string> gaps; // constructions that needed the fallback sweep

    void claim(const std::string& name, bool pass);
    std::string to_json() const;
};

// Lift an h-fan family of g\x (no crossing triangles) to one of g. Rank-sum
// is preserved or grows, freeness is preserved, no crossing triangles appear,
// and every output member lies inside the union of the input family (plus
// nothing else). Verified before returning; failure throws theorem_violation.
FanFamily lift_through_deletion(const Multigraph& g, EdgeId x, const FanFamily& fam);

// Lift an h-fan family of g/x (no crossing triangles) to one of g with
// rank-sum at least one larger. g must be simple, 3-connected, not a wheel
// and not the prism; g/x must be simple and 3-connected with an h-minor.
// Every claim of the underlying construction is asserted at runtime and the
// output is re-validated; any failure throws theorem_violation carrying the
// trace.
std::pair<FanFamily, LiftingTrace> lift_through_contraction(const Multigraph& g, EdgeId x,
                                                            const FanFamily& fam);

// Splitter-step induction drivers. Wheel / prism / tiny hosts fall back to
// exhaustive base-case search; a host isomorphic to h' maps the seed through
// the isomorphism. `chain`, when given, collects the contraction traces.
FanFamily build_fan_family_general(const Multigraph& g, const Multigraph& h_prime,
                                   const Multigraph& h, const FanFamily& seed,
                                   std::vector<LiftingTrace>* chain = nullptr);
FanFamily build_fan_family(const Multigraph& g, const Multigraph& h,
                           std::vector<LiftingTrace>* chain = nullptr);
// Crossing-triangle-free variant: the seed need not be free and the bound is
// on rank-sum.
FanFamily build_fan_family_sum(const Multigraph& g, const Multigraph& h_prime,
                               const Multigraph& h, const FanFamily& seed,
                               std::vector<LiftingTrace>* chain = nullptr);

// Forest of at least ceil((r+1)/2) h-contractible edges from a free h-fan
// family of rank >= r >= 1. Follows the A/B/C partition with the
// singleton-maximizing rewrites; a verified brute-force fallback guards the
// construction (fallback use is reported through used_fallback).
EdgeSet extract_forest(const Multigraph& g, const Multigraph& h, const FanFamily& fam, int r,
                       bool* used_fallback = nullptr);

// Spanning subgraph whose blocks are inner fans or single contractible edges.
Multigraph spanning_fan_decomposition(const Multigraph& g);

} // namespace fanforge
