#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fanforge/families.hpp"
#include "fanforge/multigraph.hpp"

namespace fanforge {

// Brute-force instruments refuse inputs beyond these limits. The environment
// variable FANFORGE_SIZE_GUARD ("V" or "V:E") overrides the defaults.
struct SizeGuard {
    int max_vertices = 9;
    int max_edges = 20;

    static SizeGuard from_env();
    void check(const Multigraph& g) const;
};

// Maximum rank over all free h-fan families of g, with a witness. Exhaustive
// branch-and-bound over candidate members (every h-inner fan and every
// h-contractible singleton).
std::pair<int, FanFamily> oracle_max_free_family_rank(const Multigraph& g, const Multigraph& h,
                                                      const SizeGuard& guard = SizeGuard::from_env());

// Largest forest of h-contractible edges, with a witness. The maximum is the
// rank of the contractible edge set; the witness is the greedy spanning
// forest in edge-id order.
std::pair<int, EdgeSet> oracle_max_contractible_forest(const Multigraph& g, const Multigraph& h,
                                                       const SizeGuard& guard = SizeGuard::from_env());

// Free h-fan family of rank >= target for the induction's base graphs (wheels,
// the prism, and hosts with at most 3 vertices). target < 0 means |g| - |h|.
// Throws theorem_violation when exhaustive search cannot reach the target.
FanFamily oracle_base_case_family(const Multigraph& g, const Multigraph& h, int target = -1,
                                  const SizeGuard& guard = SizeGuard::from_env());

// All graphs on exactly n vertices up to isomorphism (orderly generation by
// vertex extension), optionally filtered. Ground-truth corpus machinery for
// the verification suites.
std::vector<Multigraph> enumerate_graphs(int n,
                                         const std::function<bool(const Multigraph&)>& keep = {});

// Connected, simple, 3-connected graphs with 4..max_n vertices.
std::vector<Multigraph> enumerate_three_connected(int max_n);

} // namespace fanforge
