#pragma once

#include <string>
#include <vector>

#include "fanforge/fans.hpp"
#include "fanforge/multigraph.hpp"

namespace fanforge {

enum class MemberKind { InnerFan, ContractibleSingleton };

const char* member_kind_name(MemberKind k);

// An H-fan family: pairwise-disjoint edge sets, each an H-inner fan of the
// host or a singleton with an H-contractible edge. host and minor are held by
// value; graphs are small and immutable.
struct FanFamily {
    std::vector<EdgeSet> members;
    std::vector<MemberKind> kinds;
    Multigraph host;
    Multigraph minor;

    EdgeSet member_union() const;
    int size() const { return static_cast<int>(members.size()); }
    void push(EdgeSet edges, MemberKind kind);
};

struct FamilyReport {
    bool members_disjoint = false;
    bool members_legal = false;
    bool is_h_fan_family = false;
    bool is_free = false;
    std::vector<EdgeSet> crossing_triangles;
    int rank = 0;
    int rank_sum = 0;
    std::vector<std::string> problems;
};

// Full validation: disjointness, per-member legality under its kind tag,
// crossing triangles, rank and rank-sum. Freeness is computed both by circuit
// scan and by the rank = rank-sum equivalence; disagreement (possible only
// through an implementation bug) throws. `beams`, when given, must be
// maximal_wye_to_wye_fans(fam.host).
FamilyReport validate_family(const FanFamily& fam, const std::vector<Fan>* beams = nullptr);

bool is_h_contractible(const Multigraph& g, const Multigraph& h, EdgeId e);
// Exactly the edges e with g/e 3-connected (multigraph quotient) carrying an
// h-minor.
EdgeSet h_contractible_edges(const Multigraph& g, const Multigraph& h);

// Every circuit of G[x] as an edge set: loops, parallel pairs, and longer
// cycles.
std::vector<EdgeSet> circuits_of(const Multigraph& g, const EdgeSet& x);

int family_rank(const FanFamily& fam);
int family_rank_sum(const FanFamily& fam);

std::string family_to_json(const FanFamily& fam, const FamilyReport& report);

} // namespace fanforge
