#include "doctest.h"

#include <algorithm>

#include "fanforge/iso.hpp"
#include "fanforge/lifting.hpp"
#include "fanforge/oracle.hpp"

using namespace fanforge;

namespace {

Multigraph k1() { return make_complete(1); }

FanFamily empty_family(const Multigraph& host, const Multigraph& minor) {
    FanFamily fam;
    fam.host = host;
    fam.minor = minor;
    return fam;
}

// All one-member families over the host: one per inner fan and one per
// contractible singleton.
std::vector<FanFamily> single_member_families(const Multigraph& host, const Multigraph& minor) {
    std::vector<FanFamily> out;
    std::set<EdgeSet> seen;
    for (const InnerFan& f : inner_fans(host, minor)) {
        if (!seen.insert(f.edges).second) continue;
        FanFamily fam = empty_family(host, minor);
        fam.push(f.edges, f.edges.size() == 1 ? MemberKind::ContractibleSingleton
                                              : MemberKind::InnerFan);
        out.push_back(std::move(fam));
    }
    for (EdgeId e : h_contractible_edges(host, minor)) {
        if (!seen.insert({e}).second) continue;
        FanFamily fam = empty_family(host, minor);
        fam.push({e}, MemberKind::ContractibleSingleton);
        out.push_back(std::move(fam));
    }
    return out;
}

} // namespace

TEST_CASE("deletion lift keeps singleton families") {
    Multigraph prism = make_prism();
    for (const auto& [x, p] : prism.edges()) {
        Multigraph gp = delete_edge(prism, x);
        if (!is_three_connected(gp)) continue;
        FanFamily fam = empty_family(gp, k1());
        for (EdgeId e : h_contractible_edges(gp, k1())) {
            FanFamily trial = fam;
            trial.push({e}, MemberKind::ContractibleSingleton);
            if (validate_family(trial).crossing_triangles.empty()) fam = trial;
        }
        FanFamily lifted = lift_through_deletion(prism, x, fam);
        CHECK(lifted.members == fam.members);
    }
}

TEST_CASE("deletion lift preserves rank exhaustively on small hosts") {
    for (const Multigraph& g : enumerate_three_connected(6)) {
        for (const auto& [x, p] : g.edges()) {
            Multigraph gp = delete_edge(g, x);
            if (!is_three_connected(gp)) continue;
            for (const FanFamily& fam : single_member_families(gp, k1())) {
                FamilyReport in_rep = validate_family(fam);
                if (!in_rep.crossing_triangles.empty()) continue;
                FanFamily out = lift_through_deletion(g, x, fam);
                FamilyReport rep = validate_family(out);
                CHECK(rep.is_h_fan_family);
                CHECK(rep.is_free);
                CHECK(rep.crossing_triangles.empty());
                // single inner fans lift with the same rank
                CHECK(rep.rank_sum == in_rep.rank_sum);
                EdgeSet u_in = fam.member_union(), u_out = out.member_union();
                CHECK(std::includes(u_in.begin(), u_in.end(), u_out.begin(), u_out.end()));
            }
        }
    }
}

TEST_CASE("contraction lift of the empty family is the contracted edge") {
    Multigraph g = make_hypercube(3); // not a wheel, not the prism
    for (const auto& [x, p] : g.edges()) {
        Multigraph gq = contract_edge(g, x);
        if (!gq.is_simple() || !is_three_connected(gq)) continue;
        auto [out, trace] = lift_through_contraction(g, x, empty_family(gq, k1()));
        CHECK(out.size() == 1);
        CHECK(out.members[0] == EdgeSet{x});
        CHECK(trace.x_included);
        CHECK(validate_family(out).rank_sum == 1);
        for (const auto& [name, pass] : trace.claims) CHECK(pass);
    }
}

TEST_CASE("contraction lift grows the rank-sum exhaustively on small hosts") {
    for (const Multigraph& g : enumerate_three_connected(6)) {
        if (is_wheel(g) || is_isomorphic(g, make_prism())) continue;
        for (const auto& [x, p] : g.edges()) {
            Multigraph gq = contract_edge(g, x);
            if (!gq.is_simple() || !is_three_connected(gq)) continue;
            std::vector<FanFamily> fams = single_member_families(gq, k1());
            fams.push_back(empty_family(gq, k1()));
            for (const FanFamily& fam : fams) {
                FamilyReport in_rep = validate_family(fam);
                if (!in_rep.crossing_triangles.empty()) continue;
                auto [out, trace] = lift_through_contraction(g, x, fam);
                FamilyReport rep = validate_family(out);
                CHECK(rep.is_h_fan_family);
                CHECK(rep.crossing_triangles.empty());
                CHECK(rep.rank_sum >= in_rep.rank_sum + 1);
                if (in_rep.is_free) CHECK(rep.is_free);
                for (const auto& [name, pass] : trace.claims) {
                    CHECK(pass);
                    if (!pass) MESSAGE("claim failed: ", name);
                }
            }
        }
    }
}

TEST_CASE("lift preconditions are enforced") {
    Multigraph prism = make_prism();
    EdgeId match = *prism.edge_between(0, 3);
    Multigraph gq = contract_edge(prism, match);
    CHECK_THROWS_AS(lift_through_contraction(prism, match, empty_family(gq, k1())),
                    precondition_error); // the prism is excluded
    Multigraph w5 = make_wheel(5);
    EdgeId rim = *w5.edge_between(1, 2);
    Multigraph wq = contract_edge(w5, rim);
    CHECK_THROWS_AS(lift_through_contraction(w5, rim, empty_family(wq, k1())),
                    precondition_error); // wheels are excluded
}

TEST_CASE("build_fan_family returns the seed when host matches the minor") {
    Multigraph w4 = make_wheel(4);
    FanFamily fam = build_fan_family(w4, w4);
    CHECK(fam.members.empty());
    CHECK(family_rank(fam) == 0);
}

TEST_CASE("build_fan_family on the named hosts") {
    // prism with K1: rank at least 5
    FanFamily prism_fam = build_fan_family(make_prism(), k1());
    FamilyReport rep = validate_family(prism_fam);
    CHECK(rep.is_h_fan_family);
    CHECK(rep.is_free);
    CHECK(rep.rank >= 5);

    // Q3 with K1: seven contractible singletons forming a spanning tree
    FanFamily q3_fam = build_fan_family(make_hypercube(3), k1());
    FamilyReport q3_rep = validate_family(q3_fam);
    CHECK(q3_rep.is_free);
    CHECK(q3_rep.rank == 7);
    CHECK(q3_fam.size() == 7);
    for (const auto& m : q3_fam.members) CHECK(m.size() == 1);
    EdgeSet u = q3_fam.member_union();
    CHECK(rank(make_hypercube(3), u) == 7);
    CHECK(covered_vertices(make_hypercube(3), u).size() == 8);

    // K4 towards K3: one contraction step of slack
    FanFamily k4_fam = build_fan_family(make_complete(4), make_cycle(3));
    CHECK(validate_family(k4_fam).rank >= 1);
}

TEST_CASE("build_fan_family_general lifts a seed") {
    // g = Q3, h' = W4 (a Q3-minor), h = K4, seed = a rank-1 K4-fan family of W4
    Multigraph q3 = make_hypercube(3);
    Multigraph w4 = make_wheel(4);
    Multigraph k4 = make_complete(4);
    REQUIRE(has_minor_quick(q3, w4));
    FanFamily seed;
    seed.host = w4;
    seed.minor = k4;
    for (EdgeId e : h_contractible_edges(w4, k4)) {
        seed.push({e}, MemberKind::ContractibleSingleton);
        break;
    }
    REQUIRE(seed.size() == 1);
    FanFamily fam = build_fan_family_general(q3, w4, k4, seed);
    FamilyReport rep = validate_family(fam);
    CHECK(rep.is_free);
    CHECK(rep.rank >= q3.vertex_count() - w4.vertex_count() + 1);
    CHECK(fam.minor.vertex_count() == 4);
}

TEST_CASE("build_fan_family_sum tolerates non-free seeds") {
    // two rim singletons of W4 as a K1-fan family seed
    Multigraph w4 = make_wheel(4);
    FanFamily seed;
    seed.host = w4;
    seed.minor = k1();
    int took = 0;
    for (EdgeId e : h_contractible_edges(w4, k1())) {
        seed.push({e}, MemberKind::ContractibleSingleton);
        if (++took == 2) break;
    }
    Multigraph g = make_hypercube(3);
    REQUIRE(has_minor_quick(g, w4));
    FanFamily fam = build_fan_family_sum(g, w4, k1(), seed);
    FamilyReport rep = validate_family(fam);
    CHECK(rep.is_h_fan_family);
    CHECK(rep.crossing_triangles.empty());
    CHECK(rep.rank_sum >= g.vertex_count() - w4.vertex_count() + family_rank_sum(seed));
}

TEST_CASE("extract_forest on a singleton family returns a large forest") {
    Multigraph q3 = make_hypercube(3);
    FanFamily fam = build_fan_family(q3, k1());
    bool fallback = false;
    EdgeSet forest = extract_forest(q3, k1(), fam, 7, &fallback);
    CHECK(forest.size() >= 4); // ceil((7+1)/2)
    CHECK(rank(q3, forest) == static_cast<int>(forest.size()));
}

TEST_CASE("extract_forest on the prism meets the bound with equality") {
    Multigraph prism = make_prism();
    FanFamily fam = build_fan_family(prism, k1());
    REQUIRE(validate_family(fam).rank >= 5);
    bool fallback = false;
    EdgeSet forest = extract_forest(prism, k1(), fam, 5, &fallback);
    CHECK(forest.size() == 3); // only the matching is contractible
    for (EdgeId e : forest) CHECK(is_h_contractible(prism, k1(), e));
    CHECK(rank(prism, forest) == 3);
}

TEST_CASE("extract_forest bound across small hosts") {
    for (const Multigraph& g : enumerate_three_connected(6)) {
        FanFamily fam = build_fan_family(g, k1());
        int r = g.vertex_count() - 1;
        REQUIRE(validate_family(fam).rank >= r);
        bool fallback = false;
        EdgeSet forest = extract_forest(g, k1(), fam, r, &fallback);
        CHECK(static_cast<int>(forest.size()) >= (r + 2) / 2);
        CHECK(rank(g, forest) == static_cast<int>(forest.size()));
        for (EdgeId e : forest) CHECK(is_h_contractible(g, k1(), e));
    }
}

TEST_CASE("spanning fan decompositions") {
    // Q3: a spanning tree of contractible edges
    Multigraph q3sub = spanning_fan_decomposition(make_hypercube(3));
    CHECK(q3sub.vertex_count() == 8);
    CHECK(q3sub.edge_count() == 7);
    CHECK(is_connected(q3sub));

    // K4: any spanning tree of contractible edges qualifies
    Multigraph k4sub = spanning_fan_decomposition(make_complete(4));
    CHECK(k4sub.vertex_count() == 4);

    // prism: blocks mix an inner fan with contractible edges
    Multigraph psub = spanning_fan_decomposition(make_prism());
    CHECK(psub.vertex_count() == 6);
    bool has_fan_block = false;
    for (const EdgeSet& b : blocks(psub))
        if (b.size() > 1) has_fan_block = true;
    CHECK(has_fan_block);
}

TEST_CASE("lifting traces serialize") {
    Multigraph g = make_hypercube(3);
    EdgeId x = *g.edge_ids().begin();
    Multigraph gq = contract_edge(g, x);
    REQUIRE(gq.is_simple());
    REQUIRE(is_three_connected(gq));
    auto [out, trace] = lift_through_contraction(g, x, empty_family(gq, k1()));
    std::string json = trace.to_json();
    CHECK(json.find("\"x_included\":true") != std::string::npos);
    CHECK(json.find("\"claims\"") != std::string::npos);
}
