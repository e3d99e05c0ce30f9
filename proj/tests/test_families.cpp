#include "doctest.h"

#include "fanforge/families.hpp"
#include "fanforge/minor.hpp"
#include "fanforge/oracle.hpp"

using namespace fanforge;

namespace {

Multigraph k1() { return make_complete(1); }

FanFamily family_of(const Multigraph& host, const Multigraph& minor,
                    std::vector<std::pair<EdgeSet, MemberKind>> members) {
    FanFamily fam;
    fam.host = host;
    fam.minor = minor;
    for (auto& [edges, kind] : members) fam.push(std::move(edges), kind);
    return fam;
}

} // namespace

TEST_CASE("contractible edges of the standard hosts") {
    // prism: exactly the perfect matching
    Multigraph prism = make_prism();
    EdgeSet expect;
    for (auto [u, v] : {std::pair{0, 3}, std::pair{1, 4}, std::pair{2, 5}})
        expect.insert(*prism.edge_between(u, v));
    CHECK(h_contractible_edges(prism, k1()) == expect);

    // wheels: exactly the rim
    for (int n = 4; n <= 6; ++n) {
        Multigraph w = make_wheel(n);
        EdgeSet rim;
        for (const auto& [e, p] : w.edges())
            if (p.u != 0 && p.v != 0) rim.insert(e);
        CHECK(h_contractible_edges(w, k1()) == rim);
    }

    // K4: everything
    CHECK(h_contractible_edges(make_complete(4), k1()) == make_complete(4).edge_ids());
}

TEST_CASE("single edge of K4 is a K1-fan family") {
    Multigraph k4 = make_complete(4);
    FanFamily fam = family_of(k4, k1(), {{{0}, MemberKind::ContractibleSingleton}});
    FamilyReport rep = validate_family(fam);
    CHECK(rep.is_h_fan_family);
    CHECK(rep.is_free);
    CHECK(rep.rank == 1);
    CHECK(rep.rank_sum == 1);
    CHECK(rep.crossing_triangles.empty());
}

TEST_CASE("prism triangle plus opposite singleton validates") {
    Multigraph prism = make_prism();
    EdgeSet t1;
    for (const auto& [e, p] : prism.edges())
        if (p.u < 3 && p.v < 3) t1.insert(e);
    EdgeId m = *prism.edge_between(0, 3);
    FanFamily fam = family_of(prism, k1(),
                              {{t1, MemberKind::InnerFan}, {{m}, MemberKind::ContractibleSingleton}});
    FamilyReport rep = validate_family(fam);
    CHECK(rep.is_h_fan_family);
    CHECK(rep.is_free);
    CHECK(rep.rank == 3);
    CHECK(rep.rank_sum == 3);

    // an illegal singleton (a triangle edge of the prism) is flagged
    EdgeId bad = *prism.edge_between(0, 1);
    FanFamily badfam = family_of(prism, k1(), {{{bad}, MemberKind::ContractibleSingleton}});
    CHECK_FALSE(validate_family(badfam).is_h_fan_family);
}

TEST_CASE("crossing triangles and freeness") {
    Multigraph k4 = make_complete(4);
    // three singleton members forming a triangle of K4: a crossing triangle,
    // not free
    EdgeId ab = *k4.edge_between(0, 1);
    EdgeId bc = *k4.edge_between(1, 2);
    EdgeId ca = *k4.edge_between(0, 2);
    FanFamily fam = family_of(k4, k1(),
                              {{{ab}, MemberKind::ContractibleSingleton},
                               {{bc}, MemberKind::ContractibleSingleton},
                               {{ca}, MemberKind::ContractibleSingleton}});
    FamilyReport rep = validate_family(fam);
    CHECK(rep.is_h_fan_family);
    CHECK_FALSE(rep.is_free);
    CHECK(rep.rank == 2);
    CHECK(rep.rank_sum == 3);
    REQUIRE(rep.crossing_triangles.size() == 1);
    CHECK(rep.crossing_triangles[0] == EdgeSet{ab, bc, ca});

    // overlapping members are rejected as a family
    FanFamily overlap = family_of(k4, k1(),
                                  {{{ab}, MemberKind::ContractibleSingleton},
                                   {{ab}, MemberKind::ContractibleSingleton}});
    CHECK_FALSE(validate_family(overlap).is_h_fan_family);

    // unknown edges are an error
    FanFamily alien = family_of(k4, k1(), {{{99}, MemberKind::ContractibleSingleton}});
    CHECK_THROWS_AS(validate_family(alien), precondition_error);
}

TEST_CASE("removing a member of a free family keeps it free") {
    Multigraph prism = make_prism();
    EdgeSet t1, t2;
    for (const auto& [e, p] : prism.edges()) {
        if (p.u < 3 && p.v < 3) t1.insert(e);
        if (p.u >= 3 && p.v >= 3) t2.insert(e);
    }
    EdgeId m = *prism.edge_between(0, 3);
    FanFamily fam = family_of(prism, k1(),
                              {{t1, MemberKind::InnerFan},
                               {t2, MemberKind::InnerFan},
                               {{m}, MemberKind::ContractibleSingleton}});
    FamilyReport rep = validate_family(fam);
    CHECK(rep.is_free);
    CHECK(rep.rank == 5);
    for (std::size_t drop = 0; drop < fam.members.size(); ++drop) {
        FanFamily smaller;
        smaller.host = fam.host;
        smaller.minor = fam.minor;
        for (std::size_t i = 0; i < fam.members.size(); ++i)
            if (i != drop) smaller.push(fam.members[i], fam.kinds[i]);
        CHECK(validate_family(smaller).is_free);
    }
}

TEST_CASE("circuit enumeration covers loops, parallels and cycles") {
    Multigraph g;
    for (int i = 0; i < 3; ++i) g.add_vertex();
    EdgeId a = g.add_edge(0, 1);
    EdgeId a2 = g.add_edge(0, 1);
    EdgeId b = g.add_edge(1, 2);
    EdgeId c = g.add_edge(0, 2);
    EdgeId loop = g.add_edge(2, 2);
    auto cs = circuits_of(g, g.edge_ids());
    // loop; the parallel pair; two triangles through a or a2
    CHECK(cs.size() == 4);
    CHECK(std::count(cs.begin(), cs.end(), EdgeSet{loop}) == 1);
    CHECK(std::count(cs.begin(), cs.end(), EdgeSet{a, a2}) == 1);
    CHECK(std::count(cs.begin(), cs.end(), EdgeSet{a, b, c}) == 1);
    CHECK(std::count(cs.begin(), cs.end(), EdgeSet{a2, b, c}) == 1);
}

TEST_CASE("ando bound on a named corpus") {
    std::vector<Multigraph> corpus{make_complete(4), make_complete(5), make_prism(),
                                   make_wheel(4),    make_wheel(6),    make_hypercube(3),
                                   make_complete_bipartite(3, 3)};
    for (const Multigraph& g : corpus) {
        int count = static_cast<int>(h_contractible_edges(g, k1()).size());
        CHECK(count >= (g.vertex_count() + 1) / 2);
    }
}
