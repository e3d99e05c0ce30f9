#include "doctest.h"

#include <cstdlib>

#include "fanforge/iso.hpp"
#include "fanforge/oracle.hpp"

using namespace fanforge;

namespace {
Multigraph k1() { return make_complete(1); }
}

TEST_CASE("graph enumeration counts match the literature") {
    CHECK(enumerate_graphs(1).size() == 1);
    CHECK(enumerate_graphs(2).size() == 2);
    CHECK(enumerate_graphs(3).size() == 4);
    CHECK(enumerate_graphs(4).size() == 11);
    CHECK(enumerate_graphs(5).size() == 34);
    CHECK(enumerate_graphs(6).size() == 156);
    CHECK(enumerate_graphs(7).size() == 1044);
}

TEST_CASE("3-connected enumeration matches known counts") {
    auto all = enumerate_three_connected(6);
    int c4 = 0, c5 = 0, c6 = 0;
    for (const auto& g : all) {
        if (g.vertex_count() == 4) ++c4;
        if (g.vertex_count() == 5) ++c5;
        if (g.vertex_count() == 6) ++c6;
    }
    CHECK(c4 == 1);
    CHECK(c5 == 3);
    CHECK(c6 == 17);
}

TEST_CASE("max free family rank on the standard hosts") {
    auto [q3_rank, q3_fam] = oracle_max_free_family_rank(make_hypercube(3), k1());
    CHECK(q3_rank == 7);
    CHECK(validate_family(q3_fam).is_free);
    for (const auto& m : q3_fam.members) CHECK(m.size() == 1);

    auto [k4_rank, k4_fam] = oracle_max_free_family_rank(make_complete(4), k1());
    CHECK(k4_rank == 3);

    auto [prism_rank, prism_fam] = oracle_max_free_family_rank(make_prism(), k1());
    CHECK(prism_rank >= 5);
    CHECK(prism_rank == 5); // cannot exceed |V|-1
    FamilyReport rep = validate_family(prism_fam);
    CHECK(rep.is_h_fan_family);
    CHECK(rep.is_free);
}

TEST_CASE("max contractible forest") {
    auto [prism_size, prism_forest] = oracle_max_contractible_forest(make_prism(), k1());
    CHECK(prism_size == 3); // the matching
    CHECK(prism_forest.size() == 3);

    auto [w5_size, w5_forest] = oracle_max_contractible_forest(make_wheel(5), k1());
    CHECK(w5_size == 4); // the rim is a 5-cycle; forests inside it max out at 4

    auto [q3_size, q3_forest] = oracle_max_contractible_forest(make_hypercube(3), k1());
    CHECK(q3_size == 7); // spanning tree of contractible edges
    CHECK(rank(make_hypercube(3), q3_forest) == static_cast<int>(q3_forest.size()));
}

TEST_CASE("base case families") {
    FanFamily w4 = oracle_base_case_family(make_wheel(4), k1());
    FamilyReport rep = validate_family(w4);
    CHECK(rep.is_free);
    CHECK(rep.rank >= 4);

    FanFamily pk4 = oracle_base_case_family(make_prism(), make_complete(4));
    FamilyReport rep2 = validate_family(pk4);
    CHECK(rep2.is_free);
    CHECK(rep2.rank >= 2);

    FanFamily same = oracle_base_case_family(make_wheel(4), make_wheel(4));
    CHECK(validate_family(same).rank >= 0);
}

TEST_CASE("oracle determinism") {
    auto a = oracle_max_free_family_rank(make_prism(), k1());
    auto b = oracle_max_free_family_rank(make_prism(), k1());
    CHECK(a.first == b.first);
    CHECK(a.second.members == b.second.members);
}

TEST_CASE("size guard refuses big inputs and obeys the environment") {
    SizeGuard tight;
    tight.max_vertices = 4;
    tight.max_edges = 10;
    CHECK_THROWS_AS(oracle_max_free_family_rank(make_prism(), k1(), tight), size_guard_exceeded);

    setenv("FANFORGE_SIZE_GUARD", "12:42", 1);
    SizeGuard fromenv = SizeGuard::from_env();
    CHECK(fromenv.max_vertices == 12);
    CHECK(fromenv.max_edges == 42);
    unsetenv("FANFORGE_SIZE_GUARD");
}

TEST_CASE("oracle never beats the bound promised to constructions") {
    // oracle max rank is at least |g| - |h| on the named corpus
    std::vector<Multigraph> corpus{make_complete(4), make_prism(), make_wheel(5),
                                   make_hypercube(3)};
    for (const auto& g : corpus) {
        auto [r, fam] = oracle_max_free_family_rank(g, k1());
        CHECK(r >= g.vertex_count() - 1);
    }
}
