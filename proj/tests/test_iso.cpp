#include "doctest.h"

#include <random>

#include "fanforge/iso.hpp"
#include "fanforge/multigraph.hpp"

using namespace fanforge;

namespace {

// Relabel vertices and shuffle edge insertion order.
Multigraph scrambled(const Multigraph& g, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<VertexId> vs(g.vertices().begin(), g.vertices().end());
    std::vector<VertexId> target = vs;
    std::shuffle(target.begin(), target.end(), rng);
    std::map<VertexId, VertexId> map;
    for (std::size_t i = 0; i < vs.size(); ++i) map[vs[i]] = target[i];
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& [e, p] : g.edges()) edges.push_back({map[p.u], map[p.v]});
    std::shuffle(edges.begin(), edges.end(), rng);
    Multigraph out;
    for (VertexId v : target) out.add_vertex(v);
    for (auto [u, v] : edges) out.add_edge(u, v);
    return out;
}

} // namespace

TEST_CASE("relabelings share a canonical form") {
    for (const Multigraph& g :
         {make_complete(4), make_wheel(5), make_prism(), make_hypercube(3),
          make_complete_bipartite(3, 3)}) {
        std::string form = canonical_form(g);
        for (unsigned seed = 1; seed <= 5; ++seed)
            CHECK(canonical_form(scrambled(g, seed)) == form);
    }
}

TEST_CASE("K33 and the prism are distinguished") {
    // both are 6-vertex cubic graphs with 9 edges
    CHECK_FALSE(is_isomorphic(make_complete_bipartite(3, 3), make_prism()));
}

TEST_CASE("W4 differs from K4 plus a pendant") {
    Multigraph k4p = make_complete(4);
    VertexId w = k4p.add_vertex();
    k4p.add_edge(0, w);
    CHECK_FALSE(is_isomorphic(make_wheel(4), k4p));
}

TEST_CASE("multiplicities and loops matter") {
    Multigraph a = make_cycle(3);
    Multigraph b = make_cycle(3);
    b.add_edge(0, 1);
    CHECK_FALSE(is_isomorphic(a, b));
    Multigraph c = make_cycle(3);
    c.add_edge(2, 2);
    CHECK_FALSE(is_isomorphic(a, c));
    CHECK(is_isomorphic(b, scrambled(b, 7)));
    CHECK(is_isomorphic(c, scrambled(c, 9)));
}

TEST_CASE("isomorphism returns a usable vertex map") {
    Multigraph g = make_prism();
    Multigraph h = scrambled(g, 3);
    auto map = isomorphism(g, h);
    REQUIRE(map.has_value());
    for (const auto& [e, p] : g.edges())
        CHECK(h.adjacent(map->at(p.u), map->at(p.v)));
    CHECK_FALSE(isomorphism(g, make_complete_bipartite(3, 3)).has_value());
}
