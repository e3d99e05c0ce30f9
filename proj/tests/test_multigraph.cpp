#include "doctest.h"

#include "fanforge/iso.hpp"
#include "fanforge/multigraph.hpp"

using namespace fanforge;

namespace {

int parallel_classes_of_size(const Multigraph& g, int size) {
    std::map<std::pair<VertexId, VertexId>, int> counts;
    for (const auto& [e, p] : g.edges())
        if (p.u != p.v) counts[{p.u, p.v}]++;
    int k = 0;
    for (const auto& [pair, c] : counts)
        if (c == size) ++k;
    return k;
}

} // namespace

TEST_CASE("contract_edge keeps multigraph structure") {
    Multigraph k4 = make_complete(4);
    EdgeId e = *k4.edge_ids().begin();
    Multigraph q = contract_edge(k4, e);
    CHECK(q.vertex_count() == 3);
    CHECK(q.edge_count() == 5);
    CHECK(parallel_classes_of_size(q, 2) == 2); // both far vertices doubly joined
    CHECK(parallel_classes_of_size(q, 1) == 1);

    Multigraph tri = make_cycle(3);
    Multigraph t = contract_edge(tri, 0);
    CHECK(t.vertex_count() == 2);
    CHECK(t.edge_count() == 2);
    CHECK(parallel_classes_of_size(t, 2) == 1); // doubled edge

    // prism / matching edge = the 5-vertex wheel
    Multigraph prism = make_prism();
    auto match = prism.edge_between(0, 3);
    REQUIRE(match.has_value());
    Multigraph w = contract_edge(prism, *match);
    CHECK(w.vertex_count() == 5);
    CHECK(w.edge_count() == 8);
    CHECK(w.is_simple());
    CHECK(is_wheel(w));
    CHECK(is_isomorphic(w, make_wheel(4)));
}

TEST_CASE("contract_edge error cases") {
    Multigraph g;
    g.add_vertex(0);
    g.add_edge(0, 0); // loop
    CHECK_THROWS_AS(contract_edge(g, 0), loop_contraction_error);
    CHECK_THROWS_AS(contract_edge(g, 99), unknown_id_error);
}

TEST_CASE("contraction history partitions the original vertices") {
    Multigraph k4 = make_complete(4);
    Multigraph q = contract_edge(contract_edge(k4, 0), 4);
    std::set<VertexId> all;
    std::size_t total = 0;
    for (const auto& [v, absorbed] : q.history()) {
        all.insert(absorbed.begin(), absorbed.end());
        total += absorbed.size();
    }
    CHECK(all == std::set<VertexId>{0, 1, 2, 3});
    CHECK(total == 4);
}

TEST_CASE("delete operations") {
    Multigraph k4 = make_complete(4);
    Multigraph d = delete_edge(k4, 0);
    CHECK(d.vertex_count() == 4);
    CHECK(d.edge_count() == 5); // 4-cycle plus a chord

    Multigraph c5 = make_cycle(5);
    Multigraph cut = delete_vertices(c5, {0, 2});
    CHECK_FALSE(is_connected(cut));

    Multigraph prism = make_prism();
    auto match = prism.edge_between(1, 4);
    Multigraph p = delete_edge(prism, *match);
    CHECK(p.degree(1) == 2);
    CHECK(p.degree(4) == 2);
    CHECK(p.degree(0) == 3);

    CHECK_THROWS_AS(delete_edge(k4, 77), unknown_id_error);
    CHECK_THROWS_AS(delete_vertices(k4, {9}), unknown_id_error);
}

TEST_CASE("simplify keeps the lowest id of each parallel class") {
    Multigraph g;
    for (int i = 0; i < 3; ++i) g.add_vertex();
    EdgeId a = g.add_edge(0, 1);
    EdgeId b = g.add_edge(1, 0); // parallel to a
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    EdgeId loop = g.add_edge(2, 2);
    Multigraph s = simplify(g);
    CHECK(s.edge_count() == 3);
    CHECK(s.has_edge(a));
    CHECK_FALSE(s.has_edge(b));
    CHECK_FALSE(s.has_edge(loop));
    CHECK(is_isomorphic(s, make_cycle(3)));

    // simple graphs are untouched; idempotence
    Multigraph k4 = make_complete(4);
    CHECK(simplify(k4).edges() == k4.edges());
    Multigraph ss = simplify(s);
    CHECK(ss.edges() == s.edges());

    // K4/e then simplify = triangle
    Multigraph q = simplify(contract_edge(k4, 0));
    CHECK(is_isomorphic(q, make_cycle(3)));
}

TEST_CASE("cosimplify contracts degree-2 paths") {
    // a path of length 3 between two anchors inside K4: subdivide one edge
    Multigraph g = make_complete(4);
    g = delete_edge(g, 0); // edge 0 = {0,1}
    VertexId a = g.add_vertex();
    VertexId b = g.add_vertex();
    g.add_edge(0, a);
    g.add_edge(a, b);
    g.add_edge(b, 1);
    Multigraph c = cosimplify(g);
    CHECK(is_isomorphic(c, make_complete(4)));

    // 3-connected simple graphs are fixed points
    Multigraph prism = make_prism();
    CHECK(cosimplify(prism).edges() == prism.edges());

    // a bare cycle reduces to C3
    Multigraph c5 = make_cycle(5);
    Multigraph c3 = cosimplify(c5);
    CHECK(c3.vertex_count() == 3);
    CHECK(c3.edge_count() == 3);
    CHECK(cosimplify(c3).edges() == c3.edges()); // idempotent

    // degree-<2 vertices vanish first
    Multigraph pend = make_complete(4);
    VertexId w = pend.add_vertex();
    pend.add_edge(0, w);
    CHECK(is_isomorphic(cosimplify(pend), make_complete(4)));

    // a closed degree-2 handle keeps a parallel pair
    Multigraph h = make_complete(4);
    VertexId p1 = h.add_vertex();
    VertexId p2 = h.add_vertex();
    h.add_edge(0, p1);
    h.add_edge(p1, p2);
    h.add_edge(p2, 0);
    Multigraph ch = cosimplify(h);
    CHECK(ch.vertex_count() == 5); // the handle keeps one middle vertex
    CHECK(ch.edge_count() == 8);   // K4 plus a parallel pair through it
    CHECK_FALSE(ch.is_simple());
    CHECK(cosimplify(ch).edges() == ch.edges());
}

TEST_CASE("paper-sense k-connectivity") {
    CHECK(is_k_connected(make_complete(4), 3));
    CHECK_FALSE(is_k_connected(make_cycle(5), 3));
    CHECK(is_k_connected(make_cycle(5), 2));

    // triangle with one doubled edge: forced by the definition
    Multigraph t = make_cycle(3);
    t.add_edge(0, 1);
    CHECK(is_k_connected(t, 3));

    // single vertex is k-connected for every k; the empty remainder counts
    // as connected
    Multigraph k1 = make_complete(1);
    CHECK(is_k_connected(k1, 1));
    CHECK(is_k_connected(k1, 7));

    // two parallel vertices
    Multigraph two;
    two.add_vertex();
    two.add_vertex();
    two.add_edge(0, 1);
    CHECK(is_k_connected(two, 3));

    // monotone decreasing in k; k=1 is connectivity
    Multigraph prism = make_prism();
    CHECK(is_k_connected(prism, 1));
    CHECK(is_k_connected(prism, 2));
    CHECK(is_k_connected(prism, 3));
    CHECK_FALSE(is_k_connected(prism, 4));
    CHECK(is_k_connected(prism, 1) == is_connected(prism));
}

TEST_CASE("rank and rank-sum") {
    Multigraph tri = make_cycle(3);
    CHECK(rank(tri, tri.edge_ids()) == 2);
    CHECK(rank(tri, {}) == 0);

    // two vertex-disjoint triangles
    Multigraph g;
    for (int i = 0; i < 6; ++i) g.add_vertex();
    EdgeSet t1, t2;
    t1.insert(g.add_edge(0, 1));
    t1.insert(g.add_edge(1, 2));
    t1.insert(g.add_edge(0, 2));
    t2.insert(g.add_edge(3, 4));
    t2.insert(g.add_edge(4, 5));
    t2.insert(g.add_edge(3, 5));
    EdgeSet both = t1;
    both.insert(t2.begin(), t2.end());
    CHECK(rank(g, both) == 4);
    CHECK(rank_sum(g, {t1, t2}) == 4);

    // a loop has rank zero
    Multigraph l;
    l.add_vertex();
    EdgeId loop = l.add_edge(0, 0);
    CHECK(rank(l, {loop}) == 0);
}

TEST_CASE("rank drops by one per useful contraction") {
    // property: contracting a non-loop edge of a spanning forest reduces the
    // full-edge-set rank by exactly one
    for (Multigraph g : {make_prism(), make_wheel(5), make_complete(5), make_hypercube(3)}) {
        int r = rank(g, g.edge_ids());
        for (EdgeId e : g.edge_ids()) {
            Multigraph q = contract_edge(g, e);
            CHECK(rank(q, q.edge_ids()) == r - 1);
        }
    }
}

TEST_CASE("named generators and is_wheel") {
    Multigraph w4 = make_wheel(4);
    CHECK(w4.vertex_count() == 5);
    CHECK(w4.edge_count() == 8);
    CHECK(is_wheel(w4));
    CHECK(wheel_hub(w4) == 0);

    Multigraph prism = make_prism();
    CHECK(prism.vertex_count() == 6);
    CHECK(prism.edge_count() == 9);
    CHECK(has_triangle(prism));
    CHECK_FALSE(is_wheel(prism));

    Multigraph q3 = make_hypercube(3);
    CHECK(q3.vertex_count() == 8);
    CHECK(q3.edge_count() == 12);
    CHECK_FALSE(has_triangle(q3));
    CHECK(is_k_connected(q3, 3));

    CHECK(is_wheel(make_complete(4))); // W3
    CHECK_FALSE(is_wheel(make_complete(5)));
    CHECK_FALSE(is_wheel(make_complete_bipartite(3, 3)));
    CHECK_THROWS_AS(make_wheel(2), precondition_error);
    CHECK_THROWS_AS(make_hypercube(0), precondition_error);
}

TEST_CASE("triangle quotients of 3-connected graphs gain parallels") {
    for (Multigraph g : {make_wheel(4), make_wheel(5), make_prism(), make_complete(5)}) {
        if (g.vertex_count() < 5) continue;
        for (const auto& [e, p] : g.edges()) {
            bool in_triangle = false;
            for (VertexId w : g.vertices())
                if (w != p.u && w != p.v && g.adjacent(p.u, w) && g.adjacent(p.v, w))
                    in_triangle = true;
            if (!in_triangle) continue;
            CHECK_FALSE(contract_edge(g, e).is_simple());
        }
    }
}

TEST_CASE("blocks partition the edges") {
    // two triangles sharing a vertex plus a bridge
    Multigraph g;
    for (int i = 0; i < 6; ++i) g.add_vertex();
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(2, 4);
    g.add_edge(4, 5); // bridge
    auto bs = blocks(g);
    CHECK(bs.size() == 3);
    std::size_t total = 0;
    for (const auto& b : bs) total += b.size();
    CHECK(total == g.edge_ids().size());
    int bridges = 0;
    for (const auto& b : bs)
        if (b.size() == 1) ++bridges;
    CHECK(bridges == 1);
}

TEST_CASE("edge list round trip") {
    Multigraph g = make_prism();
    g.add_vertex(99);
    Multigraph back = Multigraph::from_edge_list(g.to_edge_list());
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edge_count() == g.edge_count());
    CHECK(is_isomorphic(back, g));
}
