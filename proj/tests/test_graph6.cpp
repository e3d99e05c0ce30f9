#include "doctest.h"

#include "fanforge/graph6.hpp"
#include "fanforge/iso.hpp"
#include "fanforge/oracle.hpp"

using namespace fanforge;

TEST_CASE("graph6 of K4 is the standard C~") {
    CHECK(encode_graph6(make_complete(4)) == "C~");
    Multigraph k4 = decode_graph6("C~");
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);
    CHECK(is_isomorphic(k4, make_complete(4)));
}

TEST_CASE("graph6 header and error reporting") {
    CHECK(is_isomorphic(decode_graph_line(">>graph6<<C~"), make_complete(4)));
    CHECK_THROWS_AS(decode_graph6("C"), graph6_error);     // truncated body
    CHECK_THROWS_AS(decode_graph6("C~~"), graph6_error);   // trailing bytes
    CHECK_THROWS_AS(decode_graph6("C\x1f"), graph6_error); // byte out of range
    CHECK_THROWS_AS(encode_graph6(Multigraph::from_edge_list("0 0\n")), precondition_error);
}

TEST_CASE("graph6 round trip is label-exact on small graphs") {
    for (int n = 1; n <= 6; ++n) {
        auto all = enumerate_graphs(n);
        for (const Multigraph& g : all) {
            Multigraph back = decode_graph6(encode_graph6(g));
            REQUIRE(back.vertex_count() == g.vertex_count());
            REQUIRE(back.edge_count() == g.edge_count());
            // vertices are both 0..n-1: adjacency must agree exactly
            for (VertexId u : g.vertices())
                for (VertexId v : g.vertices())
                    REQUIRE(g.adjacent(u, v) == back.adjacent(u, v));
        }
    }
}

TEST_CASE("graph6 encodes orders above 62") {
    Multigraph path = make_path(70);
    Multigraph back = decode_graph6(encode_graph6(path));
    CHECK(back.vertex_count() == 70);
    CHECK(back.edge_count() == 69);
}

TEST_CASE("sparse6 round trip covers multigraphs") {
    Multigraph g;
    for (int i = 0; i < 4; ++i) g.add_vertex();
    g.add_edge(0, 1);
    g.add_edge(0, 1); // parallel
    g.add_edge(1, 2);
    g.add_edge(2, 2); // loop
    g.add_edge(2, 3);
    Multigraph back = decode_sparse6(encode_sparse6(g));
    REQUIRE(back.vertex_count() == 4);
    REQUIRE(back.edge_count() == 5);
    CHECK(back.edges_between(0, 1).size() == 2);
    CHECK(back.edges_between(2, 2).size() == 1);

    // simple graphs round trip too, including the power-of-two padding corner
    for (int n = 2; n <= 6; ++n)
        for (const Multigraph& h : enumerate_graphs(n)) {
            Multigraph b = decode_sparse6(encode_sparse6(h));
            REQUIRE(b.vertex_count() == h.vertex_count());
            REQUIRE(b.edge_count() == h.edge_count());
            for (VertexId u : h.vertices())
                for (VertexId v : h.vertices())
                    REQUIRE(h.edges_between(u, v).size() == b.edges_between(u, v).size());
        }
}

TEST_CASE("sparse6 power-of-two padding pitfall") {
    // 4 vertices, vertex 2 has an edge, vertex 3 does not: the padding of the
    // final byte must not read back as a loop at vertex 3
    Multigraph g;
    for (int i = 0; i < 4; ++i) g.add_vertex();
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    Multigraph back = decode_sparse6(encode_sparse6(g));
    CHECK(back.vertex_count() == 4);
    CHECK(back.edge_count() == 3);
    CHECK(back.edges_between(3, 3).empty());
}

TEST_CASE("decode_graph_line dispatches on the prefix") {
    Multigraph k4 = make_complete(4);
    CHECK(is_isomorphic(decode_graph_line(encode_sparse6(k4)), k4));
    CHECK(is_isomorphic(decode_graph_line(encode_graph6(k4)), k4));
    CHECK(is_isomorphic(decode_graph_line(">>sparse6<<" + encode_sparse6(k4)), k4));
}
