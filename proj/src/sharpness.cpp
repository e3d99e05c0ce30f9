#include "fanforge/sharpness.hpp"

#include <algorithm>

#include "fanforge/graph6.hpp"
#include "json.hpp"

namespace fanforge {

bool SharpnessPair::checks_pass() const {
    for (const auto& [name, pass] : checks)
        if (!pass) return false;
    return true;
}

std::string SharpnessPair::to_json() const {
    nlohmann::json j;
    j["kind"] = kind;
    j["n"] = n;
    j["m"] = m;
    j["k"] = k;
    j["g_graph6"] = encode_graph6(g);
    j["h_graph6"] = encode_graph6(h);
    j["g_order"] = g.vertex_count();
    j["h_order"] = h.vertex_count();
    auto edges = [](const EdgeSet& s) { return std::vector<EdgeId>(s.begin(), s.end()); };
    j["a_edges"] = edges(a_edges);
    j["b_edges"] = edges(b_edges);
    j["z_edges"] = edges(z_edges);
    nlohmann::json cj = nlohmann::json::array();
    for (const auto& [name, pass] : checks) cj.push_back({{"name", name}, {"pass", pass}});
    j["checks"] = cj;
    return j.dump(2);
}

namespace {

struct Gadget {
    Multigraph j;             // the standalone gadget with pendant vertices
    std::vector<VertexId> pendants; // degree-1 vertices, in attachment order
    EdgeSet a_edges, b_edges;
};

// Ladder gadget 1: a top path t_1..t_{2n-4}; hat vertices u_k over consecutive
// top pairs, each dropping to a post x_k; two outer posts tied to the path
// ends; every post carries two pendants.
Gadget build_j1(int n) {
    if (n < 3) throw precondition_error("j1 needs n >= 3");
    Gadget gad;
    Multigraph& j = gad.j;
    int tops = 2 * n - 4, hats = n - 2;
    std::vector<VertexId> t(tops), u(hats), x(n);
    for (int i = 0; i < tops; ++i) t[i] = j.add_vertex();
    for (int i = 0; i < hats; ++i) u[i] = j.add_vertex();
    for (int i = 0; i < n; ++i) x[i] = j.add_vertex();
    for (int i = 0; i + 1 < tops; ++i) gad.b_edges.insert(j.add_edge(t[i], t[i + 1]));
    for (int k = 0; k < hats; ++k) {
        gad.b_edges.insert(j.add_edge(u[k], t[2 * k]));
        gad.b_edges.insert(j.add_edge(u[k], t[2 * k + 1]));
        gad.b_edges.insert(j.add_edge(u[k], x[k + 1]));
    }
    gad.b_edges.insert(j.add_edge(x[0], t[0]));
    gad.b_edges.insert(j.add_edge(x[n - 1], t[tops - 1]));
    for (int i = 0; i < n; ++i)
        for (int p = 0; p < 2; ++p) {
            VertexId w = j.add_vertex();
            gad.pendants.push_back(w);
            gad.a_edges.insert(j.add_edge(x[i], w));
        }
    return gad;
}

// Ladder gadget 2: the top row closes into a cycle and every post has a hat.
Gadget build_j2(int n) {
    if (n < 2) throw precondition_error("j2 needs n >= 2");
    Gadget gad;
    Multigraph& j = gad.j;
    int tops = 2 * n;
    std::vector<VertexId> t(tops), u(n), x(n);
    for (int i = 0; i < tops; ++i) t[i] = j.add_vertex();
    for (int i = 0; i < n; ++i) u[i] = j.add_vertex();
    for (int i = 0; i < n; ++i) x[i] = j.add_vertex();
    for (int i = 0; i < tops; ++i) gad.b_edges.insert(j.add_edge(t[i], t[(i + 1) % tops]));
    for (int k = 0; k < n; ++k) {
        gad.b_edges.insert(j.add_edge(u[k], t[2 * k]));
        gad.b_edges.insert(j.add_edge(u[k], t[2 * k + 1]));
        gad.b_edges.insert(j.add_edge(u[k], x[k]));
    }
    for (int i = 0; i < n; ++i)
        for (int p = 0; p < 2; ++p) {
            VertexId w = j.add_vertex();
            gad.pendants.push_back(w);
            gad.a_edges.insert(j.add_edge(x[i], w));
        }
    return gad;
}

// Glue the gadget onto K_m by identifying its pendant vertices with the first
// 2n clique vertices.
SharpnessPair assemble_j(int which, int n, int m) {
    Gadget gad = which == 1 ? build_j1(n) : build_j2(n);
    int two_n = static_cast<int>(gad.pendants.size());
    if (m < two_n + 1) throw precondition_error("j construction needs m >= 2n+1");

    SharpnessPair out;
    out.kind = which == 1 ? "j1" : "j2";
    out.n = n;
    out.m = m;

    // self-checks on the standalone gadget first
    std::set<VertexId> deg1;
    for (VertexId v : gad.j.vertices())
        if (gad.j.degree(v) == 1) deg1.insert(v);
    out.checks.push_back({"pendant count is 2n",
                          static_cast<int>(deg1.size()) == two_n &&
                              deg1 == std::set<VertexId>(gad.pendants.begin(), gad.pendants.end())});
    EdgeSet pendant_edges;
    for (const auto& [e, p] : gad.j.edges())
        if (deg1.count(p.u) || deg1.count(p.v)) pendant_edges.insert(e);
    out.checks.push_back({"A is exactly the pendant-incident edges", pendant_edges == gad.a_edges});
    int b_cover = static_cast<int>(covered_vertices(gad.j, gad.b_edges).size());
    int want_cover = which == 1 ? 4 * n - 6 : 4 * n;
    out.checks.push_back({"|G[B]| matches the construction", b_cover == want_cover});

    // gluing: rebuild on fresh ids, clique first
    Multigraph g;
    std::vector<VertexId> clique(m);
    for (int i = 0; i < m; ++i) clique[i] = g.add_vertex();
    for (int i = 0; i < m; ++i)
        for (int l = i + 1; l < m; ++l) g.add_edge(clique[i], clique[l]);
    std::map<VertexId, VertexId> to_g;
    for (VertexId v : gad.j.vertices())
        if (!deg1.count(v)) to_g[v] = g.add_vertex();
    for (std::size_t i = 0; i < gad.pendants.size(); ++i) to_g[gad.pendants[i]] = clique[i];
    EdgeSet a_in_g, b_in_g;
    for (const auto& [e, p] : gad.j.edges()) {
        EdgeId ge = g.add_edge(to_g[p.u], to_g[p.v]);
        (gad.a_edges.count(e) ? a_in_g : b_in_g).insert(ge);
    }
    out.g = g;
    out.a_edges = a_in_g;
    out.b_edges = b_in_g;

    out.h = simplify(contract_edges(g, b_in_g));
    out.checks.push_back({"h is simple before simplification",
                          contract_edges(g, b_in_g).is_simple()});
    out.checks.push_back({"g is simple and 3-connected",
                          g.is_simple() && is_three_connected(g)});
    int expected_drop = which == 1 ? 4 * n - 7 : 4 * n - 1;
    out.checks.push_back({"|g| - |h| matches",
                          g.vertex_count() - out.h.vertex_count() == expected_drop});
    out.checks.push_back({"h is 2n-connected", is_k_connected(out.h, two_n)});

    if (!out.checks_pass()) {
        std::string what = "sharpness self-check failed:";
        for (const auto& [name, pass] : out.checks)
            if (!pass) what += " [" + name + "]";
        throw std::runtime_error(what);
    }
    return out;
}

// Largest simplified edge count over contracting one clique edge; the side
// condition wants it strictly below |E(h)|.
int worst_clique_quotient_edges(const SharpnessPair& pair) {
    int worst = -1;
    EdgeSet gadget_edges = pair.a_edges;
    gadget_edges.insert(pair.b_edges.begin(), pair.b_edges.end());
    for (const auto& [e, p] : pair.g.edges()) {
        if (gadget_edges.count(e)) continue; // clique edges only
        Multigraph q = simplify(contract_edge(pair.g, e));
        worst = std::max(worst, q.edge_count());
    }
    return worst;
}

} // namespace

int smallest_feasible_m(int which, int n) {
    int two_n = 2 * n;
    for (int m = two_n + 1; m <= two_n + 16; ++m) {
        SharpnessPair pair = assemble_j(which, n, m);
        if (worst_clique_quotient_edges(pair) < pair.h.edge_count()) return m;
    }
    throw theorem_violation("no feasible m within the search window");
}

SharpnessPair generate_j(int which, int n, int m) {
    if (which != 1 && which != 2) throw precondition_error("kind must be j1 or j2");
    if (m <= 0) m = smallest_feasible_m(which, n);
    SharpnessPair pair = assemble_j(which, n, m);
    bool side = worst_clique_quotient_edges(pair) < pair.h.edge_count();
    pair.checks.push_back({"clique quotients fall short of h's edge count", side});
    if (!side)
        throw std::runtime_error("sharpness self-check failed: [clique quotient side condition]");
    return pair;
}

SharpnessPair generate_trianglefree(int k) {
    if (k < 2 || k > 4) throw precondition_error("trianglefree construction supports 2 <= k <= 4");
    Multigraph base = make_hypercube(k + 1);
    int bn = base.vertex_count();

    SharpnessPair out;
    out.kind = "trianglefree";
    out.k = k;

    // a stable k-set: even-weight vertices are pairwise non-adjacent
    std::vector<VertexId> stable;
    for (int v = 0; v < bn && static_cast<int>(stable.size()) < k; ++v)
        if (__builtin_popcount(static_cast<unsigned>(v)) % 2 == 0) stable.push_back(v);

    Multigraph g;
    std::vector<VertexId> copy1(bn), copy2(bn);
    for (int v = 0; v < bn; ++v) copy1[v] = g.add_vertex();
    for (int v = 0; v < bn; ++v) copy2[v] = g.add_vertex();
    for (const auto& [e, p] : base.edges()) {
        g.add_edge(copy1[p.u], copy1[p.v]);
        g.add_edge(copy2[p.u], copy2[p.v]);
    }
    for (int i = 0; i < k; ++i)
        out.z_edges.insert(g.add_edge(copy1[stable[i]], copy2[stable[i]]));
    out.g = g;
    out.h = simplify(contract_edges(g, out.z_edges));

    out.checks.push_back({"base is (k+1)-connected and triangle-free",
                          is_k_connected(base, k + 1) && !has_triangle(base)});
    bool stable_ok = true;
    for (int i = 0; i < k; ++i)
        for (int l = i + 1; l < k; ++l)
            if (base.adjacent(stable[i], stable[l])) stable_ok = false;
    out.checks.push_back({"the identified k-sets are stable", stable_ok});
    // the remaining vertices need at least k+1 covering edges
    int rest = bn - k;
    out.checks.push_back({"V - X needs more than k covering edges", (rest + 1) / 2 >= k + 1});
    out.checks.push_back({"g is triangle-free", !has_triangle(out.g)});
    out.checks.push_back({"h keeps |g| - k vertices",
                          out.h.vertex_count() == out.g.vertex_count() - k});

    if (!out.checks_pass()) {
        std::string what = "sharpness self-check failed:";
        for (const auto& [name, pass] : out.checks)
            if (!pass) what += " [" + name + "]";
        throw std::runtime_error(what);
    }
    return out;
}

} // namespace fanforge
