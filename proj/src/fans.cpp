#include "fanforge/fans.hpp"

#include <algorithm>
#include <map>

#include "fanforge/minor.hpp"
#include "json.hpp"

namespace fanforge {

const char* fan_class_name(FanClass c) {
    switch (c) {
        case FanClass::TriangleToTriangle: return "triangle-to-triangle";
        case FanClass::WyeToTriangle: return "wye-to-triangle";
        case FanClass::WyeToWye: return "wye-to-wye";
    }
    return "?";
}

TripleKind classify_triple(const Multigraph& g, EdgeId a, EdgeId b, EdgeId c) {
    if (a == b || b == c || a == c) return TripleKind::None;
    Endpoints pa = g.endpoints(a), pb = g.endpoints(b), pc = g.endpoints(c);
    if (pa.u == pa.v || pb.u == pb.v || pc.u == pc.v) return TripleKind::None;
    // wye: the full star of a degree-3 center with three distinct leaves.
    // The degree condition makes a wye a triad (3-edge cocircuit), which is
    // what the contraction lemmas need of it.
    for (VertexId center : {pa.u, pa.v}) {
        if (g.degree(center) != 3) continue;
        auto leaf = [center](Endpoints p) -> std::optional<VertexId> {
            if (p.u == center) return p.v;
            if (p.v == center) return p.u;
            return std::nullopt;
        };
        auto la = leaf(pa), lb = leaf(pb), lc = leaf(pc);
        if (la && lb && lc && *la != *lb && *lb != *lc && *la != *lc) return TripleKind::Wye;
    }
    // triangle: the three endpoint pairs are the three pairs of a 3-set
    std::set<std::pair<VertexId, VertexId>> pairs{{pa.u, pa.v}, {pb.u, pb.v}, {pc.u, pc.v}};
    std::set<VertexId> verts{pa.u, pa.v, pb.u, pb.v, pc.u, pc.v};
    if (pairs.size() == 3 && verts.size() == 3) return TripleKind::Triangle;
    return TripleKind::None;
}

std::vector<std::array<EdgeId, 3>> find_wyes(const Multigraph& g) {
    std::vector<std::array<EdgeId, 3>> out;
    for (VertexId v : g.vertices()) {
        if (g.degree(v) != 3) continue;
        auto inc = g.incident_edges(v);
        if (inc.size() != 3) continue; // a loop at v rules the star out
        if (classify_triple(g, inc[0], inc[1], inc[2]) == TripleKind::Wye)
            out.push_back({inc[0], inc[1], inc[2]});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::array<EdgeId, 3>> find_triangles(const Multigraph& g) {
    std::vector<std::array<EdgeId, 3>> out;
    std::vector<VertexId> vs(g.vertices().begin(), g.vertices().end());
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            for (std::size_t k = j + 1; k < vs.size(); ++k) {
                for (EdgeId ab : g.edges_between(vs[i], vs[j]))
                    for (EdgeId bc : g.edges_between(vs[j], vs[k]))
                        for (EdgeId ca : g.edges_between(vs[k], vs[i])) {
                            std::array<EdgeId, 3> t{ab, bc, ca};
                            std::sort(t.begin(), t.end());
                            out.push_back(t);
                        }
            }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::optional<VertexId> shared_vertex(Endpoints a, Endpoints b) {
    if (a.u == b.u || a.u == b.v) return a.u;
    if (a.v == b.u || a.v == b.v) return a.v;
    return std::nullopt;
}

} // namespace

std::optional<Fan> is_fan_ordering(const Multigraph& g, const std::vector<EdgeId>& ordering) {
    std::size_t len = ordering.size();
    if (len < 3) return std::nullopt;
    EdgeSet set(ordering.begin(), ordering.end());
    if (set.size() != len) return std::nullopt;
    for (EdgeId e : ordering)
        if (!g.has_edge(e)) return std::nullopt;
    if (!edge_subgraph(g, set).is_simple()) return std::nullopt;

    std::size_t m = len - 2; // triples T_1..T_m
    std::vector<TripleKind> kind(m + 1, TripleKind::None);
    for (std::size_t i = 1; i <= m; ++i) {
        kind[i] = classify_triple(g, ordering[i - 1], ordering[i], ordering[i + 1]);
        if (kind[i] == TripleKind::None) return std::nullopt;
    }
    for (std::size_t i = 1; i < m; ++i)
        if ((kind[i] == TripleKind::Wye) != (kind[i + 1] == TripleKind::Triangle)) return std::nullopt;

    // spoke/rim roles from the triples
    enum Role { Unset, Spoke, Rim };
    std::vector<Role> role(len, Unset);
    auto assign = [&](std::size_t pos, Role r) {
        if (role[pos] != Unset && role[pos] != r) return false;
        role[pos] = r;
        return true;
    };
    for (std::size_t i = 1; i <= m; ++i) {
        bool tri = kind[i] == TripleKind::Triangle;
        if (!assign(i - 1, tri ? Spoke : Rim)) return std::nullopt;
        if (!assign(i, tri ? Rim : Spoke)) return std::nullopt;
        if (!assign(i + 1, tri ? Spoke : Rim)) return std::nullopt;
    }

    Fan fan;
    fan.ordering = ordering;
    for (std::size_t i = 0; i < len; ++i)
        (role[i] == Spoke ? fan.spokes : fan.rim).push_back(ordering[i]);
    if (fan.spokes.empty() || fan.rim.empty()) return std::nullopt;

    // hub: the vertex all spokes share
    if (fan.spokes.size() >= 2) {
        auto h = shared_vertex(g.endpoints(fan.spokes[0]), g.endpoints(fan.spokes[1]));
        if (!h) return std::nullopt;
        fan.hub = *h;
    } else {
        // single spoke: its end away from the wye center
        EdgeId s = fan.spokes[0];
        auto c = shared_vertex(g.endpoints(fan.rim[0]), g.endpoints(fan.rim[1]));
        if (!c) return std::nullopt;
        fan.hub = g.other_end(s, *c);
    }
    for (EdgeId s : fan.spokes) {
        Endpoints p = g.endpoints(s);
        if (p.u != fan.hub && p.v != fan.hub) return std::nullopt;
    }

    // rim walk, in ordering order
    const auto& rim = fan.rim;
    std::vector<VertexId> path;
    if (rim.size() == 1) {
        Endpoints p = g.endpoints(rim[0]);
        auto c = shared_vertex(g.endpoints(fan.spokes[0]), p);
        if (!c) return std::nullopt;
        VertexId first = (role[0] == Spoke) ? *c : g.other_end(rim[0], *c);
        path = {first, g.other_end(rim[0], first)};
    } else {
        auto c0 = shared_vertex(g.endpoints(rim[0]), g.endpoints(rim[1]));
        if (!c0) return std::nullopt;
        path.push_back(g.other_end(rim[0], *c0));
        VertexId cur = *c0;
        path.push_back(cur);
        for (std::size_t j = 1; j < rim.size(); ++j) {
            Endpoints p = g.endpoints(rim[j]);
            if (p.u != cur && p.v != cur) return std::nullopt;
            cur = g.other_end(rim[j], cur);
            path.push_back(cur);
        }
    }
    fan.rim_path = path;

    // hub off the rim; rim vertices distinct except a possible closing wrap
    for (VertexId v : path)
        if (v == fan.hub) return std::nullopt;
    std::set<VertexId> distinct(path.begin(), path.end());
    if (distinct.size() == path.size()) {
        fan.wraps = false;
    } else if (distinct.size() == path.size() - 1 && path.front() == path.back()) {
        fan.wraps = true;
    } else {
        return std::nullopt;
    }

    // spokes hit the rim vertices in order: leading rim edge shifts targets by
    // one
    std::size_t offset = (role[0] == Rim) ? 1 : 0;
    if (fan.spokes.size() + offset > path.size()) return std::nullopt;
    for (std::size_t i = 0; i < fan.spokes.size(); ++i) {
        VertexId target = path[i + offset];
        if (g.other_end(fan.spokes[i], fan.hub) != target) return std::nullopt;
    }

    bool first_tri = kind[1] == TripleKind::Triangle;
    bool last_tri = kind[m] == TripleKind::Triangle;
    fan.fan_class = first_tri && last_tri ? FanClass::TriangleToTriangle
                    : !first_tri && !last_tri ? FanClass::WyeToWye
                                              : FanClass::WyeToTriangle;
    return fan;
}

namespace {

// Grow orderings edge by edge from every starting triple. visit() sees each
// valid fan ordering exactly once (in both directions; callers dedupe).
template <typename Visit>
void grow_fan_orderings(const Multigraph& g, const std::vector<EdgeId>* restrict_to, Visit visit) {
    std::vector<EdgeId> pool;
    if (restrict_to)
        pool = *restrict_to;
    else
        for (const auto& [e, p] : g.edges()) pool.push_back(e);

    std::vector<EdgeId> ordering;
    EdgeSet in_use;

    auto simple_with = [&](EdgeId e) {
        Endpoints pe = g.endpoints(e);
        if (pe.u == pe.v) return false;
        for (EdgeId f : ordering) {
            Endpoints pf = g.endpoints(f);
            if (pf == pe) return false;
        }
        return true;
    };

    auto dfs = [&](auto&& self) -> void {
        visit(ordering);
        std::size_t k = ordering.size();
        TripleKind prev = classify_triple(g, ordering[k - 3], ordering[k - 2], ordering[k - 1]);
        for (EdgeId e : pool) {
            if (in_use.count(e) || !simple_with(e)) continue;
            TripleKind next = classify_triple(g, ordering[k - 2], ordering[k - 1], e);
            if (next == TripleKind::None) continue;
            bool alternates = (prev == TripleKind::Wye) == (next == TripleKind::Triangle);
            if (!alternates) continue;
            ordering.push_back(e);
            in_use.insert(e);
            self(self);
            in_use.erase(e);
            ordering.pop_back();
        }
    };

    for (EdgeId a : pool)
        for (EdgeId b : pool) {
            if (b == a) continue;
            for (EdgeId c : pool) {
                if (c == a || c == b) continue;
                if (classify_triple(g, a, b, c) == TripleKind::None) continue;
                if (!edge_subgraph(g, {a, b, c}).is_simple()) continue;
                ordering = {a, b, c};
                in_use = {a, b, c};
                dfs(dfs);
            }
        }
}

std::vector<EdgeId> reversed(const std::vector<EdgeId>& v) {
    return std::vector<EdgeId>(v.rbegin(), v.rend());
}

// Keep the direction with the smaller first edge identifier.
std::vector<EdgeId> canonical_direction(const std::vector<EdgeId>& o) {
    std::vector<EdgeId> r = reversed(o);
    if (r.front() != o.front()) return r.front() < o.front() ? r : o;
    return std::min(o, r);
}

} // namespace

std::vector<Fan> all_wye_to_wye_fans(const Multigraph& g) {
    std::set<std::vector<EdgeId>> orderings;
    grow_fan_orderings(g, nullptr, [&](const std::vector<EdgeId>& o) {
        if (o.size() < 3) return;
        TripleKind first = classify_triple(g, o[0], o[1], o[2]);
        TripleKind last = classify_triple(g, o[o.size() - 3], o[o.size() - 2], o[o.size() - 1]);
        if (first == TripleKind::Wye && last == TripleKind::Wye)
            orderings.insert(canonical_direction(o));
    });
    std::vector<Fan> out;
    for (const auto& o : orderings) {
        auto fan = is_fan_ordering(g, o);
        if (fan) out.push_back(*fan);
    }
    return out;
}

std::vector<Fan> maximal_wye_to_wye_fans(const Multigraph& g) {
    std::vector<Fan> all = all_wye_to_wye_fans(g);
    std::vector<EdgeSet> sets;
    for (const Fan& f : all) sets.push_back(f.edge_set());
    std::vector<Fan> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < all.size() && maximal; ++j) {
            if (i == j || sets[j].size() <= sets[i].size()) continue;
            if (std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end()))
                maximal = false;
        }
        if (maximal) out.push_back(all[i]);
    }
    std::sort(out.begin(), out.end(),
              [](const Fan& a, const Fan& b) { return a.ordering < b.ordering; });
    return out;
}

std::vector<InnerFan> inner_fans(const Multigraph& g, const Multigraph& h) {
    std::vector<InnerFan> out;
    for (const Fan& f : maximal_wye_to_wye_fans(g)) {
        EdgeSet inner(f.ordering.begin() + 1, f.ordering.end() - 1);
        Multigraph quotient = contract_edges(g, inner);
        if (!is_three_connected(quotient)) continue;
        if (!has_minor_quick(quotient, h)) continue;
        InnerFan in;
        in.edges = inner;
        in.enclosing = f;
        in.degenerated = inner.size() == 1;
        out.push_back(std::move(in));
    }
    return out;
}

std::vector<Fan> enclosing_fans_of_inner(const Multigraph& g, const EdgeSet& edges,
                                         const std::vector<Fan>* beams) {
    std::vector<Fan> local;
    if (!beams) {
        local = maximal_wye_to_wye_fans(g);
        beams = &local;
    }
    std::vector<Fan> out;
    for (const Fan& f : *beams) {
        EdgeSet inner(f.ordering.begin() + 1, f.ordering.end() - 1);
        if (inner == edges) out.push_back(f);
    }
    return out;
}

bool is_h_inner_fan(const Multigraph& g, const Multigraph& h, const EdgeSet& edges,
                    const std::vector<Fan>* beams) {
    if (edges.empty()) return false;
    if (enclosing_fans_of_inner(g, edges, beams).empty()) return false;
    Multigraph quotient = contract_edges(g, edges);
    return is_three_connected(quotient) && has_minor_quick(quotient, h);
}

std::vector<Fan> fan_orderings_of_set(const Multigraph& g, const EdgeSet& edges) {
    if (edges.size() < 3) return {};
    for (EdgeId e : edges)
        if (!g.has_edge(e)) return {};
    std::vector<EdgeId> pool(edges.begin(), edges.end());
    std::set<std::vector<EdgeId>> orderings;
    grow_fan_orderings(g, &pool, [&](const std::vector<EdgeId>& o) {
        if (o.size() == edges.size()) orderings.insert(canonical_direction(o));
    });
    std::vector<Fan> out;
    for (const auto& o : orderings) {
        auto fan = is_fan_ordering(g, o);
        if (fan) out.push_back(*fan);
    }
    return out;
}

bool edge_in_wye(const Multigraph& g, EdgeId e) {
    Endpoints p = g.endpoints(e);
    if (p.u == p.v) return false;
    for (VertexId center : {p.u, p.v}) {
        if (g.degree(center) != 3) continue;
        auto inc = g.incident_edges(center);
        if (inc.size() != 3) continue;
        if (classify_triple(g, inc[0], inc[1], inc[2]) == TripleKind::Wye) return true;
    }
    return false;
}

bool edges_share_wye(const Multigraph& g, EdgeId e1, EdgeId e2) {
    if (e1 == e2) return false;
    for (VertexId center : {g.endpoints(e1).u, g.endpoints(e1).v}) {
        Endpoints p2 = g.endpoints(e2);
        if (p2.u != center && p2.v != center) continue;
        if (g.degree(center) != 3) continue;
        auto inc = g.incident_edges(center);
        if (inc.size() != 3) continue;
        if (classify_triple(g, inc[0], inc[1], inc[2]) == TripleKind::Wye) return true;
    }
    return false;
}

std::string fan_to_json(const Fan& fan) {
    nlohmann::json j;
    j["ordering"] = fan.ordering;
    j["class"] = fan_class_name(fan.fan_class);
    j["hub"] = fan.hub;
    j["spokes"] = fan.spokes;
    j["rim"] = fan.rim;
    j["wraps"] = fan.wraps;
    return j.dump();
}

} // namespace fanforge
