#include "fanforge/families.hpp"

#include <algorithm>

#include "fanforge/minor.hpp"
#include "json.hpp"

namespace fanforge {

const char* member_kind_name(MemberKind k) {
    return k == MemberKind::InnerFan ? "inner-fan" : "contractible-singleton";
}

EdgeSet FanFamily::member_union() const {
    EdgeSet u;
    for (const auto& m : members) u.insert(m.begin(), m.end());
    return u;
}

void FanFamily::push(EdgeSet edges, MemberKind kind) {
    members.push_back(std::move(edges));
    kinds.push_back(kind);
}

bool is_h_contractible(const Multigraph& g, const Multigraph& h, EdgeId e) {
    if (g.is_loop(e)) return false;
    Multigraph q = contract_edge(g, e);
    return is_three_connected(q) && has_minor_quick(q, h);
}

EdgeSet h_contractible_edges(const Multigraph& g, const Multigraph& h) {
    EdgeSet out;
    for (const auto& [e, p] : g.edges())
        if (p.u != p.v && is_h_contractible(g, h, e)) out.insert(e);
    return out;
}

std::vector<EdgeSet> circuits_of(const Multigraph& g, const EdgeSet& x) {
    Multigraph sub = edge_subgraph(g, x);
    std::vector<EdgeSet> out;

    // loops and parallel pairs
    std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> classes;
    for (const auto& [e, p] : sub.edges()) {
        if (p.u == p.v)
            out.push_back({e});
        else
            classes[{p.u, p.v}].push_back(e);
    }
    for (const auto& [pair, es] : classes)
        for (std::size_t i = 0; i < es.size(); ++i)
            for (std::size_t j = i + 1; j < es.size(); ++j) out.push_back({es[i], es[j]});

    // vertex cycles of length >= 3, rooted at their smallest vertex; the
    // neighbor order v1 < v_last kills the reversed duplicate
    std::vector<VertexId> vs(sub.vertices().begin(), sub.vertices().end());
    std::vector<VertexId> path;
    std::vector<EdgeId> path_edges;
    std::set<VertexId> on_path;

    auto emit = [&](EdgeId closing) {
        EdgeSet c(path_edges.begin(), path_edges.end());
        c.insert(closing);
        out.push_back(std::move(c));
    };

    auto dfs = [&](auto&& self, VertexId root, VertexId cur) -> void {
        for (EdgeId e : sub.incident_edges(cur)) {
            if (sub.is_loop(e)) continue;
            if (!path_edges.empty() && e == path_edges.back()) continue;
            VertexId nxt = sub.other_end(e, cur);
            if (nxt == root && path.size() >= 3) {
                if (path[1] < path.back()) emit(e);
                continue;
            }
            if (nxt <= root || on_path.count(nxt)) continue;
            path.push_back(nxt);
            on_path.insert(nxt);
            path_edges.push_back(e);
            self(self, root, nxt);
            path_edges.pop_back();
            on_path.erase(nxt);
            path.pop_back();
        }
    };

    for (VertexId root : vs) {
        path = {root};
        on_path = {root};
        path_edges.clear();
        dfs(dfs, root, root);
    }

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int family_rank(const FanFamily& fam) { return rank(fam.host, fam.member_union()); }

int family_rank_sum(const FanFamily& fam) { return rank_sum(fam.host, fam.members); }

FamilyReport validate_family(const FanFamily& fam, const std::vector<Fan>* beams) {
    FamilyReport rep;
    if (fam.members.size() != fam.kinds.size())
        throw precondition_error("validate_family: one kind tag per member required");
    for (const auto& m : fam.members)
        for (EdgeId e : m)
            if (!fam.host.has_edge(e))
                throw precondition_error("validate_family: member edge " + std::to_string(e) +
                                         " not in host");

    // disjointness
    rep.members_disjoint = true;
    EdgeSet seen;
    for (const auto& m : fam.members)
        for (EdgeId e : m)
            if (!seen.insert(e).second) {
                rep.members_disjoint = false;
                rep.problems.push_back("members overlap on edge " + std::to_string(e));
            }

    // per-member legality under the kind tag
    rep.members_legal = true;
    std::vector<Fan> local_beams;
    if (!beams) {
        local_beams = maximal_wye_to_wye_fans(fam.host);
        beams = &local_beams;
    }
    auto is_inner = [&](const EdgeSet& m) {
        for (const Fan& f : *beams) {
            EdgeSet inner(f.ordering.begin() + 1, f.ordering.end() - 1);
            if (inner != m) continue;
            Multigraph q = contract_edges(fam.host, m);
            if (is_three_connected(q) && has_minor_quick(q, fam.minor)) return true;
        }
        return false;
    };
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        const auto& m = fam.members[i];
        bool ok = false;
        if (m.empty()) {
            rep.problems.push_back("empty member");
        } else if (fam.kinds[i] == MemberKind::ContractibleSingleton) {
            ok = m.size() == 1 && is_h_contractible(fam.host, fam.minor, *m.begin());
            if (!ok) rep.problems.push_back("member " + std::to_string(i) + " is not a contractible singleton");
        } else {
            ok = is_inner(m);
            if (!ok) rep.problems.push_back("member " + std::to_string(i) + " is not an inner fan");
        }
        rep.members_legal = rep.members_legal && ok;
    }
    rep.is_h_fan_family = rep.members_disjoint && rep.members_legal;

    EdgeSet u = fam.member_union();
    rep.rank = rank(fam.host, u);
    rep.rank_sum = rank_sum(fam.host, fam.members);

    auto contained_in_member = [&](const EdgeSet& c) {
        for (const auto& m : fam.members)
            if (std::includes(m.begin(), m.end(), c.begin(), c.end())) return true;
        return false;
    };

    bool free_by_circuits = true;
    for (const auto& c : circuits_of(fam.host, u)) {
        bool inside = contained_in_member(c);
        if (!inside) free_by_circuits = false;
        if (!inside && c.size() == 3 && covered_vertices(fam.host, c).size() == 3)
            rep.crossing_triangles.push_back(c);
    }
    bool free_by_rank = rep.rank == rep.rank_sum;
    if (rep.members_disjoint && free_by_circuits != free_by_rank)
        throw theorem_violation("validate_family: circuit-scan freeness disagrees with rank arithmetic");
    rep.is_free = rep.members_disjoint && free_by_circuits;
    return rep;
}

std::string family_to_json(const FanFamily& fam, const FamilyReport& rep) {
    nlohmann::json j;
    j["members"] = nlohmann::json::array();
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        nlohmann::json m;
        m["edges"] = std::vector<EdgeId>(fam.members[i].begin(), fam.members[i].end());
        m["kind"] = member_kind_name(fam.kinds[i]);
        j["members"].push_back(m);
    }
    nlohmann::json r;
    r["is_h_fan_family"] = rep.is_h_fan_family;
    r["is_free"] = rep.is_free;
    r["rank"] = rep.rank;
    r["rank_sum"] = rep.rank_sum;
    r["crossing_triangles"] = nlohmann::json::array();
    for (const auto& t : rep.crossing_triangles)
        r["crossing_triangles"].push_back(std::vector<EdgeId>(t.begin(), t.end()));
    r["problems"] = rep.problems;
    j["report"] = r;
    return j.dump();
}

} // namespace fanforge
