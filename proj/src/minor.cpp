#include "fanforge/minor.hpp"

#include <algorithm>
#include <unordered_set>

#include "fanforge/iso.hpp"
#include "json.hpp"

namespace fanforge {

Multigraph replay(const Multigraph& g, const std::vector<MinorStep>& steps) {
    Multigraph cur = g;
    for (const MinorStep& s : steps) {
        switch (s.op) {
            case MinorOp::Contract: cur = contract_edge(cur, s.id); break;
            case MinorOp::DeleteEdge: cur = delete_edge(cur, s.id); break;
            case MinorOp::DeleteVertex: cur = delete_vertex(cur, s.id); break;
        }
    }
    return cur;
}

bool verify_certificate(const Multigraph& g, const Multigraph& h, const MinorCertificate& cert) {
    Multigraph reduced;
    try {
        reduced = replay(g, cert.steps);
    } catch (const std::invalid_argument&) {
        return false;
    }
    // final_isomorphism must be a bijection V(reduced) -> V(h) matching edge
    // multiplicities and loop counts exactly
    const auto& map = cert.final_isomorphism;
    if (map.size() != reduced.vertices().size()) return false;
    std::set<VertexId> image;
    for (VertexId v : reduced.vertices()) {
        auto it = map.find(v);
        if (it == map.end() || !h.has_vertex(it->second)) return false;
        image.insert(it->second);
    }
    if (image.size() != h.vertices().size()) return false;
    auto profile = [](const Multigraph& x, const std::map<VertexId, VertexId>* m) {
        std::map<std::pair<VertexId, VertexId>, int> p;
        for (const auto& [e, q] : x.edges()) {
            VertexId a = m ? m->at(q.u) : q.u;
            VertexId b = m ? m->at(q.v) : q.v;
            p[{std::min(a, b), std::max(a, b)}]++;
        }
        return p;
    };
    return profile(reduced, &map) == profile(h, nullptr);
}

std::string certificate_to_json(const MinorCertificate& cert) {
    nlohmann::json j;
    j["steps"] = nlohmann::json::array();
    for (const MinorStep& s : cert.steps) {
        const char* op = s.op == MinorOp::Contract ? "contract"
                         : s.op == MinorOp::DeleteEdge ? "delete-edge"
                                                       : "delete-vertex";
        j["steps"].push_back(nlohmann::json::array({op, s.id}));
    }
    nlohmann::json iso = nlohmann::json::object();
    for (const auto& [a, b] : cert.final_isomorphism) iso[std::to_string(a)] = b;
    j["isomorphism"] = iso;
    return j.dump();
}

MinorCertificate certificate_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    MinorCertificate cert;
    for (const auto& s : j.at("steps")) {
        std::string op = s.at(0).get<std::string>();
        MinorOp mo = op == "contract" ? MinorOp::Contract
                     : op == "delete-edge" ? MinorOp::DeleteEdge
                                           : MinorOp::DeleteVertex;
        cert.steps.push_back({mo, s.at(1).get<int>()});
    }
    for (auto it = j.at("isomorphism").begin(); it != j.at("isomorphism").end(); ++it)
        cert.final_isomorphism[std::stoi(it.key())] = it.value().get<VertexId>();
    return cert;
}

namespace {

struct MinorSearch {
    const Multigraph& h;
    bool h_connected;
    std::unordered_set<std::string> failed;
    std::vector<MinorStep> steps;
    std::map<VertexId, VertexId> final_iso;
    bool found = false;

    explicit MinorSearch(const Multigraph& target)
        : h(target), h_connected(is_connected(target)) {}

    // Drop loops, parallel duplicates, isolated vertices, and (when h is
    // connected) components too small to host h. Safe for simple h.
    Multigraph normalize(Multigraph g) {
        EdgeSet drop;
        std::set<std::pair<VertexId, VertexId>> seen;
        for (const auto& [e, p] : g.edges()) {
            if (p.u == p.v) {
                drop.insert(e);
                continue;
            }
            if (!seen.insert({p.u, p.v}).second) drop.insert(e);
        }
        for (EdgeId e : drop) {
            steps.push_back({MinorOp::DeleteEdge, e});
            g = delete_edge(g, e);
        }
        if (h.vertex_count() >= 1) {
            bool h_has_isolated = false;
            for (VertexId v : h.vertices())
                if (h.degree(v) == 0) h_has_isolated = true;
            if (!h_has_isolated && h.edge_count() > 0) {
                std::set<VertexId> iso;
                for (VertexId v : g.vertices())
                    if (g.degree(v) == 0) iso.insert(v);
                for (VertexId v : iso) {
                    steps.push_back({MinorOp::DeleteVertex, v});
                    g = delete_vertex(g, v);
                }
            }
        }
        if (h_connected && h.vertex_count() >= 1) {
            for (const auto& comp : components(g)) {
                if (static_cast<int>(comp.size()) < h.vertex_count()) {
                    for (VertexId v : comp) steps.push_back({MinorOp::DeleteVertex, v});
                    g = delete_vertices(g, comp);
                }
            }
        }
        return g;
    }

    bool search(const Multigraph& g) {
        if (g.vertex_count() < h.vertex_count() || g.edge_count() < h.edge_count()) return false;
        // every contraction spends at least one edge
        if (g.vertex_count() - h.vertex_count() > g.edge_count() - h.edge_count()) return false;
        if (g.vertex_count() == h.vertex_count() && g.edge_count() == h.edge_count()) {
            auto iso = isomorphism(g, h);
            if (iso) {
                final_iso = *iso;
                found = true;
                return true;
            }
            return false;
        }
        std::string key = canonical_form(g);
        if (failed.count(key)) return false;

        std::size_t mark = steps.size();
        // deletions first
        if (g.edge_count() > h.edge_count()) {
            for (const auto& [e, p] : g.edges()) {
                steps.push_back({MinorOp::DeleteEdge, e});
                Multigraph child = normalize(delete_edge(g, e));
                if (search(child)) return true;
                steps.resize(mark);
            }
        }
        if (g.vertex_count() > h.vertex_count()) {
            for (const auto& [e, p] : g.edges()) {
                if (p.u == p.v) continue;
                steps.push_back({MinorOp::Contract, e});
                Multigraph child = normalize(contract_edge(g, e));
                if (search(child)) return true;
                steps.resize(mark);
            }
        }
        failed.insert(std::move(key));
        return false;
    }
};

} // namespace

std::optional<MinorCertificate> has_minor(const Multigraph& g, const Multigraph& h) {
    if (!h.is_simple()) throw precondition_error("has_minor: minor must be simple");
    if (h.vertex_count() == 0) {
        MinorCertificate cert;
        for (VertexId v : g.vertices()) cert.steps.push_back({MinorOp::DeleteVertex, v});
        return cert;
    }
    if (h.vertex_count() == 1 && h.edge_count() == 0) {
        if (g.empty()) return std::nullopt;
        MinorCertificate cert;
        for (const auto& [e, p] : g.edges()) cert.steps.push_back({MinorOp::DeleteEdge, e});
        VertexId keep = *g.vertices().begin();
        for (VertexId v : g.vertices())
            if (v != keep) cert.steps.push_back({MinorOp::DeleteVertex, v});
        cert.final_isomorphism[keep] = *h.vertices().begin();
        return cert;
    }
    MinorSearch ms(h);
    Multigraph start = ms.normalize(g);
    if (!ms.search(start)) return std::nullopt;
    MinorCertificate cert;
    cert.steps = std::move(ms.steps);
    cert.final_isomorphism = std::move(ms.final_iso);
    return cert;
}

bool has_minor_quick(const Multigraph& g, const Multigraph& h) {
    if (!h.is_simple()) throw precondition_error("has_minor: minor must be simple");
    if (h.vertex_count() == 0) return true;
    if (h.vertex_count() == 1 && h.edge_count() == 0) return !g.empty();
    MinorSearch ms(h);
    Multigraph start = ms.normalize(g);
    return ms.search(start);
}

SplitterStep splitter_edge(const Multigraph& g, const Multigraph& h) {
    if (!g.is_simple()) throw precondition_error("splitter_edge: host must be simple");
    if (!is_three_connected(g)) throw precondition_error("splitter_edge: host must be 3-connected");
    if (g.vertex_count() < 4) throw precondition_error("splitter_edge: host needs at least 4 vertices");
    if (is_wheel(g)) throw precondition_error("splitter_edge: wheel input");
    if (is_isomorphic(g, h)) throw precondition_error("splitter_edge: identical minor");
    if (!has_minor_quick(g, h)) throw precondition_error("splitter_edge: no h-minor present");

    for (const auto& [e, p] : g.edges()) {
        Multigraph contracted = contract_edge(g, e);
        if (contracted.is_simple() && is_three_connected(contracted) && has_minor_quick(contracted, h))
            return {e, SplitterMode::Contract};
        Multigraph deleted = delete_edge(g, e);
        if (is_three_connected(deleted) && has_minor_quick(deleted, h))
            return {e, SplitterMode::Delete};
    }
    throw theorem_violation("splitter_edge: search exhausted with no admissible edge");
}

} // namespace fanforge
