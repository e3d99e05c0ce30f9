#include "fanforge/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

#include "fanforge/iso.hpp"
#include "fanforge/minor.hpp"

namespace fanforge {

SizeGuard SizeGuard::from_env() {
    SizeGuard g;
    if (const char* env = std::getenv("FANFORGE_SIZE_GUARD")) {
        std::string s(env);
        auto colon = s.find(':');
        try {
            if (colon == std::string::npos) {
                g.max_vertices = std::stoi(s);
                g.max_edges = g.max_vertices * (g.max_vertices - 1); // generous
            } else {
                g.max_vertices = std::stoi(s.substr(0, colon));
                g.max_edges = std::stoi(s.substr(colon + 1));
            }
        } catch (const std::exception&) {
            throw precondition_error("FANFORGE_SIZE_GUARD must be \"V\" or \"V:E\"");
        }
    }
    return g;
}

void SizeGuard::check(const Multigraph& g) const {
    if (g.vertex_count() > max_vertices || g.edge_count() > max_edges)
        throw size_guard_exceeded("input beyond size guard (" + std::to_string(g.vertex_count()) +
                                  " vertices, " + std::to_string(g.edge_count()) + " edges)");
}

namespace {

struct Candidate {
    EdgeSet edges;
    MemberKind kind;
    int member_rank;
};

// Candidate members for family search: distinct inner-fan edge sets plus all
// contractible singletons, ordered by decreasing rank then lexicographically.
std::vector<Candidate> family_candidates(const Multigraph& g, const Multigraph& h) {
    std::vector<Candidate> cands;
    std::set<EdgeSet> seen;
    for (const InnerFan& f : inner_fans(g, h))
        if (seen.insert(f.edges).second)
            cands.push_back({f.edges, MemberKind::InnerFan, rank(g, f.edges)});
    for (EdgeId e : h_contractible_edges(g, h)) {
        EdgeSet s{e};
        if (seen.insert(s).second) cands.push_back({s, MemberKind::ContractibleSingleton, 1});
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        if (a.member_rank != b.member_rank) return a.member_rank > b.member_rank;
        return a.edges < b.edges;
    });
    return cands;
}

struct FamilySearch {
    const Multigraph& g;
    const std::vector<Candidate>& cands;
    std::vector<int> suffix_rank; // bound: total rank available from index i on
    int best_rank = -1;
    std::vector<int> best_pick;
    std::vector<int> pick;
    int stop_at; // early exit once a family of this rank is found (-1: never)

    FamilySearch(const Multigraph& host, const std::vector<Candidate>& c, int stop)
        : g(host), cands(c), stop_at(stop) {
        suffix_rank.assign(cands.size() + 1, 0);
        for (int i = static_cast<int>(cands.size()) - 1; i >= 0; --i)
            suffix_rank[i] = suffix_rank[i + 1] + cands[i].member_rank;
    }

    bool done() const { return stop_at >= 0 && best_rank >= stop_at; }

    void dfs(std::size_t from, const EdgeSet& picked_union, int cur_rank) {
        if (cur_rank > best_rank) {
            best_rank = cur_rank;
            best_pick = pick;
        }
        if (done()) return;
        for (std::size_t i = from; i < cands.size(); ++i) {
            if (cur_rank + suffix_rank[i] < std::max(best_rank + 1, stop_at)) return;
            const Candidate& c = cands[i];
            bool disjoint = true;
            for (EdgeId e : c.edges)
                if (picked_union.count(e)) {
                    disjoint = false;
                    break;
                }
            if (!disjoint) continue;
            EdgeSet u = picked_union;
            u.insert(c.edges.begin(), c.edges.end());
            // free extension: rank must be fully additive
            if (rank(g, u) != cur_rank + c.member_rank) continue;
            pick.push_back(static_cast<int>(i));
            dfs(i + 1, u, cur_rank + c.member_rank);
            pick.pop_back();
            if (done()) return;
        }
    }
};

FanFamily family_from_pick(const Multigraph& g, const Multigraph& h,
                           const std::vector<Candidate>& cands, const std::vector<int>& pick) {
    FanFamily fam;
    fam.host = g;
    fam.minor = h;
    for (int i : pick) fam.push(cands[i].edges, cands[i].kind);
    return fam;
}

} // namespace

std::pair<int, FanFamily> oracle_max_free_family_rank(const Multigraph& g, const Multigraph& h,
                                                      const SizeGuard& guard) {
    guard.check(g);
    auto cands = family_candidates(g, h);
    FamilySearch search(g, cands, -1);
    search.dfs(0, {}, 0);
    return {search.best_rank, family_from_pick(g, h, cands, search.best_pick)};
}

std::pair<int, EdgeSet> oracle_max_contractible_forest(const Multigraph& g, const Multigraph& h,
                                                       const SizeGuard& guard) {
    guard.check(g);
    EdgeSet contractible = h_contractible_edges(g, h);
    // greedy forest in edge-id order is a maximum forest of the fixed set
    EdgeSet forest;
    for (EdgeId e : contractible) {
        EdgeSet trial = forest;
        trial.insert(e);
        if (rank(g, trial) == static_cast<int>(trial.size())) forest = trial;
    }
    return {rank(g, contractible), forest};
}

FanFamily oracle_base_case_family(const Multigraph& g, const Multigraph& h, int target,
                                  const SizeGuard& guard) {
    guard.check(g);
    if (target < 0) target = g.vertex_count() - h.vertex_count();
    if (target < 0) target = 0;
    auto cands = family_candidates(g, h);
    FamilySearch search(g, cands, target);
    search.dfs(0, {}, 0);
    if (search.best_rank < target)
        throw theorem_violation("oracle_base_case_family: no free family of rank " +
                                std::to_string(target) + " in a " +
                                std::to_string(g.vertex_count()) + "-vertex base graph");
    return family_from_pick(g, h, cands, search.best_pick);
}

std::vector<Multigraph> enumerate_graphs(int n, const std::function<bool(const Multigraph&)>& keep) {
    if (n < 1) throw precondition_error("enumerate_graphs: n >= 1");
    if (n > 10) throw size_guard_exceeded("enumerate_graphs beyond 10 vertices");
    std::vector<Multigraph> level;
    {
        Multigraph g1;
        g1.add_vertex();
        level.push_back(g1);
    }
    for (int size = 2; size <= n; ++size) {
        std::vector<Multigraph> next;
        std::unordered_set<std::string> seen;
        for (const Multigraph& base : level) {
            int subsets = 1 << (size - 1);
            for (int mask = 0; mask < subsets; ++mask) {
                Multigraph g = base;
                VertexId nv = g.add_vertex();
                int bit = 0;
                for (VertexId v : base.vertices()) {
                    if (mask & (1 << bit)) g.add_edge(v, nv);
                    ++bit;
                }
                if (seen.insert(canonical_form(g)).second) next.push_back(std::move(g));
            }
        }
        level = std::move(next);
    }
    if (!keep) return level;
    std::vector<Multigraph> out;
    for (auto& g : level)
        if (keep(g)) out.push_back(std::move(g));
    return out;
}

std::vector<Multigraph> enumerate_three_connected(int max_n) {
    std::vector<Multigraph> out;
    for (int n = 4; n <= max_n; ++n) {
        auto batch = enumerate_graphs(n, [](const Multigraph& g) {
            for (VertexId v : g.vertices())
                if (g.degree(v) < 3) return false; // cheap filter first
            return is_three_connected(g);
        });
        for (auto& g : batch) out.push_back(std::move(g));
    }
    return out;
}

} // namespace fanforge
