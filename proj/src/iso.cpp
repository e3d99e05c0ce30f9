#include "fanforge/iso.hpp"

#include <algorithm>
#include <sstream>

namespace fanforge {

namespace {

struct Packed {
    int n = 0;
    std::vector<VertexId> verts;
    std::vector<int> loops;           // loops[i]
    std::vector<std::vector<int>> mult; // mult[i][j], i != j
};

Packed pack(const Multigraph& g) {
    Packed p;
    p.verts.assign(g.vertices().begin(), g.vertices().end());
    p.n = static_cast<int>(p.verts.size());
    std::map<VertexId, int> index;
    for (int i = 0; i < p.n; ++i) index[p.verts[i]] = i;
    p.loops.assign(p.n, 0);
    p.mult.assign(p.n, std::vector<int>(p.n, 0));
    for (const auto& [e, q] : g.edges()) {
        int a = index.at(q.u), b = index.at(q.v);
        if (a == b)
            ++p.loops[a];
        else {
            ++p.mult[a][b];
            ++p.mult[b][a];
        }
    }
    return p;
}

// Order-independent color refinement; color values are ranks of sorted
// signatures, so they are themselves isomorphism-invariant.
std::vector<int> refine_colors(const Packed& p) {
    std::vector<int> color(p.n, 0);
    {
        std::vector<std::pair<std::vector<int>, int>> sig(p.n);
        for (int i = 0; i < p.n; ++i) {
            std::vector<int> s{p.loops[i]};
            std::vector<int> ms;
            for (int j = 0; j < p.n; ++j)
                if (j != i && p.mult[i][j]) ms.push_back(p.mult[i][j]);
            std::sort(ms.begin(), ms.end());
            s.insert(s.end(), ms.begin(), ms.end());
            sig[i] = {s, i};
        }
        std::sort(sig.begin(), sig.end());
        int c = 0;
        for (int i = 0; i < p.n; ++i) {
            if (i > 0 && sig[i].first != sig[i - 1].first) ++c;
            color[sig[i].second] = c;
        }
    }
    for (int round = 0; round < p.n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sig(p.n);
        for (int i = 0; i < p.n; ++i) {
            std::vector<std::pair<int, int>> ns;
            for (int j = 0; j < p.n; ++j)
                if (j != i && p.mult[i][j]) ns.emplace_back(p.mult[i][j], color[j]);
            std::sort(ns.begin(), ns.end());
            std::vector<int> s{color[i]};
            for (auto [m, c] : ns) {
                s.push_back(m);
                s.push_back(c);
            }
            sig[i] = {s, i};
        }
        std::sort(sig.begin(), sig.end());
        std::vector<int> next(p.n, 0);
        int c = 0;
        for (int i = 0; i < p.n; ++i) {
            if (i > 0 && sig[i].first != sig[i - 1].first) ++c;
            next[sig[i].second] = c;
        }
        if (next == color) break;
        color = next;
    }
    return color;
}

struct Search {
    const Packed& p;
    const std::vector<int>& color;
    std::vector<int> best;        // full code once found
    std::vector<int> best_order;  // indices achieving best
    std::vector<int> placed;
    std::vector<int> partial;
    std::vector<char> used;

    explicit Search(const Packed& pk, const std::vector<int>& col)
        : p(pk), color(col), used(pk.n, 0) {}

    std::vector<int> row_for(int v) const {
        std::vector<int> row{p.loops[v]};
        for (int q : placed) row.push_back(p.mult[v][q]);
        return row;
    }

    void run() {
        if (p.n == 0) return;
        dfs();
    }

    // Candidates at each depth are the unplaced vertices of minimal refined
    // color, an isomorphism-invariant set, so the minimum over the search
    // tree is a canonical code.
    void dfs() {
        int depth = static_cast<int>(placed.size());
        if (depth == p.n) {
            if (best.empty() || partial < best) {
                best = partial;
                best_order = placed;
            }
            return;
        }
        int cmin = -1;
        for (int v = 0; v < p.n; ++v)
            if (!used[v] && (cmin == -1 || color[v] < cmin)) cmin = color[v];
        std::vector<std::pair<std::vector<int>, int>> cands;
        for (int v = 0; v < p.n; ++v)
            if (!used[v] && color[v] == cmin) cands.push_back({row_for(v), v});
        std::sort(cands.begin(), cands.end());
        std::size_t base = partial.size();
        for (auto& [row, v] : cands) {
            if (!best.empty()) {
                // full prefix compare against the incumbent; rows are sorted,
                // so a strictly greater prefix rules out later siblings too
                int cmp = 0;
                for (std::size_t i = 0; i < base + row.size() && cmp == 0; ++i) {
                    int lhs = i < base ? partial[i] : row[i - base];
                    if (lhs != best[i]) cmp = lhs < best[i] ? -1 : 1;
                }
                if (cmp > 0) break;
            }
            used[v] = 1;
            placed.push_back(v);
            partial.insert(partial.end(), row.begin(), row.end());
            dfs();
            partial.resize(base);
            placed.pop_back();
            used[v] = 0;
        }
    }
};

std::pair<std::string, std::vector<VertexId>> canonical(const Multigraph& g) {
    Packed p = pack(g);
    std::vector<int> color = refine_colors(p);
    Search s(p, color);
    s.run();
    std::ostringstream os;
    os << p.n << '|';
    for (int x : s.best) os << x << ',';
    std::vector<VertexId> order;
    order.reserve(p.n);
    for (int idx : s.best_order) order.push_back(p.verts[idx]);
    return {os.str(), order};
}

std::vector<int> cheap_invariant(const Multigraph& g) {
    std::vector<int> inv{g.vertex_count(), g.edge_count()};
    std::vector<int> degs;
    int loops = 0;
    for (VertexId v : g.vertices()) degs.push_back(g.degree(v));
    for (const auto& [e, p] : g.edges())
        if (p.u == p.v) ++loops;
    std::sort(degs.begin(), degs.end());
    inv.push_back(loops);
    inv.insert(inv.end(), degs.begin(), degs.end());
    return inv;
}

} // namespace

std::string canonical_form(const Multigraph& g) { return canonical(g).first; }

std::vector<VertexId> canonical_order(const Multigraph& g) { return canonical(g).second; }

bool is_isomorphic(const Multigraph& g, const Multigraph& h) {
    if (cheap_invariant(g) != cheap_invariant(h)) return false;
    return canonical_form(g) == canonical_form(h);
}

std::optional<std::map<VertexId, VertexId>> isomorphism(const Multigraph& g,
                                                        const Multigraph& h) {
    if (cheap_invariant(g) != cheap_invariant(h)) return std::nullopt;
    auto [cg, og] = canonical(g);
    auto [ch, oh] = canonical(h);
    if (cg != ch) return std::nullopt;
    std::map<VertexId, VertexId> map;
    for (std::size_t i = 0; i < og.size(); ++i) map[og[i]] = oh[i];
    return map;
}

} // namespace fanforge
