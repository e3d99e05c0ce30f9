#include "fanforge/lifting.hpp"

#include <algorithm>
#include <sstream>

#include "fanforge/iso.hpp"
#include "fanforge/oracle.hpp"
#include "json.hpp"

namespace fanforge {

void LiftingTrace::claim(const std::string& name, bool pass) { claims.emplace_back(name, pass); }

std::string LiftingTrace::to_json() const {
    nlohmann::json j;
    j["step"] = {{"edge", step_edge}, {"mode", mode == SplitterMode::Contract ? "contract" : "delete"}};
    auto idx = [](const std::vector<int>& v) { return nlohmann::json(v); };
    j["partition"] = {{"I1", idx(I1)}, {"I2", idx(I2)}, {"I3", idx(I3)}, {"J1", idx(J1)},
                      {"J2", idx(J2)}, {"J3", idx(J3)}, {"K", idx(K)},   {"L", idx(L)}};
    auto edge_map = [](const std::map<int, EdgeId>& m) {
        nlohmann::json o = nlohmann::json::object();
        for (auto [k, v] : m) o[std::to_string(k)] = v;
        return o;
    };
    j["chi"] = edge_map(chi);
    j["psi"] = edge_map(psi);
    nlohmann::json phi_json = nlohmann::json::object();
    for (auto [k, v] : phi) phi_json[std::to_string(k)] = v;
    j["phi"] = phi_json;
    nlohmann::json subs = nlohmann::json::object();
    for (const auto& [k, fams] : subfamilies) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& s : fams) arr.push_back(std::vector<EdgeId>(s.begin(), s.end()));
        subs[std::to_string(k)] = arr;
    }
    j["subfamilies"] = subs;
    j["x_included"] = x_included;
    nlohmann::json cl = nlohmann::json::array();
    for (const auto& [name, pass] : claims) cl.push_back({{"name", name}, {"pass", pass}});
    j["claims"] = cl;
    j["gaps"] = gaps;
    return j.dump();
}

namespace {

using Part = std::pair<EdgeSet, MemberKind>;

// Positional labels of a wye-to-wye fan: spokes y_1..y_n, rims x_0..x_n,
// rim vertices v_0..v_{n+1}, hub u.
struct WWLabels {
    std::vector<EdgeId> spokes;
    std::vector<EdgeId> rims;
    std::vector<VertexId> verts;
    VertexId hub = -1;

    int n() const { return static_cast<int>(spokes.size()); }
    WWLabels reversed() const {
        WWLabels r = *this;
        std::reverse(r.spokes.begin(), r.spokes.end());
        std::reverse(r.rims.begin(), r.rims.end());
        std::reverse(r.verts.begin(), r.verts.end());
        return r;
    }
};

WWLabels ww_labels(const Fan& fan) {
    WWLabels l;
    l.spokes = fan.spokes;
    l.rims = fan.rim;
    l.verts = fan.rim_path;
    l.hub = fan.hub;
    return l;
}

void require(bool cond, const std::string& what) {
    if (!cond) throw precondition_error(what);
}

void verify(bool cond, const std::string& what, const LiftingTrace* tr = nullptr) {
    if (!cond) throw theorem_violation(what, tr ? tr->to_json() : "");
}

// The input family must live on exactly the reduced graph (same labels).
void check_same_labeled_graph(const Multigraph& a, const Multigraph& b, const std::string& what) {
    require(a.vertices() == b.vertices() && a.edges().size() == b.edges().size(), what);
    for (const auto& [e, p] : a.edges()) {
        require(b.has_edge(e) && b.endpoints(e) == p, what);
    }
}

int parts_rank_sum(const Multigraph& g, const std::vector<Part>& parts) {
    int s = 0;
    for (const auto& [edges, kind] : parts) s += rank(g, edges);
    return s;
}

EdgeSet parts_union(const std::vector<Part>& parts) {
    EdgeSet u;
    for (const auto& [edges, kind] : parts) u.insert(edges.begin(), edges.end());
    return u;
}

// ------------------------------------------------------------------
// deletion lift
// ------------------------------------------------------------------

// One replacement family inside a single inner-fan member: the contiguous
// sub-fan spanned by spokes a..b plus singletons on the member's remaining
// rim edges. Spoke indices are 1-based against the enclosure labels.
std::optional<std::vector<Part>> sub_fan_parts(const Multigraph& g, const Multigraph& h,
                                               const WWLabels& enc, int a, int b,
                                               const std::vector<Fan>& beams_g) {
    int n = enc.n();
    if (a < 1 || b > n || a > b) return std::nullopt;
    EdgeSet core;
    for (int i = a; i <= b; ++i) core.insert(enc.spokes[i - 1]);
    for (int i = a; i < b; ++i) core.insert(enc.rims[i]);
    std::vector<Part> parts;
    if (core.size() == 1) {
        if (!is_h_contractible(g, h, *core.begin())) return std::nullopt;
        parts.push_back({core, MemberKind::ContractibleSingleton});
    } else {
        if (!is_h_inner_fan(g, h, core, &beams_g)) return std::nullopt;
        parts.push_back({core, MemberKind::InnerFan});
    }
    for (int i = 1; i < n; ++i) {
        EdgeId rim = enc.rims[i];
        if (core.count(rim)) continue;
        if (!is_h_contractible(g, h, rim)) return std::nullopt;
        parts.push_back({{rim}, MemberKind::ContractibleSingleton});
    }
    return parts;
}

// A non-degenerated inner fan of g\x lifts either unchanged or to a sub-fan
// plus rim singletons; the sub-fan window comes from where x attaches to the
// enclosing fan's rim.
std::vector<Part> lift_deletion_member(const Multigraph& g, const Multigraph& gp,
                                       const Multigraph& h, EdgeId x, const EdgeSet& member,
                                       const std::vector<Fan>& beams_g,
                                       const std::vector<Fan>& beams_gp,
                                       std::vector<std::string>* gaps) {
    if (is_h_inner_fan(g, h, member, &beams_g)) return {{member, MemberKind::InnerFan}};

    Endpoints xe = g.endpoints(x);
    std::vector<Fan> enclosures = enclosing_fans_of_inner(gp, member, &beams_gp);
    verify(!enclosures.empty(), "deletion lift: member lost its enclosing fan");
    // prefer an enclosure whose hub keeps degree >= 4 in g
    std::stable_sort(enclosures.begin(), enclosures.end(), [&](const Fan& f1, const Fan& f2) {
        return (g.degree(f1.hub) >= 4) > (g.degree(f2.hub) >= 4);
    });

    for (const Fan& enc : enclosures) {
        for (int flip = 0; flip < 2; ++flip) {
            WWLabels lab = ww_labels(enc);
            if (flip) lab = lab.reversed();
            int n = lab.n();
            std::vector<int> touched;
            for (int p = 0; p <= n + 1; ++p)
                if (lab.verts[p] == xe.u || lab.verts[p] == xe.v) touched.push_back(p);
            std::vector<int> interior;
            for (int p : touched)
                if (p >= 1 && p <= n) interior.push_back(p);
            if (interior.empty()) continue;
            for (int s : interior) {
                for (int t : touched) {
                    if (t <= s + 1) continue; // the other attachment, right of s
                    auto parts = sub_fan_parts(g, h, lab, s + 1, t - 1, beams_g);
                    if (parts) return *parts;
                }
            }
            if (touched.size() == 1 && touched[0] >= 2) {
                int s = touched[0];
                auto parts = sub_fan_parts(g, h, lab, 1, s - 1, beams_g);
                if (parts) return *parts;
            }
        }
    }

    // verified sweep over all contiguous windows, widest first
    WWLabels lab = ww_labels(enclosures.front());
    int n = lab.n();
    for (int width = n; width >= 1; --width)
        for (int a = 1; a + width - 1 <= n; ++a) {
            auto parts = sub_fan_parts(g, h, lab, a, a + width - 1, beams_g);
            if (parts) {
                if (gaps) gaps->push_back("deletion member lifted by sweep");
                return *parts;
            }
        }
    throw theorem_violation("deletion lift: no admissible sub-fan family for a member");
}

} // namespace

FanFamily lift_through_deletion(const Multigraph& g, EdgeId x, const FanFamily& fam) {
    require(g.is_simple(), "lift_through_deletion: host must be simple");
    require(g.has_edge(x), "lift_through_deletion: unknown edge");
    require(is_three_connected(g), "lift_through_deletion: host must be 3-connected");
    Multigraph gp = delete_edge(g, x);
    require(is_three_connected(gp), "lift_through_deletion: g\\x must be 3-connected");
    check_same_labeled_graph(fam.host, gp, "lift_through_deletion: family host must be g\\x");
    const Multigraph& h = fam.minor;
    require(has_minor_quick(gp, h), "lift_through_deletion: g\\x lost the minor");

    std::vector<Fan> beams_gp = maximal_wye_to_wye_fans(gp);
    FamilyReport in_rep = validate_family(fam, &beams_gp);
    require(in_rep.is_h_fan_family, "lift_through_deletion: input family invalid");
    require(in_rep.crossing_triangles.empty(), "lift_through_deletion: input has crossing triangles");

    std::vector<Fan> beams_g = maximal_wye_to_wye_fans(g);
    FanFamily out;
    out.host = g;
    out.minor = h;
    std::vector<std::string> gaps;
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        const EdgeSet& m = fam.members[i];
        if (m.size() == 1) {
            verify(is_h_contractible(g, h, *m.begin()),
                   "deletion lift: singleton stopped being contractible in g");
            out.push(m, MemberKind::ContractibleSingleton);
            continue;
        }
        for (auto& part : lift_deletion_member(g, gp, h, x, m, beams_g, beams_gp, &gaps))
            out.push(std::move(part.first), part.second);
    }

    FamilyReport rep = validate_family(out, &beams_g);
    verify(rep.is_h_fan_family, "deletion lift: output family invalid");
    verify(rep.crossing_triangles.empty(), "deletion lift: output gained crossing triangles");
    verify(rep.rank_sum >= in_rep.rank_sum, "deletion lift: rank-sum decreased");
    if (in_rep.is_free) verify(rep.is_free, "deletion lift: freeness lost");
    EdgeSet in_union = fam.member_union(), out_union = out.member_union();
    verify(std::includes(in_union.begin(), in_union.end(), out_union.begin(), out_union.end()),
           "deletion lift: output escaped the input union");
    return out;
}

// ------------------------------------------------------------------
// contraction lift
// ------------------------------------------------------------------

namespace {

struct I1Choice {
    EdgeId chi = -1, psi = -1;
    EdgeSet inner;
};

// Extend the member's fan by one rim edge on each side, then by psi and x at
// one end, to a wye-to-wye fan of g whose inner part swallows chi and psi.
std::optional<I1Choice> build_i1(const Multigraph& g, const Multigraph& h, EdgeId x,
                                 const EdgeSet& member, const std::vector<Fan>& beams_g) {
    Endpoints xe = g.endpoints(x);
    std::vector<I1Choice> found;
    for (const Fan& base : fan_orderings_of_set(g, member)) {
        for (int flip = 0; flip < 2; ++flip) {
            std::vector<EdgeId> ord = base.ordering;
            if (flip) std::reverse(ord.begin(), ord.end());
            auto fan = is_fan_ordering(g, ord);
            if (!fan || fan->fan_class != FanClass::TriangleToTriangle) continue;
            VertexId w_first = fan->rim_path.front();
            VertexId w_last = fan->rim_path.back();
            VertexId hub = fan->hub;
            for (EdgeId e0 : g.incident_edges(w_first)) {
                if (member.count(e0) || e0 == x) continue;
                for (EdgeId e1 : g.incident_edges(w_last)) {
                    if (member.count(e1) || e1 == x || e1 == e0) continue;
                    std::vector<EdgeId> enc{e0};
                    enc.insert(enc.end(), ord.begin(), ord.end());
                    enc.push_back(e1);
                    auto enc_fan = is_fan_ordering(g, enc);
                    if (!enc_fan || enc_fan->fan_class != FanClass::WyeToWye) continue;
                    // left extension: x, psi, e0, ...
                    VertexId v0 = g.other_end(e0, w_first);
                    if (v0 == xe.u || v0 == xe.v) {
                        auto psi = g.edge_between(hub, v0);
                        if (psi && *psi != x && !member.count(*psi) && *psi != e0 && *psi != e1) {
                            std::vector<EdgeId> full{x, *psi};
                            full.insert(full.end(), enc.begin(), enc.end());
                            auto ff = is_fan_ordering(g, full);
                            if (ff && ff->fan_class == FanClass::WyeToWye) {
                                EdgeSet inner(full.begin() + 1, full.end() - 1);
                                if (is_h_inner_fan(g, h, inner, &beams_g))
                                    found.push_back({e0, *psi, inner});
                            }
                        }
                    }
                    // right extension: ..., e1, psi, x
                    VertexId v1 = g.other_end(e1, w_last);
                    if (v1 == xe.u || v1 == xe.v) {
                        auto psi = g.edge_between(hub, v1);
                        if (psi && *psi != x && !member.count(*psi) && *psi != e0 && *psi != e1) {
                            std::vector<EdgeId> full = enc;
                            full.push_back(*psi);
                            full.push_back(x);
                            auto ff = is_fan_ordering(g, full);
                            if (ff && ff->fan_class == FanClass::WyeToWye) {
                                EdgeSet inner(full.begin() + 1, full.end() - 1);
                                if (is_h_inner_fan(g, h, inner, &beams_g))
                                    found.push_back({e1, *psi, inner});
                            }
                        }
                    }
                }
            }
        }
    }
    if (found.empty()) return std::nullopt;
    std::sort(found.begin(), found.end(), [](const I1Choice& a, const I1Choice& b) {
        if (a.psi != b.psi) return a.psi < b.psi;
        if (a.chi != b.chi) return a.chi < b.chi;
        return a.inner < b.inner;
    });
    return found.front();
}

struct TrianglePair {
    EdgeId chi = -1, psi = -1; // {x, chi, psi} is a wye; {chi, psi, y} a triangle
};

// For a singleton member {y} with g/y not 3-connected: the wye through x and
// the triangle through y that complete the member.
std::vector<TrianglePair> triangle_pairs(const Multigraph& g, EdgeId x, EdgeId y) {
    Endpoints ye = g.endpoints(y);
    Endpoints xe = g.endpoints(x);
    std::vector<TrianglePair> out;
    for (VertexId w : {xe.u, xe.v}) {
        if (w == ye.u || w == ye.v) continue;
        auto c1 = g.edge_between(w, ye.u);
        auto c2 = g.edge_between(w, ye.v);
        if (!c1 || !c2) continue;
        if (classify_triple(g, x, *c1, *c2) != TripleKind::Wye) continue;
        if (classify_triple(g, *c1, *c2, y) != TripleKind::Triangle) continue;
        out.push_back({*c1, *c2});
        out.push_back({*c2, *c1});
    }
    std::sort(out.begin(), out.end(), [](const TrianglePair& a, const TrianglePair& b) {
        if (a.chi != b.chi) return a.chi < b.chi;
        return a.psi < b.psi;
    });
    return out;
}

// Lemma "contraction-inner" (the J3 construction): split the member into
// maximal one-hub runs, contract one run, keep the other rim edges as
// singletons.
std::vector<Part> lemma36_parts(const Multigraph& g, const Multigraph& gq, const Multigraph& h,
                                EdgeId x, const EdgeSet& member, const Fan& enc,
                                const std::vector<Fan>& beams_g, LiftingTrace& tr,
                                int member_index) {
    WWLabels lab = ww_labels(enc);
    int n = lab.n();
    Endpoints xe = g.endpoints(x);
    VertexId merged = std::min(xe.u, xe.v);

    std::vector<std::vector<int>> runs; // 1-based spoke indices
    bool hub_split = lab.hub == merged;
    if (hub_split) {
        std::vector<VertexId> att(n + 1, -1);
        bool consistent = true;
        for (int i = 1; i <= n; ++i) {
            Endpoints p = g.endpoints(lab.spokes[i - 1]);
            VertexId other = (p.u == lab.verts[i]) ? p.v : (p.v == lab.verts[i] ? p.u : -1);
            if (other != xe.u && other != xe.v) consistent = false;
            att[i] = other;
        }
        if (consistent) {
            for (int i = 1; i <= n; ++i) {
                if (runs.empty() || att[i] != att[runs.back().front()])
                    runs.push_back({i});
                else
                    runs.back().push_back(i);
            }
        }
    }

    auto run_edges = [&](const std::vector<int>& run) {
        EdgeSet es;
        for (int i : run) es.insert(lab.spokes[i - 1]);
        for (std::size_t j = 0; j + 1 < run.size(); ++j) es.insert(lab.rims[run[j]]);
        return es;
    };

    auto assemble = [&](const EdgeSet& core) -> std::optional<std::vector<Part>> {
        if (!is_three_connected(contract_edges(g, core))) return std::nullopt;
        std::vector<Part> parts;
        if (core.size() == 1) {
            if (!is_h_contractible(g, h, *core.begin())) return std::nullopt;
            parts.push_back({core, MemberKind::ContractibleSingleton});
        } else {
            if (!is_h_inner_fan(g, h, core, &beams_g)) return std::nullopt;
            parts.push_back({core, MemberKind::InnerFan});
        }
        for (int i = 1; i < n; ++i) {
            EdgeId rim = lab.rims[i];
            if (core.count(rim)) continue;
            if (!is_h_contractible(g, h, rim)) return std::nullopt;
            parts.push_back({{rim}, MemberKind::ContractibleSingleton});
        }
        int want = rank(gq, member);
        if (parts_rank_sum(g, parts) != want) return std::nullopt;
        if (rank(g, parts_union(parts)) != want) return std::nullopt; // free
        EdgeSet with_x = parts_union(parts);
        with_x.insert(x);
        if (rank(g, with_x) != want + 1) return std::nullopt; // X u {{x}} stays free
        return parts;
    };

    if (!runs.empty()) {
        // at most one run is a triangle with three degree-3 vertices, and
        // when present it must be the contracted one
        std::vector<std::size_t> tri;
        for (std::size_t k = 0; k < runs.size(); ++k) {
            EdgeSet es = run_edges(runs[k]);
            if (es.size() != 3) continue;
            auto vs = covered_vertices(g, es);
            if (vs.size() != 3) continue;
            bool all3 = true;
            for (VertexId v : vs)
                if (g.degree(v) != 3) all3 = false;
            if (all3) tri.push_back(k);
        }
        tr.claim("contraction-inner: at most one 3-degree-3 triangle run", tri.size() <= 1);
        verify(tri.size() <= 1, "contraction-inner: two triangle runs with all-degree-3 vertices",
               &tr);
        std::vector<std::size_t> order;
        for (std::size_t k : tri) order.push_back(k);
        for (std::size_t k = 0; k < runs.size(); ++k)
            if (tri.empty() || k != tri.front()) order.push_back(k);
        for (std::size_t k : order) {
            auto parts = assemble(run_edges(runs[k]));
            if (parts) return *parts;
            if (!tri.empty() && k == tri.front())
                verify(false, "contraction-inner: triangle run did not lift", &tr);
        }
    }

    // verified sweep: every contiguous spoke window
    tr.gaps.push_back("member " + std::to_string(member_index) + " lifted by lemma36 sweep");
    for (int width = n; width >= 1; --width)
        for (int a = 1; a + width - 1 <= n; ++a) {
            EdgeSet core;
            for (int i = a; i < a + width; ++i) core.insert(lab.spokes[i - 1]);
            for (int i = a; i < a + width - 1; ++i) core.insert(lab.rims[i]);
            auto parts = assemble(core);
            if (parts) return *parts;
        }
    throw theorem_violation("contraction-inner: no run yields a liftable family", tr.to_json());
}

} // namespace

std::pair<FanFamily, LiftingTrace> lift_through_contraction(const Multigraph& g, EdgeId x,
                                                            const FanFamily& fam) {
    LiftingTrace tr;
    tr.step_edge = x;
    tr.mode = SplitterMode::Contract;

    require(g.is_simple(), "lift_through_contraction: host must be simple");
    require(g.has_edge(x), "lift_through_contraction: unknown edge");
    require(is_three_connected(g), "lift_through_contraction: host must be 3-connected");
    require(!is_wheel(g), "lift_through_contraction: host must not be a wheel");
    require(!is_isomorphic(g, make_prism()), "lift_through_contraction: host must not be the prism");
    Multigraph gq = contract_edge(g, x);
    require(gq.is_simple(), "lift_through_contraction: g/x must be simple");
    require(is_three_connected(gq), "lift_through_contraction: g/x must be 3-connected");
    check_same_labeled_graph(fam.host, gq, "lift_through_contraction: family host must be g/x");
    const Multigraph& h = fam.minor;
    require(has_minor_quick(gq, h), "lift_through_contraction: g/x lost the minor");

    std::vector<Fan> beams_gq = maximal_wye_to_wye_fans(gq);
    FamilyReport in_rep = validate_family(fam, &beams_gq);
    require(in_rep.is_h_fan_family, "lift_through_contraction: input family invalid");
    require(in_rep.crossing_triangles.empty(),
            "lift_through_contraction: input has crossing triangles");

    std::vector<Fan> beams_g = maximal_wye_to_wye_fans(g);
    int m = fam.size();
    EdgeSet big_f = fam.member_union();

    std::vector<bool> q3(m), fan_in_g(m);
    std::vector<std::optional<Fan>> enc(m);
    for (int i = 0; i < m; ++i) {
        const EdgeSet& mem = fam.members[i];
        q3[i] = is_three_connected(contract_edges(g, mem));
        if (mem.size() > 1) {
            fan_in_g[i] = is_fan_of(g, mem);
            auto encs = enclosing_fans_of_inner(gq, mem, &beams_gq);
            verify(!encs.empty(), "contraction lift: member lost its enclosing fan in g/x", &tr);
            enc[i] = encs.front();
        }
    }

    std::map<int, std::vector<Part>> sub; // per member index, members of X_i
    std::map<int, EdgeSet> f_prime;       // the F'_i of the I classes

    // --- classes I1, I2, I3 ---
    for (int i = 0; i < m; ++i) {
        const EdgeSet& mem = fam.members[i];
        if (q3[i]) continue;
        if (mem.size() > 1 && fan_in_g[i]) {
            tr.I1.push_back(i);
            auto choice = build_i1(g, h, x, mem, beams_g);
            tr.claim("contraction-inner2: extension exists for member " + std::to_string(i),
                     choice.has_value());
            verify(choice.has_value(), "contraction lift: no psi/chi extension for an I1 member",
                   &tr);
            tr.chi[i] = choice->chi;
            tr.psi[i] = choice->psi;
            f_prime[i] = choice->inner;
            sub[i] = {{choice->inner, MemberKind::InnerFan}};
            bool psi_not_contractible = !is_three_connected(contract_edge(g, choice->psi));
            tr.claim("g/psi not 3-connected (I1)", psi_not_contractible);
            verify(psi_not_contractible, "contraction lift: psi of an I1 member is contractible",
                   &tr);
        } else if (mem.size() == 1) {
            EdgeId y = *mem.begin();
            bool in_wye = edge_in_wye(g, y);
            auto pairs = triangle_pairs(g, x, y);
            tr.claim("w36: wye-triangle pair exists for member " + std::to_string(i),
                     !pairs.empty());
            verify(!pairs.empty(), "contraction lift: no wye/triangle completion for a member",
                   &tr);
            if (in_wye) {
                tr.I2.push_back(i);
                // chi shares a wye with y; prefer the labeling that also
                // leaves psi non-contractible
                std::optional<TrianglePair> pick;
                for (const auto& pr : pairs) {
                    if (!edges_share_wye(g, pr.chi, y)) continue;
                    bool psi_bad = !is_three_connected(contract_edge(g, pr.psi));
                    if (!pick || (psi_bad && is_three_connected(contract_edge(g, pick->psi))))
                        pick = pr;
                    if (psi_bad && pick && pick->chi == pr.chi && pick->psi == pr.psi) break;
                }
                tr.claim("I2: chi shares a wye with the member edge", pick.has_value());
                verify(pick.has_value(), "contraction lift: no chi label in a wye with the member",
                       &tr);
                tr.chi[i] = pick->chi;
                tr.psi[i] = pick->psi;
                EdgeSet tri{pick->chi, pick->psi, y};
                f_prime[i] = tri;
                bool inner_ok = is_h_inner_fan(g, h, tri, &beams_g);
                tr.claim("I2: completed triangle is an inner fan", inner_ok);
                verify(inner_ok, "contraction lift: completed triangle not an inner fan", &tr);
                sub[i] = {{tri, MemberKind::InnerFan}};
                bool psi_not_contractible = !is_three_connected(contract_edge(g, pick->psi));
                tr.claim("g/psi not 3-connected (I2)", psi_not_contractible);
                verify(psi_not_contractible,
                       "contraction lift: psi of an I2 member is contractible", &tr);
            } else {
                tr.I3.push_back(i);
                // psi must avoid the family union
                std::optional<TrianglePair> pick;
                for (const auto& pr : pairs) {
                    if (big_f.count(pr.psi)) continue;
                    if (!pick) pick = pr;
                }
                tr.claim("I3: a label with psi outside the family exists", pick.has_value());
                verify(pick.has_value(), "contraction lift: both completion edges inside family",
                       &tr);
                // prefer chi inside the family when possible, smallest ids otherwise
                for (const auto& pr : pairs) {
                    if (big_f.count(pr.psi)) continue;
                    bool pick_chi_in = big_f.count(pick->chi) > 0;
                    bool pr_chi_in = big_f.count(pr.chi) > 0;
                    if (pr_chi_in && !pick_chi_in) pick = pr;
                }
                tr.chi[i] = pick->chi;
                tr.psi[i] = pick->psi;
                f_prime[i] = EdgeSet{pick->chi, pick->psi, y};
                bool both_ok = is_h_contractible(g, h, pick->chi) &&
                               is_h_contractible(g, h, pick->psi);
                tr.claim("opposite-vertex: chi and psi contractible (I3)", both_ok);
                verify(both_ok, "contraction lift: I3 completion edges not both contractible",
                       &tr);
                sub[i] = {{{pick->chi}, MemberKind::ContractibleSingleton},
                          {{pick->psi}, MemberKind::ContractibleSingleton}};
            }
        }
        // members with >1 edges that are not fans of g fall to J3/K below
    }

    std::vector<int> I_all;
    for (auto* v : {&tr.I1, &tr.I2, &tr.I3}) I_all.insert(I_all.end(), v->begin(), v->end());

    EdgeSet chi_psi;
    for (auto [i, e] : tr.chi) chi_psi.insert(e);
    for (auto [i, e] : tr.psi) chi_psi.insert(e);

    // claim: chi/psi hit the family in at most one edge per index
    for (int i : I_all) {
        int hits = (big_f.count(tr.chi[i]) ? 1 : 0) + (big_f.count(tr.psi[i]) ? 1 : 0);
        tr.claim("chi/psi meet the family union at most once (index " + std::to_string(i) + ")",
                 hits <= 1);
        verify(hits <= 1, "contraction lift: chi and psi both land in the family", &tr);
    }
    // claim: across I, the chi/psi pairs avoid each other's members
    for (int i : I_all)
        for (int j : I_all) {
            if (i == j) continue;
            bool clean = true;
            for (EdgeId e : {tr.chi[i], tr.psi[i]}) {
                if (f_prime[j].count(e) || e == tr.chi[j] || e == tr.psi[j] ||
                    fam.members[j].count(e))
                    clean = false;
            }
            tr.claim("chi/psi pairs disjoint across I (" + std::to_string(i) + "," +
                         std::to_string(j) + ")",
                     clean);
            verify(clean, "contraction lift: chi/psi collide across I members", &tr);
        }

    // --- classes J1, J2, J3, K, L ---
    for (int j = 0; j < m; ++j) {
        if (std::find(I_all.begin(), I_all.end(), j) != I_all.end()) continue;
        const EdgeSet& mem = fam.members[j];
        bool meets = false;
        for (EdgeId e : mem)
            if (chi_psi.count(e)) meets = true;
        if (!meets) {
            if (mem.size() == 1) {
                tr.J1.push_back(j);
                EdgeId e = *mem.begin();
                bool ok = is_h_contractible(g, h, e);
                tr.claim("J1 singleton stays contractible", ok);
                verify(ok, "contraction lift: J1 singleton not contractible in g", &tr);
                sub[j] = {{mem, MemberKind::ContractibleSingleton}};
            } else if (fan_in_g[j]) {
                tr.J2.push_back(j);
                verify(q3[j], "contraction lift: classification hole (fan, not 3-connected, not I1)",
                       &tr);
                bool ok = is_h_inner_fan(g, h, mem, &beams_g);
                tr.claim("not-wheel: J2 member is an inner fan of g", ok);
                verify(ok, "contraction lift: J2 member not an inner fan of g", &tr);
                sub[j] = {{mem, MemberKind::InnerFan}};
            } else {
                tr.J3.push_back(j);
                sub[j] = lemma36_parts(g, gq, h, x, mem, *enc[j], beams_g, tr, j);
            }
        } else {
            if (mem.size() > 1) {
                tr.K.push_back(j);
                bool not_fan = !fan_in_g[j];
                tr.claim("new4(i): K member is not a fan of g", not_fan);
                verify(not_fan, "contraction lift: K member is a fan of g", &tr);
                WWLabels lab = ww_labels(*enc[j]);
                std::vector<Part> parts;
                bool rims_ok = true;
                for (int i = 1; i < lab.n(); ++i) {
                    EdgeId rim = lab.rims[i];
                    if (!is_h_contractible(g, h, rim)) rims_ok = false;
                    parts.push_back({{rim}, MemberKind::ContractibleSingleton});
                }
                tr.claim("new4(viii): K rim edges contractible", rims_ok);
                verify(rims_ok, "contraction lift: K rim edge not contractible", &tr);
                sub[j] = parts;
            } else {
                tr.L.push_back(j);
            }
        }
    }

    // --- Phi: K u L -> I, injective ---
    std::set<int> phi_image;
    for (int l : tr.L) {
        EdgeId e = *fam.members[l].begin();
        std::vector<int> hits;
        for (int i : I_all)
            if (tr.chi[i] == e || tr.psi[i] == e) hits.push_back(i);
        tr.claim("phi(L) well-defined (member " + std::to_string(l) + ")", hits.size() == 1);
        verify(hits.size() == 1, "contraction lift: L member matches " +
                                     std::to_string(hits.size()) + " chi/psi pairs", &tr);
        tr.phi[l] = hits.front();
        bool fresh = phi_image.insert(hits.front()).second;
        tr.claim("phi injective", fresh);
        verify(fresh, "contraction lift: phi collides on L", &tr);
    }
    for (int k : tr.K) {
        std::vector<int> hits;
        for (int i : I_all)
            for (EdgeId e : fam.members[k])
                if (tr.chi[i] == e || tr.psi[i] == e) {
                    hits.push_back(i);
                    break;
                }
        tr.claim("new4: unique I index for K", hits.size() == 1);
        verify(hits.size() == 1, "contraction lift: K member meets several chi/psi pairs", &tr);
        int i = hits.front();
        tr.phi[k] = i;
        bool fresh = phi_image.insert(i).second;
        tr.claim("new4(vi)/new5: Phi injective", fresh);
        verify(fresh, "contraction lift: Phi collides between K and L", &tr);
        bool i_in_I2 = std::find(tr.I2.begin(), tr.I2.end(), i) != tr.I2.end();
        tr.claim("new4(ii): the index belongs to I2", i_in_I2);
        verify(i_in_I2, "contraction lift: K member tied to a non-I2 index", &tr);
        // (iii) chi(i) is a spoke of F_k
        WWLabels lab = ww_labels(*enc[k]);
        bool chi_spoke = std::find(lab.spokes.begin(), lab.spokes.end(), tr.chi[i]) !=
                         lab.spokes.end();
        tr.claim("new4(iii): chi is a spoke of the K member", chi_spoke);
        verify(chi_spoke, "contraction lift: chi not a spoke of its K member", &tr);
        bool psi_out = !big_f.count(tr.psi[i]);
        tr.claim("new4(iv): psi outside the family", psi_out);
        verify(psi_out, "contraction lift: psi of the K index lies in the family", &tr);
        bool avoid = true;
        for (const auto& [edges, kind] : sub[k])
            for (EdgeId e : edges)
                if (chi_psi.count(e)) avoid = false;
        tr.claim("new4(v): X_k avoids all chi/psi", avoid);
        verify(avoid, "contraction lift: K subfamily meets chi/psi", &tr);
    }
    tr.claim("new4(vii): at most one K member", tr.K.size() <= 1);
    verify(tr.K.size() <= 1, "contraction lift: two K members", &tr);
    if (!tr.K.empty()) {
        bool strict = static_cast<int>(I_all.size()) > static_cast<int>(tr.L.size());
        tr.claim("new4(vi): |I| > |L| when K is nonempty", strict);
        verify(strict, "contraction lift: |I| <= |L| with K nonempty", &tr);
    }
    bool enough = I_all.size() >= tr.K.size() + tr.L.size();
    tr.claim("new5: |I| >= |K| + |L|", enough);
    verify(enough, "contraction lift: fewer I members than K u L", &tr);

    // --- assemble per the defining equation ---
    tr.x_included = I_all.size() == tr.K.size() + tr.L.size();
    FanFamily out;
    out.host = g;
    out.minor = h;
    if (tr.x_included) {
        bool x_ok = is_h_contractible(g, h, x);
        tr.claim("x itself is h-contractible", x_ok);
        verify(x_ok, "contraction lift: x not contractible with minor", &tr);
        out.push({x}, MemberKind::ContractibleSingleton);
    }
    for (int k = 0; k < m; ++k) {
        if (std::find(tr.L.begin(), tr.L.end(), k) != tr.L.end()) continue;
        auto it = sub.find(k);
        verify(it != sub.end(), "contraction lift: missing subfamily", &tr);
        for (const auto& [edges, kind] : it->second) out.push(edges, kind);
        std::vector<EdgeSet> record;
        for (const auto& [edges, kind] : it->second) record.push_back(edges);
        tr.subfamilies[k] = record;
    }

    // --- rank identities and the rank-sum bound ---
    for (int i : I_all) {
        int want = rank(gq, fam.members[i]) + 1;
        bool ok = parts_rank_sum(g, sub[i]) == want && rank(g, parts_union(sub[i])) == want;
        tr.claim("rank step +1 on I (member " + std::to_string(i) + ")", ok);
        verify(ok, "contraction lift: I subfamily rank mismatch", &tr);
    }
    for (int j : tr.J1) {
        bool ok = rank(g, fam.members[j]) == rank(gq, fam.members[j]);
        tr.claim("rank preserved on J1", ok);
        verify(ok, "contraction lift: J1 rank mismatch", &tr);
    }
    for (int j : tr.J2) {
        bool ok = parts_rank_sum(g, sub[j]) == rank(gq, fam.members[j]);
        tr.claim("rank preserved on J2", ok);
        verify(ok, "contraction lift: J2 rank mismatch", &tr);
    }
    for (int j : tr.J3) {
        int want = rank(gq, fam.members[j]);
        bool ok = parts_rank_sum(g, sub[j]) == want && rank(g, parts_union(sub[j])) == want;
        tr.claim("rank preserved on J3", ok);
        verify(ok, "contraction lift: J3 rank mismatch", &tr);
    }
    for (int k : tr.K) {
        int want = rank(gq, fam.members[k]) - 1;
        bool ok = parts_rank_sum(g, sub[k]) == want;
        tr.claim("rank drops by one on K", ok);
        verify(ok, "contraction lift: K rank mismatch", &tr);
    }

    // --- circuits inside F_k u x stay inside members (or escape X on K) ---
    EdgeSet out_union = out.member_union();
    for (int k = 0; k < m; ++k) {
        EdgeSet scope = fam.members[k];
        scope.insert(x);
        bool is_k = std::find(tr.K.begin(), tr.K.end(), k) != tr.K.end();
        bool ok = true;
        for (const EdgeSet& c : circuits_of(g, scope)) {
            if (is_k) {
                if (std::includes(out_union.begin(), out_union.end(), c.begin(), c.end()))
                    ok = false;
            } else {
                bool inside = false;
                for (const auto& mem2 : out.members)
                    if (std::includes(mem2.begin(), mem2.end(), c.begin(), c.end())) inside = true;
                bool outside_x = std::includes(out_union.begin(), out_union.end(), c.begin(),
                                               c.end());
                if (outside_x && !inside) ok = false;
            }
        }
        tr.claim("new15: circuits of a member plus x behave (member " + std::to_string(k) + ")",
                 ok);
        verify(ok, "contraction lift: circuit containment claim failed", &tr);
    }

    // --- final validation ---
    FamilyReport rep = validate_family(out, &beams_g);
    tr.claim("output members pairwise disjoint (new7)", rep.members_disjoint);
    verify(rep.members_disjoint, "contraction lift: output members overlap", &tr);
    tr.claim("output is an h-fan family", rep.is_h_fan_family);
    verify(rep.is_h_fan_family, "contraction lift: output family invalid", &tr);
    tr.claim("new20: no crossing triangles", rep.crossing_triangles.empty());
    verify(rep.crossing_triangles.empty(), "contraction lift: output has crossing triangles", &tr);
    bool sum_ok = rep.rank_sum >= in_rep.rank_sum + 1;
    tr.claim("new8: rank-sum grew by at least one", sum_ok);
    verify(sum_ok, "contraction lift: rank-sum did not grow", &tr);
    if (in_rep.is_free) {
        tr.claim("freeness preserved (b)", rep.is_free);
        verify(rep.is_free, "contraction lift: freeness lost", &tr);
    }
    return {out, tr};
}

// ------------------------------------------------------------------
// induction drivers
// ------------------------------------------------------------------

namespace {

FanFamily map_family(const FanFamily& seed, const Multigraph& g,
                     const std::map<VertexId, VertexId>& iso) {
    FanFamily out;
    out.host = g;
    out.minor = seed.minor;
    for (std::size_t i = 0; i < seed.members.size(); ++i) {
        EdgeSet mapped;
        for (EdgeId e : seed.members[i]) {
            Endpoints p = seed.host.endpoints(e);
            auto ge = g.edge_between(iso.at(p.u), iso.at(p.v));
            if (!ge) throw theorem_violation("seed embedding: image edge missing");
            mapped.insert(*ge);
        }
        out.push(std::move(mapped), seed.kinds[i]);
    }
    return out;
}

bool is_base_case(const Multigraph& g) {
    return g.vertex_count() <= 3 || is_wheel(g) || is_isomorphic(g, make_prism());
}

FanFamily build_general_impl(const Multigraph& g, const Multigraph& hp, const Multigraph& h,
                             const FanFamily& seed, int seed_score, bool want_free,
                             std::vector<LiftingTrace>* chain) {
    if (is_isomorphic(g, hp)) {
        auto iso = isomorphism(seed.host, g);
        if (!iso) throw theorem_violation("induction: host isomorphic to h' but seed host is not");
        return map_family(seed, g, *iso);
    }
    if (is_base_case(g)) {
        int target = g.vertex_count() - hp.vertex_count() + seed_score;
        SizeGuard guard = SizeGuard::from_env();
        guard.max_vertices = std::max(guard.max_vertices, g.vertex_count());
        guard.max_edges = std::max(guard.max_edges, g.edge_count());
        return oracle_base_case_family(g, h, target, guard);
    }
    SplitterStep step = splitter_edge(g, hp);
    Multigraph reduced = step.mode == SplitterMode::Contract ? contract_edge(g, step.edge)
                                                             : delete_edge(g, step.edge);
    FanFamily below = build_general_impl(reduced, hp, h, seed, seed_score, want_free, chain);
    FanFamily lifted;
    if (step.mode == SplitterMode::Contract) {
        auto [fam, trace] = lift_through_contraction(g, step.edge, below);
        if (chain) chain->push_back(std::move(trace));
        lifted = std::move(fam);
    } else {
        lifted = lift_through_deletion(g, step.edge, below);
    }
    FamilyReport rep = validate_family(lifted);
    int bound = g.vertex_count() - hp.vertex_count() + seed_score;
    int score = want_free ? rep.rank : rep.rank_sum;
    if (score < bound)
        throw theorem_violation("induction: lifted family misses the bound (" +
                                std::to_string(score) + " < " + std::to_string(bound) + ")");
    if (want_free && !rep.is_free) throw theorem_violation("induction: family lost freeness");
    return lifted;
}

void check_driver_inputs(const Multigraph& g, const Multigraph& hp, const Multigraph& h,
                         const FanFamily& seed, bool want_free) {
    require(g.is_simple() && is_three_connected(g), "build: g must be simple and 3-connected");
    require(hp.is_simple() && is_three_connected(hp), "build: h' must be simple and 3-connected");
    require(h.is_simple() && is_three_connected(h), "build: h must be simple and 3-connected");
    require(h.vertex_count() >= 1, "build: |h| >= 1");
    require(has_minor_quick(g, hp), "build: h' is not a minor of g");
    require(has_minor_quick(hp, h), "build: h is not a minor of h'");
    check_same_labeled_graph(seed.host, hp, "build: seed must live on h'");
    FamilyReport rep = validate_family(seed);
    require(rep.is_h_fan_family, "build: seed is not an h-fan family");
    require(rep.crossing_triangles.empty(), "build: seed has crossing triangles");
    if (want_free) require(rep.is_free, "build: seed must be free");
}

} // namespace

FanFamily build_fan_family_general(const Multigraph& g, const Multigraph& h_prime,
                                   const Multigraph& h, const FanFamily& seed,
                                   std::vector<LiftingTrace>* chain) {
    check_driver_inputs(g, h_prime, h, seed, true);
    int r = family_rank(seed);
    return build_general_impl(g, h_prime, h, seed, r, true, chain);
}

FanFamily build_fan_family(const Multigraph& g, const Multigraph& h,
                           std::vector<LiftingTrace>* chain) {
    FanFamily seed;
    seed.host = h;
    seed.minor = h;
    return build_fan_family_general(g, h, h, seed, chain);
}

FanFamily build_fan_family_sum(const Multigraph& g, const Multigraph& h_prime,
                               const Multigraph& h, const FanFamily& seed,
                               std::vector<LiftingTrace>* chain) {
    check_driver_inputs(g, h_prime, h, seed, false);
    int s = family_rank_sum(seed);
    return build_general_impl(g, h_prime, h, seed, s, false, chain);
}

// ------------------------------------------------------------------
// forest extraction
// ------------------------------------------------------------------

namespace {

struct Rewriter {
    const Multigraph& g;
    const Multigraph& h;
    int r;
    FanFamily cur;
    const std::vector<Fan>& beams;

    bool family_ok(const FanFamily& cand) const {
        FamilyReport rep = validate_family(cand, &beams);
        return rep.is_h_fan_family && rep.is_free && rep.rank >= r;
    }

    bool has_singleton(EdgeId e) const {
        for (const auto& m : cur.members)
            if (m.size() == 1 && *m.begin() == e) return true;
        return false;
    }

    FanFamily without_member(std::size_t idx) const {
        FanFamily out;
        out.host = cur.host;
        out.minor = cur.minor;
        for (std::size_t i = 0; i < cur.members.size(); ++i)
            if (i != idx) out.push(cur.members[i], cur.kinds[i]);
        return out;
    }

    bool try_add_singleton(EdgeId e) {
        if (cur.member_union().count(e) || !is_h_contractible(g, h, e)) return false;
        FanFamily cand = cur;
        cand.push({e}, MemberKind::ContractibleSingleton);
        if (!family_ok(cand)) return false;
        cur = std::move(cand);
        return true;
    }

    bool try_replace_by_rims(std::size_t idx, const std::vector<EdgeId>& rims) {
        FanFamily cand = without_member(idx);
        EdgeSet other = cand.member_union();
        for (EdgeId e : rims) {
            if (other.count(e) || !is_h_contractible(g, h, e)) return false;
            cand.push({e}, MemberKind::ContractibleSingleton);
            other.insert(e);
        }
        if (!family_ok(cand)) return false;
        cur = std::move(cand);
        return true;
    }

    // One pass: apply the first applicable singleton-increasing rewrite.
    bool step() {
        for (std::size_t idx = 0; idx < cur.members.size(); ++idx) {
            const EdgeSet& mem = cur.members[idx];
            if (mem.size() <= 1) continue;
            bool is_b = is_deg3_triangle(mem);
            if (is_b) {
                // both flanking edges of the triangle must be singleton members
                std::vector<EdgeId> adj = edges_adjacent_to(mem);
                int present = 0;
                for (EdgeId e : adj)
                    if (has_singleton(e)) ++present;
                if (present >= 2) continue;
                FanFamily cand = without_member(idx);
                EdgeSet other = cand.member_union();
                bool ok = true;
                for (EdgeId e : adj) {
                    if (has_singleton(e)) {
                        continue;
                    }
                    if (other.count(e) || !is_h_contractible(g, h, e)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                for (EdgeId e : adj)
                    if (!has_singleton(e)) cand.push({e}, MemberKind::ContractibleSingleton);
                if (!family_ok(cand)) continue;
                cur = std::move(cand);
                return true;
            }
            // wye-to-wye enclosure ends must be held as singletons
            for (const Fan& enc : enclosing_fans_of_inner(g, mem, &beams)) {
                EdgeId x0 = enc.ordering.front(), xn = enc.ordering.back();
                if (has_singleton(x0) || has_singleton(xn)) continue;
                if (try_add_singleton(xn) || try_add_singleton(x0)) return true;
                WWLabels lab = ww_labels(enc);
                std::vector<EdgeId> right(lab.rims.begin() + 1, lab.rims.end());
                std::vector<EdgeId> left(lab.rims.begin(), lab.rims.end() - 1);
                if (try_replace_by_rims(idx, right) || try_replace_by_rims(idx, left)) return true;
            }
        }
        return false;
    }

    bool is_deg3_triangle(const EdgeSet& mem) const {
        if (mem.size() != 3) return false;
        auto vs = covered_vertices(g, mem);
        if (vs.size() != 3) return false;
        for (VertexId v : vs)
            if (g.degree(v) != 3) return false;
        return true;
    }

    std::vector<EdgeId> edges_adjacent_to(const EdgeSet& mem) const {
        auto vs = covered_vertices(g, mem);
        std::vector<EdgeId> out;
        for (const auto& [e, p] : g.edges()) {
            if (mem.count(e)) continue;
            if (vs.count(p.u) || vs.count(p.v)) out.push_back(e);
        }
        return out;
    }
};

} // namespace

EdgeSet extract_forest(const Multigraph& g, const Multigraph& h, const FanFamily& fam, int r,
                       bool* used_fallback) {
    if (used_fallback) *used_fallback = false;
    require(r >= 1, "extract_forest: rank target must be at least 1");
    check_same_labeled_graph(fam.host, g, "extract_forest: family must live on g");
    FamilyReport in_rep = validate_family(fam);
    require(in_rep.is_h_fan_family && in_rep.is_free, "extract_forest: family must be free");
    require(in_rep.rank >= r, "extract_forest: family rank below target");

    int need = (r + 2) / 2; // ceil((r+1)/2)

    auto fallback = [&]() -> EdgeSet {
        EdgeSet contractible = h_contractible_edges(g, h);
        EdgeSet forest;
        for (EdgeId e : contractible) {
            EdgeSet trial = forest;
            trial.insert(e);
            if (rank(g, trial) == static_cast<int>(trial.size())) forest = trial;
        }
        if (static_cast<int>(forest.size()) < need)
            throw theorem_violation("extract_forest: even exhaustive search misses the bound");
        if (used_fallback) *used_fallback = true;
        return forest;
    };

    if (is_isomorphic(g, make_complete(4)) || is_isomorphic(g, make_prism())) return fallback();

    std::vector<Fan> beams_g = maximal_wye_to_wye_fans(g);
    Rewriter rw{g, h, r, fam, beams_g};
    int limit = 4 * g.edge_count() + 8;
    while (limit-- > 0 && rw.step()) {
    }

    // A: singletons, B: all-degree-3 triangles, C: other fans
    EdgeSet a_set, b_set;
    std::vector<EdgeSet> c_members;
    for (const auto& mem : rw.cur.members) {
        if (mem.size() == 1)
            a_set.insert(*mem.begin());
        else if (rw.is_deg3_triangle(mem))
            b_set.insert(mem.begin(), mem.end());
        else
            c_members.push_back(mem);
    }
    EdgeSet u = rw.cur.member_union();

    EdgeSet result = a_set;
    for (const auto& mem : c_members) {
        auto encs = enclosing_fans_of_inner(g, mem, &beams_g);
        if (encs.empty()) return fallback();
        WWLabels lab = ww_labels(encs.front());
        for (int i = 1; i < lab.n(); ++i) result.insert(lab.rims[i]);
    }
    for (const auto& [e, p] : g.edges()) {
        if (u.count(e)) continue;
        bool touches_b = false;
        for (EdgeId be : b_set) {
            Endpoints q = g.endpoints(be);
            if (p.u == q.u || p.u == q.v || p.v == q.u || p.v == q.v) touches_b = true;
        }
        if (touches_b) result.insert(e);
    }

    bool forest_ok = rank(g, result) == static_cast<int>(result.size());
    bool size_ok = static_cast<int>(result.size()) >= need;
    bool contractible_ok = true;
    for (EdgeId e : result)
        if (!is_h_contractible(g, h, e)) contractible_ok = false;
    if (forest_ok && size_ok && contractible_ok) return result;
    return fallback();
}

Multigraph spanning_fan_decomposition(const Multigraph& g) {
    require(g.is_simple() && is_three_connected(g),
            "spanning_fan_decomposition: g must be simple and 3-connected");
    Multigraph k1 = make_complete(1);
    FanFamily fam = build_fan_family(g, k1);
    FamilyReport rep = validate_family(fam);
    if (rep.rank != g.vertex_count() - 1)
        throw theorem_violation("spanning_fan_decomposition: family rank is not |V|-1");
    EdgeSet u = fam.member_union();
    Multigraph sub = edge_subgraph(g, u);
    if (sub.vertex_count() != g.vertex_count() || !is_connected(sub))
        throw theorem_violation("spanning_fan_decomposition: union does not span");
    std::vector<Fan> beams_g = maximal_wye_to_wye_fans(g);
    for (const EdgeSet& block : blocks(sub)) {
        if (block.size() == 1) {
            if (!is_h_contractible(g, k1, *block.begin()))
                throw theorem_violation("spanning_fan_decomposition: bridge not contractible");
        } else if (!is_h_inner_fan(g, k1, block, &beams_g)) {
            throw theorem_violation("spanning_fan_decomposition: block is not an inner fan");
        }
    }
    return sub;
}

} // namespace fanforge
