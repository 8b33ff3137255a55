#include "lmc/facets.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace lmc {

namespace {

std::uint64_t bit(NodeId u) { return std::uint64_t(1) << u; }

} // namespace

VwCutContext::VwCutContext(const LiftedPair& pair, const Edge& f, EdgeSet cut)
    : pair_(&pair), f_(f), cut_(sorted_edge_set(std::move(cut))), v_(f.u), w_(f.v) {
    if (!std::binary_search(pair.lifted_only().begin(), pair.lifted_only().end(), f))
        throw std::invalid_argument("context edge " + f.str() + " is not a lifted-only edge");
    if (cut_.empty())
        throw std::invalid_argument("cut must be nonempty");
    for (const Edge& e : cut_)
        if (!pair.base().has_edge(e))
            throw std::invalid_argument("cut edge " + e.str() + " is not a base edge");
    const auto label = component_labels(pair.base(), cut_);
    if (label[v_] == label[w_])
        throw std::invalid_argument("removing the cut does not separate " + f.str());
    v_side_.assign(pair.node_count(), 0);
    for (NodeId u = 0; u < pair.node_count(); ++u)
        v_side_[u] = label[u] == label[v_];
    for (NodeId u = 0; u < pair.node_count(); ++u)
        if (!v_side_[u] && label[u] != label[w_])
            throw std::invalid_argument("cut is not minimal: node " + std::to_string(u) +
                                        " falls outside both sides");
    EdgeSet crossing;
    for (const Edge& e : pair.base().edges())
        if (v_side_[e.u] != v_side_[e.v])
            crossing.push_back(e);
    if (crossing != cut_)
        throw std::invalid_argument("cut is not minimal: it is not the crossing set of its bipartition");
    for (const Edge& g : pair.lifted_only())
        if (g != f_ && v_side_[g.u] != v_side_[g.v])
            f_cross_.push_back(g);
    EdgeSet crossing_edges = f_cross_;
    crossing_edges.insert(crossing_edges.end(), cut_.begin(), cut_.end());
    crossing_ = Graph(pair.node_count(), std::move(crossing_edges));
}

std::vector<NodeId> VwCutContext::v_side_nodes() const {
    std::vector<NodeId> out;
    for (NodeId u = 0; u < pair_->node_count(); ++u)
        if (v_side_[u])
            out.push_back(u);
    return out;
}

std::vector<NodeId> VwCutContext::w_side_nodes() const {
    std::vector<NodeId> out;
    for (NodeId u = 0; u < pair_->node_count(); ++u)
        if (!v_side_[u])
            out.push_back(u);
    return out;
}

LinearInequality VwCutContext::inequality() const {
    return cut_inequality(*pair_, f_, cut_);
}

std::vector<VwcComponent> enumerate_vwc_components(const VwCutContext& ctx) {
    const Graph& g = ctx.pair().base();
    const std::size_t n = g.node_count();
    if (n > 22)
        throw std::invalid_argument("component enumeration is limited to 22 nodes");
    std::vector<VwcComponent> out;
    const std::uint64_t v_bit = bit(ctx.v());
    const std::uint64_t wbit = bit(ctx.w());
    std::uint64_t v_mask = 0, w_mask = 0;
    for (NodeId u = 0; u < n; ++u)
        (ctx.on_v_side(u) ? v_mask : w_mask) |= bit(u);
    const EdgeSet& cut = ctx.cut();
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
        const bool improper = (mask & ~v_mask) == 0 || (mask & ~w_mask) == 0;
        bool proper = false;
        if (!improper) {
            if ((mask & v_bit) && (mask & wbit)) {
                std::size_t crossings = 0;
                for (const Edge& e : cut)
                    if ((mask & bit(e.u)) && (mask & bit(e.v)))
                        ++crossings;
                proper = crossings == 1;
            }
            if (!proper)
                continue;
        }
        // connectivity of the induced subgraph
        {
            const NodeId first = static_cast<NodeId>(std::countr_zero(mask));
            std::uint64_t seen = bit(first);
            std::deque<NodeId> queue{first};
            while (!queue.empty()) {
                const NodeId u = queue.front();
                queue.pop_front();
                for (NodeId t : g.neighbors(u))
                    if ((mask & bit(t)) && !(seen & bit(t))) {
                        seen |= bit(t);
                        queue.push_back(t);
                    }
            }
            if (seen != mask)
                continue;
        }
        VwcComponent comp;
        comp.proper = proper;
        for (NodeId u = 0; u < n; ++u)
            if (mask & bit(u))
                comp.nodes.push_back(u);
        for (const Edge& e : g.edges())
            if ((mask & bit(e.u)) && (mask & bit(e.v)))
                comp.edges.push_back(e);
        out.push_back(std::move(comp));
    }
    return out;
}

V0Sets compute_v0(const VwCutContext& ctx) {
    return compute_v0(ctx, enumerate_vwc_components(ctx));
}

V0Sets compute_v0(const VwCutContext& ctx, const std::vector<VwcComponent>& components) {
    const std::size_t n = ctx.pair().node_count();
    std::vector<std::uint8_t> in_all(n, 1);
    bool any_proper = false;
    for (const VwcComponent& comp : components) {
        if (!comp.proper)
            continue;
        any_proper = true;
        std::vector<std::uint8_t> member(n, 0);
        for (NodeId u : comp.nodes)
            member[u] = 1;
        for (NodeId u = 0; u < n; ++u)
            in_all[u] = in_all[u] && member[u];
    }
    V0Sets v0;
    v0.no_proper_component = !any_proper;
    for (NodeId u = 0; u < n; ++u) {
        if (!any_proper || in_all[u])
            (ctx.on_v_side(u) ? v0.v_side : v0.w_side).push_back(u);
    }
    return v0;
}

BoxUpperVerdict check_box_upper(const LiftedPair& pair, const Edge& e) {
    pair.index_of(e); // validates membership in E'
    for (const Edge& f : pair.lifted_only()) {
        if (f == e)
            continue;
        const auto cv = cut_vertices(pair.base(), f.u, f.v);
        const bool u_cv = std::binary_search(cv.begin(), cv.end(), e.u);
        const bool v_cv = std::binary_search(cv.begin(), cv.end(), e.v);
        if (u_cv && v_cv)
            return {false, f};
    }
    return {true, std::nullopt};
}

namespace {

std::optional<NodeId> triangle_through(const Graph& h, const Edge& e) {
    for (NodeId t = 0; t < h.node_count(); ++t)
        if (t != e.u && t != e.v && h.has_edge(e.u, t) && h.has_edge(e.v, t))
            return t;
    return std::nullopt;
}

bool separates(const Graph& g, NodeId s, NodeId s2, NodeId u, NodeId v) {
    std::vector<std::uint8_t> blocked(g.node_count(), 0);
    blocked[s] = blocked[s2] = 1;
    std::vector<std::uint8_t> seen(g.node_count(), 0);
    std::deque<NodeId> queue{u};
    seen[u] = 1;
    while (!queue.empty()) {
        const NodeId x = queue.front();
        queue.pop_front();
        if (x == v)
            return false;
        for (NodeId t : g.neighbors(x))
            if (!seen[t] && !blocked[t]) {
                seen[t] = 1;
                queue.push_back(t);
            }
    }
    return true;
}

} // namespace

BoxLowerVerdict check_box_lower(const LiftedPair& pair, const Edge& e) {
    pair.index_of(e);
    BoxLowerVerdict out;
    out.base_edge = pair.is_base_edge(e);
    if (out.base_edge) {
        out.triangle_witness = triangle_through(pair.lifted(), e);
        out.verdict = out.triangle_witness ? FacetVerdict::not_facet : FacetVerdict::facet;
        return out;
    }
    // lifted-only edge: three necessary conditions
    out.triangle_witness = triangle_through(pair.lifted(), e);
    out.cond_a = !out.triangle_witness.has_value();

    const auto cv = cut_vertices(pair.base(), e.u, e.v);
    for (std::size_t i = 0; i < cv.size() && out.cond_b; ++i)
        for (std::size_t j = i + 1; j < cv.size(); ++j) {
            const Edge p(cv[i], cv[j]);
            if (p == e)
                continue;
            const auto dg = distance(pair.base(), p.u, p.v);
            const auto dg2 = distance(pair.lifted(), p.u, p.v);
            if ((dg && *dg < 3) || (dg2 && *dg2 < 2)) {
                out.cond_b = false;
                out.distance_witness = {p.u, p.v};
                break;
            }
        }

    for (NodeId t : cv) {
        if (out.separator_witness)
            break;
        for (NodeId s = 0; s < pair.node_count() && !out.separator_witness; ++s) {
            if (s == t || s == e.u || s == e.v || !pair.lifted().has_edge(t, s))
                continue;
            for (NodeId s2 = s + 1; s2 < pair.node_count(); ++s2) {
                if (s2 == t || s2 == e.u || s2 == e.v)
                    continue;
                if (!pair.lifted().has_edge(t, s2) || !pair.lifted().has_edge(s, s2))
                    continue;
                if (separates(pair.base(), s, s2, e.u, e.v)) {
                    out.separator_witness = BoxLowerVerdict::SeparatorTriangle{s, s2, t};
                    break;
                }
            }
        }
    }
    out.cond_c = !out.separator_witness.has_value();

    out.verdict = (out.cond_a && out.cond_b && out.cond_c) ? FacetVerdict::inconclusive
                                                           : FacetVerdict::not_facet;
    return out;
}

bool check_cycle_facet(const LiftedPair& pair, const EdgeSet& cycle) {
    return is_chordless_in(pair.lifted(), cycle);
}

bool check_path_facet(const LiftedPair& pair, const Edge& f, const Path& p) {
    EdgeSet cycle = p.edges;
    cycle.push_back(f);
    return is_chordless_in(pair.lifted(), cycle);
}

bool check_cycle_path_facet(const LiftedPair& pair, const InequalityTag& tag) {
    if (const auto* c = std::get_if<CycleTag>(&tag))
        return check_cycle_facet(pair, c->cycle);
    if (const auto* p = std::get_if<PathTag>(&tag))
        return check_path_facet(pair, p->lifted, p->path);
    throw std::invalid_argument("expected a cycle or path inequality tag");
}

std::vector<std::string> CutConditionReport::violated() const {
    std::vector<std::string> out;
    if (!c1) out.push_back("C1");
    if (!c2) out.push_back("C2");
    if (!c3) out.push_back("C3");
    if (!c4) out.push_back("C4");
    if (!c5) out.push_back("C5");
    return out;
}

namespace {

struct ComponentView {
    std::uint64_t node_mask = 0;
    std::uint64_t f_cross_mask = 0; // over indices in ctx.crossing_lifted()
    std::vector<std::size_t> cut_edges; // indices into ctx.cut()
    bool proper = false;
};

std::vector<ComponentView> component_views(const VwCutContext& ctx,
                                           const std::vector<VwcComponent>& comps) {
    std::vector<ComponentView> views;
    views.reserve(comps.size());
    const EdgeSet& f_cross = ctx.crossing_lifted();
    const EdgeSet& cut = ctx.cut();
    for (const VwcComponent& comp : comps) {
        ComponentView view;
        view.proper = comp.proper;
        for (NodeId u : comp.nodes)
            view.node_mask |= bit(u);
        for (std::size_t i = 0; i < f_cross.size(); ++i)
            if ((view.node_mask & bit(f_cross[i].u)) && (view.node_mask & bit(f_cross[i].v)))
                view.f_cross_mask |= std::uint64_t(1) << i;
        for (std::size_t i = 0; i < cut.size(); ++i)
            if ((view.node_mask & bit(cut[i].u)) && (view.node_mask & bit(cut[i].v)))
                view.cut_edges.push_back(i);
        views.push_back(std::move(view));
    }
    return views;
}

EdgeSet subset_from_mask(const EdgeSet& edges, std::uint64_t mask) {
    EdgeSet out;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (mask & (std::uint64_t(1) << i))
            out.push_back(edges[i]);
    return out;
}

} // namespace

CutConditionReport check_cut_conditions(const VwCutContext& ctx) {
    CutConditionReport report;
    const auto comps = enumerate_vwc_components(ctx);
    const auto views = component_views(ctx, comps);
    const EdgeSet& cut = ctx.cut();
    const EdgeSet& f_cross = ctx.crossing_lifted();
    const std::size_t k_cross = f_cross.size();
    if (k_cross > 20)
        throw std::invalid_argument("too many crossing lifted edges for condition evaluation");

    // C1: every cut edge lies in some component.
    std::vector<std::vector<std::size_t>> comps_with_cut_edge(cut.size());
    for (std::size_t c = 0; c < views.size(); ++c)
        for (std::size_t i : views[c].cut_edges)
            comps_with_cut_edge[i].push_back(c);
    for (std::size_t i = 0; i < cut.size(); ++i)
        if (comps_with_cut_edge[i].empty()) {
            report.c1 = false;
            report.c1_witness = cut[i];
            break;
        }

    // C2: every nonempty F finds a cut edge whose components disagree on
    // |F n F_{V*}|.
    for (std::uint64_t fs = 1; fs < (std::uint64_t(1) << k_cross) && report.c2; ++fs) {
        bool found = false;
        for (std::size_t i = 0; i < cut.size() && !found; ++i) {
            std::optional<int> first;
            for (std::size_t c : comps_with_cut_edge[i]) {
                const int count = std::popcount(views[c].f_cross_mask & fs);
                if (!first)
                    first = count;
                else if (*first != count) {
                    found = true;
                    break;
                }
            }
        }
        if (!found) {
            report.c2 = false;
            report.c2_witness = subset_from_mask(f_cross, fs);
        }
    }

    // C3: per f', F, k, some component pair (with f' inside resp. outside)
    // breaks the count pattern (k inside, 0 outside).
    for (std::size_t fp = 0; fp < k_cross && report.c3; ++fp) {
        const std::uint64_t fp_bit = std::uint64_t(1) << fp;
        std::vector<std::uint64_t> with, without;
        for (const ComponentView& view : views)
            ((view.f_cross_mask & fp_bit) ? with : without).push_back(view.f_cross_mask);
        for (std::uint64_t fs = 1; fs < (std::uint64_t(1) << k_cross) && report.c3; ++fs) {
            if (fs & fp_bit)
                continue;
            std::vector<int> with_counts, without_counts;
            for (std::uint64_t m : with)
                with_counts.push_back(std::popcount(m & fs));
            for (std::uint64_t m : without)
                without_counts.push_back(std::popcount(m & fs));
            const bool without_all_zero =
                std::all_of(without_counts.begin(), without_counts.end(), [](int c) { return c == 0; });
            const std::size_t k_max = static_cast<std::size_t>(std::popcount(fs));
            for (std::size_t k = 0; k <= k_max; ++k) {
                const bool with_all_k = !with.empty() &&
                    std::all_of(with_counts.begin(), with_counts.end(),
                                [&](int c) { return c == static_cast<int>(k); });
                const bool violated = with.empty() || (with_all_k && without_all_zero);
                if (violated) {
                    report.c3 = false;
                    report.c3_witness = CutConditionReport::C3Witness{f_cross[fp], subset_from_mask(f_cross, fs), k};
                    break;
                }
            }
        }
    }

    // C4 and C5 quantify over paths and cycles of the crossing graph and
    // ask for a properly connected component avoiding the stated nodes.
    std::vector<const ComponentView*> proper;
    for (const ComponentView& view : views)
        if (view.proper)
            proper.push_back(&view);

    const auto v_nodes = ctx.v_side_nodes();
    const auto w_nodes = ctx.w_side_nodes();
    std::uint64_t v_mask = 0;
    for (NodeId u : v_nodes)
        v_mask |= bit(u);

    for (NodeId vp : v_nodes) {
        if (!report.c4)
            break;
        for (NodeId wp : w_nodes) {
            if (!report.c4)
                break;
            for (const Path& p : enumerate_vw_paths(ctx.crossing_graph(), vp, wp)) {
                // For a 1-elementary cut, the path consisting of the cut edge
                // alone restates the face equality x_vw = x_e and constrains
                // nothing further.
                if (cut.size() == 1 && p.edges.size() == 1 && p.edges[0] == cut[0])
                    continue;
                std::uint64_t path_mask = 0;
                for (NodeId u : p.nodes)
                    path_mask |= bit(u);
                const std::uint64_t path_v = path_mask & v_mask;
                const std::uint64_t path_w = path_mask & ~v_mask;
                bool satisfied = false;
                for (const ComponentView* comp : proper) {
                    const bool left = !(comp->node_mask & bit(vp)) || (path_w & ~comp->node_mask);
                    const bool right = !(comp->node_mask & bit(wp)) || (path_v & ~comp->node_mask);
                    if (left && right) {
                        satisfied = true;
                        break;
                    }
                }
                if (!satisfied) {
                    report.c4 = false;
                    report.c4_witness = CutConditionReport::C4Witness{vp, wp, p};
                    break;
                }
            }
        }
    }

    for (const EdgeSet& cycle : enumerate_cycles(ctx.crossing_graph())) {
        if (!report.c5)
            break;
        std::uint64_t cycle_mask = 0;
        for (const Edge& e : cycle)
            cycle_mask |= bit(e.u) | bit(e.v);
        const std::uint64_t cyc_v = cycle_mask & v_mask;
        const std::uint64_t cyc_w = cycle_mask & ~v_mask;
        bool satisfied = false;
        for (const ComponentView* comp : proper)
            if ((cyc_v & ~comp->node_mask) && (cyc_w & ~comp->node_mask)) {
                satisfied = true;
                break;
            }
        if (!satisfied) {
            report.c5 = false;
            report.c5_witness = cycle;
        }
    }

    return report;
}

SingleEdgeCutVerdict check_single_edge_cut_facet(const VwCutContext& ctx) {
    if (ctx.cut().size() != 1)
        throw std::invalid_argument("verdict requires a 1-elementary cut");
    SingleEdgeCutVerdict out;
    out.v0 = compute_v0(ctx);
    std::vector<std::uint8_t> in_v0(ctx.pair().node_count(), 0);
    for (NodeId u : out.v0.v_side)
        in_v0[u] = 1;
    for (NodeId u : out.v0.w_side)
        in_v0[u] = 1;
    const auto side_endpoint = [&](const Edge& f, bool v_side) {
        return ctx.on_v_side(f.u) == v_side ? f.u : f.v;
    };
    const EdgeSet& f_cross = ctx.crossing_lifted();
    for (const Edge& f : f_cross) {
        if (in_v0[side_endpoint(f, true)] && in_v0[side_endpoint(f, false)]) {
            out.cond_a = false;
            out.a_witness = f;
            break;
        }
    }
    for (std::size_t i = 0; i < f_cross.size() && out.cond_b; ++i)
        for (std::size_t j = i + 1; j < f_cross.size(); ++j) {
            const Edge& f1 = f_cross[i];
            const Edge& f2 = f_cross[j];
            const NodeId v1 = side_endpoint(f1, true), w1 = side_endpoint(f1, false);
            const NodeId v2 = side_endpoint(f2, true), w2 = side_endpoint(f2, false);
            const bool shared_v = v1 == v2 && in_v0[w1] && in_v0[w2];
            const bool shared_w = w1 == w2 && in_v0[v1] && in_v0[v2];
            if (shared_v || shared_w) {
                out.cond_b = false;
                out.b_witness = {f1, f2};
                break;
            }
        }
    out.facet = out.cond_a && out.cond_b;
    return out;
}

std::vector<Edge> one_elementary_cuts(const Graph& g, NodeId v, NodeId w) {
    std::vector<Edge> out;
    for (const Edge& e : g.edges()) {
        const auto label = component_labels(g, {e});
        if (label[v] != label[w])
            out.push_back(e);
    }
    return out;
}

} // namespace lmc
