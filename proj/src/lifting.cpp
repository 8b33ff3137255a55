#include "lmc/lifting.hpp"

#include <algorithm>
#include <deque>

namespace lmc {

std::string labeling_to_string(const Labeling& x) {
    std::string s;
    s.reserve(x.size());
    for (std::uint8_t b : x)
        s += b ? '1' : '0';
    return s;
}

Labeling labeling_from_string(const std::string& s) {
    Labeling x;
    x.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("labeling must be a 01-string, got '" + s + "'");
        x.push_back(c == '1');
    }
    return x;
}

LiftedPair::LiftedPair(Graph base, Graph lifted)
    : base_(std::move(base)), lifted_(std::move(lifted)) {
    if (base_.node_count() != lifted_.node_count())
        throw std::invalid_argument("base and lifted graphs must share the node set");
    for (const Edge& e : base_.edges())
        if (!lifted_.has_edge(e))
            throw std::invalid_argument("base edge " + e.str() + " missing from the lifted graph");
    if (!is_connected(base_))
        throw std::invalid_argument("base graph must be connected");
    for (const Edge& e : lifted_.edges())
        if (!base_.has_edge(e))
            lifted_only_.push_back(e);
}

std::size_t LiftedPair::index_of(const Edge& e) const {
    const auto idx = lifted_.edge_index(e);
    if (!idx)
        throw std::invalid_argument("edge " + e.str() + " is not in the lifted graph");
    return *idx;
}

Labeling labeling_from_decomposition(const LiftedPair& pair, const Decomposition& pi) {
    const auto block = pi.block_of(pair.node_count());
    Labeling x;
    x.reserve(pair.lifted_edge_count());
    for (const Edge& e : pair.lifted().edges())
        x.push_back(block[e.u] != block[e.v]);
    return x;
}

EdgeSet lift(const LiftedPair& pair, const EdgeSet& m) {
    const Decomposition pi = multicut_to_decomposition(pair.base(), m);
    return decomposition_to_multicut(pair.lifted(), pi);
}

bool is_lifted_multicut(const LiftedPair& pair, const Labeling& x) {
    if (x.size() != pair.lifted_edge_count())
        throw std::invalid_argument("labeling length does not match the lifted edge count");
    EdgeSet cut_base;
    for (const Edge& e : pair.base().edges())
        if (x[pair.index_of(e)])
            cut_base.push_back(e);
    const auto label = component_labels(pair.base(), cut_base);
    for (const Edge& e : pair.lifted().edges()) {
        const bool joined = label[e.u] == label[e.v];
        if (joined == static_cast<bool>(x[pair.index_of(e)]))
            return false;
    }
    return true;
}

bool is_lifted_multicut_by_inequalities(const LiftedPair& pair, const Labeling& x) {
    if (x.size() != pair.lifted_edge_count())
        throw std::invalid_argument("labeling length does not match the lifted edge count");
    const auto value = [&](const Edge& e) { return static_cast<long>(x[pair.index_of(e)]); };
    for (const EdgeSet& cycle : enumerate_chordless_cycles(pair.base())) {
        long total = 0;
        for (const Edge& e : cycle)
            total += value(e);
        for (const Edge& e : cycle)
            if (value(e) > total - value(e))
                return false;
    }
    for (const Edge& f : pair.lifted_only()) {
        for (const Path& p : enumerate_vw_paths(pair.base(), f.u, f.v)) {
            long total = 0;
            for (const Edge& e : p.edges)
                total += value(e);
            if (value(f) > total)
                return false;
        }
        for (const EdgeSet& cut : enumerate_vw_cuts(pair.base(), f.u, f.v)) {
            long slack = 0;
            for (const Edge& e : cut)
                slack += 1 - value(e);
            if (1 - value(f) > slack)
                return false;
        }
    }
    return true;
}

void for_each_lifted_multicut(const LiftedPair& pair, const std::function<bool(const Labeling&)>& fn) {
    for_each_decomposition(pair.base(), [&](const Decomposition& pi) {
        return fn(labeling_from_decomposition(pair, pi));
    });
}

std::vector<Labeling> enumerate_lifted_multicuts(const LiftedPair& pair) {
    std::vector<Labeling> out;
    for_each_lifted_multicut(pair, [&](const Labeling& x) {
        out.push_back(x);
        return true;
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::map<Edge, std::size_t> compute_levels(const LiftedPair& pair) {
    // Per lifted-only edge, the lifted-only chord sets of all its base paths.
    std::map<Edge, std::vector<std::vector<Edge>>> chord_sets;
    for (const Edge& f : pair.lifted_only()) {
        auto& sets = chord_sets[f];
        for (const Path& p : enumerate_vw_paths(pair.base(), f.u, f.v)) {
            std::vector<Edge> chords;
            for (const Edge& g : pair.lifted_only()) {
                if (g == f)
                    continue;
                const bool u_on = std::find(p.nodes.begin(), p.nodes.end(), g.u) != p.nodes.end();
                const bool v_on = std::find(p.nodes.begin(), p.nodes.end(), g.v) != p.nodes.end();
                if (u_on && v_on)
                    chords.push_back(g);
            }
            sets.push_back(std::move(chords));
        }
    }
    std::map<Edge, std::size_t> level;
    std::size_t assigned = 0;
    for (std::size_t round = 1; assigned < pair.lifted_only().size(); ++round) {
        std::vector<Edge> newly;
        for (const Edge& f : pair.lifted_only()) {
            if (level.count(f))
                continue;
            for (const auto& chords : chord_sets[f]) {
                const bool ok = std::all_of(chords.begin(), chords.end(),
                                            [&](const Edge& g) { return level.count(g) > 0; });
                if (ok) {
                    newly.push_back(f);
                    break;
                }
            }
        }
        if (newly.empty())
            throw std::logic_error("level fixed point stalled; base graph not connected?");
        for (const Edge& f : newly)
            level[f] = round;
        assigned += newly.size();
    }
    return level;
}

Labeling f_feasible_labeling(const LiftedPair& pair, const Edge& f) {
    if (!std::binary_search(pair.lifted_only().begin(), pair.lifted_only().end(), f))
        throw std::invalid_argument("edge " + f.str() + " is not a lifted-only edge");
    const auto paths = enumerate_vw_paths(pair.base(), f.u, f.v);
    const Path* best = nullptr;
    for (const Path& p : paths) {
        if (!best || p.nodes.size() < best->nodes.size() ||
            (p.nodes.size() == best->nodes.size() && p.nodes < best->nodes))
            best = &p;
    }
    std::vector<std::uint8_t> on_path(pair.node_count(), 0);
    for (NodeId u : best->nodes)
        on_path[u] = 1;
    const EdgeSet path_edges = sorted_edge_set(best->edges);
    Labeling x(pair.lifted_edge_count(), 1);
    for (const Edge& e : pair.base().edges())
        if (edge_set_contains(path_edges, e))
            x[pair.index_of(e)] = 0;
    for (const Edge& g : pair.lifted_only())
        if (on_path[g.u] && on_path[g.v])
            x[pair.index_of(g)] = 0;
    return x;
}

std::vector<Labeling> dimension_witness(const LiftedPair& pair) {
    std::vector<Labeling> out;
    out.push_back(Labeling(pair.lifted_edge_count(), 1));
    for (const Edge& e : pair.base().edges()) {
        Labeling x(pair.lifted_edge_count(), 1);
        x[pair.index_of(e)] = 0;
        out.push_back(std::move(x));
    }
    const auto level = compute_levels(pair);
    EdgeSet by_level = pair.lifted_only();
    std::stable_sort(by_level.begin(), by_level.end(),
                     [&](const Edge& a, const Edge& b) { return level.at(a) < level.at(b); });
    for (const Edge& f : by_level)
        out.push_back(f_feasible_labeling(pair, f));
    return out;
}

} // namespace lmc
