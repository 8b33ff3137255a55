#include "lmc/fixtures.hpp"

#include <random>

namespace lmc {
namespace fixtures {

LiftedPair fig3() {
    Graph base(3, {Edge(0, 1), Edge(0, 2)});
    return make_lifted_pair(std::move(base), {Edge(1, 2)});
}

LiftedPair k3() {
    Graph base = gen_complete(3);
    return LiftedPair(base, base);
}

LiftedPair fig4a() {
    return make_lifted_pair(gen_path(4), {Edge(0, 2), Edge(1, 3), Edge(0, 3)});
}

LiftedPair fig4b() {
    return make_lifted_pair(gen_cycle(6), {Edge(0, 2), Edge(3, 5), Edge(2, 5)});
}

LiftedPair c4k4() {
    return make_lifted_pair(gen_cycle(4), {Edge(0, 2), Edge(1, 3)});
}

LiftedPair grid23() {
    Graph base = gen_grid(2, 3);
    std::mt19937_64 rng(7);
    EdgeSet candidates;
    for (NodeId u = 0; u < base.node_count(); ++u)
        for (NodeId v = u + 1; v < base.node_count(); ++v)
            if (!base.has_edge(u, v))
                candidates.emplace_back(u, v);
    EdgeSet extra;
    while (extra.size() < 3) {
        const Edge pick = candidates[rng() % candidates.size()];
        if (std::find(extra.begin(), extra.end(), pick) == extra.end())
            extra.push_back(pick);
    }
    return make_lifted_pair(std::move(base), extra);
}

Instance fig6_lifted() {
    LiftedPair pair = fig3();
    return Instance{std::move(pair), CostFunction{{-1, -1, 3}}};
}

Instance fig6_plain() {
    Graph triangle = gen_complete(3);
    LiftedPair pair(triangle, triangle);
    return Instance{std::move(pair), CostFunction{{-1, -1, 3}}};
}

CutFixture fig7(char letter) {
    switch (letter) {
    case 'a': {
        // 0=v, 1 and 3 interior, 2=w; cut isolates the lower route.
        Graph base(4, {Edge(0, 1), Edge(1, 2), Edge(1, 3), Edge(2, 3)});
        CutFixture fx{"fig7a", make_lifted_pair(std::move(base), {Edge(0, 2)}),
                      Edge(0, 2), {Edge(1, 2), Edge(1, 3)}, 1,
                      {}, {}, {}, {}, {}, {}, {}};
        fx.c1_edge = Edge(1, 3);
        return fx;
    }
    case 'b': {
        // path 0-1-2-3 with lifted 0-3 and 1-3
        CutFixture fx{"fig7b", make_lifted_pair(gen_path(4), {Edge(0, 3), Edge(1, 3)}),
                      Edge(0, 3), {Edge(1, 2)}, 2,
                      {}, {}, {}, {}, {}, {}, {}};
        fx.c2_subset = EdgeSet{Edge(1, 3)};
        return fx;
    }
    case 'c': {
        // 4-cycle 0-1-3-2-0 with lifted diagonals; both cut edges dotted
        Graph base(4, {Edge(0, 1), Edge(0, 2), Edge(1, 3), Edge(2, 3)});
        CutFixture fx{"fig7c", make_lifted_pair(std::move(base), {Edge(0, 3), Edge(1, 2)}),
                      Edge(0, 3), {Edge(0, 1), Edge(2, 3)}, 2,
                      {}, {}, {}, {}, {}, {}, {}};
        fx.c2_subset = EdgeSet{Edge(1, 2)};
        return fx;
    }
    case 'd': {
        // two parallel two-edge routes from 0 meeting at 3, then 3-4
        Graph base(5, {Edge(0, 1), Edge(0, 2), Edge(1, 3), Edge(2, 3), Edge(3, 4)});
        CutFixture fx{"fig7d", make_lifted_pair(std::move(base), {Edge(0, 4), Edge(1, 4)}),
                      Edge(0, 4), {Edge(1, 3), Edge(2, 3)}, 2,
                      {}, {}, {}, {}, {}, {}, {}};
        fx.c2_subset = EdgeSet{Edge(1, 4)};
        return fx;
    }
    case 'e': {
        // two 7-cycles (0,1..6) and (13,7..12) joined by an 8-edge cut
        Graph base(14, {Edge(0, 1), Edge(0, 6), Edge(1, 2), Edge(2, 3), Edge(3, 4),
                        Edge(4, 5), Edge(5, 6),
                        Edge(7, 13), Edge(12, 13), Edge(7, 8), Edge(8, 9), Edge(9, 10),
                        Edge(10, 11), Edge(11, 12),
                        Edge(1, 7), Edge(1, 8), Edge(2, 7), Edge(3, 9), Edge(4, 10),
                        Edge(5, 12), Edge(6, 11), Edge(6, 12)});
        CutFixture fx{"fig7e",
                      make_lifted_pair(std::move(base), {Edge(0, 13), Edge(3, 10), Edge(4, 9)}),
                      Edge(0, 13),
                      {Edge(1, 7), Edge(1, 8), Edge(2, 7), Edge(3, 9), Edge(4, 10),
                       Edge(5, 12), Edge(6, 11), Edge(6, 12)},
                      2, {}, {}, {}, {}, {}, {}, {}};
        fx.c2_subset = EdgeSet{Edge(3, 10), Edge(4, 9)};
        return fx;
    }
    case 'f': {
        // path 0-1-2-3, context edge 0-2, lifted 0-3 and 1-3 behind the cut
        CutFixture fx{"fig7f",
                      make_lifted_pair(gen_path(4), {Edge(0, 2), Edge(0, 3), Edge(1, 3)}),
                      Edge(0, 2), {Edge(1, 2)}, 3,
                      {}, {}, {}, {}, {}, {}, {}};
        fx.c3_f_prime = Edge(0, 3);
        fx.c3_subset = EdgeSet{Edge(1, 3)};
        fx.c3_k = 1;
        return fx;
    }
    case 'g': {
        // pendant 0, then 1, apex 2 with two cut edges to 3 and 4, both
        // joined to 5; lifted edges from the pendant to 3, 4 and 5.
        Graph base(6, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(2, 4), Edge(3, 5), Edge(4, 5)});
        CutFixture fx{"fig7g",
                      make_lifted_pair(std::move(base),
                                       {Edge(1, 5), Edge(0, 3), Edge(0, 4), Edge(0, 5)}),
                      Edge(1, 5), {Edge(2, 3), Edge(2, 4)}, 3,
                      {}, {}, {}, {}, {}, {}, {}};
        fx.c3_f_prime = Edge(0, 5);
        fx.c3_subset = EdgeSet{Edge(0, 3), Edge(0, 4)};
        fx.c3_k = 1;
        return fx;
    }
    case 'h': {
        // two routes 0-1-2-3-4-8 and 1-5-6-7-8, then 8-9; cut mid-route
        Graph base(10, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(4, 8),
                        Edge(1, 5), Edge(5, 6), Edge(6, 7), Edge(7, 8), Edge(8, 9)});
        CutFixture fx{"fig7h",
                      make_lifted_pair(std::move(base),
                                       {Edge(0, 9), Edge(1, 7), Edge(2, 7), Edge(2, 8)}),
                      Edge(0, 9), {Edge(3, 4), Edge(5, 6)}, 4,
                      {}, {}, {}, {}, {}, {}, {}};
        fx.c4_path_nodes = std::vector<NodeId>{1, 7, 2, 8};
        return fx;
    }
    case 'i': {
        // 6 nodes, cut {0-3, 2-5}; lifted edges fan out of node 1
        Graph base(6, {Edge(0, 1), Edge(1, 2), Edge(3, 4), Edge(4, 5), Edge(0, 3), Edge(2, 5)});
        CutFixture fx{"fig7i",
                      make_lifted_pair(std::move(base),
                                       {Edge(0, 5), Edge(1, 3), Edge(1, 5), Edge(1, 4)}),
                      Edge(0, 5), {Edge(0, 3), Edge(2, 5)}, 4,
                      {}, {}, {}, {}, {}, {}, {}};
        fx.c4_path_nodes = std::vector<NodeId>{0, 3, 1, 5};
        return fx;
    }
    case 'j': {
        // long top route 0..7 and bottom route 1,8..11,6 with two cut edges;
        // four lifted edges between {2,3} and {10,11} close a 4-cycle
        Graph base(12, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(4, 5),
                        Edge(5, 6), Edge(6, 7), Edge(1, 8), Edge(8, 9), Edge(9, 10),
                        Edge(10, 11), Edge(6, 11)});
        CutFixture fx{"fig7j",
                      make_lifted_pair(std::move(base),
                                       {Edge(0, 7), Edge(3, 11), Edge(3, 10), Edge(2, 10), Edge(2, 11)}),
                      Edge(0, 7), {Edge(4, 5), Edge(8, 9)}, 5,
                      {}, {}, {}, {}, {}, {}, {}};
        fx.c5_cycle = sorted_edge_set({Edge(3, 11), Edge(3, 10), Edge(2, 10), Edge(2, 11)});
        return fx;
    }
    case 'k': {
        // same base as fig7i, lifted edges forming a cycle with cut edge 0-3
        Graph base(6, {Edge(0, 1), Edge(1, 2), Edge(3, 4), Edge(4, 5), Edge(0, 3), Edge(2, 5)});
        CutFixture fx{"fig7k",
                      make_lifted_pair(std::move(base),
                                       {Edge(0, 5), Edge(1, 3), Edge(1, 4), Edge(0, 4)}),
                      Edge(0, 5), {Edge(0, 3), Edge(2, 5)}, 5,
                      {}, {}, {}, {}, {}, {}, {}};
        fx.c5_cycle = sorted_edge_set({Edge(0, 3), Edge(1, 3), Edge(1, 4), Edge(0, 4)});
        return fx;
    }
    default:
        throw std::invalid_argument("no such figure fixture: 7" + std::string(1, letter));
    }
}

std::vector<CutFixture> fig7_all() {
    std::vector<CutFixture> out;
    for (char c = 'a'; c <= 'k'; ++c)
        out.push_back(fig7(c));
    return out;
}

std::vector<NamedPair> named_pairs() {
    std::vector<NamedPair> out;
    out.push_back({"fig3", fig3()});
    out.push_back({"k3", k3()});
    out.push_back({"fig4a", fig4a()});
    out.push_back({"fig4b", fig4b()});
    out.push_back({"c4k4", c4k4()});
    out.push_back({"grid23", grid23()});
    for (const CutFixture& fx : fig7_all())
        out.push_back({fx.name, fx.pair});
    return out;
}

std::vector<NamedPair> random_pairs(std::size_t count, std::uint64_t base_seed,
                                    std::size_t max_nodes, std::size_t max_lifted_edges) {
    std::vector<NamedPair> out;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = 3 + i % (max_nodes - 2);
        std::uint64_t seed = base_seed + i;
        for (;;) {
            LiftedPair pair = gen_random_pair(n, 0.6, 0.5, seed);
            if (pair.lifted_edge_count() <= max_lifted_edges) {
                out.push_back({"random-" + std::to_string(i), std::move(pair)});
                break;
            }
            seed += 7919; // bump and resample
        }
    }
    return out;
}

std::optional<LiftedPair> by_name(const std::string& name) {
    if (name == "fig3" || name == "fig6")
        return fig3();
    if (name == "k3")
        return k3();
    if (name == "fig4a")
        return fig4a();
    if (name == "fig4b")
        return fig4b();
    if (name == "c4k4")
        return c4k4();
    if (name == "grid23")
        return grid23();
    if (name.size() == 5 && name.starts_with("fig7") && name[4] >= 'a' && name[4] <= 'k')
        return fig7(name[4]).pair;
    return std::nullopt;
}

} // namespace fixtures
} // namespace lmc
