#include "lmc/generators.hpp"
#include "lmc/graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace lmc;

namespace {

// Independent oracle: all chordless cycles by brute force over node subsets.
// A subset spans a chordless cycle iff its induced subgraph is connected and
// 2-regular; the cycle is then the induced edge set.
std::set<EdgeSet> chordless_cycles_by_subsets(const Graph& g) {
    std::set<EdgeSet> out;
    const std::size_t n = g.node_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        std::vector<NodeId> nodes;
        for (NodeId u = 0; u < n; ++u)
            if (mask & (std::uint64_t(1) << u))
                nodes.push_back(u);
        if (nodes.size() < 3)
            continue;
        EdgeSet induced;
        std::vector<std::size_t> degree(n, 0);
        for (std::size_t i = 0; i < nodes.size(); ++i)
            for (std::size_t j = i + 1; j < nodes.size(); ++j)
                if (g.has_edge(nodes[i], nodes[j])) {
                    induced.emplace_back(nodes[i], nodes[j]);
                    ++degree[nodes[i]];
                    ++degree[nodes[j]];
                }
        if (induced.size() != nodes.size())
            continue;
        const bool two_regular = std::all_of(nodes.begin(), nodes.end(),
                                             [&](NodeId u) { return degree[u] == 2; });
        if (!two_regular)
            continue;
        Graph sub(n, induced);
        EdgeSet removed_all; // connectivity of the subset within induced edges
        std::vector<std::uint8_t> seen(n, 0);
        std::vector<NodeId> stack{nodes.front()};
        seen[nodes.front()] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const NodeId u = stack.back();
            stack.pop_back();
            for (NodeId t : sub.neighbors(u))
                if (!seen[t]) {
                    seen[t] = 1;
                    ++reached;
                    stack.push_back(t);
                }
        }
        if (reached == nodes.size())
            out.insert(sorted_edge_set(induced));
    }
    return out;
}

// Independent oracle: minimal vw-cuts by filtering all edge subsets.
std::set<EdgeSet> vw_cuts_by_subsets(const Graph& g, NodeId v, NodeId w) {
    const auto separates = [&](const EdgeSet& cut) {
        return component_labels(g, cut)[v] != component_labels(g, cut)[w];
    };
    std::set<EdgeSet> out;
    const std::size_t m = g.edge_count();
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
        EdgeSet cut;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (std::uint64_t(1) << i))
                cut.push_back(g.edges()[i]);
        if (!separates(cut))
            continue;
        bool minimal = true;
        for (std::size_t drop = 0; drop < cut.size() && minimal; ++drop) {
            EdgeSet smaller;
            for (std::size_t i = 0; i < cut.size(); ++i)
                if (i != drop)
                    smaller.push_back(cut[i]);
            if (separates(smaller))
                minimal = false;
        }
        if (minimal)
            out.insert(cut);
    }
    return out;
}

} // namespace

TEST_CASE("edges normalize and reject loops") {
    const Edge e(3, 1);
    CHECK(e.u == 1);
    CHECK(e.v == 3);
    CHECK(e.other(1) == 3);
    CHECK_THROWS_AS(Edge(2, 2), std::invalid_argument);
}

TEST_CASE("graph construction validates") {
    CHECK_THROWS_AS(Graph(3, {Edge(0, 1), Edge(1, 0)}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {Edge(0, 2)}), std::invalid_argument);
    const Graph g(4, {Edge(2, 0), Edge(0, 1)});
    CHECK(g.edges() == EdgeSet{Edge(0, 1), Edge(0, 2)}); // canonical order
    CHECK(g.edge_index(Edge(0, 2)) == 1);
    CHECK(!g.edge_index(Edge(1, 2)));
}

TEST_CASE("connectivity") {
    CHECK(is_connected(gen_path(3)));
    CHECK(!is_connected(Graph(2, {})));
    CHECK(is_connected(Graph(3, {Edge(0, 1), Edge(1, 2)}))); // K3 minus an edge
    CHECK(is_connected(Graph(0, {})));
    CHECK(is_connected(Graph(1, {})));
}

TEST_CASE("chordless cycles on the small fixtures") {
    CHECK(enumerate_chordless_cycles(gen_complete(3)).size() == 1);
    CHECK(enumerate_chordless_cycles(gen_cycle(4)).size() == 1);
    CHECK(enumerate_chordless_cycles(gen_cycle(4))[0].size() == 4);

    const auto k4 = enumerate_chordless_cycles(gen_complete(4));
    CHECK(k4.size() == 4); // four triangles, no chordless 4-cycle
    for (const EdgeSet& c : k4)
        CHECK(c.size() == 3);
}

TEST_CASE("chordless cycles match the subset oracle") {
    for (const Graph& g : {gen_complete(4), gen_grid(2, 3), gen_cycle(5),
                           Graph(5, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(0, 4), Edge(1, 4)})}) {
        const auto oracle = chordless_cycles_by_subsets(g);
        const auto got = enumerate_chordless_cycles(g);
        CHECK(got.size() == oracle.size());
        for (const EdgeSet& c : got)
            CHECK(oracle.count(c) == 1);
    }
}

TEST_CASE("cycle enumeration emits each cycle once with degree-2 structure") {
    const Graph g = gen_complete(4);
    const auto cycles = enumerate_cycles(g);
    std::set<EdgeSet> unique(cycles.begin(), cycles.end());
    CHECK(unique.size() == cycles.size());
    CHECK(cycles.size() == 7); // 4 triangles + 3 quadrilaterals
    for (const EdgeSet& c : cycles) {
        std::vector<std::size_t> degree(g.node_count(), 0);
        for (const Edge& e : c) {
            ++degree[e.u];
            ++degree[e.v];
        }
        for (std::size_t d : degree)
            CHECK((d == 0 || d == 2));
    }
}

TEST_CASE("vw path enumeration") {
    CHECK(enumerate_vw_paths(gen_path(3), 0, 2).size() == 1);
    CHECK(enumerate_vw_paths(gen_complete(3), 0, 1).size() == 2);
    CHECK_THROWS_AS(enumerate_vw_paths(gen_path(3), 1, 1), std::invalid_argument);

    // K4: brute-force count over node sequences gives 5
    const auto paths = enumerate_vw_paths(gen_complete(4), 0, 3);
    CHECK(paths.size() == 5);
    // lexicographic order of node sequences
    for (std::size_t i = 1; i < paths.size(); ++i)
        CHECK(paths[i - 1].nodes < paths[i].nodes);
}

TEST_CASE("vw cut enumeration matches the subset oracle") {
    {
        const auto cuts = enumerate_vw_cuts(Graph(2, {Edge(0, 1)}), 0, 1);
        CHECK(cuts == std::vector<EdgeSet>{{Edge(0, 1)}});
    }
    {
        const auto cuts = enumerate_vw_cuts(gen_path(3), 0, 2);
        CHECK(cuts.size() == 2);
    }
    {
        // K3: exactly the two cuts isolating an endpoint
        const auto cuts = enumerate_vw_cuts(gen_complete(3), 0, 2);
        const auto oracle = vw_cuts_by_subsets(gen_complete(3), 0, 2);
        CHECK(cuts.size() == 2);
        CHECK(oracle.size() == 2);
        for (const EdgeSet& c : cuts)
            CHECK(oracle.count(c) == 1);
    }
    for (const Graph& g : {gen_complete(4), gen_grid(2, 3), gen_cycle(5)}) {
        const auto cuts = enumerate_vw_cuts(g, 0, g.node_count() - 1);
        const auto oracle = vw_cuts_by_subsets(g, 0, g.node_count() - 1);
        CHECK(cuts.size() == oracle.size());
        for (const EdgeSet& c : cuts)
            CHECK(oracle.count(c) == 1);
    }
    CHECK_THROWS_AS(enumerate_vw_cuts(Graph(2, {}), 0, 1), std::invalid_argument);
}

TEST_CASE("cut vertices equal the intersection of all paths") {
    {
        const auto cv = cut_vertices(gen_path(3), 0, 2);
        CHECK(cv == std::vector<NodeId>{0, 1, 2});
    }
    {
        const auto cv = cut_vertices(gen_complete(3), 0, 2);
        CHECK(cv == std::vector<NodeId>{0, 2});
    }
    // fig7i base graph: verify against explicit path intersection
    const Graph g(6, {Edge(0, 1), Edge(1, 2), Edge(3, 4), Edge(4, 5), Edge(0, 3), Edge(2, 5)});
    for (NodeId v = 0; v < g.node_count(); ++v)
        for (NodeId w = v + 1; w < g.node_count(); ++w) {
            const auto cv = cut_vertices(g, v, w);
            std::set<NodeId> intersection;
            bool first = true;
            for (const Path& p : enumerate_vw_paths(g, v, w)) {
                std::set<NodeId> here(p.nodes.begin(), p.nodes.end());
                if (first) {
                    intersection = here;
                    first = false;
                } else {
                    std::set<NodeId> keep;
                    std::set_intersection(intersection.begin(), intersection.end(),
                                          here.begin(), here.end(),
                                          std::inserter(keep, keep.begin()));
                    intersection = keep;
                }
            }
            CHECK(std::vector<NodeId>(intersection.begin(), intersection.end()) == cv);
        }
}

TEST_CASE("edge contraction") {
    {
        const auto r = contract_edge(gen_complete(3), Edge(0, 1));
        CHECK(r.graph.node_count() == 2);
        CHECK(r.graph.edge_count() == 1);
    }
    {
        const auto r = contract_edge(gen_path(4), Edge(1, 2));
        CHECK(r.graph.node_count() == 3);
        CHECK(r.graph.edges() == EdgeSet{Edge(0, 1), Edge(1, 2)});
        CHECK(r.node_map == std::vector<NodeId>{0, 1, 1, 2});
    }
    {
        const auto r = contract_edge(gen_complete(4), Edge(1, 3));
        CHECK(r.graph.node_count() == 3);
        CHECK(r.graph.edge_count() == 3); // triangle
    }
    CHECK_THROWS_AS(contract_edge(gen_path(3), Edge(0, 2)), std::invalid_argument);

    // contraction preserves connectivity
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const LiftedPair pair = gen_random_pair(6, 0.5, 0.0, 100 + seed);
        const Graph& g = pair.base();
        for (const Edge& e : g.edges())
            CHECK(is_connected(contract_edge(g, e).graph));
    }
}
