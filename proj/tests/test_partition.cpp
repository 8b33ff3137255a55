#include "lmc/generators.hpp"
#include "lmc/partition.hpp"

#include <doctest.h>

#include <set>

using namespace lmc;

namespace {

// Independent oracle: set partitions via restricted growth strings, kept
// when every block induces a connected subgraph.
std::vector<Decomposition> decompositions_by_rgs(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<Decomposition> out;
    if (n == 0) {
        out.push_back(Decomposition{});
        return out;
    }
    std::vector<std::size_t> rgs(n, 0);
    for (;;) {
        std::size_t blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<std::vector<NodeId>> parts(blocks);
        for (NodeId u = 0; u < n; ++u)
            parts[rgs[u]].push_back(u);
        try {
            out.push_back(make_decomposition(g, parts));
        } catch (const std::invalid_argument&) {
        }
        // next restricted growth string
        std::size_t i = n;
        while (i-- > 1) {
            std::size_t cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
            if (rgs[i] < cap) {
                ++rgs[i];
                std::fill(rgs.begin() + i + 1, rgs.end(), 0);
                break;
            }
            rgs[i] = 0;
            if (i == 1)
                return out;
        }
        if (n == 1)
            return out;
    }
}

EdgeSet edges(std::initializer_list<std::pair<NodeId, NodeId>> pairs) {
    EdgeSet out;
    for (const auto& [u, v] : pairs)
        out.emplace_back(u, v);
    return sorted_edge_set(std::move(out));
}

} // namespace

TEST_CASE("decomposition to multicut") {
    const Graph k3 = gen_complete(3);
    CHECK(decomposition_to_multicut(k3, make_decomposition(k3, {{0, 1, 2}})).empty());
    CHECK(decomposition_to_multicut(k3, make_decomposition(k3, {{0}, {1}, {2}})) == k3.edges());
}

TEST_CASE("grid decomposition straddles seven edges") {
    // 3x4 grid with three components: the classic picture of a decomposition
    const Graph g = gen_grid(3, 4);
    const Decomposition pi = make_decomposition(
        g, {{0, 1, 4}, {5, 6, 8, 9, 10}, {2, 3, 7, 11}});
    CHECK(decomposition_to_multicut(g, pi).size() == 7);
}

TEST_CASE("multicut to decomposition and witnesses") {
    const Graph k3 = gen_complete(3);
    CHECK(multicut_to_decomposition(k3, k3.edges()).blocks.size() == 3);
    CHECK(multicut_to_decomposition(k3, edges({{0, 1}, {0, 2}})).blocks ==
          std::vector<std::vector<NodeId>>{{0}, {1, 2}});
    try {
        multicut_to_decomposition(k3, edges({{0, 1}}));
        FAIL("expected NotAMulticutError");
    } catch (const NotAMulticutError& err) {
        CHECK(err.witness_edge == Edge(0, 1));
        CHECK(err.witness_path.front() == 0);
        CHECK(err.witness_path.back() == 1);
        CHECK(err.witness_path.size() == 3); // via node 2
    }
}

TEST_CASE("multicut test") {
    const Graph k3 = gen_complete(3);
    CHECK(is_multicut(k3, {}));
    CHECK(!is_multicut(k3, edges({{0, 1}})));
    CHECK(is_multicut(gen_cycle(4), edges({{0, 1}, {2, 3}})));
}

TEST_CASE("multicut counts on the figure graphs") {
    CHECK(enumerate_multicuts(gen_complete(3)).size() == 5);
    CHECK(enumerate_multicuts(gen_path(3)).size() == 4);
    CHECK(enumerate_multicuts(gen_cycle(4)).size() == 12);
}

TEST_CASE("decomposition enumeration matches the restricted-growth oracle") {
    for (const Graph& g : {gen_complete(3), gen_path(3), gen_cycle(4), gen_grid(2, 3),
                           gen_complete(4)}) {
        auto got = enumerate_decompositions(g);
        auto expected = decompositions_by_rgs(g);
        const auto less = [](const Decomposition& a, const Decomposition& b) {
            return a.blocks < b.blocks;
        };
        std::sort(got.begin(), got.end(), less);
        std::sort(expected.begin(), expected.end(), less);
        CHECK(got.size() == expected.size());
        CHECK(got == expected);
    }
}

TEST_CASE("degenerate graphs") {
    CHECK(enumerate_decompositions(Graph(0, {})).size() == 1);
    CHECK(enumerate_decompositions(Graph(1, {})).size() == 1);
    CHECK(enumerate_multicuts(Graph(1, {})) == std::vector<EdgeSet>{{}});
}

TEST_CASE("bijection between decompositions and multicuts") {
    for (const Graph& g : {gen_complete(4), gen_grid(2, 3), gen_cycle(5)}) {
        std::set<EdgeSet> seen;
        for (const Decomposition& pi : enumerate_decompositions(g)) {
            const EdgeSet m = decomposition_to_multicut(g, pi);
            CHECK(seen.insert(m).second); // injective
            CHECK(multicut_to_decomposition(g, m) == pi);
        }
        for (const EdgeSet& m : enumerate_multicuts(g))
            CHECK(decomposition_to_multicut(g, multicut_to_decomposition(g, m)) == m);
    }
}

TEST_CASE("component, chordless-cycle and all-cycle tests agree exhaustively") {
    for (const Graph& g : {gen_complete(4), gen_grid(2, 3), gen_cycle(5),
                           Graph(4, {Edge(0, 1), Edge(1, 2), Edge(1, 3), Edge(2, 3)})}) {
        REQUIRE(g.edge_count() <= 10);
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << g.edge_count()); ++mask) {
            EdgeSet m;
            for (std::size_t i = 0; i < g.edge_count(); ++i)
                if (mask & (std::uint64_t(1) << i))
                    m.push_back(g.edges()[i]);
            const bool by_components = is_multicut(g, m);
            CHECK(by_components == is_multicut_by_cycles(g, m));
            CHECK(by_components == is_multicut_by_all_cycles(g, m));
        }
    }
}

TEST_CASE("equivalence relations on complete graphs") {
    const Graph k3 = gen_complete(3);
    CHECK(multicut_to_equivalence(k3, {}).classes() ==
          std::vector<std::vector<NodeId>>{{0, 1, 2}});
    CHECK(multicut_to_equivalence(k3, k3.edges()).classes().size() == 3);

    const Graph k4 = gen_complete(4);
    const EdgeSet isolate = edges({{0, 1}, {0, 2}, {0, 3}});
    CHECK(multicut_to_equivalence(k4, isolate).classes() ==
          std::vector<std::vector<NodeId>>{{0}, {1, 2, 3}});

    CHECK_THROWS_AS(multicut_to_equivalence(gen_path(3), {}), std::invalid_argument);
    CHECK_THROWS_AS(multicut_to_equivalence(k3, edges({{0, 1}})), std::invalid_argument);

    // transitivity by triple scan, for every multicut of K4
    for (const EdgeSet& m : enumerate_multicuts(k4)) {
        const auto rel = multicut_to_equivalence(k4, m);
        for (NodeId a = 0; a < 4; ++a)
            for (NodeId b = 0; b < 4; ++b)
                for (NodeId c = 0; c < 4; ++c)
                    if (rel.related(a, b) && rel.related(b, c))
                        CHECK(rel.related(a, c));
    }
}
