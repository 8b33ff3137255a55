#include "lmc/generators.hpp"

#include <random>

namespace lmc {

Graph gen_path(std::size_t n) {
    EdgeSet edges;
    for (std::size_t i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph gen_cycle(std::size_t n) {
    if (n < 3)
        throw std::invalid_argument("cycle needs at least 3 nodes");
    EdgeSet edges;
    for (std::size_t i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, std::move(edges));
}

Graph gen_grid(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("grid needs positive dimensions");
    EdgeSet edges;
    const auto id = [&](std::size_t r, std::size_t c) { return r * cols + c; };
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols)
                edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows)
                edges.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph(rows * cols, std::move(edges));
}

Graph gen_complete(std::size_t n) {
    EdgeSet edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

LiftedPair make_lifted_pair(Graph base, const EdgeSet& extra_lifted) {
    EdgeSet lifted_edges = base.edges();
    for (const Edge& e : extra_lifted)
        if (!base.has_edge(e))
            lifted_edges.push_back(e);
    const std::size_t n = base.node_count();
    return LiftedPair(std::move(base), Graph(n, std::move(lifted_edges)));
}

LiftedPair gen_random_pair(std::size_t n, double p, double lift, std::uint64_t seed) {
    if (n < 2)
        throw std::invalid_argument("random pair needs at least 2 nodes");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        EdgeSet base_edges;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (coin(rng) < p)
                    base_edges.emplace_back(u, v);
        Graph base(n, std::move(base_edges));
        if (!is_connected(base))
            continue;
        EdgeSet extra;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (!base.has_edge(u, v) && coin(rng) < lift)
                    extra.emplace_back(u, v);
        return make_lifted_pair(std::move(base), extra);
    }
    throw std::runtime_error("could not sample a connected base graph (n=" + std::to_string(n) +
                             ", p=" + std::to_string(p) + ")");
}

CostFunction gen_random_costs(const LiftedPair& pair, long long lo, long long hi, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> dist(lo, hi);
    std::vector<long long> costs(pair.lifted_edge_count());
    for (auto& c : costs)
        c = dist(rng);
    return CostFunction{std::move(costs)};
}

} // namespace lmc
