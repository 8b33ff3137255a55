#include "lmc/solver.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <limits>
#include <numeric>

namespace lmc {

long long CostFunction::objective(const Labeling& x) const {
    if (x.size() != costs.size())
        throw std::invalid_argument("labeling length does not match the cost vector");
    long long total = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i])
            total += costs[i];
    return total;
}

CostFunction make_costs(const LiftedPair& pair, const std::vector<long long>& by_index) {
    if (by_index.size() != pair.lifted_edge_count())
        throw std::invalid_argument("cost function must be total on the lifted edge set");
    return CostFunction{by_index};
}

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

bool better(long long obj, const Labeling& lab, const Solution& incumbent, bool has_incumbent) {
    if (!has_incumbent)
        return true;
    if (obj != incumbent.objective)
        return obj < incumbent.objective;
    return lab < incumbent.labeling;
}

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), NodeId(0));
    }
    NodeId find(NodeId a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
    void merge(NodeId a, NodeId b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        if (a > b)
            std::swap(a, b); // keep the smallest node as representative
        parent[b] = a;
    }
    bool connected(NodeId a, NodeId b) { return find(a) == find(b); }
    std::vector<NodeId> parent;
};

} // namespace

Solution solve_exact(const LiftedPair& pair, const CostFunction& c, const SolveOptions& opts) {
    if (!opts.force && pair.node_count() > opts.max_nodes)
        throw InstanceTooLargeError(pair.node_count(), opts.max_nodes);
    if (c.costs.size() != pair.lifted_edge_count())
        throw std::invalid_argument("cost function must be total on the lifted edge set");
    const auto start = std::chrono::steady_clock::now();
    Solution best;
    bool found = false;
    std::uint64_t explored = 0;
    for_each_lifted_multicut(pair, [&](const Labeling& x) {
        ++explored;
        const long long obj = c.objective(x);
        if (better(obj, x, best, found)) {
            best.labeling = x;
            best.objective = obj;
            found = true;
        }
        return true;
    });
    best.certificate = Certificate::optimal;
    best.nodes_explored = explored;
    best.wall_ms = elapsed_ms(start);
    return best;
}

namespace {

class BranchAndBound {
public:
    BranchAndBound(const LiftedPair& pair, const CostFunction& c)
        : pair_(pair), c_(c), base_edges_(pair.base().edges()),
          assign_(base_edges_.size(), -1) {}

    Solution run() {
        const auto start = std::chrono::steady_clock::now();
        recurse(0);
        best_.certificate = Certificate::optimal;
        best_.nodes_explored = explored_;
        best_.wall_ms = elapsed_ms(start);
        return best_;
    }

private:
    // Union of 0-assigned base edges; rejects assignments where a 1-edge
    // ends up inside a component.
    std::optional<UnionFind> build_state() const {
        UnionFind uf(pair_.node_count());
        for (std::size_t i = 0; i < base_edges_.size(); ++i)
            if (assign_[i] == 0)
                uf.merge(base_edges_[i].u, base_edges_[i].v);
        for (std::size_t i = 0; i < base_edges_.size(); ++i)
            if (assign_[i] == 1 && uf.connected(base_edges_[i].u, base_edges_[i].v))
                return std::nullopt;
        return uf;
    }

    void recurse(std::size_t depth) {
        ++explored_;
        auto state = build_state();
        if (!state)
            return;
        long long fixed = 0;
        for (std::size_t i = 0; i < base_edges_.size(); ++i)
            if (assign_[i] == 1)
                fixed += c_.costs[pair_.index_of(base_edges_[i])];
        long long bound = fixed;
        for (std::size_t i = depth; i < base_edges_.size(); ++i)
            bound += std::min(0LL, c_.costs[pair_.index_of(base_edges_[i])]);
        for (const Edge& f : pair_.lifted_only())
            if (!state->connected(f.u, f.v))
                bound += std::min(0LL, c_.costs[pair_.index_of(f)]);
        if (found_ && bound > best_.objective)
            return;
        if (depth == base_edges_.size()) {
            Labeling x(pair_.lifted_edge_count(), 0);
            for (const Edge& e : pair_.lifted().edges())
                x[pair_.index_of(e)] = !state->connected(e.u, e.v);
            const long long obj = c_.objective(x);
            if (better(obj, x, best_, found_)) {
                best_.labeling = x;
                best_.objective = obj;
                found_ = true;
            }
            return;
        }
        assign_[depth] = 0;
        recurse(depth + 1);
        assign_[depth] = 1;
        recurse(depth + 1);
        assign_[depth] = -1;
    }

    const LiftedPair& pair_;
    const CostFunction& c_;
    const EdgeSet& base_edges_;
    std::vector<int> assign_;
    Solution best_;
    bool found_ = false;
    std::uint64_t explored_ = 0;
};

} // namespace

Solution solve_branch_and_bound(const LiftedPair& pair, const CostFunction& c) {
    if (c.costs.size() != pair.lifted_edge_count())
        throw std::invalid_argument("cost function must be total on the lifted edge set");
    return BranchAndBound(pair, c).run();
}

Solution solve_greedy(const LiftedPair& pair, const CostFunction& c) {
    if (c.costs.size() != pair.lifted_edge_count())
        throw std::invalid_argument("cost function must be total on the lifted edge set");
    const auto start = std::chrono::steady_clock::now();
    UnionFind uf(pair.node_count());
    const auto current_labeling = [&] {
        Labeling x(pair.lifted_edge_count(), 0);
        for (const Edge& e : pair.lifted().edges())
            x[pair.index_of(e)] = !uf.connected(e.u, e.v);
        return x;
    };
    Labeling best = current_labeling();
    long long best_objective = c.objective(best);
    std::uint64_t merges = 0;
    // Agglomerate all the way down, always joining the adjacent pair with
    // the largest separation cost, and keep the best decomposition seen.
    // A merge through a cost barrier can still pay off later.
    for (;;) {
        std::map<std::pair<NodeId, NodeId>, long long> gain;
        std::map<std::pair<NodeId, NodeId>, bool> adjacent;
        for (const Edge& e : pair.lifted().edges()) {
            const NodeId a = uf.find(e.u);
            const NodeId b = uf.find(e.v);
            if (a == b)
                continue;
            const std::pair<NodeId, NodeId> key = a < b ? std::pair{a, b} : std::pair{b, a};
            gain[key] += c.costs[pair.index_of(e)];
            if (pair.is_base_edge(e))
                adjacent[key] = true;
        }
        std::optional<std::pair<NodeId, NodeId>> pick;
        long long pick_gain = 0;
        for (const auto& [key, value] : gain) {
            if (!adjacent[key])
                continue;
            if (!pick || value > pick_gain) {
                pick = key;
                pick_gain = value;
            }
        }
        if (!pick)
            break;
        uf.merge(pick->first, pick->second);
        ++merges;
        const Labeling x = current_labeling();
        const long long objective = c.objective(x);
        if (objective < best_objective || (objective == best_objective && x < best)) {
            best = x;
            best_objective = objective;
        }
    }
    Solution out;
    out.labeling = std::move(best);
    out.objective = best_objective;
    out.certificate = Certificate::heuristic;
    out.nodes_explored = merges;
    out.wall_ms = elapsed_ms(start);
    return out;
}

namespace {

struct RationalPath {
    Rational weight;
    std::vector<NodeId> nodes;
};

// Dijkstra with exact weights; linear-scan extraction is fine at this scale.
std::optional<RationalPath> shortest_path(const Graph& g, NodeId s, NodeId t,
                                          const std::function<Rational(const Edge&)>& weight,
                                          const std::optional<Edge>& skip = std::nullopt) {
    const std::size_t n = g.node_count();
    std::vector<std::optional<Rational>> dist(n);
    std::vector<NodeId> parent(n, n);
    std::vector<std::uint8_t> done(n, 0);
    dist[s] = Rational(0);
    for (;;) {
        std::size_t u = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && dist[i] && (u == n || *dist[i] < *dist[u]))
                u = i;
        if (u == n)
            break;
        done[u] = 1;
        if (u == t)
            break;
        for (NodeId x : g.neighbors(u)) {
            const Edge e(u, x);
            if (skip && e == *skip)
                continue;
            const Rational cand = *dist[u] + weight(e);
            if (!dist[x] || cand < *dist[x]) {
                dist[x] = cand;
                parent[x] = u;
            }
        }
    }
    if (!dist[t] || !done[t])
        return std::nullopt;
    RationalPath out;
    out.weight = *dist[t];
    for (NodeId u = t; u != s; u = parent[u])
        out.nodes.push_back(u);
    out.nodes.push_back(s);
    std::reverse(out.nodes.begin(), out.nodes.end());
    return out;
}

std::vector<std::size_t> labels_without(const Graph& g, const EdgeSet& removed) {
    return component_labels(g, removed);
}

EdgeSet boundary(const Graph& g, const std::vector<std::uint8_t>& inside) {
    EdgeSet out;
    for (const Edge& e : g.edges())
        if (inside[e.u] != inside[e.v])
            out.push_back(e);
    return out;
}

std::vector<std::uint8_t> component_of(const Graph& g, NodeId s, const EdgeSet& removed) {
    const auto label = labels_without(g, sorted_edge_set(removed));
    std::vector<std::uint8_t> inside(g.node_count(), 0);
    for (NodeId u = 0; u < g.node_count(); ++u)
        inside[u] = label[u] == label[s];
    return inside;
}

// Exact max-flow min-cut with rational capacities, then trimmed to an
// inclusion-minimal vw-cut of no larger weight.
EdgeSet min_weight_cut(const Graph& g, NodeId v, NodeId w,
                       const std::function<Rational(const Edge&)>& capacity) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<Rational>> cap(n, std::vector<Rational>(n, Rational(0)));
    for (const Edge& e : g.edges()) {
        cap[e.u][e.v] += capacity(e);
        cap[e.v][e.u] += capacity(e);
    }
    for (;;) {
        std::vector<NodeId> parent(n, n);
        std::deque<NodeId> queue{v};
        parent[v] = v;
        while (!queue.empty() && parent[w] == n) {
            const NodeId u = queue.front();
            queue.pop_front();
            for (NodeId t = 0; t < n; ++t)
                if (parent[t] == n && cap[u][t] > 0) {
                    parent[t] = u;
                    queue.push_back(t);
                }
        }
        if (parent[w] == n)
            break;
        Rational push = cap[parent[w]][w];
        for (NodeId u = w; u != v; u = parent[u])
            push = std::min(push, cap[parent[u]][u]);
        for (NodeId u = w; u != v; u = parent[u]) {
            cap[parent[u]][u] -= push;
            cap[u][parent[u]] += push;
        }
    }
    std::vector<std::uint8_t> source_side(n, 0);
    {
        std::deque<NodeId> queue{v};
        source_side[v] = 1;
        while (!queue.empty()) {
            const NodeId u = queue.front();
            queue.pop_front();
            for (NodeId t = 0; t < n; ++t)
                if (!source_side[t] && cap[u][t] > 0) {
                    source_side[t] = 1;
                    queue.push_back(t);
                }
        }
    }
    EdgeSet cut = boundary(g, source_side);
    // Three trims reach an inclusion-minimal cut of no larger weight.
    cut = boundary(g, component_of(g, v, cut));
    cut = boundary(g, component_of(g, w, cut));
    cut = boundary(g, component_of(g, v, cut));
    return sorted_edge_set(cut);
}

} // namespace

std::vector<TaggedInequality> separate(const LiftedPair& pair, const FractionalPoint& x) {
    if (x.values.size() != pair.lifted_edge_count())
        throw std::invalid_argument("point length does not match the lifted edge count");
    for (const Rational& value : x.values)
        if (value < 0 || value > 1)
            throw std::invalid_argument("point outside the unit box");
    const auto value_of = [&](const Edge& e) { return x.values[pair.index_of(e)]; };

    struct Candidate {
        Rational violation;
        TaggedInequality ineq;
    };
    std::vector<Candidate> picks;

    // cycle family: per base edge, cheapest completion to a cycle
    {
        std::optional<Candidate> best;
        for (const Edge& e : pair.base().edges()) {
            const auto completion = shortest_path(pair.base(), e.u, e.v, value_of, e);
            if (!completion)
                continue;
            const Rational violation = value_of(e) - completion->weight;
            if (violation <= 0 || (best && violation <= best->violation))
                continue;
            EdgeSet cycle;
            for (std::size_t i = 0; i + 1 < completion->nodes.size(); ++i)
                cycle.emplace_back(completion->nodes[i], completion->nodes[i + 1]);
            cycle.push_back(e);
            cycle = sorted_edge_set(std::move(cycle));
            best = Candidate{violation, {CycleTag{cycle, e}, cycle_inequality(pair, cycle, e)}};
        }
        if (best)
            picks.push_back(std::move(*best));
    }

    // path family: per lifted-only edge, cheapest base path
    {
        std::optional<Candidate> best;
        for (const Edge& f : pair.lifted_only()) {
            const auto sp = shortest_path(pair.base(), f.u, f.v, value_of);
            if (!sp)
                continue;
            const Rational violation = value_of(f) - sp->weight;
            if (violation <= 0 || (best && violation <= best->violation))
                continue;
            Path p;
            p.nodes = sp->nodes;
            for (std::size_t i = 0; i + 1 < sp->nodes.size(); ++i)
                p.edges.emplace_back(sp->nodes[i], sp->nodes[i + 1]);
            best = Candidate{violation, {PathTag{f, p}, path_inequality(pair, f, p)}};
        }
        if (best)
            picks.push_back(std::move(*best));
    }

    // cut family: per lifted-only edge, cheapest cut under 1 - x weights
    {
        std::optional<Candidate> best;
        for (const Edge& f : pair.lifted_only()) {
            const auto weight = [&](const Edge& e) { return Rational(1) - value_of(e); };
            const EdgeSet cut = min_weight_cut(pair.base(), f.u, f.v, weight);
            Rational total = 0;
            for (const Edge& e : cut)
                total += weight(e);
            const Rational violation = (Rational(1) - value_of(f)) - total;
            if (violation <= 0 || (best && violation <= best->violation))
                continue;
            best = Candidate{violation, {CutTag{f, cut}, cut_inequality(pair, f, cut)}};
        }
        if (best)
            picks.push_back(std::move(*best));
    }

    std::stable_sort(picks.begin(), picks.end(),
                     [](const Candidate& a, const Candidate& b) { return a.violation > b.violation; });
    std::vector<TaggedInequality> out;
    out.reserve(picks.size());
    for (Candidate& cand : picks)
        out.push_back(std::move(cand.ineq));
    return out;
}

} // namespace lmc
