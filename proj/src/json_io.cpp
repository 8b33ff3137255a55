#include "lmc/json_io.hpp"

#include <fstream>
#include <sstream>

namespace lmc {

namespace {

EdgeSet edges_from_json(const Json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_array())
        throw ParseError("missing edge array '" + key + "'");
    EdgeSet edges;
    for (const Json& item : j[key]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_unsigned() || !item[1].is_number_unsigned())
            throw ParseError("edge entries in '" + key + "' must be [u,v] pairs of nonnegative integers");
        const NodeId u = item[0].get<NodeId>();
        const NodeId v = item[1].get<NodeId>();
        if (u == v)
            throw ParseError("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ") in '" + key + "'");
        edges.emplace_back(u, v);
    }
    EdgeSet sorted = sorted_edge_set(edges);
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i - 1] == sorted[i])
            throw ParseError("duplicate edge " + sorted[i].str() + " in '" + key + "'");
    return edges;
}

std::size_t nodes_from_json(const Json& j) {
    if (!j.contains("nodes") || !j["nodes"].is_number_unsigned())
        throw ParseError("missing node count 'nodes'");
    return j["nodes"].get<std::size_t>();
}

Json edges_to_json(const EdgeSet& edges) {
    Json arr = Json::array();
    for (const Edge& e : edges)
        arr.push_back(Json::array({e.u, e.v}));
    return arr;
}

Edge edge_from_key(const std::string& key) {
    const auto comma = key.find(',');
    if (comma == std::string::npos)
        throw ParseError("edge key '" + key + "' must be 'u,v'");
    try {
        const auto u = std::stoull(key.substr(0, comma));
        const auto v = std::stoull(key.substr(comma + 1));
        if (u == v)
            throw ParseError("loop edge key '" + key + "'");
        return Edge(u, v);
    } catch (const std::logic_error&) {
        throw ParseError("edge key '" + key + "' must be 'u,v'");
    }
}

std::string edge_key(const Edge& e) {
    return std::to_string(e.u) + "," + std::to_string(e.v);
}

} // namespace

Graph graph_from_json(const Json& j) {
    try {
        return Graph(nodes_from_json(j), edges_from_json(j, "edges"));
    } catch (const std::invalid_argument& err) {
        throw ParseError(err.what());
    }
}

Json graph_to_json(const Graph& g) {
    Json j;
    j["nodes"] = g.node_count();
    j["edges"] = edges_to_json(g.edges());
    return j;
}

LiftedPair pair_from_json(const Json& j) {
    const std::size_t n = nodes_from_json(j);
    try {
        Graph base(n, edges_from_json(j, "base_edges"));
        Graph lifted(n, edges_from_json(j, "lifted_edges"));
        return LiftedPair(std::move(base), std::move(lifted));
    } catch (const std::invalid_argument& err) {
        throw ParseError(err.what());
    }
}

Json pair_to_json(const LiftedPair& pair) {
    Json j;
    j["nodes"] = pair.node_count();
    j["base_edges"] = edges_to_json(pair.base().edges());
    j["lifted_edges"] = edges_to_json(pair.lifted().edges());
    return j;
}

Instance instance_from_json(const Json& j) {
    LiftedPair pair = pair_from_json(j);
    if (!j.contains("costs") || !j["costs"].is_object())
        throw ParseError("missing cost map 'costs'");
    std::vector<long long> costs(pair.lifted_edge_count(), 0);
    std::vector<std::uint8_t> seen(pair.lifted_edge_count(), 0);
    for (const auto& [key, value] : j["costs"].items()) {
        const Edge e = edge_from_key(key);
        if (!value.is_number_integer())
            throw ParseError("cost of edge " + e.str() + " must be an integer");
        if (!pair.lifted().has_edge(e))
            throw ParseError("cost given for edge " + e.str() + " which is not a lifted edge");
        const std::size_t idx = pair.index_of(e);
        if (seen[idx])
            throw ParseError("duplicate cost for edge " + e.str());
        seen[idx] = 1;
        costs[idx] = value.get<long long>();
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i])
            throw ParseError("missing cost for edge " + pair.lifted().edges()[i].str());
    return Instance{std::move(pair), CostFunction{std::move(costs)}};
}

Json instance_to_json(const Instance& inst) {
    Json j = pair_to_json(inst.pair);
    Json costs = Json::object();
    for (std::size_t i = 0; i < inst.pair.lifted_edge_count(); ++i)
        costs[edge_key(inst.pair.lifted().edges()[i])] = inst.costs.costs[i];
    j["costs"] = costs;
    return j;
}

Json decomposition_to_json(const Decomposition& pi) {
    Json blocks = Json::array();
    for (const auto& block : pi.blocks)
        blocks.push_back(block);
    Json j;
    j["blocks"] = blocks;
    return j;
}

LinearInequality inequality_from_json(const LiftedPair& pair, const Json& j) {
    if (!j.contains("coeffs") || !j["coeffs"].is_object())
        throw ParseError("missing coefficient map 'coeffs'");
    std::vector<std::pair<std::size_t, Rational>> terms;
    for (const auto& [key, value] : j["coeffs"].items()) {
        const Edge e = edge_from_key(key);
        if (!pair.lifted().has_edge(e))
            throw ParseError("coefficient for edge " + e.str() + " which is not a lifted edge");
        Rational coeff;
        if (value.is_number_integer())
            coeff = Rational(value.get<long long>());
        else if (value.is_string())
            coeff = rational_from_string(value.get<std::string>());
        else
            throw ParseError("coefficient of " + e.str() + " must be an integer or 'p/q' string");
        terms.emplace_back(pair.index_of(e), coeff);
    }
    Rational rhs;
    if (!j.contains("rhs"))
        throw ParseError("missing right-hand side 'rhs'");
    if (j["rhs"].is_number_integer())
        rhs = Rational(j["rhs"].get<long long>());
    else if (j["rhs"].is_string())
        rhs = rational_from_string(j["rhs"].get<std::string>());
    else
        throw ParseError("'rhs' must be an integer or 'p/q' string");
    return LinearInequality(std::move(terms), std::move(rhs));
}

Json inequality_to_json(const LiftedPair& pair, const LinearInequality& ineq,
                        const std::optional<InequalityTag>& tag) {
    Json coeffs = Json::object();
    for (const auto& [idx, coeff] : ineq.terms)
        coeffs[edge_key(pair.lifted().edges()[idx])] = rational_to_string(coeff);
    Json j;
    j["coeffs"] = coeffs;
    j["rhs"] = rational_to_string(ineq.rhs);
    if (tag)
        j["tag"] = tag_to_string(*tag);
    return j;
}

namespace {

Edge parse_edge_token(const std::string& token) {
    const auto dash = token.find('-');
    if (dash == std::string::npos)
        throw ParseError("edge token '" + token + "' must be 'u-v'");
    try {
        return Edge(std::stoull(token.substr(0, dash)), std::stoull(token.substr(dash + 1)));
    } catch (const std::logic_error&) {
        throw ParseError("edge token '" + token + "' must be 'u-v'");
    }
}

EdgeSet parse_edge_list(const std::string& list) {
    EdgeSet out;
    std::stringstream ss(list);
    std::string token;
    while (std::getline(ss, token, ','))
        out.push_back(parse_edge_token(token));
    return sorted_edge_set(std::move(out));
}

Path parse_node_path(const Graph& g, const std::string& list) {
    Path p;
    std::stringstream ss(list);
    std::string token;
    while (std::getline(ss, token, '-'))
        p.nodes.push_back(std::stoull(token));
    if (p.nodes.size() < 2)
        throw ParseError("path '" + list + "' needs at least two nodes");
    for (std::size_t i = 0; i + 1 < p.nodes.size(); ++i) {
        if (!g.has_edge(p.nodes[i], p.nodes[i + 1]))
            throw ParseError("path step " + std::to_string(p.nodes[i]) + "-" +
                             std::to_string(p.nodes[i + 1]) + " is not a base edge");
        p.edges.emplace_back(p.nodes[i], p.nodes[i + 1]);
    }
    return p;
}

} // namespace

InequalityTag tag_from_string(const LiftedPair& pair, const std::string& s) {
    const auto open = s.find('(');
    const auto close = s.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw ParseError("malformed tag '" + s + "'");
    const std::string family = s.substr(0, open);
    const std::string body = s.substr(open + 1, close - open - 1);
    if (family == "box_upper" || family == "box_lower")
        return BoxTag{parse_edge_token(body), family == "box_upper"};
    std::map<std::string, std::string> fields;
    std::stringstream ss(body);
    std::string part;
    while (std::getline(ss, part, ';')) {
        const auto eq = part.find('=');
        if (eq == std::string::npos)
            throw ParseError("malformed tag field '" + part + "'");
        fields[part.substr(0, eq)] = part.substr(eq + 1);
    }
    if (family == "cycle") {
        if (!fields.count("e") || !fields.count("C"))
            throw ParseError("cycle tag needs fields e and C");
        return CycleTag{parse_edge_list(fields["C"]), parse_edge_token(fields["e"])};
    }
    if (family == "path") {
        if (!fields.count("f") || !fields.count("P"))
            throw ParseError("path tag needs fields f and P");
        return PathTag{parse_edge_token(fields["f"]), parse_node_path(pair.base(), fields["P"])};
    }
    if (family == "cut") {
        if (!fields.count("f") || !fields.count("C"))
            throw ParseError("cut tag needs fields f and C");
        return CutTag{parse_edge_token(fields["f"]), parse_edge_list(fields["C"])};
    }
    throw ParseError("unknown tag family '" + family + "'");
}

Json solution_to_json(const Solution& s) {
    Json j;
    j["labeling"] = labeling_to_string(s.labeling);
    j["objective"] = s.objective;
    j["certificate"] = s.certificate == Certificate::optimal ? "optimal" : "heuristic";
    j["stats"] = Json{{"nodes_explored", s.nodes_explored}, {"wall_ms", s.wall_ms}};
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& err) {
        throw ParseError("invalid JSON in '" + path + "': " + err.what());
    }
}

} // namespace lmc
