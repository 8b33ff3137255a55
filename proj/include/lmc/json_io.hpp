#pragma once

#include "lmc/facets.hpp"
#include "lmc/solver.hpp"

#include <json.hpp>

namespace lmc {

using Json = nlohmann::json;

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Graph:      {"nodes": n, "edges": [[u,v],...]}
// LiftedPair: {"nodes": n, "base_edges": [[u,v],...], "lifted_edges": [[u,v],...]}
// Instance:   pair fields plus "costs": {"u,v": int, ...}, total on E'.
// Inequality: {"coeffs": {"u,v": "p/q", ...}, "rhs": "p/q", "tag": "..."};
//             omitted coefficients are zero.

Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);

LiftedPair pair_from_json(const Json& j);
Json pair_to_json(const LiftedPair& pair);

struct Instance {
    LiftedPair pair;
    CostFunction costs;
};
Instance instance_from_json(const Json& j);
Json instance_to_json(const Instance& inst);

Json decomposition_to_json(const Decomposition& pi);

LinearInequality inequality_from_json(const LiftedPair& pair, const Json& j);
Json inequality_to_json(const LiftedPair& pair, const LinearInequality& ineq,
                        const std::optional<InequalityTag>& tag = std::nullopt);

/// Parses the tag strings produced by tag_to_string back into structured
/// tags, resolving edges against the pair.
InequalityTag tag_from_string(const LiftedPair& pair, const std::string& s);

Json solution_to_json(const Solution& s);

Json load_json_file(const std::string& path);

} // namespace lmc
