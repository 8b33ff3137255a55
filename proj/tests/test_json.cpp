#include "lmc/fixtures.hpp"
#include "lmc/json_io.hpp"

#include <doctest.h>

using namespace lmc;

TEST_CASE("graph json round trip and validation") {
    const Json j = Json::parse(R"({"nodes": 3, "edges": [[1,0],[0,2]]})");
    const Graph g = graph_from_json(j); // reversed order is normalized
    CHECK(g.edges() == EdgeSet{Edge(0, 1), Edge(0, 2)});
    CHECK(graph_from_json(graph_to_json(g)) == g);

    CHECK_THROWS_WITH_AS(graph_from_json(Json::parse(R"({"nodes":3,"edges":[[0,1],[1,0]]})")),
                         doctest::Contains("duplicate edge 0-1"), ParseError);
    CHECK_THROWS_WITH_AS(graph_from_json(Json::parse(R"({"nodes":3,"edges":[[2,2]]})")),
                         doctest::Contains("loop"), ParseError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"edges":[]})")), ParseError);
}

TEST_CASE("pair json round trip and validation") {
    const LiftedPair pair = fixtures::fig3();
    CHECK(pair_from_json(pair_to_json(pair)) == pair);
    // base edge missing from lifted set
    CHECK_THROWS_WITH_AS(
        pair_from_json(Json::parse(
            R"({"nodes":3,"base_edges":[[0,1],[0,2]],"lifted_edges":[[0,1],[1,2]]})")),
        doctest::Contains("0-2"), ParseError);
    // disconnected base
    CHECK_THROWS_AS(pair_from_json(Json::parse(
                        R"({"nodes":3,"base_edges":[[0,1]],"lifted_edges":[[0,1],[1,2]]})")),
                    ParseError);
}

TEST_CASE("instance json validates the cost map") {
    const auto inst = fixtures::fig6_lifted();
    const Json j = instance_to_json(inst);
    const Instance back = instance_from_json(j);
    CHECK(back.pair == inst.pair);
    CHECK(back.costs.costs == inst.costs.costs);

    Json missing = j;
    missing["costs"].erase("1,2");
    CHECK_THROWS_WITH_AS(instance_from_json(missing), doctest::Contains("missing cost"), ParseError);

    Json stray = j;
    stray["costs"]["0,9"] = 1;
    CHECK_THROWS_AS(instance_from_json(stray), ParseError);
}

TEST_CASE("inequality json round trip with rational coefficients") {
    const LiftedPair pair = fixtures::fig3();
    const LinearInequality ineq({{0, Rational(1, 2)}, {2, Rational(-3)}}, Rational(5, 4));
    const Json j = inequality_to_json(pair, ineq);
    const LinearInequality back = inequality_from_json(pair, j);
    CHECK(back.terms == ineq.terms);
    CHECK(back.rhs == ineq.rhs);
    // integer coefficients are also accepted
    const Json j2 = Json::parse(R"({"coeffs": {"1,2": 1, "0,1": -1}, "rhs": 0})");
    const LinearInequality mixed = inequality_from_json(pair, j2);
    CHECK(mixed.terms.size() == 2);
    CHECK_THROWS_AS(inequality_from_json(pair, Json::parse(R"({"coeffs":{"0,3":1},"rhs":0})")),
                    ParseError);
}

TEST_CASE("tag strings round trip") {
    const LiftedPair pair = fixtures::fig3();
    Path p;
    p.nodes = {1, 0, 2};
    p.edges = {Edge(0, 1), Edge(0, 2)};
    const std::vector<InequalityTag> tags{
        CycleTag{{Edge(0, 1), Edge(0, 2), Edge(1, 2)}, Edge(0, 1)},
        PathTag{Edge(1, 2), p},
        CutTag{Edge(1, 2), {Edge(0, 1)}},
        BoxTag{Edge(0, 2), true},
        BoxTag{Edge(0, 2), false},
    };
    for (const InequalityTag& tag : tags) {
        const InequalityTag back = tag_from_string(pair, tag_to_string(tag));
        CHECK(tag_to_string(back) == tag_to_string(tag));
    }
    CHECK_THROWS_AS(tag_from_string(pair, "nonsense"), ParseError);
    CHECK_THROWS_AS(tag_from_string(pair, "path(f=1-2;P=1-2-0)"), ParseError); // 1-2 not a base edge
}

TEST_CASE("solution payload shape") {
    Solution s;
    s.labeling = labeling_from_string("000");
    s.objective = 0;
    s.certificate = Certificate::optimal;
    s.nodes_explored = 4;
    const Json j = solution_to_json(s);
    CHECK(j["labeling"] == "000");
    CHECK(j["objective"] == 0);
    CHECK(j["certificate"] == "optimal");
    CHECK(j["stats"]["nodes_explored"] == 4);
}
