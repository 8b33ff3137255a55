#include "lmc/facets.hpp"
#include "lmc/fixtures.hpp"

#include <doctest.h>

#include <set>

using namespace lmc;

TEST_CASE("cut context validation") {
    const LiftedPair pair = fixtures::fig3();
    CHECK_NOTHROW(VwCutContext(pair, Edge(1, 2), {Edge(0, 1)}));
    CHECK_THROWS_AS(VwCutContext(pair, Edge(0, 1), {Edge(0, 2)}), std::invalid_argument); // not lifted-only
    CHECK_THROWS_AS(VwCutContext(pair, Edge(1, 2), {Edge(0, 1), Edge(0, 2)}),
                    std::invalid_argument); // non-minimal: isolates node 0 entirely

    const LiftedPair p4 = make_lifted_pair(gen_path(4), {Edge(0, 3)});
    CHECK_THROWS_AS(VwCutContext(p4, Edge(0, 3), {Edge(0, 1), Edge(1, 2)}),
                    std::invalid_argument); // not minimal
    const VwCutContext ok(p4, Edge(0, 3), {Edge(1, 2)});
    CHECK(ok.v_side_nodes() == std::vector<NodeId>{0, 1});
    CHECK(ok.w_side_nodes() == std::vector<NodeId>{2, 3});
    CHECK(ok.crossing_lifted().empty());
}

TEST_CASE("component enumeration on a 2-edge path") {
    const LiftedPair pair = make_lifted_pair(gen_path(3), {Edge(0, 2)});
    const VwCutContext ctx(pair, Edge(0, 2), {Edge(0, 1)});
    const auto comps = enumerate_vwc_components(ctx);
    std::set<std::vector<NodeId>> proper, improper;
    for (const VwcComponent& c : comps)
        (c.proper ? proper : improper).insert(c.nodes);
    CHECK(proper == std::set<std::vector<NodeId>>{{0, 1, 2}});
    CHECK(improper == std::set<std::vector<NodeId>>{{0}, {1}, {2}, {1, 2}});
}

TEST_CASE("components carry induced edges and proper ones cross exactly once") {
    for (char letter : {'a', 'c', 'g', 'i'}) {
        const auto fx = fixtures::fig7(letter);
        const VwCutContext ctx(fx.pair, fx.f, fx.cut);
        for (const VwcComponent& comp : enumerate_vwc_components(ctx)) {
            std::size_t crossings = 0;
            for (const Edge& e : comp.edges)
                if (edge_set_contains(ctx.cut(), e))
                    ++crossings;
            if (comp.proper) {
                CHECK(crossings == 1);
            } else {
                const bool v_side = std::all_of(comp.nodes.begin(), comp.nodes.end(),
                                                [&](NodeId u) { return ctx.on_v_side(u); });
                const bool w_side = std::all_of(comp.nodes.begin(), comp.nodes.end(),
                                                [&](NodeId u) { return !ctx.on_v_side(u); });
                CHECK((v_side || w_side));
            }
        }
    }
}

TEST_CASE("upper box bound") {
    const LiftedPair fig3 = fixtures::fig3();
    // only lifted-only edge is f itself, so nothing else can disqualify it
    CHECK(check_box_upper(fig3, Edge(1, 2)).facet);
    // base edge joining two cut-vertices of f is disqualified
    const auto e1 = check_box_upper(fig3, Edge(0, 1));
    CHECK(!e1.facet);
    CHECK(e1.witness_lifted == Edge(1, 2));
    // no lifted-only edges at all: always facet
    for (const Edge& e : fixtures::k3().lifted().edges())
        CHECK(check_box_upper(fixtures::k3(), e).facet);
}

TEST_CASE("upper box bound agrees with the oracle on the figure pairs") {
    for (const LiftedPair& pair : {fixtures::fig3(), fixtures::fig4a(), fixtures::fig4b()})
        for (const Edge& e : pair.lifted().edges())
            CHECK(check_box_upper(pair, e).facet == is_facet(pair, box_inequality(pair, e, true)));
}

TEST_CASE("lower box bound") {
    const LiftedPair fig3 = fixtures::fig3();
    {
        const auto verdict = check_box_lower(fig3, Edge(0, 1));
        CHECK(verdict.base_edge);
        CHECK(verdict.verdict == FacetVerdict::not_facet);
        CHECK(verdict.triangle_witness == 2);
    }
    {
        // square base, no lifted-only edges: triangle-free, every bound is a facet
        const Graph c4 = gen_cycle(4);
        const LiftedPair square(c4, c4);
        for (const Edge& e : square.lifted().edges()) {
            CHECK(check_box_lower(square, e).verdict == FacetVerdict::facet);
            CHECK(is_facet(square, box_inequality(square, e, false)));
        }
    }
    {
        const auto verdict = check_box_lower(fig3, Edge(1, 2));
        CHECK(!verdict.base_edge);
        CHECK(!verdict.cond_a); // f sits in the triangle of the lifted graph
        CHECK(verdict.verdict == FacetVerdict::not_facet);
        CHECK(!is_facet(fig3, box_inequality(fig3, Edge(1, 2), false)));
    }
    {
        // hexagon with one long chord: all three conditions hold, so the
        // theorem alone cannot decide
        const LiftedPair pair = make_lifted_pair(gen_cycle(6), {Edge(0, 3)});
        const auto verdict = check_box_lower(pair, Edge(0, 3));
        CHECK(verdict.verdict == FacetVerdict::inconclusive);
        CHECK(verdict.cond_a);
        CHECK(verdict.cond_b);
        CHECK(verdict.cond_c);
    }
}

TEST_CASE("cycle and path facet predicates") {
    const LiftedPair fig3 = fixtures::fig3();
    Path p;
    p.nodes = {1, 0, 2};
    p.edges = {Edge(0, 1), Edge(0, 2)};
    CHECK(check_path_facet(fig3, Edge(1, 2), p));

    // K4: every 4-cycle has a chord, so its inequalities are not facets
    const LiftedPair k4(gen_complete(4), gen_complete(4));
    const EdgeSet square{Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(0, 3)};
    CHECK(!check_cycle_facet(k4, square));
    CHECK(!is_facet(k4, cycle_inequality(k4, square, Edge(0, 1))));

    // chordless square base, one diagonal: each two-edge path is a facet
    const LiftedPair diag = make_lifted_pair(gen_cycle(4), {Edge(0, 2)});
    for (const auto& [tag, ineq] : canonical_inequalities(diag))
        if (const auto* pt = std::get_if<PathTag>(&tag)) {
            CHECK(check_path_facet(diag, pt->lifted, pt->path));
            CHECK(is_facet(diag, ineq));
        }

    CHECK_THROWS_AS(check_cycle_path_facet(fig3, InequalityTag(BoxTag{Edge(0, 1), true})),
                    std::invalid_argument);
}

TEST_CASE("cut condition reports reproduce the counterexample catalogue") {
    for (const auto& fx : fixtures::fig7_all()) {
        CAPTURE(fx.name);
        const VwCutContext ctx(fx.pair, fx.f, fx.cut);
        const auto report = check_cut_conditions(ctx);
        switch (fx.violated_condition) {
        case 1:
            CHECK(!report.c1);
            REQUIRE(report.c1_witness.has_value());
            if (fx.c1_edge)
                CHECK(*report.c1_witness == *fx.c1_edge);
            break;
        case 2:
            CHECK(!report.c2);
            REQUIRE(report.c2_witness.has_value());
            if (fx.c2_subset)
                CHECK(*report.c2_witness == *fx.c2_subset);
            break;
        case 3:
            CHECK(!report.c3);
            REQUIRE(report.c3_witness.has_value());
            if (fx.c3_f_prime)
                CHECK(report.c3_witness->f_prime == *fx.c3_f_prime);
            if (fx.c3_subset)
                CHECK(report.c3_witness->subset == *fx.c3_subset);
            if (fx.c3_k)
                CHECK(report.c3_witness->k == *fx.c3_k);
            break;
        case 4: {
            CHECK(!report.c4);
            REQUIRE(report.c4_witness.has_value());
            if (fx.c4_path_nodes) {
                auto forward = report.c4_witness->path.nodes;
                auto backward = forward;
                std::reverse(backward.begin(), backward.end());
                CHECK((forward == *fx.c4_path_nodes || backward == *fx.c4_path_nodes));
            }
            break;
        }
        case 5:
            CHECK(!report.c5);
            REQUIRE(report.c5_witness.has_value());
            if (fx.c5_cycle)
                CHECK(*report.c5_witness == *fx.c5_cycle);
            break;
        }
    }
}

TEST_CASE("single-edge cut verdicts match the oracle") {
    {
        const LiftedPair fig3 = fixtures::fig3();
        const VwCutContext ctx(fig3, Edge(1, 2), {Edge(0, 1)});
        const auto verdict = check_single_edge_cut_facet(ctx);
        CHECK(verdict.facet);
        CHECK(is_facet(fig3, ctx.inequality()));
    }
    {
        // path base, lone lifted edge: both conditions hold vacuously
        const LiftedPair p4 = make_lifted_pair(gen_path(4), {Edge(0, 3)});
        const VwCutContext ctx(p4, Edge(0, 3), {Edge(1, 2)});
        const auto verdict = check_single_edge_cut_facet(ctx);
        CHECK(verdict.facet);
        CHECK(verdict.cond_a);
        CHECK(verdict.cond_b);
        CHECK(is_facet(p4, ctx.inequality()));
    }
    {
        // a second lifted edge joining the V0 sets breaks condition (a)
        const LiftedPair p4 = make_lifted_pair(gen_path(4), {Edge(0, 3), Edge(1, 3)});
        const VwCutContext ctx(p4, Edge(0, 3), {Edge(1, 2)});
        const auto verdict = check_single_edge_cut_facet(ctx);
        CHECK(!verdict.facet);
        CHECK(!verdict.cond_a);
        CHECK(verdict.a_witness == Edge(1, 3));
        CHECK(!is_facet(p4, ctx.inequality()));
    }
    {
        // the catalogue's condition-(b) example
        const auto fx = fixtures::fig7('f');
        const VwCutContext ctx(fx.pair, fx.f, fx.cut);
        const auto verdict = check_single_edge_cut_facet(ctx);
        CHECK(!verdict.facet);
        CHECK(verdict.cond_a);
        CHECK(!verdict.cond_b);
        CHECK(!is_facet(fx.pair, ctx.inequality()));
    }
    const LiftedPair fig3 = fixtures::fig3();
    CHECK_THROWS_AS(
        check_single_edge_cut_facet(VwCutContext(fixtures::fig7('a').pair, Edge(0, 2),
                                                 {Edge(1, 2), Edge(1, 3)})),
        std::invalid_argument);
}

TEST_CASE("one-elementary cut discovery") {
    CHECK(one_elementary_cuts(gen_path(4), 0, 3) ==
          std::vector<Edge>{Edge(0, 1), Edge(1, 2), Edge(2, 3)});
    CHECK(one_elementary_cuts(gen_cycle(4), 0, 2).empty());
}

TEST_CASE("V0 sets on the 2-edge path context") {
    const LiftedPair pair = make_lifted_pair(gen_path(3), {Edge(0, 2)});
    const VwCutContext ctx(pair, Edge(0, 2), {Edge(1, 2)});
    const auto v0 = compute_v0(ctx);
    CHECK(!v0.no_proper_component);
    CHECK(v0.v_side == std::vector<NodeId>{0, 1});
    CHECK(v0.w_side == std::vector<NodeId>{2});
}
