#pragma once

#include "lmc/polytope.hpp"

namespace lmc {

/// Connected induced subgraph of the base graph classified against a cut
/// context: proper components contain both context endpoints and cross the
/// cut in exactly one edge; improper ones sit entirely on one side.
struct VwcComponent {
    std::vector<NodeId> nodes; // sorted
    EdgeSet edges;             // induced base edges
    bool proper;
};

/// A lifted-only edge f = vw together with a minimal vw-cut C of the base
/// graph, plus everything the cut theorems quantify over: the two sides,
/// the crossing lifted-only edges and the crossing graph (V, F(vw,C) u C).
/// The referenced pair must outlive the context.
class VwCutContext {
public:
    VwCutContext(const LiftedPair& pair, const Edge& f, EdgeSet cut);

    const LiftedPair& pair() const { return *pair_; }
    const Edge& f() const { return f_; }
    NodeId v() const { return v_; }
    NodeId w() const { return w_; }
    const EdgeSet& cut() const { return cut_; }
    bool on_v_side(NodeId u) const { return v_side_[u]; }
    std::vector<NodeId> v_side_nodes() const;
    std::vector<NodeId> w_side_nodes() const;
    /// F(vw,C): lifted-only edges other than vw crossing the cut.
    const EdgeSet& crossing_lifted() const { return f_cross_; }
    const Graph& crossing_graph() const { return crossing_; }

    LinearInequality inequality() const; // the cut inequality of this context

private:
    const LiftedPair* pair_;
    Edge f_;
    EdgeSet cut_;
    NodeId v_, w_;
    std::vector<std::uint8_t> v_side_;
    EdgeSet f_cross_;
    Graph crossing_;
};

/// All (vw,C)-connected components, maximal or not, each exactly once in
/// ascending order of node-set bitmask. Exponential in the node count.
std::vector<VwcComponent> enumerate_vwc_components(const VwCutContext& ctx);

/// Nodes per side contained in every properly connected component. If no
/// proper component exists the sets fall back to the full sides and the
/// flag is set.
struct V0Sets {
    std::vector<NodeId> v_side;
    std::vector<NodeId> w_side;
    bool no_proper_component = false;
};
V0Sets compute_v0(const VwCutContext& ctx);
V0Sets compute_v0(const VwCutContext& ctx, const std::vector<VwcComponent>& components);

// -- box facets ---------------------------------------------------------

/// Upper box bound x_e <= 1: facet iff no other lifted-only edge vw exists
/// such that e joins two v-w-cut-vertices.
struct BoxUpperVerdict {
    bool facet;
    std::optional<Edge> witness_lifted; // the vw whose cut-vertices e joins
};
BoxUpperVerdict check_box_upper(const LiftedPair& pair, const Edge& e);

enum class FacetVerdict { facet, not_facet, inconclusive };

/// Lower box bound 0 <= x_e. For base edges the triangle test is exact; for
/// lifted-only edges the three conditions are necessary only, so the verdict
/// is three-valued.
struct BoxLowerVerdict {
    FacetVerdict verdict;
    bool base_edge;
    bool cond_a = true, cond_b = true, cond_c = true;
    std::optional<NodeId> triangle_witness;                  // (a) or base case
    std::optional<std::pair<NodeId, NodeId>> distance_witness; // (b)
    struct SeparatorTriangle {
        NodeId s, s_other, t;
    };
    std::optional<SeparatorTriangle> separator_witness;      // (c)
};
BoxLowerVerdict check_box_lower(const LiftedPair& pair, const Edge& e);

// -- cycle and path facets ------------------------------------------------

/// Cycle inequality for a base cycle: facet iff the cycle is chordless in
/// the lifted graph.
bool check_cycle_facet(const LiftedPair& pair, const EdgeSet& cycle);

/// Path inequality for a lifted-only edge f and base vw-path P: facet iff
/// P u {f} is chordless in the lifted graph.
bool check_path_facet(const LiftedPair& pair, const Edge& f, const Path& p);

/// Dispatcher over cycle/path tags; rejects other tag kinds.
bool check_cycle_path_facet(const LiftedPair& pair, const InequalityTag& tag);

// -- cut facets -----------------------------------------------------------

/// The five necessary conditions for a cut inequality to be facet-defining,
/// evaluated literally over the enumerated components, with a witness for
/// every failure.
struct CutConditionReport {
    bool c1 = true, c2 = true, c3 = true, c4 = true, c5 = true;

    std::optional<Edge> c1_witness; // cut edge covered by no component
    std::optional<EdgeSet> c2_witness; // subset F of crossing edges
    struct C3Witness {
        Edge f_prime;
        EdgeSet subset;
        std::size_t k;
    };
    std::optional<C3Witness> c3_witness;
    struct C4Witness {
        NodeId v_prime, w_prime;
        Path path;
    };
    std::optional<C4Witness> c4_witness;
    std::optional<EdgeSet> c5_witness; // cycle in the crossing graph

    bool all_hold() const { return c1 && c2 && c3 && c4 && c5; }
    std::vector<std::string> violated() const;
};
CutConditionReport check_cut_conditions(const VwCutContext& ctx);

/// Exact facet test for 1-elementary cuts via the two V0 conditions.
struct SingleEdgeCutVerdict {
    bool facet;
    bool cond_a = true, cond_b = true;
    std::optional<Edge> a_witness;                   // f' joining the V0 sets
    std::optional<std::pair<Edge, Edge>> b_witness;  // forbidden pair
    V0Sets v0;
};
SingleEdgeCutVerdict check_single_edge_cut_facet(const VwCutContext& ctx);

/// All single base edges that are by themselves minimal vw-cuts.
std::vector<Edge> one_elementary_cuts(const Graph& g, NodeId v, NodeId w);

} // namespace lmc
