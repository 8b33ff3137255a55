#pragma once

#include "lmc/lifting.hpp"
#include "lmc/rational.hpp"

#include <variant>

namespace lmc {

/// Sparse inequality sum(coeff_i * x_i) <= rhs over the canonical edge order
/// of a lifted graph. Terms are sorted by index with no duplicates.
struct LinearInequality {
    std::vector<std::pair<std::size_t, Rational>> terms;
    Rational rhs;

    LinearInequality() = default;
    LinearInequality(std::vector<std::pair<std::size_t, Rational>> t, Rational r);

    Rational evaluate(const Labeling& x) const;
    bool satisfied_by(const Labeling& x) const { return evaluate(x) <= rhs; }
    bool tight_at(const Labeling& x) const { return evaluate(x) == rhs; }

    std::vector<Rational> dense(std::size_t dimension) const;
};

// Generator tags for the canonical inequality families.
struct CycleTag {
    EdgeSet cycle; // sorted
    Edge edge;
};
struct PathTag {
    Edge lifted;
    Path path;
};
struct CutTag {
    Edge lifted;
    EdgeSet cut; // sorted
};
struct BoxTag {
    Edge edge;
    bool upper;
};
using InequalityTag = std::variant<CycleTag, PathTag, CutTag, BoxTag>;

std::string tag_to_string(const InequalityTag& tag);

struct TaggedInequality {
    InequalityTag tag;
    LinearInequality ineq;
};

/// Raised by face extraction when the inequality is not valid; carries a
/// feasible labeling violating it.
class InvalidInequalityError : public std::runtime_error {
public:
    explicit InvalidInequalityError(Labeling witness)
        : std::runtime_error("inequality is violated by the feasible labeling " + labeling_to_string(witness)),
          witness_labeling(std::move(witness)) {}

    Labeling witness_labeling;
};

/// Incremental exact rank over the rationals. Rows are reduced against a
/// growing echelon basis; pivoting picks the entry of largest absolute value.
class RationalRank {
public:
    explicit RationalRank(std::size_t columns) : columns_(columns) {}

    /// Returns true if the row enlarged the rank.
    bool add_row(std::vector<Rational> row);
    std::size_t rank() const { return basis_.size(); }
    std::size_t columns() const { return columns_; }

private:
    std::size_t columns_;
    std::vector<std::vector<Rational>> basis_;
    std::vector<std::size_t> pivot_;
};

/// Rank of a rational matrix.
std::size_t matrix_rank(const std::vector<std::vector<Rational>>& rows);

/// Dimension of the affine hull of a set of labelings: -1 for the empty set,
/// 0 for a single point, otherwise the rank of the differences against a
/// fixed base point. Exact; invariant under permutation and duplication.
int affine_dimension(const std::vector<Labeling>& vectors);

/// Streaming variant used by the facet oracle.
class AffineDimensionAccumulator {
public:
    explicit AffineDimensionAccumulator(std::size_t columns) : rank_(columns) {}

    void add(const Labeling& x);
    int dimension() const;

private:
    RationalRank rank_;
    std::optional<Labeling> base_;
};

/// True iff every feasible labeling of the pair satisfies the inequality.
bool is_valid(const LiftedPair& pair, const LinearInequality& ineq);

/// All feasible labelings satisfying the inequality with equality. Throws
/// InvalidInequalityError (with witness) if the inequality is not valid.
std::vector<Labeling> face(const LiftedPair& pair, const LinearInequality& ineq);

/// Facet test by dimension: the face must have affine dimension |E'| - 1.
/// Single streaming pass; validity is checked along the way.
bool is_facet(const LiftedPair& pair, const LinearInequality& ineq);

// Builders for the canonical families.
LinearInequality cycle_inequality(const LiftedPair& pair, const EdgeSet& cycle, const Edge& e);
LinearInequality path_inequality(const LiftedPair& pair, const Edge& f, const Path& p);
LinearInequality cut_inequality(const LiftedPair& pair, const Edge& f, const EdgeSet& cut);
LinearInequality box_inequality(const LiftedPair& pair, const Edge& e, bool upper);

/// The full canonical system: cycle(C,e) over chordless base cycles, path
/// and cut inequalities per lifted-only edge, and both box bounds per edge.
std::vector<TaggedInequality> canonical_inequalities(const LiftedPair& pair);

} // namespace lmc
