#include "lmc/polytope.hpp"

#include <algorithm>

namespace lmc {

LinearInequality::LinearInequality(std::vector<std::pair<std::size_t, Rational>> t, Rational r)
    : rhs(std::move(r)) {
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [idx, coeff] : t) {
        if (coeff == 0)
            continue;
        if (!terms.empty() && terms.back().first == idx)
            terms.back().second += coeff;
        else
            terms.emplace_back(idx, coeff);
    }
    std::erase_if(terms, [](const auto& term) { return term.second == 0; });
}

Rational LinearInequality::evaluate(const Labeling& x) const {
    Rational total = 0;
    for (const auto& [idx, coeff] : terms)
        if (x[idx])
            total += coeff;
    return total;
}

std::vector<Rational> LinearInequality::dense(std::size_t dimension) const {
    std::vector<Rational> out(dimension, Rational(0));
    for (const auto& [idx, coeff] : terms)
        out[idx] = coeff;
    return out;
}

std::string tag_to_string(const InequalityTag& tag) {
    if (const auto* c = std::get_if<CycleTag>(&tag)) {
        std::string s = "cycle(e=" + c->edge.str() + ";C=";
        for (std::size_t i = 0; i < c->cycle.size(); ++i)
            s += (i ? "," : "") + c->cycle[i].str();
        return s + ")";
    }
    if (const auto* p = std::get_if<PathTag>(&tag))
        return "path(f=" + p->lifted.str() + ";P=" + p->path.str() + ")";
    if (const auto* c = std::get_if<CutTag>(&tag)) {
        std::string s = "cut(f=" + c->lifted.str() + ";C=";
        for (std::size_t i = 0; i < c->cut.size(); ++i)
            s += (i ? "," : "") + c->cut[i].str();
        return s + ")";
    }
    const auto& b = std::get<BoxTag>(tag);
    return (b.upper ? std::string("box_upper(") : std::string("box_lower(")) + b.edge.str() + ")";
}

bool RationalRank::add_row(std::vector<Rational> row) {
    if (row.size() != columns_)
        throw std::invalid_argument("row width mismatch");
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const std::size_t p = pivot_[i];
        if (row[p] == 0)
            continue;
        const Rational factor = row[p] / basis_[i][p];
        for (std::size_t c = 0; c < columns_; ++c)
            if (basis_[i][c] != 0)
                row[c] -= factor * basis_[i][c];
    }
    std::size_t pivot = columns_;
    Rational best = 0;
    for (std::size_t c = 0; c < columns_; ++c) {
        if (row[c] == 0)
            continue;
        const Rational mag = abs(row[c]);
        if (pivot == columns_ || mag > best) {
            pivot = c;
            best = mag;
        }
    }
    if (pivot == columns_)
        return false;
    basis_.push_back(std::move(row));
    pivot_.push_back(pivot);
    return true;
}

std::size_t matrix_rank(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty())
        return 0;
    RationalRank rank(rows.front().size());
    for (const auto& row : rows)
        rank.add_row(row);
    return rank.rank();
}

void AffineDimensionAccumulator::add(const Labeling& x) {
    if (!base_) {
        base_ = x;
        return;
    }
    if (x.size() != base_->size())
        throw std::invalid_argument("labeling width mismatch");
    if (rank_.rank() == rank_.columns())
        return; // already full
    std::vector<Rational> diff(x.size());
    bool zero = true;
    for (std::size_t i = 0; i < x.size(); ++i) {
        diff[i] = Rational(static_cast<int>(x[i]) - static_cast<int>((*base_)[i]));
        zero = zero && diff[i] == 0;
    }
    if (!zero)
        rank_.add_row(std::move(diff));
}

int AffineDimensionAccumulator::dimension() const {
    if (!base_)
        return -1;
    return static_cast<int>(rank_.rank());
}

int affine_dimension(const std::vector<Labeling>& vectors) {
    if (vectors.empty())
        return -1;
    AffineDimensionAccumulator acc(vectors.front().size());
    for (const Labeling& x : vectors)
        acc.add(x);
    return acc.dimension();
}

bool is_valid(const LiftedPair& pair, const LinearInequality& ineq) {
    bool valid = true;
    for_each_lifted_multicut(pair, [&](const Labeling& x) {
        if (!ineq.satisfied_by(x)) {
            valid = false;
            return false;
        }
        return true;
    });
    return valid;
}

std::vector<Labeling> face(const LiftedPair& pair, const LinearInequality& ineq) {
    std::vector<Labeling> members;
    std::optional<Labeling> violation;
    for_each_lifted_multicut(pair, [&](const Labeling& x) {
        const Rational lhs = ineq.evaluate(x);
        if (lhs > ineq.rhs) {
            violation = x;
            return false;
        }
        if (lhs == ineq.rhs)
            members.push_back(x);
        return true;
    });
    if (violation)
        throw InvalidInequalityError(std::move(*violation));
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

bool is_facet(const LiftedPair& pair, const LinearInequality& ineq) {
    AffineDimensionAccumulator acc(pair.lifted_edge_count());
    std::optional<Labeling> violation;
    for_each_lifted_multicut(pair, [&](const Labeling& x) {
        const Rational lhs = ineq.evaluate(x);
        if (lhs > ineq.rhs) {
            violation = x;
            return false;
        }
        if (lhs == ineq.rhs)
            acc.add(x);
        return true;
    });
    if (violation)
        throw InvalidInequalityError(std::move(*violation));
    return acc.dimension() == static_cast<int>(pair.lifted_edge_count()) - 1;
}

LinearInequality cycle_inequality(const LiftedPair& pair, const EdgeSet& cycle, const Edge& e) {
    std::vector<std::pair<std::size_t, Rational>> terms;
    terms.emplace_back(pair.index_of(e), Rational(1));
    for (const Edge& g : cycle)
        if (g != e)
            terms.emplace_back(pair.index_of(g), Rational(-1));
    return LinearInequality(std::move(terms), Rational(0));
}

LinearInequality path_inequality(const LiftedPair& pair, const Edge& f, const Path& p) {
    std::vector<std::pair<std::size_t, Rational>> terms;
    terms.emplace_back(pair.index_of(f), Rational(1));
    for (const Edge& e : p.edges)
        terms.emplace_back(pair.index_of(e), Rational(-1));
    return LinearInequality(std::move(terms), Rational(0));
}

LinearInequality cut_inequality(const LiftedPair& pair, const Edge& f, const EdgeSet& cut) {
    // 1 - x_f <= sum (1 - x_e)  rewritten as  sum x_e - x_f <= |C| - 1
    std::vector<std::pair<std::size_t, Rational>> terms;
    terms.emplace_back(pair.index_of(f), Rational(-1));
    for (const Edge& e : cut)
        terms.emplace_back(pair.index_of(e), Rational(1));
    return LinearInequality(std::move(terms), Rational(static_cast<long>(cut.size()) - 1));
}

LinearInequality box_inequality(const LiftedPair& pair, const Edge& e, bool upper) {
    std::vector<std::pair<std::size_t, Rational>> terms;
    terms.emplace_back(pair.index_of(e), Rational(upper ? 1 : -1));
    return LinearInequality(std::move(terms), Rational(upper ? 1 : 0));
}

std::vector<TaggedInequality> canonical_inequalities(const LiftedPair& pair) {
    std::vector<TaggedInequality> out;
    for (const EdgeSet& cycle : enumerate_chordless_cycles(pair.base()))
        for (const Edge& e : cycle)
            out.push_back({CycleTag{cycle, e}, cycle_inequality(pair, cycle, e)});
    for (const Edge& f : pair.lifted_only())
        for (const Path& p : enumerate_vw_paths(pair.base(), f.u, f.v))
            out.push_back({PathTag{f, p}, path_inequality(pair, f, p)});
    for (const Edge& f : pair.lifted_only())
        for (const EdgeSet& cut : enumerate_vw_cuts(pair.base(), f.u, f.v))
            out.push_back({CutTag{f, cut}, cut_inequality(pair, f, cut)});
    for (const Edge& e : pair.lifted().edges()) {
        out.push_back({BoxTag{e, true}, box_inequality(pair, e, true)});
        out.push_back({BoxTag{e, false}, box_inequality(pair, e, false)});
    }
    return out;
}

} // namespace lmc
