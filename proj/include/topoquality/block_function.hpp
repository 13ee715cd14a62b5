#pragma once

// Block function of a persistence morphism, by per-bar submatrix reduction.

#include <optional>
#include <vector>

#include "topoquality/core.hpp"
#include "topoquality/induced.hpp"

namespace topoquality {

/// Assignment I -> J or I -> nothing for every domain bar I.
struct BlockFunction {
    std::size_t degree = 0;
    Barcode domain;
    Barcode codomain;
    /// Indexed by domain position; holds a codomain position or nothing.
    std::vector<std::optional<std::size_t>> assignment;

    std::optional<Interval> image(std::size_t domain_pos) const {
        if (auto j = assignment.at(domain_pos)) return codomain[*j];
        return std::nullopt;
    }
};

/// F_I: the columns of F indexed by the upper set of I, in interval order.
inline Z2ColumnMatrix interval_submatrix(const InducedMatrix& ind, std::size_t domain_pos) {
    const auto cols = upper_set_positions(ind.domain(), ind.domain()[domain_pos]);
    return ind.matrix().select_columns(cols);
}

/// The reduced submatrix used to decide the image of the bar at `domain_pos`.
inline Z2ColumnMatrix reduced_interval_submatrix(const InducedMatrix& ind, std::size_t domain_pos) {
    return column_reduce_left_to_right(interval_submatrix(ind, domain_pos));
}

inline BlockFunction compute_block_function(const InducedMatrix& ind) {
    const auto& F = ind.matrix();
    if (F.n_cols() != ind.domain().size() || F.n_rows() != ind.codomain().size())
        throw ShapeMismatch("induced matrix shape does not match barcode sizes");

    BlockFunction bf{ind.degree(), ind.domain(), ind.codomain(), {}};
    bf.assignment.reserve(ind.domain().size());
    for (std::size_t i = 0; i < ind.domain().size(); ++i) {
        const auto cols = upper_set_positions(ind.domain(), ind.domain()[i]);
        if (cols.empty() || cols.back() != i) throw Error("bar is not the maximum of its own upper set");
        const auto reduced = column_reduce_left_to_right(F.select_columns(cols));
        if (auto p = reduced.pivot(reduced.n_cols() - 1))
            bf.assignment.emplace_back(static_cast<std::size_t>(*p));
        else
            bf.assignment.emplace_back(std::nullopt);
    }
    return bf;
}

/// True iff the two block functions differ, which certifies that the
/// underlying morphisms are not isomorphic.
inline bool distinguishes(const BlockFunction& a, const BlockFunction& b) {
    if (a.degree != b.degree || !a.domain.same_bars(b.domain) || !a.codomain.same_bars(b.codomain))
        throw BarcodeMismatch("block functions are over different barcodes");
    return a.assignment != b.assignment;
}

}  // namespace topoquality
