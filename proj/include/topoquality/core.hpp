#pragma once

// Intervals, barcodes and sparse matrices over Z2.

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "topoquality/errors.hpp"

namespace topoquality {

// ---------------------------------------------------------------------------
// Interval
// ---------------------------------------------------------------------------

/// A bar [birth, death]. An empty `death` means the class never dies inside
/// the computed scale range.
struct Interval {
    double birth = 0.0;
    std::optional<double> death;
    std::size_t index = 0;

    bool essential() const noexcept { return !death.has_value(); }

    /// Endpoint equality, ignoring the tie-break index.
    bool same_endpoints(const Interval& other) const noexcept {
        return birth == other.birth && death == other.death;
    }

    static Interval finite(double birth, double death, std::size_t index = 0) {
        return Interval{birth, death, index};
    }
    static Interval infinite(double birth, std::size_t index = 0) {
        return Interval{birth, std::nullopt, index};
    }
};

inline void validate(const Interval& iv) {
    if (!std::isfinite(iv.birth) || iv.birth < 0.0)
        throw InvalidArgument("interval birth must be finite and >= 0");
    if (iv.death && (std::isnan(*iv.death) || *iv.death < iv.birth))
        throw InvalidArgument("interval death must be >= birth");
}

/// Compares two deaths; an absent death is larger than every finite one.
inline std::strong_ordering compare_death(const std::optional<double>& p,
                                          const std::optional<double>& q) noexcept {
    if (!p && !q) return std::strong_ordering::equal;
    if (!p) return std::strong_ordering::greater;
    if (!q) return std::strong_ordering::less;
    if (*p < *q) return std::strong_ordering::less;
    if (*q < *p) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

/// `x <= death`, with an absent death acting as +infinity.
inline bool at_most_death(double x, const std::optional<double>& death) noexcept {
    return !death || x <= *death;
}

/// Order on endpoints only: by death, then by birth.
inline std::strong_ordering endpoint_order(const Interval& p, const Interval& q) noexcept {
    if (auto c = compare_death(p.death, q.death); c != 0) return c;
    if (p.birth < q.birth) return std::strong_ordering::less;
    if (q.birth < p.birth) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

/// Total order on bars: death first, then birth, then the tie-break index.
inline std::strong_ordering interval_order(const Interval& p, const Interval& q) noexcept {
    if (auto c = endpoint_order(p, q); c != 0) return c;
    return p.index <=> q.index;
}

/// True iff `outer` strictly encloses `inner`: outer != inner and
/// outer.birth <= inner.birth <= inner.death <= outer.death.
inline bool is_nested(const Interval& outer, const Interval& inner) noexcept {
    if (outer.same_endpoints(inner)) return false;
    return outer.birth <= inner.birth && compare_death(inner.death, outer.death) <= 0;
}

// ---------------------------------------------------------------------------
// Barcode
// ---------------------------------------------------------------------------

/// Sorting permutation of `intervals` under endpoint_order, stable on ties.
/// Element `i` of the result is the position in the input of the i-th bar.
inline std::vector<std::size_t> barcode_permutation(std::span<const Interval> intervals) {
    std::vector<std::size_t> perm(intervals.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return endpoint_order(intervals[a], intervals[b]) < 0;
    });
    return perm;
}

/// The bars of PH_k, kept sorted by interval_order. Each bar's index is its
/// position; bars with equal endpoints keep their input order.
class Barcode {
public:
    Barcode() = default;

    Barcode(std::size_t dimension, std::vector<Interval> intervals) : dimension_(dimension) {
        for (const auto& iv : intervals) validate(iv);
        const auto perm = barcode_permutation(intervals);
        intervals_.reserve(intervals.size());
        for (std::size_t i = 0; i < perm.size(); ++i) {
            Interval iv = intervals[perm[i]];
            iv.index = i;
            intervals_.push_back(iv);
        }
    }

    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t size() const noexcept { return intervals_.size(); }
    bool empty() const noexcept { return intervals_.empty(); }
    const Interval& operator[](std::size_t i) const { return intervals_[i]; }
    const std::vector<Interval>& intervals() const noexcept { return intervals_; }
    auto begin() const noexcept { return intervals_.begin(); }
    auto end() const noexcept { return intervals_.end(); }

    /// Position of `iv` in this barcode, matched by index and endpoints.
    std::optional<std::size_t> find(const Interval& iv) const noexcept {
        if (iv.index < intervals_.size() && intervals_[iv.index].same_endpoints(iv)) return iv.index;
        return std::nullopt;
    }

    /// Same degree and the same endpoints in the same order.
    bool same_bars(const Barcode& other) const noexcept {
        if (dimension_ != other.dimension_ || size() != other.size()) return false;
        for (std::size_t i = 0; i < size(); ++i)
            if (!intervals_[i].same_endpoints(other.intervals_[i])) return false;
        return true;
    }

private:
    std::size_t dimension_ = 0;
    std::vector<Interval> intervals_;
};

/// Positions of the bars [a_i, b_i] with a_i <= a and b_i <= b, where I = [a, b].
/// Copies of I with a larger index are excluded, so I is always the last entry.
inline std::vector<std::size_t> upper_set_positions(const Barcode& barcode, const Interval& target) {
    const auto pos = barcode.find(target);
    if (!pos) throw MembershipError("interval is not a member of the barcode");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i <= *pos; ++i) {
        const Interval& iv = barcode[i];
        if (iv.birth <= target.birth && compare_death(iv.death, target.death) <= 0) out.push_back(i);
    }
    return out;
}

inline std::vector<Interval> upper_set(const Barcode& barcode, const Interval& target) {
    std::vector<Interval> out;
    for (std::size_t i : upper_set_positions(barcode, target)) out.push_back(barcode[i]);
    return out;
}

// ---------------------------------------------------------------------------
// Sparse Z2 column matrix
// ---------------------------------------------------------------------------

/// In-place symmetric difference of two sorted index vectors: `target += source` over Z2.
template <class Index>
void add_column(std::vector<Index>& target, std::span<const Index> source) {
    std::vector<Index> out;
    out.reserve(target.size() + source.size());
    std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                  std::back_inserter(out));
    target.swap(out);
}

template <class Index>
class BasicZ2ColumnMatrix {
public:
    using index_type = Index;
    using column_type = std::vector<Index>;

    BasicZ2ColumnMatrix() = default;

    BasicZ2ColumnMatrix(std::size_t n_rows, std::size_t n_cols)
        : n_rows_(n_rows), columns_(n_cols) {}

    /// Columns must hold strictly increasing row indices below `n_rows`.
    BasicZ2ColumnMatrix(std::size_t n_rows, std::vector<column_type> columns)
        : n_rows_(n_rows), columns_(std::move(columns)) {
        for (const auto& col : columns_) check_column(col);
    }

    /// Builds from a dense row-major 0/1 grid, as matrices are usually printed.
    static BasicZ2ColumnMatrix from_dense_rows(const std::vector<std::vector<int>>& rows,
                                               std::size_t n_cols) {
        BasicZ2ColumnMatrix m(rows.size(), n_cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != n_cols) throw ShapeMismatch("ragged dense matrix");
            for (std::size_t c = 0; c < n_cols; ++c) {
                if (rows[r][c] != 0 && rows[r][c] != 1)
                    throw InvalidArgument("Z2 matrix entries must be 0 or 1");
                if (rows[r][c]) m.columns_[c].push_back(static_cast<Index>(r));
            }
        }
        return m;
    }

    static BasicZ2ColumnMatrix identity(std::size_t n) {
        BasicZ2ColumnMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.columns_[i].push_back(static_cast<Index>(i));
        return m;
    }

    std::size_t n_rows() const noexcept { return n_rows_; }
    std::size_t n_cols() const noexcept { return columns_.size(); }

    std::span<const Index> column(std::size_t j) const { return columns_[j]; }
    const std::vector<column_type>& columns() const noexcept { return columns_; }

    bool entry(std::size_t row, std::size_t col) const {
        const auto& c = columns_[col];
        return std::binary_search(c.begin(), c.end(), static_cast<Index>(row));
    }

    /// Bottom-most nonzero row of column j.
    std::optional<Index> pivot(std::size_t j) const {
        if (columns_[j].empty()) return std::nullopt;
        return columns_[j].back();
    }

    /// column[dst] += column[src]
    void add_to(std::size_t src, std::size_t dst) {
        add_column<Index>(columns_[dst], std::span<const Index>(columns_[src]));
    }

    void push_column(column_type col) {
        check_column(col);
        columns_.push_back(std::move(col));
    }

    BasicZ2ColumnMatrix select_columns(std::span<const std::size_t> which) const {
        std::vector<column_type> cols;
        cols.reserve(which.size());
        for (std::size_t j : which) cols.push_back(columns_.at(j));
        BasicZ2ColumnMatrix out;
        out.n_rows_ = n_rows_;
        out.columns_ = std::move(cols);
        return out;
    }

    std::vector<std::vector<int>> to_dense_rows() const {
        std::vector<std::vector<int>> rows(n_rows_, std::vector<int>(n_cols(), 0));
        for (std::size_t c = 0; c < n_cols(); ++c)
            for (Index r : columns_[c]) rows[r][c] = 1;
        return rows;
    }

    std::size_t nonzeros() const noexcept {
        std::size_t n = 0;
        for (const auto& c : columns_) n += c.size();
        return n;
    }

    friend bool operator==(const BasicZ2ColumnMatrix&, const BasicZ2ColumnMatrix&) = default;

private:
    void check_column(const column_type& col) const {
        for (std::size_t i = 0; i < col.size(); ++i) {
            if (static_cast<std::size_t>(col[i]) >= n_rows_)
                throw IndexOutOfRange("row index exceeds matrix height");
            if (i > 0 && !(col[i - 1] < col[i]))
                throw InvalidArgument("column row indices must be strictly increasing");
        }
    }

    std::size_t n_rows_ = 0;
    std::vector<column_type> columns_;
};

using Z2ColumnMatrix = BasicZ2ColumnMatrix<std::uint32_t>;

template <class Index>
struct ColumnReduction {
    BasicZ2ColumnMatrix<Index> reduced;
    /// Change of basis: reduced = input * basis, with basis upper unitriangular.
    BasicZ2ColumnMatrix<Index> basis;
};

namespace detail {

template <class Index>
void reduce_in_place(BasicZ2ColumnMatrix<Index>& m, BasicZ2ColumnMatrix<Index>* basis) {
    // owner[row] = column whose pivot is `row`, if any
    std::vector<std::optional<std::size_t>> owner(m.n_rows());
    for (std::size_t j = 0; j < m.n_cols(); ++j) {
        while (auto p = m.pivot(j)) {
            auto& other = owner[*p];
            if (!other) {
                other = j;
                break;
            }
            m.add_to(*other, j);
            if (basis) basis->add_to(*other, j);
        }
    }
}

}  // namespace detail

/// Gaussian column reduction using only left-to-right additions. Afterwards
/// the nonzero columns have pairwise distinct pivots.
template <class Index>
BasicZ2ColumnMatrix<Index> column_reduce_left_to_right(BasicZ2ColumnMatrix<Index> m) {
    detail::reduce_in_place<Index>(m, nullptr);
    return m;
}

/// As column_reduce_left_to_right, also returning the change-of-basis matrix.
template <class Index>
ColumnReduction<Index> column_reduce_with_basis(BasicZ2ColumnMatrix<Index> m) {
    auto basis = BasicZ2ColumnMatrix<Index>::identity(m.n_cols());
    detail::reduce_in_place<Index>(m, &basis);
    return {std::move(m), std::move(basis)};
}

}  // namespace topoquality
