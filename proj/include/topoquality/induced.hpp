#pragma once

// Matrix of the morphism PH_k(VR(X)) -> PH_k(VR(Y)) induced by an inclusion X -> Y.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "topoquality/core.hpp"
#include "topoquality/persistence.hpp"
#include "topoquality/rips.hpp"

namespace topoquality {

/// Whether a nonzero entry at (row J, column I) is allowed: a morphism of
/// interval modules I -> J exists only when a_J <= a_I <= b_J and b_J <= b_I.
inline bool support_allows(const Interval& row, const Interval& col) noexcept {
    return row.birth <= col.birth && at_most_death(col.birth, row.death) &&
           compare_death(row.death, col.death) <= 0;
}

/// Rows indexed by the codomain barcode, columns by the domain barcode,
/// both in interval order.
class InducedMatrix {
public:
    InducedMatrix(Z2ColumnMatrix matrix, Barcode domain, Barcode codomain)
        : matrix_(std::move(matrix)), domain_(std::move(domain)), codomain_(std::move(codomain)) {
        if (matrix_.n_cols() != domain_.size() || matrix_.n_rows() != codomain_.size())
            throw ShapeMismatch("induced matrix shape does not match barcode sizes");
        if (domain_.dimension() != codomain_.dimension())
            throw BarcodeMismatch("domain and codomain barcodes have different degrees");
        for (std::size_t c = 0; c < matrix_.n_cols(); ++c)
            for (auto r : matrix_.column(c))
                if (!support_allows(codomain_[r], domain_[c]))
                    throw SupportViolation("nonzero entry at row " + std::to_string(r) + ", column " +
                                           std::to_string(c) + " violates the support pattern");
    }

    /// Accepts bars in any order with a dense row-major matrix laid out in
    /// that same order, and sorts rows and columns into interval order.
    static InducedMatrix from_unsorted(std::size_t degree, const std::vector<Interval>& domain,
                                       const std::vector<Interval>& codomain,
                                       const std::vector<std::vector<int>>& dense_rows) {
        if (dense_rows.size() != codomain.size())
            throw ShapeMismatch("matrix row count does not match codomain size");
        const auto col_perm = barcode_permutation(domain);
        const auto row_perm = barcode_permutation(codomain);
        std::vector<std::vector<int>> sorted(codomain.size(), std::vector<int>(domain.size(), 0));
        for (std::size_t r = 0; r < codomain.size(); ++r) {
            if (dense_rows[row_perm[r]].size() != domain.size())
                throw ShapeMismatch("matrix column count does not match domain size");
            for (std::size_t c = 0; c < domain.size(); ++c) sorted[r][c] = dense_rows[row_perm[r]][col_perm[c]];
        }
        return InducedMatrix(Z2ColumnMatrix::from_dense_rows(sorted, domain.size()), Barcode(degree, domain),
                             Barcode(degree, codomain));
    }

    const Z2ColumnMatrix& matrix() const noexcept { return matrix_; }
    const Barcode& domain() const noexcept { return domain_; }
    const Barcode& codomain() const noexcept { return codomain_; }
    std::size_t degree() const noexcept { return domain_.dimension(); }

private:
    Z2ColumnMatrix matrix_;
    Barcode domain_;
    Barcode codomain_;
};

namespace detail {

/// Codomain cycle space at one scale, column-reduced, with each basis column
/// tagged by the codomain bars it is a combination of.
class CodomainSystem {
public:
    CodomainSystem(const PersistenceResult& codomain, double scale) {
        for (const auto& b : codomain.boundaries)
            if (b.value <= scale) insert(b.chain, {});
        const Barcode& bars = codomain.barcode;
        for (std::size_t j = 0; j < bars.size(); ++j) {
            const Interval& J = bars[j];
            if (J.birth <= scale && (J.essential() || scale < *J.death))
                insert(codomain.representatives[j], {static_cast<std::uint32_t>(j)});
        }
    }

    /// Codomain bars whose representatives sum to `cycle` modulo boundaries.
    std::optional<std::vector<std::uint32_t>> solve(Chain cycle) const {
        std::vector<std::uint32_t> tags;
        while (!cycle.empty()) {
            auto it = owner_.find(cycle.back());
            if (it == owner_.end()) return std::nullopt;
            add_column<std::uint32_t>(cycle, columns_[it->second]);
            add_column<std::uint32_t>(tags, tags_[it->second]);
        }
        return tags;
    }

private:
    void insert(Chain col, std::vector<std::uint32_t> tag) {
        while (!col.empty()) {
            auto it = owner_.find(col.back());
            if (it == owner_.end()) break;
            add_column<std::uint32_t>(col, columns_[it->second]);
            add_column<std::uint32_t>(tag, tags_[it->second]);
        }
        if (col.empty()) return;
        owner_.emplace(col.back(), columns_.size());
        columns_.push_back(std::move(col));
        tags_.push_back(std::move(tag));
    }

    std::vector<Chain> columns_;
    std::vector<std::vector<std::uint32_t>> tags_;
    std::unordered_map<std::uint32_t, std::size_t> owner_;
};

}  // namespace detail

/// Builds F column by column: the image of each domain representative is
/// written, at the bar's birth scale, in the basis of codomain bars alive
/// there plus the codomain boundaries present there.
inline InducedMatrix induced_matrix(const PersistenceResult& domain, const Filtration& domain_filtration,
                                    const PersistenceResult& codomain, const Filtration& codomain_filtration) {
    if (domain.degree != codomain.degree) throw BarcodeMismatch("persistence results have different degrees");

    // position in the domain filtration -> position in the codomain filtration
    std::vector<std::uint32_t> to_codomain(domain_filtration.size());
    if (domain_filtration.parent_positions && domain_filtration.n_points == codomain_filtration.n_points &&
        domain_filtration.parent_positions->size() == domain_filtration.size()) {
        for (std::size_t i = 0; i < domain_filtration.size(); ++i)
            to_codomain[i] = static_cast<std::uint32_t>((*domain_filtration.parent_positions)[i]);
    } else {
        const SimplexIndex index(codomain_filtration);
        for (std::size_t i = 0; i < domain_filtration.size(); ++i) {
            auto pos = index.find(domain_filtration[i].vertices);
            if (!pos) throw SolveInconsistency("domain simplex is missing from the codomain filtration");
            to_codomain[i] = *pos;
        }
    }

    const Barcode& A = domain.barcode;
    const Barcode& B = codomain.barcode;
    std::map<double, std::unique_ptr<detail::CodomainSystem>> systems;
    std::vector<Z2ColumnMatrix::column_type> cols(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) {
        const Interval& I = A[i];
        auto& sys = systems[I.birth];
        if (!sys) sys = std::make_unique<detail::CodomainSystem>(codomain, I.birth);

        Chain image;
        image.reserve(domain.representatives[i].size());
        for (auto s : domain.representatives[i]) image.push_back(to_codomain[s]);
        std::sort(image.begin(), image.end());

        auto coeffs = sys->solve(std::move(image));
        if (!coeffs)
            throw SolveInconsistency("image of domain bar " + std::to_string(i) +
                                     " is not a combination of codomain cycles");
        for (auto j : *coeffs)
            if (compare_death(B[j].death, I.death) > 0)
                throw SupportViolation("domain bar " + std::to_string(i) + " maps onto codomain bar " +
                                       std::to_string(j) + " that dies later");
        cols[i] = std::move(*coeffs);
    }
    return InducedMatrix(Z2ColumnMatrix(B.size(), std::move(cols)), A, B);
}

}  // namespace topoquality
