#pragma once

// Barcodes and representative cycles by boundary-matrix reduction over Z2.

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "topoquality/core.hpp"
#include "topoquality/rips.hpp"

namespace topoquality {

/// A Z2 chain: sorted positions of simplices in a filtration.
using Chain = std::vector<std::uint32_t>;

struct VertexSetHash {
    std::size_t operator()(const std::vector<VertexId>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (VertexId x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// Lookup from vertex set to filtration position.
class SimplexIndex {
public:
    explicit SimplexIndex(const Filtration& f) {
        map_.reserve(f.size());
        for (std::size_t i = 0; i < f.size(); ++i)
            map_.emplace(f[i].vertices, static_cast<std::uint32_t>(i));
    }

    std::optional<std::uint32_t> find(const std::vector<VertexId>& vertices) const {
        auto it = map_.find(vertices);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

private:
    std::unordered_map<std::vector<VertexId>, std::uint32_t, VertexSetHash> map_;
};

/// Column j lists the codimension-1 faces of simplex j as filtration positions.
inline Z2ColumnMatrix boundary_matrix(const Filtration& f) {
    const SimplexIndex index(f);
    std::vector<Z2ColumnMatrix::column_type> cols(f.size());
    std::vector<VertexId> face;
    for (std::size_t j = 0; j < f.size(); ++j) {
        const auto& verts = f[j].vertices;
        if (verts.size() < 2) continue;
        for (std::size_t drop = 0; drop < verts.size(); ++drop) {
            face.clear();
            for (std::size_t k = 0; k < verts.size(); ++k)
                if (k != drop) face.push_back(verts[k]);
            auto pos = index.find(face);
            if (!pos) throw InvalidArgument("filtration is missing a face");
            cols[j].push_back(*pos);
        }
        std::sort(cols[j].begin(), cols[j].end());
    }
    return Z2ColumnMatrix(f.size(), std::move(cols));
}

/// Nonzero reduced boundary column of a (k+1)-simplex.
struct ReducedBoundary {
    std::uint32_t simplex;
    double value;
    Chain chain;
};

struct PersistenceResult {
    std::size_t degree = 0;
    Barcode barcode;
    /// Aligned with `barcode`: a k-cycle generating each bar at its birth.
    std::vector<Chain> representatives;
    std::vector<std::uint32_t> birth_simplex;
    std::vector<std::optional<std::uint32_t>> death_simplex;
    /// Every birth simplex of degree k mapped to its death simplex, including
    /// zero-length pairs that were dropped from the barcode.
    std::map<std::uint32_t, std::optional<std::uint32_t>> pairing;
    /// All nonzero reduced (k+1)-columns, in filtration order. Together they
    /// span the k-boundaries at every scale.
    std::vector<ReducedBoundary> boundaries;
};

/// Standard persistence pairing in degree `degree` with representatives.
/// Paired bars use the reduced column of the death simplex, essential bars
/// the change-of-basis column of the birth simplex. Zero-length bars are
/// dropped from the barcode.
inline PersistenceResult reduce_with_representatives(const Filtration& f, std::size_t degree) {
    if (degree + 1 > f.max_dim && f.size() > 0)
        throw DegreeOutOfRange("degree " + std::to_string(degree) + " needs a filtration with max_dim >= " +
                               std::to_string(degree + 1));
    Z2ColumnMatrix boundary = boundary_matrix(f);

    PersistenceResult result;
    result.degree = degree;

    // (k+1)-columns first so that their pivots can clear k-columns.
    std::vector<std::optional<std::uint32_t>> owner(f.size());
    std::vector<char> cleared(f.size(), 0);
    Z2ColumnMatrix reduced = boundary;
    for (std::size_t j = 0; j < f.size(); ++j) {
        if (f[j].dimension() != degree + 1) continue;
        while (auto p = reduced.pivot(j)) {
            if (!owner[*p]) {
                owner[*p] = static_cast<std::uint32_t>(j);
                break;
            }
            reduced.add_to(*owner[*p], j);
        }
        if (auto p = reduced.pivot(j)) {
            cleared[*p] = 1;
            result.pairing[*p] = static_cast<std::uint32_t>(j);
            auto col = reduced.column(j);
            result.boundaries.push_back({static_cast<std::uint32_t>(j), f[j].value, Chain(col.begin(), col.end())});
        }
    }

    // k-columns with change-of-basis tracking; cleared columns reduce to zero
    // and are never needed as a representative.
    std::vector<Chain> basis(f.size());
    std::vector<std::optional<std::uint32_t>> k_owner(f.size());
    std::vector<Interval> bars;
    std::vector<Chain> reps;
    std::vector<std::uint32_t> births;
    std::vector<std::optional<std::uint32_t>> deaths;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i].dimension() != degree) continue;
        if (cleared[i]) {
            const std::uint32_t j = *result.pairing[static_cast<std::uint32_t>(i)];
            if (f[i].value < f[j].value) {
                bars.push_back(Interval::finite(f[i].value, f[j].value));
                auto col = reduced.column(j);
                reps.emplace_back(col.begin(), col.end());
                births.push_back(static_cast<std::uint32_t>(i));
                deaths.push_back(j);
            }
            continue;
        }
        basis[i] = {static_cast<std::uint32_t>(i)};
        while (auto p = reduced.pivot(i)) {
            if (!k_owner[*p]) {
                k_owner[*p] = static_cast<std::uint32_t>(i);
                break;
            }
            const std::uint32_t other = *k_owner[*p];
            reduced.add_to(other, i);
            add_column<std::uint32_t>(basis[i], basis[other]);
        }
        if (!reduced.pivot(i)) {
            result.pairing[static_cast<std::uint32_t>(i)] = std::nullopt;
            bars.push_back(Interval::infinite(f[i].value));
            reps.push_back(basis[i]);
            births.push_back(static_cast<std::uint32_t>(i));
            deaths.push_back(std::nullopt);
        }
    }

    const auto perm = barcode_permutation(bars);
    result.barcode = Barcode(degree, bars);
    for (std::size_t p : perm) {
        result.representatives.push_back(std::move(reps[p]));
        result.birth_simplex.push_back(births[p]);
        result.death_simplex.push_back(deaths[p]);
    }
    return result;
}

}  // namespace topoquality
