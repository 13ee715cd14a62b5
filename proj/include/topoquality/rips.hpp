#pragma once

// Vietoris-Rips filtrations of finite point clouds.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "topoquality/errors.hpp"

namespace topoquality {

using VertexId = std::uint32_t;

/// Finite point set in R^n with optional class labels.
class PointCloud {
public:
    PointCloud() = default;

    explicit PointCloud(std::vector<std::vector<double>> points,
                        std::optional<std::vector<std::string>> labels = std::nullopt)
        : points_(std::move(points)), labels_(std::move(labels)) {
        for (const auto& p : points_)
            if (p.size() != points_.front().size())
                throw DimensionMismatch("all points must have the same dimension");
        if (labels_ && labels_->size() != points_.size())
            throw InvalidArgument("label count does not match point count");
    }

    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    std::size_t dimension() const noexcept { return points_.empty() ? 0 : points_.front().size(); }

    const std::vector<double>& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<std::vector<double>>& points() const noexcept { return points_; }

    bool has_labels() const noexcept { return labels_.has_value(); }
    const std::vector<std::string>& labels() const {
        if (!labels_) throw MissingLabels("point cloud has no labels");
        return *labels_;
    }

    /// The points at `indices`, in that order, with their labels.
    PointCloud select(std::span<const std::size_t> indices) const {
        std::vector<std::vector<double>> pts;
        std::optional<std::vector<std::string>> lbl;
        if (labels_) lbl.emplace();
        for (std::size_t i : indices) {
            if (i >= points_.size()) throw IndexOutOfRange("point index out of range");
            pts.push_back(points_[i]);
            if (lbl) lbl->push_back((*labels_)[i]);
        }
        return PointCloud(std::move(pts), std::move(lbl));
    }

private:
    std::vector<std::vector<double>> points_;
    std::optional<std::vector<std::string>> labels_;
};

inline double euclidean_distance(std::span<const double> p, std::span<const double> q) {
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double d = p[i] - q[i];
        s += d * d;
    }
    return std::sqrt(s);
}

/// Symmetric matrix of pairwise distances with a zero diagonal.
class DistanceMatrix {
public:
    DistanceMatrix() = default;

    explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0.0) {}

    static DistanceMatrix euclidean(const PointCloud& cloud) {
        DistanceMatrix m(cloud.size());
        for (std::size_t i = 0; i < cloud.size(); ++i)
            for (std::size_t j = i + 1; j < cloud.size(); ++j)
                m.set(i, j, euclidean_distance(cloud[i], cloud[j]));
        return m;
    }

    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }

    void set(std::size_t i, std::size_t j, double v) {
        if (!(v >= 0.0)) throw InvalidArgument("distances must be nonnegative");
        d_[i * n_ + j] = v;
        d_[j * n_ + i] = v;
    }

private:
    std::size_t n_ = 0;
    std::vector<double> d_;
};

struct Simplex {
    std::vector<VertexId> vertices;  // strictly increasing
    double value = 0.0;

    std::size_t dimension() const noexcept { return vertices.size() - 1; }
    friend bool operator==(const Simplex&, const Simplex&) = default;
};

/// Filtration order: value, then dimension, then lexicographic vertices.
inline bool filtration_less(const Simplex& a, const Simplex& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
}

struct Filtration {
    std::vector<Simplex> simplices;
    std::size_t max_dim = 0;
    double r_max = 0.0;
    /// Number of vertices of the underlying cloud (vertex ids are < this).
    std::size_t n_points = 0;
    /// For restricted filtrations: position of each simplex in the parent.
    std::optional<std::vector<std::size_t>> parent_positions;

    std::size_t size() const noexcept { return simplices.size(); }
    const Simplex& operator[](std::size_t i) const { return simplices[i]; }
};

namespace detail {

inline void expand_cliques(const DistanceMatrix& dist, std::size_t max_dim, double r_max,
                           std::vector<VertexId>& clique, double value,
                           std::span<const VertexId> candidates, std::vector<Simplex>& out) {
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        const VertexId v = candidates[c];
        double next_value = value;
        for (VertexId u : clique) next_value = std::max(next_value, dist(u, v));
        clique.push_back(v);
        out.push_back({clique, next_value});
        if (clique.size() <= max_dim) {
            // neighbours of the new clique among later candidates
            std::vector<VertexId> next;
            for (std::size_t d = c + 1; d < candidates.size(); ++d)
                if (dist(v, candidates[d]) <= r_max) next.push_back(candidates[d]);
            expand_cliques(dist, max_dim, r_max, clique, next_value, next, out);
        }
        clique.pop_back();
    }
}

}  // namespace detail

/// All simplices of dimension <= max_dim with diameter <= r_max, valued by diameter.
inline Filtration build_rips(const DistanceMatrix& dist, std::size_t max_dim, double r_max) {
    if (!(r_max >= 0.0)) throw InvalidArgument("r_max must be >= 0");
    Filtration f;
    f.max_dim = max_dim;
    f.r_max = r_max;
    f.n_points = dist.size();
    for (VertexId v = 0; v < dist.size(); ++v) {
        f.simplices.push_back({{v}, 0.0});
        if (max_dim == 0) continue;
        std::vector<VertexId> neighbours;
        for (VertexId u = v + 1; u < dist.size(); ++u)
            if (dist(v, u) <= r_max) neighbours.push_back(u);
        std::vector<VertexId> clique{v};
        detail::expand_cliques(dist, max_dim, r_max, clique, 0.0, neighbours, f.simplices);
    }
    std::sort(f.simplices.begin(), f.simplices.end(), filtration_less);
    return f;
}

inline Filtration build_rips(const PointCloud& cloud, std::size_t max_dim, double r_max) {
    return build_rips(DistanceMatrix::euclidean(cloud), max_dim, r_max);
}

/// The subfiltration spanned by `subset` (vertex ids of the parent cloud).
/// Vertex ids are kept, so every simplex names its image in the parent.
inline Filtration restrict_to_subset(const Filtration& parent, std::span<const std::size_t> subset) {
    std::vector<char> keep(parent.n_points, 0);
    for (std::size_t i : subset) {
        if (i >= parent.n_points) throw IndexOutOfRange("subset index " + std::to_string(i) + " out of range");
        keep[i] = 1;
    }
    Filtration f;
    f.max_dim = parent.max_dim;
    f.r_max = parent.r_max;
    f.n_points = parent.n_points;
    f.parent_positions.emplace();
    for (std::size_t pos = 0; pos < parent.size(); ++pos) {
        const auto& s = parent[pos];
        if (std::all_of(s.vertices.begin(), s.vertices.end(), [&](VertexId v) { return keep[v]; })) {
            f.simplices.push_back(s);
            f.parent_positions->push_back(pos);
        }
    }
    return f;
}

}  // namespace topoquality
