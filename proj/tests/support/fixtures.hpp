#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "topoquality/induced.hpp"
#include "topoquality/rips.hpp"

namespace topoquality::fixtures {

/// Degree-1 barcodes of the worked example: A (domain) and B (codomain),
/// listed in the order the matrices print them.
inline std::vector<Interval> example_domain() {
    return {Interval::finite(0.6, 1.3), Interval::finite(0.5, 1.5), Interval::finite(0.6, 1.5)};
}
inline std::vector<Interval> example_codomain() {
    return {Interval::finite(0.4, 1.2), Interval::finite(0.5, 1.2)};
}

inline InducedMatrix example_f() {
    return InducedMatrix::from_unsorted(1, example_domain(), example_codomain(), {{0, 0, 1}, {1, 1, 0}});
}
inline InducedMatrix example_g() {
    return InducedMatrix::from_unsorted(1, example_domain(), example_codomain(), {{0, 1, 1}, {1, 1, 0}});
}

inline PointCloud unit_square() { return PointCloud({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

inline PointCloud circle(std::size_t n, double radius = 1.0) {
    std::vector<std::vector<double>> pts;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n);
        pts.push_back({radius * std::cos(t), radius * std::sin(t)});
    }
    return PointCloud(std::move(pts));
}

inline PointCloud random_cloud(std::mt19937_64& rng, std::size_t n, double extent = 1.0) {
    std::uniform_real_distribution<double> u(0.0, extent);
    std::vector<std::vector<double>> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back({u(rng), u(rng)});
    return PointCloud(std::move(pts));
}

/// Nonempty random subset of {0..n-1}, sorted.
inline std::vector<std::size_t> random_subset(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    std::shuffle(all.begin(), all.end(), rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, n)(rng);
    all.resize(k);
    std::sort(all.begin(), all.end());
    return all;
}

inline std::vector<std::size_t> iota_indices(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return v;
}

/// Random bars on a coarse grid (so ties and nesting occur) and a random
/// matrix whose nonzeros respect the morphism support pattern.
inline InducedMatrix random_induced(std::mt19937_64& rng, std::size_t max_bars = 8) {
    std::uniform_int_distribution<int> grid(0, 6);
    std::uniform_int_distribution<std::size_t> count(0, max_bars);
    auto bars = [&](std::size_t n) {
        std::vector<Interval> out;
        for (std::size_t i = 0; i < n; ++i) {
            const int a = grid(rng);
            const int len = std::uniform_int_distribution<int>(1, 5)(rng);
            if (std::uniform_int_distribution<int>(0, 7)(rng) == 0)
                out.push_back(Interval::infinite(a * 0.25));
            else
                out.push_back(Interval::finite(a * 0.25, (a + len) * 0.25));
        }
        return out;
    };
    const auto dom = bars(count(rng));
    const auto cod = bars(count(rng));
    std::vector<std::vector<int>> rows(cod.size(), std::vector<int>(dom.size(), 0));
    for (std::size_t r = 0; r < cod.size(); ++r)
        for (std::size_t c = 0; c < dom.size(); ++c) {
            Interval row = cod[r], col = dom[c];
            if (support_allows(row, col)) rows[r][c] = std::uniform_int_distribution<int>(0, 1)(rng);
        }
    return InducedMatrix::from_unsorted(1, dom, cod, rows);
}

}  // namespace topoquality::fixtures
