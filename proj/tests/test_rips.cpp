#include <cmath>
#include <limits>
#include <map>
#include <random>

#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "topoquality/persistence.hpp"
#include "topoquality/rips.hpp"

using namespace topoquality;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::map<std::pair<std::size_t, double>, int> census(const Filtration& f) {
    std::map<std::pair<std::size_t, double>, int> out;
    for (const auto& s : f.simplices) ++out[{s.dimension(), s.value}];
    return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void expect_face_property(const Filtration& f) {
    const SimplexIndex index(f);
    for (std::size_t j = 0; j < f.size(); ++j) {
        const auto& s = f[j];
        if (s.vertices.size() < 2) continue;
        for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
            auto face = s.vertices;
            face.erase(face.begin() + static_cast<long>(drop));
            auto pos = index.find(face);
            ASSERT_TRUE(pos.has_value());
            EXPECT_LT(*pos, j);
            EXPECT_LE(f[*pos].value, s.value);
        }
    }
}

}  // namespace

TEST(BuildRips, TwoPoints) {
    PointCloud c({{0.0}, {1.0}});
    auto f = build_rips(c, 1, 2.0);
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f[0].value, 0.0);
    EXPECT_EQ(f[1].value, 0.0);
    EXPECT_EQ(f[2].vertices, (std::vector<VertexId>{0, 1}));
    EXPECT_EQ(f[2].value, 1.0);
}

TEST(BuildRips, UnitSquareCensus) {
    // hand count: sides at 1, diagonals and every triangle at sqrt(2)
    const double d = std::sqrt(2.0);
    auto f = build_rips(fixtures::unit_square(), 2, 2.0);
    auto c = census(f);
    EXPECT_EQ((c[{0, 0.0}]), 4);
    EXPECT_EQ((c[{1, 1.0}]), 4);
    EXPECT_EQ((c[{1, d}]), 2);
    EXPECT_EQ((c[{2, d}]), 4);
    EXPECT_EQ(f.size(), 14u);
    expect_face_property(f);
}

TEST(BuildRips, ZeroScaleGivesVertices) {
    std::mt19937_64 rng(1);
    auto f = build_rips(fixtures::random_cloud(rng, 7), 3, 0.0);
    EXPECT_EQ(f.size(), 7u);
    for (const auto& s : f.simplices) EXPECT_EQ(s.dimension(), 0u);
}

TEST(BuildRips, RejectsNegativeScaleAndRaggedPoints) {
    EXPECT_THROW(build_rips(fixtures::unit_square(), 1, -1.0), InvalidArgument);
    EXPECT_THROW(PointCloud({{0.0, 1.0}, {2.0}}), DimensionMismatch);
}

TEST(BuildRips, SortedByValueDimensionLex) {
    std::mt19937_64 rng(2);
    auto f = build_rips(fixtures::random_cloud(rng, 8), 3, kInf);
    for (std::size_t i = 1; i < f.size(); ++i) EXPECT_TRUE(filtration_less(f[i - 1], f[i]));
}

TEST(BuildRips, CountWithUnboundedScale) {
    std::mt19937_64 rng(3);
    for (std::size_t m = 1; m <= 8; ++m)
        for (std::size_t d = 0; d <= 3; ++d) {
            auto f = build_rips(fixtures::random_cloud(rng, m), d, kInf);
            std::size_t expected = 0;
            for (std::size_t i = 0; i <= d; ++i) expected += binomial(m, i + 1);
            EXPECT_EQ(f.size(), expected) << "m=" << m << " d=" << d;
        }
}

TEST(BuildRips, DiametersOnRandomClouds) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        const auto cloud = fixtures::random_cloud(rng, 6);
        auto f = build_rips(cloud, 2, kInf);
        expect_face_property(f);
        std::map<std::vector<VertexId>, double> edge;
        for (const auto& s : f.simplices)
            if (s.dimension() == 1) {
                EXPECT_EQ(s.value, euclidean_distance(cloud[s.vertices[0]], cloud[s.vertices[1]]));
                edge[s.vertices] = s.value;
            }
        for (const auto& s : f.simplices)
            if (s.dimension() == 2) {
                const auto& v = s.vertices;
                const double m = std::max({edge[{v[0], v[1]}], edge[{v[0], v[2]}], edge[{v[1], v[2]}]});
                EXPECT_EQ(s.value, m);
            }
    }
}

TEST(BuildRips, MatchesBruteForceCliqueEnumeration) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto cloud = fixtures::random_cloud(rng, 7);
        const double r = 0.5;
        auto f = build_rips(cloud, 2, r);
        std::size_t expected = 0;
        for (std::size_t size = 1; size <= 3; ++size) expected += oracle::cliques_of_size(cloud, r, size, 1000).size();
        EXPECT_EQ(f.size(), expected);
        for (const auto& s : f.simplices) EXPECT_LE(s.value, r);
    }
}

TEST(BuildRips, DistanceMatrixInput) {
    DistanceMatrix d(3);
    d.set(0, 1, 1.0);
    d.set(1, 2, 2.0);
    d.set(0, 2, 3.0);
    auto f = build_rips(d, 2, 10.0);
    ASSERT_EQ(f.size(), 7u);
    EXPECT_EQ(f.simplices.back().value, 3.0);
    EXPECT_THROW(d.set(0, 1, -1.0), InvalidArgument);
}

TEST(RestrictToSubset, AllIndicesIsIdentity) {
    auto f = build_rips(fixtures::unit_square(), 2, 2.0);
    auto g = restrict_to_subset(f, fixtures::iota_indices(4));
    EXPECT_EQ(g.simplices, f.simplices);
}

TEST(RestrictToSubset, SingleVertex) {
    auto f = build_rips(fixtures::unit_square(), 2, 2.0);
    const std::vector<std::size_t> subset{0};
    auto g = restrict_to_subset(f, subset);
    ASSERT_EQ(g.size(), 1u);
    EXPECT_EQ(g[0].vertices, (std::vector<VertexId>{0}));
    EXPECT_EQ(g[0].value, 0.0);
}

TEST(RestrictToSubset, DiagonalPair) {
    auto f = build_rips(fixtures::unit_square(), 2, 2.0);
    const std::vector<std::size_t> subset{0, 2};
    auto g = restrict_to_subset(f, subset);
    ASSERT_EQ(g.size(), 3u);
    EXPECT_EQ(g[2].vertices, (std::vector<VertexId>{0, 2}));
    EXPECT_EQ(g[2].value, std::sqrt(2.0));
}

TEST(RestrictToSubset, OutOfRange) {
    auto f = build_rips(fixtures::unit_square(), 1, 2.0);
    const std::vector<std::size_t> subset{0, 4};
    EXPECT_THROW(restrict_to_subset(f, subset), IndexOutOfRange);
}

TEST(RestrictToSubset, IsSubfiltrationProperty) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 30; ++trial) {
        const auto cloud = fixtures::random_cloud(rng, 9);
        auto f = build_rips(cloud, 2, 0.6);
        const auto subset = fixtures::random_subset(rng, cloud.size());
        auto g = restrict_to_subset(f, subset);
        ASSERT_TRUE(g.parent_positions.has_value());
        expect_face_property(g);
        for (std::size_t i = 0; i < g.size(); ++i) {
            EXPECT_EQ(f[(*g.parent_positions)[i]], g[i]);
            for (VertexId v : g[i].vertices) EXPECT_TRUE(std::binary_search(subset.begin(), subset.end(), v));
        }
        // same simplices as building directly on the selected points
        EXPECT_EQ(g.size(), build_rips(cloud.select(subset), 2, 0.6).size());
    }
}
