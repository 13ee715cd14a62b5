#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "topoquality/io/generate.hpp"
#include "topoquality/quality.hpp"

using namespace topoquality;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

QualityReport report_with(std::size_t degree, std::size_t tq) {
    QualityReport r;
    r.dataset_size = 10;
    r.r_max = 2.0;
    r.per_degree[degree] = tq;
    return r;
}

PointCloud two_rings() {
    io::GenerateOptions opt;
    opt.shape = io::Shape::two_rings;
    opt.seed = 7;
    return io::generate(opt);
}

std::vector<std::size_t> class_indices(const PointCloud& c, const std::string& label) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c.labels()[i] == label) out.push_back(i);
    return out;
}

}  // namespace

TEST(TopologicalQuality, Examples) {
    EXPECT_EQ(topological_quality(compute_block_function(fixtures::example_f())), 2u);
    EXPECT_EQ(topological_quality(compute_block_function(fixtures::example_g())), 1u);
    auto zero = InducedMatrix::from_unsorted(1, fixtures::example_domain(), fixtures::example_codomain(),
                                             {{0, 0, 0}, {0, 0, 0}});
    EXPECT_EQ(topological_quality(compute_block_function(zero)), 0u);
}

TEST(TopologicalQuality, MatchedPairsRealiseCount) {
    auto bf = compute_block_function(fixtures::example_f());
    auto pairs = matched_pairs(bf);
    EXPECT_EQ(pairs.size(), 3u);
    std::set<std::size_t> targets;
    for (auto [i, j] : pairs) targets.insert(j);
    EXPECT_EQ(targets.size(), topological_quality(bf));
}

TEST(CompareQuality, Orderings) {
    EXPECT_TRUE(compare_quality(report_with(1, 2), report_with(1, 1), 1) > 0);
    EXPECT_TRUE(compare_quality(report_with(1, 4), report_with(1, 3), 1) > 0);
    EXPECT_TRUE(compare_quality(report_with(1, 3), report_with(1, 3), 1) == 0);
    EXPECT_TRUE(compare_quality(report_with(1, 0), report_with(1, 1), 1) < 0);
}

TEST(CompareQuality, Incompatible) {
    auto other = report_with(1, 2);
    other.dataset_size = 11;
    EXPECT_THROW(compare_quality(report_with(1, 2), other, 1), IncompatibleReports);
    EXPECT_THROW(compare_quality(report_with(1, 2), report_with(1, 2), 0), IncompatibleReports);
}

TEST(ValidateSubset, DuplicatesAndRange) {
    const std::vector<std::size_t> dup{0, 1, 1};
    const std::vector<std::size_t> out{0, 5};
    EXPECT_THROW(validate_subset(dup, 5), SubsetViolation);
    EXPECT_THROW(validate_subset(out, 5), SubsetViolation);
    EXPECT_NO_THROW(validate_subset(std::vector<std::size_t>{4, 0}, 5));
}

TEST(PerClassQuality, MissingLabels) {
    const std::vector<std::size_t> subset{0};
    const std::vector<std::size_t> degrees{0};
    EXPECT_THROW(per_class_quality(fixtures::unit_square(), subset, degrees, 2.0), MissingLabels);
}

TEST(PerClassQuality, FullSubsetReachesBarcodeSize) {
    const auto cloud = two_rings();
    const std::vector<std::size_t> degrees{0, 1};
    auto report = per_class_quality(cloud, fixtures::iota_indices(cloud.size()), degrees, kInf);
    ASSERT_TRUE(report.per_class.has_value());
    for (const auto& label : {"red", "blue"}) {
        const auto part = cloud.select(class_indices(cloud, label));
        const auto f = build_rips(part, 2, kInf);
        for (std::size_t k : degrees)
            EXPECT_EQ(report.per_class->at(label).at(k), reduce_with_representatives(f, k).barcode.size())
                << label << " H" << k;
        EXPECT_EQ(report.per_class->at(label).at(0), 40u);
    }
    EXPECT_EQ(report.per_degree.at(0), cloud.size());
    EXPECT_TRUE(report.warnings.empty());
}

TEST(PerClassQuality, DenseRingsVersusArcs) {
    const auto cloud = two_rings();
    const auto red = class_indices(cloud, "red");
    const auto blue = class_indices(cloud, "blue");

    std::vector<std::size_t> dense, arcs;
    for (std::size_t i = 0; i < 40; i += 2) {
        dense.push_back(red[i]);
        dense.push_back(blue[i]);
    }
    for (std::size_t i = 0; i < 8; ++i) {  // a quarter of each ring
        arcs.push_back(red[i]);
        arcs.push_back(blue[i]);
    }
    std::sort(dense.begin(), dense.end());
    std::sort(arcs.begin(), arcs.end());

    // oracle: the red arc has no 1-cycle at any critical scale
    {
        std::vector<std::size_t> red_arc(red.begin(), red.begin() + 8);
        const auto arc = cloud.select(red_arc);
        std::set<double> scales;
        for (std::size_t a = 0; a < arc.size(); ++a)
            for (std::size_t b = a + 1; b < arc.size(); ++b) scales.insert(euclidean_distance(arc[a], arc[b]));
        for (double r : scales) EXPECT_EQ(oracle::betti_at_scale(arc, r, 1, 20000), 0u) << "r=" << r;
    }

    const std::vector<std::size_t> degrees{0, 1};
    auto good = per_class_quality(cloud, dense, degrees, kInf);
    auto poor = per_class_quality(cloud, arcs, degrees, kInf);
    EXPECT_EQ(good.per_class->at("red").at(1), 1u);
    EXPECT_EQ(poor.per_class->at("red").at(1), 0u);
    EXPECT_TRUE(compare_class_quality(good, poor, "red", 1) > 0);
    EXPECT_EQ(good.per_class->at("red").at(0), 20u);
    EXPECT_EQ(poor.per_class->at("blue").at(0), 8u);
}

TEST(PerClassQuality, EmptyClassSubsetWarns) {
    const auto cloud = two_rings();
    const auto red = class_indices(cloud, "red");
    const std::vector<std::size_t> degrees{0, 1};
    auto report = per_class_quality(cloud, red, degrees, kInf);
    EXPECT_EQ(report.per_class->at("blue").at(0), 0u);
    EXPECT_EQ(report.per_class->at("blue").at(1), 0u);
    ASSERT_EQ(report.warnings.size(), 1u);
    EXPECT_NE(report.warnings[0].find("blue"), std::string::npos);
}

TEST(SubsetQuality, InvariantsOnRandomInclusions) {
    std::mt19937_64 rng(41);
    const std::vector<std::size_t> degrees{0, 1};
    for (int trial = 0; trial < 25; ++trial) {
        const auto cloud = fixtures::random_cloud(rng, 4 + trial % 10);
        const auto subset = fixtures::random_subset(rng, cloud.size());
        auto report = subset_quality(cloud, subset, degrees, kInf);
        EXPECT_EQ(report.per_degree.at(0), subset.size());
        for (const auto& [k, dq] : report.sections[0].degrees)
            EXPECT_LE(dq.tq, std::min(dq.block_function.domain.size(), dq.block_function.codomain.size()));

        // reindex the points of Y
        std::vector<std::size_t> perm = fixtures::iota_indices(cloud.size());
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::size_t> inverse(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) inverse[perm[i]] = i;
        std::vector<std::size_t> moved_subset;
        for (std::size_t i : subset) moved_subset.push_back(inverse[i]);
        auto moved = subset_quality(cloud.select(perm), moved_subset, degrees, kInf);
        EXPECT_EQ(moved.per_degree, report.per_degree);

        auto identity = subset_quality(cloud, fixtures::iota_indices(cloud.size()), degrees, kInf);
        for (const auto& [k, dq] : identity.sections[0].degrees) EXPECT_EQ(dq.tq, dq.block_function.codomain.size());
    }
}
