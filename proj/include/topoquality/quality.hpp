#pragma once

// Topological quality TQ_k of a subset X of a dataset Y.

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "topoquality/block_function.hpp"
#include "topoquality/induced.hpp"
#include "topoquality/persistence.hpp"
#include "topoquality/rips.hpp"

namespace topoquality {

/// Number of distinct codomain bars hit by the block function.
inline std::size_t topological_quality(const BlockFunction& bf) {
    std::set<std::size_t> hit;
    for (const auto& j : bf.assignment)
        if (j) hit.insert(*j);
    return hit.size();
}

/// (domain position, codomain position) for every non-empty assignment.
inline std::vector<std::pair<std::size_t, std::size_t>> matched_pairs(const BlockFunction& bf) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < bf.assignment.size(); ++i)
        if (bf.assignment[i]) out.emplace_back(i, *bf.assignment[i]);
    return out;
}

struct DegreeQuality {
    std::size_t degree = 0;
    std::size_t tq = 0;
    BlockFunction block_function;
    std::vector<std::pair<std::size_t, std::size_t>> matched;
};

/// Results for one analysed inclusion: the whole dataset, or one class of it.
struct InclusionQuality {
    std::string label;  // empty for the unsplit dataset
    std::size_t subset_size = 0;
    std::size_t dataset_size = 0;
    std::map<std::size_t, DegreeQuality> degrees;
};

struct QualityReport {
    /// For per-class reports this is the sum over classes.
    std::map<std::size_t, std::size_t> per_degree;
    std::optional<std::map<std::string, std::map<std::size_t, std::size_t>>> per_class;
    std::vector<InclusionQuality> sections;
    std::vector<std::string> warnings;

    std::size_t subset_size = 0;
    std::size_t dataset_size = 0;
    double r_max = 0.0;
    std::size_t max_dim = 0;
    std::vector<std::size_t> degrees;
};

/// Throws SubsetViolation on duplicate or out-of-range indices.
inline void validate_subset(std::span<const std::size_t> subset, std::size_t dataset_size) {
    std::vector<char> seen(dataset_size, 0);
    for (std::size_t i : subset) {
        if (i >= dataset_size)
            throw SubsetViolation("subset index " + std::to_string(i) + " is outside the dataset");
        if (seen[i]) throw SubsetViolation("subset index " + std::to_string(i) + " is repeated");
        seen[i] = 1;
    }
}

inline std::size_t required_max_dim(std::span<const std::size_t> degrees) {
    if (degrees.empty()) throw InvalidArgument("at least one homology degree is required");
    return *std::max_element(degrees.begin(), degrees.end()) + 1;
}

/// Full pipeline for one inclusion: Rips, persistence, induced matrix, block
/// function and TQ_k for every requested degree.
inline InclusionQuality analyze_inclusion(const PointCloud& dataset, std::span<const std::size_t> subset,
                                          std::span<const std::size_t> degrees, double r_max) {
    validate_subset(subset, dataset.size());
    const std::size_t max_dim = required_max_dim(degrees);
    const Filtration full = build_rips(dataset, max_dim, r_max);
    const Filtration part = restrict_to_subset(full, subset);

    InclusionQuality out;
    out.subset_size = subset.size();
    out.dataset_size = dataset.size();
    for (std::size_t k : degrees) {
        const auto codomain = reduce_with_representatives(full, k);
        const auto domain = reduce_with_representatives(part, k);
        auto bf = compute_block_function(induced_matrix(domain, part, codomain, full));
        DegreeQuality dq;
        dq.degree = k;
        dq.tq = topological_quality(bf);
        dq.matched = matched_pairs(bf);
        dq.block_function = std::move(bf);
        out.degrees.emplace(k, std::move(dq));
    }
    return out;
}

namespace detail {

inline QualityReport empty_report(std::size_t subset_size, std::size_t dataset_size,
                                  std::span<const std::size_t> degrees, double r_max) {
    QualityReport r;
    r.subset_size = subset_size;
    r.dataset_size = dataset_size;
    r.r_max = r_max;
    r.max_dim = required_max_dim(degrees);
    r.degrees.assign(degrees.begin(), degrees.end());
    std::sort(r.degrees.begin(), r.degrees.end());
    r.degrees.erase(std::unique(r.degrees.begin(), r.degrees.end()), r.degrees.end());
    return r;
}

}  // namespace detail

/// TQ_k of the subset against the whole (unsplit) dataset.
inline QualityReport subset_quality(const PointCloud& dataset, std::span<const std::size_t> subset,
                                    std::span<const std::size_t> degrees, double r_max) {
    auto report = detail::empty_report(subset.size(), dataset.size(), degrees, r_max);
    auto section = analyze_inclusion(dataset, subset, report.degrees, r_max);
    for (const auto& [k, dq] : section.degrees) report.per_degree[k] = dq.tq;
    report.sections.push_back(std::move(section));
    return report;
}

/// Splits dataset and subset by label and scores every class separately.
inline QualityReport per_class_quality(const PointCloud& dataset, std::span<const std::size_t> subset,
                                       std::span<const std::size_t> degrees, double r_max) {
    if (!dataset.has_labels()) throw MissingLabels("per-class quality needs a labelled dataset");
    validate_subset(subset, dataset.size());
    auto report = detail::empty_report(subset.size(), dataset.size(), degrees, r_max);

    const auto& labels = dataset.labels();
    std::map<std::string, std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < dataset.size(); ++i) members[labels[i]].push_back(i);
    std::vector<char> in_subset(dataset.size(), 0);
    for (std::size_t i : subset) in_subset[i] = 1;

    report.per_class.emplace();
    for (const auto& k : report.degrees) report.per_degree[k] = 0;
    for (const auto& [label, idx] : members) {
        // renumber class points locally; the inclusion is preserved
        std::vector<std::size_t> local_subset;
        for (std::size_t local = 0; local < idx.size(); ++local)
            if (in_subset[idx[local]]) local_subset.push_back(local);
        if (local_subset.empty())
            report.warnings.push_back("class '" + label + "' has no subset points");

        auto section = analyze_inclusion(dataset.select(idx), local_subset, report.degrees, r_max);
        section.label = label;
        auto& row = (*report.per_class)[label];
        for (const auto& [k, dq] : section.degrees) {
            row[k] = dq.tq;
            report.per_degree[k] += dq.tq;
        }
        report.sections.push_back(std::move(section));
    }
    return report;
}

/// `greater` when r1 has better degree-k quality than r2.
inline std::strong_ordering compare_quality(const QualityReport& r1, const QualityReport& r2, std::size_t degree) {
    if (r1.dataset_size != r2.dataset_size || r1.r_max != r2.r_max || r1.per_class.has_value() != r2.per_class.has_value())
        throw IncompatibleReports("reports were computed against different datasets");
    auto a = r1.per_degree.find(degree);
    auto b = r2.per_degree.find(degree);
    if (a == r1.per_degree.end() || b == r2.per_degree.end())
        throw IncompatibleReports("degree " + std::to_string(degree) + " missing from a report");
    return a->second <=> b->second;
}

/// Degree-k comparison of one class of two per-class reports.
inline std::strong_ordering compare_class_quality(const QualityReport& r1, const QualityReport& r2,
                                                  const std::string& label, std::size_t degree) {
    if (!r1.per_class || !r2.per_class) throw IncompatibleReports("reports are not per-class");
    compare_quality(r1, r2, degree);
    auto a = r1.per_class->find(label);
    auto b = r2.per_class->find(label);
    if (a == r1.per_class->end() || b == r2.per_class->end())
        throw IncompatibleReports("class '" + label + "' missing from a report");
    return a->second.at(degree) <=> b->second.at(degree);
}

}  // namespace topoquality
