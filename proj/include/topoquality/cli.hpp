#pragma once

// Command implementations behind the `topoquality` executable.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "topoquality/block_function.hpp"
#include "topoquality/io/csv.hpp"
#include "topoquality/io/generate.hpp"
#include "topoquality/io/json.hpp"
#include "topoquality/io/svg.hpp"
#include "topoquality/persistence.hpp"
#include "topoquality/quality.hpp"
#include "topoquality/rips.hpp"

namespace topoquality::cli {

enum ExitCode : int {
    kOk = 0,
    kParseError = 2,
    kConfigError = 3,
    kSubsetViolation = 4,
    kInternalInconsistency = 5,
};

struct RunConfig {
    std::string dataset_path;
    std::optional<std::string> label_column;
    std::string subset_path;
    std::vector<std::size_t> degrees;
    double r_max = std::numeric_limits<double>::quiet_NaN();
    std::optional<std::size_t> max_dim;
    std::string out_json;  // empty: stdout
    std::string out_svg;   // empty: no plot
    std::string fixture_path;
};

struct GenerateConfig {
    std::string shape = "two_rings";
    std::vector<std::size_t> counts{40, 40};
    double noise = 0.0;
    std::uint64_t seed = 0;
    std::string out;  // empty: stdout
};

class ConfigError : public Error {
public:
    using Error::Error;
};

/// Checks degrees and scale settings; returns the max simplex dimension to build.
inline std::size_t check_config(const RunConfig& cfg) {
    if (cfg.degrees.empty()) throw ConfigError("no homology degrees requested");
    if (!(cfg.r_max > 0.0)) throw ConfigError("--rmax must be > 0");
    const std::size_t needed = required_max_dim(cfg.degrees);
    if (cfg.max_dim && *cfg.max_dim < needed)
        throw ConfigError("--maxdim " + std::to_string(*cfg.max_dim) + " is too small for degree " +
                          std::to_string(needed - 1));
    return cfg.max_dim.value_or(needed);
}

namespace detail {

inline void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + path + "'");
    out << text;
}

/// Maps library errors onto the process exit codes.
template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        fn();
        return kOk;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const nlohmann::json::exception& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const SubsetViolation& e) {
        err << "subset violation: " << e.what() << '\n';
        return kSubsetViolation;
    } catch (const SolveInconsistency& e) {
        err << "internal inconsistency: " << e.what() << '\n';
        return kInternalInconsistency;
    } catch (const SupportViolation& e) {
        err << "internal inconsistency: " << e.what() << '\n';
        return kInternalInconsistency;
    } catch (const Error& e) {
        err << "configuration error: " << e.what() << '\n';
        return kConfigError;
    }
}

}  // namespace detail

/// Barcodes of the dataset, one JSON object per requested degree.
inline int cmd_persist(const RunConfig& cfg, std::ostream& err = std::cerr) {
    return detail::guarded(err, [&] {
        const std::size_t max_dim = check_config(cfg);
        const auto cloud = io::read_point_cloud_file(cfg.dataset_path, cfg.label_column);
        const auto filtration = build_rips(cloud, max_dim, cfg.r_max);
        io::Json out = io::Json::array();
        auto degrees = cfg.degrees;
        std::sort(degrees.begin(), degrees.end());
        degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
        for (std::size_t k : degrees) out.push_back(io::to_json(reduce_with_representatives(filtration, k).barcode));
        detail::write_text(cfg.out_json, out.dump(2) + "\n");
    });
}

/// TQ_k report of a subset; per class when a label column is given.
inline int cmd_quality(const RunConfig& cfg, std::ostream& err = std::cerr) {
    return detail::guarded(err, [&] {
        check_config(cfg);
        if (cfg.subset_path.empty()) throw ConfigError("--subset is required");
        const auto cloud = io::read_point_cloud_file(cfg.dataset_path, cfg.label_column);
        const auto subset = io::read_subset_file(cfg.subset_path);
        const auto report = cloud.has_labels() ? per_class_quality(cloud, subset, cfg.degrees, cfg.r_max)
                                               : subset_quality(cloud, subset, cfg.degrees, cfg.r_max);
        for (const auto& w : report.warnings) err << "warning: " << w << '\n';
        detail::write_text(cfg.out_json, io::to_json(report).dump(2) + "\n");
        if (!cfg.out_svg.empty()) detail::write_text(cfg.out_svg, io::render_svg(io::report_panels(report)));
    });
}

/// Block function of a literal induced matrix given as JSON.
inline int cmd_block_function(const RunConfig& cfg, std::ostream& err = std::cerr) {
    return detail::guarded(err, [&] {
        if (cfg.fixture_path.empty()) throw ConfigError("--fixture is required");
        std::ifstream in(cfg.fixture_path);
        if (!in) throw ParseError("cannot open '" + cfg.fixture_path + "'", 0);
        const auto ind = io::induced_from_json(io::Json::parse(in));
        const auto bf = compute_block_function(ind);
        detail::write_text(cfg.out_json, io::to_json(bf).dump(2) + "\n");
        if (!cfg.out_svg.empty())
            detail::write_text(cfg.out_svg, io::render_svg({{"fixture, H" + std::to_string(bf.degree), bf}}));
    });
}

inline int cmd_generate(const GenerateConfig& cfg, std::ostream& err = std::cerr) {
    return detail::guarded(err, [&] {
        if (cfg.counts.size() != 2) throw ConfigError("--counts takes two values: red,blue");
        io::GenerateOptions opt;
        opt.shape = io::parse_shape(cfg.shape);
        opt.red = cfg.counts[0];
        opt.blue = cfg.counts[1];
        opt.noise = cfg.noise;
        opt.seed = cfg.seed;
        std::ostringstream csv;
        io::write_csv(csv, io::generate(opt));
        detail::write_text(cfg.out, csv.str());
    });
}

}  // namespace topoquality::cli
