#include <iostream>
#include <limits>

#include <CLI11.hpp>

#include "topoquality/cli.hpp"

namespace {

using topoquality::cli::GenerateConfig;
using topoquality::cli::RunConfig;

void add_dataset_flags(CLI::App& cmd, RunConfig& cfg) {
    cmd.add_option("--dataset", cfg.dataset_path, "CSV point cloud")->required();
    cmd.add_option("--labels", cfg.label_column, "label column (header name or zero-based index)");
    cmd.add_option("--degrees", cfg.degrees, "homology degrees, e.g. 0,1")->delimiter(',');
    cmd.add_option("--rmax", cfg.r_max, "largest filtration scale")->required();
    cmd.add_option("--maxdim", cfg.max_dim, "largest simplex dimension (default: max degree + 1)");
    cmd.add_option("--out-json", cfg.out_json, "JSON output path (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Topological quality of training subsets"};
    app.require_subcommand(1);

    RunConfig persist_cfg;
    auto* persist = app.add_subcommand("persist", "barcodes of a point cloud");
    add_dataset_flags(*persist, persist_cfg);

    RunConfig quality_cfg;
    auto* quality = app.add_subcommand("quality", "TQ_k of a subset against the full dataset");
    add_dataset_flags(*quality, quality_cfg);
    quality->add_option("--subset", quality_cfg.subset_path, "file of zero-based point indices")->required();
    quality->add_option("--out-svg", quality_cfg.out_svg, "persistence-diagram plot of the block functions");

    RunConfig block_cfg;
    auto* block = app.add_subcommand("block-function", "block function of a literal induced matrix");
    block->add_option("--fixture", block_cfg.fixture_path, "JSON with degree, domain, codomain, matrix")->required();
    block->add_option("--out-json", block_cfg.out_json, "JSON output path (default: stdout)");
    block->add_option("--out-svg", block_cfg.out_svg, "persistence-diagram plot");

    GenerateConfig gen_cfg;
    auto* generate = app.add_subcommand("generate", "synthetic labelled planar dataset");
    generate->add_option("--shape", gen_cfg.shape, "two_rings | ring_in_disk");
    generate->add_option("--counts", gen_cfg.counts, "points per class: red,blue")->delimiter(',');
    generate->add_option("--noise", gen_cfg.noise, "Gaussian jitter standard deviation");
    generate->add_option("--seed", gen_cfg.seed, "random seed");
    generate->add_option("--out", gen_cfg.out, "CSV output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return topoquality::cli::kConfigError;
    }

    if (*persist) return topoquality::cli::cmd_persist(persist_cfg);
    if (*quality) return topoquality::cli::cmd_quality(quality_cfg);
    if (*block) return topoquality::cli::cmd_block_function(block_cfg);
    return topoquality::cli::cmd_generate(gen_cfg);
}
