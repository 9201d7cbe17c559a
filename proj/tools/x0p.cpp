// x0p: structure of the geometric abelian fundamental group of X_0(p) over Q_p.

#include <iostream>
#include <vector>

#include "CLI11.hpp"

#include "x0p/cli.hpp"

int main(int argc, char** argv) {
    using namespace x0p::cli;

    CLI::App app{"Component group, Frobenius coinvariants and rank for X_0(p) over Q_p"};
    RunConfig cfg;
    std::uint64_t prime = 0;
    std::vector<std::uint64_t> range;
    std::string format = "text";
    std::string cache_dir;

    auto* prime_opt = app.add_option("--prime", prime, "Single prime p");
    auto* range_opt = app.add_option("--range", range, "Inclusive prime range MIN MAX")->expected(2);
    prime_opt->excludes(range_opt);
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_flag("--emit-graph", cfg.emit_graph, "Include the dual graph in the output");
    app.add_option("--cache-dir", cache_dir, "Directory for cached census files");
    app.add_option("--jobs", cfg.jobs, "Worker threads for range sweeps")->check(CLI::PositiveNumber);
    app.add_option("--max-prime", cfg.max_prime, "Safety limit on the largest prime");

    CLI11_PARSE(app, argc, argv);

    if (prime_opt->count() == 0 && range_opt->count() == 0) {
        std::cerr << "error: one of --prime or --range is required\n" << app.help();
        return 2;
    }
    cfg.format = parse_format(format);
    if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
    if (range_opt->count()) {
        cfg.mode = Mode::Range;
        cfg.p_min = range[0];
        cfg.p_max = range[1];
    } else {
        cfg.mode = Mode::Single;
        cfg.prime = prime;
    }
    return run(cfg, std::cout, std::cerr);
}
