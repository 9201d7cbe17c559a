#pragma once

// Front end for single-prime reports and batch sweeps over prime ranges.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "x0p/invariants.hpp"
#include "x0p/ssenum.hpp"

namespace x0p::cli {

inline constexpr int kCensusCacheVersion = 1;

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Mode { Single, Range };
enum class Format { Text, Json, Csv };

struct RunConfig {
    Mode mode = Mode::Single;
    std::uint64_t prime = 0;
    std::uint64_t p_min = 0, p_max = 0;
    Format format = Format::Text;
    bool emit_graph = false;
    std::optional<std::filesystem::path> cache_dir;
    unsigned jobs = 1;
    std::uint64_t max_prime = 10000;
};

/// Throws ConfigError on out-of-range bounds or a zero worker count.
void validate(const RunConfig& cfg);

Format parse_format(const std::string& s);

nlohmann::json census_to_json(const SupersingularCensus& c);
/// Throws std::invalid_argument on schema or version mismatch.
SupersingularCensus census_from_json(const nlohmann::json& j);

/// Reads cache_dir/census_<p>.json when it is present and current; otherwise
/// computes the census and (re)writes the file.
SupersingularCensus cached_census(std::uint64_t p, const std::optional<std::filesystem::path>& cache_dir);

/// assemble(p), routed through the census cache.
Pi1Report build_report(std::uint64_t p, const std::optional<std::filesystem::path>& cache_dir);

std::string render_text(const Pi1Report& r);
std::string csv_header();
std::string csv_row(const Pi1Report& r);

/// Exit status: 0 when every check passes, 1 on check failures, 2 on bad input.
int run_single(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_range(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace x0p::cli
