#include "x0p/cli.hpp"

#include <atomic>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

namespace x0p::cli {

namespace fs = std::filesystem;

void validate(const RunConfig& cfg) {
    if (cfg.jobs == 0) throw ConfigError("--jobs must be at least 1");
    if (cfg.mode == Mode::Single) {
        if (cfg.prime > cfg.max_prime)
            throw ConfigError("prime " + std::to_string(cfg.prime) + " exceeds the safety limit " +
                              std::to_string(cfg.max_prime));
        return;
    }
    if (cfg.p_min < 2 || cfg.p_min > cfg.p_max)
        throw ConfigError("range bounds must satisfy 2 <= MIN <= MAX");
    if (cfg.p_max > cfg.max_prime)
        throw ConfigError("range maximum " + std::to_string(cfg.p_max) + " exceeds the safety limit " +
                          std::to_string(cfg.max_prime));
}

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw ConfigError("unknown format '" + s + "'");
}

// ---------------------------------------------------------------------------
// Census cache

nlohmann::json census_to_json(const SupersingularCensus& c) {
    nlohmann::json js = nlohmann::json::array();
    for (const auto& j : c.j_values) js.push_back({j.a().value(), j.b().value()});
    const std::uint64_t nu = c.j_values.empty() ? 0 : c.j_values.front().nu().value();
    return {{"format_version", kCensusCacheVersion},
            {"p", c.p},
            {"nonresidue", nu},
            {"j_values", js},
            {"total", c.total},
            {"h", c.h},
            {"pairs", c.pairs},
            {"has_j0", c.has_j0},
            {"has_j1728", c.has_j1728}};
}

SupersingularCensus census_from_json(const nlohmann::json& j) {
    if (!j.is_object() || j.value("format_version", -1) != kCensusCacheVersion)
        throw std::invalid_argument("census cache version mismatch");
    SupersingularCensus c;
    c.p = j.at("p").get<std::uint64_t>();
    require_odd_prime(c.p);
    const FpElement nu = quad_nonresidue(c.p);
    if (j.at("nonresidue").get<std::uint64_t>() != nu.value())
        throw std::invalid_argument("census cache uses a different nonresidue");
    for (const auto& v : j.at("j_values")) {
        const auto a = v.at(0).get<std::uint64_t>(), b = v.at(1).get<std::uint64_t>();
        if (a >= c.p || b >= c.p) throw std::invalid_argument("census cache entry out of range");
        c.j_values.emplace_back(FpElement::from_unsigned(a, c.p), FpElement::from_unsigned(b, c.p), nu);
    }
    c.total = j.at("total").get<std::size_t>();
    c.h = j.at("h").get<std::size_t>();
    c.pairs = j.at("pairs").get<std::size_t>();
    c.has_j0 = j.at("has_j0").get<bool>();
    c.has_j1728 = j.at("has_j1728").get<bool>();
    if (c.total != c.j_values.size() || c.total != c.h + 2 * c.pairs)
        throw std::invalid_argument("census cache is internally inconsistent");
    return c;
}

namespace {

fs::path cache_file(const fs::path& dir, std::uint64_t p) { return dir / ("census_" + std::to_string(p) + ".json"); }

std::optional<SupersingularCensus> read_cache(const fs::path& file, std::uint64_t p) {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    try {
        SupersingularCensus c = census_from_json(nlohmann::json::parse(in));
        if (c.p != p) return std::nullopt;
        return c;
    } catch (const std::exception&) {
        return std::nullopt;  // stale or corrupt: recompute
    }
}

void write_cache(const fs::path& file, const SupersingularCensus& c) {
    fs::create_directories(file.parent_path());
    const fs::path tmp = file.string() + ".tmp";
    {
        std::ofstream out(tmp);
        out << census_to_json(c).dump() << "\n";
    }
    fs::rename(tmp, file);
}

}  // namespace

SupersingularCensus cached_census(std::uint64_t p, const std::optional<fs::path>& cache_dir) {
    if (!cache_dir) return census(p);
    const fs::path file = cache_file(*cache_dir, p);
    if (auto c = read_cache(file, p)) return *c;
    SupersingularCensus c = census(p);
    write_cache(file, c);
    return c;
}

Pi1Report build_report(std::uint64_t p, const std::optional<fs::path>& cache_dir) {
    if (!is_prime(p)) throw FieldError(std::to_string(p) + " is not prime");
    if (p < 5) return assemble(p);
    return assemble_from_census(cached_census(p, cache_dir));
}

// ---------------------------------------------------------------------------
// Rendering

std::string render_text(const Pi1Report& r) {
    std::ostringstream os;
    os << "X_0(" << r.p << ") over Q_" << r.p << "\n";
    os << "  genus g              " << r.genus << "\n";
    os << "  supersingular points " << r.total << " (h = " << r.h << " over F_p, " << r.pairs
       << " conjugate pairs)\n";
    os << "  eisenstein number n  " << r.eisenstein_number << "\n";
    os << "  component group      " << r.torsion << "\n";
    os << "  coinvariants         " << r.coinvariants << "\n";
    os << "  rank r               " << r.rank << "\n";
    os << "  " << exact_sequence_line(r) << "\n";
    os << "  checks:";
    for (const auto& c : r.checks) os << " " << c.name << "=" << (c.passed ? "pass" : "FAIL");
    os << "\n";
    return os.str();
}

std::string csv_header() { return "p,genus,eisenstein,h,pairs,rank,phi_invariants,checks_passed"; }

std::string csv_row(const Pi1Report& r) {
    std::ostringstream os;
    os << r.p << "," << r.genus << "," << r.eisenstein_number << "," << r.h << "," << r.pairs << "," << r.rank << ",";
    for (std::size_t i = 0; i < r.torsion.invariant_factors.size(); ++i)
        os << (i ? ";" : "") << r.torsion.invariant_factors[i];
    os << "," << (r.all_passed() ? "true" : "false");
    return os.str();
}

namespace {

std::string failed_check_names(const Pi1Report& r) {
    std::string s;
    for (const auto& c : r.checks)
        if (!c.passed) s += (s.empty() ? "" : ",") + c.name;
    return s;
}

struct Outcome {
    std::uint64_t p = 0;
    std::optional<Pi1Report> report;
    std::string error;
};

std::vector<Outcome> sweep(const std::vector<std::uint64_t>& primes, const RunConfig& cfg) {
    std::vector<Outcome> results(primes.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < primes.size(); i = next++) {
            results[i].p = primes[i];
            try {
                results[i].report = build_report(primes[i], cfg.cache_dir);
            } catch (const std::exception& e) {
                results[i].error = e.what();
            }
        }
    };
    const unsigned n_workers = std::min<std::size_t>(cfg.jobs, std::max<std::size_t>(primes.size(), 1));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < n_workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return results;
}

}  // namespace

int run_single(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        validate(cfg);
        if (!is_prime(cfg.prime)) {
            err << "error: " << cfg.prime << " is not prime\n";
            return 2;
        }
        const Pi1Report r = build_report(cfg.prime, cfg.cache_dir);
        switch (cfg.format) {
            case Format::Json: out << report_to_json(r, cfg.emit_graph).dump(2) << "\n"; break;
            case Format::Csv: out << csv_header() << "\n" << csv_row(r) << "\n"; break;
            case Format::Text:
                out << render_text(r);
                if (cfg.emit_graph && r.graph) out << graph_to_json(*r.graph).dump(2) << "\n";
                break;
        }
        if (!r.all_passed()) {
            err << "error: p = " << r.p << " failed checks: " << failed_check_names(r) << "\n";
            return 1;
        }
        return 0;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: p = " << cfg.prime << ": " << e.what() << "\n";
        return 1;
    }
}

int run_range(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        validate(cfg);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = cfg.p_min; p <= cfg.p_max; ++p)
        if (is_prime(p)) primes.push_back(p);
    const std::vector<Outcome> results = sweep(primes, cfg);

    std::vector<std::string> failures;
    for (const auto& o : results) {
        if (!o.report)
            failures.push_back("p=" + std::to_string(o.p) + " (" + o.error + ")");
        else if (!o.report->all_passed())
            failures.push_back("p=" + std::to_string(o.p) + " (" + failed_check_names(*o.report) + ")");
    }

    std::ostream& summary_stream = cfg.format == Format::Text ? out : err;
    switch (cfg.format) {
        case Format::Csv:
            out << csv_header() << "\n";
            for (const auto& o : results)
                if (o.report) out << csv_row(*o.report) << "\n";
            break;
        case Format::Json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& o : results)
                if (o.report) arr.push_back(report_to_json(*o.report, cfg.emit_graph));
            out << arr.dump(2) << "\n";
            break;
        }
        case Format::Text:
            out << std::setw(6) << "p" << std::setw(7) << "genus" << std::setw(7) << "n" << std::setw(5) << "h"
                << std::setw(7) << "pairs" << std::setw(6) << "r" << "  " << std::left << std::setw(12) << "phi"
                << "checks" << std::right << "\n";
            for (const auto& o : results) {
                if (!o.report) {
                    out << std::setw(6) << o.p << "  error: " << o.error << "\n";
                    continue;
                }
                const Pi1Report& r = *o.report;
                out << std::setw(6) << r.p << std::setw(7) << r.genus << std::setw(7) << r.eisenstein_number
                    << std::setw(5) << r.h << std::setw(7) << r.pairs << std::setw(6) << r.rank << "  " << std::left
                    << std::setw(12) << r.torsion.to_string() << (r.all_passed() ? "ok" : "FAIL") << std::right
                    << "\n";
            }
            break;
    }

    if (failures.empty()) {
        summary_stream << results.size() << " primes, all checks passed\n";
        return 0;
    }
    summary_stream << results.size() << " primes, " << failures.size() << " failed:";
    for (const auto& f : failures) summary_stream << " " << f;
    summary_stream << "\n";
    return 1;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return cfg.mode == Mode::Single ? run_single(cfg, out, err) : run_range(cfg, out, err);
}

}  // namespace x0p::cli
