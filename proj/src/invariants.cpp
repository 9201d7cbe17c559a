#include "x0p/invariants.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace x0p {

std::uint64_t eisenstein_number(std::uint64_t p) {
    if (p < 2) throw FieldError("eisenstein_number needs a prime");
    return (p - 1) / std::gcd<std::uint64_t>(p - 1, 12);
}

std::uint64_t genus_x0(std::uint64_t p) {
    if (p == 2 || p == 3) return 0;
    switch (p % 12) {
        case 1: return (p - 13) / 12;
        case 5: return (p - 5) / 12;
        case 7: return (p - 7) / 12;
        case 11: return (p + 1) / 12;
        default: throw FieldError("genus_x0 needs a prime, got " + std::to_string(p));
    }
}

std::uint64_t rank_r(std::int64_t g, std::int64_t h) {
    const std::int64_t t = g + h - 1;
    if (t < 0) throw ConsistencyError("rank: g + h - 1 is negative");
    if (t % 2 != 0) throw ConsistencyError("rank: g + h - 1 is odd (census and genus disagree)");
    return static_cast<std::uint64_t>(t / 2);
}

// ---------------------------------------------------------------------------
// Kodaira types

KodairaType KodairaType::make(KodairaTag tag, unsigned n) {
    if (tag == KodairaTag::In) throw ReductionError("multiplicative reduction type I" + std::to_string(n) + " is not supported");
    if (tag == KodairaTag::InStar && n == 0) tag = KodairaTag::I0Star;
    return {tag, (tag == KodairaTag::InStar) ? n : 0};
}

KodairaType KodairaType::parse(const std::string& s) {
    if (s == "I0") return make(KodairaTag::I0);
    if (s == "II") return make(KodairaTag::II);
    if (s == "III") return make(KodairaTag::III);
    if (s == "IV") return make(KodairaTag::IV);
    if (s == "IV*") return make(KodairaTag::IVStar);
    if (s == "III*") return make(KodairaTag::IIIStar);
    if (s == "II*") return make(KodairaTag::IIStar);
    if (s.size() >= 2 && s[0] == 'I' && std::isdigit(static_cast<unsigned char>(s[1]))) {
        const bool star = s.back() == '*';
        const std::string digits = s.substr(1, s.size() - 1 - (star ? 1 : 0));
        if (digits.find_first_not_of("0123456789") != std::string::npos) throw ReductionError("bad Kodaira symbol " + s);
        const unsigned n = static_cast<unsigned>(std::stoul(digits));
        if (star) return make(KodairaTag::InStar, n);
        return make(n == 0 ? KodairaTag::I0 : KodairaTag::In, n);
    }
    throw ReductionError("bad Kodaira symbol " + s);
}

std::string KodairaType::symbol() const {
    switch (tag) {
        case KodairaTag::I0: return "I0";
        case KodairaTag::In: return "I" + std::to_string(n);
        case KodairaTag::II: return "II";
        case KodairaTag::III: return "III";
        case KodairaTag::IV: return "IV";
        case KodairaTag::I0Star: return "I0*";
        case KodairaTag::InStar: return "I" + std::to_string(n) + "*";
        case KodairaTag::IVStar: return "IV*";
        case KodairaTag::IIIStar: return "III*";
        case KodairaTag::IIStar: return "II*";
    }
    return "?";
}

// Standard table of Neron component groups (Silverman, Advanced Topics, IV.9).
AbGroup kodaira_component_group(const KodairaType& t) {
    switch (t.tag) {
        case KodairaTag::I0:
        case KodairaTag::II:
        case KodairaTag::IIStar: return {};
        case KodairaTag::III:
        case KodairaTag::IIIStar: return AbGroup::from_cyclic_orders({2});
        case KodairaTag::IV:
        case KodairaTag::IVStar: return AbGroup::from_cyclic_orders({3});
        case KodairaTag::I0Star: return AbGroup::from_cyclic_orders({2, 2});
        case KodairaTag::InStar:
            return t.n % 2 == 0 ? AbGroup::from_cyclic_orders({2, 2}) : AbGroup::from_cyclic_orders({4});
        case KodairaTag::In: break;
    }
    throw ReductionError("multiplicative reduction type " + t.symbol() + " is not supported");
}

namespace {

bool is_prime_power(std::uint64_t q) {
    if (q < 2) return false;
    std::uint64_t d = 2;
    while (d * d <= q && q % d != 0) ++d;
    if (q % d != 0) return true;  // q prime
    while (q % d == 0) q /= d;
    return q == 1;
}

}  // namespace

AbGroup elliptic_ram_part(const KodairaType& t, std::uint64_t q) {
    if (t.tag == KodairaTag::In) throw ReductionError("multiplicative reduction type " + t.symbol() + " is not supported");
    if (!is_prime_power(q)) throw ReductionError("residue field size " + std::to_string(q) + " is not a prime power");
    return torsion_part(kodaira_component_group(t), BigInt(static_cast<unsigned long>(q - 1)));
}

// ---------------------------------------------------------------------------
// Report

bool Pi1Report::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

bool Pi1Report::check(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return c.passed;
    throw std::out_of_range("no check named " + name);
}

namespace {

Pi1Report trivial_report(std::uint64_t p) {
    // p in {2, 3}: X_0(p) has genus 0 and a single supersingular point (j = 0 = 1728).
    Pi1Report r;
    r.p = p;
    r.genus = 0;
    r.eisenstein_number = 1;
    r.total = 1;
    r.h = 1;
    r.pairs = 0;
    r.rank = 0;
    for (const char* name : {"genus_vs_census", "phi_order_vs_eisenstein", "phi_cyclic", "coinvariants_free",
                             "rank_formula", "injectivity_divisibility"})
        r.checks.push_back({name, true});
    return r;
}

}  // namespace

Pi1Report assemble_from_census(const SupersingularCensus& census) {
    const std::uint64_t p = census.p;
    Pi1Report r;
    r.p = p;
    r.genus = genus_x0(p);
    r.eisenstein_number = eisenstein_number(p);
    r.total = census.total;
    r.h = census.h;
    r.pairs = census.pairs;

    const ArithGraph graph = build_graph(census);
    r.torsion = component_group(graph);
    r.coinvariants = frobenius_coinvariants(graph);
    r.graph = graph;

    const BigInt n(static_cast<unsigned long>(r.eisenstein_number));
    bool rank_ok = false;
    try {
        r.rank = rank_r(static_cast<std::int64_t>(r.genus), static_cast<std::int64_t>(r.h));
        rank_ok = r.rank == r.coinvariants.free_rank;
    } catch (const ConsistencyError&) {
        r.rank = r.coinvariants.free_rank;
    }
    const bool coinv_free = r.coinvariants.invariant_factors.empty();

    r.checks = {
        {"genus_vs_census", r.genus + 1 == r.total && r.total == r.h + 2 * r.pairs},
        {"phi_order_vs_eisenstein", r.torsion.is_finite() && r.torsion.torsion_order() == n},
        {"phi_cyclic", r.torsion.is_finite() && r.torsion.invariant_factors.size() <= 1},
        {"coinvariants_free", coinv_free},
        {"rank_formula", rank_ok},
        // With torsion-free coinvariants the torsion of pi_1 is the ramified part, which
        // surjects onto the Shimura covering group Z/n; it must embed into Phi.
        {"injectivity_divisibility",
         coinv_free && r.torsion.is_finite() && r.torsion.torsion_order() % n == 0},
    };
    return r;
}

Pi1Report assemble(std::uint64_t p) {
    if (!is_prime(p)) throw FieldError(std::to_string(p) + " is not prime");
    if (p < 5) return trivial_report(p);
    return assemble_from_census(census(p));
}

nlohmann::json group_to_json(const AbGroup& g) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& d : g.invariant_factors) {
        if (!d.fits_slong_p()) throw std::overflow_error("invariant factor does not fit in 64 bits");
        factors.push_back(d.get_si());
    }
    return {{"free_rank", g.free_rank}, {"invariant_factors", factors}};
}

nlohmann::json report_to_json(const Pi1Report& r, bool with_graph) {
    nlohmann::json checks = nlohmann::json::object();
    for (const auto& c : r.checks) checks[c.name] = c.passed;
    nlohmann::json j = {
        {"p", r.p},
        {"genus", r.genus},
        {"eisenstein_number", r.eisenstein_number},
        {"census", {{"total", r.total}, {"h", r.h}, {"pairs", r.pairs}}},
        {"rank", r.rank},
        {"torsion", group_to_json(r.torsion)},
        {"coinvariants", group_to_json(r.coinvariants)},
        {"checks", checks},
    };
    if (with_graph) j["graph"] = r.graph ? graph_to_json(*r.graph) : nlohmann::json(nullptr);
    return j;
}

namespace {

std::string superscript(std::uint64_t v) {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    const std::string s = std::to_string(v);
    std::string out;
    for (char c : s) out += digits[c - '0'];
    return out;
}

}  // namespace

std::string exact_sequence_line(const Pi1Report& r) {
    std::ostringstream os;
    os << "0 → " << r.torsion.to_string() << " → π₁ᵃᵇ(X₀(" << r.p << ")/Q_" << r.p << ")ᵍᵉᵒ → Ẑ" << superscript(r.rank)
       << " → 0";
    return os.str();
}

}  // namespace x0p
