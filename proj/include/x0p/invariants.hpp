#pragma once

// Closed-form invariants of X_0(p), the component-group computation for
// elliptic curves with good or additive reduction, and the assembled report.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "x0p/dualgraph.hpp"
#include "x0p/ssenum.hpp"
#include "x0p/zlinalg.hpp"

namespace x0p {

struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ReductionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// numerator((p - 1)/12) = (p - 1)/gcd(p - 1, 12).
std::uint64_t eisenstein_number(std::uint64_t p);

/// Genus of X_0(p) by the residue of p mod 12; 0 for p in {2, 3}.
std::uint64_t genus_x0(std::uint64_t p);

/// (g + h - 1)/2. Throws ConsistencyError when g + h - 1 is odd or negative.
std::uint64_t rank_r(std::int64_t g, std::int64_t h);

enum class KodairaTag { I0, In, II, III, IV, I0Star, InStar, IVStar, IIIStar, IIStar };

struct KodairaType {
    KodairaTag tag = KodairaTag::I0;
    unsigned n = 0;  // only meaningful for In and In*

    /// Throws ReductionError for multiplicative types In and for In* with n = 0.
    static KodairaType make(KodairaTag tag, unsigned n = 0);
    /// Parses "I0", "II", "III", "IV", "I0*", "I3*", "IV*", "III*", "II*".
    static KodairaType parse(const std::string& symbol);
    std::string symbol() const;
};

/// Component group of the Neron model for a good or additive Kodaira type.
AbGroup kodaira_component_group(const KodairaType& t);

/// Phi(t)[q - 1]: the prime-to-p ramified part when Galois acts trivially on Phi.
/// Rejects multiplicative types and q that is not a prime power.
AbGroup elliptic_ram_part(const KodairaType& t, std::uint64_t q);

struct NamedCheck {
    std::string name;
    bool passed = false;
};

struct Pi1Report {
    std::uint64_t p = 0;
    std::uint64_t genus = 0;
    std::uint64_t eisenstein_number = 0;
    std::size_t total = 0;
    std::size_t h = 0;
    std::size_t pairs = 0;
    std::uint64_t rank = 0;
    AbGroup torsion;
    AbGroup coinvariants;
    std::vector<NamedCheck> checks;
    std::optional<ArithGraph> graph;

    bool all_passed() const;
    bool check(const std::string& name) const;
};

/// Runs the full pipeline for p. For p in {2, 3} returns the genus-zero report.
/// Throws FieldError for composite p.
Pi1Report assemble(std::uint64_t p);

/// Same as assemble, reusing a precomputed census (p >= 5).
Pi1Report assemble_from_census(const SupersingularCensus& census);

/// Canonical JSON: sorted keys, integers only.
nlohmann::json report_to_json(const Pi1Report& r, bool with_graph = false);

nlohmann::json group_to_json(const AbGroup& g);

/// "0 -> Z/n -> pi_1^ab(X_0(p)/Q_p)^geo -> Zhat^r -> 0" rendered with Unicode symbols.
std::string exact_sequence_line(const Pi1Report& r);

}  // namespace x0p
