// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>

#include "oracles.hpp"
#include "x0p/dualgraph.hpp"
#include "x0p/invariants.hpp"
#include "x0p/ssenum.hpp"
#include "x0p/zlinalg.hpp"

using namespace x0p;

namespace {

struct Verdict {
    bool passed = true;
    std::string detail;

    void fail(const std::string& why) {
        if (passed) detail = why;
        passed = false;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<std::uint64_t> sweep_primes() { return oracle::primes_between(5, 499); }

// Shared across criteria 1-3 and 6 so the sweep is paid once.
struct SweepRow {
    std::uint64_t p;
    SupersingularCensus census;
    ArithGraph graph;
    AbGroup phi;
    AbGroup coinvariants;
};

std::vector<SweepRow> g_sweep;
double g_sweep_seconds = 0;

void run_sweep() {
    const auto t0 = Clock::now();
    for (auto p : sweep_primes()) {
        SweepRow row{p, census(p), {}, {}, {}};
        row.graph = build_graph(row.census);
        row.phi = component_group(row.graph);
        row.coinvariants = frobenius_coinvariants(row.graph);
        g_sweep.push_back(std::move(row));
    }
    g_sweep_seconds = seconds_since(t0);
}

std::string P(std::uint64_t p) { return "p=" + std::to_string(p) + ": "; }

Verdict ac1_torsion() {
    Verdict v;
    for (const auto& r : g_sweep) {
        const std::uint64_t n = (r.p - 1) / std::gcd<std::uint64_t>(r.p - 1, 12);
        if (!r.phi.is_finite() || r.phi.torsion_order() != n) v.fail(P(r.p) + "|Phi| = " + r.phi.to_string());
        if (r.phi.invariant_factors.size() > 1) v.fail(P(r.p) + "Phi not cyclic");
    }
    if (g_sweep_seconds >= 60) v.fail("sweep took " + std::to_string(g_sweep_seconds) + " s");
    v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(g_sweep.size()) + " primes in " +
                std::to_string(g_sweep_seconds) + " s";
    return v;
}

Verdict ac2_rank() {
    Verdict v;
    for (const auto& r : g_sweep) {
        const std::int64_t g = static_cast<std::int64_t>(genus_x0(r.p)), h = static_cast<std::int64_t>(r.census.h);
        if (!r.coinvariants.invariant_factors.empty()) v.fail(P(r.p) + "coinvariants have torsion");
        if ((g + h - 1) % 2 != 0 || r.coinvariants.free_rank != static_cast<std::size_t>((g + h - 1) / 2))
            v.fail(P(r.p) + "rank " + std::to_string(r.coinvariants.free_rank));
    }
    return v;
}

Verdict ac3_census_identity() {
    Verdict v;
    for (const auto& r : g_sweep) {
        const auto& c = r.census;
        if (c.total != genus_x0(r.p) + 1) v.fail(P(r.p) + "total != g + 1");
        if (c.total != oracle::genus_riemann_hurwitz(r.p) + 1) v.fail(P(r.p) + "total != Riemann-Hurwitz genus + 1");
        if (c.total != c.h + 2 * c.pairs) v.fail(P(r.p) + "total != h + 2 pairs");
    }
    return v;
}

Verdict ac4_oracles() {
    Verdict v;
    const auto t0 = Clock::now();
    std::size_t hasse_checked = 0, pointcount_checked = 0;
    for (auto p : oracle::primes_between(5, 199)) {
        const SupersingularCensus c = census(p);
        for (const auto& j : c.j_values) {
            const WeierstrassModel e = curve_with_j(j);
            if (!is_ss_hasse(e.a4, e.a6, p)) v.fail(P(p) + "census j fails the Hasse oracle");
            ++hasse_checked;
        }
        if (p > 101) continue;
        for (std::uint64_t a = 0; a < p; ++a) {
            const FpElement j = FpElement::from_unsigned(a, p);
            const bool in_census = std::binary_search(c.j_values.begin(), c.j_values.end(), Fp2Element::embed(j));
            if (in_census != is_ss_pointcount(j, p)) v.fail(P(p) + "point-count oracle disagrees at j=" + std::to_string(a));
            ++pointcount_checked;
        }
    }
    const double secs = seconds_since(t0);
    if (secs >= 120) v.fail("took " + std::to_string(secs) + " s");
    v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(hasse_checked) + " Hasse checks, " +
                std::to_string(pointcount_checked) + " point-count checks in " + std::to_string(secs) + " s";
    return v;
}

Verdict ac5_spot_values() {
    Verdict v;
    const std::map<std::uint64_t, std::pair<long, std::uint64_t>> expected = {
        {11, {5, 1}}, {13, {1, 0}}, {23, {11, 2}}, {37, {3, 1}}};
    for (const auto& [p, nr] : expected) {
        const Pi1Report r = assemble(p);
        if (r.torsion.torsion_order() != nr.first || r.rank != nr.second)
            v.fail(P(p) + "got n=" + r.torsion.torsion_order().get_str() + " r=" + std::to_string(r.rank));
        if (!r.all_passed()) v.fail(P(p) + "report checks failed");
    }
    return v;
}

Verdict ac6_injectivity() {
    Verdict v;
    for (const auto& r : g_sweep) {
        // Torsion-free coinvariants leave the ramified part as the torsion of pi_1, of order n.
        const BigInt ram = r.coinvariants.invariant_factors.empty()
                               ? BigInt(static_cast<unsigned long>(eisenstein_number(r.p)))
                               : BigInt(0);
        if (ram == 0 || !r.phi.is_finite() || r.phi.torsion_order() % ram != 0)
            v.fail(P(r.p) + "ramified part does not divide |Phi|");
        else if (ram != r.phi.torsion_order())
            v.fail(P(r.p) + "ramified part is a proper subgroup of Phi");
    }
    return v;
}

Verdict ac7_properties() {
    Verdict v;
    std::mt19937 rng(20240601);
    for (int trial = 0; trial < 250; ++trial) {
        const IntMatrix a = oracle::random_matrix(rng, 6, -9, 9);
        const SmithForm s = snf(a);
        if (!(s.U * a * s.V == s.D) || !s.D.is_diagonal()) v.fail("SNF: U A V != D");
        const BigInt du = abs(determinant(s.U)), dv = abs(determinant(s.V));
        if (du != 1 || dv != 1) v.fail("SNF: transform not unimodular");
        for (std::size_t i = 0; i + 1 < std::min(a.rows(), a.cols()); ++i) {
            const BigInt& d0 = s.D(i, i);
            const BigInt& d1 = s.D(i + 1, i + 1);
            if (d0 == 0 ? d1 != 0 : !mpz_divisible_p(d1.get_mpz_t(), d0.get_mpz_t())) v.fail("SNF: divisibility chain broken");
        }
    }
    for (const auto& r : g_sweep) {
        if (!(subdivided_critical_group(r.graph) == r.phi)) v.fail(P(r.p) + "subdivision changes Phi");
        const auto& c = r.census;
        const std::size_t generic = c.total - c.has_j0 - c.has_j1728;
        if ((r.p - 1) / 2 != 6 * generic + 3 * c.has_j1728 + 2 * c.has_j0) v.fail(P(r.p) + "lambda-fiber degree identity");
        if (c.has_j0 != (r.p % 3 == 2)) v.fail(P(r.p) + "j=0 congruence");
        if (c.has_j1728 != (r.p % 4 == 3)) v.fail(P(r.p) + "j=1728 congruence");
    }
    return v;
}

Verdict ac8_kodaira() {
    Verdict v;
    const std::map<std::string, std::vector<long>> table = {
        {"I0", {}},    {"II", {}},       {"III", {2}},  {"IV", {3}},   {"I0*", {2, 2}}, {"I1*", {4}},
        {"I2*", {2, 2}}, {"I5*", {4}}, {"IV*", {3}}, {"III*", {2}}, {"II*", {}}};
    for (const auto& [sym, orders] : table)
        for (std::uint64_t q : {4, 5, 7, 9, 25}) {
            long expected = 1;
            for (long d : orders) expected *= std::gcd(d, static_cast<long>(q - 1));
            const AbGroup part = elliptic_ram_part(KodairaType::parse(sym), q);
            if (part.torsion_order() != expected) v.fail(sym + " q=" + std::to_string(q));
        }
    for (unsigned n : {1u, 2u, 7u}) {
        bool rejected = false;
        try {
            elliptic_ram_part(KodairaType{KodairaTag::In, n}, 5);
        } catch (const ReductionError&) {
            rejected = true;
        }
        if (!rejected) v.fail("I" + std::to_string(n) + " accepted");
    }
    return v;
}

Verdict consistency_coprime() {
    Verdict v;
    for (auto p : sweep_primes())
        if (std::gcd<std::uint64_t>(eisenstein_number(p), p) != 1) v.fail(P(p) + "n not coprime to p");
    return v;
}

}  // namespace

int main() {
    run_sweep();
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"AC1 torsion order = (p-1)/gcd(p-1,12), cyclic, 5<=p<=499", ac1_torsion},
        {"AC2 coinvariants free of rank (g+h-1)/2, 5<=p<=499", ac2_rank},
        {"AC3 census total = g+1 = h+2*pairs, 5<=p<=499", ac3_census_identity},
        {"AC4 Hasse oracle (p<=199) and point-count oracle (p<=101)", ac4_oracles},
        {"AC5 spot values p=11,13,23,37", ac5_spot_values},
        {"AC6 ramified part divides |Phi| with equality", ac6_injectivity},
        {"AC7 SNF contract, subdivision invariance, fiber identity, CM congruences", ac7_properties},
        {"AC8 Kodaira ram-part orders and multiplicative rejection", ac8_kodaira},
        {"CONSISTENCY eisenstein number coprime to p", consistency_coprime},
    };
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        Verdict v;
        try {
            v = fn();
        } catch (const std::exception& e) {
            v.fail(std::string("exception: ") + e.what());
        }
        std::printf("%s  %s%s%s\n", v.passed ? "PASS" : "FAIL", name.c_str(), v.detail.empty() ? "" : "  -- ",
                    v.detail.c_str());
        failures += !v.passed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
