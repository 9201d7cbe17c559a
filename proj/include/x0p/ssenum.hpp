#pragma once

// Supersingular j-invariants in characteristic p >= 5.
//
// The census takes the roots of the Deuring polynomial on the Legendre line and
// maps them to j. Two independent criteria (Hasse invariant, naive point count)
// are exposed so callers can audit the census.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "x0p/ff.hpp"

namespace x0p {

struct CensusError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SupersingularCensus {
    std::uint64_t p = 0;
    std::vector<Fp2Element> j_values;  // distinct, canonical (a, b) order
    std::size_t total = 0;
    std::size_t h = 0;      // j in F_p
    std::size_t pairs = 0;  // conjugate pairs in F_p^2 \ F_p
    bool has_j0 = false;
    bool has_j1728 = false;
};

/// Short Weierstrass model y^2 = x^3 + a4 x + a6.
struct WeierstrassModel {
    Fp2Element a4, a6;
};

/// H_p(t) = sum_{i=0}^{m} C(m, i)^2 t^i, m = (p - 1)/2. Throws FieldError for p < 5.
PolyFp deuring_polynomial(std::uint64_t p);

/// j = 256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2). Throws FieldError for l in {0, 1}.
Fp2Element lambda_to_j(const Fp2Element& lambda);

SupersingularCensus census(std::uint64_t p);

/// A curve with the given j-invariant: j = 0 -> (0, 1), j = 1728 -> (1, 0),
/// otherwise (3k, 2k) with k = j / (1728 - j).
WeierstrassModel curve_with_j(const Fp2Element& j);

/// j-invariant of y^2 = x^3 + a4 x + a6. Throws FieldError on singular input.
Fp2Element j_invariant(const WeierstrassModel& e);

/// Hasse invariant test: the x^(p-1) coefficient of (x^3 + a4 x + a6)^((p-1)/2) vanishes.
bool is_ss_hasse(const Fp2Element& a4, const Fp2Element& a6, std::uint64_t p);

/// Counts #E(F_p) for a curve with invariant j and tests a_p = p + 1 - #E = 0.
bool is_ss_pointcount(const FpElement& j, std::uint64_t p);

/// Trace of Frobenius of y^2 = x^3 + a4 x + a6 over F_p (a4, a6 in F_p).
std::int64_t frobenius_trace(const FpElement& a4, const FpElement& a6);

}  // namespace x0p
