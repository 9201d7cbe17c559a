#include "x0p/ssenum.hpp"

#include <algorithm>
#include <string>

namespace x0p {

namespace {

void require_p_at_least_5(std::uint64_t p) {
    if (p < 5) throw FieldError("supersingular enumeration needs p >= 5, got " + std::to_string(p));
    require_odd_prime(p);
}

Fp2Element lift(std::int64_t v, const Fp2Element& like) {
    const std::uint64_t p = like.modulus();
    return {FpElement(v, p), FpElement::from_unsigned(0, p), like.nu()};
}

}  // namespace

PolyFp deuring_polynomial(std::uint64_t p) {
    require_p_at_least_5(p);
    const unsigned long m = static_cast<unsigned long>((p - 1) / 2);
    std::vector<std::uint64_t> c(m + 1);
    BigInt binom;
    for (unsigned long i = 0; i <= m; ++i) {
        mpz_bin_uiui(binom.get_mpz_t(), m, i);
        c[i] = FpElement::from_big(binom * binom, p).value();
    }
    return {std::move(c), p};
}

Fp2Element lambda_to_j(const Fp2Element& lambda) {
    const Fp2Element one = lift(1, lambda);
    if (lambda.is_zero() || lambda == one) throw FieldError("degenerate Legendre parameter (lambda in {0, 1})");
    const Fp2Element q = lambda * lambda - lambda + one;
    const Fp2Element l1 = lambda - one;
    return lift(256, lambda) * q * q * q / (lambda * lambda * l1 * l1);
}

SupersingularCensus census(std::uint64_t p) {
    const PolyFp hp = deuring_polynomial(p);
    const std::vector<Fp2Element> lambdas = roots_in_fp2(hp);
    if (static_cast<long>(lambdas.size()) != hp.degree())
        throw CensusError("Deuring polynomial does not split into distinct roots over F_p^2 for p = " +
                          std::to_string(p));

    SupersingularCensus c;
    c.p = p;
    for (const auto& l : lambdas) c.j_values.push_back(lambda_to_j(l));
    std::sort(c.j_values.begin(), c.j_values.end());
    c.j_values.erase(std::unique(c.j_values.begin(), c.j_values.end()), c.j_values.end());

    std::size_t outside = 0;
    for (const auto& j : c.j_values) {
        const Fp2Element conj = fp2_frobenius(j);
        if (conj == j) {
            ++c.h;
        } else {
            ++outside;
            if (!std::binary_search(c.j_values.begin(), c.j_values.end(), conj))
                throw CensusError("census is not closed under Frobenius for p = " + std::to_string(p));
        }
        if (j.is_zero()) c.has_j0 = true;
        if (j == lift(1728, j)) c.has_j1728 = true;
    }
    if (outside % 2 != 0) throw CensusError("odd number of non-F_p supersingular j-invariants");
    c.pairs = outside / 2;
    c.total = c.j_values.size();
    if (c.total != c.h + 2 * c.pairs) throw CensusError("census violates total = h + 2 * pairs");
    return c;
}

WeierstrassModel curve_with_j(const Fp2Element& j) {
    const Fp2Element zero = lift(0, j), one = lift(1, j), c1728 = lift(1728, j);
    if (j.is_zero()) return {zero, one};
    if (j == c1728) return {one, zero};
    const Fp2Element k = j / (c1728 - j);
    return {lift(3, j) * k, lift(2, j) * k};
}

Fp2Element j_invariant(const WeierstrassModel& e) {
    const Fp2Element a3 = lift(4, e.a4) * e.a4 * e.a4 * e.a4;
    const Fp2Element disc = a3 + lift(27, e.a6) * e.a6 * e.a6;
    if (disc.is_zero()) throw FieldError("singular Weierstrass model");
    return lift(1728, e.a4) * a3 / disc;
}

bool is_ss_hasse(const Fp2Element& a4, const Fp2Element& a6, std::uint64_t p) {
    require_p_at_least_5(p);
    if (a4.modulus() != p || a6.modulus() != p) throw FieldError("coefficients do not live over F_p^2");
    j_invariant({a4, a6});  // rejects singular curves

    // Coefficient of x^(p-1) in (x^3 + a4 x + a6)^m: multinomial terms with
    // i + k + l = m and 3i + k = 2m, i.e. k = 2m - 3i, l = 2i - m.
    const std::uint64_t m = (p - 1) / 2;
    std::vector<FpElement> fact(m + 1, FpElement::from_unsigned(1, p));
    for (std::uint64_t i = 1; i <= m; ++i) fact[i] = fact[i - 1] * FpElement::from_unsigned(i, p);

    Fp2Element sum = lift(0, a4);
    for (std::uint64_t i = (m + 1) / 2; 3 * i <= 2 * m; ++i) {
        const std::uint64_t k = 2 * m - 3 * i, l = 2 * i - m;
        const FpElement multinomial = fact[m] / (fact[i] * fact[k] * fact[l]);
        sum = sum + Fp2Element(multinomial, FpElement::from_unsigned(0, p), a4.nu()) * a4.pow(k) * a6.pow(l);
    }
    return sum.is_zero();
}

std::int64_t frobenius_trace(const FpElement& a4, const FpElement& a6) {
    const std::uint64_t p = a4.modulus();
    std::vector<signed char> chi(p, -1);
    chi[0] = 0;
    for (std::uint64_t y = 1; y < p; ++y) chi[(y * y) % p] = 1;
    std::int64_t s = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        const FpElement fx = FpElement::from_unsigned(x, p);
        s += chi[(fx * fx * fx + a4 * fx + a6).value()];
    }
    return -s;
}

bool is_ss_pointcount(const FpElement& j, std::uint64_t p) {
    require_p_at_least_5(p);
    if (j.modulus() != p) throw FieldError("j does not live in F_p");
    const WeierstrassModel e = curve_with_j(Fp2Element::embed(j));
    return frobenius_trace(e.a4.a(), e.a6.a()) == 0;
}

}  // namespace x0p
