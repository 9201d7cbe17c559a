#pragma once

// Exact arithmetic in F_p, F_p^2 = F_p[sqrt(nu)] and dense polynomials over F_p.
//
// Elements carry their modulus so they can be passed around as plain values.
// Moduli are odd primes below 2^32, which keeps every product inside 64 bits.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace x0p {

using BigInt = mpz_class;

struct FieldError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Trial-division primality test; intended for desk-scale moduli.
bool is_prime(std::uint64_t n);

/// Throws FieldError unless p is an odd prime below 2^32.
void require_odd_prime(std::uint64_t p);

class FpElement {
public:
    FpElement() = default;
    /// Reduces any signed integer into [0, p).
    FpElement(std::int64_t value, std::uint64_t p);
    static FpElement from_unsigned(std::uint64_t value, std::uint64_t p);
    static FpElement from_big(const BigInt& value, std::uint64_t p);

    std::uint64_t value() const { return value_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return value_ == 0; }

    FpElement operator+(const FpElement& o) const;
    FpElement operator-(const FpElement& o) const;
    FpElement operator*(const FpElement& o) const;
    FpElement operator/(const FpElement& o) const { return *this * o.inverse(); }
    FpElement operator-() const;
    FpElement& operator+=(const FpElement& o) { return *this = *this + o; }
    FpElement& operator-=(const FpElement& o) { return *this = *this - o; }
    FpElement& operator*=(const FpElement& o) { return *this = *this * o; }

    FpElement pow(std::uint64_t e) const;
    /// Throws FieldError on zero.
    FpElement inverse() const;
    /// Euler criterion: 1 for nonzero squares, -1 for nonsquares, 0 for zero.
    int legendre() const;

    friend bool operator==(const FpElement&, const FpElement&) = default;

private:
    std::uint64_t value_ = 0;
    std::uint64_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const FpElement& x);

/// Smallest positive nu with nu^((p-1)/2) = -1 mod p.
FpElement quad_nonresidue(std::uint64_t p);

/// Square root in F_p (Tonelli-Shanks). Throws FieldError for nonsquares.
FpElement sqrt_fp(const FpElement& x);

/// a + b*sqrt(nu) where nu is the smallest quadratic nonresidue mod p.
class Fp2Element {
public:
    Fp2Element() = default;
    Fp2Element(const FpElement& a, const FpElement& b, const FpElement& nu);
    /// Embeds an F_p element using the canonical nonresidue for its modulus.
    static Fp2Element embed(const FpElement& a);
    static Fp2Element from_ints(std::int64_t a, std::int64_t b, std::uint64_t p);

    const FpElement& a() const { return a_; }
    const FpElement& b() const { return b_; }
    const FpElement& nu() const { return nu_; }
    std::uint64_t modulus() const { return a_.modulus(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool in_base_field() const { return b_.is_zero(); }

    Fp2Element operator+(const Fp2Element& o) const;
    Fp2Element operator-(const Fp2Element& o) const;
    Fp2Element operator*(const Fp2Element& o) const;
    Fp2Element operator/(const Fp2Element& o) const { return *this * o.inverse(); }
    Fp2Element operator-() const;

    Fp2Element pow(const BigInt& e) const;
    Fp2Element pow(std::uint64_t e) const { return pow(BigInt(static_cast<unsigned long>(e))); }
    Fp2Element inverse() const;
    FpElement norm() const;

    /// Canonical total order on (a, b), used for deduplication and sorting.
    friend bool operator<(const Fp2Element& x, const Fp2Element& y);
    friend bool operator==(const Fp2Element& x, const Fp2Element& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

private:
    FpElement a_, b_, nu_;
};

std::ostream& operator<<(std::ostream& os, const Fp2Element& x);

/// x^p, i.e. (a, b) -> (a, -b).
Fp2Element fp2_frobenius(const Fp2Element& x);

/// Dense polynomial over F_p, lowest degree first, no trailing zeros.
class PolyFp {
public:
    explicit PolyFp(std::uint64_t p) : p_(p) {}
    PolyFp(std::vector<std::uint64_t> coeffs, std::uint64_t p);
    static PolyFp from_signed(const std::vector<std::int64_t>& coeffs, std::uint64_t p);
    static PolyFp constant(const FpElement& c);
    static PolyFp x(std::uint64_t p);
    /// x^n
    static PolyFp monomial(std::size_t n, std::uint64_t p);

    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    FpElement coeff(std::size_t i) const;
    FpElement leading() const { return coeff(c_.size() - 1); }
    const std::vector<std::uint64_t>& raw() const { return c_; }

    FpElement eval(const FpElement& t) const;
    Fp2Element eval(const Fp2Element& t) const;
    PolyFp derivative() const;
    PolyFp monic() const;

    PolyFp operator+(const PolyFp& o) const;
    PolyFp operator-(const PolyFp& o) const;
    PolyFp operator*(const PolyFp& o) const;
    PolyFp scaled(const FpElement& c) const;

    friend bool operator==(const PolyFp&, const PolyFp&) = default;

private:
    void trim();

    std::vector<std::uint64_t> c_;
    std::uint64_t p_;
};

std::ostream& operator<<(std::ostream& os, const PolyFp& f);

struct PolyDivision {
    PolyFp quotient;
    PolyFp remainder;
};

/// Throws FieldError when dividing by zero.
PolyDivision divmod(const PolyFp& a, const PolyFp& b);
PolyFp operator%(const PolyFp& a, const PolyFp& b);
PolyFp operator/(const PolyFp& a, const PolyFp& b);

/// Monic gcd; gcd(0, 0) = 0.
PolyFp gcd(const PolyFp& a, const PolyFp& b);

/// g^e mod f by square-and-multiply. Throws FieldError if deg f < 1.
PolyFp poly_powmod(const PolyFp& g, const BigInt& e, const PolyFp& f);

struct DistinctRoots {
    std::vector<FpElement> roots_in_fp;  // ascending
    std::size_t quadratic_root_count = 0;
};

/// Distinct roots of f in F_p and the number of distinct roots in F_p^2 \ F_p.
DistinctRoots distinct_roots(const PolyFp& f);

/// Every distinct root of f lying in F_p^2 (including F_p), sorted canonically.
/// The quadratic part is split by equal-degree factorization.
std::vector<Fp2Element> roots_in_fp2(const PolyFp& f);

}  // namespace x0p
