#include "x0p/ff.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <random>

namespace x0p {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + p - b; }

std::uint64_t powmod_u(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) r = mulmod(r, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
    }
    return r;
}

void check_same(std::uint64_t p, std::uint64_t q) {
    if (p != q) throw FieldError("operands live in different prime fields");
}

// Smallest nonresidue without the primality check; p is already validated.
std::uint64_t smallest_nonresidue(std::uint64_t p) {
    for (std::uint64_t n = 2; n < p; ++n)
        if (powmod_u(n, (p - 1) / 2, p) == p - 1) return n;
    throw FieldError("no quadratic nonresidue found");
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

void require_odd_prime(std::uint64_t p) {
    if (p == 2) throw FieldError("p = 2 is not supported at the field layer");
    if (p > std::numeric_limits<std::uint32_t>::max()) throw FieldError("modulus exceeds 32 bits");
    if (!is_prime(p)) throw FieldError("modulus " + std::to_string(p) + " is not prime");
}

// ---------------------------------------------------------------------------
// F_p

FpElement::FpElement(std::int64_t value, std::uint64_t p) : p_(p) {
    if (p == 0) throw FieldError("zero modulus");
    auto sp = static_cast<std::int64_t>(p);
    std::int64_t r = value % sp;
    if (r < 0) r += sp;
    value_ = static_cast<std::uint64_t>(r);
}

FpElement FpElement::from_unsigned(std::uint64_t value, std::uint64_t p) {
    FpElement x;
    x.p_ = p;
    x.value_ = value % p;
    return x;
}

FpElement FpElement::from_big(const BigInt& value, std::uint64_t p) {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(p));
    return from_unsigned(r.get_ui(), p);
}

FpElement FpElement::operator+(const FpElement& o) const {
    check_same(p_, o.p_);
    return from_unsigned(addmod(value_, o.value_, p_), p_);
}

FpElement FpElement::operator-(const FpElement& o) const {
    check_same(p_, o.p_);
    return from_unsigned(submod(value_, o.value_, p_), p_);
}

FpElement FpElement::operator*(const FpElement& o) const {
    check_same(p_, o.p_);
    return from_unsigned(mulmod(value_, o.value_, p_), p_);
}

FpElement FpElement::operator-() const { return from_unsigned(submod(0, value_, p_), p_); }

FpElement FpElement::pow(std::uint64_t e) const { return from_unsigned(powmod_u(value_, e, p_), p_); }

FpElement FpElement::inverse() const {
    if (value_ == 0) throw FieldError("inverse of zero");
    return pow(p_ - 2);
}

int FpElement::legendre() const {
    if (value_ == 0) return 0;
    return pow((p_ - 1) / 2).value() == 1 ? 1 : -1;
}

std::ostream& operator<<(std::ostream& os, const FpElement& x) { return os << x.value(); }

FpElement quad_nonresidue(std::uint64_t p) {
    require_odd_prime(p);
    return FpElement::from_unsigned(smallest_nonresidue(p), p);
}

FpElement sqrt_fp(const FpElement& x) {
    const std::uint64_t p = x.modulus();
    if (x.is_zero()) return x;
    if (x.legendre() != 1) throw FieldError("square root of a nonresidue");
    std::uint64_t q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    FpElement z = FpElement::from_unsigned(smallest_nonresidue(p), p);
    FpElement c = z.pow(q);
    FpElement r = x.pow((q + 1) / 2);
    FpElement t = x.pow(q);
    unsigned m = s;
    const FpElement one = FpElement::from_unsigned(1, p);
    while (t != one) {
        unsigned i = 0;
        FpElement tt = t;
        while (tt != one) {
            tt = tt * tt;
            ++i;
        }
        FpElement b = c;
        for (unsigned k = 0; k + i + 1 < m; ++k) b = b * b;
        r = r * b;
        c = b * b;
        t = t * c;
        m = i;
    }
    return r;
}

// ---------------------------------------------------------------------------
// F_p^2

Fp2Element::Fp2Element(const FpElement& a, const FpElement& b, const FpElement& nu) : a_(a), b_(b), nu_(nu) {
    check_same(a.modulus(), b.modulus());
    check_same(a.modulus(), nu.modulus());
}

Fp2Element Fp2Element::embed(const FpElement& a) {
    const std::uint64_t p = a.modulus();
    return {a, FpElement::from_unsigned(0, p), FpElement::from_unsigned(smallest_nonresidue(p), p)};
}

Fp2Element Fp2Element::from_ints(std::int64_t a, std::int64_t b, std::uint64_t p) {
    require_odd_prime(p);
    return {FpElement(a, p), FpElement(b, p), FpElement::from_unsigned(smallest_nonresidue(p), p)};
}

Fp2Element Fp2Element::operator+(const Fp2Element& o) const { return {a_ + o.a_, b_ + o.b_, nu_}; }

Fp2Element Fp2Element::operator-(const Fp2Element& o) const { return {a_ - o.a_, b_ - o.b_, nu_}; }

Fp2Element Fp2Element::operator*(const Fp2Element& o) const {
    return {a_ * o.a_ + nu_ * b_ * o.b_, a_ * o.b_ + b_ * o.a_, nu_};
}

Fp2Element Fp2Element::operator-() const { return {-a_, -b_, nu_}; }

FpElement Fp2Element::norm() const { return a_ * a_ - nu_ * b_ * b_; }

Fp2Element Fp2Element::inverse() const {
    if (is_zero()) throw FieldError("inverse of zero in F_p^2");
    // 1/(a + b s) = (a - b s) / (a^2 - nu b^2)
    FpElement n = norm().inverse();
    return {a_ * n, -b_ * n, nu_};
}

Fp2Element Fp2Element::pow(const BigInt& e) const {
    if (e < 0) return inverse().pow(BigInt(-e));
    Fp2Element r(FpElement::from_unsigned(1, modulus()), FpElement::from_unsigned(0, modulus()), nu_);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = r * r;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = r * *this;
    }
    return r;
}

bool operator<(const Fp2Element& x, const Fp2Element& y) {
    if (x.a_.value() != y.a_.value()) return x.a_.value() < y.a_.value();
    return x.b_.value() < y.b_.value();
}

std::ostream& operator<<(std::ostream& os, const Fp2Element& x) {
    if (x.in_base_field()) return os << x.a();
    return os << x.a() << "+" << x.b() << "*sqrt(" << x.nu() << ")";
}

Fp2Element fp2_frobenius(const Fp2Element& x) { return {x.a(), -x.b(), x.nu()}; }

// ---------------------------------------------------------------------------
// F_p[x]

PolyFp::PolyFp(std::vector<std::uint64_t> coeffs, std::uint64_t p) : c_(std::move(coeffs)), p_(p) {
    for (auto& c : c_) c %= p_;
    trim();
}

PolyFp PolyFp::from_signed(const std::vector<std::int64_t>& coeffs, std::uint64_t p) {
    std::vector<std::uint64_t> c;
    c.reserve(coeffs.size());
    for (auto v : coeffs) c.push_back(FpElement(v, p).value());
    return {std::move(c), p};
}

PolyFp PolyFp::constant(const FpElement& c) { return {{c.value()}, c.modulus()}; }

PolyFp PolyFp::x(std::uint64_t p) { return monomial(1, p); }

PolyFp PolyFp::monomial(std::size_t n, std::uint64_t p) {
    std::vector<std::uint64_t> c(n + 1, 0);
    c[n] = 1;
    return {std::move(c), p};
}

void PolyFp::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpElement PolyFp::coeff(std::size_t i) const {
    return FpElement::from_unsigned(i < c_.size() ? c_[i] : 0, p_);
}

FpElement PolyFp::eval(const FpElement& t) const {
    check_same(p_, t.modulus());
    std::uint64_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = addmod(mulmod(acc, t.value(), p_), c_[i], p_);
    return FpElement::from_unsigned(acc, p_);
}

Fp2Element PolyFp::eval(const Fp2Element& t) const {
    const FpElement zero = FpElement::from_unsigned(0, p_);
    Fp2Element acc(zero, zero, t.nu());
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + Fp2Element(coeff(i), zero, t.nu());
    return acc;
}

PolyFp PolyFp::derivative() const {
    std::vector<std::uint64_t> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(mulmod(c_[i], i % p_, p_));
    return {std::move(d), p_};
}

PolyFp PolyFp::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

PolyFp PolyFp::scaled(const FpElement& c) const {
    check_same(p_, c.modulus());
    std::vector<std::uint64_t> r(c_);
    for (auto& v : r) v = mulmod(v, c.value(), p_);
    return {std::move(r), p_};
}

PolyFp PolyFp::operator+(const PolyFp& o) const {
    check_same(p_, o.p_);
    std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = addmod(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0, p_);
    return {std::move(r), p_};
}

PolyFp PolyFp::operator-(const PolyFp& o) const {
    check_same(p_, o.p_);
    std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = submod(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0, p_);
    return {std::move(r), p_};
}

PolyFp PolyFp::operator*(const PolyFp& o) const {
    check_same(p_, o.p_);
    if (is_zero() || o.is_zero()) return PolyFp(p_);
    // Products are < 2^64, so 128-bit accumulators absorb any desk-scale degree.
    std::vector<unsigned __int128> acc(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const std::uint64_t a = c_[i];
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) acc[i + j] += static_cast<unsigned __int128>(a * o.c_[j]);
    }
    std::vector<std::uint64_t> r(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) r[k] = static_cast<std::uint64_t>(acc[k] % p_);
    return {std::move(r), p_};
}

std::ostream& operator<<(std::ostream& os, const PolyFp& f) {
    if (f.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t i = f.raw().size(); i-- > 0;) {
        std::uint64_t c = f.raw()[i];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (c != 1 || i == 0) os << c;
        if (i > 0) os << (c != 1 ? "*" : "") << "x";
        if (i > 1) os << "^" << i;
    }
    return os;
}

PolyDivision divmod(const PolyFp& a, const PolyFp& b) {
    check_same(a.modulus(), b.modulus());
    if (b.is_zero()) throw FieldError("polynomial division by zero");
    const std::uint64_t p = a.modulus();
    if (a.degree() < b.degree()) return {PolyFp(p), a};
    const std::size_t db = static_cast<std::size_t>(b.degree());
    const std::uint64_t lead_inv = b.leading().inverse().value();
    // Subtraction of q * b is done as addition of q * (p - b_j); entries are
    // reduced lazily when they become the leading term.
    std::vector<std::uint64_t> neg_b(db + 1);
    for (std::size_t j = 0; j <= db; ++j) neg_b[j] = submod(0, b.raw()[j], p);
    std::vector<unsigned __int128> rem(a.raw().begin(), a.raw().end());
    std::vector<std::uint64_t> quot(rem.size() - db, 0);
    for (std::size_t k = rem.size(); k-- > db;) {
        const std::uint64_t lead = static_cast<std::uint64_t>(rem[k] % p);
        const std::uint64_t q = mulmod(lead, lead_inv, p);
        quot[k - db] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j < db; ++j) rem[k - db + j] += static_cast<unsigned __int128>(q * neg_b[j]);
    }
    std::vector<std::uint64_t> r(db);
    for (std::size_t j = 0; j < db; ++j) r[j] = static_cast<std::uint64_t>(rem[j] % p);
    return {PolyFp(std::move(quot), p), PolyFp(std::move(r), p)};
}

PolyFp operator%(const PolyFp& a, const PolyFp& b) { return divmod(a, b).remainder; }

PolyFp operator/(const PolyFp& a, const PolyFp& b) { return divmod(a, b).quotient; }

PolyFp gcd(const PolyFp& a, const PolyFp& b) {
    PolyFp x = a, y = b;
    while (!y.is_zero()) {
        PolyFp r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

PolyFp poly_powmod(const PolyFp& g, const BigInt& e, const PolyFp& f) {
    if (f.degree() < 1) throw FieldError("poly_powmod needs a modulus of degree >= 1");
    if (e < 0) throw FieldError("negative exponent");
    const std::uint64_t p = f.modulus();
    PolyFp base = g % f;
    PolyFp r = PolyFp::constant(FpElement::from_unsigned(1, p));
    const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = (r * r) % f;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * base) % f;
    }
    return r;
}

namespace {

// gcd(f, x^(p^k) - x) for k = 1, 2.
PolyFp frobenius_gcd(const PolyFp& f, unsigned k) {
    const std::uint64_t p = f.modulus();
    if (f.degree() < 1) return PolyFp::constant(FpElement::from_unsigned(1, p));
    BigInt q = p;
    if (k == 2) q *= p;
    PolyFp xq = poly_powmod(PolyFp::x(p), q, f);
    return gcd(f, xq - PolyFp::x(p));
}

std::vector<FpElement> exhaustive_roots(const PolyFp& f) {
    std::vector<FpElement> roots;
    const std::uint64_t p = f.modulus();
    if (f.degree() < 1) return roots;
    for (std::uint64_t t = 0; t < p; ++t) {
        FpElement x = FpElement::from_unsigned(t, p);
        if (f.eval(x).is_zero()) {
            roots.push_back(x);
            if (static_cast<long>(roots.size()) == f.degree()) break;
        }
    }
    return roots;
}

// Roots of an irreducible monic quadratic x^2 + b x + c in F_p^2.
void solve_irreducible_quadratic(const PolyFp& q, const FpElement& nu, std::vector<Fp2Element>& out) {
    const std::uint64_t p = q.modulus();
    const FpElement b = q.coeff(1), c = q.coeff(0);
    const FpElement two = FpElement::from_unsigned(2, p), four = FpElement::from_unsigned(4, p);
    const FpElement disc = b * b - four * c;
    // disc is a nonresidue, so disc / nu is a square: sqrt(disc) = s * sqrt(nu).
    const FpElement s = sqrt_fp(disc / nu);
    const FpElement half = two.inverse();
    out.emplace_back(-b * half, s * half, nu);
    out.emplace_back(-b * half, -s * half, nu);
}

// Splits a product of distinct monic irreducible quadratics.
void split_quadratics(const PolyFp& q, const FpElement& nu, std::mt19937_64& rng, std::vector<Fp2Element>& out) {
    const std::uint64_t p = q.modulus();
    if (q.degree() <= 0) return;
    if (q.degree() == 2) {
        solve_irreducible_quadratic(q.monic(), nu, out);
        return;
    }
    const BigInt exponent = (BigInt(p) * p - 1) / 2;
    const PolyFp one = PolyFp::constant(FpElement::from_unsigned(1, p));
    // Deterministic shifts x + c first, then random polynomials.
    for (std::uint64_t attempt = 0;; ++attempt) {
        PolyFp a(p);
        if (attempt < p) {
            a = PolyFp({attempt, 1}, p);
        } else {
            std::vector<std::uint64_t> c(static_cast<std::size_t>(q.degree()));
            for (auto& v : c) v = rng() % p;
            a = PolyFp(std::move(c), p);
            if (a.degree() < 1) continue;
        }
        PolyFp d = gcd(q, poly_powmod(a, exponent, q) - one);
        if (d.degree() > 0 && d.degree() < q.degree()) {
            split_quadratics(d, nu, rng, out);
            split_quadratics(q / d, nu, rng, out);
            return;
        }
    }
}

}  // namespace

DistinctRoots distinct_roots(const PolyFp& f) {
    if (f.is_zero()) throw FieldError("distinct_roots of the zero polynomial");
    require_odd_prime(f.modulus());
    DistinctRoots r;
    r.roots_in_fp = exhaustive_roots(frobenius_gcd(f, 1));
    const long quad_total = frobenius_gcd(f, 2).degree();
    r.quadratic_root_count = static_cast<std::size_t>(quad_total) - r.roots_in_fp.size();
    return r;
}

std::vector<Fp2Element> roots_in_fp2(const PolyFp& f) {
    if (f.is_zero()) throw FieldError("roots_in_fp2 of the zero polynomial");
    const std::uint64_t p = f.modulus();
    require_odd_prime(p);
    const FpElement nu = FpElement::from_unsigned(smallest_nonresidue(p), p);
    const PolyFp linear = frobenius_gcd(f, 1);
    const PolyFp quadratic = frobenius_gcd(f, 2) / linear;

    std::vector<Fp2Element> roots;
    for (const auto& r : exhaustive_roots(linear)) roots.emplace_back(r, FpElement::from_unsigned(0, p), nu);
    std::mt19937_64 rng(0x5eed);
    split_quadratics(quadratic.monic(), nu, rng, roots);
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace x0p
