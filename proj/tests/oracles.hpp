#pragma once

// Test-only reference computations. Each one takes a route that shares no code
// path with the library function it is used to check.

#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "x0p/ff.hpp"
#include "x0p/zlinalg.hpp"

namespace oracle {

using x0p::BigInt;

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = lo; p <= hi; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

/// Set of nonzero squares mod p.
inline std::set<std::uint64_t> squares_mod(std::uint64_t p) {
    std::set<std::uint64_t> s;
    for (std::uint64_t y = 1; y < p; ++y) s.insert(y * y % p);
    return s;
}

/// Row m of Pascal's triangle.
inline std::vector<BigInt> pascal_row(unsigned m) {
    std::vector<BigInt> row{1};
    for (unsigned k = 0; k < m; ++k) {
        std::vector<BigInt> next(row.size() + 1, 0);
        for (std::size_t i = 0; i < row.size(); ++i) {
            next[i] += row[i];
            next[i + 1] += row[i];
        }
        row = std::move(next);
    }
    return row;
}

/// Roots of f (integer coefficients, lowest first) in F_p^2 = F_p[s]/(s^2 - nu),
/// found by evaluating at all p^2 elements. Returns {(a, b)} with b = 0 for F_p roots.
inline std::set<std::pair<std::uint64_t, std::uint64_t>> roots_by_enumeration(const std::vector<std::uint64_t>& f,
                                                                               std::uint64_t p, std::uint64_t nu) {
    std::set<std::pair<std::uint64_t, std::uint64_t>> roots;
    for (std::uint64_t a = 0; a < p; ++a)
        for (std::uint64_t b = 0; b < p; ++b) {
            std::uint64_t ra = 0, rb = 0;
            for (std::size_t i = f.size(); i-- > 0;) {
                // (ra + rb s)(a + b s) + f_i
                std::uint64_t na = (ra * a + nu * (rb * b % p)) % p;
                std::uint64_t nb = (ra * b + rb * a) % p;
                ra = (na + f[i]) % p;
                rb = nb;
            }
            if (ra == 0 && rb == 0) roots.insert({a, b});
        }
    return roots;
}

/// #E(F_p) for y^2 = x^3 + a x + b by scanning all (x, y), plus the point at infinity.
inline std::uint64_t count_points_brute(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t n = 1;
    for (std::uint64_t x = 0; x < p; ++x) {
        const std::uint64_t rhs = (x * x % p * x + a * x + b) % p;
        for (std::uint64_t y = 0; y < p; ++y)
            if (y * y % p == rhs) ++n;
    }
    return n;
}

/// Coefficient of x^(p-1) in (x^3 + a4 x + a6)^((p-1)/2), expanded by repeated
/// polynomial multiplication over F_p^2 (elements as (a, b) pairs).
inline std::pair<std::uint64_t, std::uint64_t> hasse_by_expansion(std::pair<std::uint64_t, std::uint64_t> a4,
                                                                  std::pair<std::uint64_t, std::uint64_t> a6,
                                                                  std::uint64_t p, std::uint64_t nu) {
    using E = std::pair<std::uint64_t, std::uint64_t>;
    auto mul = [&](E x, E y) -> E {
        return {(x.first * y.first + nu * (x.second * y.second % p)) % p, (x.first * y.second + x.second * y.first) % p};
    };
    auto add = [&](E x, E y) -> E { return {(x.first + y.first) % p, (x.second + y.second) % p}; };
    const std::vector<E> cubic = {a6, a4, {0, 0}, {1, 0}};
    std::vector<E> acc = {{1, 0}};
    for (std::uint64_t k = 0; k < (p - 1) / 2; ++k) {
        std::vector<E> next(acc.size() + 3, {0, 0});
        for (std::size_t i = 0; i < acc.size(); ++i)
            for (std::size_t j = 0; j < 4; ++j) next[i + j] = add(next[i + j], mul(acc[i], cubic[j]));
        acc = std::move(next);
    }
    return acc[p - 1];
}

/// Number of reduced primitive positive definite binary quadratic forms of discriminant d < 0.
inline unsigned class_number(long d) {
    unsigned h = 0;
    for (long a = 1; 3 * a * a <= -d; ++a)
        for (long b = -a + 1; b <= a; ++b) {
            const long num = b * b - d;
            if (num % (4 * a) != 0) continue;
            const long c = num / (4 * a);
            if (c < a) continue;
            if (a == c && b < 0) continue;
            if (std::gcd(std::gcd(a, std::labs(b)), c) != 1) continue;
            ++h;
        }
    return h;
}

/// Supersingular j-invariants lying in F_p, from class numbers (p >= 5).
inline unsigned supersingular_fp_count(std::uint64_t p) {
    const long sp = static_cast<long>(p);
    if (p % 4 == 1) return class_number(-4 * sp) / 2;
    if (p % 8 == 7) return class_number(-sp);
    return 2 * class_number(-sp);  // p = 3 mod 8
}

/// Genus of X_0(p) from Riemann-Hurwitz over the j-line: index p + 1, two cusps,
/// nu2 = 1 + (-1/p), nu3 = 1 + (-3/p).
inline std::uint64_t genus_riemann_hurwitz(std::uint64_t p) {
    const auto sq = squares_mod(p);
    const int nu2 = 1 + (sq.count(p - 1) ? 1 : -1);
    const int nu3 = 1 + (sq.count(p - 3) ? 1 : -1);
    mpq_class g = 1 + mpq_class(static_cast<long>(p + 1), 12) - mpq_class(nu2, 4) - mpq_class(nu3, 3) - mpq_class(2, 2);
    g.canonicalize();
    return g.get_num().get_ui();
}

/// Laplace expansion along the first row.
inline BigInt det_cofactor(const x0p::IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    BigInt det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c) == 0) continue;
        x0p::IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != c) minor(i - 1, jj++) = m(i, j);
        BigInt term = m(0, c) * det_cofactor(minor);
        det += (c % 2 == 0) ? term : BigInt(-term);
    }
    return det;
}

inline BigInt entry_gcd(const x0p::IntMatrix& m) {
    BigInt g = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) g = gcd(g, m(i, j));
    return g;
}

inline x0p::IntMatrix random_matrix(std::mt19937& rng, std::size_t max_dim, long lo, long hi) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<long> val(lo, hi);
    x0p::IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = val(rng);
    return m;
}

/// Random unimodular matrix as a product of elementary operations.
inline x0p::IntMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
    x0p::IntMatrix m = x0p::IntMatrix::identity(n);
    if (n < 2) return m;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<long> k(-2, 2);
    for (int step = 0; step < 8; ++step) {
        std::size_t a = idx(rng), b = idx(rng);
        if (a == b) continue;
        m.add_row_multiple(a, b, k(rng));
        if (step % 3 == 0) m.swap_rows(a, b);
    }
    return m;
}

}  // namespace oracle
