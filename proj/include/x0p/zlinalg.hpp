#pragma once

// Exact integer matrix algebra: Smith normal form with unimodular transforms,
// cokernels and torsion of finitely generated abelian groups.

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace x0p {

using BigInt = mpz_class;

struct LinalgError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, 0) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);
    /// Row-major nested initializer, e.g. {{2, 4}, {6, 8}}.
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const std::vector<BigInt>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigInt& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix transpose() const;
    bool is_diagonal() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k);
    /// col[dst] += k * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k);
    void negate_row(std::size_t r);

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> e_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Exact determinant (fraction-free Bareiss). Throws LinalgError on non-square input.
BigInt determinant(const IntMatrix& m);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

/// Inverse of a unimodular matrix. Throws LinalgError when det != +-1.
IntMatrix inverse_unimodular(const IntMatrix& m);

/// Z^free_rank + Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... and every d_i >= 2.
struct AbGroup {
    std::size_t free_rank = 0;
    std::vector<BigInt> invariant_factors;

    /// Normalizes arbitrary cyclic orders into invariant-factor form (0 adds free rank, 1 is dropped).
    static AbGroup from_cyclic_orders(std::vector<BigInt> orders, std::size_t extra_free_rank = 0);

    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    bool is_finite() const { return free_rank == 0; }
    bool is_cyclic() const { return invariant_factors.size() + free_rank <= 1; }
    /// Order of the torsion subgroup.
    BigInt torsion_order() const;
    std::string to_string() const;

    friend bool operator==(const AbGroup&, const AbGroup&) = default;
};

std::ostream& operator<<(std::ostream& os, const AbGroup& g);

struct SmithForm {
    IntMatrix U;  // rows x rows, unimodular
    IntMatrix D;  // rows x cols, diagonal, d_i | d_{i+1}, d_i >= 0
    IntMatrix V;  // cols x cols, unimodular
    IntMatrix V_inverse;
};

/// U * A * V = D. Pivot is the smallest nonzero |entry| of the remaining block,
/// ties broken by row-major position.
SmithForm snf(const IntMatrix& a);

/// Z^rows / A Z^cols.
AbGroup cokernel(const IntMatrix& a);

/// Basis of {x in Z^cols : A x = 0}, one basis vector per row.
IntMatrix kernel_basis(const IntMatrix& a);

/// G[m] = sum_i Z/gcd(d_i, m); the free part is ignored. Throws LinalgError for m < 1.
AbGroup torsion_part(const AbGroup& g, const BigInt& m);

}  // namespace x0p
