#include "x0p/zlinalg.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

namespace x0p {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_) throw LinalgError("entry count does not match dimensions");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw LinalgError("ragged matrix initializer");
        for (long v : r) e_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<BigInt>& d) {
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw LinalgError("dimension mismatch in product");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const BigInt& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw LinalgError("dimension mismatch in difference");
    IntMatrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && (*this)(i, j) != 0) return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
        os << "]";
    }
    return os << "]";
}

BigInt determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw LinalgError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && a(s, k) == 0) ++s;
            if (s == n) return 0;
            a.swap_rows(k, s);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = v;
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
    std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && a[piv][c] == 0) ++piv;
        if (piv == m.rows()) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (a[i][c] == 0) continue;
            mpq_class f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw LinalgError("inverse of a non-square matrix");
    const BigInt det = determinant(m);
    if (det != 1 && det != -1) throw LinalgError("matrix is not unimodular");
    const std::size_t n = m.rows();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (a[piv][c] == 0) ++piv;
        std::swap(a[piv], a[c]);
        const mpq_class inv = 1 / a[c][c];
        for (auto& v : a[c]) v *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            const mpq_class f = a[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    IntMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const mpq_class& v = a[i][n + j];
            if (v.get_den() != 1) throw LinalgError("non-integral inverse");
            r(i, j) = v.get_num();
        }
    return r;
}

// ---------------------------------------------------------------------------

AbGroup AbGroup::from_cyclic_orders(std::vector<BigInt> orders, std::size_t extra_free_rank) {
    AbGroup g;
    g.free_rank = extra_free_rank;
    std::vector<BigInt> finite;
    for (auto& o : orders) {
        o = abs(o);
        if (o == 0)
            ++g.free_rank;
        else if (o != 1)
            finite.push_back(o);
    }
    if (!finite.empty()) {
        SmithForm s = snf(IntMatrix::diagonal(finite));
        for (std::size_t i = 0; i < finite.size(); ++i)
            if (s.D(i, i) > 1) g.invariant_factors.push_back(s.D(i, i));
    }
    return g;
}

BigInt AbGroup::torsion_order() const {
    BigInt n = 1;
    for (const auto& d : invariant_factors) n *= d;
    return n;
}

std::string AbGroup::to_string() const {
    std::ostringstream os;
    if (is_trivial()) return "0";
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1) os << "^" << free_rank;
        first = false;
    }
    for (const auto& d : invariant_factors) {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const AbGroup& g) { return os << g.to_string(); }

namespace {

// Smallest nonzero |entry| in the block [t.., t..], ties by row-major order.
std::optional<std::pair<std::size_t, std::size_t>> find_pivot(const IntMatrix& d, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            const mpz_srcptr v = d(i, j).get_mpz_t();
            if (mpz_sgn(v) == 0) continue;
            if (!best || mpz_cmpabs(v, d(best->first, best->second).get_mpz_t()) < 0) {
                best = {i, j};
                if (mpz_cmpabs_ui(v, 1) == 0) return best;
            }
        }
    return best;
}

// Transform tracking is optional; cokernel() only needs the diagonal.
struct Transforms {
    IntMatrix* u = nullptr;
    IntMatrix* v = nullptr;
    IntMatrix* v_inverse = nullptr;
};

// row[dst] += k * row[src], restricted to columns >= from.
void addmul_row(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& k, std::size_t from = 0) {
    for (std::size_t j = from; j < m.cols(); ++j) mpz_addmul(m(dst, j).get_mpz_t(), k.get_mpz_t(), m(src, j).get_mpz_t());
}

void addmul_col(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& k, std::size_t from = 0) {
    for (std::size_t i = from; i < m.rows(); ++i) mpz_addmul(m(i, dst).get_mpz_t(), k.get_mpz_t(), m(i, src).get_mpz_t());
}

void diagonalize(IntMatrix& D, Transforms tr) {
    const std::size_t n = std::min(D.rows(), D.cols());
    BigInt q;
    for (std::size_t t = 0; t < n; ++t) {
        const auto first = find_pivot(D, t);
        if (!first) break;
        std::pair<std::size_t, std::size_t> piv = *first;
        for (;;) {
            D.swap_rows(t, piv.first);
            D.swap_cols(t, piv.second);
            if (tr.u) tr.u->swap_rows(t, piv.first);
            if (tr.v) tr.v->swap_cols(t, piv.second);
            if (tr.v_inverse) tr.v_inverse->swap_rows(t, piv.second);

            bool clean = true;
            for (std::size_t i = t + 1; i < D.rows(); ++i) {
                if (D(i, t) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
                q = -q;
                addmul_row(D, i, t, q, t);
                if (tr.u) addmul_row(*tr.u, i, t, q);
                if (D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < D.cols(); ++j) {
                if (D(t, j) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
                q = -q;
                addmul_col(D, j, t, q, t);
                if (tr.v) addmul_col(*tr.v, j, t, q);
                // V' = V E with E = I + q e_t e_j^T, so V'^-1 = (I - q e_t e_j^T) V^-1.
                if (tr.v_inverse) addmul_row(*tr.v_inverse, t, j, BigInt(-q));
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) {
                piv = *find_pivot(D, t);
                continue;
            }
            // Row and column cleared; enforce divisibility of the remaining block.
            if (mpz_cmpabs_ui(D(t, t).get_mpz_t(), 1) == 0) break;
            std::optional<std::size_t> bad_row;
            for (std::size_t i = t + 1; i < D.rows() && !bad_row; ++i)
                for (std::size_t j = t + 1; j < D.cols(); ++j)
                    if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
                        bad_row = i;
                        break;
                    }
            if (!bad_row) break;
            addmul_row(D, t, *bad_row, 1, t);
            if (tr.u) addmul_row(*tr.u, t, *bad_row, 1);
            piv = {t, t};
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (D(i, i) < 0) {
            D.negate_row(i);
            if (tr.u) tr.u->negate_row(i);
        }
}

}  // namespace

SmithForm snf(const IntMatrix& a) {
    SmithForm s{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols()), IntMatrix::identity(a.cols())};
    diagonalize(s.D, {&s.U, &s.V, &s.V_inverse});
    return s;
}

AbGroup cokernel(const IntMatrix& a) {
    AbGroup g;
    if (a.rows() == 0) return g;
    IntMatrix d = a;
    diagonalize(d, {});
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) {
        if (d(i, i) == 0) continue;
        ++nonzero;
        if (d(i, i) > 1) g.invariant_factors.push_back(d(i, i));
    }
    g.free_rank = a.rows() - nonzero;
    return g;
}

IntMatrix kernel_basis(const IntMatrix& a) {
    SmithForm s = snf(a);
    std::size_t r = 0;
    while (r < std::min(a.rows(), a.cols()) && s.D(r, r) != 0) ++r;
    IntMatrix k(a.cols() - r, a.cols());
    for (std::size_t b = r; b < a.cols(); ++b)
        for (std::size_t i = 0; i < a.cols(); ++i) k(b - r, i) = s.V(i, b);
    return k;
}

AbGroup torsion_part(const AbGroup& g, const BigInt& m) {
    if (m < 1) throw LinalgError("torsion_part needs m >= 1");
    std::vector<BigInt> orders;
    for (const auto& d : g.invariant_factors) orders.push_back(gcd(d, m));
    return AbGroup::from_cyclic_orders(std::move(orders));
}

}  // namespace x0p
