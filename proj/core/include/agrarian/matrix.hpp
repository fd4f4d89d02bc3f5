#pragma once

#include "agrarian/error.hpp"
#include "agrarian/laurent.hpp"
#include "agrarian/ratfun.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace agrarian {

// Dense row-major matrix. Carries a zero prototype so that empty products and
// freshly allocated cells have the right ambient ring (e.g. number of variables).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T zero)
        : rows_(rows), cols_(cols), zero_(std::move(zero)), data_(rows * cols, zero_) {}

    static Matrix identity(std::size_t n, const T& zero, const T& one) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    const T& zero() const noexcept { return zero_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    T& at(std::size_t i, std::size_t j) {
        check(i, j);
        return (*this)(i, j);
    }
    const T& at(std::size_t i, std::size_t j) const {
        check(i, j);
        return (*this)(i, j);
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    bool is_zero_matrix() const {
        for (const auto& x : data_)
            if (!is_zero(x)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
        Matrix s(rs.size(), cs.size(), zero_);
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) s(i, j) = at(rs[i], cs[j]);
        return s;
    }

    Matrix without_row_col(std::optional<std::size_t> row, std::optional<std::size_t> col) const {
        std::vector<std::size_t> rs, cs;
        for (std::size_t i = 0; i < rows_; ++i)
            if (!row || i != *row) rs.push_back(i);
        for (std::size_t j = 0; j < cols_; ++j)
            if (!col || j != *col) cs.push_back(j);
        return submatrix(rs, cs);
    }

    template <class F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        using U = decltype(f(std::declval<const T&>()));
        Matrix<U> out(rows_, cols_, f(zero_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DomainError("matrix dimension mismatch in product");
        Matrix c(a.rows_, b.cols_, a.zero_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& bkj = b(k, j);
                    if (is_zero(bkj)) continue;
                    c(i, j) += aik * bkj;
                }
            }
        return c;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix dimension mismatch in sum");
        Matrix c = a;
        for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] += b.data_[i];
        return c;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix dimension mismatch in difference");
        Matrix c = a;
        for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] -= b.data_[i];
        return c;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            if (!(a.data_[i] == b.data_[i])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    void check(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw DomainError("matrix index out of range");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    T zero_{};
    std::vector<T> data_;
};

// Exact quotient in the ring of T (the division is known to be exact).
inline Gaussian exact_div(const Gaussian& a, const Gaussian& b) { return a / b; }
inline RatFun exact_div(const RatFun& a, const RatFun& b) { return a / b; }
inline LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    auto q = divide_exact(a, b);
    if (!q) throw DomainError("inexact division in fraction-free elimination");
    return *std::move(q);
}

// Heuristic size for pivot selection; smaller is cheaper.
inline std::size_t entry_size(const Gaussian&) { return 1; }
inline std::size_t entry_size(const LaurentPoly& p) { return p.term_count(); }
inline std::size_t entry_size(const RatFun& f) { return f.num().term_count() + f.den().term_count(); }

// Rank over the field of fractions, by fraction-free (Bareiss) elimination.
// Valid for any commutative integral domain with exact_div.
template <class T>
std::size_t rank_of(Matrix<T> m) {
    const std::size_t R = m.rows(), C = m.cols();
    if (R == 0 || C == 0) return 0;
    T prev = one_like(m.zero());
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t best = R;
        for (std::size_t i = r; i < R; ++i)
            if (!is_zero(m(i, c)) && (best == R || entry_size(m(i, c)) < entry_size(m(best, c)))) best = i;
        if (best == R) continue;
        m.swap_rows(r, best);
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = c + 1; j < C; ++j)
                m(i, j) = exact_div(m(i, j) * m(r, c) - m(i, c) * m(r, j), prev);
            m(i, c) = zero_like(m.zero());
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

// Determinant by fraction-free (Bareiss) elimination with row pivoting.
template <class T>
T det_commutative(Matrix<T> m) {
    if (!m.is_square()) throw DomainError("determinant of non-square matrix");
    const std::size_t n = m.rows();
    T one = one_like(m.zero());
    if (n == 0) return one;
    T prev = one;
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = n;
        for (std::size_t i = k; i < n; ++i)
            if (!is_zero(m(i, k)) && (best == n || entry_size(m(i, k)) < entry_size(m(best, k)))) best = i;
        if (best == n) return zero_like(m.zero());
        if (best != k) {
            m.swap_rows(k, best);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
        }
        prev = m(k, k);
    }
    T d = m(n - 1, n - 1);
    if (negate) d = -d;
    return d;
}

// Inverse over a field by Gauss-Jordan elimination. Throws DomainError if singular.
template <class T>
Matrix<T> inverse_of(const Matrix<T>& a) {
    if (!a.is_square()) throw DomainError("inverse of non-square matrix");
    const std::size_t n = a.rows();
    Matrix<T> m = a;
    Matrix<T> inv = Matrix<T>::identity(n, a.zero(), one_like(a.zero()));
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = n;
        for (std::size_t i = k; i < n; ++i)
            if (!is_zero(m(i, k)) && (best == n || entry_size(m(i, k)) < entry_size(m(best, k)))) best = i;
        if (best == n) throw DomainError("inverse of singular matrix");
        m.swap_rows(k, best);
        inv.swap_rows(k, best);
        T p = inverse(m(k, k));
        for (std::size_t j = 0; j < n; ++j) {
            if (!is_zero(m(k, j))) m(k, j) = m(k, j) * p;
            if (!is_zero(inv(k, j))) inv(k, j) = inv(k, j) * p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || is_zero(m(i, k))) continue;
            T f = m(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                if (!is_zero(m(k, j))) m(i, j) -= f * m(k, j);
                if (!is_zero(inv(k, j))) inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

// Row-echelon pivot columns over a field, scanning columns in the given order.
struct PivotChoice {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
};

template <class T>
PivotChoice pivot_choice(Matrix<T> m, const std::vector<std::size_t>& col_order) {
    PivotChoice out;
    const std::size_t R = m.rows();
    std::vector<std::size_t> row_of(R);
    for (std::size_t i = 0; i < R; ++i) row_of[i] = i;
    std::size_t r = 0;
    for (std::size_t c : col_order) {
        if (r == R) break;
        std::size_t best = R;
        for (std::size_t i = r; i < R; ++i)
            if (!is_zero(m(i, c)) && (best == R || entry_size(m(i, c)) < entry_size(m(best, c)))) best = i;
        if (best == R) continue;
        m.swap_rows(r, best);
        std::swap(row_of[r], row_of[best]);
        T p = inverse(m(r, c));
        for (std::size_t i = r + 1; i < R; ++i) {
            if (is_zero(m(i, c))) continue;
            T f = m(i, c) * p;
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
        }
        out.rows.push_back(row_of[r]);
        out.cols.push_back(c);
        ++r;
    }
    return out;
}

// Kronecker-style block assembly: blocks[i][j] all of equal size.
template <class T>
Matrix<T> assemble_blocks(const std::vector<std::vector<Matrix<T>>>& blocks, std::size_t br, std::size_t bc,
                          const T& zero) {
    std::size_t R = blocks.size(), C = R == 0 ? 0 : blocks[0].size();
    Matrix<T> out(R * br, C * bc, zero);
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j)
            for (std::size_t a = 0; a < br; ++a)
                for (std::size_t b = 0; b < bc; ++b) out(i * br + a, j * bc + b) = blocks[i][j](a, b);
    return out;
}

}  // namespace agrarian
