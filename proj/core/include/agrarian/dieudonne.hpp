#pragma once

#include "agrarian/error.hpp"
#include "agrarian/matrix.hpp"
#include "agrarian/skew.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace agrarian {

// Dieudonne determinant value. Over a skew field only the image in D^x_ab is
// well defined, so `representative` is a coset representative unless
// `canonical` is set (commutative fields, where it is the determinant itself).
template <class F>
struct DetValue {
    std::optional<F> representative;  // nullopt means the determinant is 0
    bool canonical = false;

    bool is_zero() const noexcept { return !representative.has_value(); }
};

// deg_t / ord_t of a determinant; these factor through the abelianization.
inline std::optional<long> det_deg(const DetValue<SkewRatFun>& d) {
    return d.is_zero() ? std::nullopt : d.representative->deg();
}
inline std::optional<long> det_ord(const DetValue<SkewRatFun>& d) {
    return d.is_zero() ? std::nullopt : d.representative->ord();
}

namespace detail {

template <class F>
std::optional<F> det_rec(Matrix<F> a, bool& negate) {
    const std::size_t n = a.rows();
    if (n == 1) {
        if (is_zero(a(0, 0))) return std::nullopt;
        return a(0, 0);
    }
    const std::size_t last = n - 1;
    // (2) zero last row
    std::optional<std::size_t> j;
    for (std::size_t c = n; c-- > 0;)
        if (!is_zero(a(last, c))) {
            j = c;
            break;
        }
    if (!j) return std::nullopt;
    // (4) a_nn = 0: bring the rightmost nonzero entry of the last row to the corner.
    if (*j != last) {
        a.swap_cols(*j, last);
        negate = !negate;
    }
    // (3) a'_ij = a_ij - a_in a_nn^{-1} a_nj, det = det(A') * a_nn.
    F pivot = a(last, last);
    F pivot_inv = inverse(pivot);
    Matrix<F> reduced(last, last, a.zero());
    for (std::size_t r = 0; r < last; ++r) {
        F left = is_zero(a(r, last)) ? a.zero() : a(r, last) * pivot_inv;
        for (std::size_t c = 0; c < last; ++c) {
            if (is_zero(left) || is_zero(a(last, c))) reduced(r, c) = a(r, c);
            else reduced(r, c) = a(r, c) - left * a(last, c);
        }
    }
    auto sub = det_rec(std::move(reduced), negate);
    if (!sub) return std::nullopt;
    return *sub * pivot;
}

}  // namespace detail

// Canonical representative det^c by the inductive four-case recursion on the
// last row. For commutative F the result is the ordinary determinant.
template <class F>
DetValue<F> dieudonne_det(const Matrix<F>& m, bool commutative = false) {
    if (!m.is_square()) throw DomainError("Dieudonne determinant of non-square matrix");
    DetValue<F> out;
    out.canonical = commutative;
    if (m.rows() == 0) {
        out.representative = one_like(m.zero());
        return out;
    }
    bool negate = false;
    auto r = detail::det_rec(m, negate);
    if (r) out.representative = negate ? F(-*r) : *r;
    return out;
}

// One elementary step of the elimination: row[target] -= factor * row[source].
struct RowOperation {
    std::size_t target;
    std::size_t source;
    SkewRatFun factor;
};

struct StarReduction {
    Matrix<SkewRatFun> diagonal;
    std::vector<RowOperation> operations;
};

// Reduces M = Id + N t (every entry of M - Id has ord_t >= 1) to a diagonal
// matrix by left row operations, column by column. Throws ValidationError when
// the precondition fails and DomainError if an invariant breaks mid-way.
StarReduction reduce_identity_plus_nt(const Matrix<SkewRatFun>& m);

// Applies the inverses of the recorded operations to the diagonal, which must
// reproduce the input of reduce_identity_plus_nt exactly.
Matrix<SkewRatFun> replay_inverse(const StarReduction& r);

// Applies a ring homomorphism entrywise, replacing each entry by an n x n block.
// sigma(1) must be the identity; multiplicativity is checked on the given samples.
template <class A, class B>
Matrix<B> apply_entrywise_hom(const Matrix<A>& m, std::size_t n, const std::function<Matrix<B>(const A&)>& sigma,
                              const std::vector<std::pair<A, A>>& samples = {}) {
    Matrix<B> one = sigma(one_like(m.zero()));
    if (one.rows() != n || one.cols() != n) throw ValidationError("homomorphism block has wrong size");
    if (one != Matrix<B>::identity(n, one.zero(), one_like(one.zero())))
        throw ValidationError("homomorphism does not send 1 to the identity");
    for (const auto& [x, y] : samples)
        if (sigma(x * y) != sigma(x) * sigma(y)) throw ValidationError("homomorphism is not multiplicative");
    std::vector<std::vector<Matrix<B>>> blocks(m.rows(), std::vector<Matrix<B>>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) blocks[i][j] = sigma(m(i, j));
    return assemble_blocks(blocks, n, n, one.zero());
}

// The real 2x2 model of Q(i): a + bi -> a*Id + b*J with J = [[0,-1],[1,0]],
// extended coefficientwise to Laurent polynomials.
Matrix<LaurentPoly> complex_to_real_block(const LaurentPoly& p);

}  // namespace agrarian
