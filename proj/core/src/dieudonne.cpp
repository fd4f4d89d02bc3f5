#include "agrarian/dieudonne.hpp"

namespace agrarian {

namespace {

// ord_t(x - [diagonal]) >= 1, read off den^{-1} (num - den) without normalizing.
bool off_identity_order_positive(const SkewRatFun& x, bool diagonal) {
    if (!diagonal) return x.is_zero() || *x.ord() >= 1;
    OrePoly d = x.num() - x.den();
    return d.is_zero() || *d.ord() - *x.den().ord() >= 1;
}

}  // namespace

StarReduction reduce_identity_plus_nt(const Matrix<SkewRatFun>& m) {
    if (!m.is_square()) throw ValidationError("process requires a square matrix");
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!off_identity_order_positive(m(i, j), i == j))
                throw ValidationError("input is not of the form Id + N t with ord_t N >= 0");
    StarReduction out{m, {}};
    Matrix<SkewRatFun>& a = out.diagonal;
    for (std::size_t i = 0; i < n; ++i) {
        SkewRatFun pivot_inv = a(i, i).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || a(j, i).is_zero()) continue;
            SkewRatFun f = a(j, i) * pivot_inv;
            for (std::size_t c = 0; c < n; ++c)
                if (c != i && !a(i, c).is_zero()) a(j, c) -= f * a(i, c);
            a(j, i) = zero_like(f);
            out.operations.push_back({j, i, std::move(f)});
        }
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (!off_identity_order_positive(a(r, c), r == c))
                    throw DomainError("elimination left the class Id + N t");
    }
    return out;
}

Matrix<SkewRatFun> replay_inverse(const StarReduction& r) {
    Matrix<SkewRatFun> a = r.diagonal;
    const std::size_t n = a.rows();
    for (auto it = r.operations.rbegin(); it != r.operations.rend(); ++it)
        for (std::size_t c = 0; c < n; ++c)
            if (!a(it->source, c).is_zero()) a(it->target, c) += it->factor * a(it->source, c);
    return a;
}

Matrix<LaurentPoly> complex_to_real_block(const LaurentPoly& p) {
    const std::size_t k = p.rank();
    Matrix<LaurentPoly> out(2, 2, LaurentPoly(k));
    for (const auto& [m, c] : p.terms()) {
        out(0, 0).add_term(m, Gaussian(c.re()));
        out(1, 1).add_term(m, Gaussian(c.re()));
        out(0, 1).add_term(m, Gaussian(-c.im()));
        out(1, 0).add_term(m, Gaussian(c.im()));
    }
    return out;
}

}  // namespace agrarian
