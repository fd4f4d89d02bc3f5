#include "agrarian/lp.hpp"

#include "agrarian/error.hpp"

namespace agrarian {

bool nonnegative_feasible(const std::vector<std::vector<mpq_class>>& a, const std::vector<mpq_class>& b) {
    const std::size_t m = b.size();
    if (a.size() != m) throw DomainError("LP row count mismatch");
    const std::size_t n = m == 0 ? 0 : a[0].size();
    if (m == 0) return true;
    const std::size_t cols = n + m;  // originals, then artificials; rhs stored separately
    std::vector<std::vector<mpq_class>> t(m, std::vector<mpq_class>(cols));
    std::vector<mpq_class> rhs(m);
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i].size() != n) throw DomainError("LP row length mismatch");
        bool flip = sgn(b[i]) < 0;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? mpq_class(-a[i][j]) : a[i][j];
        t[i][n + i] = 1;
        rhs[i] = flip ? mpq_class(-b[i]) : b[i];
        basis[i] = n + i;
    }
    // Reduced costs of minimising the sum of artificials.
    std::vector<mpq_class> z(cols);
    mpq_class zr = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) z[j] -= t[i][j];
        zr -= rhs[i];
    }
    while (true) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (sgn(z[j]) < 0) {
                enter = j;
                break;
            }
        if (enter == cols) break;
        std::size_t leave = m;
        mpq_class best;
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(t[i][enter]) <= 0) continue;
            mpq_class ratio = rhs[i] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;  // unbounded direction cannot occur in phase one; defensive
        mpq_class piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        rhs[leave] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || sgn(t[i][enter]) == 0) continue;
            mpq_class f = t[i][enter];
            for (std::size_t j = 0; j < cols; ++j)
                if (sgn(t[leave][j]) != 0) t[i][j] -= f * t[leave][j];
            rhs[i] -= f * rhs[leave];
        }
        if (sgn(z[enter]) != 0) {
            mpq_class f = z[enter];
            for (std::size_t j = 0; j < cols; ++j)
                if (sgn(t[leave][j]) != 0) z[j] -= f * t[leave][j];
            zr -= f * rhs[leave];
        }
        basis[leave] = enter;
    }
    return sgn(zr) == 0;
}

bool in_convex_hull(const std::vector<std::vector<long>>& points, const std::vector<long>& p) {
    if (points.empty()) return false;
    const std::size_t k = p.size();
    for (const auto& q : points)
        if (q == p) return true;
    if (points.size() == 1) return false;
    std::vector<std::vector<mpq_class>> a(k + 1, std::vector<mpq_class>(points.size()));
    std::vector<mpq_class> b(k + 1);
    for (std::size_t j = 0; j < points.size(); ++j) {
        if (points[j].size() != k) throw DomainError("point dimension mismatch");
        for (std::size_t i = 0; i < k; ++i) a[i][j] = points[j][i];
        a[k][j] = 1;
    }
    for (std::size_t i = 0; i < k; ++i) b[i] = p[i];
    b[k] = 1;
    return nonnegative_feasible(a, b);
}

}  // namespace agrarian
