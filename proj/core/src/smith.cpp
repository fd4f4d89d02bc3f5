#include "agrarian/smith.hpp"

#include <utility>

namespace agrarian {

IntMatrix int_identity(std::size_t n) {
    IntMatrix m(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix int_product(const IntMatrix& a, const IntMatrix& b, std::size_t inner) {
    std::size_t cols = inner == 0 ? 0 : b[0].size();
    IntMatrix c(a.size(), std::vector<mpz_class>(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

namespace {

struct Work {
    IntMatrix& d;
    IntMatrix& u;
    IntMatrix& v;
    IntMatrix& vi;
    std::size_t rows;
    std::size_t cols;

    // row r += f * row s
    void add_row(std::size_t r, std::size_t s, const mpz_class& f) {
        for (std::size_t j = 0; j < cols; ++j) d[r][j] += f * d[s][j];
        for (std::size_t j = 0; j < rows; ++j) u[r][j] += f * u[s][j];
    }
    void swap_rows(std::size_t r, std::size_t s) {
        std::swap(d[r], d[s]);
        std::swap(u[r], u[s]);
    }
    void negate_row(std::size_t r) {
        for (auto& x : d[r]) x = -x;
        for (auto& x : u[r]) x = -x;
    }
    // col c += f * col s; V picks up the same column op, V^{-1} the inverse row op.
    void add_col(std::size_t c, std::size_t s, const mpz_class& f) {
        for (std::size_t i = 0; i < rows; ++i) d[i][c] += f * d[i][s];
        for (std::size_t i = 0; i < cols; ++i) v[i][c] += f * v[i][s];
        for (std::size_t j = 0; j < cols; ++j) vi[s][j] -= f * vi[c][j];
    }
    void swap_cols(std::size_t c, std::size_t s) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(d[i][c], d[i][s]);
        for (std::size_t i = 0; i < cols; ++i) std::swap(v[i][c], v[i][s]);
        std::swap(vi[c], vi[s]);
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols) {
    SmithForm s;
    const std::size_t rows = a.size();
    s.d = a;
    s.u = int_identity(rows);
    s.v = int_identity(cols);
    s.v_inverse = int_identity(cols);
    Work w{s.d, s.u, s.v, s.v_inverse, rows, cols};

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // smallest nonzero entry in the remaining block
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (s.d[i][j] != 0 && (pr == rows || abs(s.d[i][j]) < abs(s.d[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr == rows) break;
        w.swap_rows(t, pr);
        w.swap_cols(t, pc);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (s.d[i][t] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), s.d[i][t].get_mpz_t(), s.d[t][t].get_mpz_t());
                w.add_row(i, t, -q);
                if (s.d[i][t] != 0) {
                    w.swap_rows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (s.d[t][j] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), s.d[t][j].get_mpz_t(), s.d[t][t].get_mpz_t());
                w.add_col(j, t, -q);
                if (s.d[t][j] != 0) {
                    w.swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility of the rest of the block
            for (std::size_t i = t + 1; i < rows && clean; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (s.d[i][j] % s.d[t][t] != 0) {
                        w.add_row(t, i, 1);
                        clean = false;
                        break;
                    }
        }
        if (s.d[t][t] < 0) w.negate_row(t);
        s.diagonal.push_back(s.d[t][t]);
        ++t;
    }
    s.rank = t;
    return s;
}

}  // namespace agrarian
