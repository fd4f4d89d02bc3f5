#include "agrarian/modular.hpp"

namespace agrarian::modular {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

std::uint64_t pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    for (b %= p; e; e >>= 1, b = b * b % p)
        if (e & 1) r = r * b % p;
    return r;
}

std::uint64_t inv(std::uint64_t x, std::uint64_t p) { return pow(x, p - 2, p); }

const std::vector<Prime>& primes() {
    static const std::vector<Prime> out = [] {
        std::vector<Prime> ps;
        for (std::uint64_t n = (std::uint64_t{1} << 31) - 3; ps.size() < 256; n -= 4) {
            if (!is_prime(n)) continue;
            for (std::uint64_t g = 2;; ++g) {
                std::uint64_t s = pow(g, (n - 1) / 4, n);
                if (s * s % n == n - 1) {
                    ps.push_back({n, s});
                    break;
                }
            }
        }
        return ps;
    }();
    return out;
}

std::optional<std::uint64_t> reduce(const mpq_class& q, std::uint64_t p) {
    std::uint64_t d = mpz_fdiv_ui(q.get_den_mpz_t(), p);
    if (d == 0) return std::nullopt;
    std::uint64_t n = mpz_fdiv_ui(q.get_num_mpz_t(), p);
    return d == 1 ? n : n * inv(d, p) % p;
}

std::optional<std::uint64_t> reduce(const Gaussian& g, const Prime& P, bool conjugate) {
    auto re = reduce(g.re(), P.p);
    if (!re) return std::nullopt;
    if (g.is_real()) return re;
    auto im = reduce(g.im(), P.p);
    if (!im) return std::nullopt;
    std::uint64_t i = conjugate ? P.p - P.i : P.i;
    return (*re + *im * i) % P.p;
}

std::optional<std::uint64_t> evaluate(const LaurentPoly& f, const std::vector<std::uint64_t>& point, const Prime& P) {
    const std::uint64_t p = P.p;
    std::vector<std::uint64_t> inverse(point.size());
    for (std::size_t j = 0; j < point.size(); ++j) inverse[j] = inv(point[j], p);
    std::uint64_t sum = 0;
    for (const auto& [m, c] : f.terms()) {
        auto v = reduce(c, P);
        if (!v) return std::nullopt;
        std::uint64_t term = *v;
        for (std::size_t j = 0; j < f.rank(); ++j)
            if (m[j] != 0) term = term * pow(m[j] > 0 ? point[j] : inverse[j], static_cast<std::uint64_t>(std::abs(m[j])), p) % p;
        sum = (sum + term) % p;
    }
    return sum;
}

std::optional<std::uint64_t> evaluate(const RatFun& f, const std::vector<std::uint64_t>& point, const Prime& P) {
    auto d = evaluate(f.den(), point, P);
    if (!d || *d == 0) return std::nullopt;
    auto n = evaluate(f.num(), point, P);
    if (!n) return std::nullopt;
    return *n * inv(*d, P.p) % P.p;
}

std::size_t rank(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        const std::uint64_t iv = inv(m[r][c], p);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            const std::uint64_t f = m[i][c] * iv % p;
            for (std::size_t j = c; j < cols; ++j) m[i][j] = (m[i][j] + (p - f) * m[r][j]) % p;
        }
        ++r;
    }
    return r;
}

}  // namespace agrarian::modular
