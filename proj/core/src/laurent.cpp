#include "agrarian/laurent.hpp"

#include "agrarian/error.hpp"
#include "agrarian/modular.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>

namespace agrarian {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::size_t rank) : rank_(static_cast<std::uint8_t>(rank)) {
    if (rank > kMaxVariables) throw ValidationError("too many variables: " + std::to_string(rank));
}

Monomial::Monomial(std::initializer_list<int> exps) : Monomial(exps.size()) {
    std::copy(exps.begin(), exps.end(), e_.begin());
}

Monomial Monomial::from_vector(const std::vector<long>& exps) {
    Monomial m(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] > std::numeric_limits<int>::max() || exps[i] < std::numeric_limits<int>::min())
            throw DomainError("exponent out of range");
        m.e_[i] = static_cast<int>(exps[i]);
    }
    return m;
}

long Monomial::total_degree() const noexcept {
    long s = 0;
    for (std::size_t i = 0; i < rank_; ++i) s += e_[i];
    return s;
}

bool Monomial::is_zero() const noexcept {
    for (std::size_t i = 0; i < rank_; ++i)
        if (e_[i] != 0) return false;
    return true;
}

std::vector<long> Monomial::to_vector() const { return std::vector<long>(e_.begin(), e_.begin() + rank_); }

Monomial& Monomial::operator+=(const Monomial& o) {
    for (std::size_t i = 0; i < rank_; ++i) e_[i] += o.e_[i];
    return *this;
}

Monomial& Monomial::operator-=(const Monomial& o) {
    for (std::size_t i = 0; i < rank_; ++i) e_[i] -= o.e_[i];
    return *this;
}

Monomial Monomial::operator-() const {
    Monomial m(*this);
    for (std::size_t i = 0; i < rank_; ++i) m.e_[i] = -m.e_[i];
    return m;
}

bool operator<(const Monomial& a, const Monomial& b) {
    long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.rank_; ++i)
        if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i];
    return false;
}

// ------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::constant(std::size_t rank, const Gaussian& c) {
    LaurentPoly p(rank);
    p.add_term(Monomial(rank), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const Gaussian& c) {
    LaurentPoly p(m.rank());
    p.add_term(m, c);
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t rank, std::size_t var, int exponent) {
    if (var >= rank) throw ValidationError("variable index out of range");
    Monomial m(rank);
    m[var] = exponent;
    return monomial(m);
}

void LaurentPoly::add_term(const Monomial& m, const Gaussian& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

Gaussian LaurentPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Gaussian() : it->second;
}

const Monomial& LaurentPoly::leading_monomial() const {
    if (terms_.empty()) throw DomainError("leading monomial of zero");
    return terms_.rbegin()->first;
}

const Gaussian& LaurentPoly::leading_coefficient() const {
    if (terms_.empty()) throw DomainError("leading coefficient of zero");
    return terms_.rbegin()->second;
}

const Monomial& LaurentPoly::trailing_monomial() const {
    if (terms_.empty()) throw DomainError("trailing monomial of zero");
    return terms_.begin()->first;
}

Monomial LaurentPoly::min_exponents() const {
    if (terms_.empty()) throw DomainError("min exponents of zero");
    Monomial m = terms_.begin()->first;
    for (const auto& [k, c] : terms_)
        for (std::size_t i = 0; i < rank_; ++i) m[i] = std::min(m[i], k[i]);
    return m;
}

Monomial LaurentPoly::max_exponents() const {
    if (terms_.empty()) throw DomainError("max exponents of zero");
    Monomial m = terms_.begin()->first;
    for (const auto& [k, c] : terms_)
        for (std::size_t i = 0; i < rank_; ++i) m[i] = std::max(m[i], k[i]);
    return m;
}

std::optional<long> LaurentPoly::deg_in(std::size_t var) const {
    if (terms_.empty()) return std::nullopt;
    if (var >= rank_) return 0;
    return static_cast<long>(max_exponents()[var]) - min_exponents()[var];
}

std::optional<long> LaurentPoly::ord_in(std::size_t var) const {
    if (terms_.empty()) return std::nullopt;
    if (var >= rank_) return 0;
    return min_exponents()[var];
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.rank_ != rank_ && !o.is_zero()) {
        if (is_zero() && rank_ == 0) rank_ = o.rank_;
        else if (!is_zero() || rank_ != o.rank_) {
            if (rank_ != o.rank_) throw DomainError("rank mismatch in Laurent polynomial sum");
        }
    }
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (o.rank_ != rank_ && !o.is_zero()) {
        if (is_zero() && rank_ == 0) rank_ = o.rank_;
        else if (rank_ != o.rank_) throw DomainError("rank mismatch in Laurent polynomial difference");
    }
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Gaussian& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

namespace {

bool all_real(const LaurentPoly& p) {
    for (const auto& [m, c] : p.terms())
        if (!c.is_real()) return false;
    return true;
}

// Dense convolution for rank 1 and real coefficients.
LaurentPoly multiply_dense_real(const LaurentPoly& a, const LaurentPoly& b) {
    const int la = a.trailing_monomial()[0], lb = b.trailing_monomial()[0];
    const int ha = a.leading_monomial()[0], hb = b.leading_monomial()[0];
    std::vector<mpq_class> out(static_cast<std::size_t>(ha - la + hb - lb) + 1);
    std::vector<bool> used(out.size(), false);
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            std::size_t k = static_cast<std::size_t>(ma[0] - la + mb[0] - lb);
            if (used[k]) out[k] += ca.re() * cb.re();
            else out[k] = ca.re() * cb.re();
            used[k] = true;
        }
    LaurentPoly p(1);
    Monomial m(1);
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (!used[k] || sgn(out[k]) == 0) continue;
        m[0] = static_cast<int>(k) + la + lb;
        p.add_term(m, Gaussian(std::move(out[k])));
    }
    return p;
}

}  // namespace

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.rank_ != b.rank_ && !a.is_zero() && !b.is_zero())
        throw DomainError("rank mismatch in Laurent polynomial product");
    LaurentPoly out(std::max(a.rank_, b.rank_));
    if (a.is_zero() || b.is_zero()) return out;
    if (a.rank_ == 1 && a.terms_.size() > 1 && b.terms_.size() > 1 && all_real(a) && all_real(b))
        return multiply_dense_real(a, b);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p(*this);
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
}

LaurentPoly LaurentPoly::shifted(const Monomial& m) const {
    LaurentPoly p(rank_);
    for (const auto& [k, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), k + m, c);
    return p;
}

LaurentPoly LaurentPoly::substitute(const MonomialSubstitution& images) const {
    if (images.size() != rank_) throw ValidationError("substitution size does not match rank");
    std::size_t target = images.empty() ? 0 : images.front().exponent.rank();
    for (const auto& im : images)
        if (im.exponent.rank() != target) throw ValidationError("substitution images of mixed rank");
    LaurentPoly out(target);
    for (const auto& [m, c] : terms_) {
        Monomial e(target);
        Gaussian coef = c;
        for (std::size_t j = 0; j < rank_; ++j) {
            int k = m[j];
            if (k == 0) continue;
            for (std::size_t t = 0; t < target; ++t) e[t] += k * images[j].exponent[t];
            if (!images[j].coefficient.is_one()) {
                Gaussian base = k > 0 ? images[j].coefficient : images[j].coefficient.inverse();
                for (int r = 0; r < std::abs(k); ++r) coef *= base;
            }
        }
        out.add_term(e, coef);
    }
    return out;
}

LaurentPoly LaurentPoly::beta_involution(std::size_t var) const {
    LaurentPoly out(rank_);
    for (const auto& [m, c] : terms_) {
        Monomial e = m;
        e[var] = -e[var];
        out.terms_.emplace(e, c);
    }
    return out;
}

Gaussian LaurentPoly::evaluate(const std::vector<Gaussian>& point) const {
    if (point.size() != rank_) throw ValidationError("evaluation point has wrong dimension");
    Gaussian sum;
    std::vector<Gaussian> inv(rank_);
    for (std::size_t j = 0; j < rank_; ++j)
        if (!point[j].is_zero()) inv[j] = point[j].inverse();
    for (const auto& [m, c] : terms_) {
        Gaussian v = c;
        for (std::size_t j = 0; j < rank_; ++j) {
            int k = m[j];
            if (k < 0 && point[j].is_zero()) throw DomainError("negative power of zero in evaluation");
            const Gaussian& base = k > 0 ? point[j] : inv[j];
            for (int r = 0; r < std::abs(k); ++r) v *= base;
        }
        sum += v;
    }
    return sum;
}

std::map<int, LaurentPoly> LaurentPoly::coefficients_in(std::size_t var) const {
    std::map<int, LaurentPoly> out;
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        int k = rest[var];
        rest[var] = 0;
        auto it = out.try_emplace(k, LaurentPoly(rank_)).first;
        it->second.add_term(rest, c);
    }
    return out;
}

LaurentPoly LaurentPoly::extended(std::size_t new_rank) const {
    if (new_rank < rank_) throw ValidationError("cannot shrink rank");
    LaurentPoly out(new_rank);
    for (const auto& [m, c] : terms_) {
        Monomial e(new_rank);
        for (std::size_t i = 0; i < rank_; ++i) e[i] = m[i];
        out.add_term(e, c);
    }
    return out;
}

std::vector<std::string> default_variable_names(std::size_t rank, const std::string& stem) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < rank; ++i) names.push_back(stem + std::to_string(i));
    return names;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names_in) const {
    if (terms_.empty()) return "0";
    std::vector<std::string> names = names_in.size() >= rank_ ? names_in : default_variable_names(rank_);
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string mono;
        for (std::size_t j = 0; j < rank_; ++j) {
            if (m[j] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[j];
            if (m[j] != 1) mono += "^" + std::to_string(m[j]);
        }
        std::string coef;
        bool negative = false;
        if (c.is_real()) {
            negative = sgn(c.re()) < 0;
            mpq_class a = abs(c.re());
            coef = (a == 1 && !mono.empty()) ? "" : a.get_str();
        } else if (sgn(c.re()) == 0) {
            negative = sgn(c.im()) < 0;
            coef = Gaussian(0, abs(c.im())).to_string();
        } else {
            coef = "(" + c.to_string() + ")";
        }
        if (first) os << (negative ? "-" : "");
        else os << (negative ? " - " : " + ");
        os << coef;
        if (!coef.empty() && !mono.empty()) os << "*";
        os << mono;
        first = false;
    }
    return os.str();
}

// --------------------------------------------------------------- division

namespace {

// Dense long division for rank 1; T is mpq_class (real inputs) or Gaussian.
template <class T>
std::optional<LaurentPoly> divide_exact_dense(const LaurentPoly& a, const LaurentPoly& b, T (*get)(const Gaussian&)) {
    const int la = a.min_exponents()[0], lb = b.min_exponents()[0];
    const int ha = a.max_exponents()[0], hb = b.max_exponents()[0];
    if (ha - la < hb - lb) return std::nullopt;
    std::vector<T> r(static_cast<std::size_t>(ha - la) + 1), d(static_cast<std::size_t>(hb - lb) + 1);
    for (const auto& [m, c] : a.terms()) r[static_cast<std::size_t>(m[0] - la)] = get(c);
    for (const auto& [m, c] : b.terms()) d[static_cast<std::size_t>(m[0] - lb)] = get(c);
    const std::size_t db = d.size() - 1, nq = r.size() - db;
    const T lead_inv = T(1) / d.back();
    std::vector<T> q(nq);
    for (std::size_t k = nq; k-- > 0;) {
        T c = r[k + db] * lead_inv;
        if (c == T(0)) continue;
        for (std::size_t i = 0; i <= db; ++i)
            if (d[i] != T(0)) r[k + i] -= c * d[i];
        q[k] = std::move(c);
    }
    for (std::size_t i = 0; i < db; ++i)
        if (r[i] != T(0)) return std::nullopt;
    LaurentPoly out(1);
    Monomial m(1);
    for (std::size_t k = 0; k < nq; ++k) {
        if (q[k] == T(0)) continue;
        m[0] = static_cast<int>(k) + la - lb;
        out.add_term(m, Gaussian(q[k]));
    }
    return out;
}

}  // namespace

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.rank() == 1 && b.rank() == 1 && !a.is_zero() && !b.is_zero() && !b.is_monomial()) {
        if (all_real(a) && all_real(b))
            return divide_exact_dense<mpq_class>(a, b, [](const Gaussian& g) { return g.re(); });
        return divide_exact_dense<Gaussian>(a, b, [](const Gaussian& g) { return g; });
    }
    if (b.is_zero()) throw DomainError("division by zero Laurent polynomial");
    LaurentPoly q(b.rank());
    if (a.is_zero()) return q;
    if (a.rank() != b.rank()) throw DomainError("rank mismatch in division");
    const std::size_t k = a.rank();
    if (b.is_monomial()) {
        const auto& [mb, cb] = *b.terms().begin();
        Gaussian inv = cb.inverse();
        LaurentPoly out(k);
        for (const auto& [m, c] : a.terms()) out.add_term(m - mb, c * inv);
        return out;
    }
    Monomial lo = a.min_exponents() - b.min_exponents();
    Monomial hi = a.max_exponents() - b.max_exponents();
    for (std::size_t i = 0; i < k; ++i)
        if (lo[i] > hi[i]) return std::nullopt;
    const Monomial& lb = b.leading_monomial();
    Gaussian lc_inv = b.leading_coefficient().inverse();
    LaurentPoly r = a;
    while (!r.is_zero()) {
        Monomial m = r.leading_monomial() - lb;
        for (std::size_t i = 0; i < k; ++i)
            if (m[i] < lo[i] || m[i] > hi[i]) return std::nullopt;
        Gaussian c = r.leading_coefficient() * lc_inv;
        q.add_term(m, c);
        for (const auto& [mb, cb] : b.terms()) r.add_term(m + mb, -(c * cb));
    }
    return q;
}

LaurentPoly canonical_associate(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    LaurentPoly out = p.shifted(-p.min_exponents());
    Gaussian lc = out.leading_coefficient();
    if (!lc.is_one()) out *= lc.inverse();
    return out;
}

// ------------------------------------------------------------------- gcd

namespace {

LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
    auto q = divide_exact(a, b);
    if (!q) throw DomainError("internal: expected exact division in gcd");
    return *std::move(q);
}

int top_degree(const LaurentPoly& p, std::size_t v) { return p.max_exponents()[v]; }

LaurentPoly leading_coeff_in(const LaurentPoly& p, std::size_t v) {
    const int top = top_degree(p, v);
    LaurentPoly out(p.rank());
    for (const auto& [m, c] : p.terms())
        if (m[v] == top) {
            Monomial rest = m;
            rest[v] = 0;
            out.add_term(rest, c);
        }
    return out;
}

LaurentPoly gcd_poly(LaurentPoly a, LaurentPoly b);

LaurentPoly content_in(const LaurentPoly& p, std::size_t v) {
    auto cs = p.coefficients_in(v);
    LaurentPoly g;
    bool first = true;
    for (auto& [e, c] : cs) {
        if (first) {
            g = canonical_associate(c);
            first = false;
        } else {
            g = gcd_poly(g, c);
        }
        if (g.is_constant()) break;
    }
    return g;
}

// Pseudo-remainder of a by b with respect to variable v.
LaurentPoly prem(LaurentPoly r, const LaurentPoly& b, std::size_t v) {
    const int db = top_degree(b, v);
    const LaurentPoly lcb = leading_coeff_in(b, v);
    while (!r.is_zero()) {
        int dr = top_degree(r, v);
        if (dr < db) break;
        LaurentPoly lcr = leading_coeff_in(r, v);
        Monomial shift(r.rank());
        shift[v] = dr - db;
        r = lcb * r - lcr * b.shifted(shift);
    }
    return r;
}

LaurentPoly primitive_part(const LaurentPoly& p, std::size_t v) {
    return canonical_associate(exact_quotient(p, content_in(p, v)));
}

// Multi-modular gcd for univariate inputs. Non-real inputs are reduced with both
// square roots of -1 so real and imaginary parts can be separated.
using ModVec = std::vector<std::uint64_t>;

// Dense image; nullopt if a denominator or the leading coefficient vanishes.
std::optional<ModVec> mod_image(const LaurentPoly& f, std::size_t v, const modular::Prime& P, bool conjugate) {
    ModVec c(static_cast<std::size_t>(f.max_exponents()[v]) + 1, 0);
    for (const auto& [m, x] : f.terms()) {
        auto r = modular::reduce(x, P, conjugate);
        if (!r) return std::nullopt;
        c[static_cast<std::size_t>(m[v])] = *r;
    }
    if (c.back() == 0) return std::nullopt;
    return c;
}

// Monic gcd in F_p[v].
ModVec mod_gcd(ModVec x, ModVec y, std::uint64_t p) {
    auto trim = [](ModVec& c) {
        while (!c.empty() && c.back() == 0) c.pop_back();
    };
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        const std::uint64_t inv = modular::inv(y.back(), p);
        const std::size_t dy = y.size() - 1;
        while (x.size() >= y.size()) {
            const std::uint64_t f = x.back() * inv % p;
            const std::size_t shift = x.size() - 1 - dy;
            for (std::size_t i = 0; i < dy; ++i) x[shift + i] = (x[shift + i] + (p - f) * y[i]) % p;
            x.pop_back();
            trim(x);
        }
        std::swap(x, y);
    }
    const std::uint64_t inv = modular::inv(x.back(), p);
    for (auto& c : x) c = c * inv % p;
    return x;
}

// Integer multiple of the leading coefficient of any gcd of a and b, once
// denominators are cleared: gcd of the cleared leading coefficients (of their
// norms over Z[i]).
mpz_class leading_bound(const LaurentPoly& a, const LaurentPoly& b, std::size_t v, bool real) {
    auto cleared_lc = [v, real](const LaurentPoly& f) {
        mpz_class l = 1;
        const Gaussian* lc = nullptr;
        int top = std::numeric_limits<int>::min();
        for (const auto& [m, x] : f.terms()) {
            l = lcm(l, x.re().get_den());
            l = lcm(l, x.im().get_den());
            if (m[v] > top) {
                top = m[v];
                lc = &x;
            }
        }
        mpq_class re = lc->re() * l, im = lc->im() * l;
        mpz_class out = real ? re.get_num() : mpz_class(re.get_num() * re.get_num() + im.get_num() * im.get_num());
        return mpz_class(abs(out));
    };
    return gcd(cleared_lc(a), cleared_lc(b));
}

mpz_class symmetric(mpz_class x, const mpz_class& m) {
    if (x < 0) x += m;
    if (2 * x > m) x -= m;
    return x;
}

// a / g for a real input with min exponent 0 in v and a primitive integer g
// (dense in v). By Gauss's lemma the quotient of the cleared input is integral,
// so every step is an exact integer division or the test fails.
std::optional<LaurentPoly> divide_by_primitive(const LaurentPoly& a, const std::vector<mpz_class>& g, std::size_t v) {
    mpz_class l = 1;
    for (const auto& [m, x] : a.terms()) l = lcm(l, x.re().get_den());
    std::vector<mpz_class> r(static_cast<std::size_t>(a.max_exponents()[v]) + 1, 0);
    for (const auto& [m, x] : a.terms()) {
        auto& c = r[static_cast<std::size_t>(m[v])];
        mpz_divexact(c.get_mpz_t(), l.get_mpz_t(), x.re().get_den_mpz_t());
        c *= x.re().get_num();
    }
    if (r.size() < g.size()) return std::nullopt;
    const std::size_t dg = g.size() - 1;
    std::vector<mpz_class> q(r.size() - dg);
    mpz_class t;
    for (std::size_t i = q.size(); i-- > 0;) {
        if (!mpz_divisible_p(r[i + dg].get_mpz_t(), g.back().get_mpz_t())) return std::nullopt;
        mpz_divexact(q[i].get_mpz_t(), r[i + dg].get_mpz_t(), g.back().get_mpz_t());
        if (q[i] == 0) continue;
        for (std::size_t j = 0; j < dg; ++j) mpz_submul(r[i + j].get_mpz_t(), q[i].get_mpz_t(), g[j].get_mpz_t());
    }
    for (std::size_t j = 0; j < dg; ++j)
        if (r[j] != 0) return std::nullopt;
    LaurentPoly out(a.rank());
    Monomial mono(a.rank());
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        mono[v] = static_cast<int>(i);
        mpq_class c(q[i], l);
        c.canonicalize();
        out.add_term(mono, Gaussian(std::move(c)));
    }
    return out;
}

// a = gcd * a_cofactor, b = gcd * b_cofactor for inputs with min exponent 0 in v.
// Images are scaled so the lifted gcd has integer (Gaussian integer) entries;
// a lift that a fresh prime leaves unchanged is checked by exact division.
std::optional<GcdCofactors> modular_gcd(const LaurentPoly& a, const LaurentPoly& b, std::size_t v) {
    bool real = true;
    for (const auto* f : {&a, &b})
        for (const auto& [m, x] : f->terms()) real = real && x.is_real();
    const std::size_t parts = real ? 1 : 2;
    const mpz_class gamma = leading_bound(a, b, v, real);
    std::size_t degree = std::numeric_limits<std::size_t>::max();
    mpz_class modulus = 1;
    std::vector<std::vector<mpz_class>> acc;  // real and imaginary parts, per coefficient
    const auto& ps = modular::primes();
    for (const auto& P : ps) {
        const std::uint64_t p = P.p, s0 = P.i;
        const std::uint64_t gp = mpz_fdiv_ui(gamma.get_mpz_t(), p);
        if (gp == 0) continue;
        std::vector<ModVec> images;
        bool ok = true;
        for (std::size_t k = 0; k < parts && ok; ++k) {
            auto x = mod_image(a, v, P, k == 1), y = mod_image(b, v, P, k == 1);
            if (!x || !y) {
                ok = false;
                break;
            }
            images.push_back(mod_gcd(std::move(*x), std::move(*y), p));
            if (images.back().size() != images.front().size()) ok = false;
        }
        if (!ok) continue;
        const std::size_t d = images.front().size() - 1;
        if (d == 0) return GcdCofactors{LaurentPoly::constant(a.rank(), 1), a, b};
        if (d > degree) continue;  // unlucky prime
        if (d < degree) {
            degree = d;
            modulus = 1;
            acc.assign(parts, std::vector<mpz_class>(d + 1, 0));
        }
        if (!real) {
            // image_k = re + (+-s) im
            const std::uint64_t half = modular::inv(2, p), half_s = modular::inv(2 * s0 % p, p);
            for (std::size_t i = 0; i <= d; ++i) {
                const std::uint64_t x = images[0][i], y = images[1][i];
                images[0][i] = (x + y) % p * half % p;
                images[1][i] = (x + p - y) % p * half_s % p;
            }
        }
        bool changed = modulus == 1;
        mpz_class next = modulus * static_cast<unsigned long>(p);
        const std::uint64_t minv = modulus == 1 ? 1 : modular::inv(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
        for (std::size_t k = 0; k < parts; ++k)
            for (std::size_t i = 0; i <= d; ++i) {
                const std::uint64_t y = images[k][i] * gp % p;
                const std::uint64_t xm = mpz_fdiv_ui(acc[k][i].get_mpz_t(), p);
                const std::uint64_t step = (y + p - xm) % p * minv % p;
                if (step != 0) {
                    changed = true;
                    acc[k][i] += modulus * static_cast<unsigned long>(step);
                    acc[k][i] = symmetric(std::move(acc[k][i]), next);
                }
            }
        modulus = std::move(next);
        if (changed) continue;
        std::vector<mpz_class> re = acc[0], im = real ? std::vector<mpz_class>(d + 1, 0) : acc[1];
        mpz_class content = 0;
        for (std::size_t i = 0; i <= d; ++i) {
            content = gcd(content, gcd(re[i], im[i]));
        }
        if (content == 0) continue;
        if (real) {
            for (auto& c : re) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
            auto qa = divide_by_primitive(a, re, v);
            if (!qa) continue;
            auto qb = divide_by_primitive(b, re, v);
            if (!qb) continue;
            LaurentPoly g(a.rank());
            Monomial mono(a.rank());
            for (std::size_t i = 0; i <= d; ++i) {
                if (re[i] == 0) continue;
                mono[v] = static_cast<int>(i);
                g.add_term(mono, Gaussian(mpq_class(re[i])));
            }
            return GcdCofactors{std::move(g), std::move(*qa), std::move(*qb)};
        }
        LaurentPoly g(a.rank());
        Monomial mono(a.rank());
        for (std::size_t i = 0; i <= d; ++i) {
            if (re[i] == 0 && im[i] == 0) continue;
            mono[v] = static_cast<int>(i);
            g.add_term(mono, Gaussian(mpq_class(re[i] / content), mpq_class(im[i] / content)));
        }
        auto qa = divide_exact(a, g), qb = divide_exact(b, g);
        if (qa && qb) return GcdCofactors{std::move(g), std::move(*qa), std::move(*qb)};
    }
    return std::nullopt;
}

// Dense monic Euclid when both arguments involve only variable v.
LaurentPoly gcd_univariate(const LaurentPoly& a, const LaurentPoly& b, std::size_t v) {
    if (auto g = modular_gcd(a, b, v)) return canonical_associate(g->gcd);
    auto dense = [v](const LaurentPoly& p) {
        std::vector<Gaussian> c(static_cast<std::size_t>(p.max_exponents()[v]) + 1);
        for (const auto& [m, x] : p.terms()) c[static_cast<std::size_t>(m[v])] = x;
        return c;
    };
    auto trim = [](std::vector<Gaussian>& c) {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    };
    std::vector<Gaussian> r0 = dense(a), r1 = dense(b);
    if (r0.size() < r1.size()) std::swap(r0, r1);
    while (!r1.empty()) {
        Gaussian inv = r1.back().inverse();
        for (auto& x : r1) x *= inv;
        // r0 mod r1, r1 monic
        const std::size_t d1 = r1.size() - 1;
        while (r0.size() >= r1.size()) {
            Gaussian lead = r0.back();
            std::size_t shift = r0.size() - 1 - d1;
            if (!lead.is_zero())
                for (std::size_t i = 0; i < d1; ++i)
                    if (!r1[i].is_zero()) r0[shift + i] -= lead * r1[i];
            r0.pop_back();
            trim(r0);
        }
        std::swap(r0, r1);
    }
    LaurentPoly out(a.rank());
    Monomial m(a.rank());
    for (std::size_t i = 0; i < r0.size(); ++i) {
        m[v] = static_cast<int>(i);
        out.add_term(m, r0[i]);
    }
    return canonical_associate(out);
}

// Both arguments nonzero; works up to monomial units.
LaurentPoly gcd_poly(LaurentPoly a, LaurentPoly b) {
    a = canonical_associate(a);
    b = canonical_associate(b);
    const std::size_t k = a.rank();
    if (a.is_constant() || b.is_constant()) return LaurentPoly::constant(k, 1);
    if (a == b) return a;
    Monomial ma = a.max_exponents(), mb = b.max_exponents();
    {
        std::size_t present = 0, var = 0;
        for (std::size_t v = 0; v < k; ++v)
            if (ma[v] > 0 || mb[v] > 0) {
                ++present;
                var = v;
            }
        if (present == 1 && ma[var] > 0 && mb[var] > 0) return gcd_univariate(a, b, var);
    }
    // Variable present in exactly one argument: reduce to content.
    for (std::size_t v = 0; v < k; ++v) {
        if (ma[v] > 0 && mb[v] == 0) return gcd_poly(content_in(a, v), b);
        if (mb[v] > 0 && ma[v] == 0) return gcd_poly(a, content_in(b, v));
    }
    // Main variable: the shared variable of smallest degree.
    std::size_t v = k;
    for (std::size_t j = 0; j < k; ++j) {
        if (ma[j] == 0) continue;
        if (v == k || std::max(ma[j], mb[j]) < std::max(ma[v], mb[v])) v = j;
    }
    if (v == k) return LaurentPoly::constant(k, 1);
    LaurentPoly ca = content_in(a, v), cb = content_in(b, v);
    LaurentPoly c = gcd_poly(ca, cb);
    LaurentPoly p = canonical_associate(exact_quotient(a, ca));
    LaurentPoly q = canonical_associate(exact_quotient(b, cb));
    if (top_degree(p, v) < top_degree(q, v)) std::swap(p, q);
    while (true) {
        LaurentPoly r = prem(p, q, v);
        if (r.is_zero()) break;
        if (top_degree(r, v) - r.min_exponents()[v] == 0) {
            q = LaurentPoly::constant(k, 1);
            break;
        }
        p = std::move(q);
        q = primitive_part(r, v);
    }
    return canonical_associate(c * q);
}

}  // namespace

GcdCofactors gcd_cofactors(const LaurentPoly& a, const LaurentPoly& b) {
    const std::size_t k = std::max(a.rank(), b.rank());
    LaurentPoly one = LaurentPoly::constant(k, 1);
    if (!a.is_zero() && !b.is_zero()) {
        if (a.is_monomial() || b.is_monomial()) return {one, a, b};
        if (a.rank() == 1 && b.rank() == 1) {
            Monomial sa = a.min_exponents(), sb = b.min_exponents();
            if (auto r = modular_gcd(a.shifted(-sa), b.shifted(-sb), 0)) {
                // Shift the gcd to its canonical associate and the unit into the cofactors.
                Monomial sg = r->gcd.min_exponents();
                Gaussian lc = r->gcd.shifted(-sg).leading_coefficient();
                LaurentPoly g = canonical_associate(r->gcd);
                LaurentPoly qa = r->a_cofactor.shifted(sa + sg), qb = r->b_cofactor.shifted(sb + sg);
                qa *= lc;
                qb *= lc;
                return {std::move(g), std::move(qa), std::move(qb)};
            }
        }
    }
    LaurentPoly g = gcd(a, b);
    if (g.is_zero()) return {g, LaurentPoly(k), LaurentPoly(k)};
    if (g.is_constant()) return {one, a, b};
    return {g, exact_quotient(a, g), exact_quotient(b, g)};
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return canonical_associate(b);
    if (b.is_zero()) return canonical_associate(a);
    if (a.rank() != b.rank()) throw DomainError("rank mismatch in gcd");
    if (a.is_monomial() || b.is_monomial()) return LaurentPoly::constant(a.rank(), 1);
    return gcd_poly(a, b);
}

}  // namespace agrarian
