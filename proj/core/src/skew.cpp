#include "agrarian/skew.hpp"

#include "agrarian/error.hpp"
#include "agrarian/matrix.hpp"
#include "agrarian/modular.hpp"

#include <initializer_list>
#include <random>
#include <sstream>

namespace agrarian {

// ------------------------------------------------------- FieldAutomorphism

namespace {

MonomialImage image_of(const LaurentPoly& p) {
    if (!p.is_monomial()) throw DomainError("internal: monomial substitution produced a non-monomial");
    const auto& [m, c] = *p.terms().begin();
    return {c, m};
}

// (A after B)(y_j) = A(B(y_j)).
MonomialSubstitution compose(const MonomialSubstitution& a, const MonomialSubstitution& b) {
    MonomialSubstitution out;
    out.reserve(b.size());
    for (const auto& im : b) out.push_back(image_of(LaurentPoly::monomial(im.exponent, im.coefficient).substitute(a)));
    return out;
}

MonomialSubstitution identity_substitution(std::size_t rank) {
    MonomialSubstitution id;
    for (std::size_t j = 0; j < rank; ++j) {
        Monomial m(rank);
        m[j] = 1;
        id.push_back({Gaussian(1), m});
    }
    return id;
}

bool same_substitution(const MonomialSubstitution& a, const MonomialSubstitution& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j].coefficient != b[j].coefficient || a[j].exponent != b[j].exponent) return false;
    return true;
}

}  // namespace

FieldAutomorphism::FieldAutomorphism(std::size_t rank, MonomialSubstitution images)
    : rank_(rank), images_(std::move(images)) {
    if (images_.size() != rank_) throw ValidationError("automorphism needs one image per variable");
    Matrix<Gaussian> v(rank_, rank_, Gaussian());
    for (std::size_t j = 0; j < rank_; ++j) {
        if (images_[j].exponent.rank() != rank_) throw ValidationError("automorphism image of wrong rank");
        if (images_[j].coefficient.is_zero()) throw ValidationError("automorphism image coefficient is zero");
        for (std::size_t l = 0; l < rank_; ++l) v(j, l) = images_[j].exponent[l];
    }
    Matrix<Gaussian> w;
    try {
        w = inverse_of(v);
    } catch (const DomainError&) {
        throw ValidationError("automorphism exponent matrix is singular");
    }
    for (std::size_t j = 0; j < rank_; ++j) {
        Monomial e(rank_);
        Gaussian d(1);
        for (std::size_t l = 0; l < rank_; ++l) {
            const Gaussian& x = w(j, l);
            if (!x.is_real() || x.re().get_den() != 1)
                throw ValidationError("automorphism exponent matrix is not unimodular");
            long k = x.re().get_num().get_si();
            e[l] = static_cast<int>(k);
            Gaussian base = k > 0 ? images_[l].coefficient.inverse() : images_[l].coefficient;
            for (long r = 0; r < std::labs(k); ++r) d *= base;
        }
        inverse_.push_back({d, e});
    }
    if (!same_substitution(compose(images_, inverse_), identity_substitution(rank_)))
        throw ValidationError("automorphism inverse check failed");
    identity_ = same_substitution(images_, identity_substitution(rank_));
}

std::shared_ptr<const FieldAutomorphism> FieldAutomorphism::identity(std::size_t rank) {
    return std::make_shared<const FieldAutomorphism>(rank, identity_substitution(rank));
}

std::shared_ptr<const FieldAutomorphism> FieldAutomorphism::scaling(const std::vector<Gaussian>& factors) {
    MonomialSubstitution s = identity_substitution(factors.size());
    for (std::size_t j = 0; j < factors.size(); ++j) s[j].coefficient = factors[j];
    return std::make_shared<const FieldAutomorphism>(factors.size(), std::move(s));
}

bool operator==(const FieldAutomorphism& a, const FieldAutomorphism& b) {
    return a.rank_ == b.rank_ && same_substitution(a.images_, b.images_);
}

const MonomialSubstitution& FieldAutomorphism::power(int k) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = powers_.find(k);
    if (it != powers_.end()) return it->second;
    if (powers_.empty()) {
        powers_.emplace(0, identity_substitution(rank_));
        powers_.emplace(1, images_);
        powers_.emplace(-1, inverse_);
        it = powers_.find(k);
        if (it != powers_.end()) return it->second;
    }
    const int step = k > 0 ? 1 : -1;
    const MonomialSubstitution& gen = k > 0 ? images_ : inverse_;
    int have = step;
    while (powers_.count(have + step)) have += step;
    while (have != k) {
        MonomialSubstitution next = compose(powers_.at(have), gen);
        have += step;
        powers_.emplace(have, std::move(next));
    }
    return powers_.at(k);
}

RatFun FieldAutomorphism::apply(const RatFun& f, int k) const {
    if (identity_ || k == 0 || f.is_zero()) return f;
    if (f.num().is_constant() && f.den().is_constant()) return f;
    return f.substitute_invertible(power(k));
}

// ------------------------------------------------------------------ OrePoly

OrePoly::OrePoly(AutomorphismPtr alpha) : alpha_(std::move(alpha)) {
    if (!alpha_) throw ValidationError("OrePoly needs an automorphism");
}

OrePoly OrePoly::monomial(AutomorphismPtr alpha, RatFun c, int k) {
    OrePoly p(std::move(alpha));
    p.add(k, c);
    return p;
}

OrePoly OrePoly::from_coefficients(AutomorphismPtr alpha, const std::map<int, RatFun>& coeffs) {
    OrePoly p(std::move(alpha));
    for (const auto& [k, c] : coeffs) p.add(k, c);
    return p;
}

void OrePoly::add(int k, const RatFun& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

RatFun OrePoly::coefficient(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? RatFun(base_rank()) : it->second;
}

int OrePoly::min_exponent() const {
    if (coeffs_.empty()) throw DomainError("min exponent of zero");
    return coeffs_.begin()->first;
}

int OrePoly::max_exponent() const {
    if (coeffs_.empty()) throw DomainError("max exponent of zero");
    return coeffs_.rbegin()->first;
}

const RatFun& OrePoly::leading_coefficient() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of zero");
    return coeffs_.rbegin()->second;
}

const RatFun& OrePoly::trailing_coefficient() const {
    if (coeffs_.empty()) throw DomainError("trailing coefficient of zero");
    return coeffs_.begin()->second;
}

std::optional<long> OrePoly::deg() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<long>(max_exponent()) - min_exponent();
}

std::optional<long> OrePoly::ord() const {
    if (coeffs_.empty()) return std::nullopt;
    return min_exponent();
}

OrePoly& OrePoly::operator+=(const OrePoly& o) {
    for (const auto& [k, c] : o.coeffs_) add(k, c);
    return *this;
}

OrePoly& OrePoly::operator-=(const OrePoly& o) {
    for (const auto& [k, c] : o.coeffs_) add(k, -c);
    return *this;
}

OrePoly operator*(const OrePoly& a, const OrePoly& b) {
    OrePoly out(a.alpha_);
    for (const auto& [i, ai] : a.coeffs_)
        for (const auto& [j, bj] : b.coeffs_) out.add(i + j, ai * a.alpha_->apply(bj, i));
    return out;
}

OrePoly OrePoly::operator-() const {
    OrePoly out(alpha_);
    for (const auto& [k, c] : coeffs_) out.coeffs_.emplace(k, -c);
    return out;
}

OrePoly OrePoly::left_shift(int k) const {
    OrePoly out(alpha_);
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e + k, alpha_->apply(c, k));
    return out;
}

OrePoly OrePoly::left_scale(const RatFun& s) const {
    OrePoly out(alpha_);
    for (const auto& [e, c] : coeffs_) out.add(e, s * c);
    return out;
}

std::string OrePoly::to_string(const std::string& tname, const std::vector<std::string>& names) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.to_string(names) << ")";
        if (it->first != 0) os << "*" << tname << (it->first == 1 ? "" : "^" + std::to_string(it->first));
    }
    return os.str();
}

// --------------------------------------------------------------- division

namespace {

void require_polynomial(const OrePoly& p, const char* what) {
    if (!p.is_zero() && p.min_exponent() < 0) throw DomainError(std::string(what) + ": argument is not a polynomial in t");
}

// p * t^k (no twisting).
OrePoly right_shift(const OrePoly& p, int k) {
    std::map<int, RatFun> c;
    for (const auto& [e, v] : p.coefficients()) c.emplace(e + k, v);
    return OrePoly::from_coefficients(p.alpha(), c);
}

}  // namespace

OreDivMod left_divmod(const OrePoly& a, const OrePoly& b) {
    if (b.is_zero()) throw DomainError("division by zero Ore polynomial");
    require_polynomial(a, "left_divmod");
    require_polynomial(b, "left_divmod");
    const auto& alpha = a.alpha();
    OrePoly q(alpha), r = a;
    const int k = b.max_exponent();
    const RatFun& bk = b.leading_coefficient();
    while (!r.is_zero() && r.max_exponent() >= k) {
        int m = r.max_exponent() - k;
        RatFun c = r.leading_coefficient() * alpha->apply(bk, m).inverse();
        OrePoly term = OrePoly::monomial(alpha, c, m);
        q += term;
        r -= term * b;
    }
    return {q, r};
}

OreDivMod right_divmod(const OrePoly& a, const OrePoly& b) {
    if (b.is_zero()) throw DomainError("division by zero Ore polynomial");
    require_polynomial(a, "right_divmod");
    require_polynomial(b, "right_divmod");
    const auto& alpha = a.alpha();
    OrePoly q(alpha), r = a;
    const int k = b.max_exponent();
    const RatFun bk_inv = b.leading_coefficient().inverse();
    while (!r.is_zero() && r.max_exponent() >= k) {
        int m = r.max_exponent() - k;
        RatFun c = alpha->apply(bk_inv * r.leading_coefficient(), -k);
        OrePoly term = OrePoly::monomial(alpha, c, m);
        q += term;
        r -= b * term;
    }
    return {q, r};
}

namespace {

LaurentPoly lcm(const LaurentPoly& a, const LaurentPoly& b) { return a * *divide_exact(b, gcd(a, b)); }

// Scalar mu such that the coefficients of p * mu (right) or mu * p (left) are
// coprime Laurent polynomials, jointly over all of ps. Keeps Euclidean
// remainders and fraction entries from swelling.
RatFun primitive_scalar(std::initializer_list<const OrePoly*> ps, bool right) {
    LaurentPoly l, g;
    bool first = true;
    for (const OrePoly* p : ps)
    for (const auto& [k, c] : p->coefficients()) {
        RatFun x = right ? p->alpha()->apply(c, -k) : c;
        if (first) {
            l = x.den();
            g = x.num();
            first = false;
        } else {
            if (!x.den().is_constant()) l = lcm(l, x.den());
            if (!g.is_monomial()) g = gcd(g, x.num());
        }
    }
    return RatFun(l, g);
}

}  // namespace

LeftMultipliers left_common_multiple(const OrePoly& a, const OrePoly& b) {
    if (a.is_zero() || b.is_zero()) throw DomainError("common multiple of zero");
    const auto& alpha = a.alpha();
    const int ma = a.min_exponent(), mb = b.min_exponent();
    OrePoly a0 = a.left_shift(-ma), b0 = b.left_shift(-mb);
    RatFun one = RatFun::constant(alpha->rank(), 1);
    // Invariant: r_i = s_i * a0 + t_i * b0.
    OrePoly r0 = a0, r1 = b0;
    OrePoly s0 = OrePoly::constant(alpha, one), s1(alpha);
    OrePoly t0(alpha), t1 = OrePoly::constant(alpha, one);
    while (!r1.is_zero()) {
        OreDivMod qr = left_divmod(r0, r1);
        OrePoly s2 = s0 - qr.quotient * s1;
        OrePoly t2 = t0 - qr.quotient * t1;
        if (!qr.remainder.is_zero()) {
            RatFun mu = primitive_scalar({&qr.remainder}, false);
            qr.remainder = qr.remainder.left_scale(mu);
            s2 = s2.left_scale(mu);
            t2 = t2.left_scale(mu);
        }
        r0 = std::move(r1);
        r1 = std::move(qr.remainder);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // s1 * a0 + t1 * b0 == 0; any common left scalar may be dropped.
    RatFun c = primitive_scalar({&s1, &t1}, false);
    s1 = s1.left_scale(c);
    t1 = t1.left_scale(c);
    OrePoly u = right_shift(s1, -ma);
    OrePoly v = right_shift(-t1, -mb);
    return {u, v};
}

namespace {

// Right-normalise: g * t^{-min} * c so that min exponent is 0 and leading coefficient 1.
OrePoly right_normalize(const OrePoly& g) {
    OrePoly h = right_shift(g, -g.min_exponent());
    int n = h.max_exponent();
    RatFun c = h.alpha()->apply(h.leading_coefficient().inverse(), -n);
    return h * OrePoly::constant(h.alpha(), c);
}

// Certificate that the polynomials a, b (min exponent 0) have no common left
// factor of positive degree: the Sylvester map (u, v) -> a u + b v on right
// coefficient vectors is nonsingular at some point mod p. False means unknown.
bool certainly_left_coprime(const OrePoly& a, const OrePoly& b) {
    const int da = a.max_exponent(), db = b.max_exponent();
    if (da == 0 || db == 0) return true;
    const auto& alpha = a.alpha();
    const std::size_t n = static_cast<std::size_t>(da + db);
    thread_local std::mt19937_64 rng(0x5eed);
    const modular::Prime& P = modular::primes().front();
    std::uniform_int_distribution<std::uint64_t> pick(2, P.p - 2);
    std::vector<std::uint64_t> point(alpha->rank());
    for (auto& x : point) x = pick(rng);
    std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n, 0));
    auto fill = [&](const OrePoly& f, int shifts, std::size_t col0) {
        for (const auto& [j, c] : f.coefficients())
            for (int k = 0; k < shifts; ++k) {
                auto v = modular::evaluate(alpha->apply(c, -(j + k)), point, P);
                if (!v) return false;
                m[static_cast<std::size_t>(j + k)][col0 + static_cast<std::size_t>(k)] = *v;
            }
        return true;
    };
    if (!fill(a, db, 0) || !fill(b, da, static_cast<std::size_t>(db))) return false;
    return modular::rank(std::move(m), P.p) == n;
}

}  // namespace

OrePoly left_gcd(const OrePoly& a, const OrePoly& b) {
    if (a.is_zero() && b.is_zero()) return a;
    if (a.is_zero()) return right_normalize(b);
    if (b.is_zero()) return right_normalize(a);
    OrePoly r0 = right_shift(a, -a.min_exponent()), r1 = right_shift(b, -b.min_exponent());
    if (certainly_left_coprime(r0, r1)) return OrePoly::constant(a.alpha(), RatFun::constant(a.base_rank(), 1));
    while (!r1.is_zero()) {
        OreDivMod qr = right_divmod(r0, r1);
        if (!qr.remainder.is_zero())
            qr.remainder = qr.remainder * OrePoly::constant(r0.alpha(), primitive_scalar({&qr.remainder}, true));
        r0 = std::move(r1);
        r1 = std::move(qr.remainder);
    }
    return right_normalize(r0);
}

// --------------------------------------------------------------- SkewRatFun

namespace {

// a' with a = g * a'; g polynomial with min exponent 0.
OrePoly left_exact_cofactor(const OrePoly& a, const OrePoly& g) {
    int m = a.min_exponent();
    OreDivMod qr = right_divmod(right_shift(a, -m), g);
    if (!qr.remainder.is_zero()) throw DomainError("internal: left gcd does not divide");
    return right_shift(qr.quotient, m);
}

}  // namespace

SkewRatFun::SkewRatFun(AutomorphismPtr alpha)
    : num_(alpha), den_(OrePoly::constant(alpha, RatFun::constant(alpha->rank(), 1))) {}

SkewRatFun::SkewRatFun(OrePoly num)
    : num_(std::move(num)), den_(OrePoly::constant(num_.alpha(), RatFun::constant(num_.base_rank(), 1))) {
    normalize();
}

SkewRatFun::SkewRatFun(OrePoly num, OrePoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("skew fraction with zero denominator");
    normalize();
}

SkewRatFun SkewRatFun::constant(AutomorphismPtr alpha, const RatFun& c) {
    return SkewRatFun(OrePoly::constant(std::move(alpha), c));
}

void SkewRatFun::normalize() {
    const auto& alpha = num_.alpha();
    if (num_.is_zero()) {
        den_ = OrePoly::constant(alpha, RatFun::constant(alpha->rank(), 1));
        return;
    }
    if (!den_.is_monomial()) {
        RatFun c = primitive_scalar({&num_, &den_}, false);
        if (!c.is_one()) {
            num_ = num_.left_scale(c);
            den_ = den_.left_scale(c);
        }
        OrePoly g = left_gcd(num_, den_);
        if (g.max_exponent() > 0) {
            num_ = left_exact_cofactor(num_, g);
            den_ = left_exact_cofactor(den_, g);
        }
    }
    // Left unit: t^{-min}, then the scalar making all coefficients coprime Laurent
    // polynomials with the leading term of den's leading coefficient equal to 1.
    int m = den_.min_exponent();
    if (m != 0) {
        num_ = num_.left_shift(-m);
        den_ = den_.left_shift(-m);
    }
    RatFun c = primitive_scalar({&num_, &den_}, false);
    const std::size_t k = alpha->rank();
    const LaurentPoly lead = (den_.leading_coefficient() * c).num();
    c = c * RatFun(LaurentPoly::constant(k, 1), LaurentPoly::monomial(lead.leading_monomial(), lead.leading_coefficient()));
    if (!c.is_one()) {
        num_ = num_.left_scale(c);
        den_ = den_.left_scale(c);
    }
}

SkewRatFun SkewRatFun::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero skew fraction");
    return SkewRatFun(den_, num_);
}

SkewRatFun SkewRatFun::operator-() const { return SkewRatFun(-num_, den_, Reduced{}); }

SkewRatFun operator+(const SkewRatFun& a, const SkewRatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return SkewRatFun(a.num_ + b.num_, a.den_);
    // u*qa = v*qb = m; qa^{-1} = m^{-1} u, qb^{-1} = m^{-1} v.
    LeftMultipliers uv = left_common_multiple(a.den_, b.den_);
    return SkewRatFun(uv.u * a.num_ + uv.v * b.num_, uv.u * a.den_);
}

SkewRatFun operator*(const SkewRatFun& a, const SkewRatFun& b) {
    if (a.is_zero() || b.is_zero()) return SkewRatFun(a.alpha());
    // pa * qb^{-1} = u^{-1} v where u*pa = v*qb.
    if (b.den_.is_monomial() && b.den_.min_exponent() == 0 && b.den_.leading_coefficient().is_one())
        return SkewRatFun(a.num_ * b.num_, a.den_);
    LeftMultipliers uv = left_common_multiple(a.num_, b.den_);
    return SkewRatFun(uv.v * b.num_, uv.u * a.den_);
}

std::optional<long> SkewRatFun::ord() const {
    if (is_zero()) return std::nullopt;
    return *num_.ord() - *den_.ord();
}

std::optional<long> SkewRatFun::deg() const {
    if (is_zero()) return std::nullopt;
    return *num_.deg() - *den_.deg();
}

std::string SkewRatFun::to_string(const std::string& tname, const std::vector<std::string>& names) const {
    if (den_.is_monomial() && den_.min_exponent() == 0 && den_.leading_coefficient().is_one())
        return num_.to_string(tname, names);
    return "(" + den_.to_string(tname, names) + ")^-1 * (" + num_.to_string(tname, names) + ")";
}

// ------------------------------------------------------------------ series

LaurentSeries::LaurentSeries(long start, std::size_t base_rank, Generator gen)
    : state_(std::make_shared<State>()) {
    state_->start = start;
    state_->base_rank = base_rank;
    state_->gen = std::move(gen);
}

RatFun LaurentSeries::coefficient(long n) const {
    State& st = *state_;
    if (n < st.start) return RatFun(st.base_rank);
    std::lock_guard<std::recursive_mutex> lock(st.mutex);
    const auto idx = static_cast<std::size_t>(n - st.start);
    while (st.memo.size() <= idx) {
        RatFun c = st.gen(st.start + static_cast<long>(st.memo.size()), *this);
        st.memo.push_back(std::move(c));
    }
    return st.memo[idx];
}

std::vector<RatFun> LaurentSeries::prefix(long end) const {
    std::vector<RatFun> out;
    for (long n = start(); n < end; ++n) out.push_back(coefficient(n));
    return out;
}

LaurentSeries series_invert(const OrePoly& f) {
    if (f.is_zero()) throw DomainError("series inverse of zero");
    auto alpha = f.alpha();
    const int k = f.min_exponent();
    const std::size_t rank = alpha->rank();
    const RatFun ak_inv = f.trailing_coefficient().inverse();
    // f = a_k t^k (1 + sum_b g_b t^b) with g_b = alpha^{-k}(a_k^{-1} f_{k+b}).
    auto g = std::make_shared<std::map<int, RatFun>>();
    for (const auto& [e, c] : f.coefficients())
        if (e > k) g->emplace(e - k, alpha->apply(ak_inv * c, -k));
    LaurentSeries u(0, rank, [alpha, g, rank](long n, const LaurentSeries& self) {
        if (n == 0) return RatFun::constant(rank, 1);
        RatFun s(rank);
        for (const auto& [b, gb] : *g) {
            if (b > n) break;
            RatFun prev = self.coefficient(n - b);
            if (prev.is_zero()) continue;
            s += prev * alpha->apply(gb, static_cast<int>(n - b));
        }
        return -s;
    });
    return LaurentSeries(-k, rank, [u, alpha, ak_inv, k](long m, const LaurentSeries&) {
        RatFun un = u.coefficient(m + k);
        if (un.is_zero()) return un;
        return un * alpha->apply(ak_inv, static_cast<int>(m));
    });
}

LaurentSeries series_expand(const SkewRatFun& f) {
    auto alpha = f.alpha();
    const std::size_t rank = alpha->rank();
    if (f.is_zero()) return LaurentSeries(0, rank, [rank](long, const LaurentSeries&) { return RatFun(rank); });
    LaurentSeries inv = series_invert(f.den());
    auto num = std::make_shared<OrePoly>(f.num());
    long start = inv.start() + f.num().min_exponent();
    return LaurentSeries(start, rank, [inv, num, alpha, rank](long n, const LaurentSeries&) {
        RatFun s(rank);
        for (const auto& [j, pj] : num->coefficients()) {
            RatFun a = inv.coefficient(n - j);
            if (a.is_zero()) continue;
            s += a * alpha->apply(pj, static_cast<int>(n - j));
        }
        return s;
    });
}

}  // namespace agrarian
