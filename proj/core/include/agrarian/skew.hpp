#pragma once

#include "agrarian/ratfun.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace agrarian {

// Automorphism of D = Q(i)(y_0, ..., y_{k-1}) given on generators by
// y_j -> c_j * y^{v_j}. The exponent matrix must be unimodular.
class FieldAutomorphism {
public:
    FieldAutomorphism(std::size_t rank, MonomialSubstitution images);
    static std::shared_ptr<const FieldAutomorphism> identity(std::size_t rank);
    // y_j -> factors[j] * y_j.
    static std::shared_ptr<const FieldAutomorphism> scaling(const std::vector<Gaussian>& factors);

    std::size_t rank() const noexcept { return rank_; }
    bool is_identity() const noexcept { return identity_; }
    const MonomialSubstitution& images() const noexcept { return images_; }

    // alpha^power(f); power may be negative.
    RatFun apply(const RatFun& f, int power = 1) const;

    friend bool operator==(const FieldAutomorphism& a, const FieldAutomorphism& b);

private:
    const MonomialSubstitution& power(int k) const;

    std::size_t rank_;
    MonomialSubstitution images_;
    MonomialSubstitution inverse_;
    bool identity_;
    mutable std::mutex cache_mutex_;
    mutable std::map<int, MonomialSubstitution> powers_;
};

using AutomorphismPtr = std::shared_ptr<const FieldAutomorphism>;

// Twisted Laurent polynomial sum a_k t^k over D with t*d = alpha(d)*t.
class OrePoly {
public:
    explicit OrePoly(AutomorphismPtr alpha);
    static OrePoly monomial(AutomorphismPtr alpha, RatFun c, int k);
    static OrePoly constant(AutomorphismPtr alpha, RatFun c) { return monomial(std::move(alpha), std::move(c), 0); }
    static OrePoly from_coefficients(AutomorphismPtr alpha, const std::map<int, RatFun>& coeffs);

    const AutomorphismPtr& alpha() const noexcept { return alpha_; }
    std::size_t base_rank() const noexcept { return alpha_->rank(); }
    const std::map<int, RatFun>& coefficients() const noexcept { return coeffs_; }
    RatFun coefficient(int k) const;
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monomial() const noexcept { return coeffs_.size() == 1; }

    // Smallest / largest exponent. Precondition: nonzero.
    int min_exponent() const;
    int max_exponent() const;
    const RatFun& leading_coefficient() const;
    const RatFun& trailing_coefficient() const;
    // max - min; nullopt encodes -infinity.
    std::optional<long> deg() const;
    // min exponent; nullopt encodes +infinity.
    std::optional<long> ord() const;

    OrePoly& operator+=(const OrePoly& o);
    OrePoly& operator-=(const OrePoly& o);
    friend OrePoly operator+(OrePoly a, const OrePoly& b) { return a += b; }
    friend OrePoly operator-(OrePoly a, const OrePoly& b) { return a -= b; }
    friend OrePoly operator*(const OrePoly& a, const OrePoly& b);
    OrePoly operator-() const;
    friend bool operator==(const OrePoly& a, const OrePoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const OrePoly& a, const OrePoly& b) { return !(a == b); }

    // t^k * this.
    OrePoly left_shift(int k) const;
    // Multiply every coefficient on the left by c (i.e. c * this).
    OrePoly left_scale(const RatFun& c) const;

    std::string to_string(const std::string& tname = "t", const std::vector<std::string>& names = {}) const;

private:
    void add(int k, const RatFun& c);

    AutomorphismPtr alpha_;
    std::map<int, RatFun> coeffs_;
};

struct OreDivMod {
    OrePoly quotient;
    OrePoly remainder;
};

// a = quotient * b + remainder, deg remainder < deg b. Arguments must be polynomials in t.
OreDivMod left_divmod(const OrePoly& a, const OrePoly& b);
// a = b * quotient + remainder, deg remainder < deg b. Arguments must be polynomials in t.
OreDivMod right_divmod(const OrePoly& a, const OrePoly& b);

// Nonzero u, v with u*a == v*b (left common multiple). Accepts Laurent input.
struct LeftMultipliers {
    OrePoly u;
    OrePoly v;
};
LeftMultipliers left_common_multiple(const OrePoly& a, const OrePoly& b);

// g with a = g*a', b = g*b', normalised to minimal exponent 0 and leading coefficient 1.
OrePoly left_gcd(const OrePoly& a, const OrePoly& b);

// Left fraction den^{-1} * num in the Ore field of fractions D(t).
class SkewRatFun {
public:
    explicit SkewRatFun(AutomorphismPtr alpha);
    SkewRatFun(OrePoly num);  // NOLINT(google-explicit-constructor)
    SkewRatFun(OrePoly num, OrePoly den);
    static SkewRatFun constant(AutomorphismPtr alpha, const RatFun& c);

    const AutomorphismPtr& alpha() const noexcept { return num_.alpha(); }
    const OrePoly& num() const noexcept { return num_; }
    const OrePoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    SkewRatFun inverse() const;
    friend SkewRatFun operator+(const SkewRatFun& a, const SkewRatFun& b);
    friend SkewRatFun operator-(const SkewRatFun& a, const SkewRatFun& b) { return a + (-b); }
    friend SkewRatFun operator*(const SkewRatFun& a, const SkewRatFun& b);
    friend SkewRatFun operator/(const SkewRatFun& a, const SkewRatFun& b) { return a * b.inverse(); }
    SkewRatFun& operator+=(const SkewRatFun& o) { return *this = *this + o; }
    SkewRatFun& operator-=(const SkewRatFun& o) { return *this = *this - o; }
    SkewRatFun& operator*=(const SkewRatFun& o) { return *this = *this * o; }
    SkewRatFun operator-() const;
    friend bool operator==(const SkewRatFun& a, const SkewRatFun& b) { return (a - b).is_zero(); }
    friend bool operator!=(const SkewRatFun& a, const SkewRatFun& b) { return !(a == b); }

    // ord_t num - ord_t den (+infinity as nullopt for zero).
    std::optional<long> ord() const;
    // deg_t num - deg_t den (-infinity as nullopt for zero).
    std::optional<long> deg() const;

    std::string to_string(const std::string& tname = "t", const std::vector<std::string>& names = {}) const;

private:
    struct Reduced {};
    SkewRatFun(OrePoly num, OrePoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    OrePoly num_;
    OrePoly den_;
};

inline bool is_zero(const SkewRatFun& f) { return f.is_zero(); }
inline SkewRatFun inverse(const SkewRatFun& f) { return f.inverse(); }
inline SkewRatFun zero_like(const SkewRatFun& f) { return SkewRatFun(f.alpha()); }
inline SkewRatFun one_like(const SkewRatFun& f) {
    return SkewRatFun::constant(f.alpha(), RatFun::constant(f.alpha()->rank(), 1));
}
inline std::size_t entry_size(const SkewRatFun& f) {
    return f.num().coefficients().size() + f.den().coefficients().size();
}

// Lazily computed Laurent series sum_{n >= start} c_n t^n over D with memoised
// coefficients. Copies share the memo. Safe to query from several threads.
class LaurentSeries {
public:
    // gen(n, self) returns c_n; it may query self.coefficient(m) for m < n.
    using Generator = std::function<RatFun(long, const LaurentSeries&)>;

    LaurentSeries(long start, std::size_t base_rank, Generator gen);

    long start() const noexcept { return state_->start; }
    RatFun coefficient(long n) const;
    // Coefficients c_start, ..., c_{end-1}.
    std::vector<RatFun> prefix(long end) const;

private:
    struct State {
        long start;
        std::size_t base_rank;
        Generator gen;
        std::recursive_mutex mutex;
        std::vector<RatFun> memo;
    };
    std::shared_ptr<State> state_;
};

// Inverse of a nonzero f in D((t)) via f = a_k t^k (1 + g) and the recurrence
// u_0 = 1, u_n = -sum_{b=1..n} u_{n-b} alpha^{n-b}(g_b).
LaurentSeries series_invert(const OrePoly& f);
// Expansion of den^{-1} num in D((t)).
LaurentSeries series_expand(const SkewRatFun& f);

}  // namespace agrarian

namespace agrarian {

inline bool is_zero(const OrePoly& p) { return p.is_zero(); }
inline OrePoly zero_like(const OrePoly& p) { return OrePoly(p.alpha()); }
inline OrePoly one_like(const OrePoly& p) {
    return OrePoly::constant(p.alpha(), RatFun::constant(p.alpha()->rank(), 1));
}
inline std::size_t entry_size(const OrePoly& p) { return std::size_t(p.deg().value_or(0)); }

}  // namespace agrarian
