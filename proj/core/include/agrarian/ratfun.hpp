#pragma once

#include "agrarian/laurent.hpp"

#include <string>
#include <vector>

namespace agrarian {

// Element num/den of the fraction field Q(i)(x_0, ..., x_{k-1}).
// Always stored reduced: gcd(num, den) = 1 and den is its own canonical associate
// (componentwise minimal exponent 0, graded-lex leading coefficient 1).
class RatFun {
public:
    RatFun() : RatFun(std::size_t{0}) {}
    explicit RatFun(std::size_t rank) : num_(rank), den_(LaurentPoly::constant(rank, 1)) {}
    RatFun(LaurentPoly num);  // NOLINT(google-explicit-constructor)
    RatFun(LaurentPoly num, LaurentPoly den);

    static RatFun constant(std::size_t rank, const Gaussian& c) { return RatFun(LaurentPoly::constant(rank, c)); }

    std::size_t rank() const noexcept { return den_.rank(); }
    const LaurentPoly& num() const noexcept { return num_; }
    const LaurentPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const;
    bool is_laurent() const { return den_.is_constant(); }

    RatFun inverse() const;

    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }
    RatFun operator-() const;

    // Equality as fractions: a.num * b.den == b.num * a.den.
    friend bool operator==(const RatFun& a, const RatFun& b);
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    // deg_in(num) - deg_in(den); nullopt encodes -infinity.
    std::optional<long> deg_in(std::size_t var) const;
    // ord_in(num) - ord_in(den); nullopt encodes +infinity.
    std::optional<long> ord_in(std::size_t var) const;

    RatFun substitute(const MonomialSubstitution& images) const;
    // For images defining an automorphism: coprimality survives, so only the unit is renormalized.
    RatFun substitute_invertible(const MonomialSubstitution& images) const;
    RatFun beta_involution(std::size_t var) const;
    RatFun extended(std::size_t new_rank) const;

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    struct Reduced {};
    RatFun(LaurentPoly num, LaurentPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();
    void normalize_unit();

    LaurentPoly num_;
    LaurentPoly den_;
};

inline bool is_zero(const RatFun& f) { return f.is_zero(); }
inline RatFun inverse(const RatFun& f) { return f.inverse(); }
inline RatFun zero_like(const RatFun& f) { return RatFun(f.rank()); }
inline RatFun one_like(const RatFun& f) { return RatFun::constant(f.rank(), 1); }

}  // namespace agrarian
