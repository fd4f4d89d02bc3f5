#include "agrarian/ratfun.hpp"

#include "agrarian/error.hpp"

namespace agrarian {

RatFun::RatFun(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::constant(num_.rank(), 1)) {}

RatFun::RatFun(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (!num_.is_zero() && num_.rank() != den_.rank()) throw DomainError("rank mismatch in rational function");
    normalize();
}

void RatFun::normalize() {
    const std::size_t k = den_.rank();
    if (num_.is_zero()) {
        num_ = LaurentPoly(k);
        den_ = LaurentPoly::constant(k, 1);
        return;
    }
    if (!den_.is_monomial()) {
        GcdCofactors g = gcd_cofactors(num_, den_);
        if (!g.gcd.is_constant()) {
            num_ = std::move(g.a_cofactor);
            den_ = std::move(g.b_cofactor);
        }
    }
    normalize_unit();
}

void RatFun::normalize_unit() {
    // Move the unit of den into num.
    Monomial shift = den_.min_exponents();
    Gaussian lc = den_.shifted(-shift).leading_coefficient();
    Gaussian inv = lc.inverse();
    den_ = den_.shifted(-shift) * inv;
    num_ = num_.shifted(-shift) * inv;
}

bool RatFun::is_one() const { return den_.is_constant() && num_.is_constant() && num_.constant_term().is_one(); }

RatFun RatFun::inverse() const {
    if (num_.is_zero()) throw DomainError("inverse of zero rational function");
    RatFun out(den_, num_, Reduced{});
    out.normalize_unit();
    return out;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
        if (a.den_.is_constant()) return RatFun(a.num_ + b.num_, a.den_, RatFun::Reduced{});
        return RatFun(a.num_ + b.num_, a.den_);
    }
    if (a.den_.is_constant()) return RatFun(a.num_ * b.den_ + b.num_, b.den_, RatFun::Reduced{});
    if (b.den_.is_constant()) return RatFun(a.num_ + b.num_ * a.den_, a.den_, RatFun::Reduced{});
    GcdCofactors g = gcd_cofactors(a.den_, b.den_);
    if (g.gcd.is_constant()) {
        // Coprime denominators keep the sum reduced.
        RatFun out(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RatFun::Reduced{});
        if (out.num_.is_zero()) return RatFun(a.rank());
        out.normalize_unit();
        return out;
    }
    return RatFun(a.num_ * g.b_cofactor + b.num_ * g.a_cofactor, a.den_ * g.b_cofactor);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun RatFun::operator-() const { return RatFun(-num_, den_, Reduced{}); }

RatFun operator*(const RatFun& a, const RatFun& b) {
    const std::size_t k = std::max(a.rank(), b.rank());
    if (a.is_zero() || b.is_zero()) return RatFun(k);
    if (a.den_.is_constant() && b.den_.is_constant())
        return RatFun(a.num_ * b.num_, LaurentPoly::constant(k, 1), RatFun::Reduced{});
    // Cross cancellation keeps the product reduced.
    auto cancel = [k](const LaurentPoly& x, const LaurentPoly& y, bool skip) {
        return skip ? GcdCofactors{LaurentPoly::constant(k, 1), x, y} : gcd_cofactors(x, y);
    };
    GcdCofactors g1 = cancel(a.num_, b.den_, b.den_.is_constant());
    GcdCofactors g2 = cancel(b.num_, a.den_, a.den_.is_constant());
    LaurentPoly n = g1.a_cofactor * g2.a_cofactor;
    LaurentPoly d = g2.b_cofactor * g1.b_cofactor;
    RatFun out(std::move(n), std::move(d), RatFun::Reduced{});
    Monomial shift = out.den_.min_exponents();
    Gaussian inv = out.den_.shifted(-shift).leading_coefficient().inverse();
    out.den_ = out.den_.shifted(-shift) * inv;
    out.num_ = out.num_.shifted(-shift) * inv;
    return out;
}

bool operator==(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

std::optional<long> RatFun::deg_in(std::size_t var) const {
    auto n = num_.deg_in(var);
    if (!n) return std::nullopt;
    return *n - *den_.deg_in(var);
}

std::optional<long> RatFun::ord_in(std::size_t var) const {
    auto n = num_.ord_in(var);
    if (!n) return std::nullopt;
    return *n - *den_.ord_in(var);
}

RatFun RatFun::substitute(const MonomialSubstitution& images) const {
    return RatFun(num_.substitute(images), den_.substitute(images));
}

RatFun RatFun::substitute_invertible(const MonomialSubstitution& images) const {
    if (num_.is_zero()) return RatFun(images.empty() ? 0 : images.front().exponent.rank());
    RatFun out(num_.substitute(images), den_.substitute(images), Reduced{});
    out.normalize_unit();
    return out;
}

RatFun RatFun::beta_involution(std::size_t var) const {
    return RatFun(num_.beta_involution(var), den_.beta_involution(var));
}

RatFun RatFun::extended(std::size_t new_rank) const {
    return RatFun(num_.extended(new_rank), den_.extended(new_rank), Reduced{});
}

std::string RatFun::to_string(const std::vector<std::string>& names) const {
    if (den_.is_constant() && den_.constant_term().is_one()) return num_.to_string(names);
    return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

}  // namespace agrarian
