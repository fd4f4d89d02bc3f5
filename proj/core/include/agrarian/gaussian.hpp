#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace agrarian {

// Element a + b*i of Q(i), with a, b exact rationals.
class Gaussian {
public:
    Gaussian() = default;
    Gaussian(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    Gaussian(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Gaussian imag_unit() { return Gaussian(0, 1); }

    const mpq_class& re() const noexcept { return re_; }
    const mpq_class& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }

    Gaussian conj() const { return Gaussian(re_, -im_); }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    // Throws DomainError on zero.
    Gaussian inverse() const;

    Gaussian& operator+=(const Gaussian& o);
    Gaussian& operator-=(const Gaussian& o);
    Gaussian& operator*=(const Gaussian& o);
    Gaussian& operator/=(const Gaussian& o);

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    Gaussian operator-() const { return Gaussian(-re_, -im_); }

    friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
    // Arbitrary but fixed total order (real part first), used for canonical sorting only.
    friend bool operator<(const Gaussian& a, const Gaussian& b) {
        return a.re_ != b.re_ ? a.re_ < b.re_ : a.im_ < b.im_;
    }

    // "a", "bi", "a+bi", "a-bi" with a, b of the form [-]digits[/digits].
    std::string to_string() const;
    // Accepts the forms above; a bare "i" or "-i" is also accepted.
    static Gaussian parse(std::string_view text);

private:
    mpq_class re_;
    mpq_class im_;
};

std::ostream& operator<<(std::ostream& os, const Gaussian& g);

inline bool is_zero(const Gaussian& g) { return g.is_zero(); }
inline Gaussian inverse(const Gaussian& g) { return g.inverse(); }
inline Gaussian zero_like(const Gaussian&) { return Gaussian(); }
inline Gaussian one_like(const Gaussian&) { return Gaussian(1); }

// Parses "[-]digits[/digits]" exactly; throws ParseError.
mpq_class parse_rational(std::string_view text);

}  // namespace agrarian
