#pragma once

#include "agrarian/gaussian.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace agrarian {

inline constexpr std::size_t kMaxVariables = 8;

// Exponent vector in Z^k, k <= kMaxVariables. Ordered graded-lexicographically.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t rank);
    Monomial(std::initializer_list<int> exps);
    static Monomial from_vector(const std::vector<long>& exps);

    std::size_t rank() const noexcept { return rank_; }
    int operator[](std::size_t i) const noexcept { return e_[i]; }
    int& operator[](std::size_t i) noexcept { return e_[i]; }
    long total_degree() const noexcept;
    bool is_zero() const noexcept;
    std::vector<long> to_vector() const;

    Monomial& operator+=(const Monomial& o);
    Monomial& operator-=(const Monomial& o);
    friend Monomial operator+(Monomial a, const Monomial& b) { return a += b; }
    friend Monomial operator-(Monomial a, const Monomial& b) { return a -= b; }
    Monomial operator-() const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.rank_ == b.rank_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    friend bool operator<(const Monomial& a, const Monomial& b);

private:
    std::array<int, kMaxVariables> e_{};
    std::uint8_t rank_ = 0;
};

// Image of each variable under a monomial substitution x_j -> c_j * x^{v_j}.
struct MonomialImage {
    Gaussian coefficient{1};
    Monomial exponent;
};
using MonomialSubstitution = std::vector<MonomialImage>;

// Sparse Laurent polynomial over Q(i) in k variables.
class LaurentPoly {
public:
    using TermMap = std::map<Monomial, Gaussian>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::size_t rank) : rank_(rank) {}
    static LaurentPoly constant(std::size_t rank, const Gaussian& c);
    static LaurentPoly monomial(const Monomial& m, const Gaussian& c = Gaussian(1));
    static LaurentPoly variable(std::size_t rank, std::size_t var, int exponent = 1);

    std::size_t rank() const noexcept { return rank_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    Gaussian coefficient(const Monomial& m) const;
    Gaussian constant_term() const { return coefficient(Monomial(rank_)); }

    // Graded-lex extremes. Precondition: nonzero.
    const Monomial& leading_monomial() const;
    const Gaussian& leading_coefficient() const;
    const Monomial& trailing_monomial() const;

    // Componentwise extremes of the support. Precondition: nonzero.
    Monomial min_exponents() const;
    Monomial max_exponents() const;

    // max - min exponent of var; nullopt encodes -infinity (zero polynomial).
    std::optional<long> deg_in(std::size_t var) const;
    // min exponent of var; nullopt encodes +infinity (zero polynomial).
    std::optional<long> ord_in(std::size_t var) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly& operator*=(const Gaussian& c);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Gaussian& c) { return a *= c; }
    friend LaurentPoly operator*(const Gaussian& c, LaurentPoly a) { return a *= c; }
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Multiplication by x^m.
    LaurentPoly shifted(const Monomial& m) const;
    // Applies x_j -> c_j x^{v_j}. The result has rank of the image monomials.
    LaurentPoly substitute(const MonomialSubstitution& images) const;
    // x_var -> x_var^{-1}.
    LaurentPoly beta_involution(std::size_t var) const;
    Gaussian evaluate(const std::vector<Gaussian>& point) const;
    // Coefficients with respect to one variable; keys are exponents of var,
    // values have that exponent removed.
    std::map<int, LaurentPoly> coefficients_in(std::size_t var) const;
    // Same polynomial viewed with extra trailing variables (new_rank >= rank).
    LaurentPoly extended(std::size_t new_rank) const;

    // Terms listed by decreasing graded-lex order, e.g. "2*x0^2*x1^-1 - i".
    std::string to_string(const std::vector<std::string>& names = {}) const;

    void add_term(const Monomial& m, const Gaussian& c);

private:
    std::size_t rank_ = 0;
    TermMap terms_;
};

// a / b when b divides a in the Laurent ring; nullopt otherwise. Throws DomainError if b == 0.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

// Unique associate of p under units c*x^m: componentwise minimal exponent 0 and
// leading coefficient 1. Zero maps to zero.
LaurentPoly canonical_associate(const LaurentPoly& p);

// Greatest common divisor in Q(i)[x^{+-1}], returned as canonical associate.
// gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

// gcd with exact cofactors: a == gcd * a_cofactor, b == gcd * b_cofactor.
struct GcdCofactors {
    LaurentPoly gcd;
    LaurentPoly a_cofactor;
    LaurentPoly b_cofactor;
};
GcdCofactors gcd_cofactors(const LaurentPoly& a, const LaurentPoly& b);

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }
inline LaurentPoly zero_like(const LaurentPoly& p) { return LaurentPoly(p.rank()); }
inline LaurentPoly one_like(const LaurentPoly& p) { return LaurentPoly::constant(p.rank(), 1); }

// Default variable names x0, x1, ...
std::vector<std::string> default_variable_names(std::size_t rank, const std::string& stem = "x");

}  // namespace agrarian
