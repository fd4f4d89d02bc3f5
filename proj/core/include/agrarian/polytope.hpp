#pragma once

#include "agrarian/laurent.hpp"
#include "agrarian/ratfun.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace agrarian {

using LatticePoint = std::vector<long>;

// Integral polytope in R^k stored by its vertex set (sorted, duplicate free).
class Polytope {
public:
    Polytope() = default;
    // Convex hull of a nonempty point set.
    static Polytope hull(std::vector<LatticePoint> points);
    static Polytope point(const LatticePoint& p) { return hull({p}); }
    static Polytope origin(std::size_t dim) { return point(LatticePoint(dim, 0)); }
    // Newton polytope of a nonzero Laurent polynomial.
    static Polytope newton(const LaurentPoly& p);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }
    bool contains(const LatticePoint& p) const;
    // max phi - min phi over the polytope.
    long width(const std::vector<long>& phi) const;
    Polytope translated(const LatticePoint& v) const;

    friend Polytope minkowski_sum(const Polytope& a, const Polytope& b);
    friend bool operator==(const Polytope& a, const Polytope& b) { return a.vertices_ == b.vertices_; }
    friend bool operator!=(const Polytope& a, const Polytope& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::size_t dim_ = 0;
    std::vector<LatticePoint> vertices_;
};

// Points of the input that are vertices of its convex hull.
std::vector<LatticePoint> hull_extremes(std::vector<LatticePoint> points);

// Formal difference pos - neg in the Grothendieck group of integral polytopes
// up to translation.
struct PolytopeElement {
    Polytope pos;
    Polytope neg;

    static PolytopeElement zero(std::size_t dim) { return {Polytope::origin(dim), Polytope::origin(dim)}; }
    PolytopeElement operator+(const PolytopeElement& o) const {
        return {minkowski_sum(pos, o.pos), minkowski_sum(neg, o.neg)};
    }
    PolytopeElement operator-() const { return {neg, pos}; }
    PolytopeElement operator-(const PolytopeElement& o) const { return *this + (-o); }
};

// a == b in the polytope group: a.pos + b.neg and a.neg + b.pos agree up to translation.
bool pg_equal(const PolytopeElement& a, const PolytopeElement& b);
// Equality of polytopes up to translation.
bool equal_up_to_translation(const Polytope& a, const Polytope& b);

// width_phi(pos) - width_phi(neg).
long thickness(const PolytopeElement& e, const std::vector<long>& phi);

// Polytope homomorphism on nonzero rational functions: NP(num) - NP(den).
PolytopeElement polytope_of(const RatFun& f);

enum class SingleStatus { Single, NotSingle, Unknown };

struct SingleResult {
    SingleStatus status = SingleStatus::Unknown;
    std::optional<Polytope> polytope;  // R with R + neg = pos when Single
};

// Decides whether pos - neg is represented by a single polytope. The test is exact;
// Unknown is returned only when |vert pos| * |vert neg| exceeds cap.
SingleResult is_single(const PolytopeElement& e, std::size_t cap);

// Cap read from AGRARIAN_CAP_POLYTOPE, default 4096.
std::size_t polytope_cap_from_env();

}  // namespace agrarian
