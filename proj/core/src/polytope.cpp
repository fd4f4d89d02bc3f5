#include "agrarian/polytope.hpp"

#include "agrarian/error.hpp"
#include "agrarian/lp.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace agrarian {

std::vector<LatticePoint> hull_extremes(std::vector<LatticePoint> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() <= 2) return points;
    const std::size_t k = points.front().size();
    if (k == 1) return {points.front(), points.back()};
    std::vector<LatticePoint> kept = points;
    // Sequential removal is sound: dropping a non-vertex leaves the hull unchanged.
    for (std::size_t i = 0; i < kept.size();) {
        if (i == 0 || i + 1 == kept.size()) {  // lexicographic extremes are vertices
            ++i;
            continue;
        }
        std::vector<LatticePoint> others;
        others.reserve(kept.size() - 1);
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        if (in_convex_hull(others, kept[i])) kept.erase(kept.begin() + static_cast<long>(i));
        else ++i;
    }
    return kept;
}

Polytope Polytope::hull(std::vector<LatticePoint> points) {
    if (points.empty()) throw DomainError("hull of an empty point set");
    Polytope p;
    p.dim_ = points.front().size();
    for (const auto& q : points)
        if (q.size() != p.dim_) throw DomainError("point dimension mismatch");
    p.vertices_ = hull_extremes(std::move(points));
    return p;
}

Polytope Polytope::newton(const LaurentPoly& f) {
    if (f.is_zero()) throw DomainError("Newton polytope of zero");
    std::vector<LatticePoint> pts;
    for (const auto& [m, c] : f.terms()) pts.push_back(m.to_vector());
    return hull(std::move(pts));
}

bool Polytope::contains(const LatticePoint& p) const { return in_convex_hull(vertices_, p); }

long Polytope::width(const std::vector<long>& phi) const {
    if (phi.size() != dim_) throw DomainError("functional dimension mismatch");
    long lo = std::numeric_limits<long>::max(), hi = std::numeric_limits<long>::min();
    for (const auto& v : vertices_) {
        long s = 0;
        for (std::size_t i = 0; i < dim_; ++i) s += phi[i] * v[i];
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    return hi - lo;
}

Polytope Polytope::translated(const LatticePoint& v) const {
    Polytope p = *this;
    for (auto& x : p.vertices_)
        for (std::size_t i = 0; i < dim_; ++i) x[i] += v[i];
    return p;
}

Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
    if (a.dim_ != b.dim_) throw DomainError("Minkowski sum of polytopes of different dimension");
    std::vector<LatticePoint> pts;
    pts.reserve(a.vertices_.size() * b.vertices_.size());
    for (const auto& u : a.vertices_)
        for (const auto& v : b.vertices_) {
            LatticePoint w(a.dim_);
            for (std::size_t i = 0; i < a.dim_; ++i) w[i] = u[i] + v[i];
            pts.push_back(std::move(w));
        }
    return Polytope::hull(std::move(pts));
}

std::string Polytope::to_string() const {
    std::ostringstream os;
    os << "conv{";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i) os << ", ";
        os << "(";
        for (std::size_t j = 0; j < vertices_[i].size(); ++j) os << (j ? "," : "") << vertices_[i][j];
        os << ")";
    }
    return os.str() + "}";
}

bool equal_up_to_translation(const Polytope& a, const Polytope& b) {
    if (a.dim() != b.dim() || a.vertices().size() != b.vertices().size()) return false;
    LatticePoint sa = a.vertices().front(), sb = b.vertices().front();
    for (auto& x : sa) x = -x;
    for (auto& x : sb) x = -x;
    return a.translated(sa) == b.translated(sb);
}

bool pg_equal(const PolytopeElement& a, const PolytopeElement& b) {
    return equal_up_to_translation(minkowski_sum(a.pos, b.neg), minkowski_sum(a.neg, b.pos));
}

long thickness(const PolytopeElement& e, const std::vector<long>& phi) { return e.pos.width(phi) - e.neg.width(phi); }

PolytopeElement polytope_of(const RatFun& f) {
    if (f.is_zero()) throw DomainError("polytope of zero rational function");
    return {Polytope::newton(f.num()), Polytope::newton(f.den())};
}

SingleResult is_single(const PolytopeElement& e, std::size_t cap) {
    const Polytope& p = e.pos;
    const Polytope& q = e.neg;
    const std::size_t k = p.dim();
    if (p.vertices().size() * q.vertices().size() > cap) return {SingleStatus::Unknown, std::nullopt};
    // Every vertex of a Minkowski summand R with R + Q = P is v - w for vertices v, w.
    std::vector<LatticePoint> candidates;
    for (const auto& v : p.vertices())
        for (const auto& w : q.vertices()) {
            LatticePoint c(k);
            for (std::size_t i = 0; i < k; ++i) c[i] = v[i] - w[i];
            bool fits = true;
            for (const auto& w2 : q.vertices()) {
                LatticePoint s(k);
                for (std::size_t i = 0; i < k; ++i) s[i] = c[i] + w2[i];
                if (!p.contains(s)) {
                    fits = false;
                    break;
                }
            }
            if (fits) candidates.push_back(std::move(c));
        }
    if (candidates.empty()) return {SingleStatus::NotSingle, std::nullopt};
    Polytope r = Polytope::hull(std::move(candidates));
    if (minkowski_sum(r, q) == p) return {SingleStatus::Single, r};
    return {SingleStatus::NotSingle, std::nullopt};
}

std::size_t polytope_cap_from_env() {
    const char* v = std::getenv("AGRARIAN_CAP_POLYTOPE");
    if (!v || !*v) return 4096;
    char* end = nullptr;
    unsigned long long n = std::strtoull(v, &end, 10);
    if (*end != '\0' || n == 0) throw ValidationError("AGRARIAN_CAP_POLYTOPE must be a positive integer");
    return static_cast<std::size_t>(n);
}

}  // namespace agrarian
