#include "agrarian/fibration.hpp"

#include "agrarian/error.hpp"

#include <algorithm>

namespace agrarian {

namespace {

mpq_class at(const std::vector<mpq_class>& v, long i) {
    return i >= 0 && std::size_t(i) < v.size() ? v[std::size_t(i)] : mpq_class(0);
}

long at(const std::vector<long>& v, long i) { return i >= 0 && std::size_t(i) < v.size() ? v[std::size_t(i)] : 0; }

// Values for E; a cover of degree d multiplies every l2-Betti number by d.
std::vector<mpq_class> scaled_base(const FibrationInput& in) {
    std::vector<mpq_class> b = in.base_l2;
    for (auto& x : b) x /= in.cover_degree;
    return b;
}

void require_pi1(const FibrationInput& in) {
    if (!in.fiber_simply_connected && !in.pi1_isomorphism)
        throw ValidationError("fiber must be simply connected or induce an isomorphism on pi_1");
}

void require_simply_connected(const FibrationInput& in) {
    if (!in.fiber_simply_connected) throw ValidationError("fiber must be simply connected");
}

FibrationReport make(std::string clause, std::size_t length, ValueKind kind) {
    FibrationReport r{std::move(clause), {}};
    r.degrees.resize(length);
    for (auto& d : r.degrees) d.kind = kind;
    return r;
}

}  // namespace

void FibrationInput::validate() const {
    if (fiber_betti.empty()) throw ValidationError("fiber_betti must be nonempty");
    for (long b : fiber_betti)
        if (b < 0) throw ValidationError("fiber Betti numbers must be nonnegative");
    if (fiber_betti[0] != 1) throw ValidationError("fiber is connected, so b_0(F) must be 1");
    for (const auto& b : base_l2)
        if (sgn(b) < 0) throw ValidationError("base l2-Betti numbers must be nonnegative");
    if (cover_degree < 1) throw ValidationError("cover_degree must be positive");
    if (base_dim) {
        if (*base_dim < 0) throw ValidationError("base_dim must be nonnegative");
        for (std::size_t i = std::size_t(*base_dim) + 1; i < base_l2.size(); ++i)
            if (sgn(base_l2[i]) != 0) throw ValidationError("base l2-Betti number above the base dimension");
    }
    if (two_degree_support) {
        int n = *two_degree_support;
        if (n < 2) throw ValidationError("two-degree support needs n >= 2");
        if (base_dim && n < *base_dim) throw ValidationError("two-degree support needs n >= dim B");
        for (std::size_t j = 1; j < fiber_betti.size(); ++j)
            if (long(j) != n && fiber_betti[j] != 0)
                throw ValidationError("fiber homology outside degrees 0 and n");
    }
    if (base_surface_euler) {
        if (*base_surface_euler > 0)
            throw ValidationError("surface base must have infinite fundamental group (chi <= 0)");
        if (base_dim && *base_dim != 2) throw ValidationError("surface base has dimension 2");
        if (!base_l2.empty()) {
            std::vector<mpq_class> expected = {0, mpq_class(-*base_surface_euler * cover_degree), 0};
            for (std::size_t i = 0; i < std::max(base_l2.size(), expected.size()); ++i)
                if (at(base_l2, long(i)) != at(expected, long(i)))
                    throw ValidationError("base l2-Betti numbers disagree with the surface Euler characteristic");
        }
    }
    if (base_three_manifold) {
        if (base_dim && *base_dim != 3) throw ValidationError("3-manifold base has dimension 3");
        for (const auto& b : base_l2)
            if (base_three_manifold->satisfied() && sgn(b) != 0)
                throw ValidationError("3-manifold base under these hypotheses has vanishing l2-Betti numbers");
    }
    if (base_aspherical_singer) {
        if (!base_dim) throw ValidationError("Singer case needs base_dim");
        int d = *base_dim;
        for (std::size_t i = 0; i < base_l2.size(); ++i)
            if (sgn(base_l2[i]) != 0 && (d % 2 == 1 || long(i) != d / 2))
                throw ValidationError("Singer base has l2-Betti numbers only in the middle degree");
        if (base_negatively_curved && d % 2 == 0 && sgn(at(base_l2, d / 2)) == 0)
            throw ValidationError("negatively curved Singer base has positive middle l2-Betti number");
    }
    if (base_negatively_curved && !base_aspherical_singer)
        throw ValidationError("negatively curved flag applies to a closed aspherical Singer base");
}

std::vector<mpq_class> FibrationReport::values() const {
    std::vector<mpq_class> v;
    for (const auto& d : degrees) v.push_back(d.value);
    return v;
}

FibrationReport betti_bound(const FibrationInput& in) {
    in.validate();
    require_pi1(in);
    auto base = scaled_base(in);
    std::size_t len = base.empty() ? in.fiber_betti.size() : in.fiber_betti.size() + base.size() - 1;
    auto r = make("convolution_bound", len, ValueKind::Bound);
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = 0; j <= i && j < in.fiber_betti.size(); ++j)
            r.degrees[i].value += in.fiber_betti[j] * at(base, long(i - j));
    return r;
}

FibrationReport sphere_like_exact(const FibrationInput& in) {
    if (!in.two_degree_support) throw ValidationError("two-degree support flag not set");
    if (!in.base_dim) throw ValidationError("two-degree support needs base_dim");
    in.validate();
    require_pi1(in);
    auto base = scaled_base(in);
    long n = *in.two_degree_support;
    long bn = at(in.fiber_betti, n);
    std::size_t len = std::max(in.fiber_betti.size(), std::size_t(n + 1)) + std::max<std::size_t>(base.size(), 1) - 1;
    auto r = make("two_degree_fiber", len, ValueKind::Exact);
    for (std::size_t i = 0; i < len; ++i) r.degrees[i].value = at(base, long(i)) + bn * at(base, long(i) - n);
    return r;
}

FibrationReport surface_base(const FibrationInput& in) {
    if (!in.base_surface_euler) throw ValidationError("surface base flag not set");
    in.validate();
    require_simply_connected(in);
    mpq_class chi = *in.base_surface_euler;
    auto r = make("surface_base", in.fiber_betti.size() + 1, ValueKind::Exact);
    for (std::size_t i = 1; i < r.degrees.size(); ++i) r.degrees[i].value = -chi * in.fiber_betti[i - 1];
    return r;
}

FibrationReport singer_cases(const FibrationInput& in) {
    if (!in.base_aspherical_singer) throw ValidationError("aspherical Singer base flag not set");
    in.validate();
    require_pi1(in);
    int dim = *in.base_dim;
    std::size_t len = in.fiber_betti.size() + std::size_t(dim);
    if (dim % 2 == 1) return make("singer_odd", len, ValueKind::Exact);
    long n = dim / 2;
    mpq_class bn = at(scaled_base(in), n);
    auto r = make("singer_even", len, ValueKind::Exact);
    for (std::size_t i = 0; i < len; ++i) {
        long j = long(i) - n;
        r.degrees[i].value = at(in.fiber_betti, j) * bn;
        if (in.base_negatively_curved && at(in.fiber_betti, j) > 0) r.degrees[i].positive = true;
    }
    return r;
}

FibrationReport three_manifold_base(const FibrationInput& in) {
    if (!in.base_three_manifold || !in.base_three_manifold->satisfied())
        throw ValidationError("3-manifold base hypotheses not met");
    in.validate();
    require_simply_connected(in);
    return make("three_manifold_base", in.fiber_betti.size() + 3, ValueKind::Exact);
}

FibrationReport evaluate_fibration(const FibrationInput& in) {
    if (in.base_three_manifold) return three_manifold_base(in);
    if (in.base_surface_euler) return surface_base(in);
    if (in.base_aspherical_singer) return singer_cases(in);
    if (in.two_degree_support) return sphere_like_exact(in);
    return betti_bound(in);
}

}  // namespace agrarian
