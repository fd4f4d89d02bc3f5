#include "agrarian/error.hpp"
#include "agrarian/fibration.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace agrarian;

namespace {

std::vector<mpq_class> q(std::initializer_list<long> v) {
    std::vector<mpq_class> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

FibrationInput simply_connected(std::vector<long> fiber, std::vector<mpq_class> base, std::optional<int> dim = {}) {
    FibrationInput in;
    in.fiber_betti = std::move(fiber);
    in.base_l2 = std::move(base);
    in.base_dim = dim;
    in.fiber_simply_connected = true;
    return in;
}

}  // namespace

TEST(Fibration, ConvolutionBound) {
    EXPECT_EQ(betti_bound(simply_connected({1}, q({0, 2, 0}))).values(), q({0, 2, 0}));
    auto r = betti_bound(simply_connected({1, 0, 1}, q({0, 2, 0})));
    EXPECT_EQ(r.values(), q({0, 2, 0, 2, 0}));
    EXPECT_EQ(r.degrees[1].kind, ValueKind::Bound);
    EXPECT_EQ(betti_bound(simply_connected({1, 3, 1}, q({0, 0, 0}))).values(), q({0, 0, 0, 0, 0}));
    auto missing = simply_connected({1}, q({0}));
    missing.fiber_simply_connected = false;
    EXPECT_THROW(betti_bound(missing), ValidationError);
}

TEST(Fibration, TwoDegreeFiber) {
    auto in = simply_connected({1, 0, 0, 1}, q({0, 2, 0}), 2);
    in.two_degree_support = 3;
    EXPECT_EQ(sphere_like_exact(in).values(), q({0, 2, 0, 0, 2, 0}));
    in.fiber_betti = {1, 0, 0, 0};
    EXPECT_EQ(sphere_like_exact(in).values(), q({0, 2, 0, 0, 0, 0}));
    in.two_degree_support = 1;
    EXPECT_THROW(sphere_like_exact(in), ValidationError);
    auto low = simply_connected({1, 0, 1}, q({0, 0, 0, 0}), 3);
    low.two_degree_support = 2;
    EXPECT_THROW(sphere_like_exact(low), ValidationError);
    auto stray = simply_connected({1, 1, 1}, q({0, 1, 0}), 2);
    stray.two_degree_support = 2;
    EXPECT_THROW(sphere_like_exact(stray), ValidationError);
}

TEST(Fibration, ExactNeverExceedsBound) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> small(0, 4);
    for (int it = 0; it < 100; ++it) {
        int dim = int(small(rng));
        int n = std::max(2, dim) + int(small(rng) % 2);
        std::vector<long> fiber(std::size_t(n + 1), 0);
        fiber[0] = 1;
        fiber[std::size_t(n)] = small(rng);
        std::vector<mpq_class> base;
        for (int i = 0; i <= dim; ++i) base.emplace_back(small(rng), 1 + small(rng));
        auto in = simply_connected(fiber, base, dim);
        in.two_degree_support = n;
        auto exact = sphere_like_exact(in), bound = betti_bound(in);
        for (std::size_t i = 0; i < exact.degrees.size(); ++i) {
            mpq_class b = i < bound.degrees.size() ? bound.degrees[i].value : mpq_class(0);
            EXPECT_LE(exact.degrees[i].value, b);
        }
        if (sgn(base[0]) == 0) EXPECT_EQ(exact.degrees[0].value, 0);
    }
}

TEST(Fibration, SurfaceBase) {
    auto in = simply_connected({1, 0, 1}, {});
    in.base_surface_euler = -2;
    EXPECT_EQ(surface_base(in).values(), q({0, 2, 0, 2}));
    in.base_surface_euler = 0;
    EXPECT_EQ(surface_base(in).values(), q({0, 0, 0, 0}));
    // contractible fiber: E is homotopy equivalent to B
    auto point = simply_connected({1}, {});
    point.base_surface_euler = -4;
    EXPECT_EQ(surface_base(point).values(), q({0, 4}));
    for (long chi : {1L, 2L}) {
        in.base_surface_euler = chi;
        EXPECT_THROW(surface_base(in), ValidationError);
    }
    in.base_surface_euler = -2;
    in.fiber_simply_connected = false;
    in.pi1_isomorphism = true;
    EXPECT_THROW(surface_base(in), ValidationError);
    auto consistent = simply_connected({1, 0, 1}, q({0, 2, 0}), 2);
    consistent.base_surface_euler = -2;
    EXPECT_EQ(surface_base(consistent).values(), q({0, 2, 0, 2}));
    consistent.base_l2 = q({0, 3, 0});
    EXPECT_THROW(surface_base(consistent), ValidationError);
}

TEST(Fibration, SingerCases) {
    auto odd = simply_connected({1, 0, 1}, {}, 3);
    odd.base_aspherical_singer = true;
    auto r = singer_cases(odd);
    EXPECT_EQ(r.clause, "singer_odd");
    for (const auto& d : r.degrees) EXPECT_EQ(d.value, 0);

    auto even = simply_connected({1}, q({0, 0, 5, 0, 0}), 4);
    even.base_aspherical_singer = true;
    EXPECT_EQ(singer_cases(even).values(), q({0, 0, 5, 0, 0}));

    auto curved = simply_connected({1, 2, 1}, q({0, 3, 0}), 2);
    curved.base_aspherical_singer = true;
    curved.base_negatively_curved = true;
    auto c = singer_cases(curved);
    EXPECT_EQ(c.values(), q({0, 3, 6, 3, 0}));
    EXPECT_TRUE(c.degrees[1 + 2].positive);  // n + dim F
    EXPECT_FALSE(c.degrees[0].positive);
    curved.base_l2 = q({0, 0, 0});
    EXPECT_THROW(singer_cases(curved), ValidationError);
    curved.base_l2 = q({1, 3, 0});
    EXPECT_THROW(singer_cases(curved), ValidationError);
    auto no_flag = simply_connected({1}, {}, 3);
    EXPECT_THROW(singer_cases(no_flag), ValidationError);
}

TEST(Fibration, ThreeManifoldBase) {
    auto in = simply_connected({1, 0, 1}, {}, 3);
    in.base_three_manifold = ThreeManifoldHypotheses{true, false, true, false};
    auto r = three_manifold_base(in);
    for (const auto& d : r.degrees) EXPECT_EQ(d.value, 0);
    in.base_three_manifold = ThreeManifoldHypotheses{true, false, false, false};
    EXPECT_THROW(three_manifold_base(in), ValidationError);
    in.base_three_manifold.reset();
    EXPECT_THROW(three_manifold_base(in), ValidationError);
    auto zero_base = simply_connected({1, 0, 1}, q({0, 0, 0, 0}), 3);
    for (const auto& v : betti_bound(zero_base).values()) EXPECT_EQ(v, 0);
}

TEST(Fibration, CoverScaling) {
    auto in = simply_connected({1, 0, 1}, q({0, 6, 0}), 2);
    in.cover_degree = 3;
    EXPECT_EQ(betti_bound(in).values(), q({0, 2, 0, 2, 0}));
    in.two_degree_support = 2;
    EXPECT_EQ(sphere_like_exact(in).values(), q({0, 2, 0, 2, 0}));
    in.cover_degree = 4;
    EXPECT_EQ(betti_bound(in).values()[1], mpq_class(3, 2));
    in.cover_degree = 0;
    EXPECT_THROW(betti_bound(in), ValidationError);
}

TEST(Fibration, InputValidation) {
    EXPECT_THROW(betti_bound(simply_connected({}, {})), ValidationError);
    EXPECT_THROW(betti_bound(simply_connected({2}, {})), ValidationError);
    EXPECT_THROW(betti_bound(simply_connected({1, -1}, {})), ValidationError);
    EXPECT_THROW(betti_bound(simply_connected({1}, q({-1}))), ValidationError);
    EXPECT_THROW(betti_bound(simply_connected({1}, q({0, 0, 1}), 1)), ValidationError);
}
