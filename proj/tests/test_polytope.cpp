#include "agrarian/error.hpp"
#include "agrarian/lp.hpp"
#include "agrarian/polytope.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace agrarian;

namespace {

LaurentPoly v(std::size_t rank, std::size_t j, int e = 1) { return LaurentPoly::variable(rank, j, e); }
LaurentPoly one(std::size_t rank) { return LaurentPoly::constant(rank, 1); }

}  // namespace

TEST(Lp, SimpleFeasibility) {
    EXPECT_TRUE(in_convex_hull({{0, 0}, {2, 0}, {0, 2}}, {1, 1}));
    EXPECT_FALSE(in_convex_hull({{0, 0}, {2, 0}, {0, 2}}, {2, 1}));
    EXPECT_TRUE(in_convex_hull({{0, 0, 0}, {4, 0, 0}, {0, 4, 0}, {0, 0, 4}}, {1, 1, 1}));
    EXPECT_FALSE(in_convex_hull({{0, 0, 0}, {4, 0, 0}, {0, 4, 0}, {0, 0, 4}}, {2, 2, 1}));
    // Degenerate: collinear points.
    EXPECT_TRUE(in_convex_hull({{0, 0}, {3, 3}}, {1, 1}));
    EXPECT_FALSE(in_convex_hull({{0, 0}, {3, 3}}, {1, 2}));
}

TEST(Polytope, HullMatchesPlanarOracle) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> d(-4, 4);
    for (int t = 0; t < 60; ++t) {
        std::vector<LatticePoint> pts(3 + t % 9);
        for (auto& p : pts) p = {d(rng), d(rng)};
        EXPECT_EQ(hull_extremes(pts), oracle::planar_hull(pts));
    }
}

TEST(Polytope, NewtonPolytopeIsMultiplicative) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 20; ++t) {
        LaurentPoly f = oracle::random_laurent(rng, 2, 3, -2, 2), g = oracle::random_laurent(rng, 2, 3, -2, 2);
        if (f.is_zero() || g.is_zero()) continue;
        EXPECT_EQ(Polytope::newton(f * g), minkowski_sum(Polytope::newton(f), Polytope::newton(g)));
    }
}

TEST(Polytope, GroupLaws) {
    RatFun f(v(2, 0) + one(2), v(2, 1) - one(2));
    RatFun g(v(2, 0) * v(2, 1) + v(2, 1, -1) + one(2), v(2, 0, 2) + one(2));
    EXPECT_TRUE(pg_equal(polytope_of(f * g), polytope_of(f) + polytope_of(g)));
    EXPECT_TRUE(pg_equal(polytope_of(f.inverse()), -polytope_of(f)));
    EXPECT_TRUE(pg_equal(polytope_of(f) - polytope_of(f), PolytopeElement::zero(2)));
    EXPECT_FALSE(pg_equal(polytope_of(f), PolytopeElement::zero(2)));
    // Translation invariance: monomial units have trivial polytope.
    EXPECT_TRUE(pg_equal(polytope_of(RatFun(v(2, 0, 3) * v(2, 1, -2))), PolytopeElement::zero(2)));
    EXPECT_THROW(polytope_of(RatFun(2)), DomainError);
}

TEST(Polytope, ThicknessIsAdditive) {
    RatFun f(v(2, 0, 2) + v(2, 1) + one(2), v(2, 0) - v(2, 1));
    auto e = polytope_of(f);
    EXPECT_EQ(thickness(e, {1, 0}), 2 - 1);
    EXPECT_EQ(thickness(e, {1, 1}), 2 - 0);
    EXPECT_EQ(thickness(e + e, {0, 1}), 2 * thickness(e, {0, 1}));
}

TEST(Polytope, SingleDecision) {
    // ((1+x)(1+y))/(1+x) is the segment of 1+y.
    RatFun f((one(2) + v(2, 0)) * (one(2) + v(2, 1)), one(2) + v(2, 0) + LaurentPoly::constant(2, 0));
    PolytopeElement raw{Polytope::newton((one(2) + v(2, 0)) * (one(2) + v(2, 1))), Polytope::newton(one(2) + v(2, 0))};
    auto s = is_single(raw, 4096);
    ASSERT_EQ(s.status, SingleStatus::Single);
    EXPECT_TRUE(equal_up_to_translation(*s.polytope, Polytope::newton(one(2) + v(2, 1))));
    // Segment minus an independent segment is not a polytope.
    PolytopeElement seg{Polytope::newton(one(2) + v(2, 0)), Polytope::newton(one(2) + v(2, 1))};
    EXPECT_EQ(is_single(seg, 4096).status, SingleStatus::NotSingle);
    // Triangle minus one of its edges is not a polytope.
    PolytopeElement tri{Polytope::newton(one(2) + v(2, 0) + v(2, 1)), Polytope::newton(one(2) + v(2, 0))};
    EXPECT_EQ(is_single(tri, 4096).status, SingleStatus::NotSingle);
    EXPECT_EQ(is_single(raw, 3).status, SingleStatus::Unknown);
}

TEST(Polytope, SingleRecoversPlantedSummand) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 15; ++t) {
        LaurentPoly a = oracle::random_laurent(rng, 2, 3, -1, 2), b = oracle::random_laurent(rng, 2, 3, -1, 2);
        if (a.is_zero() || b.is_zero()) continue;
        PolytopeElement e{minkowski_sum(Polytope::newton(a), Polytope::newton(b)), Polytope::newton(b)};
        auto s = is_single(e, 4096);
        ASSERT_EQ(s.status, SingleStatus::Single);
        EXPECT_EQ(*s.polytope, Polytope::newton(a));
    }
}

TEST(Polytope, CapFromEnvironment) {
    setenv("AGRARIAN_CAP_POLYTOPE", "17", 1);
    EXPECT_EQ(polytope_cap_from_env(), 17u);
    setenv("AGRARIAN_CAP_POLYTOPE", "x", 1);
    EXPECT_THROW(polytope_cap_from_env(), ValidationError);
    unsetenv("AGRARIAN_CAP_POLYTOPE");
    EXPECT_EQ(polytope_cap_from_env(), 4096u);
}
