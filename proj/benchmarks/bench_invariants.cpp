#include "agrarian/dieudonne.hpp"
#include "agrarian/invariants.hpp"
#include "agrarian/trees.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace agrarian;

namespace {

const char* kTrefoil = "<a,b | a b a b^-1 a^-1 b^-1>";
const char* kFreeByCyclic = "<x,y,t | t x t^-1 x^-1 y^-1, t y t^-1 x^-1>";
const char* kRank2 = "<x,y,t | t x t^-1 x^-1, t y t^-1 x^-1 y^-1>";

void BM_TwistedAlexanderTrefoil(benchmark::State& state) {
    auto p = parse_presentation(kTrefoil);
    auto sigma = Representation::trivial(p, std::size_t(state.range(0)));
    Character phi(p, {1, 1});
    for (auto _ : state) benchmark::DoNotOptimize(twisted_alexander_norm(p, sigma, phi, {std::nullopt, false, 1}).value);
}
BENCHMARK(BM_TwistedAlexanderTrefoil)->Arg(1)->Arg(2)->Arg(3);

void BM_TorsionNorm(benchmark::State& state) {
    auto p = parse_presentation(state.range(0) == 0 ? kFreeByCyclic : kRank2);
    auto q = abelianize(p);
    auto c = presentation_complex(p);
    auto sigma = Representation::trivial(p);
    Character phi(p, {0, 0, 1});
    for (auto _ : state) benchmark::DoNotOptimize(agrarian_norm(c, sigma, q, phi).value);
}
BENCHMARK(BM_TorsionNorm)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BettiNumbers(benchmark::State& state) {
    auto p = parse_presentation(kFreeByCyclic);
    auto q = abelianize(p);
    auto c = presentation_complex(p);
    auto sigma = Representation::trivial(p, std::size_t(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(c, sigma, q).values);
}
BENCHMARK(BM_BettiNumbers)->Arg(1)->Arg(2)->Arg(3);

void BM_KernelEuler(benchmark::State& state) {
    auto p = parse_presentation(kTrefoil);
    auto q = abelianize(p);
    auto c = presentation_complex(p);
    auto sigma = Representation::trivial(p);
    Character phi(p, {1, 1});
    for (auto _ : state) benchmark::DoNotOptimize(kernel_euler_characteristic(c, sigma, q, phi).norm);
}
BENCHMARK(BM_KernelEuler);

void BM_DieudonneCommutative(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<long> coeff(-3, 3);
    const auto n = std::size_t(state.range(0));
    Matrix<RatFun> m(n, n, RatFun());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            LaurentPoly p = LaurentPoly::constant(1, coeff(rng));
            p += LaurentPoly::constant(1, coeff(rng)) * LaurentPoly::variable(1, 0);
            m(i, j) = RatFun(p);
        }
    for (auto _ : state) benchmark::DoNotOptimize(dieudonne_det(m, true).is_zero());
}
BENCHMARK(BM_DieudonneCommutative)->DenseRange(2, 5);

void BM_TreeProduct(benchmark::State& state) {
    RootedTree x = parse_tree("((())(()())())"), y = parse_tree("(((()))()(()))");
    for (int i = 0; i < state.range(0); ++i) x = x + diamond(y);
    for (auto _ : state) benchmark::DoNotOptimize((x * y).edge_count());
}
BENCHMARK(BM_TreeProduct)->Arg(1)->Arg(4)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
