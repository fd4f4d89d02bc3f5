#include "agrarian/error.hpp"
#include "agrarian/trees.hpp"
#include "tree_oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <unordered_set>

using namespace agrarian;

namespace agrarian {
void PrintTo(const RootedTree& t, std::ostream* os) { *os << t.to_string(); }
}  // namespace agrarian

namespace {

RootedTree e0() { return RootedTree::exp(RootedTree::zero()); }

std::vector<RootedTree> sample(std::uint64_t seed, std::size_t count, std::size_t max_edges) {
    std::mt19937_64 rng(seed);
    std::vector<RootedTree> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(oracle::to(oracle::random_tree(rng, max_edges)));
    return out;
}

}  // namespace

TEST(Trees, Examples) {
    auto x = parse_tree("((())())");
    EXPECT_EQ(RootedTree::zero() + x, x);
    EXPECT_EQ((e0() + e0()).to_string(), "(()())");
    EXPECT_EQ(RootedTree::zero() * x, RootedTree::zero());
    EXPECT_EQ(e0() * e0(), e0());
    EXPECT_EQ(diamond(RootedTree::zero()), RootedTree::path(2));
    EXPECT_EQ(diamond(e0()), RootedTree::path(3));
    EXPECT_LT(RootedTree::zero(), e0());
    EXPECT_LT(e0(), RootedTree::exp(e0()));
    EXPECT_EQ(x.edge_count(), 3u);
    EXPECT_EQ(x.log(), e0());
}

TEST(Trees, CanonicalFormAndSerialization) {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 300; ++i) {
        auto o = oracle::random_tree(rng, 12);
        auto t = oracle::to(o);
        auto shuffled = oracle::to(o);
        EXPECT_EQ(parse_tree(t.to_string()), t);
        EXPECT_EQ(oracle::ahu(oracle::from(t)), oracle::ahu(o));
        EXPECT_EQ(t, shuffled);
    }
    EXPECT_THROW(parse_tree("(()"), ParseError);
    EXPECT_THROW(parse_tree("()x"), ParseError);
    EXPECT_THROW(parse_tree(""), ParseError);
    try {
        parse_tree("(()))");
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
}

TEST(Trees, EqualityMatchesIsomorphism) {
    auto ts = sample(8, 120, 6);
    for (const auto& a : ts)
        for (const auto& b : ts) EXPECT_EQ(a == b, oracle::ahu(oracle::from(a)) == oracle::ahu(oracle::from(b)));
}

TEST(Trees, OperationsMatchOracle) {
    auto ts = sample(9, 60, 8);
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        auto a = oracle::from(ts[i]), b = oracle::from(ts[i + 1]);
        EXPECT_EQ(oracle::ahu(oracle::from(ts[i] + ts[i + 1])), oracle::ahu(oracle::sum(a, b)));
        EXPECT_EQ(oracle::ahu(oracle::from(ts[i] * ts[i + 1])), oracle::ahu(oracle::product(a, b)));
    }
}

TEST(Trees, SemiringLaws) {
    auto ts = sample(10, 90, 12);
    auto one = e0();
    for (std::size_t i = 0; i + 2 < ts.size(); i += 3) {
        const auto &x = ts[i], &y = ts[i + 1], &z = ts[i + 2];
        EXPECT_EQ((x + y) + z, x + (y + z));
        EXPECT_EQ(x + y, y + x);
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ((x + y) * z, x * z + y * z);
        EXPECT_EQ(x * one, x);
        EXPECT_EQ(one * x, x);
        EXPECT_EQ(x + RootedTree::zero(), x);
        // observed, not required: the product is commutative on every sample
        EXPECT_EQ(x * y, y * x);
    }
}

TEST(Trees, OrderMatchesRecursiveDefinition) {
    auto ts = sample(11, 150, 9);
    for (const auto& a : ts)
        for (const auto& b : ts) {
            int c = oracle::compare(oracle::from(a), oracle::from(b));
            auto o = a <=> b;
            EXPECT_EQ(c < 0, o < 0);
            EXPECT_EQ(c == 0, o == 0);
        }
}

TEST(Trees, TotalOrderAxioms) {
    auto ts = sample(12, 500, 12);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        EXPECT_LE(RootedTree::zero(), ts[i]);
        EXPECT_LT(ts[i], diamond(ts[i]));
        EXPECT_EQ(diamond(ts[i]).children().size(), 1u);
        EXPECT_EQ(diamond(ts[i]).children()[0].children()[0], ts[i]);
        std::size_t j = (i * 7 + 3) % ts.size(), k = (i * 13 + 5) % ts.size();
        const auto &a = ts[i], &b = ts[j], &c = ts[k];
        EXPECT_EQ((a <=> b) < 0, (b <=> a) > 0);
        if (a <= b && b <= a) EXPECT_EQ(a, b);
        if (a <= b && b <= c) EXPECT_LE(a, c);
    }
    auto sorted = ts;
    std::stable_sort(sorted.begin(), sorted.end());
    EXPECT_TRUE(std::is_sorted(sorted.begin(), sorted.end()));
    auto again = sorted;
    std::stable_sort(again.begin(), again.end());
    EXPECT_EQ(again, sorted);
}

TEST(Trees, HashIsConsistent) {
    auto ts = sample(13, 200, 7);
    std::unordered_set<RootedTree, RootedTreeHash> set(ts.begin(), ts.end());
    for (const auto& t : ts) EXPECT_TRUE(set.count(oracle::to(oracle::from(t))));
}
