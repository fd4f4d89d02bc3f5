#pragma once

#include "agrarian/trees.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

// Unsorted trees with the order evaluated straight from its recursive
// definition and isomorphism classes labelled by AHU strings.
namespace oracle {

struct OTree {
    std::vector<OTree> kids;
};

inline std::string ahu(const OTree& t) {
    std::vector<std::string> s;
    for (const auto& k : t.kids) s.push_back(ahu(k));
    std::sort(s.begin(), s.end());
    std::string out = "[";
    for (const auto& x : s) out += x;
    return out + "]";
}

inline int compare(const OTree& x, const OTree& y);

inline std::size_t largest(const OTree& x) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < x.kids.size(); ++i)
        if (compare(x.kids[i], x.kids[best]) > 0) best = i;
    return best;
}

inline int compare(const OTree& x, const OTree& y) {
    if (x.kids.empty()) return y.kids.empty() ? 0 : -1;
    if (y.kids.empty()) return 1;
    std::size_t i = largest(x), j = largest(y);
    if (int c = compare(x.kids[i], y.kids[j]); c != 0) return c;
    OTree rx = x, ry = y;
    rx.kids.erase(rx.kids.begin() + long(i));
    ry.kids.erase(ry.kids.begin() + long(j));
    return compare(rx, ry);
}

inline OTree sum(const OTree& x, const OTree& y) {
    OTree t = x;
    t.kids.insert(t.kids.end(), y.kids.begin(), y.kids.end());
    return t;
}

inline OTree product(const OTree& x, const OTree& y) {
    OTree t;
    for (const auto& a : x.kids)
        for (const auto& b : y.kids) t.kids.push_back(sum(a, b));
    return t;
}

inline OTree from(const agrarian::RootedTree& t) {
    OTree o;
    for (const auto& c : t.children()) o.kids.push_back(from(c));
    return o;
}

inline agrarian::RootedTree to(const OTree& o) {
    std::vector<agrarian::RootedTree> kids;
    for (const auto& k : o.kids) kids.push_back(to(k));
    return agrarian::RootedTree::from_children(std::move(kids));
}

// Random recursive tree: vertex v > 0 picks a parent uniformly among 0..v-1.
template <class Rng>
OTree random_tree(Rng& rng, std::size_t max_edges) {
    std::size_t edges = std::uniform_int_distribution<std::size_t>(0, max_edges)(rng);
    std::vector<std::vector<std::size_t>> kids(edges + 1);
    for (std::size_t v = 1; v <= edges; ++v) kids[std::uniform_int_distribution<std::size_t>(0, v - 1)(rng)].push_back(v);
    auto build = [&](auto&& self, std::size_t v) -> OTree {
        OTree t;
        for (auto c : kids[v]) t.kids.push_back(self(self, c));
        std::shuffle(t.kids.begin(), t.kids.end(), rng);
        return t;
    };
    return build(build, 0);
}

}  // namespace oracle
