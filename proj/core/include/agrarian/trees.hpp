#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace agrarian {

// Finite rooted tree up to isomorphism. Children are kept sorted in
// descending order, so equal trees have equal representations.
class RootedTree {
public:
    RootedTree() = default;  // the one-vertex tree
    static RootedTree zero() { return {}; }
    static RootedTree from_children(std::vector<RootedTree> children);
    // New root above x.
    static RootedTree exp(RootedTree x);
    static RootedTree path(std::size_t edges);

    bool is_zero() const noexcept { return children_.empty(); }
    const std::vector<RootedTree>& children() const noexcept { return children_; }
    std::size_t edge_count() const noexcept { return edges_; }
    std::size_t depth() const;

    // Largest child. Requires a nonzero tree.
    const RootedTree& log() const;

    friend RootedTree operator+(const RootedTree& x, const RootedTree& y);
    friend RootedTree operator*(const RootedTree& x, const RootedTree& y);
    friend bool operator==(const RootedTree& x, const RootedTree& y) { return x.children_ == y.children_; }
    friend std::strong_ordering operator<=>(const RootedTree& x, const RootedTree& y);

    // "()" for the one-vertex tree, "(X)" for exp(X), children concatenated.
    std::string to_string() const;

private:
    std::vector<RootedTree> children_;
    std::size_t edges_ = 0;
};

inline RootedTree diamond(const RootedTree& x) { return RootedTree::exp(RootedTree::exp(x)); }

RootedTree parse_tree(std::string_view text);

struct RootedTreeHash {
    std::size_t operator()(const RootedTree& x) const noexcept;
};

}  // namespace agrarian
