#include "agrarian/trees.hpp"

#include "agrarian/error.hpp"

#include <algorithm>
#include <functional>

namespace agrarian {

RootedTree RootedTree::from_children(std::vector<RootedTree> children) {
    RootedTree t;
    std::sort(children.begin(), children.end(), std::greater<>());
    for (const auto& c : children) t.edges_ += c.edges_ + 1;
    t.children_ = std::move(children);
    return t;
}

RootedTree RootedTree::exp(RootedTree x) {
    RootedTree t;
    t.edges_ = x.edges_ + 1;
    t.children_.push_back(std::move(x));
    return t;
}

RootedTree RootedTree::path(std::size_t edges) {
    RootedTree t;
    for (std::size_t i = 0; i < edges; ++i) t = exp(std::move(t));
    return t;
}

std::size_t RootedTree::depth() const {
    std::size_t d = 0;
    for (const auto& c : children_) d = std::max(d, c.depth() + 1);
    return d;
}

const RootedTree& RootedTree::log() const {
    if (children_.empty()) throw DomainError("log of the one-vertex tree");
    return children_.front();
}

// log first, then the remainder: lexicographic on the descending child lists,
// a proper prefix being smaller.
std::strong_ordering operator<=>(const RootedTree& x, const RootedTree& y) {
    std::size_t n = std::min(x.children_.size(), y.children_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (auto c = x.children_[i] <=> y.children_[i]; c != 0) return c;
    return x.children_.size() <=> y.children_.size();
}

RootedTree operator+(const RootedTree& x, const RootedTree& y) {
    RootedTree t;
    t.children_.reserve(x.children_.size() + y.children_.size());
    std::merge(x.children_.begin(), x.children_.end(), y.children_.begin(), y.children_.end(),
               std::back_inserter(t.children_), std::greater<>());
    t.edges_ = x.edges_ + y.edges_;
    return t;
}

RootedTree operator*(const RootedTree& x, const RootedTree& y) {
    if (x.is_zero() || y.is_zero()) return {};
    std::vector<RootedTree> out;
    out.reserve(x.children_.size() * y.children_.size());
    for (const auto& a : x.children_)
        for (const auto& b : y.children_) out.push_back(a + b);
    return RootedTree::from_children(std::move(out));
}

std::string RootedTree::to_string() const {
    std::string s = "(";
    for (const auto& c : children_) s += c.to_string();
    return s + ")";
}

namespace {

constexpr std::size_t kMaxDepth = 4096;

struct TreeParser {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t depth = 0;

    RootedTree node() {
        if (pos >= text.size() || text[pos] != '(') throw ParseError("expected '('", pos);
        if (++depth > kMaxDepth) throw ParseError("tree nested too deeply", pos);
        ++pos;
        std::vector<RootedTree> children;
        while (pos < text.size() && text[pos] == '(') children.push_back(node());
        --depth;
        if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
        ++pos;
        return RootedTree::from_children(std::move(children));
    }
};

}  // namespace

RootedTree parse_tree(std::string_view text) {
    TreeParser p{text};
    auto t = p.node();
    if (p.pos != text.size()) throw ParseError("trailing characters after tree", p.pos);
    return t;
}

std::size_t RootedTreeHash::operator()(const RootedTree& x) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ x.children().size();
    for (const auto& c : x.children()) h = (h ^ (*this)(c)) * 0x100000001b3ULL + 0x7f4a7c15;
    return h;
}

}  // namespace agrarian
