#pragma once
// Finite matrix groups, brute-force representation search, fixtures and an
// independent one-variable Fox calculus.

#include "agrarian/chain_complex.hpp"
#include "agrarian/group.hpp"
#include "agrarian/representation.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using agrarian::Gaussian;
using agrarian::ScalarMatrix;

inline ScalarMatrix mat2(Gaussian a, Gaussian b, Gaussian c, Gaussian d) {
    ScalarMatrix m(2, 2, Gaussian());
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

// Closure of a generating set under multiplication (finite groups only).
inline std::vector<ScalarMatrix> closure(const std::vector<ScalarMatrix>& gens) {
    std::vector<ScalarMatrix> out{agrarian::scalar_identity(gens.at(0).rows())};
    for (std::size_t i = 0; i < out.size(); ++i)
        for (const auto& g : gens) {
            ScalarMatrix p = out[i] * g;
            if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
        }
    return out;
}

inline std::vector<ScalarMatrix> quaternion_group() {
    Gaussian i = Gaussian::imag_unit();
    return closure({mat2(i, 0, 0, -i), mat2(0, 1, -1, 0)});
}

inline std::vector<ScalarMatrix> dihedral_group() { return closure({mat2(0, -1, 1, 0), mat2(1, 0, 0, -1)}); }

// Signed permutation matrices of size 2 with entries in {0, +-1, +-i}.
inline std::vector<ScalarMatrix> monomial_group_2() {
    Gaussian i = Gaussian::imag_unit();
    return closure({mat2(i, 0, 0, 1), mat2(0, 1, 1, 0)});
}

inline std::vector<ScalarMatrix> permutation_group_3() {
    ScalarMatrix c(3, 3, Gaussian()), s(3, 3, Gaussian());
    c(1, 0) = c(2, 1) = c(0, 2) = 1;
    s(1, 0) = s(0, 1) = s(2, 2) = 1;
    return closure({c, s});
}

inline std::vector<ScalarMatrix> scalars_1() {
    Gaussian i = Gaussian::imag_unit();
    std::vector<ScalarMatrix> out;
    for (Gaussian g : {Gaussian(1), Gaussian(-1), i, -i}) {
        ScalarMatrix m(1, 1, Gaussian());
        m(0, 0) = g;
        out.push_back(m);
    }
    return out;
}

// All assignments generator -> element satisfying every relator, up to `limit`.
inline std::vector<std::vector<ScalarMatrix>> find_representations(const agrarian::Presentation& p,
                                                                   const std::vector<ScalarMatrix>& elements,
                                                                   std::size_t limit = 64) {
    std::vector<std::vector<ScalarMatrix>> out;
    const std::size_t n = p.generator_count();
    std::vector<std::size_t> idx(n, 0);
    std::vector<ScalarMatrix> inv;
    for (const auto& e : elements) inv.push_back(agrarian::inverse_of(e));
    const ScalarMatrix id = agrarian::scalar_identity(elements[0].rows());
    while (out.size() < limit) {
        bool ok = true;
        for (const auto& r : p.relators()) {
            ScalarMatrix m = id;
            for (const auto& l : r.letters()) m = m * (l.exp > 0 ? elements[idx[l.gen]] : inv[idx[l.gen]]);
            if (m != id) {
                ok = false;
                break;
            }
        }
        if (ok) {
            std::vector<ScalarMatrix> a;
            for (std::size_t g = 0; g < n; ++g) a.push_back(elements[idx[g]]);
            out.push_back(a);
        }
        std::size_t g = 0;
        while (g < n && ++idx[g] == elements.size()) idx[g++] = 0;
        if (g == n) break;
    }
    return out;
}

// The representation with the largest image among the solutions (deterministic).
inline std::optional<agrarian::Representation> richest_representation(const agrarian::Presentation& p,
                                                                       const std::vector<ScalarMatrix>& elements) {
    auto all = find_representations(p, elements, 1u << 20);
    std::optional<agrarian::Representation> best;
    std::size_t best_size = 0;
    for (const auto& a : all) {
        std::size_t s = closure(a).size();
        if (s > best_size) {
            best_size = s;
            best.emplace(p, a);
        }
    }
    return best;
}

inline const char* kTrefoil = "<a,b | a b a b^-1 a^-1 b^-1>";
inline const char* kCircle = "<t | >";
inline const char* kF2xZ = "<x,y,t | t x t^-1 x^-1 y^-1, t y t^-1 x^-1>";
// F_2 x| Z with x -> x, y -> y x: abelianization of rank 2.
inline const char* kRank2 = "<x,y,t | t x t^-1 x^-1, t y t^-1 x^-1 y^-1>";

// F_r x| Z for a random automorphism of F_r built from `steps` elementary moves.
inline agrarian::Presentation random_free_by_cyclic(std::mt19937_64& rng, std::size_t r, int steps) {
    using agrarian::Word;
    std::vector<Word> img;
    for (std::size_t i = 0; i < r; ++i) img.push_back(Word::letter(i));
    std::uniform_int_distribution<std::size_t> pick(0, r - 1);
    std::uniform_int_distribution<int> kind(0, 2), sign(0, 1);
    for (int s = 0; s < steps; ++s) {
        std::size_t i = pick(rng), j = pick(rng);
        int e = sign(rng) ? 1 : -1;
        int k = kind(rng);
        if (k == 2 || i == j) img[i] = img[i].inverse();
        else if (k == 0) img[i] = img[i] * img[j].power(e);
        else img[i] = img[j].power(e) * img[i];
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < r; ++i) names.push_back("x" + std::to_string(i + 1));
    names.push_back("t");
    std::vector<Word> rels;
    Word t = Word::letter(r);
    for (std::size_t i = 0; i < r; ++i) rels.push_back(t * Word::letter(i) * t.inverse() * img[i].inverse());
    return agrarian::Presentation(names, rels);
}

// One-variable Fox calculus on raw letter lists, independent of the library's
// group ring: d r / d x_gen evaluated at x_j -> s^{deg[j]}, as exponent -> coefficient.
// Uses the left derivative.
inline std::map<long, long> fox_alexander(const std::vector<std::pair<std::size_t, int>>& letters, std::size_t gen,
                                          const std::vector<long>& deg) {
    std::map<long, long> out;
    long prefix = 0;
    for (auto [g, e] : letters) {
        if (e > 0) {
            if (g == gen) out[prefix] += 1;
            prefix += deg[g];
        } else {
            prefix -= deg[g];
            if (g == gen) out[prefix] -= 1;
        }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

inline long poly_degree(const std::map<long, long>& p) { return p.empty() ? -1 : p.rbegin()->first - p.begin()->first; }

// A group together with a based complex over it.
struct ComplexFixture {
    agrarian::Presentation group;
    agrarian::BasedChainComplex complex;
};

inline agrarian::GroupRingElement one_minus(const agrarian::Word& w) {
    return agrarian::GroupRingElement::one() - agrarian::GroupRingElement::of(w);
}

// Cellular complex of the 3-torus: d_1 = (1-x, 1-y, 1-z), d_2 the cross-product matrix, d_3 = d_1^T.
inline ComplexFixture torus3_complex() {
    using agrarian::GroupRingElement;
    using agrarian::Word;
    auto p = agrarian::parse_presentation("<x,y,z | x y x^-1 y^-1, y z y^-1 z^-1, x z x^-1 z^-1>");
    GroupRingElement u[3] = {one_minus(Word::letter(0)), one_minus(Word::letter(1)), one_minus(Word::letter(2))};
    agrarian::BasedChainComplex c;
    c.ranks = {1, 3, 3, 1};
    agrarian::Matrix<GroupRingElement> d1(1, 3, GroupRingElement()), d2(3, 3, GroupRingElement()),
        d3(3, 1, GroupRingElement());
    for (int i = 0; i < 3; ++i) {
        d1(0, i) = u[i];
        d3(i, 0) = u[i];
    }
    d2(0, 1) = -u[2];
    d2(0, 2) = u[1];
    d2(1, 0) = u[2];
    d2(1, 2) = -u[0];
    d2(2, 0) = -u[1];
    d2(2, 1) = u[0];
    c.boundaries = {d1, d2, d3};
    return {p, c};
}

// Product complex of the genus-2 surface with the circle. Generators (c, a1, b1, a2, b2),
// C_1 = (c, e_1..e_4), C_2 = (f_R, e_i x c), C_3 = (R x c).
inline ComplexFixture surface_times_circle_complex() {
    using agrarian::GroupRingElement;
    using agrarian::Word;
    auto p = agrarian::parse_presentation(
        "<c,a1,b1,a2,b2 | a1 b1 a1^-1 b1^-1 a2 b2 a2^-1 b2^-1, a1 c a1^-1 c^-1, b1 c b1^-1 c^-1, "
        "a2 c a2^-1 c^-1, b2 c b2^-1 c^-1>");
    const Word& r = p.relators()[0];
    Word c = Word::letter(0);
    agrarian::BasedChainComplex cx;
    cx.ranks = {1, 5, 5, 1};
    agrarian::Matrix<GroupRingElement> d1(1, 5, GroupRingElement()), d2(5, 5, GroupRingElement()),
        d3(5, 1, GroupRingElement());
    d1(0, 0) = one_minus(c);
    d3(0, 0) = one_minus(c);
    for (std::size_t i = 1; i <= 4; ++i) {
        Word x = Word::letter(i);
        d1(0, i) = one_minus(x);
        d2(i, 0) = agrarian::right_fox_derivative(r, i);
        d2(0, i) = one_minus(x);
        d2(i, i) = -one_minus(c);
        d3(i, 0) = agrarian::right_fox_derivative(r, i);
    }
    cx.boundaries = {d1, d2, d3};
    return {p, cx};
}

// Random based complex over the free group <a, b>: a direct sum of elementary pieces
// ZG -e-> ZG and zero-differential summands, conjugated by elementary basis changes.
inline agrarian::BasedChainComplex random_free_complex(std::mt19937_64& rng, std::size_t max_rank, int word_len) {
    using agrarian::GroupRingElement;
    using agrarian::Matrix;
    using agrarian::Word;
    std::uniform_int_distribution<std::size_t> rk(1, max_rank), top(1, 3);
    std::uniform_int_distribution<int> len(0, word_len), coin(0, 1), gen(0, 1), co(1, 2);
    auto word = [&](int l) {
        std::vector<agrarian::Letter> ls;
        for (int i = 0; i < l; ++i) ls.push_back({std::size_t(gen(rng)), coin(rng) ? 1 : -1});
        return Word(ls);
    };
    auto element = [&] {
        GroupRingElement e;
        int terms = 1 + coin(rng);
        for (int t = 0; t < terms; ++t) e += GroupRingElement::of(word(len(rng) / 2), coin(rng) ? co(rng) : -co(rng));
        return e;
    };
    const std::size_t d = top(rng);
    agrarian::BasedChainComplex c;
    for (std::size_t i = 0; i <= d; ++i) c.ranks.push_back(rk(rng));
    for (std::size_t i = 1; i <= d; ++i) c.boundaries.emplace_back(c.ranks[i - 1], c.ranks[i], GroupRingElement());
    // pair basis elements of C_i with unused ones of C_{i-1}
    std::vector<std::vector<bool>> used(d + 1);
    for (std::size_t i = 0; i <= d; ++i) used[i].assign(c.ranks[i], false);
    for (std::size_t i = d; i >= 1; --i)
        for (std::size_t v = 0; v < c.ranks[i]; ++v) {
            if (used[i][v] || coin(rng)) continue;
            for (std::size_t u = 0; u < c.ranks[i - 1]; ++u)
                if (!used[i - 1][u]) {
                    GroupRingElement e = element();
                    if (e.is_zero()) break;
                    c.boundaries[i - 1](u, v) = e;
                    used[i][v] = used[i - 1][u] = true;
                    break;
                }
        }
    // elementary basis changes P = I + g E_ab in each degree: d_i -> P_{i-1} d_i P_i^{-1}
    for (std::size_t i = 0; i <= d; ++i) {
        if (c.ranks[i] < 2) continue;
        std::uniform_int_distribution<std::size_t> idx(0, c.ranks[i] - 1);
        for (int s = 0; s < 2; ++s) {
            std::size_t a = idx(rng), b = idx(rng);
            if (a == b) continue;
            GroupRingElement g = GroupRingElement::of(word(1 + len(rng) / 3), coin(rng) ? 1 : -1);
            if (i >= 1) {
                auto& m = c.boundaries[i - 1];  // right-multiply by I - g E_ab: col b -= col a g
                for (std::size_t r = 0; r < m.rows(); ++r) m(r, b) -= m(r, a) * g;
            }
            if (i < d) {
                auto& m = c.boundaries[i];  // left-multiply by I + g E_ab: row a += g row b
                for (std::size_t col = 0; col < m.cols(); ++col) m(a, col) += g * m(b, col);
            }
        }
    }
    c.validate();
    return c;
}

// Random invertible n x n matrices with small Gaussian integer entries.
inline std::vector<ScalarMatrix> random_invertible(std::mt19937_64& rng, std::size_t count, std::size_t n) {
    std::uniform_int_distribution<int> e(-2, 2);
    std::vector<ScalarMatrix> out;
    while (out.size() < count) {
        ScalarMatrix m(n, n, Gaussian());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = Gaussian(e(rng), e(rng) / 2);
        if (!agrarian::det_commutative(m).is_zero()) out.push_back(m);
    }
    return out;
}

}  // namespace oracle
