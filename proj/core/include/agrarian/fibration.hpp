#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace agrarian {

// Conditions on a closed 3-manifold base, asserted by the caller.
struct ThreeManifoldHypotheses {
    bool orientable_irreducible = false;
    bool positive_virtual_b1 = false;
    bool geometric = false;
    bool nonpositively_curved = false;

    bool satisfied() const { return orientable_irreducible && (positive_virtual_b1 || geometric || nonpositively_curved); }
};

// Data of a fibration F -> E -> B. Topological hypotheses are flags supplied
// by the caller; only their mutual consistency is checked.
struct FibrationInput {
    std::vector<long> fiber_betti;     // b_j(F), b_0 = 1
    std::vector<mpq_class> base_l2;    // l2-Betti numbers of the base (or of a cover, see cover_degree)
    std::optional<int> base_dim;
    long cover_degree = 1;             // base_l2 describes a d-sheeted cover when > 1

    bool fiber_simply_connected = false;
    bool pi1_isomorphism = false;      // pi_1(E) -> pi_1(B) is an isomorphism
    std::optional<int> two_degree_support;  // homology of F only in degrees 0 and n
    bool base_aspherical_singer = false;
    bool base_negatively_curved = false;
    std::optional<long> base_surface_euler;
    std::optional<ThreeManifoldHypotheses> base_three_manifold;

    // Throws ValidationError on negative or inconsistent data.
    void validate() const;
};

enum class ValueKind { Exact, Bound };

struct FibrationValue {
    mpq_class value;
    ValueKind kind = ValueKind::Exact;
    bool positive = false;  // strictly positive by the negatively curved clause
};

struct FibrationReport {
    std::string clause;
    std::vector<FibrationValue> degrees;  // index i is b^(2)_i(E)

    std::vector<mpq_class> values() const;
};

// sum_j b_j(F) b_{i-j}(B) as an upper bound.
FibrationReport betti_bound(const FibrationInput& in);
// b_i(B) + b_n(F) b_{i-n}(B) for a fiber with homology in degrees 0 and n only.
FibrationReport sphere_like_exact(const FibrationInput& in);
// -chi(B) b_{i-1}(F) over a surface with infinite fundamental group.
FibrationReport surface_base(const FibrationInput& in);
// Closed aspherical base satisfying the Singer conjecture: zero in odd
// dimension, b_{i-n}(F) b_n(B) in dimension 2n.
FibrationReport singer_cases(const FibrationInput& in);
// Zero profile over a 3-manifold base meeting the stated hypotheses.
FibrationReport three_manifold_base(const FibrationInput& in);

// Picks the sharpest applicable evaluator.
FibrationReport evaluate_fibration(const FibrationInput& in);

}  // namespace agrarian
