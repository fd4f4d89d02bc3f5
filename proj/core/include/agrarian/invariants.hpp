#pragma once

#include "agrarian/chain_complex.hpp"
#include "agrarian/dieudonne.hpp"
#include "agrarian/polytope.hpp"
#include "agrarian/skew.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace agrarian {

struct BettiProfile {
    std::vector<std::size_t> values;  // b_0, b_1, ...
    std::vector<std::size_t> ranks;   // rank of d_1, d_2, ... over K(X)
    bool certified_by_bounds = true;  // false if an exact symbolic rank was needed

    long alternating_sum() const;
    bool all_zero() const;
};

// b_i = n rank C_i - rank d_i - rank d_{i+1} over Q(i)(X). Ranks are bounded below by
// evaluation at a seeded random point and above through d d = 0; an exact symbolic
// elimination runs only when the bounds leave a gap.
BettiProfile betti_numbers(const BasedChainComplex& c, const Representation& sigma, const AbelianizationMap& q,
                           std::uint64_t seed = 1);

// Alternating sum of the Betti numbers; throws CrossCheckFailure unless it equals n chi(C).
long euler_characteristic(const BasedChainComplex& c, const Representation& sigma, const AbelianizationMap& q,
                          std::uint64_t seed = 1);

// Unimodular k x k matrix whose first row is the primitive vector psi.
std::vector<std::vector<long>> adapted_basis(const std::vector<long>& psi);
// Substitution x^v -> x'^{M v}: the image of x_j is the monomial given by column j of M.
MonomialSubstitution basis_change(const std::vector<std::vector<long>>& m);
// phi = k psi with k >= 0 and psi primitive (psi = 0 when phi = 0).
std::pair<long, std::vector<long>> split_character(const std::vector<long>& phi);
// deg along phi: k * deg in the first variable after the adapted basis change. -infinity as nullopt.
std::optional<long> adapted_degree(const RatFun& f, const std::vector<long>& phi);

struct TorsionResult {
    RatFun value;                 // det(d + gamma): C_even -> C_odd for the first contraction
    RatFun alternative;           // same for the second pivot strategy
    DetValue<RatFun> dieudonne;   // recursion on the same matrix
    PolytopeElement polytope;
};

// Torsion of the evaluated complex. Throws UndefinedInvariant if it is not acyclic and
// CrossCheckFailure if the two contractions or the two determinant algorithms disagree.
TorsionResult torsion(const BasedChainComplex& c, const Representation& sigma, const AbelianizationMap& q,
                      std::uint64_t seed = 1);

PolytopeElement agrarian_polytope(const BasedChainComplex& c, const Representation& sigma, const AbelianizationMap& q,
                                  std::uint64_t seed = 1);

struct NormReport {
    std::vector<long> character;  // coordinates in Z^k
    long value = 0;
    std::optional<long> thickness_value;  // polytope-thickness method
    std::optional<long> adapted_value;    // adapted-degree method
    std::optional<PolytopeElement> polytope;
    std::string method;
    std::vector<std::string> notes;

    bool methods_agree() const { return thickness_value && adapted_value && *thickness_value == *adapted_value; }
};

// Thickness of the agrarian polytope along phi and k deg after basis adaptation;
// throws CrossCheckFailure if they differ.
NormReport agrarian_norm(const BasedChainComplex& c, const Representation& sigma, const AbelianizationMap& q,
                         const Character& phi, std::uint64_t seed = 1);

struct TwistedAlexanderOptions {
    std::optional<std::size_t> deleted_row;  // generator index; default first with q != 0
    bool cross_check = true;                 // also run agrarian_norm on the presentation complex
    std::uint64_t seed = 1;
};

// deg Det (sigma (x) q)(M2 without row j) - deg Det (sigma (x) q)(1 - x_j) along phi.
// Throws ValidationError unless the deficiency is 1 and some generator has q != 0,
// UndefinedInvariant if a determinant vanishes.
NormReport twisted_alexander_norm(const Presentation& p, const Representation& sigma, const Character& phi,
                                  const TwistedAlexanderOptions& options = {});

// Fiber data for a fibered character: a free kernel of rank r or a kernel of Euler characteristic chi.
struct FiberData {
    std::optional<long> rank;
    std::optional<long> euler;

    long euler_characteristic() const;  // throws ValidationError if both are missing
};

long thurston_norm_fibered(const FiberData& fiber, std::size_t n);

enum class InequalityStatus { Pass, Fail, Incomparable };

struct InequalityReport {
    InequalityStatus status = InequalityStatus::Incomparable;
    long lhs = 0;                 // twisted Alexander norm
    std::optional<long> rhs;      // n * Thurston norm
    bool equality_expected = false;
    bool equality_holds = false;
};

InequalityReport check_inequality(const Presentation& p, const Representation& sigma, const Character& phi,
                                  const std::optional<FiberData>& fiber, const TwistedAlexanderOptions& options = {});

// Validation summary for the 3-manifold complex shape.
struct ThreeManifoldShape {
    std::vector<Word> g;    // d_1(e_i) = p (1 - g_i)
    std::size_t pivot = 0;  // index j with q(g_j) != 0 and d_3 coefficient at f_j equal to 1 - g_j
    bool strict = false;    // every d_3 coefficient at f_i equals 1 - g_i
};

// Checks ranks (1, k, k, 1) with k >= 2, d_1 of the form (1 - g_i), a pivot index j,
// rank G_fab >= 2 and d d = 0 after evaluation. Throws ValidationError.
ThreeManifoldShape validate_three_manifold(const BasedChainComplex& c, const Representation& sigma,
                                           const AbelianizationMap& q);

// deg Det W - 2 deg Det(Id - sigma(g_j) q(g_j)) along phi, W = d_2 without column f_j and row e_j.
NormReport three_manifold_norm(const BasedChainComplex& c, const Representation& sigma, const AbelianizationMap& q,
                               const Character& phi);

// Elementary operation recorded by the diagonalization.
struct LaurentOperation {
    enum class Kind { SwapRows, SwapCols, AddRow, AddCol };
    Kind kind;
    std::size_t target;
    std::size_t source;
    std::optional<OrePoly> factor;  // AddRow: row_target += factor * row_source; AddCol: col_target += col_source * factor
};

struct Diagonalization {
    Matrix<OrePoly> diagonal;
    std::vector<LaurentOperation> operations;

    std::vector<OrePoly> diagonal_entries() const;  // nonzero entries
    long degree_sum() const;
};

// Row and column operations over D[t^+-1] bringing m to diagonal form.
Diagonalization diagonalize_over_laurent(const Matrix<OrePoly>& m);
// Replays recorded operations on m.
Matrix<OrePoly> apply_operations(Matrix<OrePoly> m, const std::vector<LaurentOperation>& ops);

struct KernelEuler {
    std::vector<long> betti;  // dim over D(Y) of H_i of the complex over D(Y)[t^+-1]
    long euler = 0;
    long norm = 0;            // k * (-euler)
    bool degenerate = false;  // negative norm (kernel of positive Euler characteristic)
};

// Euler characteristic of ker phi read off diagonalized boundaries over D(Y)[t^+-1]
// for an acyclic complex. Throws UndefinedInvariant otherwise.
KernelEuler kernel_euler_characteristic(const BasedChainComplex& c, const Representation& sigma,
                                        const AbelianizationMap& q, const Character& phi, std::uint64_t seed = 1);

}  // namespace agrarian
