#pragma once

#include "agrarian/group.hpp"
#include "agrarian/matrix.hpp"

#include <optional>
#include <vector>

namespace agrarian {

using ScalarMatrix = Matrix<Gaussian>;

ScalarMatrix scalar_identity(std::size_t n);

// sigma: G -> GL_n(Q(i)) given on generators, validated exactly on the relators.
class Representation {
public:
    // Throws ValidationError on wrong sizes, singular matrices, wrong supplied inverses
    // or a relator whose image is not the identity.
    Representation(const Presentation& p, std::vector<ScalarMatrix> matrices,
                   std::optional<std::vector<ScalarMatrix>> inverses = std::nullopt);
    static Representation trivial(const Presentation& p, std::size_t n = 1);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t generator_count() const noexcept { return matrices_.size(); }
    const ScalarMatrix& matrix(std::size_t gen) const { return matrices_.at(gen); }
    const ScalarMatrix& inverse_matrix(std::size_t gen) const { return inverses_.at(gen); }

    ScalarMatrix evaluate(const Word& w) const;
    // Representation of the presentation whose generator i is the word words[i].
    Representation transported(const Presentation& target, const std::vector<Word>& words) const;

private:
    std::size_t dim_ = 0;
    std::vector<ScalarMatrix> matrices_;
    std::vector<ScalarMatrix> inverses_;
};

// (sigma (x) q)(e) = sum_w c_w sigma(w) x^{q(w)}, an n x n matrix over Q(i)[Z^k].
Matrix<LaurentPoly> evaluate_sigma_q(const GroupRingElement& e, const Representation& sigma, const AbelianizationMap& q);
// Entrywise evaluation of a group-ring matrix into n x n blocks.
Matrix<LaurentPoly> evaluate_sigma_q(const Matrix<GroupRingElement>& m, const Representation& sigma,
                                     const AbelianizationMap& q);

}  // namespace agrarian
