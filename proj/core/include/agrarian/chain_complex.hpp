#pragma once

#include "agrarian/group.hpp"
#include "agrarian/representation.hpp"

#include <string>
#include <vector>

namespace agrarian {

// Finite free based ZG-complex C_d -> ... -> C_0. boundaries[i] is the matrix of
// d_{i+1}: C_{i+1} -> C_i, of size ranks[i] x ranks[i+1], acting on column vectors.
struct BasedChainComplex {
    std::vector<std::size_t> ranks;
    std::vector<Matrix<GroupRingElement>> boundaries;
    std::vector<std::vector<std::string>> labels;  // optional preferred basis labels per degree
    bool standard_shape = true;                   // false for a presentation complex of deficiency != 1

    // Throws ValidationError on inconsistent sizes.
    void validate() const;
    std::size_t top_degree() const { return ranks.empty() ? 0 : ranks.size() - 1; }
    // d_i for 1 <= i <= top_degree.
    const Matrix<GroupRingElement>& boundary(std::size_t i) const { return boundaries.at(i - 1); }
    long euler_characteristic() const;
    std::size_t generator_bound() const;
};

// 0 -> ZG^{relators} -> ZG^{generators} -> ZG -> 0 with d_1 = (1 - x_i) and d_2 the
// right Fox Jacobian. standard_shape records whether the deficiency is 1.
BasedChainComplex presentation_complex(const Presentation& p);

// Boundaries evaluated through sigma (x) q; each is an (n ranks[i]) x (n ranks[i+1]) matrix.
std::vector<Matrix<LaurentPoly>> evaluate_complex(const BasedChainComplex& c, const Representation& sigma,
                                                  const AbelianizationMap& q);

// Throws ValidationError unless every evaluated composite d_i d_{i+1} vanishes.
void check_boundaries_compose_to_zero(const std::vector<Matrix<LaurentPoly>>& evaluated);

}  // namespace agrarian
