#include "agrarian/chain_complex.hpp"

namespace agrarian {

void BasedChainComplex::validate() const {
    if (ranks.empty()) throw ValidationError("chain complex has no degrees");
    if (boundaries.size() + 1 != ranks.size()) throw ValidationError("need one boundary matrix per positive degree");
    for (std::size_t i = 0; i < boundaries.size(); ++i)
        if (boundaries[i].rows() != ranks[i] || boundaries[i].cols() != ranks[i + 1])
            throw ValidationError("boundary d_" + std::to_string(i + 1) + " has the wrong size");
    if (!labels.empty()) {
        if (labels.size() != ranks.size()) throw ValidationError("basis labels must cover every degree");
        for (std::size_t i = 0; i < ranks.size(); ++i)
            if (labels[i].size() != ranks[i]) throw ValidationError("basis labels have the wrong count");
    }
}

long BasedChainComplex::euler_characteristic() const {
    long chi = 0;
    for (std::size_t i = 0; i < ranks.size(); ++i) chi += (i % 2 ? -1 : 1) * long(ranks[i]);
    return chi;
}

std::size_t BasedChainComplex::generator_bound() const {
    std::size_t b = 0;
    for (const auto& m : boundaries)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) b = std::max(b, m(i, j).generator_bound());
    return b;
}

BasedChainComplex presentation_complex(const Presentation& p) {
    BasedChainComplex c;
    c.ranks = {1, p.generator_count(), p.relator_count()};
    c.boundaries = {augmentation_row(p), fox_jacobian(p)};
    std::vector<std::string> rels;
    for (std::size_t j = 0; j < p.relator_count(); ++j) rels.push_back("r" + std::to_string(j + 1));
    c.labels = {{"p"}, p.names(), rels};
    c.standard_shape = p.deficiency() == 1;
    if (p.relator_count() == 0) {
        c.ranks.pop_back();
        c.boundaries.pop_back();
        c.labels.pop_back();
    }
    c.validate();
    return c;
}

std::vector<Matrix<LaurentPoly>> evaluate_complex(const BasedChainComplex& c, const Representation& sigma,
                                                  const AbelianizationMap& q) {
    c.validate();
    if (c.generator_bound() > sigma.generator_count()) throw ValidationError("complex uses unknown generators");
    std::vector<Matrix<LaurentPoly>> out;
    for (const auto& b : c.boundaries) out.push_back(evaluate_sigma_q(b, sigma, q));
    return out;
}

void check_boundaries_compose_to_zero(const std::vector<Matrix<LaurentPoly>>& evaluated) {
    for (std::size_t i = 0; i + 1 < evaluated.size(); ++i)
        if (!(evaluated[i] * evaluated[i + 1]).is_zero_matrix())
            throw ValidationError("d_" + std::to_string(i + 1) + " d_" + std::to_string(i + 2) +
                                  " does not vanish after evaluation");
}

}  // namespace agrarian
