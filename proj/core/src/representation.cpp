#include "agrarian/representation.hpp"

namespace agrarian {

ScalarMatrix scalar_identity(std::size_t n) { return ScalarMatrix::identity(n, Gaussian(), Gaussian(1)); }

Representation::Representation(const Presentation& p, std::vector<ScalarMatrix> matrices,
                               std::optional<std::vector<ScalarMatrix>> inverses)
    : matrices_(std::move(matrices)) {
    if (matrices_.size() != p.generator_count())
        throw ValidationError("representation needs one matrix per generator");
    dim_ = matrices_.empty() ? 1 : matrices_[0].rows();
    if (dim_ == 0) throw ValidationError("representation dimension must be positive");
    const ScalarMatrix id = scalar_identity(dim_);
    for (std::size_t g = 0; g < matrices_.size(); ++g) {
        const auto& m = matrices_[g];
        if (m.rows() != dim_ || m.cols() != dim_)
            throw ValidationError("matrix for generator '" + p.names()[g] + "' has the wrong size");
        if (inverses) {
            if (inverses->size() != matrices_.size()) throw ValidationError("one inverse per generator required");
            const auto& inv = (*inverses)[g];
            if (inv.rows() != dim_ || inv.cols() != dim_ || m * inv != id || inv * m != id)
                throw ValidationError("supplied inverse for generator '" + p.names()[g] + "' is wrong");
            inverses_.push_back(inv);
        } else {
            try {
                inverses_.push_back(inverse_of(m));
            } catch (const DomainError&) {
                throw ValidationError("matrix for generator '" + p.names()[g] + "' is singular");
            }
        }
    }
    for (std::size_t r = 0; r < p.relator_count(); ++r)
        if (evaluate(p.relators()[r]) != id)
            throw ValidationError("relator " + std::to_string(r + 1) + " is not sent to the identity");
}

Representation Representation::trivial(const Presentation& p, std::size_t n) {
    Representation r(p, std::vector<ScalarMatrix>(p.generator_count(), scalar_identity(n)));
    r.dim_ = n;
    return r;
}

ScalarMatrix Representation::evaluate(const Word& w) const {
    ScalarMatrix m = scalar_identity(dim_);
    for (const Letter& l : w.letters()) {
        if (l.gen >= matrices_.size()) throw ValidationError("word uses a generator outside the representation");
        m = m * (l.exp > 0 ? matrices_[l.gen] : inverses_[l.gen]);
    }
    return m;
}

Representation Representation::transported(const Presentation& target, const std::vector<Word>& words) const {
    std::vector<ScalarMatrix> ms;
    for (const Word& w : words) ms.push_back(evaluate(w));
    return Representation(target, std::move(ms));
}

Matrix<LaurentPoly> evaluate_sigma_q(const GroupRingElement& e, const Representation& sigma, const AbelianizationMap& q) {
    const std::size_t n = sigma.dim(), k = q.rank;
    Matrix<LaurentPoly> out(n, n, LaurentPoly(k));
    for (const auto& [w, c] : e.terms()) {
        ScalarMatrix s = sigma.evaluate(w);
        Monomial mono = Monomial::from_vector(q.image(w));
        Gaussian cg{mpq_class(c)};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!s(i, j).is_zero()) out(i, j).add_term(mono, cg * s(i, j));
    }
    return out;
}

Matrix<LaurentPoly> evaluate_sigma_q(const Matrix<GroupRingElement>& m, const Representation& sigma,
                                     const AbelianizationMap& q) {
    const std::size_t n = sigma.dim();
    std::vector<std::vector<Matrix<LaurentPoly>>> blocks(m.rows(), std::vector<Matrix<LaurentPoly>>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) blocks[i][j] = evaluate_sigma_q(m(i, j), sigma, q);
    return assemble_blocks(blocks, n, n, LaurentPoly(q.rank));
}

}  // namespace agrarian
