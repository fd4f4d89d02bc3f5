#include "agrarian/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>

namespace agrarian {

namespace {

std::vector<Gaussian> random_point(std::size_t k, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(1, 97), den(1, 89), sign(0, 1);
    std::vector<Gaussian> pt;
    for (std::size_t j = 0; j < k; ++j) pt.emplace_back(mpq_class(sign(rng) ? num(rng) : -num(rng), den(rng)));
    return pt;
}

Matrix<Gaussian> specialize(const Matrix<LaurentPoly>& m, const std::vector<Gaussian>& pt) {
    return m.map([&](const LaurentPoly& p) { return p.evaluate(pt); });
}

Matrix<RatFun> to_ratfun(const Matrix<LaurentPoly>& m) {
    return m.map([](const LaurentPoly& p) { return RatFun(p); });
}

std::vector<std::size_t> module_dims(const BasedChainComplex& c, std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t r : c.ranks) out.push_back(n * r);
    return out;
}

struct EvaluatedComplex {
    std::vector<Matrix<LaurentPoly>> d;  // d[i-1] = d_i
    std::vector<std::size_t> dims;
    std::size_t k = 0;
};

EvaluatedComplex evaluate_checked(const BasedChainComplex& c, const Representation& sigma,
                                  const AbelianizationMap& q) {
    EvaluatedComplex e;
    e.d = evaluate_complex(c, sigma, q);
    check_boundaries_compose_to_zero(e.d);
    e.dims = module_dims(c, sigma.dim());
    e.k = q.rank;
    return e;
}

BettiProfile betti_of(const EvaluatedComplex& e, std::uint64_t seed) {
    const std::size_t m = e.d.size();
    const auto& N = e.dims;
    std::mt19937_64 rng(seed);
    // lower[i], upper[i] for d_{i+1}
    std::vector<std::size_t> lower(m, 0), upper(m, 0);
    auto refine_upper = [&] {
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t u = std::min(N[i], N[i + 1]);
            if (i > 0) u = std::min(u, N[i] - lower[i - 1]);
            if (i + 1 < m) u = std::min(u, N[i + 1] - lower[i + 1]);
            upper[i] = u;
        }
    };
    auto tight = [&] {
        for (std::size_t i = 0; i < m; ++i)
            if (lower[i] != upper[i]) return false;
        return true;
    };
    BettiProfile b;
    for (int attempt = 0; attempt < 3; ++attempt) {
        auto pt = random_point(e.k, rng);
        for (std::size_t i = 0; i < m; ++i)
            if (lower[i] < std::min(N[i], N[i + 1])) lower[i] = std::max(lower[i], rank_of(specialize(e.d[i], pt)));
        refine_upper();
        if (tight() || e.k == 0) break;
    }
    if (!tight()) {
        b.certified_by_bounds = false;
        for (std::size_t i = 0; i < m; ++i)
            if (lower[i] != upper[i]) lower[i] = upper[i] = rank_of(e.d[i]);
    }
    b.ranks = lower;
    for (std::size_t i = 0; i <= m; ++i) {
        std::size_t v = N[i];
        if (i > 0) v -= lower[i - 1];
        if (i < m) v -= lower[i];
        b.values.push_back(v);
    }
    return b;
}

void require_acyclic(const EvaluatedComplex& e, std::uint64_t seed) {
    if (!betti_of(e, seed).all_zero()) throw UndefinedInvariant("complex is not acyclic over Q(i)(X); torsion undefined");
}

long ratfun_degree_along(const LaurentPoly& p, const std::vector<long>& phi) {
    auto d = adapted_degree(RatFun(p), phi);
    if (!d) throw UndefinedInvariant("determinant vanishes; norm undefined by this formula");
    return *d;
}

PolytopeElement polytope_pair(const LaurentPoly& num, const LaurentPoly& den) {
    return {Polytope::newton(num), Polytope::newton(den)};
}

}  // namespace

long BettiProfile::alternating_sum() const {
    long s = 0;
    for (std::size_t i = 0; i < values.size(); ++i) s += (i % 2 ? -1 : 1) * long(values[i]);
    return s;
}

bool BettiProfile::all_zero() const {
    return std::all_of(values.begin(), values.end(), [](std::size_t v) { return v == 0; });
}

BettiProfile betti_numbers(const BasedChainComplex& c, const Representation& sigma, const AbelianizationMap& q,
                           std::uint64_t seed) {
    return betti_of(evaluate_checked(c, sigma, q), seed);
}

long euler_characteristic(const BasedChainComplex& c, const Representation& sigma, const AbelianizationMap& q,
                          std::uint64_t seed) {
    long chi = betti_numbers(c, sigma, q, seed).alternating_sum();
    if (chi != long(sigma.dim()) * c.euler_characteristic())
        throw CrossCheckFailure("alternating Betti sum differs from n chi(C)");
    return chi;
}

// ---------------------------------------------------------------- characters and degrees

std::pair<long, std::vector<long>> split_character(const std::vector<long>& phi) {
    long g = 0;
    for (long v : phi) g = std::gcd(g, v);
    std::vector<long> psi(phi.size(), 0);
    if (g != 0)
        for (std::size_t i = 0; i < phi.size(); ++i) psi[i] = phi[i] / g;
    return {g, psi};
}

std::vector<std::vector<long>> adapted_basis(const std::vector<long>& psi) {
    const std::size_t k = psi.size();
    std::vector<std::vector<long>> ci(k, std::vector<long>(k, 0));
    for (std::size_t i = 0; i < k; ++i) ci[i][i] = 1;
    if (std::all_of(psi.begin(), psi.end(), [](long v) { return v == 0; })) return ci;
    std::vector<long> v = psi;
    // v C = e_1 by column operations; ci tracks C^{-1}, whose first row is psi.
    while (true) {
        std::size_t p = k;
        for (std::size_t j = 0; j < k; ++j)
            if (v[j] != 0 && (p == k || std::labs(v[j]) < std::labs(v[p]))) p = j;
        bool done = true;
        for (std::size_t j = 0; j < k; ++j) {
            if (j == p || v[j] == 0) continue;
            long f = v[j] / v[p];
            v[j] -= f * v[p];
            for (std::size_t c = 0; c < k; ++c) ci[p][c] += f * ci[j][c];
            if (v[j] != 0) done = false;
        }
        if (done) {
            if (std::labs(v[p]) != 1) throw ValidationError("character is not primitive");
            std::swap(v[0], v[p]);
            std::swap(ci[0], ci[p]);
            if (v[0] < 0) {
                v[0] = 1;
                for (auto& x : ci[0]) x = -x;
            }
            break;
        }
    }
    if (ci[0] != psi) throw CrossCheckFailure("adapted basis does not start with the character");
    return ci;
}

MonomialSubstitution basis_change(const std::vector<std::vector<long>>& m) {
    const std::size_t k = m.size();
    MonomialSubstitution s(k);
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<long> col(k);
        for (std::size_t i = 0; i < k; ++i) col[i] = m[i][j];
        s[j] = MonomialImage{Gaussian(1), Monomial::from_vector(col)};
    }
    return s;
}

std::optional<long> adapted_degree(const RatFun& f, const std::vector<long>& phi) {
    if (f.is_zero()) return std::nullopt;
    if (f.rank() != phi.size()) throw ValidationError("character rank differs from the number of variables");
    auto [k, psi] = split_character(phi);
    if (k == 0) return 0;
    RatFun g = f.substitute(basis_change(adapted_basis(psi)));
    return k * *g.deg_in(0);
}

// ---------------------------------------------------------------- torsion

namespace {

Matrix<RatFun> contraction_matrix(const std::vector<Matrix<RatFun>>& d, const std::vector<std::size_t>& N,
                                  std::size_t k, bool reverse) {
    const std::size_t m = d.size();
    const RatFun zero(k), one = RatFun::constant(k, 1);
    // J[i] is a generalised inverse of d_i (index 0 unused).
    std::vector<Matrix<RatFun>> J(m + 1);
    for (std::size_t i = 1; i <= m; ++i) {
        const auto& di = d[i - 1];
        std::vector<std::size_t> order(N[i]);
        std::iota(order.begin(), order.end(), 0);
        if (reverse) std::reverse(order.begin(), order.end());
        PivotChoice pc = pivot_choice(di, order);
        Matrix<RatFun> inv = inverse_of(di.submatrix(pc.rows, pc.cols));
        J[i] = Matrix<RatFun>(N[i], N[i - 1], zero);
        for (std::size_t a = 0; a < pc.cols.size(); ++a)
            for (std::size_t b = 0; b < pc.rows.size(); ++b) J[i](pc.cols[a], pc.rows[b]) = inv(a, b);
    }
    // gamma_i = J_{i+1} (I - J_i d_i): C_i -> C_{i+1}
    std::vector<Matrix<RatFun>> gamma(m);
    for (std::size_t i = 0; i < m; ++i) {
        Matrix<RatFun> proj = Matrix<RatFun>::identity(N[i], zero, one);
        if (i > 0) proj = proj - J[i] * d[i - 1];
        gamma[i] = J[i + 1] * proj;
    }
    std::vector<std::size_t> row_off(m + 1, 0), col_off(m + 1, 0);
    std::size_t rows = 0, cols = 0;
    for (std::size_t i = 0; i <= m; ++i) {
        if (i % 2) {
            row_off[i] = rows;
            rows += N[i];
        } else {
            col_off[i] = cols;
            cols += N[i];
        }
    }
    if (rows != cols) throw UndefinedInvariant("even and odd chain modules differ in dimension; torsion undefined");
    Matrix<RatFun> big(rows, cols, zero);
    auto place = [&](const Matrix<RatFun>& blk, std::size_t r0, std::size_t c0) {
        for (std::size_t a = 0; a < blk.rows(); ++a)
            for (std::size_t b = 0; b < blk.cols(); ++b) big(r0 + a, c0 + b) = blk(a, b);
    };
    for (std::size_t i = 0; i <= m; i += 2) {
        if (i >= 1) place(d[i - 1], row_off[i - 1], col_off[i]);
        if (i < m) place(gamma[i], row_off[i + 1], col_off[i]);
    }
    return big;
}

}  // namespace

TorsionResult torsion(const BasedChainComplex& c, const Representation& sigma, const AbelianizationMap& q,
                      std::uint64_t seed) {
    EvaluatedComplex e = evaluate_checked(c, sigma, q);
    require_acyclic(e, seed);
    std::vector<Matrix<RatFun>> d;
    for (const auto& m : e.d) d.push_back(to_ratfun(m));
    Matrix<RatFun> first = contraction_matrix(d, e.dims, e.k, false);
    Matrix<RatFun> second = contraction_matrix(d, e.dims, e.k, true);
    TorsionResult out;
    out.value = det_commutative(first);
    out.alternative = det_commutative(second);
    out.dieudonne = dieudonne_det(first, true);
    if (out.value.is_zero()) throw CrossCheckFailure("d + gamma is singular on an acyclic complex");
    if (out.dieudonne.is_zero() || *out.dieudonne.representative != out.value)
        throw CrossCheckFailure("Dieudonne and Bareiss determinants of d + gamma differ");
    if (out.alternative != out.value && out.alternative != -out.value)
        throw CrossCheckFailure("torsion depends on the chain contraction");
    out.polytope = polytope_of(out.value);
    return out;
}

PolytopeElement agrarian_polytope(const BasedChainComplex& c, const Representation& sigma, const AbelianizationMap& q,
                                  std::uint64_t seed) {
    return torsion(c, sigma, q, seed).polytope;
}

NormReport agrarian_norm(const BasedChainComplex& c, const Representation& sigma, const AbelianizationMap& q,
                         const Character& phi, std::uint64_t seed) {
    NormReport r;
    r.character = phi.coordinates(q);
    r.method = "torsion";
    TorsionResult t = torsion(c, sigma, q, seed);
    r.polytope = t.polytope;
    r.thickness_value = thickness(t.polytope, r.character);
    r.adapted_value = adapted_degree(t.value, r.character);
    if (!r.methods_agree()) throw CrossCheckFailure("polytope thickness and adapted degree disagree");
    r.value = *r.thickness_value;
    if (r.value < 0) r.notes.push_back("negative value: kernel of positive Euler characteristic");
    return r;
}

// ---------------------------------------------------------------- deficiency-one formula

NormReport twisted_alexander_norm(const Presentation& p, const Representation& sigma, const Character& phi,
                                  const TwistedAlexanderOptions& options) {
    if (p.deficiency() != 1) throw ValidationError("deleted-row formula needs a deficiency-one presentation");
    if (sigma.generator_count() != p.generator_count()) throw ValidationError("representation does not match presentation");
    AbelianizationMap q = abelianize(p);
    NormReport r;
    r.character = phi.coordinates(q);
    r.method = "deleted-row formula";
    auto nonzero = [&](std::size_t j) {
        return std::any_of(q.images[j].begin(), q.images[j].end(), [](long v) { return v != 0; });
    };
    std::size_t j = p.generator_count();
    if (options.deleted_row) {
        j = *options.deleted_row;
        if (j >= p.generator_count() || !nonzero(j))
            throw ValidationError("deleted row must be a generator with nonzero abelian image");
    } else {
        for (std::size_t g = 0; g < p.generator_count() && j == p.generator_count(); ++g)
            if (nonzero(g)) j = g;
        if (j == p.generator_count()) throw ValidationError("no generator has nonzero abelian image");
    }
    Matrix<GroupRingElement> m2 = fox_jacobian(p).without_row_col(j, std::nullopt);
    LaurentPoly num = det_commutative(evaluate_sigma_q(m2, sigma, q));
    GroupRingElement one_minus = GroupRingElement::one() - GroupRingElement::of(Word::letter(j));
    LaurentPoly den = det_commutative(evaluate_sigma_q(one_minus, sigma, q));
    if (num.is_zero() || den.is_zero()) throw UndefinedInvariant("determinant vanishes; norm undefined by this formula");
    r.polytope = polytope_pair(num, den);
    r.thickness_value = thickness(*r.polytope, r.character);
    r.adapted_value = ratfun_degree_along(num, r.character) - ratfun_degree_along(den, r.character);
    if (!r.methods_agree()) throw CrossCheckFailure("polytope thickness and adapted degree disagree");
    r.value = *r.adapted_value;
    r.notes.push_back("deleted row " + p.names()[j]);
    if (options.cross_check) {
        NormReport t = agrarian_norm(presentation_complex(p), sigma, q, phi, options.seed);
        if (t.value != r.value || !pg_equal(*t.polytope, *r.polytope))
            throw CrossCheckFailure("deleted-row formula disagrees with the torsion of the presentation complex");
        r.notes.push_back("agrees with torsion");
    }
    if (r.value < 0) r.notes.push_back("negative value: kernel of positive Euler characteristic");
    return r;
}

long FiberData::euler_characteristic() const {
    if (euler && rank && *euler != 1 - *rank) throw ValidationError("fiber rank and Euler characteristic disagree");
    if (euler) return *euler;
    if (rank) {
        if (*rank < 0) throw ValidationError("fiber rank must be nonnegative");
        return 1 - *rank;
    }
    throw ValidationError("fiber data missing: supply fiber_rank or fiber_euler");
}

long thurston_norm_fibered(const FiberData& fiber, std::size_t n) { return long(n) * -fiber.euler_characteristic(); }

InequalityReport check_inequality(const Presentation& p, const Representation& sigma, const Character& phi,
                                  const std::optional<FiberData>& fiber, const TwistedAlexanderOptions& options) {
    InequalityReport r;
    r.lhs = twisted_alexander_norm(p, sigma, phi, options).value;
    if (!fiber) return r;
    r.rhs = phi.content() * thurston_norm_fibered(*fiber, sigma.dim());
    r.equality_expected = true;
    r.equality_holds = r.lhs == *r.rhs;
    r.status = r.lhs <= *r.rhs && r.equality_holds ? InequalityStatus::Pass : InequalityStatus::Fail;
    return r;
}

// ---------------------------------------------------------------- 3-manifolds

ThreeManifoldShape validate_three_manifold(const BasedChainComplex& c, const Representation& sigma,
                                           const AbelianizationMap& q) {
    c.validate();
    if (c.ranks.size() != 4 || c.ranks[0] != 1 || c.ranks[3] != 1 || c.ranks[1] != c.ranks[2])
        throw ValidationError("3-manifold complex must have ranks (1, k, k, 1)");
    const std::size_t k = c.ranks[1];
    if (k < 2) throw ValidationError("3-manifold complex needs k >= 2");
    if (q.rank < 2) throw ValidationError("3-manifold formula needs rank G_fab >= 2");
    ThreeManifoldShape s;
    for (std::size_t i = 0; i < k; ++i) {
        const GroupRingElement& e = c.boundary(1)(0, i);
        if (e.terms().size() != 2 || e.coefficient(Word()) != 1)
            throw ValidationError("d_1(e_" + std::to_string(i + 1) + ") is not of the form p (1 - g)");
        Word g = std::prev(e.terms().end())->first;
        if (e.coefficient(g) != -1) throw ValidationError("d_1(e_" + std::to_string(i + 1) + ") is not of the form p (1 - g)");
        s.g.push_back(g);
    }
    std::optional<std::size_t> pivot;
    s.strict = true;
    for (std::size_t i = 0; i < k; ++i) {
        bool match = c.boundary(3)(i, 0) == GroupRingElement::one() - GroupRingElement::of(s.g[i]);
        s.strict = s.strict && match;
        auto img = q.image(s.g[i]);
        bool nz = std::any_of(img.begin(), img.end(), [](long v) { return v != 0; });
        if (match && nz && !pivot) pivot = i;
    }
    if (!pivot) throw ValidationError("no index j with q(g_j) != 0 and d_3 coefficient 1 - g_j at f_j");
    s.pivot = *pivot;
    check_boundaries_compose_to_zero(evaluate_complex(c, sigma, q));
    return s;
}

NormReport three_manifold_norm(const BasedChainComplex& c, const Representation& sigma, const AbelianizationMap& q,
                               const Character& phi) {
    ThreeManifoldShape s = validate_three_manifold(c, sigma, q);
    NormReport r;
    r.character = phi.coordinates(q);
    r.method = "3-manifold W formula";
    Matrix<GroupRingElement> w = c.boundary(2).without_row_col(s.pivot, s.pivot);
    LaurentPoly num = det_commutative(evaluate_sigma_q(w, sigma, q));
    LaurentPoly den = det_commutative(evaluate_sigma_q(c.boundary(1)(0, s.pivot), sigma, q));
    if (num.is_zero() || den.is_zero()) throw UndefinedInvariant("determinant vanishes; norm undefined by this formula");
    r.polytope = polytope_pair(num, den * den);
    r.thickness_value = thickness(*r.polytope, r.character);
    r.adapted_value = ratfun_degree_along(num, r.character) - 2 * ratfun_degree_along(den, r.character);
    if (!r.methods_agree()) throw CrossCheckFailure("polytope thickness and adapted degree disagree");
    r.value = *r.adapted_value;
    if (!s.strict) r.notes.push_back("d_3 matches 1 - g_i only at the pivot");
    return r;
}

// ---------------------------------------------------------------- diagonalization over D[t^+-1]

namespace {

OrePoly t_power(const AutomorphismPtr& alpha, int k) {
    return OrePoly::monomial(alpha, RatFun::constant(alpha->rank(), 1), k);
}

// a = q b + r with deg r < deg b, for Laurent a, b.
OreDivMod laurent_left_divmod(const OrePoly& a, const OrePoly& b) {
    const int ma = a.min_exponent(), mb = b.min_exponent();
    OreDivMod d = left_divmod(a.left_shift(-ma), b.left_shift(-mb));
    return {t_power(a.alpha(), ma) * d.quotient * t_power(a.alpha(), -mb), d.remainder.left_shift(ma)};
}

// a = b q + r with deg r < deg b, for Laurent a, b.
OreDivMod laurent_right_divmod(const OrePoly& a, const OrePoly& b) {
    const auto& al = a.alpha();
    const int ma = a.min_exponent(), mb = b.min_exponent();
    OreDivMod d = right_divmod(a * t_power(al, -ma), b * t_power(al, -mb));
    return {t_power(al, -mb) * d.quotient * t_power(al, ma), d.remainder * t_power(al, ma)};
}

void apply_op(Matrix<OrePoly>& m, const LaurentOperation& op) {
    using K = LaurentOperation::Kind;
    switch (op.kind) {
        case K::SwapRows: m.swap_rows(op.target, op.source); break;
        case K::SwapCols: m.swap_cols(op.target, op.source); break;
        case K::AddRow:
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (!m(op.source, j).is_zero()) m(op.target, j) += *op.factor * m(op.source, j);
            break;
        case K::AddCol:
            for (std::size_t i = 0; i < m.rows(); ++i)
                if (!m(i, op.source).is_zero()) m(i, op.target) += m(i, op.source) * *op.factor;
            break;
    }
}

}  // namespace

std::vector<OrePoly> Diagonalization::diagonal_entries() const {
    std::vector<OrePoly> out;
    for (std::size_t i = 0; i < std::min(diagonal.rows(), diagonal.cols()); ++i)
        if (!diagonal(i, i).is_zero()) out.push_back(diagonal(i, i));
    return out;
}

long Diagonalization::degree_sum() const {
    long s = 0;
    for (const auto& e : diagonal_entries()) s += *e.deg();
    return s;
}

Matrix<OrePoly> apply_operations(Matrix<OrePoly> m, const std::vector<LaurentOperation>& ops) {
    for (const auto& op : ops) apply_op(m, op);
    return m;
}

Diagonalization diagonalize_over_laurent(const Matrix<OrePoly>& m) {
    using K = LaurentOperation::Kind;
    Diagonalization out{m, {}};
    Matrix<OrePoly>& d = out.diagonal;
    auto record = [&](LaurentOperation op) {
        apply_op(d, op);
        out.operations.push_back(std::move(op));
    };
    const std::size_t R = d.rows(), C = d.cols();
    for (std::size_t r = 0; r < std::min(R, C); ++r) {
        std::size_t bi = R, bj = C;
        for (std::size_t i = r; i < R; ++i)
            for (std::size_t j = r; j < C; ++j)
                if (!d(i, j).is_zero() && (bi == R || *d(i, j).deg() < *d(bi, bj).deg())) {
                    bi = i;
                    bj = j;
                }
        if (bi == R) break;
        if (bi != r) record({K::SwapRows, r, bi, std::nullopt});
        if (bj != r) record({K::SwapCols, r, bj, std::nullopt});
        while (true) {
            bool residue = false;
            for (std::size_t i = r + 1; i < R; ++i) {
                if (d(i, r).is_zero()) continue;
                OreDivMod qr = laurent_left_divmod(d(i, r), d(r, r));
                if (!qr.quotient.is_zero()) record({K::AddRow, i, r, -qr.quotient});
                if (!d(i, r).is_zero()) residue = true;
            }
            for (std::size_t j = r + 1; j < C; ++j) {
                if (d(r, j).is_zero()) continue;
                OreDivMod qr = laurent_right_divmod(d(r, j), d(r, r));
                if (!qr.quotient.is_zero()) record({K::AddCol, j, r, -qr.quotient});
                if (!d(r, j).is_zero()) residue = true;
            }
            if (!residue) break;
            // a remainder of smaller degree becomes the new pivot
            std::size_t pi = r, pj = r;
            for (std::size_t i = r + 1; i < R; ++i)
                if (!d(i, r).is_zero() && *d(i, r).deg() < *d(pi, pj).deg()) {
                    pi = i;
                    pj = r;
                }
            for (std::size_t j = r + 1; j < C; ++j)
                if (!d(r, j).is_zero() && *d(r, j).deg() < *d(pi, pj).deg()) {
                    pi = r;
                    pj = j;
                }
            if (pi != r) record({K::SwapRows, r, pi, std::nullopt});
            if (pj != r) record({K::SwapCols, r, pj, std::nullopt});
        }
    }
    return out;
}

KernelEuler kernel_euler_characteristic(const BasedChainComplex& c, const Representation& sigma,
                                        const AbelianizationMap& q, const Character& phi, std::uint64_t seed) {
    EvaluatedComplex e = evaluate_checked(c, sigma, q);
    require_acyclic(e, seed);
    auto [k, psi] = split_character(phi.coordinates(q));
    if (k == 0) throw ValidationError("kernel Euler characteristic needs a nonzero character");
    const std::size_t rank = q.rank;
    MonomialSubstitution change = basis_change(adapted_basis(psi));
    // drop the first (t) variable: the rest span D(Y)
    MonomialSubstitution drop(rank);
    drop[0] = MonomialImage{Gaussian(1), Monomial(rank - 1)};
    for (std::size_t j = 1; j < rank; ++j) {
        Monomial mj(rank - 1);
        mj[j - 1] = 1;
        drop[j] = MonomialImage{Gaussian(1), mj};
    }
    AutomorphismPtr alpha = FieldAutomorphism::identity(rank - 1);
    KernelEuler out;
    for (const auto& dm : e.d) {
        Matrix<OrePoly> ore = dm.map([&](const LaurentPoly& p) {
            std::map<int, RatFun> coeffs;
            for (const auto& [exp, cp] : p.substitute(change).coefficients_in(0)) coeffs.emplace(exp, RatFun(cp.substitute(drop)));
            return OrePoly::from_coefficients(alpha, coeffs);
        });
        out.betti.push_back(diagonalize_over_laurent(ore).degree_sum());
    }
    out.betti.push_back(0);
    for (std::size_t i = 0; i < out.betti.size(); ++i) out.euler += (i % 2 ? -1 : 1) * out.betti[i];
    out.norm = k * -out.euler;
    out.degenerate = out.norm < 0;
    return out;
}

}  // namespace agrarian
