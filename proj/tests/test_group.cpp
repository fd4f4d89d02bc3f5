#include "agrarian/chain_complex.hpp"
#include "agrarian/group.hpp"
#include "agrarian/representation.hpp"
#include "agrarian/smith.hpp"
#include "group_oracles.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace agrarian;

namespace {

GroupRingElement gre(const Word& w) { return GroupRingElement::of(w); }

Word random_word(std::mt19937_64& rng, std::size_t gens, int len) {
    std::uniform_int_distribution<std::size_t> g(0, gens - 1);
    std::uniform_int_distribution<int> s(0, 1);
    std::vector<Letter> ls;
    for (int i = 0; i < len; ++i) ls.push_back({g(rng), s(rng) ? 1 : -1});
    return Word(ls);
}

}  // namespace

TEST(Smith, KnownExample) {
    IntMatrix a = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    auto s = smith_normal_form(a, 3);
    ASSERT_EQ(s.rank, 3u);
    EXPECT_EQ(s.diagonal, (std::vector<mpz_class>{2, 6, 12}));
}

TEST(Smith, RandomFactorisations) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(-6, 6), sz(1, 4);
    for (int t = 0; t < 50; ++t) {
        std::size_t r = std::size_t(sz(rng)), c = std::size_t(sz(rng));
        IntMatrix a(r, std::vector<mpz_class>(c));
        for (auto& row : a)
            for (auto& x : row) x = d(rng);
        if (t % 5 == 0) a.back() = a.front();
        auto s = smith_normal_form(a, c);
        EXPECT_EQ(int_product(int_product(s.u, a, r), s.v, c), s.d);
        EXPECT_EQ(int_product(s.v, s.v_inverse, c), int_identity(c));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j || i >= s.rank) EXPECT_EQ(s.d[i][j], 0);
        for (std::size_t i = 0; i + 1 < s.rank; ++i) EXPECT_EQ(s.diagonal[i + 1] % s.diagonal[i], 0);
        // U is unimodular.
        Matrix<Gaussian> u(r, r, Gaussian());
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) u(i, j) = Gaussian(mpq_class(s.u[i][j]));
        Gaussian det = det_commutative(u);
        EXPECT_TRUE(det == Gaussian(1) || det == Gaussian(-1));
    }
}

TEST(Words, FreeReductionAndOrder) {
    Word w({{0, 1}, {1, 1}, {1, -1}, {0, 1}});
    EXPECT_EQ(w, Word::power_of(0, 2));
    EXPECT_EQ(w * w.inverse(), Word());
    EXPECT_EQ(Word::letter(0).power(-3), Word::power_of(0, -3));
    EXPECT_LT(Word::letter(5), Word::power_of(0, 2));
    EXPECT_THROW(Word({{0, 2}}), ValidationError);
}

TEST(Presentations, ParseExamples) {
    auto tref = parse_presentation(oracle::kTrefoil);
    EXPECT_EQ(tref.generator_count(), 2u);
    ASSERT_EQ(tref.relator_count(), 1u);
    EXPECT_EQ(tref.relators()[0].length(), 6u);
    auto circ = parse_presentation(oracle::kCircle);
    EXPECT_EQ(circ.generator_count(), 1u);
    EXPECT_EQ(circ.relator_count(), 0u);
    auto fz = parse_presentation(oracle::kF2xZ);
    EXPECT_EQ(fz.names(), (std::vector<std::string>{"x", "y", "t"}));
    EXPECT_EQ(fz.relator_count(), 2u);
    // sugar and reduction
    auto p = parse_presentation("<a | a^3 a^-1>");
    EXPECT_EQ(p.relators()[0], Word::power_of(0, 2));
}

TEST(Presentations, ParseErrorsCarryPositions) {
    try {
        parse_presentation("<a,b | a c>");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 9u);
    }
    try {
        parse_presentation("<a,a | a>");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 3u);
    }
    EXPECT_THROW(parse_presentation("<a | a^>"), ParseError);
    EXPECT_THROW(parse_presentation("a | a>"), ParseError);
    EXPECT_THROW(parse_presentation("<a | a,>"), ParseError);
    EXPECT_THROW(parse_presentation("<a | a> x"), ParseError);
}

TEST(Presentations, PrintParseRoundTrip) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
        std::vector<Word> rels;
        for (int r = 0; r < 3; ++r) rels.push_back(random_word(rng, 3, 8));
        rels.erase(std::remove(rels.begin(), rels.end(), Word()), rels.end());
        Presentation p({"a", "b", "c"}, rels);
        EXPECT_EQ(parse_presentation(p.to_string()), p);
    }
}

TEST(Abelianization, Examples) {
    auto q = abelianize(parse_presentation(oracle::kTrefoil));
    EXPECT_EQ(q.rank, 1u);
    EXPECT_EQ(q.images, (std::vector<std::vector<long>>{{1}, {1}}));
    auto f = abelianize(parse_presentation("<a,b | >"));
    EXPECT_EQ(f.images, (std::vector<std::vector<long>>{{1, 0}, {0, 1}}));
    auto fz = abelianize(parse_presentation(oracle::kF2xZ));
    EXPECT_EQ(fz.images, (std::vector<std::vector<long>>{{0}, {0}, {1}}));
    auto r2 = abelianize(parse_presentation(oracle::kRank2));
    EXPECT_EQ(r2.rank, 2u);
    auto tor = abelianize(parse_presentation("<a,b | a^2 b^-4>"));
    EXPECT_EQ(tor.rank, 1u);
    EXPECT_EQ(tor.torsion, (std::vector<mpz_class>{2}));
}

TEST(Characters, Validation) {
    auto p = parse_presentation(oracle::kTrefoil);
    auto q = abelianize(p);
    Character phi(p, {1, 1});
    EXPECT_TRUE(phi.is_primitive());
    EXPECT_EQ(phi.coordinates(q), (std::vector<long>{1}));
    EXPECT_THROW(Character(p, {1, 0}), ValidationError);
    EXPECT_THROW(Character(p, {1}), ValidationError);
    EXPECT_FALSE(Character(p, {2, 2}).is_primitive());
    auto r2 = parse_presentation(oracle::kRank2);
    auto q2 = abelianize(r2);
    auto c = character_from_coordinates(r2, q2, {2, -3});
    EXPECT_EQ(c.coordinates(q2), (std::vector<long>{2, -3}));
}

TEST(Nielsen, TrefoilAdaptation) {
    auto p = parse_presentation(oracle::kTrefoil);
    auto q = abelianize(p);
    auto a = nielsen_adapt(p, q, Character(p, {1, 1}));
    ASSERT_EQ(a.transform.moves.size(), 1u);
    EXPECT_EQ(a.transform.new_in_old[0], Word::letter(0));
    EXPECT_EQ(a.transform.new_in_old[1], Word::letter(1) * Word::letter(0, -1));
    EXPECT_EQ(a.phi.values(), (std::vector<long>{1, 0}));
    EXPECT_EQ(a.y, 0u);
    // re-abelianising the new presentation agrees with the transported map
    auto q2 = abelianize(a.transform.presentation);
    EXPECT_EQ(q2.rank, 1u);
    EXPECT_EQ(q2.images, a.q.images);
}

TEST(Nielsen, AlreadyAdaptedIsUnchanged) {
    auto p = parse_presentation(oracle::kF2xZ);
    auto q = abelianize(p);
    auto a = nielsen_adapt(p, q, Character(p, {0, 0, 1}));
    EXPECT_TRUE(a.transform.moves.empty());
    EXPECT_EQ(a.transform.presentation, p);
    EXPECT_EQ(a.y, 2u);
    EXPECT_THROW(nielsen_adapt(p, q, Character(p, {0, 0, 2})), ValidationError);
}

TEST(Nielsen, RandomMovesPreserveTheGroup) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> kind(0, 3);
    for (int t = 0; t < 20; ++t) {
        auto p = oracle::random_free_by_cyclic(rng, 2, 4);
        NielsenTransform tr(p);
        std::uniform_int_distribution<std::size_t> g(0, p.generator_count() - 1);
        for (int s = 0; s < 6; ++s) {
            std::size_t i = g(rng), j = g(rng);
            if (i == j) j = (i + 1) % p.generator_count();
            tr.apply({NielsenKind(kind(rng)), i, j, s % 2 ? 1 : -1});
        }
        for (std::size_t i = 0; i < p.generator_count(); ++i) {
            EXPECT_EQ(tr.new_in_old[i].substitute(tr.old_in_new), Word::letter(i));
            EXPECT_EQ(tr.old_in_new[i].substitute(tr.new_in_old), Word::letter(i));
        }
        for (std::size_t r = 0; r < p.relator_count(); ++r)
            EXPECT_EQ(tr.presentation.relators()[r].substitute(tr.new_in_old), p.relators()[r]);
        auto q = abelianize(p), q2 = abelianize(tr.presentation);
        EXPECT_EQ(q.rank, q2.rank);
        auto tq = q.transported(tr.new_in_old);
        for (const auto& r : tr.presentation.relators())
            for (long v : tq.image(r)) EXPECT_EQ(v, 0);
    }
}

TEST(Nielsen, AdaptsRandomCharacters) {
    auto p = parse_presentation(oracle::kRank2);
    auto q = abelianize(p);
    for (auto c : std::vector<std::vector<long>>{{1, 0}, {0, 1}, {2, 3}, {-3, 5}, {7, -2}}) {
        auto phi = character_from_coordinates(p, q, c);
        auto a = nielsen_adapt(p, q, phi);
        EXPECT_TRUE(is_adapted(a.q, a.phi));
        EXPECT_EQ(a.phi.values()[a.y], 1);
        for (const auto& r : a.transform.presentation.relators()) EXPECT_EQ(a.phi.value(r), 0);
    }
}

TEST(GroupRing, ParsePrintRoundTrip) {
    std::vector<std::string> names{"a", "b"};
    auto e = parse_group_ring_element("1 - 2 a b^-1 + b -3*a", names);
    EXPECT_EQ(e.coefficient(Word()), 1);
    EXPECT_EQ(e.coefficient(Word::letter(0)), -3);
    EXPECT_EQ(e.coefficient(Word::letter(0) * Word::letter(1, -1)), -2);
    EXPECT_EQ(parse_group_ring_element(e.to_string(names), names), e);
    EXPECT_TRUE(parse_group_ring_element("a - a", names).is_zero());
    EXPECT_THROW(parse_group_ring_element("a + + b", names), ParseError);
    EXPECT_THROW(parse_group_ring_element("", names), ParseError);
}

TEST(Fox, DefiningRules) {
    Word a = Word::letter(0), b = Word::letter(1);
    EXPECT_EQ(fox_derivative(a * b, 0), GroupRingElement::one());
    EXPECT_EQ(fox_derivative(a.inverse(), 0), -gre(a.inverse()));
    EXPECT_TRUE(fox_derivative(b, 0).is_zero());
    auto p = parse_presentation(oracle::kTrefoil);
    EXPECT_THROW(fox_derivative(p, a, 2), ValidationError);
}

TEST(Fox, FundamentalIdentities) {
    std::mt19937_64 rng(21);
    std::vector<Word> words;
    for (const char* s : {oracle::kTrefoil, oracle::kF2xZ, oracle::kRank2}) {
        auto p = parse_presentation(s);
        words.insert(words.end(), p.relators().begin(), p.relators().end());
    }
    for (int t = 0; t < 30; ++t) words.push_back(random_word(rng, 3, 10));
    for (const Word& w : words) {
        GroupRingElement left, right;
        for (std::size_t i = 0; i < 3; ++i) {
            GroupRingElement xm1 = gre(Word::letter(i)) - GroupRingElement::one();
            left += fox_derivative(w, i) * xm1;
            right += xm1 * right_fox_derivative(w, i);
        }
        EXPECT_EQ(left, gre(w) - GroupRingElement::one());
        EXPECT_EQ(right, gre(w) - GroupRingElement::one());
    }
}

TEST(Fox, TrefoilDerivativeEvaluation) {
    auto p = parse_presentation(oracle::kTrefoil);
    auto q = abelianize(p);
    auto sigma = Representation::trivial(p);
    auto e = evaluate_sigma_q(right_fox_derivative(p.relators()[0], 1), sigma, q)(0, 0);
    LaurentPoly s = LaurentPoly::variable(1, 0), one = LaurentPoly::constant(1, 1);
    EXPECT_EQ(e, -(s * s - s + one) * LaurentPoly::variable(1, 0, -3));
    // the independent dense oracle on the left derivative gives the same degree
    std::vector<std::pair<std::size_t, int>> letters;
    for (const auto& l : p.relators()[0].letters()) letters.push_back({l.gen, l.exp});
    EXPECT_EQ(oracle::poly_degree(oracle::fox_alexander(letters, 1, {1, 1})), 2);
}

TEST(Representations, Validation) {
    auto p = parse_presentation(oracle::kTrefoil);
    ScalarMatrix m(1, 1, Gaussian());
    m(0, 0) = -1;
    Representation sign(p, {m, m});
    EXPECT_EQ(sign.evaluate(Word::letter(0) * Word::letter(1)), scalar_identity(1));
    ScalarMatrix i(1, 1, Gaussian());
    i(0, 0) = Gaussian::imag_unit();
    EXPECT_THROW(Representation(p, {m, i}), ValidationError);
    EXPECT_THROW(Representation(p, {m}), ValidationError);
    ScalarMatrix z(1, 1, Gaussian());
    EXPECT_THROW(Representation(p, {z, z}), ValidationError);
    EXPECT_THROW(Representation(p, {m, m}, std::vector<ScalarMatrix>{m, i}), ValidationError);
    EXPECT_EQ(Representation::trivial(parse_presentation("< | >"), 3).dim(), 3u);
}

TEST(Representations, EvaluationIsMultiplicative) {
    auto p = parse_presentation(oracle::kRank2);
    auto q = abelianize(p);
    auto sigma = oracle::richest_representation(p, oracle::quaternion_group());
    ASSERT_TRUE(sigma.has_value());
    std::mt19937_64 rng(4);
    for (int t = 0; t < 10; ++t) {
        auto x = gre(random_word(rng, 3, 5)) - GroupRingElement::of(random_word(rng, 3, 4), 2);
        auto y = gre(random_word(rng, 3, 5)) + GroupRingElement::one();
        EXPECT_EQ(evaluate_sigma_q(x * y, *sigma, q), evaluate_sigma_q(x, *sigma, q) * evaluate_sigma_q(y, *sigma, q));
    }
    for (const auto& r : p.relators())
        EXPECT_TRUE(evaluate_sigma_q(gre(r) - GroupRingElement::one(), *sigma, q).is_zero_matrix());
    auto e = evaluate_sigma_q(GroupRingElement::one() - gre(Word::letter(0)), Representation::trivial(p), q)(0, 0);
    EXPECT_EQ(e, LaurentPoly::constant(2, 1) - LaurentPoly::monomial(Monomial::from_vector(q.images[0])));
}

TEST(ChainComplexes, PresentationComplexShapes) {
    EXPECT_EQ(presentation_complex(parse_presentation(oracle::kTrefoil)).ranks, (std::vector<std::size_t>{1, 2, 1}));
    EXPECT_EQ(presentation_complex(parse_presentation(oracle::kF2xZ)).ranks, (std::vector<std::size_t>{1, 3, 2}));
    auto circle = presentation_complex(parse_presentation(oracle::kCircle));
    EXPECT_EQ(circle.ranks, (std::vector<std::size_t>{1, 1}));
    EXPECT_EQ(circle.boundary(1)(0, 0).to_string({"t"}), "1 - t");
    EXPECT_FALSE(presentation_complex(parse_presentation("<a,b | a, b>")).standard_shape);
}

TEST(ChainComplexes, BoundariesComposeToZero) {
    std::mt19937_64 rng(9);
    std::vector<Presentation> ps;
    for (const char* s : {oracle::kTrefoil, oracle::kF2xZ, oracle::kRank2}) ps.push_back(parse_presentation(s));
    for (int t = 0; t < 4; ++t) ps.push_back(oracle::random_free_by_cyclic(rng, 2, 5));
    for (const auto& p : ps) {
        auto q = abelianize(p);
        auto c = presentation_complex(p);
        for (const auto& group : {oracle::scalars_1(), oracle::quaternion_group(), oracle::dihedral_group()}) {
            auto reps = oracle::find_representations(p, group, 6);
            for (const auto& a : reps) {
                Representation sigma(p, a);
                EXPECT_NO_THROW(check_boundaries_compose_to_zero(evaluate_complex(c, sigma, q)));
            }
        }
    }
}
