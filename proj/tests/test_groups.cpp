#include "st34/groups.hpp"
#include "st34/random.hpp"

#include <gtest/gtest.h>

using namespace st34;

namespace {

const VarList& xs()
{
    static const VarList v = numbered_vars("x", 6);
    return v;
}

Polynomial<Rational> power_sum(unsigned k)
{
    Polynomial<Rational> p(xs());
    for (std::size_t i = 0; i < 6; ++i) {
        p += Polynomial<Rational>::monomial(xs(), Monomial::variable(i, k), Rational(1));
    }
    return p;
}

Polynomial<Rational> product_all()
{
    return Polynomial<Rational>::monomial(xs(), Monomial::from_exponents({1, 1, 1, 1, 1, 1}), Rational(1));
}

Polynomial<Rational> random_poly(Rng& rng, int terms, unsigned maxdeg)
{
    std::vector<Polynomial<Rational>::Term> t;
    for (int i = 0; i < terms; ++i) {
        std::vector<unsigned> e(6);
        for (auto& x : e) {
            x = static_cast<unsigned>(rng.uniform(0, maxdeg));
        }
        t.emplace_back(Monomial::from_exponents(e), rng.rational(9));
    }
    return Polynomial<Rational>::from_terms(xs(), std::move(t));
}

Vector6<QOmega> vec(std::initializer_list<QOmega> v)
{
    Vector6<QOmega> x;
    Eigen::Index i = 0;
    for (const auto& c : v) {
        x(i++) = c;
    }
    return x;
}

}  // namespace

TEST(Generators, AreInvolutiveReflections)
{
    const GroupElement id = identity_element();
    for (const auto& g : generators()) {
        EXPECT_EQ(g * g, id) << g.label;
        EXPECT_EQ(rank_of_difference_from_identity(g), 1) << g.label;
    }
}

TEST(Generators, FixHyperplanePointwiseAndNegateNormal)
{
    Rng rng(7);
    for (const auto& name : kGeneratorNames) {
        const GroupElement g = generator(name);
        const auto form = generator_hyperplane(name);
        Vector6<QOmega> n;
        for (Eigen::Index i = 0; i < 6; ++i) {
            n(i) = form[static_cast<std::size_t>(i)].conj();
        }
        EXPECT_EQ(apply(g, n), Vector6<QOmega>(-n)) << name;
        for (int trial = 0; trial < 5; ++trial) {
            // random point on the hyperplane: solve for the last coordinate with nonzero coefficient
            Vector6<QOmega> x;
            for (Eigen::Index i = 0; i < 6; ++i) {
                x(i) = QOmega(rng.rational(20), rng.rational(20));
            }
            std::size_t last = 5;
            while (form[last].is_zero()) {
                --last;
            }
            QOmega s;
            for (std::size_t i = 0; i < 6; ++i) {
                if (i != last) {
                    s += form[i] * x(static_cast<Eigen::Index>(i));
                }
            }
            x(static_cast<Eigen::Index>(last)) = -s / form[last];
            EXPECT_EQ(apply(g, x), x) << name;
        }
    }
}

TEST(Generators, ExplicitCoordinateFormulas)
{
    const GroupElement r2 = generator("R2");
    for (Eigen::Index i = 0; i < 6; ++i) {
        for (Eigen::Index j = 0; j < 6; ++j) {
            const Rational expected = (i == j ? Rational(1) : Rational(0)) - Rational::parse("1/3");
            EXPECT_EQ(r2.matrix(i, j), QOmega(expected));
        }
    }
    const QOmega one(1);
    const QOmega zero(0);
    const QOmega w = QOmega::omega();
    EXPECT_EQ(apply(r2, vec({one, one, one, one, one, one})), vec({-one, -one, -one, -one, -one, -one}));
    const auto on_plane = vec({one, Rational(2), Rational(-3), zero, Rational::parse("1/2"), Rational::parse("-1/2")});
    EXPECT_EQ(apply(r2, on_plane), on_plane);

    const GroupElement r1 = generator("R1");
    EXPECT_EQ(apply(r1, vec({w, one, zero, zero, zero, zero})), vec({w, one, zero, zero, zero, zero}));
    // x1 -> w x2, x2 -> w^2 x1
    EXPECT_EQ(r1.matrix(0, 1), w);
    EXPECT_EQ(r1.matrix(1, 0), w * w);
    EXPECT_EQ(r1.matrix(0, 0), zero);

    const GroupElement q1 = generator("Q1");
    EXPECT_EQ(apply(q1, vec({one, Rational(2), zero, zero, zero, zero})), vec({Rational(2), one, zero, zero, zero, zero}));
}

TEST(Generators, PermuteMinimalVectors)
{
    for (const auto& g : generators()) {
        EXPECT_TRUE(permutes_minimal_vectors(g)) << g.label;
    }
    EXPECT_TRUE(permutes_minimal_vectors(central_element()));
    GroupElement scale2 = identity_element();
    scale2.matrix(0, 0) = QOmega(2);
    EXPECT_FALSE(permutes_minimal_vectors(scale2));
}

TEST(Action, PowerSumsAndProduct)
{
    const auto p3 = power_sum(3);
    const auto s6 = product_all();
    EXPECT_EQ(act(generator("P1"), p3), to_qomega(p3));
    EXPECT_EQ(act(generator("R1"), s6), to_qomega(s6));
    EXPECT_EQ(act(generator("R1"), p3), to_qomega(p3));
    EXPECT_FALSE(is_invariant(Polynomial<Rational>::variable(xs(), 0), {generator("Q1")}));
    EXPECT_FALSE(is_invariant(p3, {generator("R2")}));
    EXPECT_TRUE(is_invariant(p3, {generator("P1"), generator("P2"), generator("P3"), generator("Q1"), generator("R1")}));
}

TEST(Action, IsARightAction)
{
    Rng rng(99);
    const auto gens = generators();
    for (int trial = 0; trial < 6; ++trial) {
        const auto f = random_poly(rng, 5, 3);
        const auto& g = gens[static_cast<std::size_t>(rng.uniform(0, 5))];
        const auto& h = gens[static_cast<std::size_t>(rng.uniform(0, 5))];
        EXPECT_EQ(act(g * h, f), act(h, act(g, f))) << g.label << " " << h.label;
    }
}

TEST(Action, CenterScalesByDegree)
{
    const GroupElement c = central_element();
    const QOmega minus_w = -QOmega::omega();
    for (unsigned d = 1; d <= 7; ++d) {
        const auto f = power_sum(d);
        EXPECT_EQ(act(c, f), to_qomega(f) * pow(minus_w, d));
        EXPECT_EQ(act(c, f) == to_qomega(f), d % 6 == 0);
    }
}
