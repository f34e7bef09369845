#include "st34/poly_io.hpp"
#include "st34/polynomial.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>

using namespace st34;

namespace {

using P = Polynomial<Rational>;

const VarList& xyz()
{
    static const VarList v = make_vars({"x", "y", "z"});
    return v;
}

P parse(const std::string& s) { return parse_polynomial(s, xyz()); }

P random_poly(std::mt19937_64& rng, int terms, unsigned maxdeg)
{
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::uniform_int_distribution<unsigned> exp(0, maxdeg);
    std::vector<P::Term> t;
    for (int i = 0; i < terms; ++i) {
        t.emplace_back(Monomial::from_exponents({exp(rng), exp(rng), exp(rng)}),
                       rational_reduce(coeff(rng), 1 + (rng() % 4)));
    }
    return P::from_terms(xyz(), std::move(t));
}

}  // namespace

TEST(Monomial, GradedLexOrder)
{
    const auto x2 = Monomial::from_exponents({2, 0, 0});
    const auto xy = Monomial::from_exponents({1, 1, 0});
    const auto y2 = Monomial::from_exponents({0, 2, 0});
    const auto x = Monomial::from_exponents({1, 0, 0});
    EXPECT_GT(x2, xy);
    EXPECT_GT(xy, y2);
    EXPECT_GT(y2, x);
    EXPECT_EQ((x * xy).degree(), 3U);
    EXPECT_EQ((x * xy).exponent(0), 2U);
}

TEST(Monomial, ExponentCap)
{
    EXPECT_THROW(Monomial::from_exponents({256}), PolynomialError);
    const auto big = Monomial::from_exponents({200});
    EXPECT_THROW(big * big, PolynomialError);
}

TEST(Polynomial, BinomialSquare)
{
    const P x = P::variable(xyz(), "x");
    const P y = P::variable(xyz(), "y");
    EXPECT_EQ(pow(x + y, 2), parse("x^2 + 2*x*y + y^2"));
    EXPECT_EQ((x + y) * (x - y), parse("x^2 - y^2"));
    EXPECT_TRUE((x - x).is_zero());
    EXPECT_EQ((x - x).degree(), kZeroDegree);
}

TEST(Polynomial, PowerCapRejectsLargeExponents)
{
    const P x = P::variable(xyz(), "x");
    EXPECT_NO_THROW(pow(x, 42));
    EXPECT_THROW(pow(x, 43), PolynomialError);
}

TEST(Polynomial, RingLawsAgainstPointEvaluation)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const P a = random_poly(rng, 8, 4);
        const P b = random_poly(rng, 6, 3);
        const P c = random_poly(rng, 5, 3);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        const std::vector<Rational> pt = {Rational::parse("3/5"), Rational(-2), Rational::parse("7/3")};
        EXPECT_EQ(evaluate(a * b, pt), evaluate(a, pt) * evaluate(b, pt));
        EXPECT_EQ(evaluate(a - c, pt), evaluate(a, pt) - evaluate(c, pt));
    }
}

TEST(Polynomial, DerivativeProductRule)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const P a = random_poly(rng, 6, 4);
        const P b = random_poly(rng, 6, 4);
        for (std::size_t v = 0; v < 3; ++v) {
            EXPECT_EQ(derivative(a * b, v), derivative(a, v) * b + a * derivative(b, v));
        }
    }
    EXPECT_EQ(derivative(parse("x^3*y + 5*z"), "x"), parse("3*x^2*y"));
}

TEST(Polynomial, ComposeMatchesEvaluation)
{
    std::mt19937_64 rng(17);
    const P a = random_poly(rng, 7, 3);
    const std::vector<P> sub = {parse("x + y"), parse("y*z - 1"), parse("2*x^2")};
    const P composed = compose(a, sub);
    const std::vector<Rational> pt = {Rational(2), Rational::parse("-1/3"), Rational(5)};
    std::vector<Rational> inner;
    for (const auto& s : sub) {
        inner.push_back(evaluate(s, pt));
    }
    EXPECT_EQ(evaluate(composed, pt), evaluate(a, inner));
}

TEST(Polynomial, LinearSubstituteFastPathAgreesWithGeneralPath)
{
    std::mt19937_64 rng(23);
    const P a = random_poly(rng, 10, 4);
    Matrix<Rational> perm = Matrix<Rational>::Zero(3, 3);
    perm(0, 2) = Rational(2);
    perm(1, 0) = Rational(-1);
    perm(2, 1) = Rational::parse("1/3");
    const P fast = linear_substitute(a, perm);
    const std::vector<P> forms = {parse("2*z"), parse("-x"), parse("1/3*y")};
    EXPECT_EQ(fast, compose(a, forms));

    Matrix<Rational> dense(3, 3);
    dense << Rational(1), Rational(1), Rational(0), Rational(0), Rational(1), Rational(2), Rational(3),
        Rational(0), Rational(1);
    const std::vector<Rational> pt = {Rational(1), Rational(-2), Rational::parse("1/2")};
    const Vector<Rational> mx = dense * Eigen::Map<const Vector<Rational>>(pt.data(), 3);
    const std::vector<Rational> image(mx.data(), mx.data() + 3);
    EXPECT_EQ(evaluate(linear_substitute(a, dense), pt), evaluate(a, image));
}

TEST(Polynomial, WeightedDegree)
{
    const std::vector<long> w = {1, 2, 3};
    EXPECT_EQ(parse("x^3 + x*y + z").weighted_degree(std::span<const long>(w)), 3L);
    EXPECT_FALSE(parse("x^3 + y").weighted_degree(std::span<const long>(w)).has_value());
}

TEST(PolyText, CanonicalEmission)
{
    EXPECT_EQ(to_string(parse("y^2 - 1/2*x*y + 3 - x")), "-1/2*x*y + y^2 - x + 3");
    EXPECT_EQ(to_string(parse("0")), "0");
    EXPECT_EQ(to_string(parse("-x")), "-x");
}

TEST(PolyText, RoundTripOfRandomPolynomials)
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        const P a = random_poly(rng, 9, 5);
        EXPECT_EQ(parse(to_string(a)), a);
        EXPECT_EQ(parse(to_wrapped_string(a, 30)), a);
    }
}

TEST(PolyText, ErrorsCarryLineAndColumn)
{
    try {
        parse_polynomial("x^2 +\n  3*w", xyz(), "sample");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2U);
        EXPECT_EQ(e.column(), 5U);
        EXPECT_NE(std::string(e.what()).find("unknown variable 'w'"), std::string::npos);
    }
    EXPECT_THROW(parse("x + y + x"), ParseError);
    EXPECT_THROW(parse("x y"), ParseError);
    EXPECT_THROW(parse("1/0*x"), ParseError);
    EXPECT_THROW(parse(""), ParseError);
}

TEST(PolyTable, EveryShippedTableRoundTrips)
{
    std::size_t count = 0;
    for (const auto& entry : std::filesystem::directory_iterator(default_tables_dir())) {
        if (entry.path().extension() != ".poly") {
            continue;
        }
        const PolyTable t = load_table(entry.path());
        EXPECT_FALSE(t.entries.empty()) << entry.path();
        EXPECT_FALSE(t.description.empty()) << entry.path();
        const PolyTable again = parse_table(format_table(t), "reformatted");
        ASSERT_EQ(again.entries.size(), t.entries.size());
        for (std::size_t i = 0; i < t.entries.size(); ++i) {
            EXPECT_EQ(again.entries[i], t.entries[i]);
        }
        ++count;
    }
    EXPECT_EQ(count, 19U);
}

TEST(PolyTable, MalformedTables)
{
    EXPECT_THROW(parse_table("f = x;", "t"), ParseError);
    EXPECT_THROW(parse_table("@vars x\nf = x;\nf = x;", "t"), ParseError);
    EXPECT_THROW(parse_table("@vars x\nf = x", "t"), ParseError);
    const PolyTable t = parse_table("# d\n@vars x y\nf = 0;\ng = x*y;\n", "t");
    EXPECT_TRUE(t.get("f").is_zero());
    EXPECT_EQ(t.get("g").size(), 1U);
    EXPECT_THROW(t.get("h"), std::out_of_range);
}
