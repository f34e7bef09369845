#include "st34/idcheck.hpp"
#include "st34/poly_io.hpp"

#include <gtest/gtest.h>

using namespace st34;

namespace {

const VarList& xy()
{
    static const VarList v = make_vars({"x", "y"});
    return v;
}

Polynomial<Rational> p(const std::string& s) { return parse_polynomial(s, xy()); }

IdentityClaim poly_claim(const std::string& name, const std::string& l, const std::string& r)
{
    IdentityClaim c;
    c.name = name;
    c.provenance = "test";
    c.set_polynomials(p(l), p(r));
    return c;
}

}  // namespace

TEST(IdCheck, ExactProvesAndRefutes)
{
    const auto good = poly_claim("square", "x^2 + 2*x*y + y^2", "y^2 + x^2 + 2*y*x");
    EXPECT_EQ(check_exact(good).verdict, Verdict::proved_symbolic);
    const auto bad = poly_claim("x vs y", "x", "y");
    const auto r = check_exact(bad);
    EXPECT_EQ(r.verdict, Verdict::failed);
    ASSERT_EQ(r.witnesses.size(), 1U);
    ASSERT_EQ(r.witnesses[0].point.size(), 2U);
    EXPECT_NE(r.witnesses[0].point[0], r.witnesses[0].point[1]);
}

TEST(IdCheck, WitnessRechecksInIsolation)
{
    const auto bad = poly_claim("off by x*y", "x^2*y", "x^2*y + x*y");
    const auto r = check_randomized(bad);
    ASSERT_EQ(r.verdict, Verdict::failed);
    const auto& w = r.witnesses.at(0);
    const std::vector<Rational> x = {Rational::parse(w.point[0]), Rational::parse(w.point[1])};
    EXPECT_NE(evaluate<Rational>(*bad.lhs_poly, x), evaluate<Rational>(*bad.rhs_poly, x));
    EXPECT_EQ(evaluate<Rational>(*bad.lhs_poly, x).to_string(), w.lhs);
}

TEST(IdCheck, CapExceededDirectsToRandomized)
{
    auto c = poly_claim("big", "x^3", "x^3");
    CheckOptions opt;
    opt.symbolic_degree_cap = 2;
    EXPECT_THROW(check_exact(c, opt), std::invalid_argument);
    EXPECT_EQ(check(c, Mode::exact, opt).verdict, Verdict::passed_randomized);
}

TEST(IdCheck, ModesAgree)
{
    for (const auto& [l, r, expect] : std::vector<std::tuple<std::string, std::string, bool>>{
             {"x^2 - y^2", "-y^2 + x^2", true}, {"x^3", "x^3 + 1/7*y", false}}) {
        const auto c = poly_claim("c", l, r);
        EXPECT_EQ(check_exact(c).ok(), expect);
        EXPECT_EQ(check_randomized(c).ok(), expect);
        EXPECT_EQ(check_modular(c).ok(), expect);
    }
}

TEST(IdCheck, ModularTrivialAndBound)
{
    IdentityClaim one;
    one.name = "1 = 1";
    one.nvars = 1;
    one.set_oracles([]<class F>(std::span<const F>) { return F(1); },
                    []<class F>(std::span<const F>) { return F(1); });
    CheckOptions opt;
    opt.points = 25;
    const auto r = check_modular(one, opt);
    EXPECT_EQ(r.verdict, Verdict::passed_randomized);
    EXPECT_EQ(r.primes.size(), 3U);
    EXPECT_EQ(r.points, 75U);
}

TEST(IdCheck, LargeDenominatorProjects)
{
    const Rational q = rational_reduce(Integer(1), Integer("619872782080"));
    EXPECT_NO_THROW(mod_project<kPrimes[0]>(q));
    const auto c = poly_claim("scaled", "1/619872782080*x + y", "y + 1/619872782080*x");
    EXPECT_TRUE(check_modular(c).ok());
}

TEST(IdCheck, BadPrimeIsSkipped)
{
    // a denominator divisible by the first prime forces a retry on the next one
    const Integer p0(std::to_string(kPrimes[0]));
    const Rational q = rational_reduce(Integer(1), p0);
    IdentityClaim c;
    c.name = "bad first prime";
    c.nvars = 1;
    c.set_oracles([q]<class F>(std::span<const F> x) { return field_cast<F>(q) * x[0]; },
                  [q]<class F>(std::span<const F> x) { return x[0] * field_cast<F>(q); });
    const auto r = check_modular(c);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.primes.front(), kPrimes[1]);
    EXPECT_EQ(r.details.at("skipped_primes"), "1");
}

TEST(IdCheck, ResampleIsCounted)
{
    IdentityClaim c;
    c.name = "resample";
    c.nvars = 1;
    c.degree_bound = 1;
    c.set_oracles(
        []<class F>(std::span<const F> x) {
            if (x[0] == F(0) || x[0] == F(1)) {
                throw Resample("singular");
            }
            return x[0];
        },
        []<class F>(std::span<const F> x) { return x[0]; });
    CheckOptions opt;
    opt.range = 1;
    opt.points = 5;
    const auto r = check_randomized(c, opt);
    EXPECT_TRUE(r.ok());
    EXPECT_GT(r.resamples, 0U);
}

TEST(IdCheck, ErrorBoundText)
{
    EXPECT_EQ(error_bound_text(Integer(1), Integer(10), 3), "(1/10)^3 < 10^-3");
    EXPECT_EQ(error_bound_text(Integer(0), Integer(10), 3), "(0/10)^3 = 0");
}

TEST(IdCheck, ReportsAreDeterministic)
{
    const auto c = poly_claim("square", "x^2 + 2*x*y + y^2", "y^2 + x^2 + 2*y*x");
    const auto a = check_randomized(c).to_json().dump();
    const auto b = check_randomized(c).to_json().dump();
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.find("wall_seconds"), std::string::npos);
    EXPECT_NE(check_randomized(c).to_json(true).dump().find("wall_seconds"), std::string::npos);
}

TEST(IdCheck, ParseMode)
{
    EXPECT_EQ(parse_mode("modular"), Mode::modular);
    EXPECT_THROW(parse_mode("fast"), std::invalid_argument);
    EXPECT_EQ(to_string(Verdict::passed_randomized), "passed-randomized");
}
