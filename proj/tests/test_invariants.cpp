#include "st34/invariants.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

using namespace st34;

namespace {

const InvariantTables& tables()
{
    static const InvariantTables t = load_invariant_tables();
    return t;
}

std::vector<Rational> e1() { return {1, 0, 0, 0, 0, 0}; }

Polynomial<Rational> parse_basis(const std::string& s) { return parse_polynomial(s, basis_vars()); }

}  // namespace

TEST(G336Basics, SmallValues)
{
    const auto b = g336_basics();
    ASSERT_EQ(b.size(), 6U);
    const std::vector<Rational> ones(6, Rational(1));
    EXPECT_EQ(evaluate<Rational>(b[0], ones), Rational(6));
    const std::vector<Rational> seq = {1, 2, 3, 4, 5, 6};
    EXPECT_EQ(evaluate<Rational>(b[5], seq), Rational(720));
    EXPECT_EQ(evaluate<Rational>(b[1], e1()), Rational(1));
    Rng rng(5);
    for (int n = 0; n < 5; ++n) {
        const auto x = rng.integer_point(6, -50, 50);
        const auto v = g336_values<Rational>(x);
        for (std::size_t i = 0; i < 6; ++i) {
            EXPECT_EQ(v[i], evaluate<Rational>(b[i], x));
        }
    }
}

TEST(Mu, ValuesAtE1)
{
    EXPECT_EQ(mu_eval<Rational>(0, e1()), Rational(756));
    const std::array<unsigned, 6> k = {6, 12, 18, 24, 30, 42};
    for (std::size_t i = 0; i < 6; ++i) {
        EXPECT_EQ(mu_eval<Rational>(k[i], e1()), mu_e1_constants()[i]) << k[i];
    }
}

TEST(Mu, ZeroUnlessDivisibleBySix)
{
    Rng rng(11);
    const auto x = rng.integer_point(6, -99, 99);
    for (unsigned k : {1U, 2U, 3U, 4U, 5U, 7U, 8U, 10U, 14U, 16U}) {
        EXPECT_TRUE(mu_eval<Rational>(k, x).is_zero()) << k;
    }
    EXPECT_FALSE(mu_eval<Rational>(6, x).is_zero());
}

TEST(Mu, ModularAgreesWithRational)
{
    Rng rng(3);
    const auto x = rng.integer_point(6, -99, 99);
    using F = Zp<kPrimes[0]>;
    std::vector<F> xm;
    for (const auto& c : x) {
        xm.push_back(mod_project<kPrimes[0]>(c));
    }
    EXPECT_EQ(mu_eval<F>(30, xm), mod_project<kPrimes[0]>(mu_eval<Rational>(30, x)));
}

TEST(Mu, SymbolicExpansion)
{
    const auto m6 = mu_symbolic(6);
    EXPECT_EQ(m6.coefficient(Monomial::variable(0, 6)), Rational(-1944));
    EXPECT_TRUE(m6.is_homogeneous());
    Rng rng(21);
    for (int n = 0; n < 20; ++n) {
        const auto x = rng.integer_point(6, -99, 99);
        EXPECT_EQ(evaluate<Rational>(m6, x), mu_eval<Rational>(6, x));
    }
    const auto m12 = mu_symbolic(12);
    const auto x = rng.integer_point(6, -99, 99);
    EXPECT_EQ(evaluate<Rational>(m12, x), mu_eval<Rational>(12, x));
    std::vector<Rational> swapped = x;
    std::swap(swapped[0], swapped[4]);
    EXPECT_EQ(evaluate<Rational>(m12, swapped), evaluate<Rational>(m12, x));
    EXPECT_EQ(mu_symbolic(0), Polynomial<Rational>::constant(x_vars(), Rational(756)));
}

TEST(Mu, SymbolicRejectsBadDegrees)
{
    EXPECT_THROW(mu_symbolic(7), std::invalid_argument);
    EXPECT_THROW(mu_symbolic(24), std::invalid_argument);
}

TEST(Mu, SymbolicInvariantUnderGenerators)
{
    EXPECT_TRUE(is_invariant(mu_symbolic(6), generators()));
}

TEST(Basis, MonomialCounts)
{
    EXPECT_EQ(basis_monomials(6).size(), 3U);
    EXPECT_EQ(basis_monomials(9).size(), 4U);
    EXPECT_EQ(basis_monomials(18).size(), 18U);
    EXPECT_EQ(basis_monomials(24).size(), 36U);
    EXPECT_EQ(basis_monomials(30).size(), 66U);
    EXPECT_EQ(basis_monomials(42).size(), 183U);
    std::set<std::string> got;
    for (const auto& m : basis_monomials(12)) {
        got.insert(to_string(Polynomial<Rational>::monomial(basis_vars(), m, Rational(1))));
    }
    const std::set<std::string> want = {"p12", "p3*p9", "p6^2", "p3^2*p6", "p3^4", "p6*s6", "p3^2*s6", "s6^2"};
    EXPECT_EQ(got, want);
}

TEST(Basis, ExpressMu6)
{
    Rng rng(kDefaultSeed);
    const PointOracle<Rational> target = [](std::span<const Rational> x) { return mu_eval<Rational>(6, x); };
    const auto sol = express_in_g336_basis<Rational>(target, 6, rng);
    EXPECT_EQ(to_polynomial(sol), parse_basis("-5*p3^2 + 6*p6 - 180*s6") * Rational(-1944));
}

TEST(Basis, ExpressSelfTest)
{
    Rng rng(1);
    const PointOracle<Rational> target = [](std::span<const Rational> x) {
        const Rational p3 = g336_values<Rational>(x)[0];
        return p3 * p3 * p3;
    };
    EXPECT_EQ(to_polynomial(express_in_g336_basis<Rational>(target, 9, rng)), parse_basis("p3^3"));
}

TEST(Basis, NonInvariantTargetRejected)
{
    Rng rng(1);
    const PointOracle<Rational> target = [](std::span<const Rational> x) { return pow(x[0], 6); };
    EXPECT_THROW(express_in_g336_basis<Rational>(target, 6, rng), NotInRing);
}

TEST(Basis, ConstantTargetOfPositiveDegreeIsDegenerateOrRejected)
{
    Rng rng(1);
    const PointOracle<Rational> target = [](std::span<const Rational>) { return Rational(1); };
    EXPECT_THROW(express_in_g336_basis<Rational>(target, 6, rng), NotInRing);
    // a single sample range forces a singular system
    const PointOracle<Rational> zero = [](std::span<const Rational>) { return Rational(0); };
    EXPECT_THROW(express_in_g336_basis<Rational>(zero, 6, rng, 0), SamplingDegenerate);
}

TEST(Basis, UniqueAcrossSamples)
{
    const PointOracle<Rational> target = [](std::span<const Rational> x) { return mu_eval<Rational>(12, x); };
    Rng a(100);
    Rng b(200);
    const auto sa = express_in_g336_basis<Rational>(target, 12, a);
    const auto sb = express_in_g336_basis<Rational>(target, 12, b);
    EXPECT_EQ(sa.coefficients, sb.coefficients);
}

TEST(MTables, TablesSatisfyNormalization)
{
    for (const unsigned j : kMIndices) {
        EXPECT_EQ(unit_normalization(tables().m_table(j)), Rational(1)) << j;
        EXPECT_EQ(tables().m_table(j).weighted_degree<unsigned>(std::span<const unsigned>(kBasisWeights)), 6 * j) << j;
    }
}

TEST(MTables, RecomputeSmallExact)
{
    for (const unsigned j : {1U, 2U, 3U}) {
        const auto c = recompute_m_table(j, tables().m_table(j), Mode::exact, kDefaultSeed);
        EXPECT_TRUE(c.matches()) << j;
        EXPECT_EQ(c.constant, mu_e1_constants()[m_index(j)]) << j;
        EXPECT_EQ(c.constant, c.mu_at_e1) << j;
        EXPECT_EQ(unit_normalization(c.derived), Rational(1));
    }
    const auto c1 = recompute_m_table(1, tables().m_table(1), Mode::exact, kDefaultSeed);
    EXPECT_EQ(to_string(c1.derived), "-5*p3^2 + 6*p6 - 180*s6");
}

TEST(MTables, RecomputeModular)
{
    for (const unsigned j : {4U, 5U}) {
        const auto c = recompute_m_table(j, tables().m_table(j), Mode::modular, kDefaultSeed);
        EXPECT_TRUE(c.matches()) << j;
        EXPECT_EQ(c.primes.size(), 3U);
        EXPECT_EQ(c.constant, mu_e1_constants()[m_index(j)]) << j;
    }
}

TEST(MTables, MutationDetectedAndCrossChecked)
{
    Polynomial<Rational> bad = tables().m_table(2);
    const Monomial p12 = Monomial::variable(3);
    bad = bad + Polynomial<Rational>::monomial(basis_vars(), p12, rational_reduce(Integer(1), Integer(17)));
    const auto c = recompute_m_table(2, bad, Mode::exact, kDefaultSeed);
    ASSERT_EQ(c.diffs.size(), 1U);
    EXPECT_EQ(c.diffs[0].monomial, "p12");
    ASSERT_EQ(c.diffs[0].modular.size(), 3U);
    for (const auto& m : c.diffs[0].modular) {
        EXPECT_NE(m.find("supports derived"), std::string::npos) << m;
    }
    const auto cm = recompute_m_table(2, bad, Mode::modular, kDefaultSeed);
    EXPECT_EQ(cm.diffs.size(), 1U);
    EXPECT_FALSE(m_table_report(c, kDefaultSeed).ok());
    EXPECT_FALSE(m_table_report(c, kDefaultSeed).witnesses.empty());
}

TEST(MTables, MuEqualsConstantTimesMRandomized)
{
    const auto m5 = std::make_shared<const Polynomial<Rational>>(tables().m_table(5));
    IdentityClaim claim;
    claim.name = "mu30 = -1291401144*m5";
    claim.nvars = 6;
    claim.degree_bound = 30;
    claim.set_oracles([]<class F>(std::span<const F> x) { return mu_eval<F>(30, x); },
                      [m5]<class F>(std::span<const F> x) {
                          return F(-1291401144L) * evaluate<F>(*m5, g336_values<F>(x));
                      });
    CheckOptions opt;
    EXPECT_EQ(check_randomized(claim, opt).verdict, Verdict::passed_randomized);
    opt.points = 25;
    EXPECT_EQ(check_modular(claim, opt).verdict, Verdict::passed_randomized);

    auto corrupted = std::make_shared<Polynomial<Rational>>(*m5);
    *corrupted = *corrupted + Polynomial<Rational>::monomial(basis_vars(), Monomial::variable(4, 2), Rational(1));
    const std::shared_ptr<const Polynomial<Rational>> cp = corrupted;
    claim.set_oracles([]<class F>(std::span<const F> x) { return mu_eval<F>(30, x); },
                      [cp]<class F>(std::span<const F> x) {
                          return F(-1291401144L) * evaluate<F>(*cp, g336_values<F>(x));
                      });
    opt.points = 20;
    const auto r = check_randomized(claim, opt);
    EXPECT_EQ(r.verdict, Verdict::failed);
    ASSERT_FALSE(r.witnesses.empty());
    EXPECT_EQ(r.witnesses[0].point.size(), 6U);
}

TEST(MInvariance, SymbolicForSmallJ)
{
    CheckOptions opt;
    for (const unsigned j : {1U, 2U}) {
        EXPECT_EQ(m_invariance_report(j, tables().m_table(j), Mode::exact, opt).verdict, Verdict::proved_symbolic);
    }
    EXPECT_EQ(m_invariance_report(4, tables().m_table(4), Mode::exact, opt).verdict, Verdict::passed_randomized);
}

TEST(MInvariance, AllGeneratorsAtPoints)
{
    CheckOptions opt;
    opt.points = 5;
    for (const unsigned j : kMIndices) {
        EXPECT_TRUE(m_generators_report(j, tables().m_table(j), opt).ok()) << j;
    }
    // a non-invariant basis expression is caught
    const auto r = m_generators_report(1, parse_basis("p3^2"), opt);
    EXPECT_EQ(r.verdict, Verdict::failed);
}

TEST(MInvariance, MuInvarianceAndVanishing)
{
    CheckOptions opt;
    opt.points = 3;
    EXPECT_TRUE(mu_invariance_report(12, opt).ok());
    EXPECT_TRUE(mu_vanishing_report(4, opt).ok());
    EXPECT_TRUE(mu_e1_report(6, Rational(-1944)).ok());
    EXPECT_FALSE(mu_e1_report(6, Rational(1944)).ok());
}

TEST(QExpressions, AllIdentitiesHold)
{
    CheckOptions opt;
    const auto reports = verify_q_expressions(tables(), Mode::exact, opt);
    EXPECT_EQ(reports.size(), 12U);
    std::size_t symbolic = 0;
    for (const auto& r : reports) {
        EXPECT_TRUE(r.ok()) << r.claim;
        symbolic += r.verdict == Verdict::proved_symbolic ? 1 : 0;
    }
    EXPECT_EQ(symbolic, 8U);
    for (const auto& r : verify_q_expressions(tables(), Mode::modular, opt)) {
        EXPECT_TRUE(r.ok()) << r.claim;
    }
}

TEST(QExpressions, CorruptedEntryFails)
{
    InvariantTables t = tables();
    auto& entries = t.q_expr.entries;
    for (auto& [name, p] : entries) {
        if (name == "p6") {
            p = p + Polynomial<Rational>::monomial(p.vars(), Monomial::variable(5), Rational(1));
        }
    }
    CheckOptions opt;
    const auto reports = verify_q_expressions(t, Mode::exact, opt);
    EXPECT_EQ(reports[1].verdict, Verdict::failed);
    EXPECT_FALSE(reports[1].witnesses.empty());
}

TEST(TeraoEnta, Values)
{
    EXPECT_EQ(terao_enta_f<Rational>(tables(), 1, e1()), Rational(-1));
    Rng rng(8);
    const auto x = rng.integer_point(6, -20, 20);
    EXPECT_EQ(terao_enta_f<Rational>(tables(), 2, x) * Rational(3888), mu_eval<Rational>(12, x));
    std::vector<Rational> x2;
    for (const auto& c : x) {
        x2.push_back(c * Rational(2));
    }
    EXPECT_EQ(terao_enta_f<Rational>(tables(), 4, x2), terao_enta_f<Rational>(tables(), 4, x) * pow(Rational(2), 24));
    EXPECT_EQ(terao_enta_degree(4), 24U);
}

TEST(Hessian, DegenerateControl)
{
    const auto f = Polynomial<Rational>::monomial(x_vars(), Monomial::variable(0, 6), Rational(1));
    const std::vector<Rational> x = {3, 1, 4, 1, 5, 9};
    EXPECT_TRUE(hessian_determinant(second_partials(f), x).is_zero());
}

TEST(Hessian, RatioIsConstant)
{
    CheckOptions opt;
    const auto r = hessian_ratio_check(tables(), opt);
    EXPECT_EQ(r.verdict, Verdict::passed_randomized);
    EXPECT_EQ(r.details.at("pairs"), "10");
    EXPECT_NE(r.details.at("hessian_at_first_point"), "0");
}

TEST(Tables, MissingTableNamesItsContents)
{
    const auto dir = std::filesystem::temp_directory_path() / "st34_missing_tables";
    std::filesystem::create_directories(dir);
    try {
        load_invariant_tables(dir);
        FAIL() << "expected an error";
    } catch (const std::runtime_error& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("m1"), std::string::npos);
        EXPECT_NE(msg.find("p3, p6, p9, p12, p15, s6"), std::string::npos);
    }
}
