#include "st34/saito.hpp"

#include <gtest/gtest.h>

using namespace st34;

namespace {

const PotentialField& field()
{
    static const PotentialField f = load_potential_field();
    return f;
}

const SaitoData& data()
{
    static const SaitoData d = build_saito_data(field());
    return d;
}

const Eq1Map& eq1()
{
    static const Eq1Map m = rationalize_eq1(load_named_table("eq1"));
    return m;
}

const InvariantTables& tables()
{
    static const InvariantTables t = load_invariant_tables();
    return t;
}

Polynomial<Rational> u(const std::string& s) { return parse_polynomial(s, u_vars()); }

}  // namespace

TEST(Weights, Values)
{
    const auto ws = WeightSystem::st34();
    for (std::size_t j = 0; j < 6; ++j) {
        EXPECT_EQ(ws.w[j] * Rational(42), Rational(static_cast<long>(6 * (j == 5 ? 7 : j + 1))));
    }
    EXPECT_EQ(euler(ws, u("u1*u6")), u("8/7*u1*u6"));
    EXPECT_EQ(ws.weighted_degree(u("u1*u6 + u3*u5 + u4^2")), std::optional<Rational>(rational_reduce(8, 7)));
    EXPECT_FALSE(ws.weighted_degree(u("u1 + u2")).has_value());
}

TEST(Saito, HomogeneityAndEuler)
{
    const auto reports = homogeneity_reports(field(), WeightSystem::st34());
    EXPECT_EQ(reports.size(), 12U);
    for (const auto& r : reports) {
        EXPECT_EQ(r.verdict, Verdict::proved_symbolic) << r.claim;
    }
}

TEST(Saito, MatrixEntries)
{
    EXPECT_EQ(data().C[5][0], u("u1"));
    EXPECT_EQ(data().T[5][0], u("1/7*u1"));
}

TEST(Saito, BrokenHomogeneityIsRejected)
{
    PotentialField bad = field();
    bad.h[1] = bad.h[1] + u("u1^2");
    EXPECT_THROW(build_saito_data(bad), SaitoError);
    const auto reports = homogeneity_reports(bad, WeightSystem::st34());
    EXPECT_EQ(reports[2].verdict, Verdict::failed);
    EXPECT_FALSE(reports[2].witnesses.empty());
}

TEST(Flatness, AllPairsCommute)
{
    CheckOptions opt;
    const auto exact = check_flatness(data(), Mode::exact, opt);
    ASSERT_EQ(exact.size(), 15U);
    for (const auto& r : exact) {
        EXPECT_EQ(r.verdict, Verdict::proved_symbolic) << r.claim;
    }
    const auto modular = check_flatness(data(), Mode::modular, opt);
    ASSERT_EQ(modular.size(), 15U);
    for (const auto& r : modular) {
        EXPECT_EQ(r.verdict, Verdict::passed_randomized) << r.claim;
    }
    const auto d3 = derivative(data().C, 2);
    EXPECT_TRUE(is_zero(commutator(d3, d3)));
}

TEST(Flatness, PerturbationIsDetected)
{
    PotentialField bad = field();
    bad.h[0] = bad.h[0] + u("u1^8");
    const SaitoData d = build_saito_data(bad);
    CheckOptions opt;
    std::size_t failed = 0;
    for (const auto& r : check_flatness(d, Mode::exact, opt)) {
        failed += r.verdict == Verdict::failed ? 1 : 0;
    }
    EXPECT_GT(failed, 0U);
    std::size_t failed_mod = 0;
    for (const auto& r : check_flatness(d, Mode::modular, opt)) {
        failed_mod += r.verdict == Verdict::failed ? 1 : 0;
    }
    EXPECT_EQ(failed_mod, failed);
}

TEST(Eq1, Rationalization)
{
    EXPECT_EQ(to_string(eq1().phi[0]), "t1");
    EXPECT_EQ(to_string(eq1().phi[1]), "363/14*t1^2 + 375/56*t2");
    EXPECT_EQ(to_string(eq1().inverse[1]), "-484/125*f1^2 + 56/375*f2");
    EXPECT_EQ(eq1().k1_sevenths[5], -1);
    for (std::size_t j = 0; j < 5; ++j) {
        EXPECT_EQ(eq1().k1_sevenths[j], 0);
    }
    EXPECT_EQ(eq1_inverse_report(eq1()).verdict, Verdict::proved_symbolic);
}

TEST(Eq1, ResidualK1PowerIsRejected)
{
    PolyTable t = load_named_table("eq1");
    for (auto& [name, p] : t.entries) {
        if (name == "f2") {
            p = p + parse_polynomial("k1^3*u2", t.vars);
        }
    }
    EXPECT_THROW(rationalize_eq1(t), SaitoError);
}

TEST(Discriminant, VanishesAtSamplePoint)
{
    const std::vector<Rational> x = {1, 2, 3, 4, 1, 1};
    EXPECT_TRUE(det_T(data(), t_coordinates(eq1(), tables(), x)).is_zero());
    const std::vector<Rational> generic = {1, 2, 3, 4, 5, 7};
    EXPECT_FALSE(det_T(data(), t_coordinates(eq1(), tables(), generic)).is_zero());
}

TEST(Discriminant, SuiteSmall)
{
    DiscriminantOptions opt;
    opt.trials = 4;
    opt.mirror_points = 3;
    opt.generic_points = 2;
    const auto reports = discriminant_vanishing_check(data(), eq1(), tables(), opt);
    ASSERT_EQ(reports.size(), 4U);
    for (const auto& r : reports) {
        EXPECT_TRUE(r.ok()) << r.claim;
    }
    EXPECT_EQ(reports[3].details.at("exponent"), "42");
}

TEST(Ptilde, Identities)
{
    CheckOptions opt;
    const PolyTable t = load_named_table("ptilde");
    for (const auto& r : verify_ptilde_identities(t, Mode::exact, opt)) {
        EXPECT_EQ(r.verdict, Verdict::proved_symbolic) << r.claim;
    }
    PolyTable bad = t;
    for (auto& [name, p] : bad.entries) {
        if (name == "pt15") {
            p = p + parse_polynomial("r4", bad.vars);
        }
    }
    EXPECT_EQ(verify_ptilde_identities(bad, Mode::exact, opt)[4].verdict, Verdict::failed);
}
