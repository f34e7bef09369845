#include "st34/invariants.hpp"
#include "st34/saito.hpp"
#include "st34/st33.hpp"
#include "st34/suites.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace st34;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            pass = false;
            note += (note.empty() ? "" : "; ") + what;
        }
    }
    void all_ok(const std::vector<VerificationReport>& reports, const std::string& what)
    {
        for (const auto& r : reports) {
            require(r.ok(), what + ": " + r.claim + " is " + to_string(r.verdict));
        }
    }
};

std::string read_file(const std::filesystem::path& p)
{
    std::ifstream is(p, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

Outcome lattice()
{
    Outcome o;
    const auto reports = suite_reports("lattice", SuiteConfig{});
    o.require(reports.size() == 14, "expected 14 lattice facts");
    o.all_ok(reports, "lattice");
    return o;
}

Outcome generator_laws()
{
    Outcome o;
    const auto reports = suite_reports("generators", SuiteConfig{});
    o.require(reports.size() == 24, "expected 24 generator facts");
    o.all_ok(reports, "generators");
    return o;
}

Outcome mu_structure()
{
    Outcome o;
    const auto reports = suite_reports("mu", SuiteConfig{});
    std::size_t rational = 0;
    std::size_t vanishing = 0;
    bool mu0 = false;
    for (const auto& r : reports) {
        rational += r.claim.ends_with("has zero w-part") && r.ok() && r.points == 20 ? 1 : 0;
        vanishing += r.claim.ends_with("vanishes identically") && r.ok() ? 1 : 0;
        mu0 = mu0 || (r.claim == "mu0 = 756" && r.ok());
    }
    o.require(rational == 42, "mu_k rational for " + std::to_string(rational) + " of 42 k");
    o.require(vanishing == 6, "mu_k vanishing for " + std::to_string(vanishing) + " of 6 k");
    o.require(mu0, "mu0 = 756");
    o.all_ok(reports, "mu");
    return o;
}

Outcome mu_e1_constants_check()
{
    Outcome o;
    const std::array<long, 6> expected = {-1944, 66096, -1770984, 47830176, -1291401144, -941431787784};
    for (std::size_t i = 0; i < 6; ++i) {
        const Rational e(expected[i]);
        o.require(mu_e1_constants()[i] == e, "printed constant for j = " + std::to_string(kMIndices[i]));
        const auto r = mu_e1_report(6 * kMIndices[i], e);
        o.require(r.ok(), r.claim + " observed " + r.details.at("observed"));
    }
    return o;
}

Outcome m_tables(const InvariantTables& t)
{
    Outcome o;
    for (const unsigned j : kMIndices) {
        const auto start = std::chrono::steady_clock::now();
        const auto c = recompute_m_table(j, t.m_table(j), Mode::exact, kDefaultSeed);
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << "  m" << j << ": " << c.monomials << " monomials, constant " << c.constant.to_string() << ", "
                  << c.diffs.size() << " mismatches, " << s << " s\n";
        o.require(c.matches(), "m" + std::to_string(j) + " differs in " + std::to_string(c.diffs.size()) + " monomials");
        o.require(c.constant == mu_e1_constants()[m_index(j)], "m" + std::to_string(j) + " constant");
    }
    const auto m7 = recompute_m_table(7, t.m_table(7), Mode::modular, kDefaultSeed);
    o.require(m7.matches(), "modular m7 differs");
    return o;
}

Outcome m_invariance(const InvariantTables& t)
{
    Outcome o;
    CheckOptions opt;
    for (const unsigned j : kMIndices) {
        const auto g = m_generators_report(j, t.m_table(j), opt);
        o.require(g.ok() && g.points == 20, g.claim);
        const auto r2 = m_invariance_report(j, t.m_table(j), Mode::exact, opt);
        o.require(r2.ok(), r2.claim);
        if (j <= 3) {
            o.require(r2.verdict == Verdict::proved_symbolic, r2.claim + " not symbolic");
        }
    }
    return o;
}

Outcome q_suite(const InvariantTables& t)
{
    Outcome o;
    const auto reports = verify_q_expressions(t, Mode::exact, CheckOptions{});
    o.all_ok(reports, "q-expr");
    std::size_t symbolic = 0;
    for (const auto& r : reports) {
        symbolic += r.verdict == Verdict::proved_symbolic ? 1 : 0;
        if (r.verdict == Verdict::passed_randomized) {
            o.require(r.points == 20, r.claim + " used " + std::to_string(r.points) + " points");
        }
    }
    o.require(symbolic >= 8, "only " + std::to_string(symbolic) + " symbolic verdicts");
    return o;
}

Outcome hessian(const InvariantTables& t)
{
    Outcome o;
    const auto r = hessian_ratio_check(t, CheckOptions{}, 10);
    o.require(r.verdict == Verdict::passed_randomized, r.claim + " is " + to_string(r.verdict));
    std::cout << "  H(f1)/f4 = " << (r.details.count("ratio") ? r.details.at("ratio") : "?") << "\n";
    return o;
}

Outcome saito_suite()
{
    Outcome o;
    const auto field = load_potential_field();
    for (const auto& r : homogeneity_reports(field, WeightSystem::st34())) {
        o.require(r.verdict == Verdict::proved_symbolic, r.claim);
    }
    try {
        const auto data = build_saito_data(field);
        const auto flat = check_flatness(data, Mode::exact, CheckOptions{});
        o.require(flat.size() == 15, "expected 15 commutators");
        for (const auto& r : flat) {
            o.require(r.verdict == Verdict::proved_symbolic, r.claim);
        }
    } catch (const SaitoError& e) {
        o.require(false, e.what());
    }
    return o;
}

Outcome discriminant()
{
    Outcome o;
    const auto reports = suite_reports("discriminant", SuiteConfig{});
    o.all_ok(reports, "discriminant");
    o.require(reports.size() == 6, "expected 6 discriminant reports");
    return o;
}

Outcome st33_suite(const InvariantTables& t)
{
    Outcome o;
    for (const auto& r : verify_ptilde_identities(load_named_table("ptilde"), Mode::exact, CheckOptions{})) {
        o.require(r.verdict == Verdict::proved_symbolic, r.claim);
    }
    const PolyTable jt = load_named_table("J");
    const PolyTable rel = load_named_table("J_relations");
    const auto tables = verify_j_tables(t, jt);
    o.all_ok(tables, "J tables");
    for (std::size_t i = 0; i < 3; ++i) {
        o.require(tables[i].verdict == Verdict::proved_symbolic, tables[i].claim + " not symbolic");
    }
    CheckOptions opt;
    opt.points = 25;
    for (const Mode m : {Mode::randomized, Mode::modular}) {
        for (const auto& r : verify_j_relations(t, jt, rel, m, opt)) {
            o.require(r.ok() && r.points == (m == Mode::modular ? 75U : 25U), r.claim + " in " + to_string(m));
        }
    }
    SuiteConfig exact;
    exact.suite = "st33";
    SuiteConfig modular = exact;
    modular.mode = Mode::modular;
    for (const auto* cfg : {&exact, &modular}) {
        std::size_t controls = 0;
        for (const auto& r : suite_reports("st33", *cfg)) {
            if (r.claim.starts_with("mutated")) {
                ++controls;
                o.require(r.ok(), r.claim + " in " + to_string(cfg->mode) + ": " + r.details.at("observed"));
            }
        }
        o.require(controls == 3, "expected 3 mutation controls");
    }
    return o;
}

Outcome determinism(const std::string& cli)
{
    Outcome o;
    const auto dir = std::filesystem::temp_directory_path();
    const auto a = dir / "st34_acceptance_a.json";
    const auto b = dir / "st34_acceptance_b.json";
    for (const auto& p : {a, b}) {
        const std::string cmd = cli + " verify all --mode modular --out " + p.string() + " > /dev/null";
        o.require(std::system(cmd.c_str()) == 0, "verify all --mode modular did not pass");
    }
    const std::string ja = read_file(a);
    o.require(!ja.empty(), "empty report");
    o.require(ja == read_file(b), "reports differ");
    std::filesystem::remove(a);
    std::filesystem::remove(b);
    return o;
}

}  // namespace

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::cerr << "usage: acceptance PATH_TO_ST34_CLI\n";
        return 2;
    }
    const std::string cli = argv[1];
    const InvariantTables t = load_invariant_tables();
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"lattice census", lattice},
        {"generator laws", generator_laws},
        {"mu structure", mu_structure},
        {"values at e1", mu_e1_constants_check},
        {"m-table re-derivation", [&] { return m_tables(t); }},
        {"invariance of m_j", [&] { return m_invariance(t); }},
        {"q-expression suite", [&] { return q_suite(t); }},
        {"Hessian relation", [&] { return hessian(t); }},
        {"Saito suite", saito_suite},
        {"discriminant vanishing", discriminant},
        {"ST33 suite", [&] { return st33_suite(t); }},
        {"determinism", [&] { return determinism(cli); }},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.pass;
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.1f", s);
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << " (" << secs << " s)";
        if (!o.pass) {
            std::cout << ": " << o.note;
        }
        std::cout << std::endl;
    }
    return all ? 0 : 1;
}
