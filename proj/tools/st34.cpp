#include "st34/invariants.hpp"
#include "st34/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace st34;

namespace {

struct Flags {
    std::string mode = "exact";
    std::size_t points = 0;
    std::string seed;
    std::size_t primes = 3;
    std::string out;
    std::string tables;
    bool parallel = false;
    bool timings = false;
};

void add_common(CLI::App* app, Flags& f)
{
    app->add_option("--mode", f.mode, "exact, randomized or modular")
        ->envname("ST34_MODE")
        ->check(CLI::IsMember({"exact", "randomized", "modular"}));
    app->add_option("--points", f.points, "sample points per claim (default 20, or 25 in modular mode)")
        ->envname("ST34_POINTS");
    app->add_option("--seed", f.seed, "random seed, decimal or 0x-prefixed hex")->envname("ST34_SEED");
    app->add_option("--primes", f.primes, "primes in modular mode")->envname("ST34_PRIMES");
    app->add_option("--out", f.out, "write the JSON report here ('-' for stdout)")->envname("ST34_OUT");
    app->add_option("--tables", f.tables, "directory of .poly tables")->envname("ST34_TABLES");
    app->add_flag("--parallel", f.parallel, "run independent suites concurrently")->envname("ST34_PARALLEL");
    app->add_flag("--timings", f.timings, "include wall times in the JSON report")->envname("ST34_TIMINGS");
}

SuiteConfig make_config(const Flags& f, const std::string& suite)
{
    SuiteConfig c;
    c.suite = suite;
    c.mode = parse_mode(f.mode);
    if (f.points != 0) {
        c.points = f.points;
    }
    if (!f.seed.empty()) {
        std::size_t pos = 0;
        c.seed = std::stoull(f.seed, &pos, 0);
        if (pos != f.seed.size()) {
            throw std::invalid_argument("bad seed '" + f.seed + "'");
        }
    }
    c.primes = f.primes;
    if (!f.tables.empty()) {
        c.tables = f.tables;
    }
    c.parallel = f.parallel;
    c.timings = f.timings;
    return c;
}

int emit(const SuiteConfig& config, const Flags& f, const std::vector<VerificationReport>& reports)
{
    const std::string json = report_document(config, reports).dump(2) + "\n";
    if (f.out == "-") {
        std::cout << json;
    } else {
        std::cout << human_summary(reports);
        if (!f.out.empty()) {
            std::ofstream os(f.out, std::ios::binary);
            if (!os) {
                throw std::runtime_error("cannot write " + f.out);
            }
            os << json;
        }
    }
    return all_passed(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of the ST34 invariant computations"};
    app.require_subcommand(1);

    Flags flags;
    std::string suite;
    std::vector<unsigned> js;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::vector<std::string> suites = suite_names();
    suites.emplace_back("all");
    verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suites));
    verify->add_option("--j", js, "m-table indices for the m-tables suite");
    add_common(verify, flags);

    std::string entity;
    std::vector<std::string> entity_args;
    std::string dump_tables;
    auto* dump = app.add_subcommand("dump", "print an entity in canonical form");
    dump->add_option("entity", entity, "vectors, hyperplanes, generator, mu, m, h or J")->required();
    dump->add_option("args", entity_args, "entity arguments");
    dump->add_option("--tables", dump_tables, "directory of .poly tables")->envname("ST34_TABLES");

    auto* invariants = app.add_subcommand("invariants", "m-table tools");
    auto* recompute = invariants->add_subcommand("recompute", "re-derive m-tables from the minimal vectors");
    invariants->require_subcommand(1);
    recompute->add_option("--j", js, "indices among 1, 2, 3, 4, 5, 7")->required();
    add_common(recompute, flags);

    std::string check;
    std::size_t trials = 25;
    auto* saito = app.add_subcommand("saito", "Saito matrix checks");
    saito->add_option("--check", check, "flatness, homogeneity or discriminant")
        ->check(CLI::IsMember({"flatness", "homogeneity", "discriminant"}));
    saito->add_option("--trials", trials, "discriminant points with x5 = x6 = 1");
    add_common(saito, flags);

    auto* st33 = app.add_subcommand("st33", "restricted invariants and J-relations");
    st33->add_option("--check", check, "tables or relations")->check(CLI::IsMember({"tables", "relations"}));
    add_common(st33, flags);

    auto* coverage = app.add_subcommand("coverage", "print the suite coverage manifest");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*dump) {
            const std::filesystem::path dir = dump_tables.empty() ? default_tables_dir() : std::filesystem::path(dump_tables);
            std::cout << dump_entity(entity, entity_args, dir);
            return 0;
        }
        if (*coverage) {
            for (const auto& [name, provs] : coverage_manifest()) {
                std::cout << name << ":";
                for (const auto& p : provs) {
                    std::cout << " [" << p << "]";
                }
                std::cout << "\n";
            }
            return 0;
        }
        SuiteConfig config;
        if (*verify) {
            config = make_config(flags, suite);
        } else if (*invariants) {
            config = make_config(flags, "m-tables");
        } else if (*saito) {
            config = make_config(flags, "saito");
            config.check = check == "flatness" ? "" : check;
            config.trials = trials;
        } else {
            config = make_config(flags, "st33");
            config.check = check;
        }
        if (!js.empty()) {
            for (const unsigned j : js) {
                m_index(j);
            }
            config.m_indices = js;
        }
        auto reports = run_suite(config);
        if (*saito && check == "flatness") {
            std::erase_if(reports, [](const VerificationReport& r) { return r.provenance != "flatness of C"; });
        }
        return emit(config, flags, reports);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
