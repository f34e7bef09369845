#include "st34/suites.hpp"

#include "st34/groups.hpp"
#include "st34/invariants.hpp"
#include "st34/lattice.hpp"
#include "st34/saito.hpp"
#include "st34/st33.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <sstream>
#include <stdexcept>

namespace st34 {

namespace {

const std::string kLatticeProv = "lattice census";
const std::string kGeneratorProv = "generators of ST34";
const std::string kMuProv = "power sums of the minimal vectors";

VerificationReport count_report(const std::string& claim, std::size_t observed, std::size_t expected)
{
    return fact_report(claim, kLatticeProv, observed == expected, std::to_string(observed), std::to_string(expected));
}

std::vector<VerificationReport> lattice_suite()
{
    const LatticeCensus c = lattice_census();
    std::vector<VerificationReport> out;
    out.push_back(count_report("minimal vectors of theta-pair shape", c.theta_pair, 270));
    out.push_back(count_report("minimal vectors of omega-power shape", c.omega_power, 486));
    out.push_back(count_report("minimal vectors in total", c.total, 756));
    std::string norms;
    for (const long n : c.norms) {
        norms += (norms.empty() ? "" : ", ") + std::to_string(n);
    }
    out.push_back(fact_report("minimal vectors share one Hermitian norm", kLatticeProv, c.norms.size() == 1, norms,
                              "a single value"));
    out.push_back(fact_report("minimal vectors are closed under the six units", kLatticeProv, c.closed_under_units,
                              c.closed_under_units ? "closed" : "not closed", "closed"));
    const std::array<std::size_t, 5> expected = {45, 30, 20, 30, 1};
    for (std::size_t i = 0; i < 5; ++i) {
        const auto it = c.hyperplanes_by_type.find(kHyperplaneTypes[i]);
        out.push_back(count_report("hyperplanes of type " + to_string(kHyperplaneTypes[i]),
                                   it == c.hyperplanes_by_type.end() ? 0 : it->second, expected[i]));
    }
    out.push_back(count_report("reflecting hyperplanes in total", c.hyperplanes, 126));
    std::string hist;
    for (const auto& [size, count] : c.fiber_histogram) {
        hist += (hist.empty() ? "" : ", ") + std::to_string(size) + ": " + std::to_string(count);
    }
    out.push_back(fact_report("vector-to-hyperplane fibers", kLatticeProv,
                              c.fiber_histogram == std::map<std::size_t, std::size_t>{{6, 126}}, "{" + hist + "}",
                              "{6: 126}"));
    out.push_back(fact_report("vector-to-hyperplane image is the hyperplane set", kLatticeProv,
                              c.image_is_hyperplane_set, c.image_is_hyperplane_set ? "equal" : "different", "equal"));
    out.push_back(fact_report("hyperplane type of a vector matches its census type", kLatticeProv, c.types_agree,
                              c.types_agree ? "agree" : "disagree", "agree"));
    return out;
}

bool fixes_hyperplane(const GroupElement& g, const std::array<QOmega, 6>& form)
{
    std::size_t last = 5;
    while (form[last].is_zero()) {
        --last;
    }
    for (std::size_t i = 0; i < 6; ++i) {
        if (i == last) {
            continue;
        }
        Vector6<QOmega> v = Vector6<QOmega>::Constant(QOmega(0));
        v(static_cast<Eigen::Index>(i)) = QOmega(1);
        v(static_cast<Eigen::Index>(last)) = -form[i] / form[last];
        if (apply(g, v) != v) {
            return false;
        }
    }
    return true;
}

std::vector<VerificationReport> generators_suite()
{
    std::vector<VerificationReport> out;
    const GroupElement id = identity_element();
    for (const auto& name : kGeneratorNames) {
        const GroupElement g = generator(name);
        const bool inv = g * g == id;
        out.push_back(fact_report(name + " squares to the identity", kGeneratorProv, inv, inv ? "identity" : "not identity",
                                  "identity"));
        const int rank = rank_of_difference_from_identity(g);
        out.push_back(fact_report(name + " minus the identity has rank 1", kGeneratorProv, rank == 1,
                                  std::to_string(rank), "1"));
        const bool fixes = fixes_hyperplane(g, generator_hyperplane(name));
        out.push_back(fact_report(name + " fixes its hyperplane pointwise", kGeneratorProv, fixes,
                                  fixes ? "fixed" : "moved", "fixed"));
        const bool perm = permutes_minimal_vectors(g);
        out.push_back(fact_report(name + " permutes the 756 minimal vectors", kGeneratorProv, perm,
                                  perm ? "permutes" : "does not permute", "permutes"));
    }
    return out;
}

VerificationReport mu_rational_report(unsigned k, const CheckOptions& opt)
{
    VerificationReport r;
    r.claim = "mu" + std::to_string(k) + " has zero w-part";
    r.provenance = kMuProv;
    r.mode = Mode::randomized;
    r.seed = opt.seed;
    Rng rng(opt.seed + 1000 + k);
    for (std::size_t n = 0; n < opt.points; ++n) {
        const auto x = rng.integer_point(6, -99, 99);
        std::vector<QOmega> xq;
        for (const auto& c : x) {
            xq.emplace_back(c);
        }
        const QOmega v = mu_value<Rational>(k, std::span<const QOmega>(xq));
        if (!v.w.is_zero()) {
            r.witnesses.push_back({{}, to_string(v), "a rational value", "nonzero w-part at " + point_text(x)});
        }
    }
    r.points = opt.points;
    if (r.witnesses.empty()) {
        r.verdict = Verdict::passed_randomized;
        r.error_bound = error_bound_text(Integer(k == 0 ? 0 : k), Integer(199), opt.points);
    } else {
        r.verdict = Verdict::failed;
    }
    return r;
}

std::vector<VerificationReport> mu_suite(const CheckOptions& opt)
{
    std::vector<VerificationReport> out;
    const auto mu0 = mu_symbolic(0);
    out.push_back(fact_report("mu0 = 756", kMuProv, mu0 == Polynomial<Rational>::constant(x_vars(), Rational(756)),
                              to_string(mu0), "756"));
    for (unsigned k = 1; k <= 42; ++k) {
        out.push_back(mu_rational_report(k, opt));
    }
    for (const unsigned k : {2U, 4U, 8U, 10U, 14U, 16U}) {
        out.push_back(mu_vanishing_report(k, opt));
    }
    for (std::size_t i = 0; i < kMIndices.size(); ++i) {
        out.push_back(mu_e1_report(6 * kMIndices[i], mu_e1_constants()[i]));
        out.push_back(mu_invariance_report(6 * kMIndices[i], opt));
    }
    return out;
}

std::vector<VerificationReport> m_tables_suite(const SuiteConfig& cfg, const CheckOptions& opt)
{
    const InvariantTables t = load_invariant_tables(cfg.tables);
    std::vector<VerificationReport> out;
    for (const unsigned j : cfg.m_indices) {
        const auto& mj = t.m_table(j);
        out.push_back(m_table_report(recompute_m_table(j, mj, cfg.mode, cfg.seed, cfg.primes), cfg.seed));
        out.push_back(m_invariance_report(j, mj, cfg.mode, opt));
        out.push_back(m_generators_report(j, mj, opt));
    }
    return out;
}

std::vector<VerificationReport> saito_suite(const SuiteConfig& cfg, const CheckOptions& opt)
{
    const PotentialField field = load_potential_field(cfg.tables);
    std::vector<VerificationReport> out;
    if (cfg.check.empty() || cfg.check == "homogeneity") {
        out = homogeneity_reports(field, WeightSystem::st34());
    }
    if (cfg.check == "homogeneity") {
        return out;
    }
    std::optional<SaitoData> data;
    std::string error;
    try {
        data = build_saito_data(field);
    } catch (const SaitoError& e) {
        error = e.what();
    }
    out.push_back(fact_report("T by the Euler operator equals T by the Euler shortcut", "Saito matrix",
                              data.has_value(), data ? "agree" : error, "agree"));
    if (data) {
        for (auto& r : check_flatness(*data, cfg.mode, opt)) {
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<VerificationReport> discriminant_suite(const SuiteConfig& cfg)
{
    const PotentialField field = load_potential_field(cfg.tables);
    const SaitoData data = build_saito_data(field);
    std::vector<VerificationReport> out;
    std::optional<Eq1Map> map;
    std::string error;
    try {
        map = rationalize_eq1(load_named_table("eq1", cfg.tables));
    } catch (const SaitoError& e) {
        error = e.what();
    }
    out.push_back(fact_report("change of basis rationalizes with full k1 cancellation", "change of basis between f and u",
                              map.has_value(), map ? "rational" : error, "rational"));
    if (!map) {
        return out;
    }
    out.push_back(eq1_inverse_report(*map));
    DiscriminantOptions dopt;
    dopt.seed = cfg.seed;
    dopt.trials = cfg.trials;
    const InvariantTables t = load_invariant_tables(cfg.tables);
    for (auto& r : discriminant_vanishing_check(data, *map, t, dopt)) {
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<VerificationReport> st33_suite(const SuiteConfig& cfg, const CheckOptions& base)
{
    const InvariantTables t = load_invariant_tables(cfg.tables);
    const PolyTable jtable = load_named_table("J", cfg.tables);
    const PolyTable relations = load_named_table("J_relations", cfg.tables);
    std::vector<VerificationReport> out;
    if (cfg.check.empty() || cfg.check == "tables") {
        out = verify_ptilde_identities(load_named_table("ptilde", cfg.tables), cfg.mode, base);
        for (auto& r : verify_j_tables(t, jtable, cfg.seed)) {
            out.push_back(std::move(r));
        }
        for (auto& r : verify_restriction_two_ways(t)) {
            out.push_back(std::move(r));
        }
    }
    if (cfg.check == "tables") {
        return out;
    }
    CheckOptions opt = base;
    opt.points = cfg.points.value_or(25);
    for (auto& r : verify_j_relations(t, jtable, relations, cfg.mode, opt)) {
        out.push_back(std::move(r));
    }
    for (auto& r : relation_homogeneity(relations)) {
        out.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < relations.entries.size(); ++i) {
        PolyTable bad = relations;
        auto& [name, p] = bad.entries[i];
        const Monomial m = p.terms().front().first;
        p = p + Polynomial<Rational>::monomial(p.vars(), m, Rational(1));
        std::size_t mismatches = 0;
        for (const auto& r : verify_j_relations(t, jtable, bad, cfg.mode, opt)) {
            if (r.claim.rfind(name + " ", 0) == 0 && r.verdict == Verdict::failed) {
                mismatches = std::stoul(r.details.at("mismatching_points"));
            }
        }
        const std::size_t total = cfg.mode == Mode::modular ? opt.points * opt.primes : opt.points;
        const std::size_t needed = total - total / 25;
        out.push_back(fact_report("mutated " + name + " relation is detected", "control", mismatches >= needed,
                                  std::to_string(mismatches) + " of " + std::to_string(total) + " points",
                                  "at least " + std::to_string(needed)));
    }
    return out;
}

std::vector<VerificationReport> build_suite(const std::string& name, const SuiteConfig& cfg)
{
    const CheckOptions opt = cfg.check_options();
    if (name == "lattice") {
        return lattice_suite();
    }
    if (name == "generators") {
        return generators_suite();
    }
    if (name == "mu") {
        return mu_suite(opt);
    }
    if (name == "m-tables") {
        return m_tables_suite(cfg, opt);
    }
    if (name == "q-expr") {
        return verify_q_expressions(load_invariant_tables(cfg.tables), cfg.mode, opt);
    }
    if (name == "f-hessian") {
        return {hessian_ratio_check(load_invariant_tables(cfg.tables), opt)};
    }
    if (name == "saito") {
        if (cfg.check == "discriminant") {
            return discriminant_suite(cfg);
        }
        return saito_suite(cfg, opt);
    }
    if (name == "discriminant") {
        return discriminant_suite(cfg);
    }
    if (name == "st33") {
        return st33_suite(cfg, opt);
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace

CheckOptions SuiteConfig::check_options() const
{
    CheckOptions opt;
    opt.points = point_count();
    opt.primes = primes;
    opt.seed = seed;
    return opt;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"lattice",   "generators", "mu",           "m-tables", "q-expr",
                                                   "f-hessian", "saito",      "discriminant", "st33"};
    return names;
}

std::vector<VerificationReport> suite_reports(const std::string& name, const SuiteConfig& config)
{
    auto reports = build_suite(name, config);
    for (auto& r : reports) {
        r.details["suite"] = name;
    }
    return reports;
}

void sort_reports(std::vector<VerificationReport>& reports)
{
    std::stable_sort(reports.begin(), reports.end(), [](const VerificationReport& a, const VerificationReport& b) {
        return a.claim < b.claim;
    });
}

bool all_passed(const std::vector<VerificationReport>& reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.ok(); });
}

std::vector<VerificationReport> run_suite(const SuiteConfig& config)
{
    std::vector<std::string> names;
    if (config.suite == "all") {
        names = suite_names();
    } else if (std::find(suite_names().begin(), suite_names().end(), config.suite) != suite_names().end()) {
        names = {config.suite};
    } else {
        throw std::invalid_argument("unknown suite '" + config.suite + "'");
    }
    std::vector<std::vector<VerificationReport>> parts(names.size());
    if (config.parallel) {
        std::vector<std::future<std::vector<VerificationReport>>> futures;
        for (const auto& n : names) {
            futures.push_back(std::async(std::launch::async, [&config, n] { return suite_reports(n, config); }));
        }
        for (std::size_t i = 0; i < names.size(); ++i) {
            parts[i] = futures[i].get();
        }
    } else {
        for (std::size_t i = 0; i < names.size(); ++i) {
            parts[i] = suite_reports(names[i], config);
        }
    }
    std::vector<VerificationReport> out;
    for (auto& p : parts) {
        for (auto& r : p) {
            out.push_back(std::move(r));
        }
    }
    sort_reports(out);
    return out;
}

nlohmann::ordered_json report_document(const SuiteConfig& config, const std::vector<VerificationReport>& reports)
{
    nlohmann::ordered_json doc;
    doc["suite"] = config.suite;
    doc["mode"] = to_string(config.mode);
    doc["points"] = config.point_count();
    doc["primes"] = config.primes;
    doc["seed"] = config.seed;
    std::map<std::string, std::size_t> counts;
    for (const auto& r : reports) {
        ++counts[to_string(r.verdict)];
    }
    doc["verdicts"] = counts;
    doc["passed"] = all_passed(reports);
    doc["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        doc["reports"].push_back(r.to_json(config.timings));
    }
    return doc;
}

std::string human_summary(const std::vector<VerificationReport>& reports)
{
    std::ostringstream os;
    std::map<std::string, std::size_t> counts;
    for (const auto& r : reports) {
        ++counts[to_string(r.verdict)];
        os << (r.ok() ? "  ok    " : "  FAIL  ") << "[" << to_string(r.verdict) << "] " << r.claim;
        if (r.verdict == Verdict::passed_randomized) {
            os << "  (error " << r.error_bound << ")";
        }
        os << "\n";
    }
    os << "\n";
    for (const auto& [v, n] : counts) {
        os << v << ": " << n << "\n";
    }
    os << (all_passed(reports) ? "all claims pass" : "some claims FAIL") << "\n";
    return os.str();
}

const std::map<std::string, std::vector<std::string>>& coverage_manifest()
{
    static const std::map<std::string, std::vector<std::string>> m = {
        {"lattice", {kLatticeProv}},
        {"generators", {kGeneratorProv}},
        {"mu",
         {kMuProv, "unit closure of the minimal vectors", "value of mu_k at e1", "invariance of mu_k under the generators"}},
        {"m-tables",
         {"m1 table", "m2 table", "m3 table", "m4 table", "m5 table", "m7 table", "R2-invariance of m_j",
          "invariance of m_j"}},
        {"q-expr", {"p-in-q table", "R2 action table", "control"}},
        {"f-hessian", {"Hessian relation"}},
        {"saito", {"weights of the potential vector field", "Euler identity", "Saito matrix", "flatness of C"}},
        {"discriminant", {"change of basis between f and u", "discriminant of ST34", "weights of the potential vector field"}},
        {"st33", {"restriction to x5 = x6 = 1", "restricted invariants", "ST33 relations", "control"}},
    };
    return m;
}

std::vector<std::string> unmapped_claims(const std::vector<VerificationReport>& reports)
{
    std::vector<std::string> out;
    for (const auto& r : reports) {
        const auto it = r.details.find("suite");
        const auto m = it == r.details.end() ? coverage_manifest().end() : coverage_manifest().find(it->second);
        if (m == coverage_manifest().end() ||
            std::find(m->second.begin(), m->second.end(), r.provenance) == m->second.end()) {
            out.push_back(r.claim + " (" + r.provenance + ")");
        }
    }
    return out;
}

std::string dump_entity(const std::string& entity, const std::vector<std::string>& args,
                        const std::filesystem::path& tables)
{
    auto number = [&](std::size_t expected_args) {
        if (args.size() != expected_args) {
            throw std::invalid_argument("dump " + entity + " takes " + std::to_string(expected_args) + " argument(s)");
        }
        std::size_t pos = 0;
        const unsigned long v = std::stoul(args[0], &pos);
        if (pos != args[0].size()) {
            throw std::invalid_argument("not a number: " + args[0]);
        }
        return static_cast<unsigned>(v);
    };
    std::ostringstream os;
    if (entity == "vectors") {
        for (const auto& v : minimal_vectors()) {
            os << to_string(v.coords) << "\n";
        }
    } else if (entity == "hyperplanes") {
        for (const auto& h : enumerate_hyperplanes()) {
            os << to_string(h.form) << "\n";
        }
    } else if (entity == "generator") {
        if (args.size() != 1) {
            throw std::invalid_argument("dump generator takes a name: P1, P2, P3, Q1, R1 or R2");
        }
        const GroupElement g = generator(args[0]);
        for (Eigen::Index i = 0; i < 6; ++i) {
            for (Eigen::Index j = 0; j < 6; ++j) {
                os << (j == 0 ? "" : " ") << to_string(g.matrix(i, j));
            }
            os << "\n";
        }
    } else if (entity == "mu") {
        const unsigned k = number(1);
        if (k % 6 != 0) {
            os << "0\n";
        } else if (k > 18) {
            throw std::invalid_argument("mu" + std::to_string(k) +
                                        " exceeds the symbolic size cap; evaluate it with 'verify mu' instead");
        } else {
            os << to_string(mu_symbolic(k)) << "\n";
        }
    } else if (entity == "m") {
        const unsigned j = number(1);
        os << to_string(load_invariant_tables(tables).m_table(j)) << "\n";
    } else if (entity == "h") {
        const unsigned j = number(1);
        if (j < 1 || j > 6) {
            throw std::invalid_argument("h index must be 1..6");
        }
        os << to_string(load_potential_field(tables).h[j - 1]) << "\n";
    } else if (entity == "J") {
        const unsigned d = number(1);
        const std::string name = "J" + std::to_string(d);
        const PolyTable jt = load_named_table("J", tables);
        if (jt.contains(name)) {
            os << to_string(jt.get(name)) << "\n";
        } else {
            const PolyTable rel = load_named_table("J_relations", tables);
            if (!rel.contains(name)) {
                throw std::invalid_argument("no J of degree " + std::to_string(d));
            }
            os << to_string(rel.get(name)) << "\n";
        }
    } else {
        throw std::invalid_argument("unknown dump entity '" + entity + "'");
    }
    return os.str();
}

}  // namespace st34
