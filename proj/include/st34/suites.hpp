#ifndef ST34_SUITES_HPP
#define ST34_SUITES_HPP

#include "st34/idcheck.hpp"
#include "st34/poly_io.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace st34 {

struct SuiteConfig {
    std::string suite = "all";
    Mode mode = Mode::exact;
    std::optional<std::size_t> points;  // default 20, or 25 in modular mode
    std::uint64_t seed = kDefaultSeed;
    std::size_t primes = 3;
    std::filesystem::path tables = default_tables_dir();
    std::vector<unsigned> m_indices = {1, 2, 3, 4, 5, 7};
    std::string check;          // sub-check for saito and st33, empty for all
    std::size_t trials = 25;    // discriminant points with x5 = x6 = 1
    bool parallel = false;
    bool timings = false;

    std::size_t point_count() const { return points.value_or(mode == Mode::modular ? 25 : 20); }
    CheckOptions check_options() const;
};

/// Suite names in run order, without "all".
const std::vector<std::string>& suite_names();

/// Reports of one suite, or of every suite for "all", sorted by claim name.
/// Each report carries details["suite"]. Throws std::invalid_argument on an
/// unknown suite name.
std::vector<VerificationReport> run_suite(const SuiteConfig& config);

/// Reports of one named suite in construction order.
std::vector<VerificationReport> suite_reports(const std::string& name, const SuiteConfig& config);

void sort_reports(std::vector<VerificationReport>& reports);
bool all_passed(const std::vector<VerificationReport>& reports);

/// Report document: configuration, per-verdict counts and the reports.
nlohmann::ordered_json report_document(const SuiteConfig& config, const std::vector<VerificationReport>& reports);
/// One line per claim plus a count line per verdict.
std::string human_summary(const std::vector<VerificationReport>& reports);

/// Suite -> the provenance strings its claims may carry.
const std::map<std::string, std::vector<std::string>>& coverage_manifest();
/// Claims whose provenance is not listed for their suite.
std::vector<std::string> unmapped_claims(const std::vector<VerificationReport>& reports);

/// Canonical text of a dump entity; throws std::invalid_argument on bad input.
/// Entities: vectors, hyperplanes, generator NAME, mu K, m J, h J, J D.
std::string dump_entity(const std::string& entity, const std::vector<std::string>& args,
                        const std::filesystem::path& tables = default_tables_dir());

}  // namespace st34

#endif  // ST34_SUITES_HPP
