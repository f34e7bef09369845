#ifndef ST34_IDCHECK_HPP
#define ST34_IDCHECK_HPP

#include "st34/polynomial.hpp"
#include "st34/random.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace st34 {

enum class Mode { exact, randomized, modular };
std::string to_string(Mode m);
Mode parse_mode(const std::string& s);

enum class Verdict {
    proved_symbolic,    // canonical difference is zero
    proved_exact,       // exhaustive finite computation, or exact equality of numbers
    passed_randomized,  // agreement at random points; carries an error bound
    failed,             // carries at least one witness
    inconclusive,
};
std::string to_string(Verdict v);
inline bool passed(Verdict v) { return v != Verdict::failed && v != Verdict::inconclusive; }

/// An exact counterexample or the evidence behind a failed check.
struct Witness {
    std::vector<std::string> point;
    std::string lhs;
    std::string rhs;
    std::string note;
};

struct VerificationReport {
    std::string claim;
    std::string provenance;
    Mode mode = Mode::exact;
    Verdict verdict = Verdict::failed;
    std::uint64_t seed = kDefaultSeed;
    std::size_t points = 0;
    std::vector<std::uint64_t> primes;
    std::size_t resamples = 0;
    std::string error_bound;  // only for passed_randomized
    std::vector<Witness> witnesses;
    std::map<std::string, std::string> details;
    double wall_seconds = 0;

    bool ok() const { return passed(verdict); }
    nlohmann::ordered_json to_json(bool with_timing = false) const;
};

/// Oracle failure that should be answered by drawing another point.
class Resample : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using ExactOracle = std::function<Rational(std::span<const Rational>)>;
/// Evaluation modulo kPrimes[prime_index] at a point given by residues.
using ModularOracle = std::function<std::uint64_t(std::size_t prime_index, std::span<const std::uint64_t>)>;

/// Both oracles from one generic callable fn.template operator()<F>(span<const F>) -> F.
template <class Fn>
std::pair<ExactOracle, ModularOracle> make_oracles(Fn fn)
{
    ExactOracle exact = [fn](std::span<const Rational> x) { return fn.template operator()<Rational>(x); };
    ModularOracle modular = [fn](std::size_t prime_index, std::span<const std::uint64_t> x) {
        return with_prime(prime_index, [&]<class F>() {
            std::vector<F> pt;
            pt.reserve(x.size());
            for (const auto r : x) {
                pt.push_back(F::from_residue(r));
            }
            return fn.template operator()<F>(std::span<const F>(pt)).residue();
        });
    };
    return {std::move(exact), std::move(modular)};
}

/// Declarative "lhs = rhs as polynomials in nvars variables".
struct IdentityClaim {
    std::string name;
    std::string provenance;
    std::size_t nvars = 0;
    unsigned degree_bound = 0;
    std::optional<Polynomial<Rational>> lhs_poly;
    std::optional<Polynomial<Rational>> rhs_poly;
    ExactOracle lhs;
    ExactOracle rhs;
    ModularOracle lhs_mod;
    ModularOracle rhs_mod;

    /// Fills both sides from generic callables.
    template <class L, class R>
    void set_oracles(L l, R r)
    {
        std::tie(lhs, lhs_mod) = make_oracles(std::move(l));
        std::tie(rhs, rhs_mod) = make_oracles(std::move(r));
    }
    /// Symbolic sides; the oracles evaluate them.
    void set_polynomials(Polynomial<Rational> l, Polynomial<Rational> r);
};

struct CheckOptions {
    std::size_t points = 20;
    std::size_t primes = 3;
    std::uint64_t seed = kDefaultSeed;
    long range = 1000000;       // integer points drawn from [-range, range]
    std::size_t max_resamples = 100;
    unsigned symbolic_degree_cap = kDefaultPowerCap;
};

VerificationReport check_exact(const IdentityClaim& claim, const CheckOptions& opt = {});
VerificationReport check_randomized(const IdentityClaim& claim, const CheckOptions& opt = {});
VerificationReport check_modular(const IdentityClaim& claim, const CheckOptions& opt = {});
VerificationReport check(const IdentityClaim& claim, Mode mode, const CheckOptions& opt = {});

/// "(d/S)^N < 10^-X" with X computed exactly.
std::string error_bound_text(const Integer& degree, const Integer& sample_size, std::size_t n);

/// Report for a computed fact compared with an expected value.
VerificationReport fact_report(const std::string& claim, const std::string& provenance, bool holds,
                               const std::string& observed, const std::string& expected);

std::string point_text(std::span<const Rational> x);

}  // namespace st34

#endif  // ST34_IDCHECK_HPP
