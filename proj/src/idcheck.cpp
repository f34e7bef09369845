#include "st34/idcheck.hpp"

#include "st34/poly_io.hpp"

#include <chrono>

namespace st34 {

namespace {

class Stopwatch {
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

VerificationReport base_report(const IdentityClaim& claim, Mode mode, const CheckOptions& opt)
{
    VerificationReport r;
    r.claim = claim.name;
    r.provenance = claim.provenance;
    r.mode = mode;
    r.seed = opt.seed;
    r.details["degree_bound"] = std::to_string(claim.degree_bound);
    return r;
}

Integer to_integer(std::uint64_t v)
{
    Integer z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return z;
}

}  // namespace

std::string to_string(Mode m)
{
    switch (m) {
    case Mode::exact: return "exact";
    case Mode::randomized: return "randomized";
    case Mode::modular: return "modular";
    }
    return "?";
}

Mode parse_mode(const std::string& s)
{
    if (s == "exact") {
        return Mode::exact;
    }
    if (s == "randomized") {
        return Mode::randomized;
    }
    if (s == "modular") {
        return Mode::modular;
    }
    throw std::invalid_argument("unknown mode '" + s + "' (expected exact, randomized or modular)");
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::proved_symbolic: return "proved-symbolic";
    case Verdict::proved_exact: return "proved-exact";
    case Verdict::passed_randomized: return "passed-randomized";
    case Verdict::failed: return "failed";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

nlohmann::ordered_json VerificationReport::to_json(bool with_timing) const
{
    nlohmann::ordered_json j;
    j["claim"] = claim;
    j["provenance"] = provenance;
    j["mode"] = to_string(mode);
    j["verdict"] = to_string(verdict);
    j["seed"] = seed;
    j["points"] = points;
    j["primes"] = primes;
    j["resamples"] = resamples;
    if (!error_bound.empty()) {
        j["error_bound"] = error_bound;
    }
    auto w = nlohmann::ordered_json::array();
    for (const auto& x : witnesses) {
        w.push_back({{"point", x.point}, {"lhs", x.lhs}, {"rhs", x.rhs}, {"note", x.note}});
    }
    j["witnesses"] = w;
    nlohmann::ordered_json d = nlohmann::ordered_json::object();
    for (const auto& [k, v] : details) {
        d[k] = v;
    }
    j["details"] = d;
    if (with_timing) {
        j["wall_seconds"] = wall_seconds;
    }
    return j;
}

void IdentityClaim::set_polynomials(Polynomial<Rational> l, Polynomial<Rational> r)
{
    nvars = l.nvars();
    degree_bound = static_cast<unsigned>(std::max({0, l.degree(), r.degree()}));
    auto lp = std::make_shared<const Polynomial<Rational>>(l);
    auto rp = std::make_shared<const Polynomial<Rational>>(r);
    set_oracles([lp]<class F>(std::span<const F> x) { return evaluate<F>(*lp, x); },
                [rp]<class F>(std::span<const F> x) { return evaluate<F>(*rp, x); });
    lhs_poly = std::move(l);
    rhs_poly = std::move(r);
}

std::string point_text(std::span<const Rational> x)
{
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += (i != 0 ? ", " : "") + x[i].to_string();
    }
    return s + ")";
}

std::string error_bound_text(const Integer& degree, const Integer& sample_size, std::size_t n)
{
    std::string text = "(" + degree.get_str() + "/" + sample_size.get_str() + ")^" + std::to_string(n);
    if (sgn(degree) == 0) {
        return text + " = 0";
    }
    Integer num;
    Integer den;
    mpz_pow_ui(num.get_mpz_t(), degree.get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), sample_size.get_mpz_t(), n);
    // largest x with 10^x * num <= den
    long x = 0;
    Integer scaled = num;
    while (scaled * 10 <= den) {
        scaled *= 10;
        ++x;
    }
    return text + " < 10^-" + std::to_string(x);
}

VerificationReport check_exact(const IdentityClaim& claim, const CheckOptions& opt)
{
    const Stopwatch sw;
    VerificationReport r = base_report(claim, Mode::exact, opt);
    if (!claim.lhs_poly || !claim.rhs_poly) {
        throw std::invalid_argument("claim '" + claim.name + "' has no symbolic sides; use randomized mode");
    }
    if (claim.degree_bound > opt.symbolic_degree_cap) {
        throw std::invalid_argument("claim '" + claim.name + "' exceeds the symbolic degree cap " +
                                    std::to_string(opt.symbolic_degree_cap) + "; use randomized mode");
    }
    const Polynomial<Rational> diff = *claim.lhs_poly - *claim.rhs_poly;
    r.details["difference_terms"] = std::to_string(diff.size());
    if (diff.is_zero()) {
        r.verdict = Verdict::proved_symbolic;
    } else {
        r.verdict = Verdict::failed;
        Rng rng(opt.seed);
        for (std::size_t attempt = 0; attempt < opt.max_resamples; ++attempt) {
            const auto x = rng.integer_point(diff.nvars(), -opt.range, opt.range);
            const Rational l = evaluate<Rational>(*claim.lhs_poly, x);
            const Rational rr = evaluate<Rational>(*claim.rhs_poly, x);
            if (l != rr) {
                r.witnesses.push_back({{}, l.to_string(), rr.to_string(), "symbolic difference is nonzero"});
                for (const auto& c : x) {
                    r.witnesses.back().point.push_back(c.to_string());
                }
                break;
            }
        }
        if (r.witnesses.empty()) {
            r.witnesses.push_back({{}, "", "", "nonzero difference: " + to_string(diff).substr(0, 200)});
        }
    }
    r.wall_seconds = sw.seconds();
    return r;
}

VerificationReport check_randomized(const IdentityClaim& claim, const CheckOptions& opt)
{
    const Stopwatch sw;
    VerificationReport r = base_report(claim, Mode::randomized, opt);
    Rng rng(opt.seed);
    std::size_t done = 0;
    while (done < opt.points) {
        const auto x = rng.integer_point(claim.nvars, -opt.range, opt.range);
        Rational l;
        Rational rr;
        try {
            l = claim.lhs(x);
            rr = claim.rhs(x);
        } catch (const Resample&) {
            if (++r.resamples > opt.max_resamples) {
                throw std::runtime_error("claim '" + claim.name + "': too many resamples");
            }
            continue;
        }
        ++done;
        if (l != rr) {
            Witness w{{}, l.to_string(), rr.to_string(), "values differ"};
            for (const auto& c : x) {
                w.point.push_back(c.to_string());
            }
            r.witnesses.push_back(std::move(w));
        }
    }
    r.points = done;
    if (r.witnesses.empty()) {
        r.verdict = Verdict::passed_randomized;
        r.error_bound = error_bound_text(claim.degree_bound, Integer(2 * opt.range + 1), done);
    } else {
        r.verdict = Verdict::failed;
        r.details["mismatching_points"] = std::to_string(r.witnesses.size());
    }
    r.wall_seconds = sw.seconds();
    return r;
}

VerificationReport check_modular(const IdentityClaim& claim, const CheckOptions& opt)
{
    const Stopwatch sw;
    VerificationReport r = base_report(claim, Mode::modular, opt);
    Rng rng(opt.seed);
    std::vector<std::string> bad;
    std::size_t mismatches = 0;
    for (std::size_t pi = 0; pi < kPrimes.size() && r.primes.size() < opt.primes; ++pi) {
        const std::uint64_t p = kPrimes[pi];
        Rng prng = rng.split();
        std::size_t done = 0;
        std::size_t prime_mismatches = 0;
        std::vector<Witness> prime_witnesses;
        try {
            while (done < opt.points) {
                std::vector<std::uint64_t> x(claim.nvars);
                for (auto& c : x) {
                    c = static_cast<std::uint64_t>(prng.uniform(0, static_cast<long>(p - 1)));
                }
                std::uint64_t l = 0;
                std::uint64_t rr = 0;
                try {
                    l = claim.lhs_mod(pi, x);
                    rr = claim.rhs_mod(pi, x);
                } catch (const Resample&) {
                    if (++r.resamples > opt.max_resamples) {
                        throw std::runtime_error("claim '" + claim.name + "': too many resamples");
                    }
                    continue;
                }
                ++done;
                if (l != rr) {
                    ++prime_mismatches;
                    Witness w{{}, std::to_string(l), std::to_string(rr), "residues differ mod " + std::to_string(p)};
                    for (const auto c : x) {
                        w.point.push_back(std::to_string(c));
                    }
                    prime_witnesses.push_back(std::move(w));
                }
            }
        } catch (const BadPrime& e) {
            bad.emplace_back(e.what());
            continue;
        }
        r.primes.push_back(p);
        r.points += done;
        mismatches += prime_mismatches;
        for (auto& w : prime_witnesses) {
            r.witnesses.push_back(std::move(w));
        }
    }
    if (r.primes.empty()) {
        std::string msg = "claim '" + claim.name + "': every prime divides a denominator:";
        for (const auto& b : bad) {
            msg += " " + b + ";";
        }
        throw ArithmeticError(msg);
    }
    if (!bad.empty()) {
        r.details["skipped_primes"] = std::to_string(bad.size());
    }
    if (mismatches == 0) {
        r.verdict = Verdict::passed_randomized;
        std::string bound;
        for (const auto p : r.primes) {
            bound += (bound.empty() ? "" : "; ") +
                     error_bound_text(claim.degree_bound, to_integer(p), r.points / r.primes.size());
        }
        r.error_bound = bound;
    } else {
        r.verdict = Verdict::failed;
        r.details["mismatching_points"] = std::to_string(mismatches);
    }
    r.wall_seconds = sw.seconds();
    return r;
}

VerificationReport check(const IdentityClaim& claim, Mode mode, const CheckOptions& opt)
{
    switch (mode) {
    case Mode::exact:
        if (claim.lhs_poly && claim.rhs_poly && claim.degree_bound <= opt.symbolic_degree_cap) {
            return check_exact(claim, opt);
        }
        return check_randomized(claim, opt);
    case Mode::randomized: return check_randomized(claim, opt);
    case Mode::modular: return check_modular(claim, opt);
    }
    throw std::logic_error("unreachable");
}

VerificationReport fact_report(const std::string& claim, const std::string& provenance, bool holds,
                               const std::string& observed, const std::string& expected)
{
    VerificationReport r;
    r.claim = claim;
    r.provenance = provenance;
    r.mode = Mode::exact;
    r.verdict = holds ? Verdict::proved_exact : Verdict::failed;
    r.details["observed"] = observed;
    r.details["expected"] = expected;
    if (!holds) {
        r.witnesses.push_back({{}, observed, expected, "computed value differs from the expected value"});
    }
    return r;
}

}  // namespace st34
