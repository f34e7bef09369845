#include "st34/invariants.hpp"

#include "st34/crt.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace st34 {

const VarList& x_vars()
{
    static const VarList v = numbered_vars("x", 6);
    return v;
}

const VarList& basis_vars()
{
    static const VarList v = make_vars({"p3", "p6", "p9", "p12", "p15", "s6"});
    return v;
}

const VarList& q_vars()
{
    static const VarList v = make_vars({"q1", "q2", "q3", "q4", "q5", "s6"});
    return v;
}

namespace {

Polynomial<Rational> power_sum(unsigned e)
{
    std::vector<Polynomial<Rational>::Term> terms;
    for (std::size_t i = 0; i < 6; ++i) {
        terms.emplace_back(Monomial::variable(i, e), Rational(1));
    }
    return Polynomial<Rational>::from_terms(x_vars(), std::move(terms));
}

Polynomial<Rational> full_product()
{
    return Polynomial<Rational>::monomial(x_vars(), Monomial::from_exponents({1, 1, 1, 1, 1, 1}), Rational(1));
}

}  // namespace

std::vector<Polynomial<Rational>> g336_basics()
{
    std::vector<Polynomial<Rational>> b;
    for (unsigned j = 1; j <= 5; ++j) {
        b.push_back(power_sum(3 * j));
    }
    b.push_back(full_product());
    return b;
}

std::vector<Polynomial<Rational>> q_basics()
{
    std::vector<Polynomial<Rational>> b;
    for (unsigned j = 1; j <= 5; ++j) {
        b.push_back(power_sum(j));
    }
    b.push_back(full_product());
    return b;
}

Polynomial<Rational> mu_symbolic(unsigned k)
{
    if (k % 6 != 0) {
        throw std::invalid_argument("mu_" + std::to_string(k) +
                                    " is not expanded symbolically: it vanishes unless 6 divides k (evaluation gives 0)");
    }
    if (k > 18) {
        throw std::invalid_argument("mu_" + std::to_string(k) +
                                    " is too large to expand; use evaluation (mu_eval) or the basis expression");
    }
    // coefficient of x^e is k!/prod(e_i!) * sum_v prod v_i^e_i
    const auto& vecs = minimal_vectors();
    std::vector<std::array<std::vector<EisInt>, 6>> powers(vecs.size());
    for (std::size_t n = 0; n < vecs.size(); ++n) {
        for (std::size_t i = 0; i < 6; ++i) {
            auto& p = powers[n][i];
            p.assign(k + 1, EisInt(1));
            for (unsigned e = 1; e <= k; ++e) {
                p[e] = p[e - 1] * vecs[n].coords[i];
            }
        }
    }
    std::vector<Integer> fact(k + 1, Integer(1));
    for (unsigned i = 1; i <= k; ++i) {
        fact[i] = fact[i - 1] * i;
    }
    std::vector<Polynomial<Rational>::Term> terms;
    std::array<unsigned, 6> e{};
    auto visit = [&](auto&& self, std::size_t pos, unsigned left) -> void {
        if (pos == 5) {
            e[5] = left;
            EisInt sum(0);
            for (std::size_t n = 0; n < vecs.size(); ++n) {
                EisInt prod(1);
                for (std::size_t i = 0; i < 6 && (prod.re != 0 || prod.w != 0); ++i) {
                    if (e[i] != 0) {
                        prod = prod * powers[n][i][e[i]];
                    }
                }
                sum += prod;
            }
            if (sum.w != 0) {
                throw InternalConsistencyError("mu_" + std::to_string(k) + " has a nonzero w-part");
            }
            if (sum.re != 0) {
                Integer c = fact[k];
                for (const auto ei : e) {
                    c /= fact[ei];
                }
                terms.emplace_back(Monomial::from_exponents(std::span<const unsigned>(e)), Rational(Integer(c * sum.re)));
            }
            return;
        }
        for (unsigned v = 0; v <= left; ++v) {
            e[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    visit(visit, 0, k);
    return Polynomial<Rational>::from_terms(x_vars(), std::move(terms));
}

std::vector<Monomial> basis_monomials(unsigned d)
{
    std::vector<Monomial> out;
    std::array<unsigned, 6> e{};
    auto visit = [&](auto&& self, std::size_t pos, unsigned left) -> void {
        if (pos == 6) {
            if (left == 0) {
                out.push_back(Monomial::from_exponents(std::span<const unsigned>(e)));
            }
            return;
        }
        for (unsigned v = 0; v * kBasisWeights[pos] <= left; ++v) {
            e[pos] = v;
            self(self, pos + 1, left - v * kBasisWeights[pos]);
        }
        e[pos] = 0;
    };
    visit(visit, 0, d);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return b < a; });
    return out;
}

Polynomial<Rational> to_polynomial(const BasisSolution<Rational>& sol)
{
    std::vector<Polynomial<Rational>::Term> terms;
    for (std::size_t i = 0; i < sol.monomials.size(); ++i) {
        const Rational& c = sol.coefficients(static_cast<Eigen::Index>(i));
        if (!c.is_zero()) {
            terms.emplace_back(sol.monomials[i], c);
        }
    }
    return Polynomial<Rational>::from_terms(basis_vars(), std::move(terms));
}

Rational unit_normalization(const Polynomial<Rational>& basis_expr)
{
    const std::vector<Rational> pt = {1, 1, 1, 1, 1, 0};
    return evaluate<Rational>(basis_expr, pt);
}

std::size_t m_index(unsigned j)
{
    const auto it = std::find(kMIndices.begin(), kMIndices.end(), j);
    if (it == kMIndices.end()) {
        throw std::invalid_argument("no tabulated m_" + std::to_string(j) + " (expected one of 1, 2, 3, 4, 5, 7)");
    }
    return static_cast<std::size_t>(it - kMIndices.begin());
}

const Polynomial<Rational>& InvariantTables::m_table(unsigned j) const
{
    return m[m_index(j)];
}

InvariantTables load_invariant_tables(const std::filesystem::path& dir)
{
    InvariantTables t;
    for (std::size_t i = 0; i < kMIndices.size(); ++i) {
        const std::string name = "m" + std::to_string(kMIndices[i]);
        const PolyTable tab = load_named_table(name, dir);
        if (!tab.contains(name)) {
            throw std::runtime_error("table " + tab.path.string() + " (" + table_contents(name) + ") has no entry " + name);
        }
        t.m[i] = tab.get(name).with_vars(basis_vars());
    }
    t.f = load_named_table("f", dir);
    t.q_expr = load_named_table("q_expr", dir);
    t.pR2 = load_named_table("pR2", dir);
    return t;
}

namespace {

/// Normalized coefficients of a modular solve, keyed by monomial bits.
template <class F>
std::optional<std::map<std::uint64_t, F>> normalized_mod_solution(unsigned j, std::uint64_t seed, F* constant)
{
    Rng rng(seed + j);
    const PointOracle<F> target = [j](std::span<const F> x) { return mu_eval<F>(6 * j, x); };
    const auto sol = express_in_g336_basis<F>(target, 6 * j, rng);
    F c(0);
    for (std::size_t i = 0; i < sol.monomials.size(); ++i) {
        if (sol.monomials[i].exponent(5) == 0) {
            c += sol.coefficients(static_cast<Eigen::Index>(i));
        }
    }
    if (is_zero(c)) {
        return std::nullopt;
    }
    *constant = c;
    std::map<std::uint64_t, F> out;
    const F inv = F(1) / c;
    for (std::size_t i = 0; i < sol.monomials.size(); ++i) {
        out[sol.monomials[i].bits()] = sol.coefficients(static_cast<Eigen::Index>(i)) * inv;
    }
    return out;
}

std::string monomial_text(const Monomial& m)
{
    return to_string(Polynomial<Rational>::monomial(basis_vars(), m, Rational(1)));
}

/// Residues of the normalized modular re-derivation for one prime, or nullopt for a bad prime.
struct ModularRun {
    std::uint64_t prime = 0;
    std::uint64_t constant = 0;
    std::map<std::uint64_t, std::uint64_t> coeffs;
    std::map<std::uint64_t, std::optional<std::uint64_t>> table;  // nullopt: prime divides a denominator
};

std::optional<ModularRun> modular_run(std::size_t pi, unsigned j, const Polynomial<Rational>& table,
                                      const std::set<std::uint64_t>& monos, std::uint64_t seed)
{
    return with_prime(pi, [&]<class F>() -> std::optional<ModularRun> {
        ModularRun run;
        run.prime = F::modulus;
        F c(0);
        std::optional<std::map<std::uint64_t, F>> sol;
        try {
            sol = normalized_mod_solution<F>(j, seed, &c);
        } catch (const SamplingDegenerate&) {
            return std::nullopt;
        }
        if (!sol) {
            return std::nullopt;
        }
        run.constant = c.residue();
        for (const auto b : monos) {
            const auto it = sol->find(b);
            run.coeffs[b] = it == sol->end() ? 0 : it->second.residue();
            try {
                run.table[b] = mod_project<F::modulus>(table.coefficient(Monomial::from_bits(b))).residue();
            } catch (const BadPrime&) {
                run.table[b] = std::nullopt;
            }
        }
        return run;
    });
}

}  // namespace

MTableComparison recompute_m_table(unsigned j, const Polynomial<Rational>& table, Mode mode, std::uint64_t seed,
                                   std::size_t nprimes)
{
    m_index(j);
    MTableComparison c;
    c.j = j;
    c.degree = 6 * j;
    c.mode = mode;
    c.table_normalization = unit_normalization(table);
    const std::vector<Rational> e1 = {1, 0, 0, 0, 0, 0};
    c.mu_at_e1 = mu_eval<Rational>(6 * j, e1);
    const auto monos = basis_monomials(6 * j);
    c.monomials = monos.size();

    std::set<std::uint64_t> all_bits;
    for (const auto& m : monos) {
        all_bits.insert(m.bits());
    }
    for (const auto& [m, coef] : table.terms()) {
        all_bits.insert(m.bits());
    }

    if (mode == Mode::modular) {
        std::vector<ModularRun> runs;
        for (std::size_t pi = 0; pi < kPrimes.size() && runs.size() < nprimes; ++pi) {
            if (auto r = modular_run(pi, j, table, all_bits, seed)) {
                runs.push_back(std::move(*r));
            }
        }
        std::vector<std::uint64_t> residues;
        for (const auto& r : runs) {
            c.primes.push_back(r.prime);
            residues.push_back(r.constant);
        }
        Integer modulus(1);
        for (const auto p : c.primes) {
            modulus *= Integer(std::to_string(p));
        }
        if (auto k = rational_reconstruct(crt_combine(residues, c.primes), modulus)) {
            c.constant = *k;
        }
        for (const auto b : all_bits) {
            MonomialDiff d;
            bool differs = false;
            for (const auto& r : runs) {
                const auto t = r.table.at(b);
                const std::uint64_t v = r.coeffs.at(b);
                if (!t || *t != v) {
                    differs = true;
                }
                d.modular.push_back(std::to_string(r.prime) + ": derived " + std::to_string(v) + ", table " +
                                    (t ? std::to_string(*t) : std::string("undefined")));
            }
            if (differs) {
                d.monomial = monomial_text(Monomial::from_bits(b));
                d.table = table.coefficient(Monomial::from_bits(b)).to_string();
                c.diffs.push_back(std::move(d));
            }
        }
        return c;
    }

    Rng rng(seed + j);
    const PointOracle<Rational> target = [j](std::span<const Rational> x) { return mu_eval<Rational>(6 * j, x); };
    const auto sol = express_in_g336_basis<Rational>(target, 6 * j, rng);
    c.attempts = sol.attempts;
    const Polynomial<Rational> mu_expr = to_polynomial(sol);
    c.constant = unit_normalization(mu_expr);
    if (c.constant.is_zero()) {
        throw InternalConsistencyError("mu_" + std::to_string(6 * j) + " vanishes at p = 1, s6 = 0");
    }
    c.derived = mu_expr * (Rational(1) / c.constant);
    std::vector<std::uint64_t> mismatched;
    for (const auto b : all_bits) {
        const Monomial m = Monomial::from_bits(b);
        if (c.derived.coefficient(m) != table.coefficient(m)) {
            mismatched.push_back(b);
        }
    }
    if (mismatched.empty()) {
        return c;
    }
    // confirm each mismatch by independent modular solves
    const std::set<std::uint64_t> mset(mismatched.begin(), mismatched.end());
    std::vector<ModularRun> runs;
    for (std::size_t pi = 0; pi < kPrimes.size() && runs.size() < nprimes; ++pi) {
        if (auto r = modular_run(pi, j, table, mset, seed)) {
            runs.push_back(std::move(*r));
        }
    }
    for (const auto& r : runs) {
        c.primes.push_back(r.prime);
    }
    for (const auto b : mismatched) {
        const Monomial m = Monomial::from_bits(b);
        MonomialDiff d;
        d.monomial = monomial_text(m);
        d.table = table.coefficient(m).to_string();
        d.derived = c.derived.coefficient(m).to_string();
        for (const auto& r : runs) {
            const std::uint64_t v = r.coeffs.at(b);
            std::string verdict = "neither";
            const bool agrees_derived = with_prime(
                static_cast<std::size_t>(std::find(kPrimes.begin(), kPrimes.end(), r.prime) - kPrimes.begin()),
                [&]<class F>() {
                    try {
                        return mod_project<F::modulus>(c.derived.coefficient(m)).residue() == v;
                    } catch (const BadPrime&) {
                        return false;
                    }
                });
            if (agrees_derived) {
                verdict = "derived";
            } else if (r.table.at(b) && *r.table.at(b) == v) {
                verdict = "table";
            }
            d.modular.push_back(std::to_string(r.prime) + ": supports " + verdict);
        }
        c.diffs.push_back(std::move(d));
    }
    return c;
}

VerificationReport m_table_report(const MTableComparison& c, std::uint64_t seed)
{
    VerificationReport r;
    r.claim = "m" + std::to_string(c.j) + " table equals the normalized re-derivation of mu" + std::to_string(c.degree);
    r.provenance = "m" + std::to_string(c.j) + " table";
    r.mode = c.mode;
    r.seed = seed;
    r.primes = c.primes;
    r.points = c.mode == Mode::exact ? c.monomials + kHeldOutPoints : (c.monomials + kHeldOutPoints) * c.primes.size();
    r.verdict = c.matches() ? Verdict::proved_exact : Verdict::failed;
    r.details["basis_monomials"] = std::to_string(c.monomials);
    r.details["constant"] = c.constant.to_string();
    r.details["mu_at_e1"] = c.mu_at_e1.to_string();
    r.details["table_value_at_p1_s0"] = c.table_normalization.to_string();
    r.details["mismatches"] = std::to_string(c.diffs.size());
    for (const auto& d : c.diffs) {
        std::string note;
        for (const auto& m : d.modular) {
            note += (note.empty() ? "" : "; ") + m;
        }
        r.witnesses.push_back({{d.monomial}, d.table, d.derived, note});
    }
    return r;
}

namespace {

std::vector<Rational> random_point(Rng& rng, long range)
{
    return rng.integer_point(6, -range, range);
}

std::vector<QOmega> image(const GroupElement& g, std::span<const Rational> x)
{
    Vector6<QOmega> v;
    for (Eigen::Index i = 0; i < 6; ++i) {
        v(i) = QOmega(x[static_cast<std::size_t>(i)]);
    }
    const Vector6<QOmega> y = apply(g, v);
    return std::vector<QOmega>(y.data(), y.data() + 6);
}

std::vector<std::string> point_strings(std::span<const Rational> x)
{
    std::vector<std::string> out;
    for (const auto& c : x) {
        out.push_back(c.to_string());
    }
    return out;
}

}  // namespace

VerificationReport mu_invariance_report(unsigned k, const CheckOptions& opt)
{
    VerificationReport r;
    r.claim = "mu" + std::to_string(k) + " is fixed by P1, P2, P3, Q1, R1, R2";
    r.provenance = "invariance of mu_k under the generators";
    r.mode = Mode::randomized;
    r.seed = opt.seed;
    Rng rng(opt.seed + k);
    const auto gens = generators();
    for (std::size_t n = 0; n < opt.points; ++n) {
        const auto x = random_point(rng, 99);
        const Rational base = mu_eval<Rational>(k, x);
        for (const auto& g : gens) {
            const auto y = image(g, x);
            const QOmega v = mu_value<Rational>(k, std::span<const QOmega>(y));
            if (v != QOmega(base)) {
                r.witnesses.push_back({point_strings(x), to_string(v), base.to_string(), "generator " + g.label});
            }
        }
    }
    r.points = opt.points;
    if (r.witnesses.empty()) {
        r.verdict = Verdict::passed_randomized;
        r.error_bound = error_bound_text(Integer(k), Integer(199), opt.points);
    } else {
        r.verdict = Verdict::failed;
    }
    return r;
}

VerificationReport mu_vanishing_report(unsigned k, const CheckOptions& opt)
{
    VerificationReport r;
    r.claim = "mu" + std::to_string(k) + " vanishes identically";
    r.provenance = "unit closure of the minimal vectors";
    r.mode = Mode::randomized;
    r.seed = opt.seed;
    Rng rng(opt.seed + k);
    for (std::size_t n = 0; n < opt.points; ++n) {
        const auto x = random_point(rng, 99);
        const Rational v = mu_eval<Rational>(k, x);
        if (!v.is_zero()) {
            r.witnesses.push_back({point_strings(x), v.to_string(), "0", "nonzero value"});
        }
    }
    r.points = opt.points;
    if (r.witnesses.empty()) {
        r.verdict = Verdict::passed_randomized;
        r.error_bound = error_bound_text(Integer(k), Integer(199), opt.points);
    } else {
        r.verdict = Verdict::failed;
    }
    return r;
}

VerificationReport mu_e1_report(unsigned k, const Rational& expected)
{
    const std::vector<Rational> e1 = {1, 0, 0, 0, 0, 0};
    const Rational v = mu_eval<Rational>(k, e1);
    return fact_report("mu" + std::to_string(k) + "(e1) = " + expected.to_string(), "value of mu_k at e1",
                       v == expected, v.to_string(), expected.to_string());
}

VerificationReport m_invariance_report(unsigned j, const Polynomial<Rational>& mj, Mode mode, const CheckOptions& opt)
{
    const GroupElement r2 = generator("R2");
    const Matrix<Rational> m = r2.rational_matrix();
    IdentityClaim claim;
    claim.name = "m" + std::to_string(j) + " composed with R2 equals m" + std::to_string(j);
    claim.provenance = "R2-invariance of m_j";
    claim.nvars = 6;
    claim.degree_bound = 6 * j;
    const auto mp = std::make_shared<const Polynomial<Rational>>(mj);
    const auto mm = std::make_shared<const Matrix<Rational>>(m);
    claim.set_oracles(
        [mp, mm]<class F>(std::span<const F> x) {
            std::vector<F> y(6, F(0));
            for (std::size_t i = 0; i < 6; ++i) {
                for (std::size_t k = 0; k < 6; ++k) {
                    y[i] += field_cast<F>((*mm)(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k))) * x[k];
                }
            }
            return evaluate<F>(*mp, g336_values<F>(y));
        },
        [mp]<class F>(std::span<const F> x) { return evaluate<F>(*mp, g336_values<F>(x)); });
    if (mode == Mode::exact && j <= 3) {
        const auto basics = g336_basics();
        std::vector<Polynomial<Rational>> moved;
        for (const auto& b : basics) {
            moved.push_back(linear_substitute(b, m));
        }
        claim.lhs_poly = compose(mj, moved);
        claim.rhs_poly = compose(mj, basics);
        return check_exact(claim, opt);
    }
    CheckOptions o = opt;
    o.range = 99;
    return mode == Mode::modular ? check_modular(claim, o) : check_randomized(claim, o);
}

VerificationReport m_generators_report(unsigned j, const Polynomial<Rational>& mj, const CheckOptions& opt)
{
    VerificationReport r;
    r.claim = "m" + std::to_string(j) + " is fixed by P1, P2, P3, Q1, R1, R2";
    r.provenance = "invariance of m_j";
    r.mode = Mode::randomized;
    r.seed = opt.seed;
    Rng rng(opt.seed + 1000 + j);
    const auto gens = generators();
    for (std::size_t n = 0; n < opt.points; ++n) {
        const auto x = random_point(rng, 99);
        const Rational base = evaluate<Rational>(mj, g336_values<Rational>(x));
        for (const auto& g : gens) {
            const auto y = image(g, x);
            const QOmega v = evaluate<QOmega>(mj, g336_values<QOmega>(y));
            if (v != QOmega(base)) {
                r.witnesses.push_back({point_strings(x), to_string(v), base.to_string(), "generator " + g.label});
            }
        }
    }
    r.points = opt.points;
    if (r.witnesses.empty()) {
        r.verdict = Verdict::passed_randomized;
        r.error_bound = error_bound_text(Integer(6 * j), Integer(199), opt.points);
    } else {
        r.verdict = Verdict::failed;
    }
    return r;
}

std::vector<VerificationReport> verify_q_expressions(const InvariantTables& t, Mode mode, const CheckOptions& opt)
{
    std::vector<VerificationReport> out;
    const auto basics = g336_basics();
    const auto qs = q_basics();
    const Matrix<Rational> r2 = generator("R2").rational_matrix();
    const std::array<std::string, 6> names = {"p3", "p6", "p9", "p12", "p15", "s6"};
    constexpr unsigned kSymbolicCap = 9;

    auto run = [&](IdentityClaim& claim, const Polynomial<Rational>& lhs, const Polynomial<Rational>& expr) {
        const auto ep = std::make_shared<const Polynomial<Rational>>(expr.with_vars(q_vars()));
        claim.nvars = 6;
        claim.degree_bound = static_cast<unsigned>(std::max(0, lhs.degree()));
        if (mode == Mode::exact && claim.degree_bound <= kSymbolicCap) {
            claim.set_polynomials(lhs, compose(*ep, qs));
            out.push_back(check_exact(claim, opt));
            return;
        }
        const auto lp = std::make_shared<const Polynomial<Rational>>(lhs);
        claim.set_oracles([lp]<class F>(std::span<const F> x) { return evaluate<F>(*lp, x); },
                          [ep]<class F>(std::span<const F> x) { return evaluate<F>(*ep, q_values<F>(x)); });
        out.push_back(mode == Mode::modular ? check_modular(claim, opt) : check_randomized(claim, opt));
    };

    for (std::size_t i = 0; i < 5; ++i) {
        IdentityClaim c;
        c.name = names[i] + " in terms of q1..q5, s6";
        c.provenance = "p-in-q table";
        run(c, basics[i], t.q_expr.get(names[i]));
    }
    for (std::size_t i = 0; i < 6; ++i) {
        IdentityClaim c;
        c.name = names[i] + " composed with R2 in terms of q1..q5, s6";
        c.provenance = "R2 action table";
        if (mode == Mode::exact && basics[i].degree() <= static_cast<int>(kSymbolicCap)) {
            run(c, linear_substitute(basics[i], r2), t.pR2.get(names[i] + "R2"));
            continue;
        }
        const auto ep = std::make_shared<const Polynomial<Rational>>(t.pR2.get(names[i] + "R2").with_vars(q_vars()));
        const auto bp = std::make_shared<const Polynomial<Rational>>(basics[i]);
        const auto rp = std::make_shared<const Matrix<Rational>>(r2);
        c.nvars = 6;
        c.degree_bound = static_cast<unsigned>(basics[i].degree());
        c.set_oracles(
            [bp, rp]<class F>(std::span<const F> x) {
                std::vector<F> y(6, F(0));
                for (std::size_t a = 0; a < 6; ++a) {
                    for (std::size_t b = 0; b < 6; ++b) {
                        y[a] += field_cast<F>((*rp)(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b))) * x[b];
                    }
                }
                return evaluate<F>(*bp, y);
            },
            [ep]<class F>(std::span<const F> x) { return evaluate<F>(*ep, q_values<F>(x)); });
        out.push_back(mode == Mode::modular ? check_modular(c, opt) : check_randomized(c, opt));
    }
    IdentityClaim trivial;
    trivial.name = "q1 composed with the identity equals q1";
    trivial.provenance = "control";
    trivial.set_polynomials(linear_substitute(qs[0], Matrix<Rational>(Matrix<Rational>::Identity(6, 6))), qs[0]);
    out.push_back(mode == Mode::exact ? check_exact(trivial, opt)
                                      : (mode == Mode::modular ? check_modular(trivial, opt)
                                                               : check_randomized(trivial, opt)));
    return out;
}

unsigned terao_enta_degree(unsigned j)
{
    static const std::array<unsigned, 6> d = {6, 12, 18, 24, 30, 42};
    if (j < 1 || j > 6) {
        throw std::invalid_argument("f_j needs 1 <= j <= 6");
    }
    return d[j - 1];
}

std::vector<Polynomial<Rational>> second_partials(const Polynomial<Rational>& f)
{
    std::vector<Polynomial<Rational>> out;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        const auto fi = derivative(f, i);
        for (std::size_t j = 0; j < f.nvars(); ++j) {
            out.push_back(derivative(fi, j));
        }
    }
    return out;
}

Rational hessian_determinant(const std::vector<Polynomial<Rational>>& partials, std::span<const Rational> x)
{
    const auto n = static_cast<Eigen::Index>(x.size());
    if (partials.size() != x.size() * x.size()) {
        throw std::invalid_argument("hessian needs n*n second partials");
    }
    Matrix<Rational> h(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            h(i, j) = evaluate<Rational>(partials[static_cast<std::size_t>(i * n + j)], x);
        }
    }
    return determinant(h);
}

Polynomial<Rational> f1_polynomial(const InvariantTables& t)
{
    const auto& f1 = t.f.get("f1");
    if (f1.size() != 1 || f1.terms().front().first.degree() != 1 ||
        (*f1.vars())[0] != "mu6" || f1.terms().front().first.exponent(0) != 1) {
        throw std::runtime_error("f1 is expected to be a multiple of mu6");
    }
    return mu_symbolic(6) * f1.terms().front().second;
}

VerificationReport hessian_ratio_check(const InvariantTables& t, const CheckOptions& opt, std::size_t pairs)
{
    VerificationReport r;
    r.claim = "f4 is a constant multiple of the Hessian of f1";
    r.provenance = "Hessian relation";
    r.mode = Mode::randomized;
    r.seed = opt.seed;
    const auto partials = second_partials(f1_polynomial(t));
    Rng rng(opt.seed);
    std::vector<std::pair<std::vector<Rational>, std::pair<Rational, Rational>>> samples;  // x, (H, f4)
    std::size_t vanishing = 0;
    while (samples.size() < pairs + 1) {
        const auto x = rng.integer_point(6, -99, 99);
        const Rational f4 = terao_enta_f<Rational>(t, 4, x);
        if (f4.is_zero()) {
            if (++vanishing > opt.max_resamples) {
                r.verdict = Verdict::inconclusive;
                r.details["reason"] = "f4 vanished at every sampled point";
                return r;
            }
            continue;
        }
        samples.push_back({x, {hessian_determinant(partials, x), f4}});
    }
    r.resamples = vanishing;
    const Rational ratio = samples[0].second.first / samples[0].second.second;
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
        const auto& [ha, fa] = samples[i].second;
        const auto& [hb, fb] = samples[i + 1].second;
        if (ha * fb != hb * fa) {
            r.witnesses.push_back({point_strings(samples[i + 1].first), (hb / fb).to_string(), ratio.to_string(),
                                   "ratio H/f4 differs between consecutive points"});
        }
    }
    r.points = samples.size();
    r.details["pairs"] = std::to_string(samples.size() - 1);
    r.details["ratio"] = ratio.to_string();
    r.details["hessian_at_first_point"] = samples[0].second.first.to_string();
    if (r.witnesses.empty() && !ratio.is_zero()) {
        r.verdict = Verdict::passed_randomized;
        r.error_bound = error_bound_text(Integer(48), Integer(199), samples.size() - 1);
    } else {
        r.verdict = Verdict::failed;
    }
    return r;
}

}  // namespace st34
