#include "st34/saito.hpp"

#include "st34/linalg.hpp"

#include <map>

namespace st34 {

WeightSystem WeightSystem::st34()
{
    WeightSystem ws;
    for (std::size_t j = 0; j < 5; ++j) {
        ws.w[j] = rational_reduce(Integer(static_cast<long>(j + 1)), Integer(7));
    }
    ws.w[5] = Rational(1);
    return ws;
}

Rational WeightSystem::weight(const Monomial& m) const
{
    Rational s(0);
    for (std::size_t i = 0; i < 6; ++i) {
        if (m.exponent(i) != 0) {
            s += w[i] * Rational(static_cast<long>(m.exponent(i)));
        }
    }
    return s;
}

std::optional<Rational> WeightSystem::weighted_degree(const Polynomial<Rational>& p) const
{
    std::optional<Rational> d;
    for (const auto& [m, c] : p.terms()) {
        const Rational wm = weight(m);
        if (d && *d != wm) {
            return std::nullopt;
        }
        d = wm;
    }
    return d;
}

const VarList& u_vars()
{
    static const VarList v = numbered_vars("u", 6);
    return v;
}

const VarList& ut_vars()
{
    static const VarList v = numbered_vars("t", 6);
    return v;
}

const VarList& f_vars()
{
    static const VarList v = numbered_vars("f", 6);
    return v;
}

PotentialField load_potential_field(const std::filesystem::path& dir)
{
    PotentialField field;
    for (std::size_t j = 0; j < 6; ++j) {
        const std::string name = "h" + std::to_string(j + 1);
        const PolyTable t = load_named_table(name, dir);
        if (!t.contains(name)) {
            throw std::runtime_error("table " + t.path.string() + " (" + table_contents(name) + ") has no entry " + name);
        }
        field.h[j] = t.get(name).with_vars(u_vars());
    }
    return field;
}

Polynomial<Rational> euler(const WeightSystem& ws, const Polynomial<Rational>& p)
{
    std::vector<Polynomial<Rational>::Term> terms;
    for (const auto& [m, c] : p.terms()) {
        const Rational wm = ws.weight(m);
        if (!wm.is_zero()) {
            terms.emplace_back(m, c * wm);
        }
    }
    return Polynomial<Rational>::from_terms(p.vars(), std::move(terms));
}

SaitoData build_saito_data(const PotentialField& field, const WeightSystem& ws)
{
    SaitoData d;
    d.weights = ws;
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) {
            d.C[i][j] = derivative(field.h[j], i);
            d.T[i][j] = euler(ws, d.C[i][j]);
            const Polynomial<Rational> shortcut = d.C[i][j] * (ws.w[j] + Rational(1) - ws.w[i]);
            if (shortcut != d.T[i][j]) {
                throw SaitoError("T_" + std::to_string(i + 1) + std::to_string(j + 1) +
                                 ": Euler operator and weight shortcut disagree (h" + std::to_string(j + 1) +
                                 " is not weighted-homogeneous)");
            }
        }
    }
    return d;
}

std::vector<VerificationReport> homogeneity_reports(const PotentialField& field, const WeightSystem& ws)
{
    std::vector<VerificationReport> out;
    for (std::size_t j = 0; j < 6; ++j) {
        const Rational target = ws.w[j] + Rational(1);
        VerificationReport r;
        r.claim = "h" + std::to_string(j + 1) + " is weighted-homogeneous of weight " + target.to_string();
        r.provenance = "weights of the potential vector field";
        r.mode = Mode::exact;
        for (const auto& [m, c] : field.h[j].terms()) {
            const Rational wm = ws.weight(m);
            if (wm != target) {
                r.witnesses.push_back({{to_string(Polynomial<Rational>::monomial(u_vars(), m, c))}, wm.to_string(),
                                       target.to_string(), "term of the wrong weight"});
            }
        }
        r.details["terms"] = std::to_string(field.h[j].size());
        r.verdict = r.witnesses.empty() ? Verdict::proved_symbolic : Verdict::failed;
        out.push_back(std::move(r));

        IdentityClaim e;
        e.name = "E(h" + std::to_string(j + 1) + ") = " + target.to_string() + "*h" + std::to_string(j + 1);
        e.provenance = "Euler identity";
        e.set_polynomials(euler(ws, field.h[j]), field.h[j] * target);
        out.push_back(check_exact(e));
    }
    return out;
}

PolyMatrix derivative(const PolyMatrix& m, std::size_t var)
{
    PolyMatrix d;
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) {
            d[i][j] = st34::derivative(m[i][j], var);
        }
    }
    return d;
}

PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b)
{
    PolyMatrix c;
    const VarList& vars = a[0][0].vars();
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) {
            Polynomial<Rational> s(vars);
            for (std::size_t k = 0; k < 6; ++k) {
                s += a[i][k] * b[k][j] - b[i][k] * a[k][j];
            }
            c[i][j] = std::move(s);
        }
    }
    return c;
}

bool is_zero(const PolyMatrix& m)
{
    for (const auto& row : m) {
        for (const auto& e : row) {
            if (!e.is_zero()) {
                return false;
            }
        }
    }
    return true;
}

namespace {

/// sum_il x[6 + 6i + l] (first * second)_il at the point x[0..5].
template <class F>
F paired_product(const PolyMatrix& first, const PolyMatrix& second, std::span<const F> x)
{
    const auto pt = x.first(6);
    const Matrix<F> c = matmul<F>(evaluate_matrix<F>(first, pt), evaluate_matrix<F>(second, pt));
    F s(0);
    for (Eigen::Index i = 0; i < 6; ++i) {
        for (Eigen::Index l = 0; l < 6; ++l) {
            s += x[static_cast<std::size_t>(6 + 6 * i + l)] * c(i, l);
        }
    }
    return s;
}

}  // namespace

std::vector<VerificationReport> check_flatness(const SaitoData& data, Mode mode, const CheckOptions& opt)
{
    std::vector<PolyMatrix> dc;
    for (std::size_t j = 0; j < 6; ++j) {
        dc.push_back(derivative(data.C, j));
    }
    std::vector<VerificationReport> out;
    for (std::size_t j = 0; j < 6; ++j) {
        for (std::size_t k = j + 1; k < 6; ++k) {
            const std::string name = "d" + std::to_string(j + 1) + "C and d" + std::to_string(k + 1) + "C commute";
            if (mode == Mode::exact) {
                VerificationReport r;
                r.claim = name;
                r.provenance = "flatness of C";
                r.mode = Mode::exact;
                r.seed = opt.seed;
                const PolyMatrix c = commutator(dc[j], dc[k]);
                r.verdict = is_zero(c) ? Verdict::proved_symbolic : Verdict::failed;
                for (std::size_t a = 0; a < 6 && r.witnesses.empty(); ++a) {
                    for (std::size_t b = 0; b < 6; ++b) {
                        if (!c[a][b].is_zero()) {
                            r.witnesses.push_back({{"entry " + std::to_string(a + 1) + "," + std::to_string(b + 1)},
                                                   to_string(c[a][b]), "0", "nonzero commutator entry"});
                            break;
                        }
                    }
                }
                out.push_back(std::move(r));
                continue;
            }
            // sum_il lambda_il (AB - BA)_il with the 36 lambdas as extra variables:
            // nonzero as a polynomial iff some commutator entry is nonzero
            const auto a = std::make_shared<const PolyMatrix>(dc[j]);
            const auto b = std::make_shared<const PolyMatrix>(dc[k]);
            IdentityClaim claim;
            claim.name = name;
            claim.provenance = "flatness of C";
            claim.nvars = 6 + 36;
            unsigned deg = 0;
            for (const auto* m : {a.get(), b.get()}) {
                for (const auto& row : *m) {
                    for (const auto& e : row) {
                        deg = std::max(deg, static_cast<unsigned>(std::max(0, e.degree())));
                    }
                }
            }
            claim.degree_bound = 2 * deg + 1;
            claim.set_oracles([a, b]<class F>(std::span<const F> x) { return paired_product<F>(*a, *b, x); },
                              [a, b]<class F>(std::span<const F> x) { return paired_product<F>(*b, *a, x); });
            out.push_back(mode == Mode::modular ? check_modular(claim, opt) : check_randomized(claim, opt));
        }
    }
    return out;
}

namespace {

const Rational& k1_seventh_power()
{
    static const Rational v = rational_reduce(Integer(64), Integer(27));
    return v;
}

/// Exponent of k1 carried by u_j under u_j = t_j k1^(-7 w_j).
long u_shift(std::size_t j) { return j < 5 ? static_cast<long>(j + 1) : 7L; }

}  // namespace

Eq1Map rationalize_eq1(const PolyTable& eq1)
{
    const auto& names = *eq1.vars;
    if (names.size() != 7 || names[0] != "k1") {
        throw SaitoError("eq1 table must have variables k1 u1 .. u6");
    }
    Eq1Map map;
    for (std::size_t j = 0; j < 6; ++j) {
        const std::string name = "f" + std::to_string(j + 1);
        const auto& fj = eq1.get(name);
        std::vector<Polynomial<Rational>::Term> terms;
        std::optional<long> line_power;
        for (const auto& [m, c] : fj.terms()) {
            long power = static_cast<long>(m.exponent(0));
            std::array<unsigned, 6> e{};
            for (std::size_t i = 0; i < 6; ++i) {
                e[i] = m.exponent(i + 1);
                power -= u_shift(i) * static_cast<long>(e[i]);
            }
            if (power % 7 != 0) {
                throw SaitoError(name + ": a k1 power survives the substitution (k1^" + std::to_string(power) + ")");
            }
            if (line_power && *line_power != power) {
                throw SaitoError(name + ": terms carry different k1 powers");
            }
            line_power = power;
            terms.emplace_back(Monomial::from_exponents(std::span<const unsigned>(e)),
                               c * pow(k1_seventh_power(), power / 7));
        }
        map.k1_sevenths[j] = line_power.value_or(0) / 7;
        map.phi[j] = Polynomial<Rational>::from_terms(ut_vars(), std::move(terms));
        const Monomial lead = Monomial::variable(j);
        map.leading[j] = map.phi[j].coefficient(lead);
        if (map.leading[j].is_zero()) {
            throw SaitoError(name + " does not contain t" + std::to_string(j + 1) + " linearly");
        }
        for (const auto& [m, c] : map.phi[j].terms()) {
            for (std::size_t i = j; i < 6; ++i) {
                if (m.exponent(i) != 0 && !(m == lead)) {
                    throw SaitoError(name + " is not triangular in t1 .. t" + std::to_string(j + 1));
                }
            }
        }
    }
    // back-substitution: t_j = (f_j - rest_j(t_1 .. t_{j-1})) / leading_j
    std::vector<Polynomial<Rational>> sub(6, Polynomial<Rational>(f_vars()));
    for (std::size_t j = 0; j < 6; ++j) {
        const Polynomial<Rational> rest =
            map.phi[j] - Polynomial<Rational>::monomial(ut_vars(), Monomial::variable(j), map.leading[j]);
        const Polynomial<Rational> rest_f = compose(rest, sub);
        map.inverse[j] = (Polynomial<Rational>::variable(f_vars(), j) - rest_f) * (Rational(1) / map.leading[j]);
        sub[j] = map.inverse[j];
    }
    return map;
}

VerificationReport eq1_inverse_report(const Eq1Map& map)
{
    std::vector<Polynomial<Rational>> inv(map.inverse.begin(), map.inverse.end());
    VerificationReport r;
    r.claim = "the rationalized change of basis is inverted by back-substitution";
    r.provenance = "change of basis between f and u";
    r.mode = Mode::exact;
    r.verdict = Verdict::proved_symbolic;
    for (std::size_t j = 0; j < 6; ++j) {
        const Polynomial<Rational> back = compose(map.phi[j], inv);
        if (back != Polynomial<Rational>::variable(f_vars(), j)) {
            r.verdict = Verdict::failed;
            r.witnesses.push_back({{"f" + std::to_string(j + 1)}, to_string(back), "f" + std::to_string(j + 1),
                                   "composition is not the identity"});
        }
    }
    std::string powers;
    for (std::size_t j = 0; j < 6; ++j) {
        powers += (j != 0 ? " " : "") + std::to_string(7 * map.k1_sevenths[j]);
    }
    r.details["net_k1_powers"] = powers;
    return r;
}

std::vector<Rational> t_coordinates(const Eq1Map& map, const InvariantTables& tables, std::span<const Rational> x)
{
    std::vector<Rational> f;
    for (unsigned j = 1; j <= 6; ++j) {
        f.push_back(terao_enta_f<Rational>(tables, j, x));
    }
    std::vector<Rational> t;
    for (const auto& p : map.inverse) {
        t.push_back(evaluate<Rational>(p, f));
    }
    return t;
}

Rational det_T(const SaitoData& data, std::span<const Rational> t)
{
    return determinant(evaluate_matrix<Rational>(data.T, t));
}

namespace {

std::vector<std::string> texts(std::span<const Rational> x)
{
    std::vector<std::string> out;
    for (const auto& c : x) {
        out.push_back(c.to_string());
    }
    return out;
}

VerificationReport vanishing_report(const std::string& claim, const std::vector<std::vector<Rational>>& points,
                                    const SaitoData& data, const Eq1Map& map, const InvariantTables& tables,
                                    bool expect_zero, std::uint64_t seed)
{
    VerificationReport r;
    r.claim = claim;
    r.provenance = "discriminant of ST34";
    r.mode = Mode::exact;
    r.seed = seed;
    for (const auto& x : points) {
        const auto t = t_coordinates(map, tables, x);
        const Rational d = det_T(data, t);
        if (d.is_zero() != expect_zero) {
            Witness w{texts(x), d.to_string(), expect_zero ? "0" : "nonzero", "t = "};
            for (std::size_t i = 0; i < t.size(); ++i) {
                w.note += (i != 0 ? ", " : "") + t[i].to_string();
            }
            r.witnesses.push_back(std::move(w));
        }
    }
    r.points = points.size();
    r.verdict = r.witnesses.empty() ? Verdict::proved_exact : Verdict::failed;
    return r;
}

}  // namespace

std::vector<VerificationReport> discriminant_vanishing_check(const SaitoData& data, const Eq1Map& map,
                                                             const InvariantTables& tables,
                                                             const DiscriminantOptions& opt)
{
    Rng rng(opt.seed);
    std::vector<std::vector<Rational>> constrained;
    for (std::size_t n = 0; n < opt.trials; ++n) {
        auto x = rng.integer_point(6, -opt.range, opt.range);
        x[4] = Rational(1);
        x[5] = Rational(1);
        constrained.push_back(std::move(x));
    }
    std::vector<std::vector<Rational>> mirror;
    for (std::size_t n = 0; n < opt.mirror_points; ++n) {
        auto x = rng.integer_point(6, -opt.range, opt.range);
        switch (n % 3) {
        case 0: x[1] = x[0]; break;  // x1 = x2
        case 1: x[3] = x[2]; break;  // x3 = x4
        default: {                   // x1 + ... + x6 = 0
            Rational s(0);
            for (std::size_t i = 0; i < 5; ++i) {
                s += x[i];
            }
            x[5] = -s;
        }
        }
        mirror.push_back(std::move(x));
    }
    std::vector<std::vector<Rational>> generic;
    for (std::size_t n = 0; n < opt.generic_points; ++n) {
        generic.push_back(rng.integer_point(6, -opt.range, opt.range));
    }
    std::vector<VerificationReport> out;
    out.push_back(vanishing_report("det T vanishes where x5 = x6 = 1", constrained, data, map, tables, true, opt.seed));
    out.push_back(vanishing_report("det T vanishes on the mirrors x1 = x2, x3 = x4 and x1 + ... + x6 = 0", mirror,
                                   data, map, tables, true, opt.seed));
    out.push_back(vanishing_report("det T is nonzero at generic points", generic, data, map, tables, false, opt.seed));

    // det T(lambda . t) = lambda^D det T(t) for the weighted action t_j -> lambda^(7 w_j) t_j
    VerificationReport scaling;
    scaling.claim = "det T is weighted-homogeneous";
    scaling.provenance = "weights of the potential vector field";
    scaling.mode = Mode::exact;
    scaling.seed = opt.seed;
    const Rational lambda(2);
    std::optional<long> exponent;
    for (const auto& x : generic) {
        const auto t = t_coordinates(map, tables, x);
        std::vector<Rational> scaled;
        for (std::size_t j = 0; j < 6; ++j) {
            scaled.push_back(t[j] * pow(lambda, j < 5 ? static_cast<long>(j + 1) : 7L));
        }
        const Rational a = det_T(data, t);
        const Rational b = det_T(data, scaled);
        if (a.is_zero()) {
            continue;
        }
        Rational ratio = b / a;
        long d = 0;
        while (ratio.is_integer() && ratio != Rational(1) && (ratio.numerator() % 2) == 0) {
            ratio = ratio / lambda;
            ++d;
        }
        if (ratio != Rational(1) || (exponent && *exponent != d)) {
            scaling.witnesses.push_back({texts(x), (b / a).to_string(), exponent ? "2^" + std::to_string(*exponent) : "",
                                         "ratio is not a consistent power of 2"});
        }
        exponent = d;
        ++scaling.points;
    }
    scaling.details["lambda"] = lambda.to_string();
    scaling.details["exponent"] = exponent ? std::to_string(*exponent) : "undetermined";
    scaling.verdict = scaling.witnesses.empty() && exponent ? Verdict::proved_exact : Verdict::failed;
    out.push_back(std::move(scaling));
    return out;
}

const VarList& x4_vars()
{
    static const VarList v = numbered_vars("x", 4);
    return v;
}

std::vector<Polynomial<Rational>> r_basics()
{
    auto power_sum = [](unsigned e) {
        std::vector<Polynomial<Rational>::Term> terms;
        for (std::size_t i = 0; i < 4; ++i) {
            terms.emplace_back(Monomial::variable(i, e), Rational(1));
        }
        return Polynomial<Rational>::from_terms(x4_vars(), std::move(terms));
    };
    return {power_sum(3), Polynomial<Rational>::monomial(x4_vars(), Monomial::from_exponents({1, 1, 1, 1}), Rational(1)),
            power_sum(6), power_sum(9)};
}

std::vector<VerificationReport> verify_ptilde_identities(const PolyTable& ptilde, Mode mode, const CheckOptions& opt)
{
    // restriction x5 = x6 = 1 of p_{3j} and s6, as polynomials in x1..x4
    std::vector<Polynomial<Rational>> restricted;
    const auto basics = g336_basics();
    std::vector<Polynomial<Rational>> subst;
    for (std::size_t i = 0; i < 4; ++i) {
        subst.push_back(Polynomial<Rational>::variable(x4_vars(), i));
    }
    subst.push_back(Polynomial<Rational>::constant(x4_vars(), Rational(1)));
    subst.push_back(Polynomial<Rational>::constant(x4_vars(), Rational(1)));
    for (const auto& b : basics) {
        restricted.push_back(compose(b, subst));
    }
    const auto r = r_basics();
    const std::array<std::string, 6> names = {"pt3", "pt6", "pt9", "pt12", "pt15", "st6"};
    std::vector<VerificationReport> out;
    for (std::size_t i = 0; i < 6; ++i) {
        IdentityClaim c;
        c.name = names[i] + " restriction formula in r3, r4, r6, r9";
        c.provenance = "restriction to x5 = x6 = 1";
        c.set_polynomials(restricted[i], compose(ptilde.get(names[i]), r));
        out.push_back(check(c, mode, opt));
    }
    return out;
}

}  // namespace st34
