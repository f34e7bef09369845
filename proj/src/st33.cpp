#include "st34/st33.hpp"

#include "st34/linalg.hpp"

#include <algorithm>

namespace st34 {

const VarList& xy_vars()
{
    static const VarList v = make_vars({"x1", "x2", "x3", "x4", "y"});
    return v;
}

const VarList& r_vars()
{
    static const VarList v = make_vars({"r3", "r4", "r6", "r9", "y"});
    return v;
}

Polynomial<Rational> restrict_to_y(const Polynomial<Rational>& f)
{
    if (f.nvars() != 6) {
        throw PolynomialError("restriction needs a polynomial in six variables");
    }
    std::vector<Polynomial<Rational>> sub;
    for (std::size_t i = 0; i < 4; ++i) {
        sub.push_back(Polynomial<Rational>::variable(xy_vars(), i));
    }
    sub.push_back(Polynomial<Rational>::variable(xy_vars(), 4));
    sub.push_back(Polynomial<Rational>::variable(xy_vars(), 4));
    return compose(f, sub);
}

std::vector<Polynomial<Rational>> r_basics_xy()
{
    auto power_sum = [](unsigned e) {
        std::vector<Polynomial<Rational>::Term> terms;
        for (std::size_t i = 0; i < 4; ++i) {
            terms.emplace_back(Monomial::variable(i, e), Rational(1));
        }
        return Polynomial<Rational>::from_terms(xy_vars(), std::move(terms));
    };
    return {power_sum(3),
            Polynomial<Rational>::monomial(xy_vars(), Monomial::from_exponents({1, 1, 1, 1, 0}), Rational(1)),
            power_sum(6), power_sum(9), Polynomial<Rational>::variable(xy_vars(), 4)};
}

std::vector<Monomial> r_monomials(unsigned d)
{
    std::vector<Monomial> out;
    std::array<unsigned, 5> e{};
    auto visit = [&](auto&& self, std::size_t pos, unsigned left) -> void {
        if (pos == 5) {
            if (left == 0) {
                out.push_back(Monomial::from_exponents(std::span<const unsigned>(e)));
            }
            return;
        }
        for (unsigned v = 0; v * kRWeights[pos] <= left; ++v) {
            e[pos] = v;
            self(self, pos + 1, left - v * kRWeights[pos]);
        }
        e[pos] = 0;
    };
    visit(visit, 0, d);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return b < a; });
    return out;
}

Polynomial<Rational> rewrite_in_r(const Polynomial<Rational>& f_xy, unsigned d, Rng& rng)
{
    const auto monos = r_monomials(d);
    const std::size_t n = monos.size();
    const Eigen::Index en = static_cast<Eigen::Index>(n);
    for (int attempt = 0; attempt < 3; ++attempt) {
        Matrix<Rational> a(en, en);
        Vector<Rational> b(en);
        for (Eigen::Index r = 0; r < en; ++r) {
            const auto xy = rng.integer_point(5, -99, 99);
            const auto rv = r_values<Rational>(xy);
            std::vector<Rational> row(monos.size());
            for (std::size_t c = 0; c < n; ++c) {
                Rational v(1);
                for (std::size_t i = 0; i < 5; ++i) {
                    if (monos[c].exponent(i) != 0) {
                        v *= pow(rv[i], static_cast<long>(monos[c].exponent(i)));
                    }
                }
                a(r, static_cast<Eigen::Index>(c)) = v;
            }
            b(r) = evaluate<Rational>(f_xy, xy);
        }
        const auto sol = solve(a, b);
        if (!sol) {
            continue;
        }
        std::vector<Polynomial<Rational>::Term> terms;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(*sol)(static_cast<Eigen::Index>(c)).is_zero()) {
                terms.emplace_back(monos[c], (*sol)(static_cast<Eigen::Index>(c)));
            }
        }
        auto result = Polynomial<Rational>::from_terms(r_vars(), std::move(terms));
        if (compose(result, r_basics_xy()) != f_xy) {
            throw NotInRing("rewrite residual nonzero: the polynomial is not a polynomial in r3, r4, r6, r9, y");
        }
        return result;
    }
    throw SamplingDegenerate("sampling degenerate while rewriting in r3, r4, r6, r9, y");
}

Polynomial<Rational> restricted_m(const InvariantTables& t, unsigned k, Rng& rng)
{
    const auto x_form = compose(t.m_table(k), g336_basics());
    return rewrite_in_r(restrict_to_y(x_form), 6 * k, rng);
}

JInvariants j_invariants(const InvariantTables& t, const PolyTable& jtable, std::uint64_t seed)
{
    Rng rng(seed);
    JInvariants j;
    j.j[0] = jtable.get("J4").with_vars(r_vars());
    j.j[1] = restricted_m(t, 1, rng);
    j.j[2] = jtable.get("J10").with_vars(r_vars());
    j.j[3] = restricted_m(t, 2, rng);
    j.j[4] = restricted_m(t, 3, rng);
    return j;
}

std::vector<VerificationReport> verify_j_tables(const InvariantTables& t, const PolyTable& jtable, std::uint64_t seed)
{
    const JInvariants derived = j_invariants(t, jtable, seed);
    std::vector<VerificationReport> out;
    for (const std::size_t i : {std::size_t{1}, std::size_t{3}, std::size_t{4}}) {
        const std::string name = "J" + std::to_string(kJDegrees[i]);
        IdentityClaim c;
        c.name = name + " table equals m" + std::to_string(kJDegrees[i] / 6) + " restricted to x5 = x6 = y";
        c.provenance = "restricted invariants";
        c.set_polynomials(derived.j[i], jtable.get(name).with_vars(r_vars()));
        auto r = check_exact(c);
        r.seed = seed;
        out.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < 5; ++i) {
        const std::string name = "J" + std::to_string(kJDegrees[i]);
        const auto x_form = compose(jtable.get(name).with_vars(r_vars()), r_basics_xy());
        const bool ok = x_form.is_homogeneous() && x_form.degree() == static_cast<int>(kJDegrees[i]);
        out.push_back(fact_report(name + " has total degree " + std::to_string(kJDegrees[i]), "restricted invariants",
                                  ok, std::to_string(x_form.degree()) + (x_form.is_homogeneous() ? "" : " (inhomogeneous)"),
                                  std::to_string(kJDegrees[i])));
    }
    return out;
}

std::vector<VerificationReport> verify_restriction_two_ways(const InvariantTables& t)
{
    std::vector<Polynomial<Rational>> restricted_basics;
    for (const auto& b : g336_basics()) {
        restricted_basics.push_back(restrict_to_y(b));
    }
    std::vector<VerificationReport> out;
    for (const unsigned k : {1U, 2U, 3U}) {
        IdentityClaim c;
        c.name = "m" + std::to_string(k) + " restricted directly equals m" + std::to_string(k) +
                 " of the restricted basics";
        c.provenance = "restricted invariants";
        c.set_polynomials(restrict_to_y(compose(t.m_table(k), g336_basics())), compose(t.m_table(k), restricted_basics));
        out.push_back(check_exact(c));
    }
    return out;
}

std::vector<VerificationReport> verify_j_relations(const InvariantTables& t, const PolyTable& jtable,
                                                   const PolyTable& relations, Mode mode, const CheckOptions& opt)
{
    std::array<std::shared_ptr<const Polynomial<Rational>>, 5> js;
    for (std::size_t i = 0; i < 5; ++i) {
        js[i] = std::make_shared<const Polynomial<Rational>>(
            jtable.get("J" + std::to_string(kJDegrees[i])).with_vars(r_vars()));
    }
    std::vector<VerificationReport> out;
    for (const unsigned k : {4U, 5U, 7U}) {
        const std::string name = "J" + std::to_string(6 * k);
        const auto mk = std::make_shared<const Polynomial<Rational>>(t.m_table(k));
        const auto rhs = std::make_shared<const Polynomial<Rational>>(relations.get(name));
        IdentityClaim c;
        c.name = name + " relation in J4, J6, J10, J12, J18";
        c.provenance = "ST33 relations";
        c.nvars = 5;
        c.degree_bound = 6 * k;
        c.set_oracles([mk]<class F>(std::span<const F> xy) { return evaluate<F>(*mk, restricted_basis_values<F>(xy)); },
                      [rhs, js]<class F>(std::span<const F> xy) {
                          const auto rv = r_values<F>(xy);
                          std::vector<F> jv;
                          for (const auto& p : js) {
                              jv.push_back(evaluate<F>(*p, rv));
                          }
                          return evaluate<F>(*rhs, jv);
                      });
        out.push_back(mode == Mode::modular ? check_modular(c, opt) : check_randomized(c, opt));
    }
    return out;
}

std::vector<VerificationReport> relation_homogeneity(const PolyTable& relations)
{
    std::vector<VerificationReport> out;
    for (const unsigned k : {4U, 5U, 7U}) {
        const std::string name = "J" + std::to_string(6 * k);
        const auto& p = relations.get(name);
        const auto w = p.weighted_degree<unsigned>(std::span<const unsigned>(kJDegrees));
        out.push_back(fact_report(name + " right-hand side has weight " + std::to_string(6 * k), "ST33 relations",
                                  w && *w == 6 * k, w ? std::to_string(*w) : "inhomogeneous", std::to_string(6 * k)));
    }
    return out;
}

}  // namespace st34
