#ifndef ST34_INVARIANTS_HPP
#define ST34_INVARIANTS_HPP

#include "st34/groups.hpp"
#include "st34/idcheck.hpp"
#include "st34/lattice.hpp"
#include "st34/linalg.hpp"
#include "st34/poly_io.hpp"
#include "st34/random.hpp"

#include <array>
#include <filesystem>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace st34 {

/// An internal computation contradicted a structural fact (enumeration bug).
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class SamplingDegenerate : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotInRing : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Weights of p3, p6, p9, p12, p15, s6.
inline constexpr std::array<unsigned, 6> kBasisWeights = {3, 6, 9, 12, 15, 6};
/// Indices j of the tabulated m_j.
inline constexpr std::array<unsigned, 6> kMIndices = {1, 2, 3, 4, 5, 7};
/// mu_{6j} = c_j m_j for j in kMIndices.
inline const std::array<Rational, 6>& mu_e1_constants()
{
    static const std::array<Rational, 6> c = {Rational(-1944),       Rational(66096),
                                              Rational(-1770984),    Rational(47830176),
                                              Rational(-1291401144), Rational(Integer("-941431787784"))};
    return c;
}

const VarList& x_vars();      // x1..x6
const VarList& basis_vars();  // p3 p6 p9 p12 p15 s6
const VarList& q_vars();      // q1..q5 s6

/// p3, p6, p9, p12, p15, s6 as polynomials in x1..x6.
std::vector<Polynomial<Rational>> g336_basics();
/// q1..q5 (power sums) and s6 in x1..x6.
std::vector<Polynomial<Rational>> q_basics();

template <class S>
std::vector<S> g336_values(std::span<const S> x)
{
    std::vector<S> out(6, S(0));
    S s6(1);
    for (const auto& xi : x) {
        const S c = xi * xi * xi;
        S pw = c;
        for (std::size_t j = 0; j < 5; ++j) {
            out[j] += pw;
            pw *= c;
        }
        s6 *= xi;
    }
    out[5] = s6;
    return out;
}

template <class S>
std::vector<S> q_values(std::span<const S> x)
{
    std::vector<S> out(6, S(0));
    S s6(1);
    for (const auto& xi : x) {
        S pw = xi;
        for (std::size_t j = 0; j < 5; ++j) {
            out[j] += pw;
            pw *= xi;
        }
        s6 *= xi;
    }
    out[5] = s6;
    return out;
}

/// sum over the 756 minimal vectors v of (v . x)^k, for x in (Q(w)-like)^6.
template <class F>
Eisenstein<F> mu_value(unsigned k, std::span<const Eisenstein<F>> x)
{
    if (x.size() != 6) {
        throw std::invalid_argument("mu needs a 6-point");
    }
    Eisenstein<F> total;
    for (const auto& v : minimal_vectors()) {
        Eisenstein<F> l;
        for (std::size_t i = 0; i < 6; ++i) {
            const auto& c = v.coords[i];
            if (c.re != 0 || c.w != 0) {
                l += Eisenstein<F>(F(c.re), F(c.w)) * x[i];
            }
        }
        total += pow(l, k);
    }
    return total;
}

/// mu_k at a point with coordinates in F; the w-part of the sum must vanish.
template <class F>
F mu_eval(unsigned k, std::span<const F> x)
{
    if (x.size() != 6) {
        throw std::invalid_argument("mu needs a 6-point");
    }
    Eisenstein<F> total;
    for (const auto& v : minimal_vectors()) {
        F re(0);
        F w(0);
        for (std::size_t i = 0; i < 6; ++i) {
            const auto& c = v.coords[i];
            if (c.re != 0) {
                re += F(c.re) * x[i];
            }
            if (c.w != 0) {
                w += F(c.w) * x[i];
            }
        }
        total += pow(Eisenstein<F>(re, w), k);
    }
    if (!is_zero(total.w)) {
        throw InternalConsistencyError("mu_" + std::to_string(k) + " has a nonzero w-part");
    }
    return total.re;
}

/// Full expansion of mu_k in x1..x6 for k in {0, 6, 12, 18}.
Polynomial<Rational> mu_symbolic(unsigned k);

/// Exponent vectors (over p3..s6) of weighted degree d, in descending order.
std::vector<Monomial> basis_monomials(unsigned d);

/// Values of the basis monomials at given p3..s6 values.
template <class S>
std::vector<S> basis_monomial_values(const std::vector<Monomial>& monos, std::span<const S> basis)
{
    unsigned maxe = 0;
    for (const auto& m : monos) {
        for (std::size_t i = 0; i < 6; ++i) {
            maxe = std::max(maxe, m.exponent(i));
        }
    }
    std::vector<std::vector<S>> powers(6, std::vector<S>(maxe + 1, S(1)));
    for (std::size_t i = 0; i < 6; ++i) {
        for (unsigned e = 1; e <= maxe; ++e) {
            powers[i][e] = powers[i][e - 1] * basis[i];
        }
    }
    std::vector<S> out;
    out.reserve(monos.size());
    for (const auto& m : monos) {
        S v(1);
        for (std::size_t i = 0; i < 6; ++i) {
            if (m.exponent(i) != 0) {
                v *= powers[i][m.exponent(i)];
            }
        }
        out.push_back(v);
    }
    return out;
}

template <class F>
struct BasisSolution {
    unsigned degree = 0;
    std::vector<Monomial> monomials;
    Vector<F> coefficients;
    std::size_t attempts = 0;
};

template <class F>
using PointOracle = std::function<F(std::span<const F>)>;

inline constexpr std::size_t kHeldOutPoints = 10;

/// Writes a G(3,3,6)-invariant of weighted degree d in p3..s6 from its
/// values at random integer points in [-range, range]^6.
template <class F>
BasisSolution<F> express_in_g336_basis(const PointOracle<F>& target, unsigned d, Rng& rng, long range = 99,
                                       std::size_t max_attempts = 3)
{
    BasisSolution<F> sol;
    sol.degree = d;
    sol.monomials = basis_monomials(d);
    const std::size_t n = sol.monomials.size();
    const std::size_t rows = n + kHeldOutPoints;
    for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
        sol.attempts = attempt;
        Matrix<F> a(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(n));
        Vector<F> b(static_cast<Eigen::Index>(rows));
        for (std::size_t r = 0; r < rows; ++r) {
            std::vector<F> x;
            x.reserve(6);
            for (std::size_t i = 0; i < 6; ++i) {
                x.push_back(F(rng.uniform(-range, range)));
            }
            const auto basis = g336_values<F>(x);
            const auto vals = basis_monomial_values<F>(sol.monomials, basis);
            for (std::size_t c = 0; c < n; ++c) {
                a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = vals[c];
            }
            b(static_cast<Eigen::Index>(r)) = target(x);
        }
        const auto top_a = a.topRows(static_cast<Eigen::Index>(n));
        const auto top_b = b.head(static_cast<Eigen::Index>(n));
        std::optional<Vector<F>> c;
        if constexpr (std::is_same_v<F, Rational>) {
            c = solve(Matrix<F>(top_a), Vector<F>(top_b));
        } else {
            c = gauss_solve<F>(Matrix<F>(top_a), Vector<F>(top_b));
        }
        if (!c) {
            continue;
        }
        for (std::size_t r = n; r < rows; ++r) {
            F s(0);
            for (std::size_t k = 0; k < n; ++k) {
                s += a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) * (*c)(static_cast<Eigen::Index>(k));
            }
            if (s != b(static_cast<Eigen::Index>(r))) {
                throw NotInRing("target not in the ring: nonzero residual at a held-out point (weighted degree " +
                                std::to_string(d) + ")");
            }
        }
        sol.coefficients = std::move(*c);
        return sol;
    }
    throw SamplingDegenerate("sampling degenerate: singular system after " + std::to_string(max_attempts) +
                             " attempts (weighted degree " + std::to_string(d) + ")");
}

/// The solution as a polynomial in p3..s6.
Polynomial<Rational> to_polynomial(const BasisSolution<Rational>& sol);

/// Value at p3 = ... = p15 = 1, s6 = 0.
Rational unit_normalization(const Polynomial<Rational>& basis_expr);

/// The transcribed tables used by the invariant checks.
struct InvariantTables {
    std::array<Polynomial<Rational>, 6> m;  // indexed like kMIndices
    PolyTable f;
    PolyTable q_expr;
    PolyTable pR2;

    const Polynomial<Rational>& m_table(unsigned j) const;
};
InvariantTables load_invariant_tables(const std::filesystem::path& dir = default_tables_dir());

std::size_t m_index(unsigned j);  // position of j in kMIndices

struct MonomialDiff {
    std::string monomial;
    std::string table;
    std::string derived;
    std::vector<std::string> modular;  // per prime: which side the modular solve supports
};

struct MTableComparison {
    unsigned j = 0;
    unsigned degree = 0;
    Mode mode = Mode::exact;
    std::size_t monomials = 0;
    Rational constant;                // mu_{6j} divided by the normalized m_j
    Rational mu_at_e1;
    Rational table_normalization;     // table m_j at p = 1, s6 = 0
    Polynomial<Rational> derived;     // normalized re-derivation (exact mode)
    std::vector<MonomialDiff> diffs;
    std::vector<std::uint64_t> primes;
    std::size_t attempts = 0;

    bool matches() const { return diffs.empty(); }
};

/// Re-derives m_j from mu_{6j} and compares it with the transcribed table.
MTableComparison recompute_m_table(unsigned j, const Polynomial<Rational>& table, Mode mode, std::uint64_t seed,
                                   std::size_t nprimes = 3);

/// Report form of a comparison.
VerificationReport m_table_report(const MTableComparison& c, std::uint64_t seed);

/// Reports: mu_k fixed by each generator at random points.
VerificationReport mu_invariance_report(unsigned k, const CheckOptions& opt);
/// Report: mu_k vanishes at random points (k not divisible by 6).
VerificationReport mu_vanishing_report(unsigned k, const CheckOptions& opt);
/// Report: mu_k(e1) equals the expected value.
VerificationReport mu_e1_report(unsigned k, const Rational& expected);

/// m_j composed with x is fixed by R2 (symbolic for j <= 3 in exact mode).
VerificationReport m_invariance_report(unsigned j, const Polynomial<Rational>& mj, Mode mode, const CheckOptions& opt);
/// m_j composed with x is fixed by all six generators at random points.
VerificationReport m_generators_report(unsigned j, const Polynomial<Rational>& mj, const CheckOptions& opt);

/// The printed p-in-q and R2 identities plus the trivial control.
std::vector<VerificationReport> verify_q_expressions(const InvariantTables& t, Mode mode, const CheckOptions& opt);

/// Terao-Enta f_j at a point.
template <class F>
F terao_enta_f(const InvariantTables& t, unsigned j, std::span<const F> x)
{
    const auto& fj = t.f.get("f" + std::to_string(j));
    const auto& names = *fj.vars();
    std::vector<bool> used(names.size(), false);
    for (const auto& [m, c] : fj.terms()) {
        for (std::size_t i = 0; i < names.size(); ++i) {
            used[i] = used[i] || m.exponent(i) != 0;
        }
    }
    std::vector<F> vals(names.size(), F(0));
    std::optional<std::vector<F>> basis;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!used[i]) {
            continue;
        }
        const std::string& n = names[i];
        if (n.rfind("mu", 0) == 0) {
            vals[i] = mu_eval<F>(static_cast<unsigned>(std::stoul(n.substr(2))), x);
        } else if (n.size() == 2 && n[0] == 'm') {
            if (!basis) {
                basis = g336_values<F>(x);
            }
            vals[i] = evaluate<F>(t.m_table(static_cast<unsigned>(n[1] - '0')), *basis);
        } else {
            throw std::invalid_argument("unknown symbol '" + n + "' in f" + std::to_string(j));
        }
    }
    return evaluate<F>(fj, vals);
}

/// Weighted degree of f_j (6, 12, 18, 24, 30, 42).
unsigned terao_enta_degree(unsigned j);

/// det of the Hessian matrix of a polynomial in six variables at x.
Rational hessian_determinant(const std::vector<Polynomial<Rational>>& second_partials, std::span<const Rational> x);
std::vector<Polynomial<Rational>> second_partials(const Polynomial<Rational>& f);

/// f1 in x-form: (coefficient of mu6 in f1) * mu_6.
Polynomial<Rational> f1_polynomial(const InvariantTables& t);

/// H(f1) / f4 is one constant across point pairs.
VerificationReport hessian_ratio_check(const InvariantTables& t, const CheckOptions& opt, std::size_t pairs = 10);

}  // namespace st34

#endif  // ST34_INVARIANTS_HPP
