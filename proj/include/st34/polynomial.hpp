#ifndef ST34_POLYNOMIAL_HPP
#define ST34_POLYNOMIAL_HPP

#include "st34/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace st34 {

inline constexpr std::size_t kMaxVariables = 8;
inline constexpr unsigned kMaxExponent = 255;
/// Default cap on symbolic powers; larger work goes through evaluation.
inline constexpr unsigned kDefaultPowerCap = 42;
/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

class PolynomialError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exponent vector packed one byte per variable, variable 0 in the most
/// significant byte, so that comparing packed words is lexicographic order.
class Monomial {
public:
    constexpr Monomial() = default;

    static Monomial from_exponents(std::span<const unsigned> exps)
    {
        if (exps.size() > kMaxVariables) {
            throw PolynomialError("too many variables for a monomial");
        }
        Monomial m;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            m = m.with_exponent(i, exps[i]);
        }
        return m;
    }
    static Monomial from_exponents(std::initializer_list<unsigned> exps)
    {
        return from_exponents(std::span<const unsigned>(exps.begin(), exps.size()));
    }
    static Monomial variable(std::size_t i, unsigned e = 1) { return Monomial().with_exponent(i, e); }

    constexpr unsigned exponent(std::size_t i) const
    {
        return static_cast<unsigned>((bits_ >> shift(i)) & 0xFFU);
    }
    constexpr unsigned degree() const { return degree_; }
    constexpr std::uint64_t bits() const { return bits_; }

    Monomial with_exponent(std::size_t i, unsigned e) const
    {
        if (i >= kMaxVariables) {
            throw PolynomialError("variable index out of range");
        }
        if (e > kMaxExponent) {
            throw PolynomialError("exponent " + std::to_string(e) + " exceeds the cap of 255");
        }
        Monomial m = *this;
        m.degree_ = degree_ - exponent(i) + e;
        m.bits_ = (bits_ & ~(std::uint64_t{0xFF} << shift(i))) | (std::uint64_t{e} << shift(i));
        return m;
    }

    Monomial operator*(const Monomial& o) const
    {
        Monomial m;
        m.degree_ = degree_ + o.degree_;
        if (m.degree_ > kMaxExponent) {
            for (std::size_t i = 0; i < kMaxVariables; ++i) {
                if (exponent(i) + o.exponent(i) > kMaxExponent) {
                    throw PolynomialError("exponent overflow in monomial product");
                }
            }
        }
        m.bits_ = bits_ + o.bits_;
        return m;
    }

    /// Graded-lexicographic order.
    friend constexpr bool operator<(const Monomial& a, const Monomial& b)
    {
        return a.degree_ != b.degree_ ? a.degree_ < b.degree_ : a.bits_ < b.bits_;
    }
    friend constexpr bool operator>(const Monomial& a, const Monomial& b) { return b < a; }
    friend constexpr bool operator==(const Monomial& a, const Monomial& b) { return a.bits_ == b.bits_; }

    static Monomial from_bits(std::uint64_t bits)
    {
        Monomial m;
        m.bits_ = bits;
        unsigned d = 0;
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            d += m.exponent(i);
        }
        m.degree_ = d;
        return m;
    }

private:
    static constexpr unsigned shift(std::size_t i) { return static_cast<unsigned>(8 * (kMaxVariables - 1 - i)); }

    std::uint64_t bits_ = 0;
    unsigned degree_ = 0;
};

/// Ordered variable names shared between polynomials of one ring.
using VarList = std::shared_ptr<const std::vector<std::string>>;

VarList make_vars(std::vector<std::string> names);
/// Names prefix1 .. prefixN.
VarList numbered_vars(const std::string& prefix, std::size_t n);
bool same_vars(const VarList& a, const VarList& b);

/// Sparse polynomial over the exact coefficient ring R. Terms are kept in
/// descending graded-lex order without zero coefficients.
template <class R>
class Polynomial {
public:
    using Coefficient = R;
    using Term = std::pair<Monomial, R>;

    Polynomial() = default;
    explicit Polynomial(VarList vars) : vars_(std::move(vars))
    {
        if (!vars_ || vars_->size() > kMaxVariables) {
            throw PolynomialError("a polynomial ring needs between 0 and 8 variables");
        }
    }

    static Polynomial constant(VarList vars, R c)
    {
        Polynomial p(std::move(vars));
        if (!st34::is_zero(c)) {
            p.terms_.emplace_back(Monomial(), std::move(c));
        }
        return p;
    }
    static Polynomial variable(VarList vars, std::size_t i)
    {
        if (i >= vars->size()) {
            throw PolynomialError("variable index out of range");
        }
        Polynomial p(std::move(vars));
        p.terms_.emplace_back(Monomial::variable(i), R(1));
        return p;
    }
    static Polynomial variable(VarList vars, const std::string& name)
    {
        const auto i = index_of(*vars, name);
        return variable(std::move(vars), i);
    }
    static Polynomial monomial(VarList vars, Monomial m, R c)
    {
        Polynomial p(std::move(vars));
        if (!st34::is_zero(c)) {
            p.terms_.emplace_back(m, std::move(c));
        }
        return p;
    }
    /// Builds from arbitrary terms; equal monomials are summed, zeros dropped.
    static Polynomial from_terms(VarList vars, std::vector<Term> terms)
    {
        Polynomial p(std::move(vars));
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    const VarList& vars() const { return vars_; }
    std::size_t nvars() const { return vars_ ? vars_->size() : 0; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    int degree() const { return terms_.empty() ? kZeroDegree : static_cast<int>(terms_.front().first.degree()); }

    bool is_homogeneous() const
    {
        return std::all_of(terms_.begin(), terms_.end(),
                           [&](const Term& t) { return t.first.degree() == terms_.front().first.degree(); });
    }

    /// Weighted degree if every term shares it.
    template <class W>
    std::optional<W> weighted_degree(std::span<const W> weights) const
    {
        std::optional<W> d;
        for (const auto& [m, c] : terms_) {
            W s(0);
            for (std::size_t i = 0; i < nvars(); ++i) {
                s += W(static_cast<long>(m.exponent(i))) * weights[i];
            }
            if (d && !(*d == s)) {
                return std::nullopt;
            }
            d = s;
        }
        return d;
    }

    R coefficient(const Monomial& m) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& key) { return t.first > key; });
        if (it != terms_.end() && it->first == m) {
            return it->second;
        }
        return R(0);
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = merge(*this, o, false); }
    Polynomial& operator-=(const Polynomial& o) { return *this = merge(*this, o, true); }
    Polynomial& operator*=(const Polynomial& o) { return *this = multiply(*this, o); }
    Polynomial& operator*=(const R& c)
    {
        if (st34::is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& t : terms_) {
            t.second = t.second * c;
        }
        return *this;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }
    friend Polynomial operator*(Polynomial a, const R& c) { return a *= c; }
    friend Polynomial operator*(const R& c, Polynomial a) { return a *= c; }
    Polynomial operator-() const
    {
        Polynomial r = *this;
        for (auto& t : r.terms_) {
            t.second = R(0) - t.second;
        }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return same_vars(a.vars_, b.vars_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Same terms reinterpreted over another variable list of equal length.
    Polynomial with_vars(VarList vars) const
    {
        if (!vars || vars->size() != nvars()) {
            throw PolynomialError("renaming needs a variable list of the same length");
        }
        Polynomial p = *this;
        p.vars_ = std::move(vars);
        return p;
    }

    template <class S, class Fn>
    Polynomial<S> map_coefficients(Fn&& fn) const
    {
        std::vector<typename Polynomial<S>::Term> out;
        out.reserve(terms_.size());
        for (const auto& [m, c] : terms_) {
            out.emplace_back(m, fn(c));
        }
        return Polynomial<S>::from_terms(vars_, std::move(out));
    }

    static std::size_t index_of(const std::vector<std::string>& names, const std::string& name)
    {
        const auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) {
            throw PolynomialError("unknown variable '" + name + "'");
        }
        return static_cast<std::size_t>(it - names.begin());
    }

private:
    template <class>
    friend class Polynomial;

    static void check_compatible(const Polynomial& a, const Polynomial& b)
    {
        if (!same_vars(a.vars_, b.vars_)) {
            throw PolynomialError("variable lists differ");
        }
    }

    void normalize()
    {
        std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.first > y.first; });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().first == t.first) {
                out.back().second = out.back().second + t.second;
            } else {
                out.push_back(std::move(t));
            }
        }
        std::erase_if(out, [](const Term& t) { return st34::is_zero(t.second); });
        terms_ = std::move(out);
    }

    static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract)
    {
        check_compatible(a, b);
        Polynomial r(a.vars_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto i = a.terms_.begin();
        auto j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && i->first > j->first)) {
                r.terms_.push_back(*i++);
            } else if (i == a.terms_.end() || j->first > i->first) {
                r.terms_.emplace_back(j->first, subtract ? R(0) - j->second : j->second);
                ++j;
            } else {
                R c = subtract ? i->second - j->second : i->second + j->second;
                if (!st34::is_zero(c)) {
                    r.terms_.emplace_back(i->first, std::move(c));
                }
                ++i;
                ++j;
            }
        }
        return r;
    }

    static Polynomial multiply(const Polynomial& a, const Polynomial& b);

    VarList vars_;
    std::vector<Term> terms_;
};

namespace detail {

/// Product by hash accumulation followed by a sort into canonical order.
template <class R>
std::vector<std::pair<Monomial, R>> multiply_terms(const std::vector<std::pair<Monomial, R>>& a,
                                                   const std::vector<std::pair<Monomial, R>>& b)
{
    std::unordered_map<std::uint64_t, R> acc;
    acc.reserve(std::min<std::size_t>(a.size() * b.size(), std::size_t{1} << 22U));
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            const Monomial m = ma * mb;
            auto [it, inserted] = acc.try_emplace(m.bits(), ca * cb);
            if (!inserted) {
                it->second += ca * cb;
            }
        }
    }
    std::vector<std::pair<Monomial, R>> out;
    out.reserve(acc.size());
    for (auto& [bits, c] : acc) {
        if (!st34::is_zero(c)) {
            out.emplace_back(Monomial::from_bits(bits), std::move(c));
        }
    }
    return out;
}

/// Rational product over a common denominator: integer accumulation, one
/// canonicalization per output term.
std::vector<std::pair<Monomial, Rational>> multiply_terms_rational(
    const std::vector<std::pair<Monomial, Rational>>& a, const std::vector<std::pair<Monomial, Rational>>& b);

}  // namespace detail

template <class R>
Polynomial<R> Polynomial<R>::multiply(const Polynomial& a, const Polynomial& b)
{
    check_compatible(a, b);
    if (a.is_zero() || b.is_zero()) {
        return Polynomial(a.vars_);
    }
    if constexpr (std::is_same_v<R, Rational>) {
        return from_terms(a.vars_, detail::multiply_terms_rational(a.terms_, b.terms_));
    } else {
        return from_terms(a.vars_, detail::multiply_terms(a.terms_, b.terms_));
    }
}

/// a^k by binary exponentiation; k above the cap is rejected.
template <class R>
Polynomial<R> pow(const Polynomial<R>& a, unsigned k, unsigned cap = kDefaultPowerCap)
{
    if (k > cap) {
        throw PolynomialError("power " + std::to_string(k) + " exceeds the symbolic cap of " + std::to_string(cap) +
                              "; evaluate at points instead");
    }
    Polynomial<R> result = Polynomial<R>::constant(a.vars(), R(1));
    Polynomial<R> base = a;
    while (k != 0) {
        if (k & 1U) {
            result *= base;
        }
        k >>= 1U;
        if (k != 0) {
            base *= base;
        }
    }
    return result;
}

template <class R>
Polynomial<R> derivative(const Polynomial<R>& a, std::size_t var)
{
    if (var >= a.nvars()) {
        throw PolynomialError("derivative: variable index out of range");
    }
    std::vector<typename Polynomial<R>::Term> out;
    for (const auto& [m, c] : a.terms()) {
        const unsigned e = m.exponent(var);
        if (e != 0) {
            out.emplace_back(m.with_exponent(var, e - 1), c * R(static_cast<long>(e)));
        }
    }
    return Polynomial<R>::from_terms(a.vars(), std::move(out));
}

template <class R>
Polynomial<R> derivative(const Polynomial<R>& a, const std::string& var)
{
    return derivative(a, Polynomial<R>::index_of(*a.vars(), var));
}

namespace detail {

template <class S, class R>
S convert_coefficient(const R& c)
{
    if constexpr (std::is_same_v<S, R>) {
        return c;
    } else {
        return field_cast<S>(c);
    }
}

}  // namespace detail

/// Exact value at a point; coefficients are mapped into S by field_cast.
template <class S, class R>
S evaluate(const Polynomial<R>& a, std::span<const S> point)
{
    if (point.size() != a.nvars()) {
        throw PolynomialError("evaluate: point has " + std::to_string(point.size()) + " coordinates, expected " +
                              std::to_string(a.nvars()));
    }
    std::vector<unsigned> max_exp(a.nvars(), 0);
    for (const auto& t : a.terms()) {
        for (std::size_t i = 0; i < a.nvars(); ++i) {
            max_exp[i] = std::max(max_exp[i], t.first.exponent(i));
        }
    }
    std::vector<std::vector<S>> powers(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        powers[i].reserve(max_exp[i] + 1);
        powers[i].push_back(S(1));
        for (unsigned e = 1; e <= max_exp[i]; ++e) {
            powers[i].push_back(powers[i].back() * point[i]);
        }
    }
    S sum(0);
    for (const auto& [m, c] : a.terms()) {
        S term = detail::convert_coefficient<S>(c);
        for (std::size_t i = 0; i < a.nvars(); ++i) {
            const unsigned e = m.exponent(i);
            if (e != 0) {
                term = term * powers[i][e];
            }
        }
        sum += term;
    }
    return sum;
}

template <class S, class R>
S evaluate(const Polynomial<R>& a, const std::vector<S>& point)
{
    return evaluate<S, R>(a, std::span<const S>(point));
}

/// Substitutes each variable by its assigned polynomial (all over one target
/// ring); assignment[i] replaces variable i of a.
template <class R>
Polynomial<R> compose(const Polynomial<R>& a, const std::vector<Polynomial<R>>& assignment)
{
    if (assignment.size() != a.nvars()) {
        throw PolynomialError("compose: every variable needs an assignment");
    }
    if (assignment.empty()) {
        throw PolynomialError("compose: cannot infer the target ring of a constant");
    }
    const VarList& target = assignment.front().vars();
    for (const auto& p : assignment) {
        if (!same_vars(p.vars(), target)) {
            throw PolynomialError("compose: assignments live in different rings");
        }
    }
    std::vector<std::vector<Polynomial<R>>> powers(a.nvars());
    auto power = [&](std::size_t i, unsigned e) -> const Polynomial<R>& {
        auto& cache = powers[i];
        if (cache.empty()) {
            cache.push_back(Polynomial<R>::constant(target, R(1)));
        }
        while (cache.size() <= e) {
            cache.push_back(cache.back() * assignment[i]);
        }
        return cache[e];
    };
    Polynomial<R> sum(target);
    for (const auto& [m, c] : a.terms()) {
        // multiply the largest factor last so intermediate products stay small
        std::vector<std::pair<std::size_t, unsigned>> factors;
        for (std::size_t i = 0; i < a.nvars(); ++i) {
            if (m.exponent(i) != 0) {
                factors.emplace_back(i, m.exponent(i));
            }
        }
        std::sort(factors.begin(), factors.end(), [&](const auto& x, const auto& y) {
            return power(x.first, x.second).size() < power(y.first, y.second).size();
        });
        Polynomial<R> term = Polynomial<R>::constant(target, c);
        for (const auto& [i, e] : factors) {
            term = term * power(i, e);
        }
        sum += term;
    }
    return sum;
}

/// compose() with the assignment given by variable name.
template <class R>
Polynomial<R> compose(const Polynomial<R>& a, const std::map<std::string, Polynomial<R>>& assignment)
{
    std::vector<Polynomial<R>> ordered;
    ordered.reserve(a.nvars());
    for (const auto& name : *a.vars()) {
        const auto it = assignment.find(name);
        if (it == assignment.end()) {
            throw PolynomialError("compose: no assignment for '" + name + "'");
        }
        ordered.push_back(it->second);
    }
    return compose(a, ordered);
}

/// a(Mx): variable i becomes the linear form sum_j M(i, j) x_j.
template <class R>
Polynomial<R> linear_substitute(const Polynomial<R>& a, const Matrix<R>& M)
{
    const auto n = static_cast<Eigen::Index>(a.nvars());
    if (M.rows() != n || M.cols() != n) {
        throw PolynomialError("linear_substitute: matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    }
    // monomial matrices (one nonzero per row) permute and scale exponents
    std::vector<Eigen::Index> target(static_cast<std::size_t>(n), -1);
    bool monomial_matrix = true;
    for (Eigen::Index i = 0; i < n && monomial_matrix; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (!is_zero(M(i, j))) {
                if (target[static_cast<std::size_t>(i)] != -1) {
                    monomial_matrix = false;
                    break;
                }
                target[static_cast<std::size_t>(i)] = j;
            }
        }
        if (target[static_cast<std::size_t>(i)] == -1) {
            monomial_matrix = false;
        }
    }
    if (monomial_matrix) {
        std::vector<typename Polynomial<R>::Term> out;
        out.reserve(a.size());
        for (const auto& [m, c] : a.terms()) {
            std::vector<unsigned> e(a.nvars(), 0);
            R coeff = c;
            for (std::size_t i = 0; i < a.nvars(); ++i) {
                const unsigned k = m.exponent(i);
                if (k == 0) {
                    continue;
                }
                const auto j = static_cast<std::size_t>(target[i]);
                e[j] += k;
                R f = M(static_cast<Eigen::Index>(i), target[i]);
                for (unsigned r = 0; r < k; ++r) {
                    coeff = coeff * f;
                }
            }
            out.emplace_back(Monomial::from_exponents(e), std::move(coeff));
        }
        return Polynomial<R>::from_terms(a.vars(), std::move(out));
    }
    std::vector<Polynomial<R>> forms;
    forms.reserve(a.nvars());
    for (Eigen::Index i = 0; i < n; ++i) {
        std::vector<typename Polynomial<R>::Term> t;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (!is_zero(M(i, j))) {
                t.emplace_back(Monomial::variable(static_cast<std::size_t>(j)), M(i, j));
            }
        }
        forms.push_back(Polynomial<R>::from_terms(a.vars(), std::move(t)));
    }
    return compose(a, forms);
}

/// Per-variable degree bound used for identity-testing error estimates.
template <class R>
unsigned total_degree_bound(const Polynomial<R>& a)
{
    return a.is_zero() ? 0U : static_cast<unsigned>(a.degree());
}

}  // namespace st34

#endif  // ST34_POLYNOMIAL_HPP
