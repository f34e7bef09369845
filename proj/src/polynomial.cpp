#include "st34/polynomial.hpp"

namespace st34 {

VarList make_vars(std::vector<std::string> names)
{
    if (names.size() > kMaxVariables) {
        throw PolynomialError("at most 8 variables are supported");
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (names[i] == names[j]) {
                throw PolynomialError("duplicate variable '" + names[i] + "'");
            }
        }
    }
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

VarList numbered_vars(const std::string& prefix, std::size_t n)
{
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        names.push_back(prefix + std::to_string(i));
    }
    return make_vars(std::move(names));
}

bool same_vars(const VarList& a, const VarList& b)
{
    if (a == b) {
        return true;
    }
    if (!a || !b) {
        return false;
    }
    return *a == *b;
}

namespace detail {

namespace {

/// Integer numerators over the common denominator of all coefficients.
Integer clear_denominators(const std::vector<std::pair<Monomial, Rational>>& terms, std::vector<Integer>& out)
{
    Integer common = 1;
    for (const auto& t : terms) {
        mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), t.second.den_ref().get_mpz_t());
    }
    out.clear();
    out.reserve(terms.size());
    for (const auto& t : terms) {
        Integer scaled;
        mpz_divexact(scaled.get_mpz_t(), common.get_mpz_t(), t.second.den_ref().get_mpz_t());
        scaled *= t.second.num_ref();
        out.push_back(std::move(scaled));
    }
    return common;
}

}  // namespace

std::vector<std::pair<Monomial, Rational>> multiply_terms_rational(
    const std::vector<std::pair<Monomial, Rational>>& a, const std::vector<std::pair<Monomial, Rational>>& b)
{
    std::vector<Integer> ia;
    std::vector<Integer> ib;
    const Integer da = clear_denominators(a, ia);
    const Integer db = clear_denominators(b, ib);

    std::unordered_map<std::uint64_t, Integer> acc;
    acc.reserve(std::min<std::size_t>(a.size() * b.size(), std::size_t{1} << 22U));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            const Monomial m = a[i].first * b[j].first;
            Integer& slot = acc[m.bits()];
            mpz_addmul(slot.get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
        }
    }
    const Integer den = da * db;
    std::vector<std::pair<Monomial, Rational>> out;
    out.reserve(acc.size());
    for (auto& [bits, num] : acc) {
        if (sgn(num) != 0) {
            out.emplace_back(Monomial::from_bits(bits), rational_reduce(num, den));
        }
    }
    return out;
}

}  // namespace detail

}  // namespace st34
