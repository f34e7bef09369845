#include "st34/rational.hpp"

#include <cctype>
#include <ostream>

namespace st34 {

namespace {

bool is_decimal_integer(std::string_view s)
{
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        i = 1;
    }
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

Integer parse_integer(std::string_view s)
{
    if (!is_decimal_integer(s)) {
        throw std::invalid_argument("not a decimal integer: '" + std::string(s) + "'");
    }
    if (s[0] == '+') {
        s.remove_prefix(1);
    }
    return Integer(std::string(s), 10);
}

}  // namespace

std::string Rational::to_string() const
{
    if (v_.get_den() == 1) {
        return v_.get_num().get_str();
    }
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    const auto den = text.substr(slash + 1);
    if (!den.empty() && (den[0] == '-' || den[0] == '+')) {
        throw std::invalid_argument("denominator carries a sign: '" + std::string(text) + "'");
    }
    return rational_reduce(parse_integer(text.substr(0, slash)), parse_integer(den));
}

Rational rational_reduce(const Integer& n, const Integer& d)
{
    if (d == 0) {
        throw ArithmeticError("zero denominator");
    }
    mpq_class q(n, d);
    return Rational(std::move(q));
}

Rational pow(const Rational& base, long exponent)
{
    if (exponent < 0) {
        return pow(base.inverse(), -exponent);
    }
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.num_ref().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.den_ref().get_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(mpq_class(num, den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.to_string();
}

Integer lcm(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace st34
