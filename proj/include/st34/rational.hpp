#ifndef ST34_RATIONAL_HPP
#define ST34_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace st34 {

using Integer = mpz_class;

/// Thrown for arithmetic that has no exact answer (division by zero, bad modulus).
class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over mpq_class. The wrapper exists so that the type
/// works as an Eigen scalar and as a polynomial coefficient without leaking
/// gmpxx expression templates into generic code.
class Rational {
public:
    Rational() = default;
    Rational(int v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long long v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    Rational(unsigned long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    explicit Rational(mpq_class&& v) : v_(std::move(v)) { v_.canonicalize(); }

    const mpq_class& value() const { return v_; }
    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }
    const mpz_class& num_ref() const { return v_.get_num(); }
    const mpz_class& den_ref() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero()) {
            throw ArithmeticError("rational division by zero");
        }
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational inverse() const { return Rational(1) / *this; }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    /// "num/den", with "/den" omitted when the denominator is 1.
    std::string to_string() const;
    static Rational parse(std::string_view text);

private:
    mpq_class v_;
};

/// Canonical rational n/d; d == 0 is an error.
Rational rational_reduce(const Integer& n, const Integer& d);

Rational pow(const Rational& base, long exponent);

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// a / b for integers known to divide exactly.
inline Integer exact_quotient(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer lcm(const Integer& a, const Integer& b);

}  // namespace st34

#endif  // ST34_RATIONAL_HPP
