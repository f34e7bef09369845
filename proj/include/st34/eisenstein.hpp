#ifndef ST34_EISENSTEIN_HPP
#define ST34_EISENSTEIN_HPP

#include "st34/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace st34 {

/// Element a + b*w of the ring T[w], with w a primitive cube root of unity
/// (w^2 = -1 - w). T is any commutative ring scalar: Rational for Q(w),
/// integers for Z[w], a prime field for modular evaluation.
template <class T>
struct Eisenstein {
    T re;  // coefficient of 1
    T w;   // coefficient of w

    Eisenstein() : re(0), w(0) {}
    Eisenstein(T a) : re(std::move(a)), w(0) {}  // NOLINT(google-explicit-constructor)
    Eisenstein(int a) : re(a), w(0) {}  // NOLINT(google-explicit-constructor)
    Eisenstein(T a, T b) : re(std::move(a)), w(std::move(b)) {}

    static Eisenstein omega() { return Eisenstein(T(0), T(1)); }
    /// theta = w - conj(w) = 1 + 2w, a square root of -3.
    static Eisenstein theta() { return Eisenstein(T(1), T(2)); }

    bool is_zero() const { return re == T(0) && w == T(0); }

    Eisenstein& operator+=(const Eisenstein& o) { re += o.re; w += o.w; return *this; }
    Eisenstein& operator-=(const Eisenstein& o) { re -= o.re; w -= o.w; return *this; }
    Eisenstein& operator*=(const Eisenstein& o)
    {
        // (a + bw)(c + dw) = (ac - bd) + (ad + bc - bd) w
        T bd = w * o.w;
        T nre = re * o.re - bd;
        T nw = re * o.w + w * o.re - bd;
        re = std::move(nre);
        w = std::move(nw);
        return *this;
    }
    Eisenstein& operator*=(const T& s) { re *= s; w *= s; return *this; }

    friend Eisenstein operator+(Eisenstein a, const Eisenstein& b) { return a += b; }
    friend Eisenstein operator-(Eisenstein a, const Eisenstein& b) { return a -= b; }
    friend Eisenstein operator*(Eisenstein a, const Eisenstein& b) { return a *= b; }
    friend Eisenstein operator*(Eisenstein a, const T& s) { return a *= s; }
    friend Eisenstein operator*(const T& s, Eisenstein a) { return a *= s; }
    Eisenstein operator-() const { return Eisenstein(T(0) - re, T(0) - w); }

    friend bool operator==(const Eisenstein& a, const Eisenstein& b) { return a.re == b.re && a.w == b.w; }
    friend bool operator!=(const Eisenstein& a, const Eisenstein& b) { return !(a == b); }

    /// a + b*conj(w) = (a - b) - b*w
    Eisenstein conj() const { return Eisenstein(re - w, T(0) - w); }

    /// a^2 - ab + b^2 = x * conj(x)
    T norm() const { return re * re - re * w + w * w; }

    Eisenstein& operator/=(const Eisenstein& o)
    {
        const T n = o.norm();
        if (n == T(0)) {
            throw ArithmeticError("Eisenstein division by zero");
        }
        *this *= o.conj();
        re = re / n;
        w = w / n;
        return *this;
    }
    friend Eisenstein operator/(Eisenstein a, const Eisenstein& b) { return a /= b; }
};

template <class T>
Eisenstein<T> pow(Eisenstein<T> base, unsigned long exponent)
{
    Eisenstein<T> result(T(1));
    while (exponent != 0) {
        if (exponent & 1UL) {
            result *= base;
        }
        exponent >>= 1U;
        if (exponent != 0) {
            base *= base;
        }
    }
    return result;
}

/// u^n for a unit u = +-w^a of Z[w]; the exponent is reduced mod 6.
template <class T>
Eisenstein<T> unit_pow(const Eisenstein<T>& u, long long n)
{
    if (!(u.norm() == T(1))) {
        throw ArithmeticError("unit_pow of a non-unit");
    }
    long long r = n % 6;
    if (r < 0) {
        r += 6;
    }
    return pow(u, static_cast<unsigned long>(r));
}

/// The six units of Z[w] as (-w)^k, k = 0..5.
template <class T>
Eisenstein<T> unit(int k)
{
    return unit_pow(-Eisenstein<T>::omega(), k);
}

template <class To, class From>
Eisenstein<To> eisenstein_cast(const Eisenstein<From>& x)
{
    return Eisenstein<To>(To(x.re), To(x.w));
}

using QOmega = Eisenstein<Rational>;

/// "a+b*w" (or "a-b*w" for negative b), both parts in Rational text form.
std::string to_string(const QOmega& x);
QOmega parse_qomega(std::string_view text);

}  // namespace st34

#endif  // ST34_EISENSTEIN_HPP
