#ifndef ST34_PRIME_FIELD_HPP
#define ST34_PRIME_FIELD_HPP

#include "st34/rational.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>

namespace st34 {

/// Raised when a rational cannot be reduced modulo the chosen prime.
class BadPrime : public ArithmeticError {
public:
    BadPrime(std::uint64_t p, const std::string& what)
        : ArithmeticError("bad prime " + std::to_string(p) + ": " + what), prime_(p) {}
    std::uint64_t prime() const { return prime_; }

private:
    std::uint64_t prime_;
};

/// Element of Z/PZ for a prime P < 2^63. Multiplication goes through a
/// 128-bit intermediate product.
template <std::uint64_t P>
class Zp {
    static_assert(P > 2 && P < (std::uint64_t{1} << 63U), "modulus must fit in 63 bits");

public:
    static constexpr std::uint64_t modulus = P;

    constexpr Zp() = default;
    constexpr Zp(int v) : r_(reduce_signed(v)) {}  // NOLINT(google-explicit-constructor)
    constexpr Zp(long v) : r_(reduce_signed(v)) {}  // NOLINT(google-explicit-constructor)
    constexpr Zp(long long v) : r_(reduce_signed(static_cast<long>(v))) {}  // NOLINT(google-explicit-constructor)

    static constexpr Zp from_residue(std::uint64_t r)
    {
        Zp z;
        z.r_ = r % P;
        return z;
    }

    constexpr std::uint64_t residue() const { return r_; }
    constexpr bool is_zero() const { return r_ == 0; }

    constexpr Zp& operator+=(Zp o)
    {
        r_ += o.r_;
        if (r_ >= P) {
            r_ -= P;
        }
        return *this;
    }
    constexpr Zp& operator-=(Zp o)
    {
        r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + (P - o.r_);
        return *this;
    }
    constexpr Zp& operator*=(Zp o)
    {
        r_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r_) * o.r_) % P);
        return *this;
    }
    Zp& operator/=(Zp o) { return *this *= o.inverse(); }

    friend constexpr Zp operator+(Zp a, Zp b) { return a += b; }
    friend constexpr Zp operator-(Zp a, Zp b) { return a -= b; }
    friend constexpr Zp operator*(Zp a, Zp b) { return a *= b; }
    friend Zp operator/(Zp a, Zp b) { return a /= b; }
    constexpr Zp operator-() const { return Zp() - *this; }

    friend constexpr bool operator==(Zp a, Zp b) { return a.r_ == b.r_; }
    friend constexpr bool operator!=(Zp a, Zp b) { return a.r_ != b.r_; }

    constexpr Zp pow(std::uint64_t e) const
    {
        Zp base = *this;
        Zp acc = 1;
        while (e != 0) {
            if (e & 1U) {
                acc *= base;
            }
            base *= base;
            e >>= 1U;
        }
        return acc;
    }

    /// Inverse by the extended Euclidean algorithm.
    Zp inverse() const
    {
        if (r_ == 0) {
            throw ArithmeticError("inverse of zero mod " + std::to_string(P));
        }
        __int128 t = 0;
        __int128 new_t = 1;
        __int128 r = P;
        __int128 new_r = r_;
        while (new_r != 0) {
            const __int128 q = r / new_r;
            t = std::exchange(new_t, t - q * new_t);
            r = std::exchange(new_r, r - q * new_r);
        }
        if (t < 0) {
            t += P;
        }
        return from_residue(static_cast<std::uint64_t>(t));
    }

    std::string to_string() const { return std::to_string(r_); }

private:
    static constexpr std::uint64_t reduce_signed(long v)
    {
        if (v >= 0) {
            return static_cast<std::uint64_t>(v) % P;
        }
        const std::uint64_t m = (~static_cast<std::uint64_t>(v) + 1U) % P;
        return m == 0 ? 0 : P - m;
    }

    std::uint64_t r_ = 0;
};

/// The ten fixed 62-bit primes used for modular identity testing.
inline constexpr std::array<std::uint64_t, 10> kPrimes = {
    4611686018427387847ULL, 4611686018427387817ULL, 4611686018427387787ULL,
    4611686018427387761ULL, 4611686018427387751ULL, 4611686018427387737ULL,
    4611686018427387733ULL, 4611686018427387709ULL, 4611686018427387701ULL,
    4611686018427387631ULL,
};

inline std::uint64_t mod_integer(const Integer& x, std::uint64_t p)
{
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p);
    return r.get_ui();
}

/// Image of a rational in Z/PZ; throws BadPrime if P divides the denominator.
template <std::uint64_t P>
Zp<P> mod_project(const Rational& x)
{
    const std::uint64_t den = mod_integer(x.den_ref(), P);
    if (den == 0) {
        throw BadPrime(P, "divides the denominator of " + x.to_string());
    }
    return Zp<P>::from_residue(mod_integer(x.num_ref(), P)) * Zp<P>::from_residue(den).inverse();
}

/// Calls fn.template operator()<Zp<kPrimes[index]>>() for a runtime index.
template <class Fn>
decltype(auto) with_prime(std::size_t index, Fn&& fn)
{
    switch (index) {
    case 0: return fn.template operator()<Zp<kPrimes[0]>>();
    case 1: return fn.template operator()<Zp<kPrimes[1]>>();
    case 2: return fn.template operator()<Zp<kPrimes[2]>>();
    case 3: return fn.template operator()<Zp<kPrimes[3]>>();
    case 4: return fn.template operator()<Zp<kPrimes[4]>>();
    case 5: return fn.template operator()<Zp<kPrimes[5]>>();
    case 6: return fn.template operator()<Zp<kPrimes[6]>>();
    case 7: return fn.template operator()<Zp<kPrimes[7]>>();
    case 8: return fn.template operator()<Zp<kPrimes[8]>>();
    case 9: return fn.template operator()<Zp<kPrimes[9]>>();
    default: throw std::out_of_range("prime index " + std::to_string(index));
    }
}

template <class T>
struct is_prime_field : std::false_type {};
template <std::uint64_t P>
struct is_prime_field<Zp<P>> : std::true_type {};
template <class T>
inline constexpr bool is_prime_field_v = is_prime_field<T>::value;

}  // namespace st34

#endif  // ST34_PRIME_FIELD_HPP
