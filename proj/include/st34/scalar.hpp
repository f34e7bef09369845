#ifndef ST34_SCALAR_HPP
#define ST34_SCALAR_HPP

#include "st34/eisenstein.hpp"
#include "st34/prime_field.hpp"
#include "st34/rational.hpp"

#include <Eigen/Core>

#include <string>
#include <type_traits>

namespace st34 {

template <class T>
struct is_eisenstein : std::false_type {};
template <class T>
struct is_eisenstein<Eisenstein<T>> : std::true_type {};
template <class T>
inline constexpr bool is_eisenstein_v = is_eisenstein<T>::value;

/// Maps an exact rational into the scalar ring F (Q, a prime field, or T[w]).
template <class F>
F field_cast(const Rational& x)
{
    if constexpr (std::is_same_v<F, Rational>) {
        return x;
    } else if constexpr (is_prime_field_v<F>) {
        return mod_project<F::modulus>(x);
    } else if constexpr (is_eisenstein_v<F>) {
        using Base = decltype(F{}.re);
        return F(field_cast<Base>(x));
    } else {
        static_assert(sizeof(F) == 0, "no rational embedding for this scalar");
    }
}

/// Maps an element of Q(w) into F; F must itself be an Eisenstein ring.
template <class F>
F field_cast(const QOmega& x)
{
    if constexpr (std::is_same_v<F, QOmega>) {
        return x;
    } else {
        static_assert(is_eisenstein_v<F>, "Q(w) element needs an Eisenstein target");
        using Base = decltype(F{}.re);
        return F(field_cast<Base>(x.re), field_cast<Base>(x.w));
    }
}

inline bool is_zero(const Rational& x) { return x.is_zero(); }
template <std::uint64_t P>
bool is_zero(const Zp<P>& x) { return x.is_zero(); }
template <class T>
bool is_zero(const Eisenstein<T>& x) { return x.is_zero(); }
inline bool is_zero(long x) { return x == 0; }
inline bool is_zero(const Integer& x) { return sgn(x) == 0; }

inline std::string scalar_to_string(const Rational& x) { return x.to_string(); }
inline std::string scalar_to_string(const QOmega& x) { return to_string(x); }
template <std::uint64_t P>
std::string scalar_to_string(const Zp<P>& x) { return x.to_string(); }

}  // namespace st34

namespace Eigen {

template <>
struct NumTraits<st34::Rational> : GenericNumTraits<st34::Rational> {
    using Real = st34::Rational;
    using NonInteger = st34::Rational;
    using Nested = st34::Rational;
    using Literal = st34::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 50,
        MulCost = 100,
    };
    static inline int digits10() { return 0; }
};

template <class T>
struct NumTraits<st34::Eisenstein<T>> : GenericNumTraits<st34::Eisenstein<T>> {
    using Real = st34::Eisenstein<T>;
    using NonInteger = st34::Eisenstein<T>;
    using Nested = st34::Eisenstein<T>;
    using Literal = st34::Eisenstein<T>;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 20,
        AddCost = 100,
        MulCost = 400,
    };
    static inline int digits10() { return 0; }
};

template <std::uint64_t P>
struct NumTraits<st34::Zp<P>> : GenericNumTraits<st34::Zp<P>> {
    using Real = st34::Zp<P>;
    using NonInteger = st34::Zp<P>;
    using Nested = st34::Zp<P>;
    using Literal = st34::Zp<P>;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 8,
    };
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace st34 {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using Matrix6 = Eigen::Matrix<Scalar, 6, 6>;
template <class Scalar>
using Vector6 = Eigen::Matrix<Scalar, 6, 1>;

}  // namespace st34

#endif  // ST34_SCALAR_HPP
