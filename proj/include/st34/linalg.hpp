#ifndef ST34_LINALG_HPP
#define ST34_LINALG_HPP

#include "st34/scalar.hpp"

#include <optional>
#include <utility>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    using Real = mpz_class;
    using NonInteger = st34::Rational;
    using Nested = mpz_class;
    using Literal = mpz_class;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 50,
        MulCost = 100,
    };
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace st34 {

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
Integer bareiss_determinant(Matrix<Integer> a);

/// Exact determinant: rows are cleared of denominators, then Bareiss.
Rational determinant(const Matrix<Rational>& a);

/// Unique solution of a x = b by fraction-free elimination and back
/// substitution; nullopt when a is singular.
std::optional<Vector<Rational>> solve(const Matrix<Rational>& a, const Vector<Rational>& b);

/// Determinant over a field by Gaussian elimination (prime fields, Q(w)).
template <class F>
F gauss_determinant(Matrix<F> a)
{
    const Eigen::Index n = a.rows();
    F det(1);
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index piv = k;
        while (piv < n && is_zero(a(piv, k))) {
            ++piv;
        }
        if (piv == n) {
            return F(0);
        }
        if (piv != k) {
            a.row(k).swap(a.row(piv));
            det = F(0) - det;
        }
        det = det * a(k, k);
        const F inv = F(1) / a(k, k);
        for (Eigen::Index i = k + 1; i < n; ++i) {
            if (is_zero(a(i, k))) {
                continue;
            }
            const F f = a(i, k) * inv;
            for (Eigen::Index j = k; j < n; ++j) {
                a(i, j) = a(i, j) - f * a(k, j);
            }
        }
    }
    return det;
}

/// Solution of a x = b over a field; nullopt when singular.
template <class F>
std::optional<Vector<F>> gauss_solve(Matrix<F> a, Vector<F> b)
{
    const Eigen::Index n = a.rows();
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index piv = k;
        while (piv < n && is_zero(a(piv, k))) {
            ++piv;
        }
        if (piv == n) {
            return std::nullopt;
        }
        if (piv != k) {
            a.row(k).swap(a.row(piv));
            std::swap(b(k), b(piv));
        }
        const F inv = F(1) / a(k, k);
        for (Eigen::Index i = k + 1; i < n; ++i) {
            if (is_zero(a(i, k))) {
                continue;
            }
            const F f = a(i, k) * inv;
            for (Eigen::Index j = k; j < n; ++j) {
                a(i, j) = a(i, j) - f * a(k, j);
            }
            b(i) = b(i) - f * b(k);
        }
    }
    Vector<F> x(n);
    for (Eigen::Index i = n; i-- > 0;) {
        F s = b(i);
        for (Eigen::Index j = i + 1; j < n; ++j) {
            s = s - a(i, j) * x(j);
        }
        x(i) = s / a(i, i);
    }
    return x;
}

template <class F>
Matrix<F> matmul(const Matrix<F>& a, const Matrix<F>& b)
{
    Matrix<F> c(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
            F s(0);
            for (Eigen::Index k = 0; k < a.cols(); ++k) {
                s = s + a(i, k) * b(k, j);
            }
            c(i, j) = s;
        }
    }
    return c;
}

}  // namespace st34

#endif  // ST34_LINALG_HPP
