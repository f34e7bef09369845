#include "st34/linalg.hpp"

namespace st34 {

namespace {

/// Forward Bareiss elimination in place on the first `ncols` columns of an
/// n x m integer matrix. Returns the sign of the row permutation, or 0 when
/// singular. After the call a(n-1, n-1) is +-det of the leading block.
int bareiss_forward(Matrix<Integer>& a, Eigen::Index ncols)
{
    const Eigen::Index n = a.rows();
    const Eigen::Index m = a.cols();
    int sign = 1;
    Integer prev = 1;
    Integer t;
    for (Eigen::Index k = 0; k < ncols; ++k) {
        Eigen::Index piv = k;
        while (piv < n && sgn(a(piv, k)) == 0) {
            ++piv;
        }
        if (piv == n) {
            return 0;
        }
        if (piv != k) {
            for (Eigen::Index j = 0; j < m; ++j) {
                std::swap(a(k, j), a(piv, j));
            }
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < m; ++j) {
                // a_ij = (a_kk a_ij - a_ik a_kj) / prev
                mpz_mul(t.get_mpz_t(), a(k, k).get_mpz_t(), a(i, j).get_mpz_t());
                mpz_submul(t.get_mpz_t(), a(i, k).get_mpz_t(), a(k, j).get_mpz_t());
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign;
}

/// Integer rows proportional to the rational rows of [a | b].
Matrix<Integer> clear_rows(const Matrix<Rational>& a, const Vector<Rational>* b, Integer* scale_product)
{
    const Eigen::Index n = a.rows();
    const Eigen::Index m = a.cols() + (b != nullptr ? 1 : 0);
    Matrix<Integer> out(n, m);
    if (scale_product != nullptr) {
        *scale_product = 1;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        Integer l = 1;
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).den_ref().get_mpz_t());
        }
        if (b != nullptr) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*b)(i).den_ref().get_mpz_t());
        }
        for (Eigen::Index j = 0; j < m; ++j) {
            const Rational& v = j < a.cols() ? a(i, j) : (*b)(i);
            out(i, j) = exact_quotient(l, v.den_ref()) * v.num_ref();
        }
        if (scale_product != nullptr) {
            *scale_product *= l;
        }
    }
    return out;
}

}  // namespace

Integer bareiss_determinant(Matrix<Integer> a)
{
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("determinant of a non-square matrix");
    }
    if (a.rows() == 0) {
        return 1;
    }
    const int sign = bareiss_forward(a, a.cols());
    if (sign == 0) {
        return 0;
    }
    Integer d = a(a.rows() - 1, a.cols() - 1);
    return sign < 0 ? Integer(-d) : d;
}

Rational determinant(const Matrix<Rational>& a)
{
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("determinant of a non-square matrix");
    }
    Integer scale;
    const Matrix<Integer> ints = clear_rows(a, nullptr, &scale);
    return rational_reduce(bareiss_determinant(ints), scale);
}

std::optional<Vector<Rational>> solve(const Matrix<Rational>& a, const Vector<Rational>& b)
{
    const Eigen::Index n = a.rows();
    if (a.cols() != n || b.size() != n) {
        throw std::invalid_argument("solve needs a square system");
    }
    if (n == 0) {
        return Vector<Rational>(0);
    }
    Matrix<Integer> aug = clear_rows(a, &b, nullptr);
    if (bareiss_forward(aug, n) == 0) {
        return std::nullopt;
    }
    // Fraction-free back substitution: with D = aug(n-1, n-1) (= +-det),
    // N_i = (D b_i - sum_{j>i} a_ij N_j) / a_ii is integral and x_i = N_i / D.
    const Integer det = aug(n - 1, n - 1);
    std::vector<Integer> num(static_cast<std::size_t>(n));
    Integer s;
    Integer r;
    for (Eigen::Index i = n; i-- > 0;) {
        mpz_mul(s.get_mpz_t(), det.get_mpz_t(), aug(i, n).get_mpz_t());
        for (Eigen::Index j = i + 1; j < n; ++j) {
            mpz_submul(s.get_mpz_t(), aug(i, j).get_mpz_t(), num[static_cast<std::size_t>(j)].get_mpz_t());
        }
        auto& q = num[static_cast<std::size_t>(i)];
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t(), aug(i, i).get_mpz_t());
        if (sgn(r) != 0) {
            throw ArithmeticError("fraction-free back substitution lost exactness");
        }
    }
    Vector<Rational> x(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        x(i) = rational_reduce(num[static_cast<std::size_t>(i)], det);
    }
    return x;
}

}  // namespace st34
