#include "st34/groups.hpp"

#include <set>
#include <stdexcept>

namespace st34 {

bool GroupElement::is_rational() const
{
    for (Eigen::Index i = 0; i < 6; ++i) {
        for (Eigen::Index j = 0; j < 6; ++j) {
            if (!matrix(i, j).w.is_zero()) {
                return false;
            }
        }
    }
    return true;
}

Matrix<Rational> GroupElement::rational_matrix() const
{
    if (!is_rational()) {
        throw std::logic_error(label + " is not a rational matrix");
    }
    Matrix<Rational> m(6, 6);
    for (Eigen::Index i = 0; i < 6; ++i) {
        for (Eigen::Index j = 0; j < 6; ++j) {
            m(i, j) = matrix(i, j).re;
        }
    }
    return m;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b)
{
    GroupElement c;
    for (Eigen::Index i = 0; i < 6; ++i) {
        for (Eigen::Index j = 0; j < 6; ++j) {
            QOmega s;
            for (Eigen::Index k = 0; k < 6; ++k) {
                s += a.matrix(i, k) * b.matrix(k, j);
            }
            c.matrix(i, j) = s;
        }
    }
    c.label = a.label + (a.label.empty() || b.label.empty() ? "" : "*") + b.label;
    return c;
}

GroupElement identity_element()
{
    GroupElement g;
    for (Eigen::Index i = 0; i < 6; ++i) {
        for (Eigen::Index j = 0; j < 6; ++j) {
            g.matrix(i, j) = QOmega(i == j ? 1 : 0);
        }
    }
    g.label = "I";
    return g;
}

GroupElement reflection(const std::array<QOmega, 6>& form, std::string label)
{
    Rational nn = 0;
    for (const auto& c : form) {
        nn += c.norm();
    }
    if (nn.is_zero()) {
        throw std::invalid_argument("reflection needs a nonzero form");
    }
    // <x, n> = sum_j x_j conj(n_j) = sum_j form_j x_j, so row i of (x -> <x,n> n) is n_i * form
    const Rational factor = Rational(2) / nn;
    GroupElement g = identity_element();
    for (std::size_t i = 0; i < 6; ++i) {
        const QOmega n_i = form[i].conj();
        for (std::size_t j = 0; j < 6; ++j) {
            g.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) -= n_i * form[j] * factor;
        }
    }
    g.label = std::move(label);
    return g;
}

std::array<QOmega, 6> generator_hyperplane(const std::string& name)
{
    std::array<QOmega, 6> f;
    auto difference = [&](std::size_t i, std::size_t j, const QOmega& c) {
        f[i] = QOmega(1);
        f[j] = -c;
    };
    if (name == "P1") {
        difference(1, 2, QOmega(1));
    } else if (name == "P2") {
        difference(2, 3, QOmega(1));
    } else if (name == "P3") {
        difference(3, 4, QOmega(1));
    } else if (name == "Q1") {
        difference(0, 1, QOmega(1));
    } else if (name == "R1") {
        difference(0, 1, QOmega::omega());
    } else if (name == "R2") {
        f.fill(QOmega(1));
    } else {
        throw std::invalid_argument("unknown generator '" + name + "'");
    }
    return f;
}

GroupElement generator(const std::string& name)
{
    return reflection(generator_hyperplane(name), name);
}

std::vector<GroupElement> generators()
{
    std::vector<GroupElement> gens;
    for (const auto& n : kGeneratorNames) {
        gens.push_back(generator(n));
    }
    return gens;
}

GroupElement central_element()
{
    GroupElement g = identity_element();
    for (Eigen::Index i = 0; i < 6; ++i) {
        g.matrix(i, i) = -QOmega::omega();
    }
    g.label = "-wI";
    return g;
}

Vector6<QOmega> apply(const GroupElement& g, const Vector6<QOmega>& x)
{
    Vector6<QOmega> y;
    for (Eigen::Index i = 0; i < 6; ++i) {
        QOmega s;
        for (Eigen::Index j = 0; j < 6; ++j) {
            s += g.matrix(i, j) * x(j);
        }
        y(i) = s;
    }
    return y;
}

Polynomial<QOmega> to_qomega(const Polynomial<Rational>& f)
{
    return f.map_coefficients<QOmega>([](const Rational& c) { return QOmega(c); });
}

Polynomial<Rational> to_rational(const Polynomial<QOmega>& f)
{
    return f.map_coefficients<Rational>([](const QOmega& c) {
        if (!c.w.is_zero()) {
            throw ArithmeticError("coefficient " + to_string(c) + " is not rational");
        }
        return c.re;
    });
}

Polynomial<QOmega> act(const GroupElement& g, const Polynomial<QOmega>& f)
{
    if (f.nvars() != 6) {
        throw PolynomialError("group elements act on polynomials in six variables");
    }
    return linear_substitute(f, Matrix<QOmega>(g.matrix));
}

Polynomial<QOmega> act(const GroupElement& g, const Polynomial<Rational>& f)
{
    if (g.is_rational()) {
        if (f.nvars() != 6) {
            throw PolynomialError("group elements act on polynomials in six variables");
        }
        return to_qomega(linear_substitute(f, g.rational_matrix()));
    }
    return act(g, to_qomega(f));
}

bool is_invariant(const Polynomial<Rational>& f, const std::vector<GroupElement>& gens)
{
    const Polynomial<QOmega> fq = to_qomega(f);
    for (const auto& g : gens) {
        if (act(g, f) != fq) {
            return false;
        }
    }
    return true;
}

bool permutes_minimal_vectors(const GroupElement& g)
{
    std::set<std::string> original;
    for (const auto& v : minimal_vectors()) {
        original.insert(to_string(v.coords));
    }
    std::set<std::string> image;
    for (const auto& v : minimal_vectors()) {
        Vector6<QOmega> x;
        for (Eigen::Index i = 0; i < 6; ++i) {
            x(i) = QOmega(Rational(v.coords[static_cast<std::size_t>(i)].re),
                          Rational(v.coords[static_cast<std::size_t>(i)].w));
        }
        const Vector6<QOmega> y = apply(g, x);
        EisVec6 z;
        for (Eigen::Index i = 0; i < 6; ++i) {
            if (!y(i).re.is_integer() || !y(i).w.is_integer()) {
                return false;
            }
            z[static_cast<std::size_t>(i)] = EisInt(y(i).re.num_ref().get_si(), y(i).w.num_ref().get_si());
        }
        image.insert(to_string(z));
    }
    return image == original;
}

int rank_of_difference_from_identity(const GroupElement& g)
{
    Matrix<QOmega> a(6, 6);
    for (Eigen::Index i = 0; i < 6; ++i) {
        for (Eigen::Index j = 0; j < 6; ++j) {
            a(i, j) = g.matrix(i, j) - QOmega(i == j ? 1 : 0);
        }
    }
    int rank = 0;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < 6 && row < 6; ++col) {
        Eigen::Index piv = row;
        while (piv < 6 && a(piv, col).is_zero()) {
            ++piv;
        }
        if (piv == 6) {
            continue;
        }
        a.row(row).swap(a.row(piv));
        for (Eigen::Index i = row + 1; i < 6; ++i) {
            const QOmega f = a(i, col) / a(row, col);
            for (Eigen::Index j = col; j < 6; ++j) {
                a(i, j) -= f * a(row, j);
            }
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace st34
