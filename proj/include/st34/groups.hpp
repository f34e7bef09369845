#ifndef ST34_GROUPS_HPP
#define ST34_GROUPS_HPP

#include "st34/lattice.hpp"
#include "st34/polynomial.hpp"

#include <array>
#include <string>
#include <vector>

namespace st34 {

/// 6x6 matrix over Q(w) acting on column vectors x.
struct GroupElement {
    Matrix6<QOmega> matrix;
    std::string label;

    /// True when every entry lies in Q.
    bool is_rational() const;
    Matrix<Rational> rational_matrix() const;
    friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
    friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.matrix == b.matrix; }
};

inline const std::array<std::string, 6> kGeneratorNames = {"P1", "P2", "P3", "Q1", "R1", "R2"};

GroupElement identity_element();

/// Order-2 unitary reflection r(x) = x - 2<x,n>/<n,n> n fixing the
/// hyperplane sum_i form[i] x_i = 0, where n = conj(form).
GroupElement reflection(const std::array<QOmega, 6>& form, std::string label = {});

/// Linear form of the hyperplane fixed by a named generator.
std::array<QOmega, 6> generator_hyperplane(const std::string& name);
GroupElement generator(const std::string& name);
std::vector<GroupElement> generators();

/// The central element -w I.
GroupElement central_element();

Vector6<QOmega> apply(const GroupElement& g, const Vector6<QOmega>& x);

/// f o g, i.e. f(gx). Right action: act(g*h, f) = act(h, act(g, f)).
Polynomial<QOmega> act(const GroupElement& g, const Polynomial<QOmega>& f);
/// Rational input; the computation stays in Q when g is rational.
Polynomial<QOmega> act(const GroupElement& g, const Polynomial<Rational>& f);

Polynomial<QOmega> to_qomega(const Polynomial<Rational>& f);
/// Throws if some coefficient has a nonzero w-part.
Polynomial<Rational> to_rational(const Polynomial<QOmega>& f);

/// Symbolic test f o g == f for every g.
bool is_invariant(const Polynomial<Rational>& f, const std::vector<GroupElement>& gens);

/// Whether g maps the 756 minimal vectors onto themselves.
bool permutes_minimal_vectors(const GroupElement& g);

/// rank(g - I) over Q(w).
int rank_of_difference_from_identity(const GroupElement& g);

}  // namespace st34

#endif  // ST34_GROUPS_HPP
