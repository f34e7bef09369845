#ifndef ST34_ST33_HPP
#define ST34_ST33_HPP

#include "st34/idcheck.hpp"
#include "st34/invariants.hpp"

#include <array>
#include <vector>

namespace st34 {

const VarList& xy_vars();  // x1 x2 x3 x4 y
const VarList& r_vars();   // r3 r4 r6 r9 y

/// Weights of r3, r4, r6, r9, y.
inline constexpr std::array<unsigned, 5> kRWeights = {3, 4, 6, 9, 1};
/// Degrees of the tabulated J's.
inline constexpr std::array<unsigned, 5> kJDegrees = {4, 6, 10, 12, 18};

/// x5 -> y, x6 -> y.
Polynomial<Rational> restrict_to_y(const Polynomial<Rational>& f);

/// r3, r4, r6, r9, y as polynomials in x1..x4, y.
std::vector<Polynomial<Rational>> r_basics_xy();

template <class S>
std::vector<S> r_values(std::span<const S> xy)
{
    S r3(0);
    S r6(0);
    S r9(0);
    S r4(1);
    for (std::size_t i = 0; i < 4; ++i) {
        const S c = xy[i] * xy[i] * xy[i];
        r3 += c;
        r6 += c * c;
        r9 += c * c * c;
        r4 *= xy[i];
    }
    return {r3, r4, r6, r9, xy[4]};
}

/// p3..p15, s6 at (x1, x2, x3, x4, y, y).
template <class S>
std::vector<S> restricted_basis_values(std::span<const S> xy)
{
    const std::vector<S> x = {xy[0], xy[1], xy[2], xy[3], xy[4], xy[4]};
    return g336_values<S>(x);
}

/// Monomials in r3, r4, r6, r9, y of weighted degree d.
std::vector<Monomial> r_monomials(unsigned d);

/// Rewrites a polynomial in x1..x4, y of degree d in r3, r4, r6, r9, y; the
/// result is checked symbolically and NotInRing is thrown if it fails.
Polynomial<Rational> rewrite_in_r(const Polynomial<Rational>& f_xy, unsigned d, Rng& rng);

/// m_k restricted and written in r-symbols.
Polynomial<Rational> restricted_m(const InvariantTables& t, unsigned k, Rng& rng);

struct JInvariants {
    std::array<Polynomial<Rational>, 5> j;  // J4, J6, J10, J12, J18 in r3, r4, r6, r9, y
};
/// J4, J10 from the printed formulas; J6, J12, J18 re-derived from m1, m2, m3.
JInvariants j_invariants(const InvariantTables& t, const PolyTable& jtable, std::uint64_t seed = kDefaultSeed);

/// Derived J6, J12, J18 against the printed tables; J-degrees.
std::vector<VerificationReport> verify_j_tables(const InvariantTables& t, const PolyTable& jtable,
                                                std::uint64_t seed = kDefaultSeed);

/// restrict(m_k in x) equals m_k composed with the restricted basics, for k = 1, 2, 3.
std::vector<VerificationReport> verify_restriction_two_ways(const InvariantTables& t);

/// J24, J30, J42 relations: m_k restricted against the printed right-hand sides.
std::vector<VerificationReport> verify_j_relations(const InvariantTables& t, const PolyTable& jtable,
                                                   const PolyTable& relations, Mode mode, const CheckOptions& opt);

/// Every monomial of each relation right-hand side has weight 24, 30, 42 under deg J_d = d.
std::vector<VerificationReport> relation_homogeneity(const PolyTable& relations);

}  // namespace st34

#endif  // ST34_ST33_HPP
