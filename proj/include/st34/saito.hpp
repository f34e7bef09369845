#ifndef ST34_SAITO_HPP
#define ST34_SAITO_HPP

#include "st34/idcheck.hpp"
#include "st34/invariants.hpp"
#include "st34/poly_io.hpp"

#include <array>
#include <filesystem>
#include <stdexcept>
#include <vector>

namespace st34 {

/// Weights of u1..u6: j/7 for j <= 5 and 1 for u6.
struct WeightSystem {
    std::array<Rational, 6> w;

    static WeightSystem st34();
    /// sum_i e_i w_i
    Rational weight(const Monomial& m) const;
    /// The common weight of all terms, or nullopt if not weighted-homogeneous.
    std::optional<Rational> weighted_degree(const Polynomial<Rational>& p) const;
};

const VarList& u_vars();   // u1..u6
const VarList& ut_vars();  // t1..t6, the rationalized coordinates
const VarList& f_vars();   // f1..f6

using PolyMatrix = std::array<std::array<Polynomial<Rational>, 6>, 6>;

struct PotentialField {
    std::array<Polynomial<Rational>, 6> h;
};
PotentialField load_potential_field(const std::filesystem::path& dir = default_tables_dir());

class SaitoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SaitoData {
    WeightSystem weights;
    PolyMatrix C;  // C_ij = d h_j / d u_i
    PolyMatrix T;  // T = E C
};

/// Euler operator sum_j w_j u_j d/du_j.
Polynomial<Rational> euler(const WeightSystem& ws, const Polynomial<Rational>& p);

/// Builds C and T; T is computed entrywise by E and by the Euler shortcut,
/// and a disagreement throws SaitoError.
SaitoData build_saito_data(const PotentialField& field, const WeightSystem& ws = WeightSystem::st34());

/// Per-term homogeneity of each h_j with weight w_j + 1, plus E(h_j) = (w_j + 1) h_j.
std::vector<VerificationReport> homogeneity_reports(const PotentialField& field, const WeightSystem& ws);

/// d_j C d_k C = d_k C d_j C for all 15 pairs j < k.
std::vector<VerificationReport> check_flatness(const SaitoData& data, Mode mode, const CheckOptions& opt);

PolyMatrix derivative(const PolyMatrix& m, std::size_t var);
PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b);
bool is_zero(const PolyMatrix& m);

template <class F>
Matrix<F> evaluate_matrix(const PolyMatrix& m, std::span<const F> point)
{
    Matrix<F> out(6, 6);
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) {
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = evaluate<F>(m[i][j], point);
        }
    }
    return out;
}

/// The identities f = Phi(t) with u_j = t_j k1^(-7 w_j) substituted and
/// k1^7 = 64/27 applied, and the back-substituted inverse t = Phi^{-1}(f).
struct Eq1Map {
    std::array<Polynomial<Rational>, 6> phi;      // f_j in t1..t6
    std::array<Polynomial<Rational>, 6> inverse;  // t_j in f1..f6
    std::array<Rational, 6> leading;              // coefficient of t_j in phi_j
    std::array<long, 6> k1_sevenths;              // net k1 exponent / 7 per line
};

/// Throws SaitoError when a k1 power survives or the system is not triangular.
Eq1Map rationalize_eq1(const PolyTable& eq1);

/// Exact check that Phi(Phi^{-1}(f)) = f.
VerificationReport eq1_inverse_report(const Eq1Map& map);

/// t = Phi^{-1}(f(x)) at a rational point x.
std::vector<Rational> t_coordinates(const Eq1Map& map, const InvariantTables& tables, std::span<const Rational> x);

/// det T(t).
Rational det_T(const SaitoData& data, std::span<const Rational> t);

struct DiscriminantOptions {
    std::size_t trials = 25;
    std::size_t mirror_points = 5;
    std::size_t generic_points = 5;
    std::uint64_t seed = kDefaultSeed;
    long range = 99;
};

/// det T vanishes on x5 = x6 = 1, at points on other mirrors, and not at
/// generic points; also measures the weighted degree of det T.
std::vector<VerificationReport> discriminant_vanishing_check(const SaitoData& data, const Eq1Map& map,
                                                             const InvariantTables& tables,
                                                             const DiscriminantOptions& opt = {});

/// Restricted invariants at x5 = x6 = 1 against the printed r-formulas.
std::vector<VerificationReport> verify_ptilde_identities(const PolyTable& ptilde, Mode mode, const CheckOptions& opt);

/// r3, r4, r6, r9 in x1..x4.
std::vector<Polynomial<Rational>> r_basics();
const VarList& x4_vars();

}  // namespace st34

#endif  // ST34_SAITO_HPP
