#ifndef ST34_LATTICE_HPP
#define ST34_LATTICE_HPP

#include "st34/eisenstein.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace st34 {

/// Element of Z[w].
using EisInt = Eisenstein<long>;
using EisVec6 = std::array<EisInt, 6>;

enum class Family { theta_pair, omega_power };

struct MinimalVector {
    EisVec6 coords;
    Family family;
};

/// The five orbit types of reflecting hyperplanes, in census order.
enum class HyperplaneType {
    pair,          // x_i - w^a x_j = 0                              (45)
    four_one_one,  // x1+x2+x3+x4 + w x5 + w^2 x6 = 0                (30)
    three_three,   // x1+x2+x3 + w (x4+x5+x6) = 0                    (20)
    two_two_two,   // x1+x2 + w (x3+x4) + w^2 (x5+x6) = 0            (30)
    all_ones,      // x1+...+x6 = 0                                   (1)
};
inline constexpr std::array<HyperplaneType, 5> kHyperplaneTypes = {
    HyperplaneType::pair, HyperplaneType::four_one_one, HyperplaneType::three_three,
    HyperplaneType::two_two_two, HyperplaneType::all_ones};

/// Hyperplane sum_i form[i] x_i = 0; the form is scaled so that its first
/// nonzero coefficient is 1.
struct Hyperplane {
    EisVec6 form;
    HyperplaneType type;
};

std::string to_string(const EisInt& x);
std::string to_string(const EisVec6& v);
std::string to_string(Family f);
std::string to_string(HyperplaneType t);

/// sum_i v_i conj(v_i)
long hermitian_norm(const EisVec6& v);
EisVec6 scale(const EisInt& u, const EisVec6& v);

/// Exact quotient in Z[w]; throws if b does not divide a.
EisInt exact_divide(const EisInt& a, const EisInt& b);

/// The 756 minimal vectors, ordered by family and then by serialization.
std::vector<MinimalVector> enumerate_minimal_vectors();
/// Shared immutable copy of enumerate_minimal_vectors().
const std::vector<MinimalVector>& minimal_vectors();

/// Images of the five typical forms (the first with each a = 0, 1, 2) under
/// coordinate permutations, up to scaling. Ordered by type, then by
/// serialization.
std::vector<Hyperplane> enumerate_hyperplanes();

/// Scales a nonzero form so its first nonzero coefficient is 1.
EisVec6 canonical_form(const EisVec6& form);
/// Type of a canonical form; throws if it is not a reflecting hyperplane shape.
HyperplaneType classify_form(const EisVec6& canonical);

/// The hyperplane sum v_i x_i = 0.
Hyperplane vector_to_hyperplane(const MinimalVector& v);

struct LatticeCensus {
    std::size_t theta_pair = 0;
    std::size_t omega_power = 0;
    std::size_t total = 0;
    std::vector<long> norms;                       // distinct Hermitian norms
    bool closed_under_units = false;
    std::map<HyperplaneType, std::size_t> hyperplanes_by_type;
    std::size_t hyperplanes = 0;
    std::map<std::size_t, std::size_t> fiber_histogram;   // fiber size -> count
    bool image_is_hyperplane_set = false;
    bool types_agree = false;                      // type from the map equals census type
};

LatticeCensus lattice_census();

}  // namespace st34

#endif  // ST34_LATTICE_HPP
