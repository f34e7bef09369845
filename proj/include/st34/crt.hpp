#ifndef ST34_CRT_HPP
#define ST34_CRT_HPP

#include "st34/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>

namespace st34 {

/// The unique residue modulo prod(primes) with the given residues.
Integer crt_combine(std::span<const std::uint64_t> residues, std::span<const std::uint64_t> primes);

/// Rational n/d with |n|, d <= sqrt(modulus / 2) congruent to a, if any
/// (Wang's reconstruction by the half-extended Euclidean algorithm).
std::optional<Rational> rational_reconstruct(const Integer& a, const Integer& modulus);

}  // namespace st34

#endif  // ST34_CRT_HPP
