#include "st34/crt.hpp"

#include <stdexcept>
#include <string>

namespace st34 {

Integer crt_combine(std::span<const std::uint64_t> residues, std::span<const std::uint64_t> primes)
{
    if (residues.size() != primes.size() || primes.empty()) {
        throw std::invalid_argument("crt_combine needs one residue per prime");
    }
    Integer x = Integer(std::to_string(residues[0]));
    Integer m = Integer(std::to_string(primes[0]));
    for (std::size_t i = 1; i < primes.size(); ++i) {
        const Integer p(std::to_string(primes[i]));
        const Integer r(std::to_string(residues[i]));
        Integer inv;
        if (mpz_invert(inv.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()) == 0) {
            throw std::invalid_argument("crt_combine: moduli are not coprime");
        }
        // x + m * ((r - x) * m^-1 mod p)
        Integer t = (r - x) * inv;
        mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
        x += m * t;
        m *= p;
    }
    return x;
}

std::optional<Rational> rational_reconstruct(const Integer& a, const Integer& modulus)
{
    Integer bound;
    mpz_fdiv_q_2exp(bound.get_mpz_t(), modulus.get_mpz_t(), 1);
    mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());

    Integer r0 = modulus;
    Integer r1;
    mpz_fdiv_r(r1.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
    Integer t0 = 0;
    Integer t1 = 1;
    Integer q;
    Integer tmp;
    while (r1 > bound) {
        mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
        tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (sgn(t1) == 0 || abs(t1) > bound) {
        return std::nullopt;
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) {
        return std::nullopt;
    }
    return rational_reduce(r1, t1);
}

}  // namespace st34
