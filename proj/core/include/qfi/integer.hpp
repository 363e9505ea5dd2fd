#ifndef QFI_INTEGER_HPP
#define QFI_INTEGER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qfi/errors.hpp"

namespace qfi {

using Int = std::int64_t;
using Wide = __int128;

/* Checked arithmetic; throws OverflowError instead of wrapping. */
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int narrow(Wide x);

/* Least nonnegative residue of a modulo m (m > 0). */
constexpr Int mod(Int a, Int m)
{
    Int r = a % m;
    return r < 0 ? r + m : r;
}

Int mul_mod(Int a, Int b, Int m);
Int pow_mod(Int base, Int exp, Int m);

/* Deterministic for every 64-bit input: trial division by small primes,
 * then Miller-Rabin with the first twelve prime bases. */
bool is_prime(Int m);

/* Jacobi symbol (a/n) for odd n > 0, by the reciprocity ladder. */
int jacobi(Int a, Int n);

/* Legendre symbol (a/p); p must be an odd prime. */
int legendre(Int a, Int p);

/* Square root of a modulo the odd prime q, normalised to the smaller of
 * the two roots. Empty when a is a non-residue. q | a is a domain error. */
std::optional<Int> sqrt_mod(Int a, Int q);

/* Inverse of a modulo m in [0, m). */
Int inv_mod(Int a, Int m);

/* The x in [0, 2q) with x = r_q (mod q) and x = r_2 (mod 2); q odd. */
Int crt_q2(Int r_q, Int q, int r_2);

/* floor(sqrt(m)) for m >= 0. */
Int isqrt(Int m);
bool is_square(Int m);

bool is_squarefree(Int m);

/* Smallest prime factor of |m| (|m| >= 2). */
Int smallest_prime_factor(Int m);
/* Largest odd prime factor of |m|; 0 when |m| is a power of two. */
Int largest_odd_prime_factor(Int m);

class PrimeSieve
{
    Int limit_;
    std::vector<bool> composite_;
    std::vector<Int> primes_;

    public:
    explicit PrimeSieve(Int limit);

    Int limit() const { return limit_; }

    /* p must lie in [0, limit]. */
    bool contains(Int p) const;

    std::span<Int const> primes() const { return primes_; }
};

PrimeSieve primes_up_to(Int limit);

} // namespace qfi

#endif
