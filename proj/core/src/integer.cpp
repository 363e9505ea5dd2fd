#include "qfi/integer.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numeric>

namespace qfi {

Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

Int checked_sub(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

Int checked_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

Int narrow(Wide x)
{
    if (x > std::numeric_limits<Int>::max() || x < std::numeric_limits<Int>::min())
        throw OverflowError("value does not fit in 64 bits");
    return static_cast<Int>(x);
}

Int mul_mod(Int a, Int b, Int m)
{
    return static_cast<Int>((Wide(mod(a, m)) * mod(b, m)) % m);
}

Int pow_mod(Int base, Int exp, Int m)
{
    if (m == 1)
        return 0;
    Int result = 1;
    base = mod(base, m);
    while (exp > 0) {
        if (exp & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

namespace {

constexpr std::array<Int, 12> small_primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

/* m odd, m > 37, m - 1 = d * 2^s */
bool strong_probable_prime(Int m, Int base, Int d, int s)
{
    Int x = pow_mod(base, d, m);
    if (x == 1 || x == m - 1)
        return true;
    for (int r = 1; r < s; ++r) {
        x = mul_mod(x, x, m);
        if (x == m - 1)
            return true;
    }
    return false;
}

} // namespace

bool is_prime(Int m)
{
    if (m < 2)
        return false;
    for (Int p : small_primes) {
        if (m == p)
            return true;
        if (m % p == 0)
            return false;
    }
    if (m < 41 * 41)
        return true;
    Int d = m - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // The first twelve primes are a deterministic witness set below 3.3e24.
    for (Int base : small_primes)
        if (!strong_probable_prime(m, base, d, s))
            return false;
    return true;
}

int jacobi(Int a, Int n)
{
    if (n <= 0 || (n & 1) == 0)
        throw DomainError("jacobi: modulus must be odd and positive");
    a = mod(a, n);
    int t = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            Int r = n & 7;
            if (r == 3 || r == 5)
                t = -t;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3)
            t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

int legendre(Int a, Int p)
{
    if (p == 2 || !is_prime(p))
        throw DomainError("legendre: modulus must be an odd prime");
    return jacobi(a, p);
}

std::optional<Int> sqrt_mod(Int a, Int q)
{
    if (q == 2 || !is_prime(q))
        throw DomainError("sqrt_mod: modulus must be an odd prime");
    a = mod(a, q);
    if (a == 0)
        throw DomainError("sqrt_mod: modulus divides the argument");
    if (jacobi(a, q) != 1)
        return std::nullopt;

    Int root;
    if ((q & 3) == 3) {
        root = pow_mod(a, (q + 1) / 4, q);
    } else {
        // Tonelli-Shanks: q - 1 = odd * 2^s
        Int odd = q - 1;
        int s = 0;
        while ((odd & 1) == 0) {
            odd >>= 1;
            ++s;
        }
        Int z = 2;
        while (jacobi(z, q) != -1)
            ++z;
        int m = s;
        Int c = pow_mod(z, odd, q);
        Int t = pow_mod(a, odd, q);
        root = pow_mod(a, (odd + 1) / 2, q);
        while (t != 1) {
            int i = 0;
            Int t2 = t;
            while (t2 != 1) {
                t2 = mul_mod(t2, t2, q);
                ++i;
            }
            Int b = c;
            for (int j = 0; j < m - i - 1; ++j)
                b = mul_mod(b, b, q);
            m = i;
            c = mul_mod(b, b, q);
            t = mul_mod(t, c, q);
            root = mul_mod(root, b, q);
        }
    }
    if (mul_mod(root, root, q) != a)
        throw InvariantViolation("sqrt_mod: root check failed");
    return std::min(root, q - root);
}

Int inv_mod(Int a, Int m)
{
    if (m < 2)
        throw DomainError("inv_mod: modulus must be at least 2");
    Int old_r = mod(a, m), r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int quot = old_r / r;
        old_r -= quot * r;
        std::swap(old_r, r);
        old_s -= quot * s;
        std::swap(old_s, s);
    }
    if (old_r != 1)
        throw DomainError("inv_mod: argument not invertible");
    return mod(old_s, m);
}

Int crt_q2(Int r_q, Int q, int r_2)
{
    if (q <= 0 || (q & 1) == 0)
        throw DomainError("crt_q2: modulus must be odd and positive");
    Int x = mod(r_q, q);
    if (mod(x, 2) != mod(r_2, 2))
        x += q;
    return x;
}

Int isqrt(Int m)
{
    if (m < 0)
        throw DomainError("isqrt: negative argument");
    auto r = static_cast<Int>(std::sqrt(static_cast<long double>(m)));
    while (r > 0 && Wide(r) * r > m)
        --r;
    while (Wide(r + 1) * (r + 1) <= m)
        ++r;
    return r;
}

bool is_square(Int m)
{
    if (m < 0)
        return false;
    Int r = isqrt(m);
    return r * r == m;
}

namespace {

Int magnitude(Int m)
{
    if (m == std::numeric_limits<Int>::min())
        throw OverflowError("magnitude of INT64_MIN");
    return m < 0 ? -m : m;
}

} // namespace

bool is_squarefree(Int m)
{
    if (m == 0)
        return false;
    Int const abs_m = magnitude(m);
    Int r = abs_m;
    // Every prime factor left after trial division past cbrt(|m|) exceeds
    // that bound, so the cofactor has at most two of them.
    for (Int p = 2; Wide(p) * p * p <= abs_m; p += (p == 2 ? 1 : 2)) {
        if (r % p == 0) {
            r /= p;
            if (r % p == 0)
                return false;
        }
    }
    return r == 1 || !is_square(r);
}

Int smallest_prime_factor(Int m)
{
    Int r = magnitude(m);
    if (r < 2)
        throw DomainError("smallest_prime_factor: |m| < 2");
    if (is_prime(r))
        return r;
    for (Int p = 2; Wide(p) * p <= r; p += (p == 2 ? 1 : 2))
        if (r % p == 0)
            return p;
    return r;
}

Int largest_odd_prime_factor(Int m)
{
    Int r = magnitude(m);
    if (r == 0)
        throw DomainError("largest_odd_prime_factor: zero");
    while ((r & 1) == 0)
        r >>= 1;
    Int largest = 0;
    while (r > 1) {
        Int p = smallest_prime_factor(r);
        largest = std::max(largest, p);
        while (r % p == 0)
            r /= p;
    }
    return largest;
}

PrimeSieve::PrimeSieve(Int limit)
    : limit_(limit)
{
    if (limit < 1)
        throw DomainError("PrimeSieve: limit must be positive");
    composite_.assign(static_cast<std::size_t>(limit) + 1, false);
    composite_[0] = true;
    composite_[1] = true;
    for (Int i = 2; i * i <= limit; ++i)
        if (!composite_[i])
            for (Int j = i * i; j <= limit; j += i)
                composite_[j] = true;
    for (Int i = 2; i <= limit; ++i)
        if (!composite_[i])
            primes_.push_back(i);
}

bool PrimeSieve::contains(Int p) const
{
    if (p < 0 || p > limit_)
        throw DomainError("PrimeSieve: query outside sieve range");
    return !composite_[static_cast<std::size_t>(p)];
}

PrimeSieve primes_up_to(Int limit)
{
    return PrimeSieve(limit);
}

} // namespace qfi
