#ifndef RINGCLASS_INTEGERS_HPP
#define RINGCLASS_INTEGERS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ringclass {

using i64 = std::int64_t;
using i128 = __int128;

// Exhausted a configured search bound; the caller asked for something the
// engine refuses to guess at.  CLI maps this to exit code 3.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid argument for an operation (non-fundamental discriminant, even p,
// cube factor in a conductor, ...).  CLI maps this to exit code 2.
struct validation_error : std::invalid_argument {
    explicit validation_error(const std::string& msg) : std::invalid_argument(msg) {}
};

std::string to_string(i128 v);

inline i128 abs128(i128 v) { return v < 0 ? -v : v; }

// Overflow-checked arithmetic for form composition on user-supplied input.
inline i128 mul_checked(i128 a, i128 b)
{
    i128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw validation_error("128-bit overflow in form arithmetic");
    return r;
}

inline i128 add_checked(i128 a, i128 b)
{
    i128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw validation_error("128-bit overflow in form arithmetic");
    return r;
}

i64 gcd64(i64 a, i64 b);
i128 gcd128(i128 a, i128 b);

// g = gcd(a,b) >= 0 together with x,y such that a*x + b*y = g.
struct xgcd_result {
    i128 g, x, y;
};
xgcd_result xgcd(i128 a, i128 b);

// floor(sqrt(n)) for n >= 0.
i64 isqrt64(i64 n);
i128 isqrt128(i128 n);

inline bool is_square(i128 n)
{
    if (n < 0) return false;
    i128 r = isqrt128(n);
    return r * r == n;
}

// Kronecker symbol (a|n), defined for all integers n.
int kronecker(i128 a, i128 n);

// a^e mod m with m < 2^62, e >= 0.
i64 mod_pow(i64 a, i64 e, i64 m);

// Least non-negative residue.
inline i64 mod_floor(i64 a, i64 m)
{
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

// Trial-division factorisation of |n|, n != 0, as (prime, exponent) pairs
// with primes increasing.
std::vector<std::pair<i64, int>> factorize(i64 n);

bool is_squarefree(i64 n);

// Primes up to and including `limit`.
std::vector<i64> primes_up_to(i64 limit);

// Largest s with s^2 | n (n != 0), so n = s^2 * squarefree.
i64 square_divisor_part(i64 n);

} // namespace ringclass

#endif
