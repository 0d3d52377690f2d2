#ifndef RINGCLASS_CONDUCTOR_HPP
#define RINGCLASS_CONDUCTOR_HPP

#include <vector>

#include "ringclass/integers.hpp"

namespace ringclass {

enum class divisor_kind { tame_split, tame_inert, tame_ramified, wild };

// One prime power q^e dividing a conductor.  e = 1 for tame primes,
// e in {1,2} for q = 3.  `regular` is false exactly for the wild divisor 9
// over d = -3 (mod 9).
struct prime_power_divisor {
    i64 q = 0;
    int e = 1;
    divisor_kind kind = divisor_kind::tame_inert;
    bool regular = true;

    i64 value() const { return e == 2 ? q * q : q; }
};

struct conductor_factorization {
    i64 f = 1;
    std::vector<prime_power_divisor> divisors;
    int t = 0;          // tame divisor count
    int w = 0;          // wild rank weight: 0, 1, or 2 (irregular 9)
    int s = 0;          // split tame divisors
    int tau = 0;        // prime power divisor count (9 counts once)
};

// d_L = f^2 * d_K with d_K fundamental (or 1).  Throws validation_error when
// no such decomposition exists.
struct discriminant_decomposition {
    i64 f;
    i64 dK;
};
discriminant_decomposition decompose_discriminant(i64 dL);

// 3-admissibility of f over the field of discriminant d.
//   tame q:  (d|q) = (-3|q) != 0, i.e. q = +1 (mod 3) split, q = -1 (mod 3) inert;
//   3-part 3: d = +-3 (mod 9), except over d = -3 where a bare conductor 3
//             carries no cubic ray class character (the torsion unit kills it);
//   3-part 9: d = +-1 (mod 3) (regular) or d = -3 (mod 9) (irregular).
// Throws on cube factors and on a 3-part of 27.
bool is_admissible(i64 dK, i64 f, i64 p = 3);

// Factorization with per-prime classification; requires admissibility.
conductor_factorization factor_conductor(i64 dK, i64 f);

// All divisors c | f that are themselves admissible conductors over dK,
// each with its own factorization, sorted by c.
std::vector<conductor_factorization> divisor_lattice(i64 dK, const conductor_factorization& fact);

// Every admissible conductor f <= fmax over dK, ascending (f = 1 included).
std::vector<i64> admissible_conductors(i64 dK, i64 fmax);

} // namespace ringclass

#endif
