#ifndef RINGCLASS_SELMER_HPP
#define RINGCLASS_SELMER_HPP

#include <array>
#include <map>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "ringclass/conductor.hpp"
#include "ringclass/integers.hpp"

namespace ringclass {

// Quadratic integer (x + y sqrt(d))/2, x = d*y (mod 2).
struct quad_int {
    mpz_class x, y;
};

quad_int qmul(i64 d, const quad_int& u, const quad_int& v);
mpz_class qnorm(i64 d, const quad_int& u);

enum class virtual_unit_source { unit, torsion, class_generator };

// Generator of the 3-Selmer group: a principal generator of a^3 for a
// 3-torsion class a, the fundamental unit, or zeta_3 over d = -3.
struct virtual_unit {
    quad_int element;
    virtual_unit_source source;
    int generator_index = -1;
};

struct selmer_space {
    i64 d = 0;
    std::vector<virtual_unit> basis;  // size sigma_3
    int dimension() const { return (int)basis.size(); }
};

// Basis of the 3-Selmer group; class-cube generators are chosen with norm
// coprime to `coprime_to`.  Throws resource_error when a principal generator
// escapes the search bound.
selmer_space selmer_basis(i64 d, i64 coprime_to = 1);

// Local cube test of a virtual unit at one admissible prime power divisor:
// tame q: u^((Nq-1)/3) = 1 in the residue field of the fixed prime above q;
// wild 3^e: x^3 = u solvable in O_K / 3^(e+1).
bool is_local_cube(i64 d, const quad_int& u, const prime_power_divisor& pd);

// F3 coordinates of a Selmer element w.r.t. a space's basis.
using selmer_vec = std::array<int, 3>;

struct ring_space_report {
    i64 d = 0;
    i64 f = 1;
    int sigma = 0;
    std::map<i64, int> subspace_dims;                 // c -> dim V3(c)
    std::map<i64, bool> free_flags;                   // c -> V3(c) == V
    std::map<i64, std::set<selmer_vec>> members;      // c -> all vectors of V3(c)
    int defect = 0;                                   // sigma - dim V3(f)
};

// V3(c) for every admissible c | f (plus the chain entry c = 3 under an
// irregular 9), computed by evaluating products of basis elements in the
// local residue rings.
ring_space_report ring_space(const selmer_space& space, const conductor_factorization& fact);

// Convenience: builds a basis with suitable coprimality first.
ring_space_report ring_space(i64 d, const conductor_factorization& fact);

} // namespace ringclass

#endif
