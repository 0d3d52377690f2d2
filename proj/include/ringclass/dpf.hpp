#ifndef RINGCLASS_DPF_HPP
#define RINGCLASS_DPF_HPP

#include <set>
#include <string>

#include "ringclass/cubicenum.hpp"
#include "ringclass/integers.hpp"

namespace ringclass {

// Differential principal factorization types.  The full taxonomy is carried
// for data interchange; only zeta (cyclic) and the unramified alpha1/delta1
// cases are ever computed here.
enum class dpf_type {
    alpha1,
    alpha2,
    alpha3,
    beta1,
    beta2,
    gamma,
    delta1,
    delta2,
    epsilon,
    zeta,
    undecided
};

std::string dpf_token(dpf_type t);  // "a1", ..., "e", "z", "undecided"

enum class field_signature { totally_real, totally_complex };

// Possible types of an unramified cyclic cubic relative extension:
// complex -> {alpha1}; real, rank 1 -> {delta1}; real, rank >= 2 -> both.
std::set<dpf_type> unramified_types(field_signature sig, int rho);

// Counts of absolute/relative principal factorizations with the unit and
// capitulation contributions, against the proof bounds.
struct dpf_constraint {
    int A = 0, R = 0, U = 0, C = 0;
    int t = 0, s = 0;
    int rho = 0;
};

bool check_constraint(const dpf_constraint& c);

// The type column entries decidable here: cyclic fields, and unramified
// fields (f = 1) that the unramified theorem pins down.
dpf_type decidable_type_column(const cubic_field_record& rec, int rho);

} // namespace ringclass

#endif
