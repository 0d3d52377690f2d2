#ifndef RINGCLASS_MULTIPLICITY_HPP
#define RINGCLASS_MULTIPLICITY_HPP

#include <map>

#include "ringclass/conductor.hpp"
#include "ringclass/integers.hpp"
#include "ringclass/selmer.hpp"

namespace ringclass {

enum class coverage_kind {
    unramified,      // f = 1, partition alone
    single_regular,  // regular prime or prime power conductor
    irregular_nine,  // the 1 | 3 | 9 chain over d = -3 (mod 9)
    two_prime,       // regular conductor with two prime power divisors
    rank0_regular,   // sigma_3 = 0, every divisor regular (any tau)
    cyclic,          // d_K = 1
    partition,       // m(f) completed from the partition identity over covered
                     // proper divisors (irregular 9 paired with one tame prime)
    uncovered
};

struct multiplet_prediction {
    std::map<i64, i64> per_divisor;  // admissible c | f -> m_3(K, c)
    int ring_class_rank = 0;         // rho_{3,f} = rho + t + w - defect
    coverage_kind coverage = coverage_kind::uncovered;
    bool validated = true;           // false for p != 3 (no oracle wired)
};

// (p^rho - 1)/(p - 1)
i64 unramified_multiplicity(i64 p, int rho);

// Regular prime(-power) conductor: (m1, p^rho) when free, (m1, 0) otherwise.
multiplet_prediction prime_conductor_case(i64 p, int rho, bool free_at_q, i64 q_value = 0);

// Irregular conductor 9: free_at_3 means V3(3) = V, free_at_9 means V3(9) = V3(3).
multiplet_prediction irregular_case(int rho, bool free_at_3, bool free_at_9);

// Regular f = q1 q2: the five-case table selected by the ring space report.
multiplet_prediction two_prime_case(i64 p, int rho, i64 q1_value, i64 q2_value,
                                    const ring_space_report& spaces);

// sigma_3 = 0: multiplicity 2^(tau-1) at the full conductor.
i64 rho0_regular_multiplicity(i64 d, int rho, int tau);

// Cyclic cubic fields: 2^(tau-1), and 0 at conductor 1.
i64 cyclic_multiplicity(int tau);

// Full dispatch; computes class data and ring spaces as needed.
multiplet_prediction predict(i64 d, i64 f);
multiplet_prediction predict(i64 d, const conductor_factorization& fact, int rho,
                             const selmer_space* space);

} // namespace ringclass

#endif
