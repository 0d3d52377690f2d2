#ifndef RINGCLASS_VERIFY_HPP
#define RINGCLASS_VERIFY_HPP

#include <string>
#include <vector>

namespace ringclass {

struct criterion_result {
    std::string name;
    bool passed = false;
    std::string detail;
};

// The acceptance suite: global counts, census diffs, partition identity,
// dichotomy, rank-zero multiplicities, nilet property, oracle equivalence,
// unramified type counts, and the unramified type theorem.
std::vector<criterion_result> run_acceptance(int jobs = 1);

} // namespace ringclass

#endif
