#include "ringclass/multiplicity.hpp"

#include <cassert>

#include "ringclass/quadclass.hpp"

namespace ringclass {

namespace {

i64 ipow(i64 b, int e)
{
    i64 r = 1;
    while (e-- > 0) {
        if (r > INT64_MAX / b) throw validation_error("overflow in multiplicity computation");
        r *= b;
    }
    return r;
}

void check_partition(const multiplet_prediction& m, i64 p)
{
    if (m.coverage == coverage_kind::uncovered) return;
    i64 total = 0;
    for (auto& [c, v] : m.per_divisor) total += v;
    i64 expected = (ipow(p, m.ring_class_rank) - 1) / (p - 1);
    if (total != expected)
        throw std::logic_error("partition identity violated: sum " + std::to_string(total) +
                               " vs rank " + std::to_string(m.ring_class_rank));
}

} // namespace

i64 unramified_multiplicity(i64 p, int rho)
{
    if (p < 2) throw validation_error("p must be a prime");
    if (rho < 0) throw validation_error("negative rank");
    return (ipow(p, rho) - 1) / (p - 1);
}

multiplet_prediction prime_conductor_case(i64 p, int rho, bool free_at_q, i64 q_value)
{
    multiplet_prediction m;
    m.coverage = coverage_kind::single_regular;
    m.validated = (p == 3);
    m.per_divisor[1] = unramified_multiplicity(p, rho);
    m.per_divisor[q_value] = free_at_q ? ipow(p, rho) : 0;
    m.ring_class_rank = free_at_q ? rho + 1 : rho;
    check_partition(m, p);
    return m;
}

multiplet_prediction irregular_case(int rho, bool free_at_3, bool free_at_9)
{
    multiplet_prediction m;
    m.coverage = coverage_kind::irregular_nine;
    i64 p = 3;
    m.per_divisor[1] = unramified_multiplicity(p, rho);
    if (free_at_3 && free_at_9) {
        m.per_divisor[3] = ipow(p, rho);
        m.per_divisor[9] = ipow(p, rho + 1);
        m.ring_class_rank = rho + 2;
    } else if (free_at_3) {
        m.per_divisor[3] = ipow(p, rho);
        m.per_divisor[9] = 0;
        m.ring_class_rank = rho + 1;
    } else if (free_at_9) {
        m.per_divisor[3] = 0;
        m.per_divisor[9] = ipow(p, rho);
        m.ring_class_rank = rho + 1;
    } else {
        m.per_divisor[3] = 0;
        m.per_divisor[9] = 0;
        m.ring_class_rank = rho;
    }
    check_partition(m, p);
    return m;
}

multiplet_prediction two_prime_case(i64 p, int rho, i64 q1v, i64 q2v, const ring_space_report& R)
{
    multiplet_prediction m;
    m.coverage = coverage_kind::two_prime;
    m.validated = (p == 3);
    i64 f = q1v * q2v;
    bool free1 = R.free_flags.at(q1v), free2 = R.free_flags.at(q2v);
    m.per_divisor[1] = unramified_multiplicity(p, rho);
    if (free1 && free2) {
        m.per_divisor[q1v] = ipow(p, rho);
        m.per_divisor[q2v] = ipow(p, rho);
        m.per_divisor[f] = ipow(p, rho) * (p - 1);
        m.ring_class_rank = rho + 2;
    } else if (free1) {
        m.per_divisor[q1v] = ipow(p, rho);
        m.per_divisor[q2v] = 0;
        m.per_divisor[f] = 0;
        m.ring_class_rank = rho + 1;
    } else if (free2) {
        m.per_divisor[q1v] = 0;
        m.per_divisor[q2v] = ipow(p, rho);
        m.per_divisor[f] = 0;
        m.ring_class_rank = rho + 1;
    } else if (R.members.at(q1v) == R.members.at(q2v)) {
        m.per_divisor[q1v] = 0;
        m.per_divisor[q2v] = 0;
        m.per_divisor[f] = ipow(p, rho);
        m.ring_class_rank = rho + 1;
    } else {
        m.per_divisor[q1v] = 0;
        m.per_divisor[q2v] = 0;
        m.per_divisor[f] = 0;
        m.ring_class_rank = rho;
    }
    check_partition(m, p);
    return m;
}

i64 rho0_regular_multiplicity(i64 d, int rho, int tau)
{
    if (!(d < -3) || rho != 0)
        throw validation_error("the rank zero case needs d < -3 with trivial 3-class rank");
    if (tau < 1) throw validation_error("tau must be positive");
    return i64(1) << (tau - 1);
}

i64 cyclic_multiplicity(int tau)
{
    if (tau <= 0) return 0;
    return i64(1) << (tau - 1);
}

multiplet_prediction predict(i64 d, const conductor_factorization& fact, int rho,
                             const selmer_space* space)
{
    multiplet_prediction m;
    i64 f = fact.f;

    if (d == 1) {
        m.coverage = coverage_kind::cyclic;
        m.per_divisor[1] = 0;
        for (auto& sub : divisor_lattice(d, fact))
            if (sub.f > 1) m.per_divisor[sub.f] = cyclic_multiplicity(sub.tau);
        m.ring_class_rank = fact.tau;
        check_partition(m, 3);
        return m;
    }

    if (f == 1) {
        m.coverage = coverage_kind::unramified;
        m.per_divisor[1] = unramified_multiplicity(3, rho);
        m.ring_class_rank = rho;
        check_partition(m, 3);
        return m;
    }

    int sigma = selmer_rank(3, d, rho);
    bool irregular = false;
    for (auto& pd : fact.divisors)
        if (!pd.regular) irregular = true;

    if (sigma == 0) {
        if (!irregular) {
            m.coverage = coverage_kind::rank0_regular;
            m.per_divisor[1] = 0;
            for (auto& sub : divisor_lattice(d, fact))
                if (sub.f > 1) m.per_divisor[sub.f] = rho0_regular_multiplicity(d, rho, sub.tau);
            m.ring_class_rank = fact.tau;
            check_partition(m, 3);
            return m;
        }
        if (fact.tau == 1) {
            // irregular 9 with V = 0: everything free
            m = irregular_case(rho, true, true);
            return m;
        }
        if (fact.tau == 2) {
            // irregular 9 with one tame prime: complete by the partition identity
            m.coverage = coverage_kind::partition;
            m.ring_class_rank = rho + fact.t + fact.w;  // defect 0, V = 0
            i64 expected = unramified_multiplicity(3, m.ring_class_rank);
            i64 partial = 0;
            for (auto& sub : divisor_lattice(d, fact)) {
                if (sub.f == fact.f) continue;
                multiplet_prediction ms = predict(d, sub, rho, nullptr);
                m.per_divisor[sub.f] = ms.per_divisor.at(sub.f);
                partial += m.per_divisor[sub.f];
            }
            m.per_divisor[fact.f] = expected - partial;
            if (m.per_divisor[fact.f] < 0)
                throw std::logic_error("negative completed multiplicity at d=" + std::to_string(d));
            check_partition(m, 3);
            return m;
        }
        m.coverage = coverage_kind::uncovered;
        m.per_divisor[1] = 0;
        m.ring_class_rank = rho + fact.t + fact.w;
        return m;
    }

    // sigma > 0: the ring spaces decide
    selmer_space local;
    if (space == nullptr) {
        local = selmer_basis(d, 3 * f);
        space = &local;
    }
    ring_space_report R = ring_space(*space, fact);

    if (fact.tau == 1) {
        const prime_power_divisor& pd = fact.divisors.front();
        if (pd.regular) {
            m = prime_conductor_case(3, rho, R.free_flags.at(pd.value()), pd.value());
        } else {
            bool free3 = R.subspace_dims.at(3) == sigma;
            bool free9 = R.members.at(9) == R.members.at(3);
            m = irregular_case(rho, free3, free9);
            if (d == -3) {
                assert(m.per_divisor.at(3) == 0);
                m.per_divisor.erase(3);  // conductor 3 itself is not admissible there
            }
        }
        int formula = rho + fact.t + fact.w - R.defect;
        if (m.coverage != coverage_kind::uncovered && formula != m.ring_class_rank)
            throw std::logic_error("ring class rank formula mismatch at d=" + std::to_string(d) +
                                   " f=" + std::to_string(f));
        return m;
    }
    if (fact.tau == 2 && !irregular) {
        i64 v1 = fact.divisors[0].value(), v2 = fact.divisors[1].value();
        m = two_prime_case(3, rho, v1, v2, R);
        if (d == -3 && m.per_divisor.count(3)) {
            assert(m.per_divisor.at(3) == 0);
            m.per_divisor.erase(3);
        }
        int formula = rho + fact.t + fact.w - R.defect;
        if (formula != m.ring_class_rank)
            throw std::logic_error("ring class rank formula mismatch at d=" + std::to_string(d) +
                                   " f=" + std::to_string(f));
        return m;
    }

    if (fact.tau == 2) {
        // irregular 9 with one tame prime: complete by the partition identity,
        // with the rank from rho + t + w - defect
        m.coverage = coverage_kind::partition;
        m.ring_class_rank = rho + fact.t + fact.w - R.defect;
        i64 expected = unramified_multiplicity(3, m.ring_class_rank);
        i64 partial = 0;
        for (auto& sub : divisor_lattice(d, fact)) {
            if (sub.f == fact.f) continue;
            multiplet_prediction ms = predict(d, sub, rho, space);
            m.per_divisor[sub.f] = ms.per_divisor.at(sub.f);
            partial += m.per_divisor[sub.f];
        }
        m.per_divisor[fact.f] = expected - partial;
        if (m.per_divisor[fact.f] < 0)
            throw std::logic_error("negative completed multiplicity at d=" + std::to_string(d) +
                                   " f=" + std::to_string(f));
        check_partition(m, 3);
        return m;
    }

    m.coverage = coverage_kind::uncovered;
    m.per_divisor[1] = unramified_multiplicity(3, rho);
    m.ring_class_rank = rho + fact.t + fact.w - R.defect;
    return m;
}

multiplet_prediction predict(i64 d, i64 f)
{
    conductor_factorization fact = factor_conductor(d, f);
    int rho = rho3(d);
    return predict(d, fact, rho, nullptr);
}

} // namespace ringclass
