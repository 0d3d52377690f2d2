#include "doctest.h"

#include <map>

#include "ringclass/cubicenum.hpp"
#include "ringclass/multiplicity.hpp"
#include "ringclass/quadclass.hpp"

using namespace ringclass;

TEST_CASE("unramified multiplicity")
{
    CHECK(unramified_multiplicity(3, 0) == 0);
    CHECK(unramified_multiplicity(3, 1) == 1);
    CHECK(unramified_multiplicity(3, 2) == 4);
    CHECK(unramified_multiplicity(5, 2) == 6);
    for (int rho = 0; rho < 8; ++rho) {
        CHECK(unramified_multiplicity(3, rho + 1) == 3 * unramified_multiplicity(3, rho) + 1);
        CHECK(unramified_multiplicity(3, rho + 1) > unramified_multiplicity(3, rho));
    }
}

TEST_CASE("regular prime conductor dichotomy")
{
    auto free1 = prime_conductor_case(3, 1, true, 7);
    CHECK(free1.per_divisor.at(1) == 1);
    CHECK(free1.per_divisor.at(7) == 3);
    CHECK(free1.ring_class_rank == 2);

    auto restr = prime_conductor_case(3, 1, false, 7);
    CHECK(restr.per_divisor.at(7) == 0);
    CHECK(restr.ring_class_rank == 1);

    auto singlet = prime_conductor_case(3, 0, true, 5);
    CHECK(singlet.per_divisor.at(1) == 0);
    CHECK(singlet.per_divisor.at(5) == 1);
}

TEST_CASE("irregular conductor 9 chain")
{
    auto c1 = irregular_case(0, true, true);
    CHECK(c1.per_divisor == std::map<i64, i64>{{1, 0}, {3, 1}, {9, 3}});
    auto c3 = irregular_case(1, false, true);
    CHECK(c3.per_divisor == std::map<i64, i64>{{1, 1}, {3, 0}, {9, 3}});
    auto c4 = irregular_case(1, false, false);
    CHECK(c4.per_divisor == std::map<i64, i64>{{1, 1}, {3, 0}, {9, 0}});
    auto c2 = irregular_case(1, true, false);
    CHECK(c2.per_divisor == std::map<i64, i64>{{1, 1}, {3, 3}, {9, 0}});
}

TEST_CASE("two prime conductors, synthetic ring spaces")
{
    auto mk_report = [](int sigma, bool free1, bool free2, bool equal_subspaces) {
        ring_space_report R;
        R.sigma = sigma;
        std::set<selmer_vec> full, zero{{0, 0, 0}}, line1{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}},
            line2{{0, 0, 0}, {0, 1, 0}, {0, 2, 0}};
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < (sigma > 1 ? 3 : 1); ++b) full.insert({a, sigma > 1 ? b : 0, 0});
        R.members[5] = free1 ? full : (equal_subspaces ? line1 : line1);
        R.members[7] = free2 ? full : (equal_subspaces ? line1 : line2);
        R.free_flags[5] = free1;
        R.free_flags[7] = free2;
        return R;
    };
    // all free: (m1, p^rho, p^rho, p^rho (p-1))
    auto m1 = two_prime_case(3, 1, 5, 7, mk_report(2, true, true, true));
    CHECK(m1.per_divisor == std::map<i64, i64>{{1, 1}, {5, 3}, {7, 3}, {35, 6}});
    CHECK(m1.ring_class_rank == 3);
    auto m0 = two_prime_case(3, 0, 5, 7, mk_report(1, true, true, true));
    CHECK(m0.per_divisor == std::map<i64, i64>{{1, 0}, {5, 1}, {7, 1}, {35, 2}});
    // one free
    auto m2 = two_prime_case(3, 1, 5, 7, mk_report(2, true, false, false));
    CHECK(m2.per_divisor == std::map<i64, i64>{{1, 1}, {5, 3}, {7, 0}, {35, 0}});
    // neither free, equal spaces: everything lands at f
    auto m4 = two_prime_case(3, 1, 5, 7, mk_report(2, false, false, true));
    CHECK(m4.per_divisor == std::map<i64, i64>{{1, 1}, {5, 0}, {7, 0}, {35, 3}});
    // neither free, distinct spaces: maximal restriction
    auto m5 = two_prime_case(3, 1, 5, 7, mk_report(2, false, false, false));
    CHECK(m5.per_divisor == std::map<i64, i64>{{1, 1}, {5, 0}, {7, 0}, {35, 0}});
    CHECK(m5.ring_class_rank == 1);
}

TEST_CASE("rank zero and cyclic multiplicities")
{
    CHECK(rho0_regular_multiplicity(-4, 0, 1) == 1);
    CHECK(rho0_regular_multiplicity(-4, 0, 2) == 2);
    CHECK(rho0_regular_multiplicity(-4, 0, 3) == 4);
    CHECK_THROWS_AS(rho0_regular_multiplicity(-3, 0, 1), validation_error);
    CHECK_THROWS_AS(rho0_regular_multiplicity(5, 0, 1), validation_error);
    CHECK_THROWS_AS(rho0_regular_multiplicity(-4, 1, 1), validation_error);

    CHECK(cyclic_multiplicity(0) == 0);
    CHECK(cyclic_multiplicity(1) == 1);
    CHECK(cyclic_multiplicity(2) == 2);
}

TEST_CASE("predict dispatch on the worked examples")
{
    auto u = predict(-23, 1);
    CHECK(u.coverage == coverage_kind::unramified);
    CHECK(u.per_divisor == std::map<i64, i64>{{1, 1}});

    auto q = predict(-4027, 1);
    CHECK(q.per_divisor == std::map<i64, i64>{{1, 4}});

    auto pure2 = predict(-3, 6);  // the field of the cube root of 2
    CHECK(pure2.coverage == coverage_kind::two_prime);
    CHECK(pure2.per_divisor.at(6) == 1);
    CHECK(pure2.per_divisor.at(2) == 0);
    CHECK(pure2.per_divisor.count(3) == 0);

    auto pure3 = predict(-3, 9);  // the field of the cube root of 3
    CHECK(pure3.coverage == coverage_kind::irregular_nine);
    CHECK(pure3.per_divisor == std::map<i64, i64>{{1, 0}, {9, 1}});

    auto cyc = predict(1, 63);
    CHECK(cyc.coverage == coverage_kind::cyclic);
    CHECK(cyc.per_divisor == std::map<i64, i64>{{1, 0}, {7, 1}, {9, 1}, {63, 2}});

    auto d43 = predict(-43, 10);
    std::map<i64, i64> oracle;
    for (auto& r : enumerate_fields(4300, disc_sign::negative)) oracle[r.dL]++;
    for (auto& [c, v] : d43.per_divisor)
        CHECK(v == (oracle.count(c * c * -43) ? oracle[c * c * -43] : 0));
}

TEST_CASE("monotone degeneration in the restrictive two prime cases")
{
    // in cases (2)-(5) at most one divisor above 1 carries fields
    for (i64 d = -4000; d <= 4000; ++d) {
        if (d == 0 || d == 1 || !is_fundamental_discriminant(d)) continue;
        i64 ad = d < 0 ? -d : d;
        for (i64 f : admissible_conductors(d, isqrt64(4000 / ad))) {
            auto fact = factor_conductor(d, f);
            if (fact.tau != 2 || fact.w == 2) continue;
            auto m = predict(d, fact, rho3(d), nullptr);
            if (m.coverage != coverage_kind::two_prime) continue;
            i64 rho_pow = 1;
            for (int i = 0; i < rho3(d); ++i) rho_pow *= 3;
            bool free_case = m.per_divisor.at(f) == 2 * rho_pow;
            if (free_case) continue;
            int positive = 0;
            for (auto& [c, v] : m.per_divisor)
                if (c > 1 && v > 0) ++positive;
            CHECK(positive <= 1);
        }
    }
}
