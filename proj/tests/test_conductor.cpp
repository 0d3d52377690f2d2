#include "doctest.h"

#include "ringclass/conductor.hpp"
#include "ringclass/cubicenum.hpp"
#include "ringclass/quadclass.hpp"

using namespace ringclass;

TEST_CASE("discriminant decomposition")
{
    auto d108 = decompose_discriminant(-108);
    CHECK(d108.f == 6);
    CHECK(d108.dK == -3);

    auto d23 = decompose_discriminant(-23);
    CHECK(d23.f == 1);
    CHECK(d23.dK == -23);

    auto d49 = decompose_discriminant(49);
    CHECK(d49.f == 7);
    CHECK(d49.dK == 1);

    CHECK(decompose_discriminant(-44).dK == -11);
    CHECK(decompose_discriminant(405).f == 9);
    CHECK(decompose_discriminant(405).dK == 5);

    CHECK_THROWS_AS(decompose_discriminant(-26), validation_error);  // 2 mod 4
    CHECK_THROWS_AS(decompose_discriminant(7), validation_error);
    CHECK_THROWS_AS(decompose_discriminant(0), validation_error);
}

TEST_CASE("decompose is a section of (f, dK) -> f^2 dK")
{
    for (i64 d : {-3, -4, -23, -4027, 5, 229, 1}) {
        for (i64 f : admissible_conductors(d, 40)) {
            i64 dL = f * f * d;
            if (dL == 1) continue;
            auto dec = decompose_discriminant(dL);
            CHECK(dec.f == f);
            CHECK(dec.dK == d);
        }
    }
}

TEST_CASE("admissibility rules")
{
    CHECK(is_admissible(-3, 6));
    CHECK(is_admissible(-4, 9));
    CHECK(is_admissible(-3, 9));
    CHECK(!is_admissible(-3, 3));   // the torsion unit kills the bare wild 3
    CHECK(is_admissible(-15, 3));   // -15 = -3 - 12 = +3 (mod 9)... checked below
    CHECK(is_admissible(1, 7));
    CHECK(!is_admissible(1, 3));
    CHECK(!is_admissible(1, 5));
    CHECK(is_admissible(1, 9));
    CHECK(!is_admissible(-23, 2));  // 2 splits in Q(sqrt -23): -23 = 1 (mod 8)
    CHECK(is_admissible(-23, 5));   // 5 = -1 (mod 3), inert
    CHECK(!is_admissible(-23, 7));  // 7 = +1 (mod 3) but inert
    CHECK(!is_admissible(-7, 7));   // ramified tame primes never divide f
    CHECK(!is_admissible(-4, 3));   // 3-part 3 needs d = +-3 (mod 9)
    CHECK(!is_admissible(-15, 9));  // d = +3 (mod 9) has no conductor 9

    CHECK_THROWS_AS(is_admissible(-4, 27), validation_error);
    CHECK_THROWS_AS(is_admissible(-4, 8), validation_error);
    CHECK(!is_admissible(-4, 4));
}

TEST_CASE("conductor factorization counters")
{
    auto f6 = factor_conductor(-3, 6);
    CHECK(f6.t == 1);
    CHECK(f6.w == 1);
    CHECK(f6.s == 0);
    CHECK(f6.tau == 2);
    REQUIRE(f6.divisors.size() == 2);
    CHECK(f6.divisors[0].q == 2);
    CHECK(f6.divisors[0].kind == divisor_kind::tame_inert);
    CHECK(f6.divisors[1].q == 3);
    CHECK(f6.divisors[1].kind == divisor_kind::wild);
    CHECK(f6.divisors[1].regular);

    auto f9 = factor_conductor(-3, 9);  // irregular: rank weight two
    CHECK(f9.w == 2);
    CHECK(f9.tau == 1);
    CHECK(!f9.divisors[0].regular);

    auto f9r = factor_conductor(-4, 9);
    CHECK(f9r.w == 1);
    CHECK(f9r.divisors[0].regular);

    // split tame prime: 13 = +1 (mod 3) and (-23|13) = +1
    auto f13 = factor_conductor(-23, 13);
    CHECK(f13.s == 1);
    CHECK(f13.divisors[0].kind == divisor_kind::tame_split);

    // recomputed counters always match
    for (i64 d : {-3, -4, -23, 229, 1}) {
        for (i64 f : admissible_conductors(d, 60)) {
            auto fact = factor_conductor(d, f);
            int t = 0, s = 0, w = 0;
            i64 prod = 1;
            for (auto& pd : fact.divisors) {
                prod *= pd.value();
                if (pd.kind == divisor_kind::wild)
                    w = pd.regular ? 1 : 2;
                else {
                    ++t;
                    if (pd.kind == divisor_kind::tame_split) ++s;
                }
            }
            CHECK(prod == f);
            CHECK(t == fact.t);
            CHECK(s == fact.s);
            CHECK(w == fact.w);
            CHECK(fact.tau == fact.t + (fact.w ? 1 : 0));
        }
    }
}

TEST_CASE("divisor lattice")
{
    auto lat = [&](i64 d, i64 f) {
        std::vector<i64> out;
        for (auto& c : divisor_lattice(d, factor_conductor(d, f))) out.push_back(c.f);
        return out;
    };
    CHECK(lat(-43, 10) == std::vector<i64>{1, 2, 5, 10});  // both inert
    CHECK(lat(-39, 9) == std::vector<i64>{1, 3, 9});       // irregular chain
    CHECK(lat(-3, 9) == std::vector<i64>{1, 9});           // no conductor 3 over d = -3
    CHECK(lat(-23, 1) == std::vector<i64>{1});
    CHECK(lat(1, 63) == std::vector<i64>{1, 7, 9, 63});
}

TEST_CASE("every enumerated field decomposes into an admissible pair")
{
    for (auto& r : enumerate_fields(20000, disc_sign::negative)) {
        CHECK((i128)r.f * r.f * r.dK == r.dL);
        CHECK(is_admissible(r.dK, r.f));
    }
    for (auto& r : enumerate_fields(100000, disc_sign::positive)) CHECK(is_admissible(r.dK, r.f));
}
