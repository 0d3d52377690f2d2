#include "doctest.h"

#include "ringclass/conductor.hpp"
#include "ringclass/cubicenum.hpp"
#include "ringclass/quadclass.hpp"
#include "ringclass/selmer.hpp"

using namespace ringclass;

namespace {

prime_power_divisor tame(i64 d, i64 q)
{
    prime_power_divisor pd;
    pd.q = q;
    pd.e = 1;
    int chi = kronecker(d, q);
    pd.kind = chi > 0 ? divisor_kind::tame_split
                      : (chi < 0 ? divisor_kind::tame_inert : divisor_kind::tame_ramified);
    return pd;
}

prime_power_divisor wild(i64 d, int e)
{
    prime_power_divisor pd;
    pd.q = 3;
    pd.e = e;
    pd.kind = divisor_kind::wild;
    pd.regular = !(e == 2 && mod_floor(d, 9) == 6);
    return pd;
}

} // namespace

TEST_CASE("selmer basis contents")
{
    auto s3 = selmer_basis(-3);
    REQUIRE(s3.dimension() == 1);
    CHECK(s3.basis[0].source == virtual_unit_source::torsion);
    CHECK(s3.basis[0].element.x == -1);
    CHECK(s3.basis[0].element.y == 1);

    auto s23 = selmer_basis(-23);
    REQUIRE(s23.dimension() == 1);
    CHECK(s23.basis[0].source == virtual_unit_source::class_generator);
    mpz_class n = qnorm(-23, s23.basis[0].element);
    CHECK(n == 8);  // generator of the cube of the norm-2 class ideal (2,1,3)

    auto s5 = selmer_basis(5);
    REQUIRE(s5.dimension() == 1);
    CHECK(s5.basis[0].source == virtual_unit_source::unit);
    CHECK(s5.basis[0].element.x == 1);
    CHECK(s5.basis[0].element.y == 1);

    CHECK(selmer_basis(229).dimension() == 2);
    CHECK(selmer_basis(-4).dimension() == 0);
    CHECK_THROWS_AS(selmer_basis(1), validation_error);
}

TEST_CASE("local cube test examples")
{
    quad_int zeta{mpz_class(-1), mpz_class(1)};
    CHECK(!is_local_cube(-3, zeta, tame(-3, 2)));  // zeta^((4-1)/3) = zeta != 1 in F_4

    quad_int one{mpz_class(2), mpz_class(0)};
    CHECK(is_local_cube(-3, one, tame(-3, 2)));
    CHECK(is_local_cube(-3, one, wild(-3, 2)));
    CHECK(is_local_cube(8, one, tame(8, 5)));

    quad_int eps{mpz_class(2), mpz_class(1)};  // 1 + sqrt(2), norm -1
    CHECK(qnorm(8, eps) == -1);
    CHECK(!is_local_cube(8, eps, tame(8, 5)));  // eps^8 = 2 + 3 sqrt(2) != 1 in F_25
}

TEST_CASE("cube test is insensitive to the choice of split prime")
{
    // conjugating the element evaluates at the other prime above q
    for (i64 d : {-23, -31, 229, 257}) {
        auto S = selmer_basis(d, 3);
        for (i64 q : {7ll, 13ll, 31ll, 61ll}) {
            if (kronecker(d, q) != 1) continue;
            for (auto& u : S.basis) {
                quad_int conj{u.element.x, -u.element.y};
                CHECK(is_local_cube(d, u.element, tame(d, q)) ==
                      is_local_cube(d, conj, tame(d, q)));
            }
        }
    }
}

TEST_CASE("cube test is invariant under multiplication by rational cubes")
{
    auto S = selmer_basis(-23, 3);
    quad_int u = S.basis[0].element;
    quad_int scaled{u.x * 125, u.y * 125};  // times 5^3
    CHECK(is_local_cube(-23, u, tame(-23, 5)) == is_local_cube(-23, scaled, tame(-23, 5)));
    CHECK(is_local_cube(-23, u, tame(-23, 11)) == is_local_cube(-23, scaled, tame(-23, 11)));
}

TEST_CASE("ring spaces shrink along the divisor lattice")
{
    for (auto [d, f] : std::vector<std::pair<i64, i64>>{{-43, 10}, {-3, 18}, {229, 9}, {-255, 9}}) {
        REQUIRE(is_admissible(d, f));
        auto fact = factor_conductor(d, f);
        auto rep = ring_space(d, fact);
        CHECK(rep.defect == rep.sigma - rep.subspace_dims.at(f));
        for (auto& [c1, mem1] : rep.members)
            for (auto& [c2, mem2] : rep.members) {
                if (c2 % c1 != 0) continue;
                // c1 | c2: V3(c1) contains V3(c2)
                for (auto& v : mem2) CHECK(mem1.count(v) == 1);
            }
    }
}

TEST_CASE("trivial selmer space is free everywhere")
{
    auto fact = factor_conductor(-4, 9);
    auto rep = ring_space(-4, fact);
    CHECK(rep.sigma == 0);
    CHECK(rep.defect == 0);
    for (auto& [c, flag] : rep.free_flags) CHECK(flag);
}

TEST_CASE("free flag matches the enumeration at chosen spots")
{
    // d = 5, f = 9: no cubic field of discriminant 405 exists, so V3(9) is
    // restrictive (the golden ratio is not a cube residue there)
    auto rep = ring_space(5, factor_conductor(5, 9));
    int fields405 = 0;
    for (auto& r : enumerate_fields(405, disc_sign::positive))
        if (r.dL == 405) ++fields405;
    CHECK(fields405 == 0);
    CHECK(!rep.free_flags.at(9));

    // d = 229, f = 9: dL = 18549 is realized (m = 3), so V3(9) must be free
    auto rep229 = ring_space(229, factor_conductor(229, 9));
    int fields18549 = 0;
    for (auto& r : enumerate_fields(18549, disc_sign::positive))
        if (r.dL == 18549) ++fields18549;
    CHECK(rep229.free_flags.at(9) == (fields18549 > 0));

    // d = -3, f = 2: zeta_3 is not a cube in F_4, restrictive, no field at -12
    auto rep2 = ring_space(-3, factor_conductor(-3, 2));
    CHECK(!rep2.free_flags.at(2));
}
