#include "doctest.h"

#include <set>

#include "ringclass/quadclass.hpp"

using namespace ringclass;

namespace {

std::vector<i64> fundamental_range(i64 lo, i64 hi)
{
    std::vector<i64> out;
    for (i64 d = lo; d <= hi; ++d)
        if (d != 0 && d != 1 && is_fundamental_discriminant(d)) out.push_back(d);
    return out;
}

// Smallest unit > 1 by direct search on (x^2 - d y^2)/4 = +-1.
quad_unit brute_force_unit(i64 d)
{
    for (i64 y = 1;; ++y) {
        for (i64 s : {-4, 4}) {
            i128 x2 = (i128)d * y * y + s;
            if (x2 <= 0) continue;
            i128 x = isqrt128(x2);
            if (x * x == x2)
                return {mpz_class((long)x), mpz_class((long)y), s == 4 ? 1 : -1};
        }
        REQUIRE(y < 2000000);
    }
}

} // namespace

TEST_CASE("fundamental discriminant validation")
{
    CHECK(is_fundamental_discriminant(-3));
    CHECK(is_fundamental_discriminant(-4));
    CHECK(is_fundamental_discriminant(5));
    CHECK(is_fundamental_discriminant(8));
    CHECK(is_fundamental_discriminant(1));
    CHECK(!is_fundamental_discriminant(0));
    CHECK(!is_fundamental_discriminant(-27));
    CHECK(!is_fundamental_discriminant(12 * 4));
    CHECK_THROWS_WITH_AS(require_fundamental_discriminant(-75),
                         doctest::Contains("5^2"), validation_error);
    CHECK_THROWS_WITH_AS(require_fundamental_discriminant(-92),
                         doctest::Contains("2^2"), validation_error);
    CHECK_THROWS_AS(require_fundamental_discriminant(7), validation_error);
}

TEST_CASE("class numbers of small imaginary fields")
{
    CHECK(quad_class_group(-3).class_number() == 1);
    CHECK(quad_class_group(-4).class_number() == 1);
    CHECK(quad_class_group(-23).class_number() == 3);
    CHECK(quad_class_group(-47).class_number() == 5);

    quad_class_group cl(-4027);
    CHECK(cl.class_number() == 9);
    auto gens = cl.generators();
    REQUIRE(gens.size() == 2);
    CHECK(gens[0].second == 3);
    CHECK(gens[1].second == 3);
}

TEST_CASE("the only reduced form of discriminant -3 is (1,1,1)")
{
    quad_class_group cl(-3);
    CHECK(cl.class_rep(0) == quadratic_form{1, 1, 1});
}

TEST_CASE("rho3 examples")
{
    CHECK(rho3(-23) == 1);
    CHECK(rho3(-3) == 0);
    CHECK(rho3(-4027) == 2);
    CHECK(rho3(1) == 0);
    CHECK(rho3(229) == 1);
    CHECK(rho3(5) == 0);
}

TEST_CASE("real quadratic class groups in both senses")
{
    // h(12) = 1 wide, 2 narrow; h(5) = 1 in both
    quad_class_group w12(12), n12(12, class_group_sense::narrow);
    CHECK(w12.class_number() == 1);
    CHECK(n12.class_number() == 2);
    CHECK(!w12.norm_minus_one());
    quad_class_group w5(5);
    CHECK(w5.class_number() == 1);
    CHECK(w5.norm_minus_one());
    // d = 229: h = 3
    quad_class_group w229(229);
    CHECK(w229.class_number() == 3);
}

TEST_CASE("composition group laws across small discriminants")
{
    for (i64 d : fundamental_range(-10000, -3)) {
        quad_class_group cl(d);
        i64 h = cl.class_number();
        size_t e = cl.principal_index();
        for (size_t i = 0; i < (size_t)h; ++i) {
            CHECK(cl.compose_classes(e, i) == i);
            CHECK(cl.class_pow(i, h) == e);
        }
        // spot-check associativity on a deterministic sample
        for (size_t k = 0; k < 5 && h > 1; ++k) {
            size_t i = (k * 7 + 1) % h, j = (k * 13 + 2) % h, l = (k * 29 + 3) % h;
            CHECK(cl.compose_classes(cl.compose_classes(i, j), l) ==
                  cl.compose_classes(i, cl.compose_classes(j, l)));
        }
    }
    for (i64 d : fundamental_range(5, 10000)) {
        quad_class_group cl(d);
        i64 h = cl.class_number();
        size_t e = cl.principal_index();
        for (size_t i = 0; i < (size_t)h; ++i) {
            CHECK(cl.compose_classes(e, i) == i);
            CHECK(cl.class_pow(i, h) == e);
        }
    }
}

TEST_CASE("rank3 agrees with the primary decomposition")
{
    for (i64 d : fundamental_range(-5000, 5000)) {
        if (d == 1) continue;
        quad_class_group cl(d);
        int from_gens = 0;
        for (auto& [g, ord] : cl.generators())
            if (ord % 3 == 0) ++from_gens;
        CHECK(cl.rank3() == from_gens);
    }
}

TEST_CASE("fundamental unit examples")
{
    auto u5 = fundamental_unit(5);
    CHECK(u5.x == 1);
    CHECK(u5.y == 1);
    CHECK(u5.norm == -1);

    auto u8 = fundamental_unit(8);
    CHECK(u8.x == 2);
    CHECK(u8.y == 1);
    CHECK(u8.norm == -1);

    auto u229 = fundamental_unit(229);
    CHECK(u229.x == 15);
    CHECK(u229.y == 1);
    CHECK(u229.norm == -1);

    CHECK_THROWS_AS(fundamental_unit(-3), validation_error);
    CHECK_THROWS_AS(fundamental_unit(1), validation_error);
}

TEST_CASE("fundamental unit is minimal (bounded search, d <= 200)")
{
    for (i64 d : fundamental_range(5, 200)) {
        auto cf = fundamental_unit(d);
        auto bf = brute_force_unit(d);
        CHECK(cf.x == bf.x);
        CHECK(cf.y == bf.y);
        CHECK(cf.norm == bf.norm);
    }
}

TEST_CASE("unit norm sign matches narrow vs wide class numbers")
{
    for (i64 d : fundamental_range(5, 3000)) {
        quad_class_group wide(d), narrow(d, class_group_sense::narrow);
        bool minus_one = fundamental_unit(d).norm == -1;
        CHECK(wide.norm_minus_one() == minus_one);
        if (minus_one)
            CHECK(wide.class_number() == narrow.class_number());
        else
            CHECK(2 * wide.class_number() == narrow.class_number());
        CHECK(wide.rank3() == narrow.rank3());
    }
}

TEST_CASE("selmer rank formula")
{
    CHECK(selmer_rank(3, -23, 1) == 1);
    CHECK(selmer_rank(3, -3, 0) == 1);
    CHECK(selmer_rank(3, 229, 1) == 2);
    CHECK(selmer_rank(5, -23, 0) == 0);
    CHECK(selmer_rank(5, 229, 0) == 1);
    CHECK_THROWS_AS(selmer_rank(2, -23, 1), validation_error);
    for (i64 d : fundamental_range(-2000, 2000)) {
        if (d == 1) continue;
        int r = rho3(d);
        int s = selmer_rank(3, d, r);
        CHECK((s - r == 0 || s - r == 1));
        CHECK((s - r == 1) == (d > 0 || d == -3));
    }
}
