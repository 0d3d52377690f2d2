#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "ringclass/cubicenum.hpp"

using namespace ringclass;

namespace {

// Independent discriminant route: disc(F) = -Res(F(x,1), F'(x,1)) / a,
// with the resultant from the 5x5 Sylvester determinant (Bareiss).
i128 disc_via_resultant(const binary_cubic_form& f)
{
    i128 m[5][5] = {{f.a, f.b, f.c, f.d, 0},
                    {0, f.a, f.b, f.c, f.d},
                    {3 * (i128)f.a, 2 * (i128)f.b, f.c, 0, 0},
                    {0, 3 * (i128)f.a, 2 * (i128)f.b, f.c, 0},
                    {0, 0, 3 * (i128)f.a, 2 * (i128)f.b, f.c}};
    i128 prev = 1;
    int sign = 1;
    for (int k = 0; k < 4; ++k) {
        if (m[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < 5; ++r)
                if (m[r][k] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return 0;
            for (int c = 0; c < 5; ++c) std::swap(m[k][c], m[swap_row][c]);
            sign = -sign;
        }
        for (int r = k + 1; r < 5; ++r)
            for (int c = k + 1; c < 5; ++c)
                m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]) / prev;
        prev = m[k][k];
    }
    i128 res = sign * m[4][4];
    return -res / f.a;
}

binary_cubic_form t_swap(const binary_cubic_form& f) { return {f.d, f.c, f.b, f.a}; }
binary_cubic_form t_flipx(const binary_cubic_form& f) { return {-f.a, f.b, -f.c, f.d}; }
binary_cubic_form t_shift(const binary_cubic_form& f, i64 k)
{
    return {f.a, 3 * f.a * k + f.b, 3 * f.a * k * k + 2 * f.b * k + f.c,
            f.a * k * k * k + f.b * k * k + f.c * k + f.d};
}

std::multiset<i64> disc_multiset(const std::vector<cubic_field_record>& v)
{
    std::multiset<i64> out;
    for (auto& r : v) out.insert(r.dL);
    return out;
}

} // namespace

TEST_CASE("cubic discriminant: closed formula vs resultant")
{
    i64 seed = 12345;
    for (int i = 0; i < 4000; ++i) {
        auto next = [&] {
            seed = (seed * 6364136223846793005LL + 1442695040888963407LL);
            return (i64)((seed >> 17) % 41) - 20;
        };
        binary_cubic_form f{next(), next(), next(), next()};
        if (f.a == 0) continue;
        CHECK(f.disc() == disc_via_resultant(f));
    }
}

TEST_CASE("reduction is a GL2(Z) class invariant")
{
    i64 seed = 999;
    auto next = [&] {
        seed = (seed * 6364136223846793005LL + 1442695040888963407LL);
        return (i64)((seed >> 19) % 13) - 6;
    };
    int tested = 0;
    while (tested < 400) {
        binary_cubic_form f{next(), next(), next(), next()};
        if (f.disc() == 0 || !is_irreducible(f)) continue;
        ++tested;
        binary_cubic_form canon = reduce_cubic(f);
        CHECK(is_reduced_cubic(canon));
        binary_cubic_form g = f;
        for (int step = 0; step < 12; ++step) {
            switch ((seed = seed * 48271 % 2147483647) % 4) {
                case 0: g = t_swap(g); break;
                case 1: g = t_flipx(g); break;
                case 2: g = t_shift(g, 1); break;
                default: g = t_shift(g, -1); break;
            }
            if (std::max({std::llabs(g.a), std::llabs(g.b), std::llabs(g.c), std::llabs(g.d)}) >
                (1ll << 40))
                break;
        }
        CHECK(reduce_cubic(g) == canon);
    }
}

TEST_CASE("smallest class of each sign")
{
    auto neg = enumerate_forms(30, disc_sign::negative);
    REQUIRE(neg.size() == 1);
    CHECK(neg[0].disc() == -23);

    auto pos = enumerate_forms(100, disc_sign::positive);
    std::multiset<i64> discs;
    for (auto& f : pos) discs.insert((i64)f.disc());
    CHECK(discs == std::multiset<i64>{49, 81});

    auto pos148 = enumerate_forms(148, disc_sign::positive);
    std::multiset<i64> discs148;
    for (auto& f : pos148) discs148.insert((i64)f.disc());
    CHECK(discs148 == std::multiset<i64>{49, 81, 148});

    CHECK(enumerate_forms(20, disc_sign::negative).empty());
}

TEST_CASE("maximality via the Dedekind test")
{
    CHECK(is_maximal({1, 0, -1, -1}));            // disc -23, squarefree
    CHECK(is_maximal({1, 0, -3, -1}));            // disc 81, maximal at 3
    CHECK_FALSE(is_maximal({2, 0, -2, -2}));      // imprimitive multiple of the disc -23 form
    CHECK_THROWS_AS(is_maximal({1, 0, 0, -1}), validation_error);  // reducible
}

TEST_CASE("fields below 100 (negative side)")
{
    auto v = enumerate_fields(100, disc_sign::negative);
    CHECK(disc_multiset(v) == std::multiset<i64>{-23, -31, -44, -59, -76, -83, -87});
    for (auto& r : v) {
        CHECK((i128)r.f * r.f * r.dK == r.dL);  // -44 and -76 decompose with f = 2
        CHECK(!r.cyclic);
        CHECK(!r.pure);
        CHECK(r.signature == cubic_signature::simply_real);
    }
}

TEST_CASE("pure cubic detection at dL = -108 and -243")
{
    auto v = enumerate_fields(243, disc_sign::negative);
    bool saw108 = false, saw243 = false;
    for (auto& r : v) {
        if (r.dL == -108) {
            saw108 = true;
            CHECK(r.f == 6);
            CHECK(r.dK == -3);
            CHECK(r.pure);
        }
        if (r.dL == -243) {
            saw243 = true;
            CHECK(r.f == 9);
            CHECK(r.dK == -3);
            CHECK(r.pure);
        }
        if (r.dL == -23) CHECK(!r.pure);
    }
    CHECK(saw108);
    CHECK(saw243);
}

TEST_CASE("cyclic fields are recognized on the positive side")
{
    auto v = enumerate_fields(100, disc_sign::positive);
    REQUIRE(v.size() == 2);
    CHECK(v[0].dL == 49);
    CHECK(v[0].cyclic);
    CHECK(v[0].f == 7);
    CHECK(v[0].dK == 1);
    CHECK(v[1].dL == 81);
    CHECK(v[1].cyclic);
    CHECK(v[1].f == 9);
}

TEST_CASE("certified isomorphism test")
{
    CHECK(cubic_fields_isomorphic({0, -1, -1}, {0, -1, 1}));   // x^3-x-1 vs x^3-x+1
    CHECK(cubic_fields_isomorphic({0, 0, -2}, {0, 0, -4}));    // cbrt(2) vs cbrt(4)
    CHECK(!cubic_fields_isomorphic({0, 0, -2}, {0, 0, -3}));
    CHECK(!cubic_fields_isomorphic({0, -1, -1}, {0, 1, -1}));
}

TEST_CASE("brute force oracle basics")
{
    auto v23 = brute_force_oracle(23, disc_sign::negative);
    REQUIRE(v23.size() == 1);
    CHECK(v23[0].dL == -23);

    auto v81 = brute_force_oracle(81, disc_sign::positive);
    CHECK(disc_multiset(v81) == std::multiset<i64>{49, 81});

    CHECK(brute_force_oracle(0, disc_sign::negative).empty());
    CHECK_THROWS_AS(brute_force_oracle(2001, disc_sign::negative), validation_error);
}

TEST_CASE("oracle knows the classical non-monogenic field of discriminant -503")
{
    // x^3 - x^2 - 2x - 8 generates it with index 2
    auto v = brute_force_oracle(503, disc_sign::negative);
    int count503 = 0;
    for (auto& r : v)
        if (r.dL == -503) ++count503;
    CHECK(count503 == 1);
}

TEST_CASE("form enumeration and oracle agree as multisets")
{
    for (i64 bound : {500, 1000}) {
        for (auto sign : {disc_sign::negative, disc_sign::positive}) {
            auto a = enumerate_fields(bound, sign);
            auto b = brute_force_oracle(bound, sign);
            CHECK(disc_multiset(a) == disc_multiset(b));
        }
    }
}

TEST_CASE("deterministic order and range partitions concatenate")
{
    auto whole = enumerate_fields(2000, disc_sign::negative);
    auto parts = enumerate_fields(2000, disc_sign::negative, 3);
    REQUIRE(whole.size() == parts.size());
    for (size_t i = 0; i < whole.size(); ++i) CHECK(whole[i].form == parts[i].form);
    for (size_t i = 1; i < whole.size(); ++i)
        CHECK(std::llabs(whole[i - 1].dL) <= std::llabs(whole[i].dL));
}
