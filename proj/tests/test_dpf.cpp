#include "doctest.h"

#include "ringclass/dpf.hpp"

using namespace ringclass;

TEST_CASE("unramified type theorem")
{
    using S = std::set<dpf_type>;
    CHECK(unramified_types(field_signature::totally_complex, 1) == S{dpf_type::alpha1});
    CHECK(unramified_types(field_signature::totally_complex, 5) == S{dpf_type::alpha1});
    CHECK(unramified_types(field_signature::totally_real, 1) == S{dpf_type::delta1});
    CHECK(unramified_types(field_signature::totally_real, 2) ==
          S{dpf_type::alpha1, dpf_type::delta1});
    CHECK_THROWS_AS(unramified_types(field_signature::totally_real, 0), validation_error);
    // never more than two types, singleton exactly for complex or rank 1
    for (int rho = 1; rho <= 4; ++rho)
        for (auto sig : {field_signature::totally_real, field_signature::totally_complex}) {
            auto s = unramified_types(sig, rho);
            CHECK(s.size() <= 2);
            CHECK((s.size() == 1) == (sig == field_signature::totally_complex || rho == 1));
        }
}

TEST_CASE("constraint bounds from the unramified proof")
{
    CHECK(check_constraint({0, 0, 0, 1, 0, 0, 1}));   // type delta1, C = 1
    CHECK(check_constraint({0, 0, 1, 2, 0, 0, 2}));   // type alpha1, C = 2
    CHECK(!check_constraint({1, 0, 0, 1, 0, 0, 1}));  // A > min(t,2) = 0
    CHECK(!check_constraint({0, 0, 1, 2, 0, 0, 1}));  // C > min(rho,2)
    CHECK(!check_constraint({0, 0, 0, 2, 0, 0, 2}));  // U + 1 != C
    CHECK(!check_constraint({0, 3, 0, 1, 2, 2, 1}));  // R > 2
    CHECK(check_constraint({2, 1, 0, 1, 3, 1, 1}));
}

TEST_CASE("decidable type column")
{
    cubic_field_record cyc;
    cyc.cyclic = true;
    cyc.dL = 49;
    cyc.dK = 1;
    cyc.f = 7;
    CHECK(decidable_type_column(cyc, 0) == dpf_type::zeta);

    cubic_field_record imag;
    imag.dL = -23;
    imag.dK = -23;
    imag.f = 1;
    CHECK(decidable_type_column(imag, 1) == dpf_type::alpha1);

    cubic_field_record real;
    real.dL = 229;
    real.dK = 229;
    real.f = 1;
    real.signature = cubic_signature::totally_real;
    CHECK(decidable_type_column(real, 1) == dpf_type::delta1);
    CHECK(decidable_type_column(real, 2) == dpf_type::undecided);

    cubic_field_record ram;
    ram.dL = -108;
    ram.dK = -3;
    ram.f = 6;
    CHECK(decidable_type_column(ram, 0) == dpf_type::undecided);
}

TEST_CASE("ascii tokens")
{
    CHECK(dpf_token(dpf_type::alpha1) == "a1");
    CHECK(dpf_token(dpf_type::alpha3) == "a3");
    CHECK(dpf_token(dpf_type::beta2) == "b2");
    CHECK(dpf_token(dpf_type::gamma) == "g");
    CHECK(dpf_token(dpf_type::delta2) == "d2");
    CHECK(dpf_token(dpf_type::epsilon) == "e");
    CHECK(dpf_token(dpf_type::zeta) == "z");
    CHECK(dpf_token(dpf_type::undecided) == "undecided");
}
