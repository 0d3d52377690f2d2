#include "doctest.h"

#include "ringclass/tables.hpp"

using namespace ringclass;

TEST_CASE("row shapes and conditions")
{
    CHECK(shape_of_pair(-23, 1, 1) == conductor_shape{"1", row_condition::none, 1});
    CHECK(shape_of_pair(-4, 9, 0) == conductor_shape{"9", row_condition::d1m, 0});
    CHECK(shape_of_pair(-3, 6, 0) == conductor_shape{"3q", row_condition::dm3, 0});
    CHECK(shape_of_pair(-3, 14, 0) == conductor_shape{"ql", row_condition::mixed, 0});
    CHECK(shape_of_pair(1, 63, 0) == conductor_shape{"9l", row_condition::d1, 0});
    CHECK(shape_of_pair(229, 18, 1) == conductor_shape{"9q", row_condition::d1p, 1});
    CHECK(shape_of_pair(-15, 3, 0) == conductor_shape{"3", row_condition::d3p, 0});
    CHECK(shape_of_pair(-12, 9, 0) == conductor_shape{"9", row_condition::d3m, 0});
    CHECK(shape_of_pair(-23, 10, 1) == conductor_shape{"q1q2", row_condition::qm1, 1});
    // with a wild part and two tame primes the row carries the tame residues
    CHECK(shape_of_pair(111, 30, 0) == conductor_shape{"3q1q2", row_condition::qm1, 0});
}

TEST_CASE("embedded reference tables are internally consistent")
{
    // simply real range
    i64 total = 0, fields = 0;
    std::array<i64, 5> m{};
    for (auto& r : expected_rows(table_preset::angell1972)) {
        if (r.stratum != census_stratum::non_pure) continue;
        total += r.total;
        fields += r.field_count();
        for (int i = 0; i < 5; ++i) m[i] += r.by_multiplicity[i];
        i64 row_sum = 0;
        for (int i = 0; i < 5; ++i) row_sum += r.by_multiplicity[i];
        CHECK(row_sum == r.total);
    }
    CHECK(total == 3163);
    CHECK(m == std::array<i64, 5>{235, 2824, 24, 58, 22});
    CHECK(fields == 3134);
    CHECK(m[1] + 2 * m[2] + 3 * m[3] + 4 * m[4] == 3134);

    total = fields = 0;
    m = {};
    for (auto& r : expected_rows(table_preset::angell1972)) {
        if (r.stratum != census_stratum::pure) continue;
        total += r.total;
        fields += r.field_count();
        for (int i = 0; i < 5; ++i) m[i] += r.by_multiplicity[i];
    }
    CHECK(total == 52);
    CHECK(m == std::array<i64, 5>{20, 29, 3, 0, 0});
    CHECK(fields == 35);

    total = fields = 0;
    m = {};
    for (auto& r : expected_rows(table_preset::angell1975)) {
        if (r.stratum != census_stratum::non_cyclic_real) continue;
        total += r.total;
        fields += r.field_count();
        for (int i = 0; i < 5; ++i) m[i] += r.by_multiplicity[i];
    }
    CHECK(total == 8420);
    CHECK(m == std::array<i64, 5>{3733, 4652, 9, 21, 5});
    CHECK(fields == 4753);

    i64 singlets = 0, doublets = 0;
    for (auto& r : expected_rows(table_preset::angell1975)) {
        if (r.stratum != census_stratum::cyclic) continue;
        singlets += r.by_multiplicity[1];
        doublets += r.by_multiplicity[2];
    }
    CHECK(singlets == 31);
    CHECK(doublets == 10);
    CHECK(singlets + 2 * doublets == 51);
}

TEST_CASE("census rows partition the admissible pairs of a stratum")
{
    auto rows = build_census(2000, disc_sign::negative, census_stratum::non_pure);
    i64 fields_from_rows = 0;
    for (auto& r : rows) {
        i64 sum = 0;
        for (int m = 0; m < 5; ++m) sum += r.by_multiplicity[m];
        CHECK(sum == r.total);
        fields_from_rows += r.field_count();
    }
    i64 fields_direct = 0;
    for (auto& rec : enumerate_fields(2000, disc_sign::negative))
        if (!rec.pure) ++fields_direct;
    CHECK(fields_from_rows == fields_direct);
}

TEST_CASE("field totals at a small pure bound")
{
    // pairs over d = -3 with 36 f^2 <= ...: f in {2, 5, 6}, only -108 is a field
    auto t = field_totals(108, disc_sign::negative, census_stratum::pure);
    CHECK(t.discriminants == 1);
    CHECK(t.fields == 1);
    CHECK(t.nilets == 2);
}

TEST_CASE("fault injection: a broken census does not diff clean")
{
    auto np = build_census(20000, disc_sign::negative, census_stratum::non_pure);
    auto pu = build_census(20000, disc_sign::negative, census_stratum::pure);
    std::vector<census_row> all = np;
    all.insert(all.end(), pu.begin(), pu.end());
    REQUIRE(diff_against_expected(all, table_preset::angell1972).empty());
    all.front().total += 1;
    CHECK(!diff_against_expected(all, table_preset::angell1972).empty());
    all.front().total -= 1;
    all.pop_back();
    CHECK(!diff_against_expected(all, table_preset::angell1972).empty());
}

TEST_CASE("census is independent of the parallelism degree")
{
    auto one = build_census(3000, disc_sign::negative, census_stratum::non_pure, 1);
    auto three = build_census(3000, disc_sign::negative, census_stratum::non_pure, 3);
    REQUIRE(one.size() == three.size());
    for (size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].shape == three[i].shape);
        CHECK(one[i].total == three[i].total);
        CHECK(one[i].by_multiplicity == three[i].by_multiplicity);
    }
}

TEST_CASE("serialization round trip sanity")
{
    auto rows = build_census(500, disc_sign::negative, census_stratum::non_pure);
    auto csv = census_to_csv(rows);
    CHECK(csv.find("pattern,condition,rho,total") == 0);
    auto json = census_to_json(rows);
    CHECK(json.find("\"pattern\"") != std::string::npos);
    auto text = census_to_text(rows);
    CHECK(text.find("summary") != std::string::npos);
}
