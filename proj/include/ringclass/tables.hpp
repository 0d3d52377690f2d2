#ifndef RINGCLASS_TABLES_HPP
#define RINGCLASS_TABLES_HPP

#include <array>
#include <string>
#include <vector>

#include "ringclass/cubicenum.hpp"
#include "ringclass/integers.hpp"

namespace ringclass {

enum class census_stratum { non_pure, pure, cyclic, non_cyclic_real };

enum class row_condition {
    none,  // the f = 1 rows, labelled by the rank instead
    qm1,   // primes = -1 (mod 3)
    lp1,   // primes = +1 (mod 3)
    mixed, // both residues among the tame primes
    d3p,   // d = +3 (mod 9)
    d3m,   // d = -3 (mod 9)
    d1m,   // d = -1 (mod 3)
    d1p,   // d = +1 (mod 3)
    dm3,   // d = -3 exactly
    d1     // d = 1 (cyclic)
};

std::string condition_label(row_condition c);

struct conductor_shape {
    std::string pattern;  // "1", "q", "3", "9", "l", "q1q2", "3q", ...
    row_condition condition = row_condition::none;
    int rho = 0;

    bool operator==(const conductor_shape&) const = default;
    bool operator<(const conductor_shape& o) const
    {
        if (rho != o.rho) return rho < o.rho;
        if (pattern != o.pattern) return pattern < o.pattern;
        return (int)condition < (int)o.condition;
    }
};

// Shape of the admissible pair (d, f) in the census row taxonomy.
conductor_shape shape_of_pair(i64 d, i64 f, int rho);

struct census_row {
    census_stratum stratum = census_stratum::non_pure;
    conductor_shape shape;
    i64 total = 0;                        // admissible pairs in the row
    std::array<i64, 5> by_multiplicity{};  // counts at oracle multiplicity 0..4

    i64 field_count() const
    {
        i64 s = 0;
        for (int m = 1; m <= 4; ++m) s += m * by_multiplicity[m];
        return s;
    }
};

// Census of admissible pairs (d, f) with |f^2 d| <= bound of one stratum.
// Conductor-1 pairs enter only where fields exist (3-class rank >= 1), and a
// field-free row over base fields of Selmer rank >= 2 is kept out of the
// table, matching the reference accounting; such rows land in `omitted`.
std::vector<census_row> build_census(i64 bound, disc_sign sign, census_stratum stratum,
                                     int jobs = 1);
std::vector<census_row> build_census(i64 bound, disc_sign sign, census_stratum stratum,
                                     std::vector<census_row>* omitted, int jobs = 1);

struct census_totals {
    i64 discriminants = 0;  // pairs with multiplicity >= 1
    i64 fields = 0;         // weighted by multiplicity
    i64 nilets = 0;         // pairs with multiplicity 0
};
census_totals field_totals(i64 bound, disc_sign sign, census_stratum stratum);

enum class table_preset { angell1972, angell1975 };

i64 preset_bound(table_preset p);
disc_sign preset_sign(table_preset p);

// Reference counts for the two classical ranges.
const std::vector<census_row>& expected_rows(table_preset p);

struct diff_report {
    std::vector<std::string> mismatches;
    bool empty() const { return mismatches.empty(); }
};

// Cell-by-cell comparison of a computed census (both strata of the range)
// against the embedded reference counts.
diff_report diff_against_expected(const std::vector<census_row>& census, table_preset preset);

std::string census_to_csv(const std::vector<census_row>& rows);
std::string census_to_json(const std::vector<census_row>& rows);
std::string census_to_text(const std::vector<census_row>& rows);

} // namespace ringclass

#endif
