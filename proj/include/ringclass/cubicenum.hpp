#ifndef RINGCLASS_CUBICENUM_HPP
#define RINGCLASS_CUBICENUM_HPP

#include <array>
#include <string>
#include <vector>

#include "ringclass/integers.hpp"

namespace ringclass {

// Integral binary cubic form a x^3 + b x^2 y + c xy^2 + d y^3.
struct binary_cubic_form {
    i64 a = 0, b = 0, c = 0, d = 0;

    i128 disc() const
    {
        i128 A = a, B = b, C = c, D = d;
        return 18 * A * B * C * D + B * B * C * C - 4 * A * C * C * C - 4 * B * B * B * D -
               27 * A * A * D * D;
    }
    i128 eval(i128 x, i128 y) const
    {
        return ((((i128)a * x + b * y) * x + c * y * y) * x) + (i128)d * y * y * y;
    }
    std::array<i64, 4> tuple() const { return {a, b, c, d}; }
    bool operator==(const binary_cubic_form& o) const = default;
};

// Canonical representative of the GL2(Z)-class (Belabas' reduction,
// "A fast algorithm to compute cubic fields").
binary_cubic_form reduce_cubic(binary_cubic_form f);
bool is_reduced_cubic(const binary_cubic_form& f);

bool is_irreducible(const binary_cubic_form& f);

// True iff the cubic ring of the form is the maximal order of its field,
// by the Dedekind-style test at every prime q with q^2 | disc.
// Rejects reducible forms.
bool is_maximal(const binary_cubic_form& f);

enum class disc_sign { positive, negative };

// One reduced representative per GL2(Z)-class of irreducible forms with
// lo <= |disc| <= hi of the requested sign, sorted by (|disc|, a, b, c, d).
std::vector<binary_cubic_form> enumerate_forms_range(i64 lo, i64 hi, disc_sign sign);

inline std::vector<binary_cubic_form> enumerate_forms(i64 bound, disc_sign sign)
{
    return enumerate_forms_range(1, bound, sign);
}

enum class cubic_signature { totally_real, simply_real };

// One cubic field, keyed by its maximal-order form.
struct cubic_field_record {
    binary_cubic_form form;   // reduced maximal form
    i64 dL = 0;               // field discriminant
    i64 f = 1;                // conductor, dL = f^2 * dK
    i64 dK = 1;               // quadratic resolvent discriminant (1 for cyclic)
    i64 a2 = 0, a1 = 0, a0 = 0;  // monic generator x^3 + a2 x^2 + a1 x + a0
    cubic_signature signature = cubic_signature::simply_real;
    bool cyclic = false;
    bool pure = false;
};

// All cubic fields with |dL| <= bound of the given sign (including cyclic
// ones on the positive side), one record per isomorphism class.
std::vector<cubic_field_record> enumerate_fields(i64 bound, disc_sign sign, int jobs = 1);
std::vector<cubic_field_record> enumerate_fields_range(i64 lo, i64 hi, disc_sign sign);

// Independent cross-check: monic cubics from a Hunter-style box, maximalized
// by multiplier-ring steps, deduplicated by certified field isomorphism.
// Guarded to bound <= 2000.
std::vector<cubic_field_record> brute_force_oracle(i64 bound, disc_sign sign);

// Certified isomorphism test for monic integral cubics (same field check).
bool cubic_fields_isomorphic(const std::array<i64, 3>& g1, const std::array<i64, 3>& g2);

std::string record_csv_header();
std::string record_to_csv(const cubic_field_record& r);
std::string record_to_json(const cubic_field_record& r);

} // namespace ringclass

#endif
