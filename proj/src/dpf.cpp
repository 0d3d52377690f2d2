#include "ringclass/dpf.hpp"

#include <algorithm>

namespace ringclass {

std::string dpf_token(dpf_type t)
{
    switch (t) {
        case dpf_type::alpha1: return "a1";
        case dpf_type::alpha2: return "a2";
        case dpf_type::alpha3: return "a3";
        case dpf_type::beta1: return "b1";
        case dpf_type::beta2: return "b2";
        case dpf_type::gamma: return "g";
        case dpf_type::delta1: return "d1";
        case dpf_type::delta2: return "d2";
        case dpf_type::epsilon: return "e";
        case dpf_type::zeta: return "z";
        case dpf_type::undecided: return "undecided";
    }
    return "undecided";
}

std::set<dpf_type> unramified_types(field_signature sig, int rho)
{
    if (rho < 1)
        throw validation_error("unramified cyclic cubics need positive 3-class rank");
    if (sig == field_signature::totally_complex) return {dpf_type::alpha1};
    if (rho == 1) return {dpf_type::delta1};
    return {dpf_type::alpha1, dpf_type::delta1};
}

bool check_constraint(const dpf_constraint& c)
{
    if (c.A < 0 || c.R < 0 || c.U < 0 || c.C < 0) return false;
    if (c.A > std::min(c.t, 2)) return false;
    if (c.R > std::min(c.s, 2)) return false;
    if (c.U > 1) return false;
    if (c.t == 0 && c.s == 0) {
        if (c.A != 0 || c.R != 0) return false;
        if (c.U + 1 != c.C) return false;
        if (c.C < 1 || c.C > std::min(c.rho, 2)) return false;
    }
    return true;
}

dpf_type decidable_type_column(const cubic_field_record& rec, int rho)
{
    if (rec.cyclic) return dpf_type::zeta;
    if (rec.f == 1 && rec.dK < 0) return dpf_type::alpha1;
    if (rec.f == 1 && rec.dK > 0 && rho == 1) return dpf_type::delta1;
    return dpf_type::undecided;
}

} // namespace ringclass
