#include "ringclass/conductor.hpp"

#include <algorithm>

#include "ringclass/quadclass.hpp"

namespace ringclass {

discriminant_decomposition decompose_discriminant(i64 dL)
{
    if (dL == 0) throw validation_error("discriminant must be nonzero");
    i64 m4 = mod_floor(dL, 4);
    if (m4 == 2 || m4 == 3)
        throw validation_error("dL = " + std::to_string(dL) + " is not a discriminant (2 or 3 mod 4)");
    if (dL > 0) {
        i64 r = isqrt64(dL);
        if (r * r == dL) return {r, 1};
    }
    i64 s = square_divisor_part(dL);
    i64 core = dL / (s * s);  // squarefree, carries the sign
    i64 dK, f;
    if (mod_floor(core, 4) == 1) {
        dK = core;
        f = s;
    } else {
        if (s % 2 != 0)
            throw validation_error("dL = " + std::to_string(dL) + " is not of the shape f^2 * dK");
        dK = 4 * core;
        f = s / 2;
    }
    require_fundamental_discriminant(dK);
    return {f, dK};
}

static bool tame_ok(i64 dK, i64 q)
{
    int chi = kronecker(dK, q);
    if (chi == 0) return false;
    return chi == kronecker(-3, q);
}

bool is_admissible(i64 dK, i64 f, i64 p)
{
    if (p != 3) throw validation_error("only p = 3 is wired");
    require_fundamental_discriminant(dK);
    if (f <= 0) throw validation_error("conductor must be positive");
    if (f == 1) return true;
    int e3 = 0;
    i64 rest = f;
    while (rest % 3 == 0) {
        rest /= 3;
        ++e3;
    }
    if (e3 > 2) throw validation_error("conductor with 3-part 27 is not supported");
    for (auto& [q, e] : factorize(rest)) {
        if (e >= 3) throw validation_error("conductor with cube factor " + std::to_string(q) + "^3");
        if (e == 2) return false;
        if (!tame_ok(dK, q)) return false;
    }
    if (e3 == 1) {
        i64 dm9 = mod_floor(dK, 9);
        if (!(dm9 == 3 || dm9 == 6)) return false;
        if (dK == -3 && rest == 1) return false;  // no cubic ray character of conductor exactly 3 over Q(zeta_3)
    } else if (e3 == 2) {
        i64 dm3 = mod_floor(dK, 3);
        i64 dm9 = mod_floor(dK, 9);
        if (!(dm3 == 1 || dm3 == 2 || dm9 == 6)) return false;
    }
    return true;
}

conductor_factorization factor_conductor(i64 dK, i64 f)
{
    if (!is_admissible(dK, f)) throw validation_error("conductor " + std::to_string(f) + " is not admissible over d = " + std::to_string(dK));
    conductor_factorization out;
    out.f = f;
    int e3 = 0;
    i64 rest = f;
    while (rest % 3 == 0) {
        rest /= 3;
        ++e3;
    }
    for (auto& [q, e] : factorize(rest)) {
        (void)e;
        prime_power_divisor pd;
        pd.q = q;
        pd.e = 1;
        pd.kind = kronecker(dK, q) > 0 ? divisor_kind::tame_split : divisor_kind::tame_inert;
        pd.regular = true;
        out.divisors.push_back(pd);
        ++out.t;
        if (pd.kind == divisor_kind::tame_split) ++out.s;
    }
    if (e3 > 0) {
        prime_power_divisor pd;
        pd.q = 3;
        pd.e = e3;
        pd.kind = divisor_kind::wild;
        pd.regular = !(e3 == 2 && mod_floor(dK, 9) == 6);
        out.divisors.push_back(pd);
        out.w = pd.regular ? 1 : 2;  // the irregular 9 adds two to the ring class rank
    }
    std::sort(out.divisors.begin(), out.divisors.end(),
              [](const prime_power_divisor& x, const prime_power_divisor& y) { return x.value() < y.value(); });
    out.tau = out.t + (e3 > 0 ? 1 : 0);
    return out;
}

std::vector<conductor_factorization> divisor_lattice(i64 dK, const conductor_factorization& fact)
{
    std::vector<i64> parts{1};
    int e3 = 0;
    for (auto& pd : fact.divisors)
        if (pd.kind == divisor_kind::wild) e3 = pd.e;
    std::vector<i64> tame;
    for (auto& pd : fact.divisors)
        if (pd.kind != divisor_kind::wild) tame.push_back(pd.q);

    std::vector<i64> divs{1};
    for (i64 q : tame) {
        size_t n = divs.size();
        for (size_t i = 0; i < n; ++i) divs.push_back(divs[i] * q);
    }
    if (e3 >= 1) {
        size_t n = divs.size();
        for (size_t i = 0; i < n; ++i) divs.push_back(divs[i] * 3);
        if (e3 == 2)
            for (size_t i = 0; i < n; ++i) divs.push_back(divs[i] * 9);
    }
    std::sort(divs.begin(), divs.end());

    std::vector<conductor_factorization> out;
    for (i64 c : divs)
        if (c == 1)
            out.push_back(conductor_factorization{});
        else if (is_admissible(dK, c))
            out.push_back(factor_conductor(dK, c));
    return out;
}

std::vector<i64> admissible_conductors(i64 dK, i64 fmax)
{
    std::vector<i64> out;
    for (i64 f = 1; f <= fmax; ++f) {
        bool shape_ok = true;
        i64 rest = f;
        int e3 = 0;
        while (rest % 3 == 0) {
            rest /= 3;
            ++e3;
        }
        if (e3 > 2) shape_ok = false;
        if (shape_ok && !is_squarefree(rest)) shape_ok = false;
        if (shape_ok && is_admissible(dK, f)) out.push_back(f);
    }
    return out;
}

} // namespace ringclass
