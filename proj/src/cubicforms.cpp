#include "ringclass/cubicenum.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdlib>

namespace ringclass {

namespace {

binary_cubic_form swap_xy(const binary_cubic_form& f) { return {f.d, f.c, f.b, f.a}; }
binary_cubic_form flip_x(const binary_cubic_form& f) { return {-f.a, f.b, -f.c, f.d}; }
binary_cubic_form flip_y(const binary_cubic_form& f) { return {f.a, -f.b, f.c, -f.d}; }

// x -> x + k y
binary_cubic_form shift(const binary_cubic_form& f, i64 k)
{
    return {f.a,
            3 * f.a * k + f.b,
            3 * f.a * k * k + 2 * f.b * k + f.c,
            f.a * k * k * k + f.b * k * k + f.c * k + f.d};
}

i64 floordiv(i128 a, i128 b)
{
    assert(b > 0);
    i128 q = a / b;
    if (a % b != 0 && a < 0) --q;
    return (i64)q;
}

i64 ceildiv(i128 a, i128 b)
{
    assert(b > 0);
    i128 q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return (i64)q;
}

} // namespace

binary_cubic_form reduce_cubic(binary_cubic_form f)
{
    if (f.disc() == 0) throw validation_error("cannot reduce a degenerate cubic form");
    bool positive = f.disc() > 0;
    for (long guard = 0;; ++guard) {
        if (guard > 1000000) throw std::logic_error("cubic reduction did not converge");
        if (positive) {
            i128 P = (i128)f.b * f.b - 3 * (i128)f.a * f.c;
            i128 Q = (i128)f.b * f.c - 9 * (i128)f.a * f.d;
            i128 R = (i128)f.c * f.c - 3 * (i128)f.b * f.d;
            if (f.a < 0) {
                f = flip_x(f);
            } else if (f.b < 0 || (f.b == 0 && f.d < 0)) {
                f = flip_y(f);
            } else if (P > R || (P == R && (f.a > std::llabs(f.d) ||
                                            (f.a == std::llabs(f.d) && f.b >= std::llabs(f.c))))) {
                f = swap_xy(f);
            } else if (Q > P) {
                f = shift(f, -1);
            } else if (-Q > P) {
                f = shift(f, 1);
            } else if (Q == 0 && f.d >= 0) {
                // Belabas demands d < 0 when Q = 0; cannot arise for irreducible input.
                throw std::logic_error("unexpected tie in totally real cubic reduction");
            } else if (P == Q && f.b >= std::llabs(3 * f.a - f.b)) {
                f = shift(f, -1);
            } else {
                break;
            }
        } else {
            i128 bd = (i128)f.b * f.d;
            i128 ac = (i128)f.a * f.c;
            i128 t = (i128)f.d * f.d - (i128)f.a * f.a + ac - bd;
            i128 adbc = (i128)f.a * f.d - (i128)f.b * f.c;
            if (t <= 0) {
                f = swap_xy(f);
            } else if (f.a < 0) {
                f = flip_x(f);
            } else if (f.b < 0 || (f.b == 0 && f.d < 0)) {
                f = flip_y(f);
            } else if (adbc >= (i128)(f.a + f.b) * (f.a + f.b) + ac) {
                f = shift(f, 1);
            } else if (adbc <= -(i128)(f.a - f.b) * (f.a - f.b) - ac) {
                f = shift(f, -1);
            } else {
                break;
            }
        }
    }
    return f;
}

bool is_reduced_cubic(const binary_cubic_form& f) { return reduce_cubic(f) == f; }

bool is_irreducible(const binary_cubic_form& f)
{
    if (f.a == 0 || f.d == 0) return false;
    // no projective root mod p certifies irreducibility
    for (i64 p : {5, 7, 11, 13, 17}) {
        if (f.a % p == 0) continue;
        bool root = false;
        for (i64 r = 0; r < p && !root; ++r)
            if (f.eval(r, 1) % p == 0) root = true;
        if (!root) return true;
    }
    // exact rational root test: x = s*p/q with p | d, q | a
    i64 aa = std::llabs(f.a), dd = std::llabs(f.d);
    for (i64 q = 1; q * q <= aa; ++q) {
        if (aa % q) continue;
        for (i64 qq : {q, aa / q}) {
            if (qq != q && q * q == aa) continue;
            for (i64 p = 1; p * p <= dd; ++p) {
                if (dd % p) continue;
                for (i64 pp : {p, dd / p}) {
                    if (pp != p && p * p == dd) continue;
                    if (gcd64(pp, qq) != 1) continue;
                    if (f.eval(pp, qq) == 0 || f.eval(-pp, qq) == 0) return false;
                }
            }
        }
    }
    return true;
}

bool is_maximal(const binary_cubic_form& f)
{
    if (!is_irreducible(f)) throw validation_error("maximality test requires an irreducible form");
    i128 D = f.disc();
    i128 aD = abs128(D);
    if (aD > (i128)4e18) throw resource_error("discriminant too large to factor");
    for (auto& [p, e] : factorize((i64)aD)) {
        if (e < 2) continue;
        if (p > 20000000) throw resource_error("square prime factor too large for the Dedekind test");
        if (f.a % p == 0 && f.b % p == 0 && f.c % p == 0 && f.d % p == 0) return false;
        if (f.a % (p * p) == 0 && f.b % p == 0) return false;
        i128 p2 = (i128)p * p;
        for (i64 r = 0; r < p; ++r) {
            if (f.eval(r, 1) % p != 0) continue;
            if (f.eval(r, 1) % p2 == 0 && f.eval(r + p, 1) % p2 == 0) return false;
        }
    }
    return true;
}

namespace {

void consider(std::vector<std::array<i64, 4>>& out, const binary_cubic_form& f, i64 lo, i64 hi,
              bool positive)
{
    i128 D = f.disc();
    if (positive) {
        if (D < lo || D > hi) return;
    } else {
        if (D > -lo || D < -(i128)hi) return;
    }
    if (!is_irreducible(f)) return;
    out.push_back(reduce_cubic(f).tuple());
}

// Coefficient ranges for reduced forms with 0 < disc <= hi follow from the
// reduced Hessian (P,Q,R): |Q| <= P <= R, 4PR - Q^2 = 3D, and the covariant
// identity (2b^3 - 9abc + 27a^2 d)^2 = 4P^3 - 27 a^2 D.
void enumerate_positive(i64 lo, i64 hi, std::vector<std::array<i64, 4>>& out)
{
    i64 fsX = isqrt64(hi);
    i64 amax = (i64)(2.0 * std::pow((double)hi, 0.25) / std::sqrt(27.0)) + 2;
    for (i64 a = 1; a <= amax; ++a) {
        i64 bmax = (i64)(1.5 * a + std::pow((double)hi, 0.25)) + 2;
        for (i64 b = 0; b <= bmax; ++b) {
            i128 twob3a = (i128)2 * b - 3 * a;
            i64 Pmin = ceildiv(27 * (i128)a * a + twob3a * twob3a, 4);
            if (Pmin < 1) Pmin = 1;
            if (Pmin > fsX) continue;
            i64 clo = ceildiv((i128)b * b - fsX, 3 * (i128)a);
            i64 chi = floordiv((i128)b * b - Pmin, 3 * (i128)a);
            for (i64 c = clo; c <= chi; ++c) {
                i64 P = (i64)((i128)b * b - 3 * (i128)a * c);
                if (P < 1 || P > fsX) continue;
                i64 Rmax = floordiv((i128)P * P + 3 * (i128)hi, 4 * (i128)P);
                i128 bc = (i128)b * c;
                i64 dlo = ceildiv(bc - P, 9 * (i128)a);
                i64 dhi = floordiv(bc + P, 9 * (i128)a);
                if (b > 0) {
                    dlo = std::max(dlo, ceildiv((i128)c * c - Rmax, 3 * (i128)b));
                    dhi = std::min(dhi, floordiv((i128)c * c - P, 3 * (i128)b));
                } else {
                    i128 R = (i128)c * c;
                    if (R < P || R > Rmax) continue;
                }
                i128 A2 = -27 * (i128)a * a;
                i128 A1 = 18 * (i128)a * b * c - 4 * (i128)b * b * b;
                i128 A0 = (i128)b * b * c * c - 4 * (i128)a * c * c * c;
                for (i64 d = dlo; d <= dhi; ++d) {
                    i128 D = (A2 * d + A1) * d + A0;
                    if (D < lo || D > hi) continue;
                    consider(out, {a, b, c, d}, lo, hi, true);
                }
            }
        }
    }
}

// For disc < 0 a reduced form factors as a(x - theta y) q(x,y) with the
// complex-root quadratic q Gauss-reduced; that pins |Re z| <= 1/2, |z| >= 1
// and yields the box below (padded for boundary ties).
void enumerate_negative(i64 lo, i64 hi, std::vector<std::array<i64, 4>>& out)
{
    double X = (double)hi;
    i64 amax = (i64)std::pow(16.0 * X / 27.0, 0.25) + 2;
    for (i64 a = 1; a <= amax; ++a) {
        double th = 0.5 + std::pow(X / 3.0, 0.25) / a;
        double t2 = std::pow(X / 4.0, 1.0 / 3.0) / std::pow((double)a, 4.0 / 3.0);
        double v = 0.25 + t2;
        i64 bmax = (i64)(1.5 * a + std::pow(X / 3.0, 0.25)) + 2;
        i64 cmax = (i64)(a * v + a * th) + 2;
        i64 dmax = (i64)(a * th * v) + 2;
        for (i64 b = 0; b <= bmax; ++b) {
            for (i64 c = -cmax; c <= cmax; ++c) {
                i128 A2 = -27 * (i128)a * a;
                i128 A1 = 18 * (i128)a * b * c - 4 * (i128)b * b * b;
                i128 A0 = (i128)b * b * c * c - 4 * (i128)a * c * c * c;
                for (i64 d = -dmax; d <= dmax; ++d) {
                    i128 D = (A2 * d + A1) * d + A0;
                    if (D > -lo || D < -(i128)hi) continue;
                    consider(out, {a, b, c, d}, lo, hi, false);
                }
            }
        }
    }
}

} // namespace

std::vector<binary_cubic_form> enumerate_forms_range(i64 lo, i64 hi, disc_sign sign)
{
    if (hi > 10000000)
        throw validation_error("enumeration bound above 10^7 is not supported");
    if (lo < 1) lo = 1;
    std::vector<std::array<i64, 4>> tuples;
    if (hi >= lo) {
        if (sign == disc_sign::positive)
            enumerate_positive(lo, hi, tuples);
        else
            enumerate_negative(lo, hi, tuples);
    }
    std::sort(tuples.begin(), tuples.end(), [](const auto& x, const auto& y) {
        binary_cubic_form fx{x[0], x[1], x[2], x[3]}, fy{y[0], y[1], y[2], y[3]};
        i128 dx = abs128(fx.disc()), dy = abs128(fy.disc());
        if (dx != dy) return dx < dy;
        return x < y;
    });
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    std::vector<binary_cubic_form> out;
    out.reserve(tuples.size());
    for (auto& t : tuples) out.push_back({t[0], t[1], t[2], t[3]});
    return out;
}

} // namespace ringclass
