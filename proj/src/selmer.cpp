#include "ringclass/selmer.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "ringclass/quadclass.hpp"

namespace ringclass {

quad_int qmul(i64 d, const quad_int& u, const quad_int& v)
{
    quad_int r;
    mpz_class xx = u.x * v.x + mpz_class((long)d) * u.y * v.y;
    mpz_class yy = u.x * v.y + u.y * v.x;
    assert(mpz_even_p(xx.get_mpz_t()) && mpz_even_p(yy.get_mpz_t()));
    r.x = xx / 2;
    r.y = yy / 2;
    return r;
}

mpz_class qnorm(i64 d, const quad_int& u)
{
    mpz_class n4 = u.x * u.x - mpz_class((long)d) * u.y * u.y;
    assert(mpz_divisible_ui_p(n4.get_mpz_t(), 4));
    return n4 / 4;
}

namespace {

// ---- ideals as 2-dimensional HNF lattices in the basis 1, omega ----
// omega = (s + sqrt(d))/2 with s = d mod 2; omega^2 = s*omega + (d - s^2)/4

struct wcoord {
    mpz_class u, v;  // u + v*omega
};

wcoord to_wcoord(i64 d, const quad_int& a)
{
    i64 s = mod_floor(d, 2);
    mpz_class u = a.x - s * a.y;
    assert(mpz_even_p(u.get_mpz_t()));
    return {u / 2, a.y};
}

wcoord wmul_omega(i64 d, const wcoord& a)
{
    i64 s = mod_floor(d, 2);
    i64 m = (i64)((d - s * s) / 4);
    return {a.v * m, a.u + a.v * s};
}

struct ideal_hnf {
    mpz_class a, b, c;  // Z*a + Z*(b + c*omega), c | a, c | b, 0 <= b < a

    bool operator==(const ideal_hnf& o) const { return a == o.a && b == o.b && c == o.c; }
};

ideal_hnf hnf2(std::vector<wcoord> cols)
{
    // reduce the omega row to a single pivot by the Euclidean algorithm
    size_t piv = SIZE_MAX;
    for (size_t i = 0; i < cols.size(); ++i)
        if (cols[i].v != 0) {
            piv = i;
            break;
        }
    if (piv == SIZE_MAX) throw std::logic_error("ideal of rank < 2");
    for (size_t i = piv + 1; i < cols.size(); ++i) {
        while (cols[i].v != 0) {
            mpz_class q = cols[piv].v / cols[i].v;
            if (q != 0) {
                cols[piv].u -= q * cols[i].u;
                cols[piv].v -= q * cols[i].v;
            }
            std::swap(cols[piv], cols[i]);
        }
    }
    if (cols[piv].v < 0) {
        cols[piv].u = -cols[piv].u;
        cols[piv].v = -cols[piv].v;
    }
    mpz_class a = 0;
    for (size_t i = 0; i < cols.size(); ++i) {
        if (i == piv) continue;
        assert(cols[i].v == 0);
        a = gcd(a, cols[i].u);
    }
    if (a == 0) throw std::logic_error("ideal of rank < 2");
    if (a < 0) a = -a;
    mpz_class b;
    mpz_fdiv_r(b.get_mpz_t(), cols[piv].u.get_mpz_t(), a.get_mpz_t());
    return {a, b, cols[piv].v};
}

ideal_hnf ideal_mul(i64 d, const ideal_hnf& I, const ideal_hnf& J)
{
    wcoord gi[2] = {{I.a, 0}, {I.b, I.c}};
    wcoord gj[2] = {{J.a, 0}, {J.b, J.c}};
    std::vector<wcoord> cols;
    for (auto& x : gi)
        for (auto& y : gj) {
            // (xu + xv w)(yu + yv w) with w^2 = s w + m
            i64 s = mod_floor(d, 2);
            i64 m = (i64)((d - s * s) / 4);
            mpz_class cu = x.u * y.u + x.v * y.v * m;
            mpz_class cv = x.u * y.v + x.v * y.u + x.v * y.v * s;
            cols.push_back({cu, cv});
        }
    return hnf2(cols);
}

ideal_hnf principal_ideal(i64 d, const quad_int& alpha)
{
    wcoord c0 = to_wcoord(d, alpha);
    wcoord c1 = wmul_omega(d, c0);
    return hnf2({c0, c1});
}

ideal_hnf form_ideal(i64 d, const quadratic_form& g)
{
    assert(g.a > 0);
    i64 s = mod_floor(d, 2);
    mpz_class u = mpz_class((long)(-g.b - s));
    assert(mpz_even_p(u.get_mpz_t()));
    return hnf2({{mpz_class((long)g.a), 0}, {u / 2, 1}});
}

double log_unit(const quad_unit& e, i64 d)
{
    long exp_x;
    double man = mpz_get_d_2exp(&exp_x, e.x.get_mpz_t());
    double lx = std::log(std::fabs(man)) + exp_x * std::log(2.0);
    // eps = (x + y sqrt d)/2, both halves comparable
    (void)d;
    return lx;
}

quad_int search_cube_generator(i64 d, i64 A, const ideal_hnf& target)
{
    i64 vmax;
    std::vector<int> signs;
    if (d < 0) {
        vmax = isqrt64((i64)((4.0 * A) * A * (double)A / (double)(-d))) + 2;
        signs = {1};
    } else {
        double r = log_unit(fundamental_unit(d), d);
        double est = 2.0 * std::pow((double)A, 1.5) * std::exp(r / 2) / std::sqrt((double)d);
        if (est > 2e8) throw resource_error("cube generator search bound too large for d = " + std::to_string(d));
        vmax = (i64)est + 50;
        signs = {1, -1};
    }
    i128 A3 = (i128)A * A * A;
    for (i64 v = 0; v <= vmax; ++v) {
        for (int sg : signs) {
            i128 X2 = (i128)d * v * v + sg * 4 * A3;
            if (X2 < 0) continue;
            i128 X = isqrt128(X2);
            if (X * X != X2) continue;
            if (mod_floor((i64)(X % 2), 2) != mod_floor(d * v, 2)) continue;
            for (int xs : {1, -1}) {
                if (X == 0 && xs < 0) continue;
                quad_int alpha{mpz_class((long)(xs * (i64)X)), mpz_class((long)v)};
                if (principal_ideal(d, alpha) == target) return alpha;
            }
        }
    }
    throw resource_error("no principal generator of the ideal cube within the search bound (d = " +
                         std::to_string(d) + ", norm " + std::to_string(A) + "^3)");
}

} // namespace

selmer_space selmer_basis(i64 d, i64 coprime_to)
{
    require_fundamental_discriminant(d);
    if (d == 1) throw validation_error("the rational field has no Selmer space");
    selmer_space S;
    S.d = d;
    quad_class_group cl(d);
    size_t e = cl.principal_index();
    std::vector<size_t> torsion;
    for (size_t i = 0; i < (size_t)cl.class_number(); ++i)
        if (cl.class_pow(i, 3) == e) torsion.push_back(i);
    std::set<size_t> span{e};
    std::vector<size_t> basis_cls;
    for (size_t t : torsion) {
        if (span.count(t)) continue;
        basis_cls.push_back(t);
        std::set<size_t> bigger;
        for (size_t x : span) {
            bigger.insert(x);
            size_t xt = cl.compose_classes(x, t);
            bigger.insert(xt);
            bigger.insert(cl.compose_classes(xt, t));
        }
        span = std::move(bigger);
    }
    assert(span.size() == torsion.size());

    i64 m = coprime_to;
    if (m < 1) m = 1;
    if (m % 3 != 0) m *= 3;
    int gi = 0;
    for (size_t t : basis_cls) {
        quadratic_form rep = class_representative_coprime(cl, t, m);
        ideal_hnf a = form_ideal(d, rep);
        ideal_hnf a3 = ideal_mul(d, ideal_mul(d, a, a), a);
        quad_int alpha = search_cube_generator(d, rep.a, a3);
        assert(gcd(gcd(qnorm(d, alpha), mpz_class((long)coprime_to)), mpz_class((long)coprime_to)) == 1 ||
               coprime_to <= 1);
        S.basis.push_back({alpha, virtual_unit_source::class_generator, gi++});
    }
    if (d > 0) {
        quad_unit eps = fundamental_unit(d);
        S.basis.push_back({{eps.x, eps.y}, virtual_unit_source::unit, -1});
    }
    if (d == -3) S.basis.push_back({{mpz_class(-1), mpz_class(1)}, virtual_unit_source::torsion, -1});
    assert((int)S.basis.size() == selmer_rank(3, d, (int)basis_cls.size()));
    return S;
}

namespace {

// ---- local residue arithmetic, everything in the omega basis ----

struct local_ring {
    // O_K / q for split/ramified q (pr = q, deg 1), O_K / q for inert q
    // (pr = q, deg 2), or O_K / 3^k (pr = 3^k, deg 2).
    i64 pr = 0;
    int deg = 1;
    i64 s = 0, m = 0;  // omega^2 = s*omega + m (deg 2); omega -> m (deg 1)
};

struct local_elt {
    i64 a = 0, b = 0;  // a + b*omega (b = 0 when deg 1)
};

local_elt local_image(const local_ring& R, i64 d, const quad_int& u)
{
    i64 s = mod_floor(d, 2);
    mpz_class uu = u.x - s * u.y;
    assert(mpz_even_p(uu.get_mpz_t()));
    mpz_class half = uu / 2;
    i64 a = (i64)mpz_fdiv_ui(half.get_mpz_t(), (unsigned long)R.pr);
    i64 b = (i64)mpz_fdiv_ui(u.y.get_mpz_t(), (unsigned long)R.pr);
    if (R.deg == 1) return {(a + b % R.pr * R.m) % R.pr, 0};
    return {a, b};
}

local_elt local_mul(const local_ring& R, const local_elt& x, const local_elt& y)
{
    if (R.deg == 1) return {(i64)((i128)x.a * y.a % R.pr), 0};
    i128 bb = (i128)x.b * y.b;
    i64 a = (i64)(((i128)x.a * y.a + bb % R.pr * R.m) % R.pr);
    i64 b = (i64)(((i128)x.a * y.b + (i128)x.b * y.a + bb % R.pr * R.s) % R.pr);
    return {a, b};
}

local_elt local_pow(const local_ring& R, local_elt x, i64 e)
{
    local_elt r{1, 0};
    while (e > 0) {
        if (e & 1) r = local_mul(R, r, x);
        x = local_mul(R, x, x);
        e >>= 1;
    }
    return r;
}

bool local_is_one(const local_elt& x) { return x.a == 1 && x.b == 0; }
bool local_is_zero(const local_elt& x) { return x.a == 0 && x.b == 0; }

local_ring tame_ring(i64 d, i64 q, bool inert, i64 root)
{
    local_ring R;
    R.pr = q;
    i64 s = mod_floor(d, 2);
    if (inert) {
        R.deg = 2;
        R.s = mod_floor(s, q);
        R.m = mod_floor((d - s * s) / 4, q);
    } else {
        // omega = (s + sqrt d)/2 -> (s + root) / 2 mod q, q odd
        R.deg = 1;
        i64 inv2 = mod_pow(2, q - 2, q);
        R.m = (s + root) % q * inv2 % q;
    }
    return R;
}

local_ring wild_ring(i64 d, int k)
{
    local_ring R;
    R.pr = 1;
    for (int i = 0; i < k; ++i) R.pr *= 3;
    R.deg = 2;
    i64 s = mod_floor(d, 2);
    R.s = mod_floor(s, R.pr);
    R.m = mod_floor((d - s * s) / 4, R.pr);
    return R;
}

// squares of units mod q of sqrt(d): smallest non-negative root
i64 sqrt_mod(i64 d, i64 q)
{
    i64 dm = mod_floor(d, q);
    for (i64 r = 0; r < q; ++r)
        if (r * r % q == dm) return r;
    throw std::logic_error("sqrt_mod: no square root");
}

bool elt_divisible(i64 d, const quad_int& u, i64 n)
{
    if (!mpz_divisible_ui_p(u.x.get_mpz_t(), (unsigned long)n) ||
        !mpz_divisible_ui_p(u.y.get_mpz_t(), (unsigned long)n))
        return false;
    if (n % 2 == 0) {
        mpz_class x = u.x / n, y = u.y / n;
        i64 s = mod_floor(d, 2);
        return mpz_fdiv_ui(x.get_mpz_t(), 2) == (unsigned long)mod_floor(s * (i64)mpz_fdiv_ui(y.get_mpz_t(), 2), 2);
    }
    return true;
}

// divide away cube-shaped support at q so the element becomes a q-unit:
// rational q^3 is a cube; over the wild prime an extra (sqrt d)^3 / 27 step
// handles an odd valuation.
quad_int clear_support(i64 d, quad_int u, i64 q, bool wild)
{
    i64 q3 = q * q * q;
    for (int guard = 0; guard < 200; ++guard) {
        while (elt_divisible(d, u, q3)) {
            u.x /= q3;
            u.y /= q3;
        }
        if (!wild) return u;
        if (mpz_fdiv_ui(qnorm(d, u).get_mpz_t(), 3) != 0) return u;
        if (mod_floor(d, 3) != 0) break;  // split/inert 3 with unbalanced support: not shiftable
        // ramified 3 with odd lambda-valuation: (sqrt d)^3 / 27 is a cube
        quad_int sq{mpz_class(0), mpz_class(2)};
        quad_int s3 = qmul(d, qmul(d, sq, sq), sq);
        u = qmul(d, u, s3);
    }
    throw std::logic_error("support shift at a divisor failed");
}

// Exponent offset of the wild cube congruence x^3 = u (mod 3^(e+offset)).
// Offset 0 matches the conductor filtration (a character of conductor
// exponent a is trivial on U^(a)) and is pinned by the oracle sweeps.
constexpr int wild_modulus_extra = 0;

std::set<std::pair<i64, i64>> wild_cubes(const local_ring& R)
{
    std::set<std::pair<i64, i64>> out;
    for (i64 a = 0; a < R.pr; ++a)
        for (i64 b = 0; b < R.pr; ++b) {
            local_elt x{a, b};
            local_elt c = local_mul(R, local_mul(R, x, x), x);
            out.insert({c.a, c.b});
        }
    return out;
}

bool wild_test(i64 d, const quad_int& u0, int e)
{
    quad_int u = clear_support(d, u0, 3, true);
    local_ring R = wild_ring(d, e + wild_modulus_extra);
    local_elt x = local_image(R, d, u);
    static std::map<std::pair<i64, i64>, std::set<std::pair<i64, i64>>> cache;
    auto key = std::make_pair(mod_floor(d, 4 * R.pr), (i64)R.pr);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, wild_cubes(R)).first;
    return it->second.count({x.a, x.b}) != 0;
}

bool tame_test(i64 d, const quad_int& u0, i64 q)
{
    quad_int u = clear_support(d, u0, q, false);
    int chi = kronecker(d, q);
    if (chi < 0) {
        local_ring R = tame_ring(d, q, true, 0);
        local_elt x = local_image(R, d, u);
        assert(!local_is_zero(x));
        i64 ee = ((i64)q * q - 1) / 3;
        return local_is_one(local_pow(R, x, ee));
    }
    if (mod_floor(q, 3) != 1)
        throw validation_error("tame cube test needs residue norm 1 mod 3");
    i64 root = chi == 0 ? 0 : sqrt_mod(d, q);
    local_ring R = tame_ring(d, q, false, root);
    local_elt x = local_image(R, d, u);
    if (x.a == 0 && chi > 0) {
        // the element sits in the canonical prime; evaluate at the conjugate
        R = tame_ring(d, q, false, q - root);
        x = local_image(R, d, u);
    }
    assert(x.a != 0);
    return local_is_one(local_pow(R, x, (q - 1) / 3));
}

} // namespace

bool is_local_cube(i64 d, const quad_int& u, const prime_power_divisor& pd)
{
    if (qnorm(d, u) == 0) throw validation_error("zero element");
    if (pd.kind == divisor_kind::wild) return wild_test(d, u, pd.e);
    return tame_test(d, u, pd.q);
}

ring_space_report ring_space(const selmer_space& S, const conductor_factorization& fact)
{
    ring_space_report rep;
    rep.d = S.d;
    rep.f = fact.f;
    rep.sigma = S.dimension();
    int sigma = rep.sigma;
    int nvec = 1;
    for (int i = 0; i < sigma; ++i) nvec *= 3;

    // per divisor membership over all of V; wild 9 also carries the chain
    // entry at 3
    struct dv_mask {
        i64 value;
        std::vector<bool> mask;
    };
    std::vector<dv_mask> masks;
    bool irregular9 = false;
    for (auto& pd : fact.divisors) {
        auto eval_mask = [&](auto member) {
            std::vector<bool> mk(nvec);
            for (int code = 0; code < nvec; ++code) {
                int cc = code;
                quad_int prod{mpz_class(2), mpz_class(0)};  // the element 1
                for (int i = 0; i < sigma; ++i) {
                    int e = cc % 3;
                    cc /= 3;
                    for (int rr = 0; rr < e; ++rr) prod = qmul(S.d, prod, S.basis[i].element);
                }
                mk[code] = member(prod);
            }
            return mk;
        };
        if (pd.kind == divisor_kind::wild) {
            masks.push_back({pd.value(), eval_mask([&](const quad_int& u) { return wild_test(S.d, u, pd.e); })});
            if (pd.e == 2 && !pd.regular) {
                irregular9 = true;
                masks.push_back({3, eval_mask([&](const quad_int& u) { return wild_test(S.d, u, 1); })});
            }
        } else {
            masks.push_back({pd.q, eval_mask([&](const quad_int& u) { return tame_test(S.d, u, pd.q); })});
        }
    }

    auto members_for = [&](i64 c) {
        std::set<selmer_vec> out;
        int e3 = 0;
        i64 rest = c;
        while (rest % 3 == 0) {
            rest /= 3;
            ++e3;
        }
        for (int code = 0; code < nvec; ++code) {
            bool ok = true;
            for (auto& mk : masks) {
                bool applies;
                if (mk.value == 3 || mk.value == 9) {
                    int me = mk.value == 9 ? 2 : 1;
                    applies = (e3 == me);
                } else {
                    applies = (rest % mk.value == 0);
                }
                if (applies && !mk.mask[code]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            int cc = code;
            selmer_vec v{0, 0, 0};
            for (int i = 0; i < sigma; ++i) {
                v[i] = cc % 3;
                cc /= 3;
            }
            out.insert(v);
        }
        return out;
    };

    auto add_entry = [&](i64 c) {
        auto mem = members_for(c);
        int dim = 0;
        size_t sz = mem.size();
        while (sz > 1) {
            assert(sz % 3 == 0);
            sz /= 3;
            ++dim;
        }
        rep.members[c] = std::move(mem);
        rep.subspace_dims[c] = dim;
        rep.free_flags[c] = (dim == sigma);
    };

    for (auto& sub : divisor_lattice(S.d, fact)) add_entry(sub.f);
    // V3(c) is defined for every divisor value even when c alone is not an
    // admissible conductor (the chain at 3 over d = -3, in particular)
    for (auto& pd : fact.divisors)
        if (!rep.members.count(pd.value())) add_entry(pd.value());
    if (irregular9 && !rep.members.count(3)) add_entry(3);
    if (!rep.members.count(fact.f)) add_entry(fact.f);
    rep.defect = sigma - rep.subspace_dims.at(fact.f);
    return rep;
}

ring_space_report ring_space(i64 d, const conductor_factorization& fact)
{
    selmer_space S = selmer_basis(d, 3 * fact.f);
    return ring_space(S, fact);
}

} // namespace ringclass
