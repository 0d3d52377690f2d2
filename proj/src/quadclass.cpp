#include "ringclass/quadclass.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>

namespace ringclass {

bool is_fundamental_discriminant(i64 d)
{
    if (d == 0) return false;
    if (d == 1) return true;
    i64 m4 = mod_floor(d, 4);
    if (m4 == 1) return is_squarefree(d);
    if (m4 != 0) return false;
    i64 q = d / 4;
    i64 q4 = mod_floor(q, 4);
    return (q4 == 2 || q4 == 3) && is_squarefree(q);
}

void require_fundamental_discriminant(i64 d)
{
    if (d == 0) throw validation_error("discriminant must be nonzero");
    if (d == 1) return;
    i64 m4 = mod_floor(d, 4);
    if (m4 == 2 || m4 == 3)
        throw validation_error("d = " + std::to_string(d) + " is not a discriminant (d = 2 or 3 mod 4)");
    i64 core = (m4 == 0) ? d / 4 : d;
    for (auto& [p, e] : factorize(core))
        if (e >= 2)
            throw validation_error("d = " + std::to_string(d) + " is not fundamental: square factor " +
                                   std::to_string(p) + "^2");
    if (m4 == 0 && mod_floor(d / 4, 4) == 1)
        throw validation_error("d = " + std::to_string(d) + " is not fundamental: square factor 2^2");
    if (m4 == 0 && mod_floor(d / 4, 4) == 0)
        throw validation_error("d = " + std::to_string(d) + " is not fundamental: square factor 2^2");
}

static i64 cast_i64(i128 v)
{
    if (v > INT64_MAX || v < INT64_MIN)
        throw validation_error("form coefficient exceeds 64 bits");
    return (i64)v;
}

bool is_reduced_definite(const quadratic_form& f)
{
    if (f.a <= 0 || f.c <= 0) return false;
    if (!(std::llabs(f.b) <= f.a && f.a <= f.c)) return false;
    if (f.b < 0 && (f.a == f.c || -f.b == f.a)) return false;
    return true;
}

quadratic_form reduce_definite(quadratic_form f)
{
    i128 d = f.disc();
    if (d >= 0) throw validation_error("reduce_definite needs negative discriminant");
    if (f.a < 0) throw validation_error("negative definite form");
    while (true) {
        i64 a2 = 2 * f.a;
        i64 r = mod_floor(f.b, a2);
        if (r > f.a) r -= a2;
        if (r != f.b) {
            f.b = r;
            f.c = cast_i64(((i128)r * r - d) / (4 * (i128)f.a));
        }
        if (f.a > f.c) {
            f = {f.c, -f.b, f.a};
            continue;
        }
        break;
    }
    if (f.b < 0 && (f.a == f.c || -f.b == f.a)) f.b = -f.b;
    return f;
}

bool is_reduced_indefinite(const quadratic_form& f, i64 d)
{
    i64 fsd = isqrt64(d);
    i64 aa = std::llabs(f.a);
    return f.b > 0 && f.b <= fsd && f.b > fsd - 2 * aa && 2 * aa <= f.b + fsd;
}

quadratic_form rho_step(const quadratic_form& f, i64 d)
{
    i64 fsd = isqrt64(d);
    i64 cab = std::llabs(f.c);
    i64 bn = fsd - mod_floor(fsd + f.b, 2 * cab);
    i64 cn = cast_i64(((i128)bn * bn - d) / (4 * (i128)f.c));
    return {f.c, bn, cn};
}

quadratic_form reduce_indefinite(quadratic_form f, i64 d)
{
    if (f.disc() != d || d <= 0) throw validation_error("reduce_indefinite discriminant mismatch");
    i64 fsd = isqrt64(d);
    auto normalize = [&](quadratic_form& g) {
        i64 aa = std::llabs(g.a);
        i64 bn;
        if (aa > fsd) {
            bn = mod_floor(g.b, 2 * aa);
            if (bn > aa) bn -= 2 * aa;
        } else {
            bn = fsd - mod_floor(fsd - g.b, 2 * aa);
        }
        if (bn != g.b) {
            g.b = bn;
            g.c = cast_i64(((i128)bn * bn - d) / (4 * (i128)g.a));
        }
    };
    normalize(f);
    for (int guard = 0; !is_reduced_indefinite(f, d); ++guard) {
        if (guard > 100000) throw std::logic_error("indefinite reduction did not converge");
        f = {f.c, -f.b, f.a};
        normalize(f);
    }
    return f;
}

// Proper transform of g with leading coefficient nonzero and coprime to m.
static quadratic_form with_leading_coprime(const quadratic_form& g, i64 m)
{
    if (m < 0) m = -m;
    if (g.a != 0 && (m == 0 || gcd64(g.a, m) == 1)) return g;
    i64 cap = 2 * std::max<i64>(m, 1) + 2;
    for (i64 s = 0; s <= cap; ++s) {
        for (i64 x = -s; x <= s; ++x) {
            for (i64 y = -s; y <= s; ++y) {
                if (std::max(std::llabs(x), std::llabs(y)) != s) continue;
                if (gcd64(x, y) != 1) continue;
                i128 v = g.eval(x, y);
                if (v == 0 || gcd128(v, m) != 1) continue;
                auto e = xgcd(x, y);
                i64 u = cast_i64(-e.y), w = cast_i64(e.x);  // det [[x,u],[y,w]] = 1
                quadratic_form r;
                r.a = cast_i64(v);
                r.c = cast_i64(g.eval(u, w));
                r.b = cast_i64(2 * ((i128)g.a * x * u + (i128)g.c * y * w) +
                               (i128)g.b * ((i128)x * w + (i128)y * u));
                assert(r.disc() == g.disc());
                return r;
            }
        }
    }
    throw std::logic_error("no representative coprime to modulus (imprimitive form?)");
}

quadratic_form compose(const quadratic_form& f0, const quadratic_form& g0)
{
    i128 d = f0.disc();
    if (g0.disc() != d) throw validation_error("composition needs equal discriminants");
    quadratic_form f = f0, g = g0;
    if (f.a == 0) f = with_leading_coprime(f, 1);
    if (g.a == 0 || gcd64(f.a, g.a) != 1) g = with_leading_coprime(g, f.a);

    // B = b1 (mod 2 a1), B = b2 (mod 2 a2); gcd(|a1|,|a2|) = 1.
    i128 a1 = f.a, a2 = g.a;
    i128 m2 = a2 < 0 ? -a2 : a2;
    i128 diff = ((i128)g.b - f.b) / 2;
    auto e = xgcd(((a1 % m2) + m2) % m2, m2);
    assert(e.g == 1);
    i128 t = ((diff % m2) * (e.x % m2)) % m2;
    i128 A = mul_checked(a1, a2);
    i128 B = f.b + mul_checked(2 * a1, t);
    i128 A2 = 2 * abs128(A);
    B %= A2;
    if (B > abs128(A)) B -= A2;
    if (B <= -abs128(A)) B += A2;
    i128 num = mul_checked(B, B) - d;
    assert(num % (4 * A) == 0);
    quadratic_form r{cast_i64(A), cast_i64(B), cast_i64(num / (4 * A))};
    if (d < 0) return reduce_definite(r);
    return reduce_indefinite(r, cast_i64(d));
}

static quadratic_form principal_form(i64 d)
{
    i64 bp = mod_floor(d, 2);
    quadratic_form f{1, bp, cast_i64(((i128)bp * bp - d) / 4)};
    return d < 0 ? reduce_definite(f) : reduce_indefinite(f, d);
}

static i64 pack_ab(const quadratic_form& f)
{
    assert(std::llabs(f.a) < (1ll << 31) && std::llabs(f.b) < (1ll << 31));
    return ((i64)(f.a + (1ll << 31)) << 32) | (i64)(f.b + (1ll << 31));
}

quad_class_group::quad_class_group(i64 d, class_group_sense sense) : d_(d), sense_(sense)
{
    require_fundamental_discriminant(d);
    if (d == 1) throw validation_error("d = 1 has no class group");
    if (d < 0)
        build_definite();
    else
        build_indefinite();
}

void quad_class_group::build_definite()
{
    i64 ad = -d_;
    for (i64 a = 1; a * a <= ad / 3; ++a) {
        for (i64 b = -a + 1; b <= a; ++b) {
            if (mod_floor(b - d_, 2) != 0) continue;
            i128 num = (i128)b * b - d_;
            if (num % (4 * a) != 0) continue;
            i64 c = cast_i64(num / (4 * a));
            if (c < a) continue;
            if (b < 0 && a == c) continue;
            assert(gcd64(gcd64(a, b), c) == 1 && "fundamental discriminant gives primitive forms");
            reps_.push_back({a, b, c});
        }
    }
    std::sort(reps_.begin(), reps_.end());
    for (size_t i = 0; i < reps_.size(); ++i) lookup_[pack_ab(reps_[i])] = i;
    narrow_h_ = (i64)reps_.size();
    principal_ = lookup_.at(pack_ab(principal_form(d_)));
}

void quad_class_group::build_indefinite()
{
    i64 fsd = isqrt64(d_);
    std::vector<quadratic_form> forms;
    for (i64 b = 2 - mod_floor(d_, 2); b <= fsd; b += 2) {
        if (b <= 0) continue;
        i64 N = cast_i64(((i128)d_ - (i128)b * b) / 4);
        for (i64 u = 1; u * u <= N; ++u) {
            if (N % u != 0) continue;
            for (i64 a : {u, N / u}) {
                if (a != u && u * u == N) continue;
                if (!(b > fsd - 2 * a && 2 * a <= b + fsd)) continue;
                forms.push_back({a, b, -(N / a)});
                forms.push_back({-a, b, N / a});
            }
        }
    }
    // rho-orbits are the proper (narrow) classes
    std::unordered_map<i64, size_t> cycle_of;
    std::vector<quadratic_form> cycle_min;
    for (auto& f : forms) {
        if (cycle_of.count(pack_ab(f))) continue;
        size_t id = cycle_min.size();
        quadratic_form m = f, g = f;
        do {
            assert(is_reduced_indefinite(g, d_));
            cycle_of[pack_ab(g)] = id;
            if (g < m) m = g;
            g = rho_step(g, d_);
        } while (!(g == f));
        cycle_min.push_back(m);
    }
    narrow_h_ = (i64)cycle_min.size();

    std::vector<size_t> class_of_cycle(cycle_min.size());
    std::vector<quadratic_form> class_min;
    if (sense_ == class_group_sense::narrow) {
        for (size_t i = 0; i < cycle_min.size(); ++i) class_of_cycle[i] = i;
        class_min = cycle_min;
    } else {
        // identify each cycle with its sign-flip image
        std::vector<size_t> orbit(cycle_min.size(), SIZE_MAX);
        for (size_t i = 0; i < cycle_min.size(); ++i) {
            if (orbit[i] != SIZE_MAX) continue;
            quadratic_form flip{-cycle_min[i].a, cycle_min[i].b, -cycle_min[i].c};
            size_t j = cycle_of.at(pack_ab(flip));
            size_t id = class_min.size();
            orbit[i] = id;
            orbit[j] = id;
            class_min.push_back(std::min(cycle_min[i], cycle_min[j]));
        }
        class_of_cycle = orbit;
    }

    // sort representatives, then point every reduced form at its class
    std::vector<size_t> order(class_min.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t x, size_t y) { return class_min[x] < class_min[y]; });
    std::vector<size_t> rank(class_min.size());
    for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
    reps_.resize(class_min.size());
    for (size_t i = 0; i < class_min.size(); ++i) reps_[rank[i]] = class_min[i];
    for (auto& [key, cyc] : cycle_of) lookup_[key] = rank[class_of_cycle[cyc]];
    principal_ = lookup_.at(pack_ab(principal_form(d_)));
}

size_t quad_class_group::class_of_reduced(const quadratic_form& f) const
{
    auto it = lookup_.find(pack_ab(f));
    if (it == lookup_.end()) throw std::logic_error("reduced form not in class table");
    return it->second;
}

size_t quad_class_group::index_of(quadratic_form f) const
{
    if (f.disc() != d_) throw validation_error("form has wrong discriminant");
    f = d_ < 0 ? reduce_definite(f) : reduce_indefinite(f, d_);
    return class_of_reduced(f);
}

size_t quad_class_group::compose_classes(size_t i, size_t j) const
{
    return class_of_reduced(compose(reps_[i], reps_[j]));
}

size_t quad_class_group::class_pow(size_t i, i64 e) const
{
    if (e < 0) throw validation_error("class_pow with negative exponent");
    size_t r = principal_, base = i;
    while (e > 0) {
        if (e & 1) r = compose_classes(r, base);
        e >>= 1;
        if (e) base = compose_classes(base, base);
    }
    return r;
}

i64 quad_class_group::class_order(size_t i) const
{
    i64 h = class_number();
    std::vector<i64> divs;
    for (i64 u = 1; u * u <= h; ++u) {
        if (h % u) continue;
        divs.push_back(u);
        if (u != h / u) divs.push_back(h / u);
    }
    std::sort(divs.begin(), divs.end());
    for (i64 e : divs)
        if (class_pow(i, e) == principal_) return e;
    throw std::logic_error("class order does not divide h");
}

int quad_class_group::rank3() const
{
    i64 count = 0;
    for (size_t i = 0; i < reps_.size(); ++i)
        if (class_pow(i, 3) == principal_) ++count;
    int r = 0;
    while (count > 1) {
        assert(count % 3 == 0);
        count /= 3;
        ++r;
    }
    return r;
}

std::vector<std::pair<quadratic_form, i64>> quad_class_group::generators() const
{
    std::vector<std::pair<quadratic_form, i64>> out;
    i64 h = class_number();
    if (h == 1) return out;
    auto inverse = [&](size_t i) {
        quadratic_form f = reps_[i];
        return index_of({f.a, -f.b, f.c});
    };
    for (auto& [p, e] : factorize(h)) {
        i64 pe = 1;
        for (int k = 0; k < e; ++k) pe *= p;
        i64 m = h / pe;
        std::set<size_t> sylow;
        for (size_t i = 0; i < reps_.size(); ++i) sylow.insert(class_pow(i, m));
        std::vector<size_t> span{principal_};
        std::set<size_t> span_set{principal_};
        while ((i64)span.size() < (i64)sylow.size()) {
            // element of maximal order in the quotient by the current span
            size_t best = SIZE_MAX;
            i64 bestq = 0;
            for (size_t g : sylow) {
                if (span_set.count(g)) continue;
                i64 q = p;
                size_t gp = class_pow(g, p);
                while (!span_set.count(gp)) {
                    q *= p;
                    gp = class_pow(gp, p);
                }
                if (q > bestq) {
                    bestq = q;
                    best = g;
                }
            }
            assert(best != SIZE_MAX);
            size_t g = best;
            if (class_pow(g, bestq) != principal_) {
                // adjust by an element of the span with the same q-th power
                size_t target = class_pow(g, bestq);
                bool fixed = false;
                for (size_t t : span) {
                    if (class_pow(t, bestq) == target) {
                        g = compose_classes(g, inverse(t));
                        fixed = true;
                        break;
                    }
                }
                assert(fixed && "basis extension lemma");
                assert(class_pow(g, bestq) == principal_);
            }
            out.emplace_back(reps_[g], bestq);
            std::vector<size_t> bigger;
            size_t gk = principal_;
            for (i64 k = 0; k < bestq; ++k) {
                for (size_t s : span) bigger.push_back(compose_classes(s, gk));
                gk = compose_classes(gk, g);
            }
            span = std::move(bigger);
            span_set = std::set<size_t>(span.begin(), span.end());
            assert(span.size() == span_set.size() && "span is a direct product");
        }
    }
    return out;
}

int rho3(i64 d)
{
    require_fundamental_discriminant(d);
    if (d == 1) return 0;
    quad_class_group cl(d, d > 0 ? class_group_sense::narrow : class_group_sense::wide);
    return cl.rank3();
}

quadratic_form class_representative_coprime(const quad_class_group& cl, size_t idx, i64 m)
{
    const quadratic_form& g = cl.class_rep(idx);
    if (m < 0) m = -m;
    if (g.a > 0 && (m == 0 || gcd64(g.a, m) == 1)) return g;
    i64 cap = 2 * std::max<i64>(m, 1) + 2;
    for (i64 s = 1; s <= cap; ++s) {
        for (i64 x = -s; x <= s; ++x) {
            for (i64 y = -s; y <= s; ++y) {
                if (std::max(std::llabs(x), std::llabs(y)) != s) continue;
                if (gcd64(x, y) != 1) continue;
                i128 v = g.eval(x, y);
                if (v <= 0 || gcd128(v, m) != 1) continue;
                auto e = xgcd(x, y);
                i64 u = cast_i64(-e.y), w = cast_i64(e.x);
                quadratic_form r;
                r.a = cast_i64(v);
                r.c = cast_i64(g.eval(u, w));
                r.b = cast_i64(2 * ((i128)g.a * x * u + (i128)g.c * y * w) +
                               (i128)g.b * ((i128)x * w + (i128)y * u));
                assert(r.disc() == g.disc());
                assert(cl.index_of(r) == idx);
                return r;
            }
        }
    }
    throw std::logic_error("no positive representative coprime to modulus");
}

quad_unit fundamental_unit(i64 d)
{
    require_fundamental_discriminant(d);
    if (d <= 1) throw validation_error("fundamental unit needs d > 1");
    i64 fsd = isqrt64(d);
    i64 P = mod_floor(d, 2), Q = 2;

    std::map<std::pair<i64, i64>, size_t> seen;
    std::vector<i64> quots;
    std::vector<std::pair<i64, i64>> states;  // state before emitting quots[i]
    size_t start = 0;
    for (size_t i = 0;; ++i) {
        if (i > 2000000) throw std::logic_error("continued fraction period too long");
        if (i >= 1) {
            auto [it, fresh] = seen.try_emplace({P, Q}, i);
            if (!fresh) {
                start = it->second;
                break;
            }
        }
        states.push_back({P, Q});
        i64 a = (P + fsd) / Q;  // Q > 0 throughout for these seeds
        assert(Q > 0);
        quots.push_back(a);
        i64 Pn = a * Q - P;
        i64 Qn = cast_i64(((i128)d - (i128)Pn * Pn) / Q);
        P = Pn;
        Q = Qn;
    }

    // one full period of the purely periodic tail, from state `start`
    mpz_class A = 1, B = 0, C = 0, D = 1;
    for (size_t k = start; k < quots.size(); ++k) {
        mpz_class na = A * quots[k] + B, nc = C * quots[k] + D;
        B = A;
        D = C;
        A = na;
        C = nc;
    }
    auto [Pj, Qj] = states[start];
    // unit = C*xi + D with xi = (Pj + sqrt(d))/Qj
    mpz_class x = 2 * (C * Pj + D * Qj), y = 2 * C;
    assert(mpz_divisible_ui_p(x.get_mpz_t(), (unsigned long)Qj));
    assert(mpz_divisible_ui_p(y.get_mpz_t(), (unsigned long)Qj));
    x /= Qj;
    y /= Qj;
    mpz_class n4 = x * x - mpz_class(d) * y * y;
    int norm;
    if (n4 == 4)
        norm = 1;
    else if (n4 == -4)
        norm = -1;
    else
        throw std::logic_error("continued fraction did not produce a unit");
    size_t period = quots.size() - start;
    assert(norm == ((period % 2) ? -1 : 1));
    assert(x > 0 && y > 0);
    return {x, y, norm};
}

int selmer_rank(i64 p, i64 d, int rho)
{
    if (p < 3 || p % 2 == 0) throw validation_error("p must be an odd prime");
    require_fundamental_discriminant(d);
    if (rho < 0) throw validation_error("negative class rank");
    if (d == 1) return rho;
    if (d > 0) return rho + 1;
    if (p == 3 && d == -3) return rho + 1;
    return rho;
}

quad_field_data make_field_data(i64 d)
{
    require_fundamental_discriminant(d);
    quad_field_data out;
    out.d = d;
    out.torsion = (d == -3);
    if (d == 1) {
        out.h = 1;
        out.rho3 = 0;
        out.sigma3 = 0;
        return out;
    }
    quad_class_group cl(d);
    out.h = cl.class_number();
    out.rho3 = cl.rank3();
    out.sigma3 = selmer_rank(3, d, out.rho3);
    if (d > 1) out.unit = fundamental_unit(d);
    return out;
}

} // namespace ringclass
