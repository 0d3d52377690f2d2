#include "ringclass/cubicenum.hpp"
#include "ringclass/conductor.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>
#include <sstream>
#include <thread>

#include <gmpxx.h>

namespace ringclass {

namespace {

// ---------- exact order arithmetic in a cubic field (for the oracle) ----------

using qvec = std::array<mpq_class, 3>;  // coordinates in 1, th, th^2

// u(th) * v(th) modulo th^3 + g0 th^2 + g1 th + g2
qvec poly_mul_mod(const qvec& u, const qvec& v, const std::array<i64, 3>& g)
{
    std::array<mpq_class, 5> prod{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) prod[i + j] += u[i] * v[j];
    for (int k = 4; k >= 3; --k) {
        mpq_class t = prod[k];
        if (t == 0) continue;
        prod[k] = 0;
        prod[k - 1] -= t * g[0];
        prod[k - 2] -= t * g[1];
        prod[k - 3] -= t * g[2];
    }
    return {prod[0], prod[1], prod[2]};
}

// Full-rank lattice in theta-coordinates: columns of H / den, H in HNF with
// the pivot of column j on row j and zero entries below it.
struct qlattice {
    std::array<std::array<mpz_class, 3>, 3> H;
    mpz_class den = 1;

    bool operator==(const qlattice& o) const { return den == o.den && H == o.H; }
    qvec column(int j) const
    {
        qvec v;
        for (int r = 0; r < 3; ++r) v[r] = mpq_class(H[j][r]) / den;
        return v;
    }
    // determinant of the basis matrix
    mpq_class det() const
    {
        return mpq_class(H[0][0] * H[1][1] * H[2][2]) / (den * den * den);
    }
};

std::array<std::array<mpz_class, 3>, 3> integer_hnf(std::vector<std::array<mpz_class, 3>> cols)
{
    std::array<std::array<mpz_class, 3>, 3> out{};
    for (int row = 2; row >= 0; --row) {
        size_t piv = SIZE_MAX;
        for (size_t j = 0; j < cols.size(); ++j)
            if (cols[j][row] != 0) {
                piv = j;
                break;
            }
        if (piv == SIZE_MAX) throw std::logic_error("lattice generators not of full rank");
        for (size_t j = piv + 1; j < cols.size(); ++j) {
            while (cols[j][row] != 0) {
                mpz_class q = cols[piv][row] / cols[j][row];
                if (q != 0)
                    for (int r = 0; r < 3; ++r) cols[piv][r] -= q * cols[j][r];
                std::swap(cols[piv], cols[j]);
            }
        }
        if (cols[piv][row] < 0)
            for (int r = 0; r < 3; ++r) cols[piv][r] = -cols[piv][r];
        out[row] = cols[piv];
        cols.erase(cols.begin() + piv);
    }
    // canonical off-diagonal range 0 <= H[k][j] < H[j][j] for k > j
    for (int k = 1; k < 3; ++k) {
        for (int j = k - 1; j >= 0; --j) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), out[k][j].get_mpz_t(), out[j][j].get_mpz_t());
            if (q != 0)
                for (int r = 0; r < 3; ++r) out[k][r] -= q * out[j][r];
        }
    }
    return out;
}

qlattice lattice_from(const std::vector<qvec>& gens)
{
    mpz_class den = 1;
    for (auto& v : gens)
        for (auto& e : v) den = lcm(den, e.get_den());
    std::vector<std::array<mpz_class, 3>> cols;
    for (auto& v : gens) {
        std::array<mpz_class, 3> col;
        for (int r = 0; r < 3; ++r) {
            mpq_class scaled = v[r] * den;
            assert(scaled.get_den() == 1);
            col[r] = scaled.get_num();
        }
        cols.push_back(col);
    }
    qlattice out;
    out.H = integer_hnf(std::move(cols));
    out.den = den;
    mpz_class g = out.den;
    for (auto& colv : out.H)
        for (auto& e : colv) g = gcd(g, e);
    if (g > 1) {
        out.den /= g;
        for (auto& colv : out.H)
            for (auto& e : colv) e /= g;
    }
    return out;
}

// coordinates of v in the (triangular) basis of L; exact
qvec coords_in(const qlattice& L, const qvec& v)
{
    qvec x;
    // solve H/den * x = v, column pivot j on row j: back-substitute rows 2,1,0
    qvec rhs = v;
    for (int row = 2; row >= 0; --row) {
        mpq_class piv = mpq_class(L.H[row][row]) / L.den;
        x[row] = rhs[row] / piv;
        for (int r = 0; r < 3; ++r) rhs[r] -= x[row] * mpq_class(L.H[row][r]) / L.den;
    }
    return x;
}

bool all_integer(const qvec& v)
{
    return v[0].get_den() == 1 && v[1].get_den() == 1 && v[2].get_den() == 1;
}

// F_p vector/matrix helpers
using fvec = std::array<i64, 3>;

fvec fmul(const fvec& u, const fvec& v, const std::array<std::array<fvec, 3>, 3>& S, i64 p)
{
    fvec out{0, 0, 0};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            i64 uv = u[i] * v[j] % p;
            if (!uv) continue;
            for (int k = 0; k < 3; ++k) out[k] = (out[k] + uv * S[i][j][k]) % p;
        }
    return out;
}

std::vector<fvec> nullspace(std::array<fvec, 3> cols, i64 p)
{
    // rows of the matrix are indexed by output coordinate; columns by input basis
    i64 M[3][3];
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) M[r][c] = mod_floor(cols[c][r], p);
    int pivot_col[3] = {-1, -1, -1};
    int rank = 0;
    for (int c = 0; c < 3 && rank < 3; ++c) {
        int pr = -1;
        for (int r = rank; r < 3; ++r)
            if (M[r][c]) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        for (int k = 0; k < 3; ++k) std::swap(M[pr][k], M[rank][k]);
        i64 inv = mod_pow(M[rank][c], p - 2, p);
        for (int k = 0; k < 3; ++k) M[rank][k] = M[rank][k] * inv % p;
        for (int r = 0; r < 3; ++r) {
            if (r == rank || !M[r][c]) continue;
            i64 fct = M[r][c];
            for (int k = 0; k < 3; ++k) M[r][k] = mod_floor(M[r][k] - fct * M[rank][k], p);
        }
        pivot_col[rank] = c;
        ++rank;
    }
    std::vector<fvec> out;
    for (int c = 0; c < 3; ++c) {
        bool is_pivot = false;
        for (int r = 0; r < rank; ++r)
            if (pivot_col[r] == c) is_pivot = true;
        if (is_pivot) continue;
        fvec v{0, 0, 0};
        v[c] = 1;
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = mod_floor(-M[r][c], p);
        out.push_back(v);
    }
    return out;
}

// One Pohst-Zassenhaus step: multiplier ring of the p-radical ideal.
// Returns true if the order grew.
bool enlarge_at_p(qlattice& O, i64 p, const std::array<i64, 3>& g)
{
    qvec b[3] = {O.column(0), O.column(1), O.column(2)};
    // structure constants mod p
    std::array<std::array<fvec, 3>, 3> S;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            qvec prod = poly_mul_mod(b[i], b[j], g);
            qvec co = coords_in(O, prod);
            assert(all_integer(co) && "order closed under multiplication");
            for (int k = 0; k < 3; ++k)
                S[i][j][k] = mod_floor((i64)mpz_fdiv_ui(co[k].get_num().get_mpz_t(), (unsigned long)p) *
                                       1, p);
        }
    // radical of O/pO: kernel of x -> x^(p^k), p^k >= 3
    int k_steps = p >= 3 ? 1 : 2;
    std::array<fvec, 3> frob_cols;
    for (int i = 0; i < 3; ++i) {
        fvec e{0, 0, 0};
        e[i] = 1;
        fvec acc = e;
        for (int s = 0; s < k_steps; ++s) {
            // acc <- acc^p by square and multiply
            fvec r{0, 0, 0};
            // identity element: coordinates of 1 in basis
            qvec one{1, 0, 0};
            qvec onec = coords_in(O, one);
            assert(all_integer(onec));
            for (int t = 0; t < 3; ++t)
                r[t] = mod_floor((i64)mpz_fdiv_ui(onec[t].get_num().get_mpz_t(), (unsigned long)p), p);
            fvec base = acc;
            i64 e2 = p;
            while (e2 > 0) {
                if (e2 & 1) r = fmul(r, base, S, p);
                base = fmul(base, base, S, p);
                e2 >>= 1;
            }
            acc = r;
        }
        frob_cols[i] = acc;
    }
    std::vector<fvec> rad = nullspace(frob_cols, p);
    if (rad.empty()) return false;  // radical = pO, multiplier ring is O itself

    // radical ideal lattice I = span(rad lifts) + pO
    std::vector<qvec> igens;
    for (auto& r : rad) {
        qvec v{0, 0, 0};
        for (int i = 0; i < 3; ++i)
            for (int t = 0; t < 3; ++t) v[t] += mpq_class(r[i]) * b[i][t];
        igens.push_back(v);
    }
    for (int i = 0; i < 3; ++i) {
        qvec v;
        for (int t = 0; t < 3; ++t) v[t] = b[i][t] * p;
        igens.push_back(v);
    }
    qlattice I = lattice_from(igens);
    qvec l[3] = {I.column(0), I.column(1), I.column(2)};

    // x = (sum_i s_i b_i)/p multiplies I into I  <=>  for all j:
    // sum_i s_i * coords_I(b_i * l_j) = 0 (mod p)
    // 9 linear conditions on (s_0, s_1, s_2) over F_p
    std::vector<std::array<i64, 3>> rows;
    for (int j = 0; j < 3; ++j) {
        std::array<qvec, 3> coef;
        for (int i = 0; i < 3; ++i) {
            qvec prod = poly_mul_mod(b[i], l[j], g);
            qvec co = coords_in(I, prod);
            assert(all_integer(co) && "radical is an ideal of the order");
            coef[i] = co;
        }
        for (int k = 0; k < 3; ++k) {
            std::array<i64, 3> row;
            for (int i = 0; i < 3; ++i)
                row[i] = mod_floor((i64)mpz_fdiv_ui(coef[i][k].get_num().get_mpz_t(), (unsigned long)p), p);
            rows.push_back(row);
        }
    }
    // kernel of the 9x3 system
    std::vector<fvec> sols;
    {
        // gaussian elimination on rows
        std::vector<std::array<i64, 3>> R = rows;
        int rank = 0;
        int pivot_col[3] = {-1, -1, -1};
        for (int c = 0; c < 3; ++c) {
            int pr = -1;
            for (int r = rank; r < (int)R.size(); ++r)
                if (R[r][c]) {
                    pr = r;
                    break;
                }
            if (pr < 0) continue;
            std::swap(R[pr], R[rank]);
            i64 inv = mod_pow(R[rank][c], p - 2, p);
            for (int k = 0; k < 3; ++k) R[rank][k] = R[rank][k] * inv % p;
            for (int r = 0; r < (int)R.size(); ++r) {
                if (r == rank || !R[r][c]) continue;
                i64 fct = R[r][c];
                for (int k = 0; k < 3; ++k) R[r][k] = mod_floor(R[r][k] - fct * R[rank][k], p);
            }
            pivot_col[rank] = c;
            ++rank;
        }
        for (int c = 0; c < 3; ++c) {
            bool is_pivot = false;
            for (int r = 0; r < rank; ++r)
                if (pivot_col[r] == c) is_pivot = true;
            if (is_pivot) continue;
            fvec v{0, 0, 0};
            v[c] = 1;
            for (int r = 0; r < rank; ++r) v[pivot_col[r]] = mod_floor(-R[r][c], p);
            sols.push_back(v);
        }
    }
    // the trivial multiplier s = 0 gives back O; nontrivial kernel grows the order
    if (sols.empty()) return false;
    std::vector<qvec> ngens{b[0], b[1], b[2]};
    for (auto& s : sols) {
        qvec v{0, 0, 0};
        for (int i = 0; i < 3; ++i)
            for (int t = 0; t < 3; ++t) v[t] += mpq_class(s[i]) * b[i][t];
        for (int t = 0; t < 3; ++t) v[t] /= p;
        ngens.push_back(v);
    }
    qlattice grown = lattice_from(ngens);
    if (grown == O) return false;
    O = grown;
    return true;
}

// Field discriminant of the irreducible monic cubic x^3 + g0 x^2 + g1 x + g2
// by maximalizing the order Z[theta] at every prime whose square divides disc.
i64 monic_field_disc(const std::array<i64, 3>& g)
{
    binary_cubic_form F{1, g[0], g[1], g[2]};
    i128 D = F.disc();
    assert(D != 0);
    if (abs128(D) > (i128)4e18) throw resource_error("discriminant too large to factor");
    qlattice O;
    O.H = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    O.den = 1;
    for (auto& [p, e] : factorize((i64)D)) {
        if (e < 2) continue;
        while (enlarge_at_p(O, p, g)) {}
    }
    mpq_class idx2 = O.det() * O.det();  // (1/index)^2
    mpq_class dq = idx2 * mpq_class((long)(i64)D);
    assert(dq.get_den() == 1);
    assert(mpz_fits_slong_p(dq.get_num().get_mpz_t()));
    return (i64)dq.get_num().get_si();
}

// ---------- certified isomorphism of cubic fields ----------

using cplx = std::complex<long double>;

std::array<cplx, 3> cubic_roots(const std::array<i64, 3>& g)
{
    // Durand-Kerner on x^3 + g0 x^2 + g1 x + g2
    auto eval = [&](cplx x) { return ((x + (long double)g[0]) * x + (long double)g[1]) * x + (long double)g[2]; };
    std::array<cplx, 3> r{cplx(0.4L, 0.9L), cplx(-0.8L, 0.3L), cplx(0.3L, -1.1L)};
    long double scale = 1 + std::max({std::abs((long double)g[0]), std::abs((long double)g[1]),
                                      std::abs((long double)g[2])});
    for (auto& x : r) x *= scale;
    for (int it = 0; it < 500; ++it) {
        std::array<cplx, 3> n = r;
        for (int i = 0; i < 3; ++i) {
            cplx denom = 1;
            for (int j = 0; j < 3; ++j)
                if (j != i) denom *= (r[i] - r[j]);
            n[i] = r[i] - eval(r[i]) / denom;
        }
        long double delta = 0;
        for (int i = 0; i < 3; ++i) delta += std::abs(n[i] - r[i]);
        r = n;
        if (delta < 1e-17L * scale) break;
    }
    return r;
}

bool rational_reconstruct(long double v, i64 max_den, mpq_class& out)
{
    // continued fraction convergents
    long double x = v;
    i64 p0 = 1, q0 = 0, p1 = (i64)std::llround(std::floor(x)), q1 = 1;
    x -= std::floor(x);
    for (int it = 0; it < 64; ++it) {
        if (std::abs(v - (long double)p1 / q1) < 1e-11L * (1 + std::abs(v))) {
            out = mpq_class((long)p1, (unsigned long)q1);
            out.canonicalize();
            return true;
        }
        if (x < 1e-14L) break;
        x = 1 / x;
        i64 a = (i64)std::floor(x);
        x -= std::floor(x);
        i64 p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den || q2 <= 0) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    if (std::abs(v - (long double)p1 / q1) < 1e-11L * (1 + std::abs(v))) {
        out = mpq_class((long)p1, (unsigned long)q1);
        out.canonicalize();
        return true;
    }
    return false;
}

// does g2 have the root u0 + u1 th + u2 th^2 in Q[th]/(g1)?  exact check
bool verify_embedding(const std::array<i64, 3>& g1, const std::array<i64, 3>& g2, const qvec& u)
{
    qvec acc = u;
    qvec val = poly_mul_mod(acc, u, g1);  // u^2
    qvec cube = poly_mul_mod(val, u, g1);
    qvec res;
    for (int t = 0; t < 3; ++t)
        res[t] = cube[t] + mpq_class((long)g2[0]) * val[t] + mpq_class((long)g2[1]) * u[t];
    res[0] += g2[2];
    return res[0] == 0 && res[1] == 0 && res[2] == 0;
}

} // namespace

bool cubic_fields_isomorphic(const std::array<i64, 3>& g1, const std::array<i64, 3>& g2)
{
    binary_cubic_form f1{1, g1[0], g1[1], g1[2]}, f2{1, g2[0], g2[1], g2[2]};
    if (!is_irreducible(f1) || !is_irreducible(f2))
        throw validation_error("isomorphism test requires irreducible cubics");
    if (g1 == g2) return true;
    i128 d1 = f1.disc(), d2 = f2.disc();
    if ((d1 > 0) != (d2 > 0)) return false;

    // same splitting behaviour at inert witnesses is necessary
    int checked = 0;
    for (i64 p = 5; checked < 40; p += 2) {
        bool prime = true;
        for (i64 q = 3; q * q <= p; q += 2)
            if (p % q == 0) prime = false;
        if (!prime) continue;
        if (d1 % p == 0 || d2 % p == 0) continue;
        ++checked;
        auto count_roots = [&](const binary_cubic_form& f) {
            int n = 0;
            for (i64 r = 0; r < p; ++r)
                if (f.eval(r, 1) % p == 0) ++n;
            return n;
        };
        if (count_roots(f1) != count_roots(f2)) return false;
    }

    // numeric embedding + exact verification
    auto r1 = cubic_roots(g1), r2 = cubic_roots(g2);
    int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& pm : perms) {
        // solve Vandermonde: u0 + u1 r1[i] + u2 r1[i]^2 = r2[pm[i]]
        cplx A[3][4];
        for (int i = 0; i < 3; ++i) {
            A[i][0] = 1;
            A[i][1] = r1[i];
            A[i][2] = r1[i] * r1[i];
            A[i][3] = r2[pm[i]];
        }
        bool ok = true;
        for (int c = 0; c < 3 && ok; ++c) {
            int piv = -1;
            long double best = 1e-12L;
            for (int r = c; r < 3; ++r)
                if (std::abs(A[r][c]) > best) {
                    best = std::abs(A[r][c]);
                    piv = r;
                }
            if (piv < 0) {
                ok = false;
                break;
            }
            for (int k = 0; k < 4; ++k) std::swap(A[piv][k], A[c][k]);
            for (int r = 0; r < 3; ++r) {
                if (r == c) continue;
                cplx fct = A[r][c] / A[c][c];
                for (int k = c; k < 4; ++k) A[r][k] -= fct * A[c][k];
            }
        }
        if (!ok) continue;
        qvec u;
        bool rational = true;
        for (int i = 0; i < 3 && rational; ++i) {
            cplx v = A[i][3] / A[i][i];
            if (std::abs(v.imag()) > 1e-8L * (1 + std::abs(v.real()))) {
                rational = false;
                break;
            }
            mpq_class q;
            if (!rational_reconstruct(v.real(), 1000000, q)) {
                rational = false;
                break;
            }
            u[i] = q;
        }
        if (!rational) continue;
        if (verify_embedding(g1, g2, u)) return true;
    }
    return false;
}

// ---------- record assembly ----------

namespace {

std::array<i64, 3> monic_generator(const binary_cubic_form& f)
{
    // y = a x turns a x^3 + b x^2 + c x + d into y^3 + b y^2 + ac y + a^2 d,
    // then a shift normalizes the trace term into {-1, 0, 1}
    i128 B = f.b, C = (i128)f.a * f.c, D = (i128)f.a * f.a * f.d;
    i64 k = (i64)((B >= 0 ? B + 1 : B - 1) / 3);
    i128 a2 = B - 3 * (i128)k;
    if (a2 > 1) {
        ++k;
        a2 -= 3;
    }
    if (a2 < -1) {
        --k;
        a2 += 3;
    }
    i128 a1 = 3 * (i128)k * k - 2 * B * k + C;
    i128 a0 = -(i128)k * k * k + B * (i128)k * k - C * k + D;
    return {(i64)a2, (i64)a1, (i64)a0};
}

bool is_pure_field(const cubic_field_record& rec)
{
    if (rec.dK != -3) return false;
    i64 r = rec.f % 3 == 0 ? rec.f / 3 : rec.f;
    for (i64 h = 1; h * h <= r; ++h) {
        if (r % h) continue;
        for (i64 hh : {h, r / h}) {
            i64 kk = r / hh;
            i64 m = hh * kk * kk;
            if (m <= 1) continue;
            i64 cr = (i64)std::llround(std::cbrt((double)m));
            if (cr * cr * cr == m) continue;
            if (cubic_fields_isomorphic({rec.a2, rec.a1, rec.a0}, {0, 0, -m})) return true;
        }
    }
    return false;
}

cubic_field_record make_record(const binary_cubic_form& f)
{
    cubic_field_record rec;
    rec.form = f;
    i128 D = f.disc();
    rec.dL = (i64)D;
    auto dec = decompose_discriminant(rec.dL);
    rec.f = dec.f;
    rec.dK = dec.dK;
    auto g = monic_generator(f);
    rec.a2 = g[0];
    rec.a1 = g[1];
    rec.a0 = g[2];
    rec.signature = rec.dL > 0 ? cubic_signature::totally_real : cubic_signature::simply_real;
    rec.cyclic = rec.dK == 1;
    rec.pure = is_pure_field(rec);
    return rec;
}

} // namespace

std::vector<cubic_field_record> enumerate_fields_range(i64 lo, i64 hi, disc_sign sign)
{
    std::vector<cubic_field_record> out;
    for (auto& f : enumerate_forms_range(lo, hi, sign))
        if (is_maximal(f)) out.push_back(make_record(f));
    return out;
}

std::vector<cubic_field_record> enumerate_fields(i64 bound, disc_sign sign, int jobs)
{
    if (bound < 1) return {};
    if (jobs <= 1) return enumerate_fields_range(1, bound, sign);
    std::vector<std::pair<i64, i64>> ranges;
    i64 step = bound / jobs + 1;
    for (i64 lo = 1; lo <= bound; lo += step) ranges.push_back({lo, std::min(bound, lo + step - 1)});
    std::vector<std::vector<cubic_field_record>> parts(ranges.size());
    std::vector<std::thread> threads;
    for (size_t i = 0; i < ranges.size(); ++i)
        threads.emplace_back([&, i] { parts[i] = enumerate_fields_range(ranges[i].first, ranges[i].second, sign); });
    for (auto& t : threads) t.join();
    std::vector<cubic_field_record> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

std::vector<cubic_field_record> brute_force_oracle(i64 bound, disc_sign sign)
{
    if (bound > 2000) throw validation_error("brute force oracle is guarded to bound <= 2000");
    std::vector<cubic_field_record> out;
    if (bound < 1) return out;
    // Hunter-style box: some generator has 0 <= tr <= 1 and
    // T2 <= tr^2/3 + (4|dL|/9)^(1/2)
    double t2 = 1.0 / 3 + 2.0 * std::sqrt((double)bound) / 3;
    i64 b1 = (i64)((1 + t2) / 2) + 1;
    i64 b0 = (i64)std::pow(t2 / 3, 1.5) + 1;
    std::vector<std::pair<i64, std::array<i64, 3>>> found;  // (dL, poly)
    for (i64 A = -1; A <= 1; ++A)
        for (i64 B = -b1; B <= b1; ++B)
            for (i64 C = -b0; C <= b0; ++C) {
                binary_cubic_form f{1, A, B, C};
                i128 D = f.disc();
                if (D == 0) continue;
                if (sign == disc_sign::positive && D < 0) continue;
                if (sign == disc_sign::negative && D > 0) continue;
                if (!is_irreducible(f)) continue;
                i64 dL = monic_field_disc({A, B, C});
                if (abs128(dL) > bound) continue;
                found.push_back({dL, {A, B, C}});
            }
    std::stable_sort(found.begin(), found.end(),
                     [](const auto& x, const auto& y) {
                         if (std::llabs(x.first) != std::llabs(y.first))
                             return std::llabs(x.first) < std::llabs(y.first);
                         return x < y;
                     });
    // within each discriminant, keep one polynomial per isomorphism class
    for (size_t i = 0; i < found.size();) {
        size_t j = i;
        while (j < found.size() && found[j].first == found[i].first) ++j;
        std::vector<std::array<i64, 3>> classes;
        for (size_t k = i; k < j; ++k) {
            bool fresh = true;
            for (auto& cl : classes)
                if (cubic_fields_isomorphic(cl, found[k].second)) {
                    fresh = false;
                    break;
                }
            if (fresh) classes.push_back(found[k].second);
        }
        for (auto& cl : classes) {
            cubic_field_record rec;
            rec.form = reduce_cubic({1, cl[0], cl[1], cl[2]});
            rec.dL = found[i].first;  // certified field discriminant, not the generator's
            auto dec = decompose_discriminant(rec.dL);
            rec.f = dec.f;
            rec.dK = dec.dK;
            rec.a2 = cl[0];
            rec.a1 = cl[1];
            rec.a0 = cl[2];
            rec.signature = rec.dL > 0 ? cubic_signature::totally_real : cubic_signature::simply_real;
            rec.cyclic = rec.dK == 1;
            rec.pure = is_pure_field(rec);
            out.push_back(rec);
        }
        i = j;
    }
    return out;
}

std::string record_csv_header() { return "dL,f,dK,a2,a1,a0,signature,cyclic,pure"; }

std::string record_to_csv(const cubic_field_record& r)
{
    std::ostringstream os;
    os << r.dL << ',' << r.f << ',' << r.dK << ',' << r.a2 << ',' << r.a1 << ',' << r.a0 << ','
       << (r.signature == cubic_signature::totally_real ? "totallyReal" : "simplyReal") << ','
       << (r.cyclic ? "true" : "false") << ',' << (r.pure ? "true" : "false");
    return os.str();
}

std::string record_to_json(const cubic_field_record& r)
{
    std::ostringstream os;
    os << "{\"dL\":" << r.dL << ",\"f\":" << r.f << ",\"dK\":" << r.dK << ",\"a2\":" << r.a2
       << ",\"a1\":" << r.a1 << ",\"a0\":" << r.a0 << ",\"signature\":\""
       << (r.signature == cubic_signature::totally_real ? "totallyReal" : "simplyReal")
       << "\",\"cyclic\":" << (r.cyclic ? "true" : "false")
       << ",\"pure\":" << (r.pure ? "true" : "false") << "}";
    return os.str();
}

} // namespace ringclass
