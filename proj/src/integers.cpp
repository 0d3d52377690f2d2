#include "ringclass/integers.hpp"

#include <algorithm>
#include <cmath>

namespace ringclass {

std::string to_string(i128 v)
{
    if (v == 0) return "0";
    bool neg = v < 0;
    i128 a = neg ? -v : v;
    std::string s;
    while (a > 0) {
        s.push_back(char('0' + int(a % 10)));
        a /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

i64 gcd64(i64 a, i64 b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i128 gcd128(i128 a, i128 b)
{
    a = abs128(a);
    b = abs128(b);
    while (b) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

xgcd_result xgcd(i128 a, i128 b)
{
    i128 old_r = a, r = b;
    i128 old_x = 1, x = 0;
    i128 old_y = 0, y = 1;
    while (r != 0) {
        i128 q = old_r / r;
        i128 t;
        t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * x; old_x = x; x = t;
        t = old_y - q * y; old_y = y; y = t;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_x = -old_x;
        old_y = -old_y;
    }
    return {old_r, old_x, old_y};
}

i64 isqrt64(i64 n)
{
    if (n < 0) throw validation_error("isqrt of negative value");
    if (n == 0) return 0;
    i64 r = (i64)std::sqrt((double)n);
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

i128 isqrt128(i128 n)
{
    if (n < 0) throw validation_error("isqrt of negative value");
    if (n == 0) return 0;
    i128 r = (i128)(i64)std::sqrt((double)n);
    if (r < 1) r = 1;
    // Newton correction, then clamp exactly.
    for (int i = 0; i < 64; ++i) {
        i128 nr = (r + n / r) / 2;
        if (nr >= r) break;
        r = nr;
    }
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

int kronecker(i128 a, i128 n)
{
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    // strip factors of 2 from n
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        int v = 0;
        while (n % 2 == 0) {
            n /= 2;
            ++v;
        }
        if (v % 2 == 1) {
            i128 am8 = ((a % 8) + 8) % 8;
            if (am8 == 3 || am8 == 5) result = -result;
        }
    }
    a %= n;
    if (a < 0) a += n;
    // now n odd positive, 0 <= a < n; quadratic reciprocity loop
    while (a != 0) {
        int v = 0;
        while (a % 2 == 0) {
            a /= 2;
            ++v;
        }
        if (v % 2 == 1) {
            i128 nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) result = -result;
        }
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        i128 t = n % a;
        n = a;
        a = t;
    }
    return n == 1 ? result : 0;
}

i64 mod_pow(i64 a, i64 e, i64 m)
{
    if (m <= 0) throw validation_error("mod_pow with non-positive modulus");
    a = mod_floor(a, m);
    i64 r = 1 % m;
    while (e > 0) {
        if (e & 1) r = (i64)((i128)r * a % m);
        a = (i64)((i128)a * a % m);
        e >>= 1;
    }
    return r;
}

std::vector<std::pair<i64, int>> factorize(i64 n)
{
    if (n == 0) throw validation_error("factorize(0)");
    if (n < 0) n = -n;
    std::vector<std::pair<i64, int>> out;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_squarefree(i64 n)
{
    if (n == 0) return false;
    for (auto& [p, e] : factorize(n))
        if (e >= 2) return false;
    return true;
}

std::vector<i64> primes_up_to(i64 limit)
{
    std::vector<i64> ps;
    if (limit < 2) return ps;
    std::vector<bool> sieve(size_t(limit + 1), true);
    for (i64 i = 2; i <= limit; ++i) {
        if (sieve[size_t(i)]) {
            ps.push_back(i);
            for (i64 j = i * i; j <= limit; j += i) sieve[size_t(j)] = false;
        }
    }
    return ps;
}

i64 square_divisor_part(i64 n)
{
    i64 s = 1;
    for (auto& [p, e] : factorize(n))
        for (int i = 0; i < e / 2; ++i) s *= p;
    return s;
}

} // namespace ringclass
