#include "eisprod/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eisprod {

std::vector<PrimePower> factorize(u64 n)
{
    std::vector<PrimePower> out;
    if (n == 0)
        throw std::invalid_argument("factorize: zero");
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p)
            continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1)
        out.push_back({n, 1});
    return out;
}

std::vector<u64> divisors(u64 n)
{
    std::vector<u64> out{1};
    for (auto [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        u64 pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<u64> prime_divisors(u64 n)
{
    std::vector<u64> out;
    for (auto pe : factorize(n))
        out.push_back(pe.p);
    return out;
}

int moebius(u64 n)
{
    int mu = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1)
            return 0;
        mu = -mu;
    }
    return mu;
}

u64 euler_phi(u64 n)
{
    u64 r = n;
    for (auto pe : factorize(n))
        r = r / pe.p * (pe.p - 1);
    return r;
}

int valuation(u64 n, u64 p)
{
    int v = 0;
    while (n && n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

u64 gcd_u(u64 a, u64 b) { return std::gcd(a, b); }
u64 lcm_u(u64 a, u64 b) { return std::lcm(a, b); }

i64 mod_floor(i64 a, i64 m)
{
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

u64 mulmod(u64 a, u64 b, u64 m)
{
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m)
{
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(u64 n)
{
    if (n < 2)
        return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0)
            return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

Bezout ext_gcd(i64 a, i64 b)
{
    i64 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        i64 q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
    }
    if (old_r < 0)
        return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

i64 inverse_mod(i64 a, i64 m)
{
    if (m == 1)
        return 0;
    auto [g, x, y] = ext_gcd(mod_floor(a, m), m);
    (void)y;
    if (g != 1)
        throw std::invalid_argument("inverse_mod: not invertible");
    return mod_floor(x, m);
}

i64 crt_pair(i64 a, i64 m1, i64 b, i64 m2)
{
    i64 inv = inverse_mod(m1 % m2, m2);
    i64 t = static_cast<i64>(mulmod(static_cast<u64>(mod_floor(b - a, m2)), static_cast<u64>(inv), static_cast<u64>(m2)));
    return mod_floor(a, m1) + m1 * t;
}

SquarefreeSplit squarefree_split(u64 n)
{
    u64 s = 1, r = 1;
    for (auto [p, e] : factorize(n)) {
        for (int i = 0; i < e / 2; ++i)
            s *= p;
        if (e % 2)
            r *= p;
    }
    return {s, r};
}

u64 multiplicative_order(u64 a, u64 m)
{
    if (m == 1)
        return 1;
    u64 ord = euler_phi(m);
    for (auto [p, e] : factorize(ord)) {
        (void)e;
        while (ord % p == 0 && powmod(a, ord / p, m) == 1)
            ord /= p;
    }
    return ord;
}

u64 coprime_part_complement(u64 n, u64 m)
{
    u64 r = 1;
    for (auto [p, e] : factorize(n)) {
        if (m % p == 0)
            for (int i = 0; i < e; ++i)
                r *= p;
    }
    return r;
}

} // namespace eisprod
