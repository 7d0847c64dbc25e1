// Elementary integer number theory on machine words.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace eisprod {

using i64 = std::int64_t;
using u64 = std::uint64_t;

struct PrimePower {
    u64 p;
    int e;
};

std::vector<PrimePower> factorize(u64 n);
std::vector<u64> divisors(u64 n);
std::vector<u64> prime_divisors(u64 n);

int moebius(u64 n);
u64 euler_phi(u64 n);
int valuation(u64 n, u64 p);

u64 gcd_u(u64 a, u64 b);
u64 lcm_u(u64 a, u64 b);

// Nonnegative residue of a mod m.
i64 mod_floor(i64 a, i64 m);

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);
bool is_prime(u64 n);

// Inverse of a mod m; throws if not invertible.
i64 inverse_mod(i64 a, i64 m);

// x = a mod m1, x = b mod m2 with coprime moduli, result in [0, m1*m2).
i64 crt_pair(i64 a, i64 m1, i64 b, i64 m2);

// Returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
struct Bezout {
    i64 g, x, y;
};
Bezout ext_gcd(i64 a, i64 b);

// n = s^2 * r with r squarefree.
struct SquarefreeSplit {
    u64 square_root;
    u64 radicand;
};
SquarefreeSplit squarefree_split(u64 n);

// Multiplicative order of a modulo m (gcd(a, m) = 1).
u64 multiplicative_order(u64 a, u64 m);

// Largest divisor of n composed of primes dividing m.
u64 coprime_part_complement(u64 n, u64 m);

} // namespace eisprod
