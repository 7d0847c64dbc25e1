#include "eisprod/modp.hpp"

#include "eisprod/error.hpp"

namespace eisprod {

u64 next_prime_one_mod(u64 m, u64 after)
{
    require(m >= 1, "next_prime_one_mod: modulus must be positive");
    const u64 top = (u64{1} << 62);
    u64 start = after == 0 ? top : after - 1;
    // Largest candidate <= start with candidate = 1 mod m.
    u64 c = start - (start - 1) % m;
    for (; c > m; c -= m)
        if (c != after && is_prime(c))
            return c;
    fail(ErrorKind::internal, "ran out of primes congruent to 1 modulo " + std::to_string(m));
}

u64 primitive_root_of_unity(u64 m, u64 p)
{
    require((p - 1) % m == 0, "primitive_root_of_unity: m must divide p - 1");
    if (m == 1)
        return 1;
    const auto primes = prime_divisors(m);
    for (u64 g = 2; g < p; ++g) {
        const u64 w = powmod(g, (p - 1) / m, p);
        bool ok = true;
        for (u64 q : primes)
            if (powmod(w, m / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok)
            return w;
    }
    fail(ErrorKind::internal, "no primitive root of unity found");
}

ModMatrix ModMatrix::transposed() const
{
    ModMatrix t(cols_, rows_, p_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

std::vector<std::size_t> ModMatrix::rref()
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t sel = row;
        while (sel < rows_ && at(sel, col) == 0)
            ++sel;
        if (sel == rows_)
            continue;
        if (sel != row)
            for (std::size_t c = col; c < cols_; ++c)
                std::swap(at(sel, c), at(row, c));
        const u64 inv = powmod(at(row, col), p_ - 2, p_);
        for (std::size_t c = col; c < cols_; ++c)
            at(row, c) = mulmod(at(row, c), inv, p_);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row)
                continue;
            const u64 f = at(r, col);
            if (f == 0)
                continue;
            const u64 nf = p_ - f;
            u64* dst = &data_[r * cols_];
            const u64* src = &data_[row * cols_];
            for (std::size_t c = col; c < cols_; ++c)
                if (src[c] != 0)
                    dst[c] = (dst[c] + mulmod(nf, src[c], p_)) % p_;
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank_mod(ModMatrix m)
{
    return m.rref().size();
}

std::optional<ModMatrix> inverse_mod(const ModMatrix& m)
{
    const std::size_t n = m.rows();
    require(m.cols() == n, "inverse_mod: matrix must be square");
    ModMatrix aug(n, 2 * n, m.modulus());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    const auto piv = aug.rref();
    if (piv.size() < n || piv[n - 1] != n - 1)
        return std::nullopt;
    ModMatrix inv(n, n, m.modulus());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv.at(r, c) = aug.at(r, n + c);
    return inv;
}

std::optional<Rational> rational_reconstruct(const Integer& a, const Integer& M)
{
    Integer bound;
    mpz_sqrt(bound.get_mpz_t(), Integer(M / 2).get_mpz_t());
    Integer r0 = M, r1 = a % M;
    if (r1 < 0)
        r1 += M;
    Integer t0 = 0, t1 = 1;
    while (r1 > bound) {
        const Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        Integer t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (t1 == 0 || abs(t1) > bound)
        return std::nullopt;
    Integer g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1)
        return std::nullopt;
    return make_rational(r1, t1);
}

} // namespace eisprod
