#include "eisprod/kronecker.hpp"

#include <algorithm>

namespace eisprod {

namespace {

constexpr std::size_t limb_bits = GMP_NUMB_BITS;

void pack(const IntPoly& a, std::size_t slot, mpz_class& out)
{
    const std::size_t n = a.size() * slot;
    std::vector<mp_limb_t> pos(n, 0), neg(n, 0);
    bool any_neg = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const mpz_srcptr z = a[i].get_mpz_t();
        const int sgn = mpz_sgn(z);
        if (sgn == 0)
            continue;
        mp_limb_t* dst = (sgn > 0 ? pos.data() : neg.data()) + i * slot;
        const std::size_t sz = mpz_size(z);
        const mp_limb_t* src = mpz_limbs_read(z);
        std::copy(src, src + sz, dst);
        any_neg = any_neg || sgn < 0;
    }
    mpz_import(out.get_mpz_t(), n, -1, sizeof(mp_limb_t), 0, 0, pos.data());
    if (any_neg) {
        mpz_class m;
        mpz_import(m.get_mpz_t(), n, -1, sizeof(mp_limb_t), 0, 0, neg.data());
        out -= m;
    }
}

IntPoly unpack(const mpz_class& c, std::size_t count, std::size_t slot)
{
    IntPoly out(count);
    const bool negative = sgn(c) < 0;
    mpz_class mag = abs(c);
    const std::size_t size = mpz_size(mag.get_mpz_t());
    const mp_limb_t* limbs = mpz_limbs_read(mag.get_mpz_t());
    std::vector<mp_limb_t> tmp(slot);
    mp_limb_t carry = 0;
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < slot; ++j) {
            const std::size_t k = i * slot + j;
            tmp[j] = k < size ? limbs[k] : 0;
        }
        carry = mpn_add_1(tmp.data(), tmp.data(), static_cast<mp_size_t>(slot), carry);
        const bool top = (tmp[slot - 1] >> (limb_bits - 1)) & 1;
        if (top) {
            mpn_neg(tmp.data(), tmp.data(), static_cast<mp_size_t>(slot));
            carry += 1;
        }
        mpz_import(out[i].get_mpz_t(), slot, -1, sizeof(mp_limb_t), 0, 0, tmp.data());
        if (top != negative)
            out[i] = -out[i];
    }
    return out;
}

std::size_t ceil_log2(std::size_t n)
{
    std::size_t r = 0;
    while ((std::size_t{1} << r) < n)
        ++r;
    return r;
}

} // namespace

std::size_t max_bits(const IntPoly& a)
{
    std::size_t b = 0;
    for (const auto& z : a)
        b = std::max(b, mpz_sizeinbase(z.get_mpz_t(), 2));
    return b;
}

IntPoly kronecker_multiply(const IntPoly& a, const IntPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    const std::size_t bits = max_bits(a) + max_bits(b) + ceil_log2(std::min(a.size(), b.size())) + 2;
    const std::size_t slot = (bits + limb_bits - 1) / limb_bits;
    mpz_class pa, pb;
    pack(a, slot, pa);
    pack(b, slot, pb);
    pa *= pb;
    return unpack(pa, a.size() + b.size() - 1, slot);
}

IntPoly schoolbook_multiply(const IntPoly& a, const IntPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    IntPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (sgn(b[j]) == 0)
                continue;
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return out;
}

IntPoly poly_multiply(const IntPoly& a, const IntPoly& b)
{
    auto nnz = [](const IntPoly& p) {
        return static_cast<std::size_t>(std::count_if(p.begin(), p.end(), [](const Integer& z) { return sgn(z) != 0; }));
    };
    const std::size_t work = nnz(a) * nnz(b);
    if (work < 2048)
        return schoolbook_multiply(a, b);
    return kronecker_multiply(a, b);
}

std::vector<IntPoly> series_poly_multiply(const std::vector<IntPoly>& a, const std::vector<IntPoly>& b,
                                          std::size_t width, std::size_t terms)
{
    const std::size_t stride = 2 * width - 1;
    const std::size_t la = std::min(a.size(), terms), lb = std::min(b.size(), terms);
    std::vector<IntPoly> out(terms, IntPoly(stride));
    if (la == 0 || lb == 0)
        return out;
    IntPoly fa(la * stride), fb(lb * stride);
    for (std::size_t n = 0; n < la; ++n)
        std::copy(a[n].begin(), a[n].end(), fa.begin() + static_cast<std::ptrdiff_t>(n * stride));
    for (std::size_t n = 0; n < lb; ++n)
        std::copy(b[n].begin(), b[n].end(), fb.begin() + static_cast<std::ptrdiff_t>(n * stride));
    IntPoly prod = poly_multiply(fa, fb);
    for (std::size_t n = 0; n < terms; ++n) {
        for (std::size_t j = 0; j < stride; ++j) {
            const std::size_t k = n * stride + j;
            if (k < prod.size())
                out[n][j] = std::move(prod[k]);
        }
    }
    return out;
}

} // namespace eisprod
