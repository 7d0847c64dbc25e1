#include "eisprod/surd.hpp"

#include "eisprod/error.hpp"

namespace eisprod {

Surd::Surd(CyclotomicNumber v, u64 r) : value(std::move(v)), radicand(r)
{
    require(r >= 1, "radicand must be positive");
    auto [s, rr] = squarefree_split(r);
    if (s != 1) {
        value *= Rational(Integer(s));
        radicand = rr;
    }
}

Surd Surd::half_power(u64 d, int k)
{
    require(d >= 1 && k >= 0, "half_power: bad arguments");
    Integer base(static_cast<unsigned long>(d));
    Rational whole(pow_int(base, static_cast<unsigned long>(k / 2)));
    if (k % 2 == 0)
        return Surd(CyclotomicNumber(whole));
    return Surd(CyclotomicNumber(whole), d);
}

CyclotomicNumber Surd::materialize() const
{
    if (radicand == 1)
        return value;
    return value * sqrt_cyclotomic(radicand);
}

Surd operator*(const Surd& a, const Surd& b)
{
    const u64 g = gcd_u(a.radicand, b.radicand);
    const u64 r = (a.radicand / g) * (b.radicand / g);
    CyclotomicNumber v = a.value * b.value;
    if (g != 1)
        v *= Rational(Integer(static_cast<unsigned long>(g)));
    return Surd(std::move(v), r);
}

bool operator==(const Surd& a, const Surd& b)
{
    if (a.radicand == b.radicand)
        return a.value == b.value;
    return a.materialize() == b.materialize();
}

Surd inverse(const Surd& s)
{
    // 1/(c sqrt r) = (1/(c r)) sqrt r
    CyclotomicNumber v = s.value.inverse() * Rational(1, Integer(static_cast<unsigned long>(s.radicand)));
    return Surd(std::move(v), s.radicand);
}

} // namespace eisprod
