// Scalars of the form c * sqrt(r) with c cyclotomic and r squarefree.
#pragma once

#include "eisprod/cyclotomic.hpp"

namespace eisprod {

struct Surd {
    CyclotomicNumber value;
    u64 radicand = 1;

    Surd() = default;
    Surd(CyclotomicNumber v, u64 r = 1);

    // d^(k/2) for a positive integer d.
    static Surd half_power(u64 d, int k);

    bool is_zero() const { return value.is_zero(); }
    CyclotomicNumber materialize() const;

    friend Surd operator*(const Surd& a, const Surd& b);
    friend bool operator==(const Surd& a, const Surd& b);
};

Surd inverse(const Surd& s);

} // namespace eisprod
