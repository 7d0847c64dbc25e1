// Exact elements of Q(zeta_m) in the power basis 1, x, ..., x^(phi(m)-1) of Q[x]/Phi_m.
#pragma once

#include "eisprod/arith.hpp"
#include "eisprod/kronecker.hpp"
#include "eisprod/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eisprod {

struct CyclotomicFieldData {
    u64 order;
    std::size_t degree;
    // Phi_m = x^degree + sum over tail of c * x^j.
    std::vector<std::pair<std::size_t, i64>> tail;
    std::vector<i64> coefficients;
};

const CyclotomicFieldData& cyclotomic_field(u64 m);
const std::vector<i64>& cyclotomic_polynomial(u64 m);

// Reduces an integer polynomial in x = zeta_m to the canonical basis (length phi(m)).
void reduce_cyclotomic(IntPoly& poly, u64 m);

class CyclotomicNumber {
public:
    CyclotomicNumber();
    CyclotomicNumber(long value);
    CyclotomicNumber(const Rational& value, u64 order = 1);

    static CyclotomicNumber from_coefficients(u64 order, const std::vector<Rational>& coeffs);
    // Value = poly(zeta_m) / den; poly may have any length.
    static CyclotomicNumber from_polynomial(u64 order, IntPoly poly, Integer den = 1);
    static CyclotomicNumber from_polynomial(u64 order, const std::vector<Rational>& poly);

    u64 order() const { return order_; }
    std::size_t degree() const { return num_.size(); }
    Rational coefficient(std::size_t i) const;
    std::vector<Rational> coefficients() const;
    const IntPoly& numerators() const { return num_; }
    const Integer& denominator() const { return den_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational to_rational() const;

    CyclotomicNumber embed(u64 m) const;
    CyclotomicNumber conjugate() const;
    // Galois automorphism zeta_m -> zeta_m^j, gcd(j, m) = 1.
    CyclotomicNumber galois(i64 j) const;
    CyclotomicNumber inverse() const;
    CyclotomicNumber pow(long e) const;

    CyclotomicNumber operator-() const;
    CyclotomicNumber& operator+=(const CyclotomicNumber& o);
    CyclotomicNumber& operator-=(const CyclotomicNumber& o);
    CyclotomicNumber& operator*=(const CyclotomicNumber& o);
    CyclotomicNumber& operator/=(const CyclotomicNumber& o);
    CyclotomicNumber& operator*=(const Rational& q);

    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
    friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& q) { return a *= q; }
    friend CyclotomicNumber operator*(const Rational& q, CyclotomicNumber a) { return a *= q; }

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

    // Image under zeta_m -> omega in F_p; nullopt if p divides the denominator.
    std::optional<u64> reduce_mod(u64 p, u64 omega) const;

    std::string to_string() const;

private:
    void normalize();

    u64 order_;
    IntPoly num_;
    Integer den_;
};

CyclotomicNumber root_of_unity(u64 m, i64 j);

// Positive square root of a squarefree r inside a cyclotomic field.
CyclotomicNumber sqrt_cyclotomic(u64 r);

} // namespace eisprod
