// Truncated q-expansions sqrt(r) * sum_{n <= B} c_n q_w^n with cyclotomic coefficients.
#pragma once

#include "eisprod/characters.hpp"
#include "eisprod/surd.hpp"

#include <vector>

namespace eisprod {

class FourierExpansion {
public:
    FourierExpansion() = default;
    FourierExpansion(int weight, u64 width, u64 field_order, std::vector<CyclotomicNumber> coeffs, u64 radicand = 1);

    static FourierExpansion zero(int weight, u64 width, long precision, u64 field_order = 1);

    int weight() const { return weight_; }
    u64 width() const { return width_; }
    u64 field_order() const { return field_order_; }
    u64 radicand() const { return radicand_; }
    long precision() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<CyclotomicNumber>& coeffs() const { return coeffs_; }
    const CyclotomicNumber& operator[](std::size_t n) const { return coeffs_.at(n); }

    bool is_zero() const;
    // Same value in Q(zeta_m), m a multiple of the field order.
    FourierExpansion with_field(u64 m) const;
    // Multiplies the stored coefficients by sqrt(radicand) so that radicand() = 1.
    FourierExpansion materialized() const;
    // Same series in q_W for a multiple W of the width.
    FourierExpansion refine_width(u64 W) const;
    FourierExpansion truncate(long precision) const;
    FourierExpansion scaled(const Surd& s) const;

    // Coefficients multiplied by sqrt(radicand), in a common field.
    std::vector<CyclotomicNumber> true_coefficients() const;

    friend bool operator==(const FourierExpansion& a, const FourierExpansion& b);
    friend bool operator!=(const FourierExpansion& a, const FourierExpansion& b) { return !(a == b); }

private:
    int weight_ = 0;
    u64 width_ = 1;
    u64 field_order_ = 1;
    u64 radicand_ = 1;
    std::vector<CyclotomicNumber> coeffs_;
};

struct ScaledExpansion {
    Surd scalar;
    FourierExpansion series;
};

FourierExpansion linear_combine(const std::vector<ScaledExpansion>& terms);
FourierExpansion add(const FourierExpansion& f, const FourierExpansion& g);
FourierExpansion subtract(const FourierExpansion& f, const FourierExpansion& g);
FourierExpansion multiply(const FourierExpansion& f, const FourierExpansion& g);
FourierExpansion apply_B_d(const FourierExpansion& f, u64 d);
FourierExpansion apply_U_p(const FourierExpansion& f, u64 p);
FourierExpansion twist(const FourierExpansion& f, const DirichletCharacter& alpha);

// floor(k * N * prod_{p | N} (1 + 1/p) / 12)
long sturm_bound(u64 N, int k);
u64 gamma0_index(u64 N);

} // namespace eisprod
