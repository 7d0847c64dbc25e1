// Residue-class lattice sums
//   G_L^{(v1,v2)}(z) = sum_{(c,d) = (v1,v2) mod L} (cz + d)^(-l)   (Hecke-regularized at s = 0)
// in the normalization Ghat = (l-1)! L^l / (-2 pi i)^l * G, whose q_L-expansion is
//   a_n = sum_{c | n, c = v1} (n/c)^(l-1) zeta_L^((n/c) v2) + (-1)^l sum_{c | n, c = -v1} (n/c)^(l-1) zeta_L^(-(n/c) v2)
// plus the constant term computed in gseries.cpp. SL_2(Z) acts on the index by v -> v gamma.
#pragma once

#include "eisprod/eisenstein.hpp"

#include <array>
#include <vector>

namespace eisprod {

struct UnimodularMatrix {
    i64 a = 1, b = 0, c = 0, d = 1;

    UnimodularMatrix() = default;
    UnimodularMatrix(i64 a_, i64 b_, i64 c_, i64 d_);

    static UnimodularMatrix identity() { return {}; }
    static UnimodularMatrix S() { return {0, -1, 1, 0}; }
    static UnimodularMatrix T(i64 m) { return {1, m, 0, 1}; }

    UnimodularMatrix inverse() const { return {d, -b, -c, a}; }
    friend UnimodularMatrix operator*(const UnimodularMatrix& x, const UnimodularMatrix& y);
    friend bool operator==(const UnimodularMatrix& x, const UnimodularMatrix& y)
    {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
};

// coeff * zeta_{root_order}^{root_exp} * Ghat_L^{(v1, v2)}
struct GSeriesTerm {
    Rational coeff;
    u64 root_order = 1;
    u64 root_exp = 0;
    u64 v1 = 0;
    u64 v2 = 0;
};

struct GSeriesCombination {
    int weight = 1;
    u64 level = 1;
    Surd normalizer{CyclotomicNumber(1)};
    std::vector<GSeriesTerm> terms;

    // Coefficient of the 1/y term at s = 0, up to a constant independent of the index.
    // Only weight 2 carries one; every modular combination has multiplier 0.
    CyclotomicNumber nonholomorphic_multiplier() const;
    // Sorts terms by index and merges equal indices.
    void canonicalize();
};

GSeriesCombination decompose(const EisLabel& label);
GSeriesCombination decompose_e2_difference(u64 t);
GSeriesCombination decompose(const EisBasisElement& e);

// Same function written at level L2, a multiple of the level: Ghat_L^v = (L/L2)^l sum_{v' = v mod L} Ghat_L2^{v'}.
GSeriesCombination refine_level(const GSeriesCombination& g, u64 L2);

GSeriesCombination slash(const GSeriesCombination& g, const UnimodularMatrix& gamma);

// Expansion in q_W, W = L / gcd of the first index entries with L, through exponents below height * W.
FourierExpansion gseries_expansion(const GSeriesCombination& g, const Rational& height);

} // namespace eisprod
