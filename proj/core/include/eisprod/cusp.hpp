// Expansions of sums of Eisenstein products at arbitrary cusps, and Atkin-Lehner operators.
#pragma once

#include "eisprod/gseries.hpp"

#include <optional>
#include <set>
#include <vector>

namespace eisprod {

struct IntegerMatrix {
    i64 a = 1, b = 0, c = 0, d = 1;
    i64 det() const { return a * d - b * c; }
};

// A = gamma * (a', b'; 0, d') with gamma in SL_2(Z), a' > 0, 0 <= b' < d'.
struct TriangularFactorization {
    UnimodularMatrix gamma;
    i64 a = 1, b = 0, d = 1;
};
TriangularFactorization factor_matrix(const IntegerMatrix& A);

// f | (a, b; 0, d) = (a/d)^(k/2) sum c_n zeta_{wd}^(nb) q_{wd}^(na)
FourierExpansion apply_upper_triangular(const FourierExpansion& f, i64 a, i64 b, i64 d);

// sum_i coeff_i * prod_j factors_ij
struct ProductTerm {
    Surd coeff;
    std::vector<GSeriesCombination> factors;
};

struct FormExpression {
    int weight = 0;
    std::vector<ProductTerm> terms;

    void add_product(const Surd& c, const std::vector<EisLabel>& labels);
    void add_eisenstein(const Surd& c, const EisBasisElement& e);
};

// Expansion of f|gamma in the lcm of the factor widths, exact for exponents below height.
FourierExpansion slash_expand(const FormExpression& f, const UnimodularMatrix& gamma, const Rational& height);

// Re-indexes f to width w. Throws if f has nonzero coefficients off the exponents representable in q_w.
FourierExpansion to_width(const FourierExpansion& f, u64 w);
// Smallest divisor v of the width such that f is a series in q_v.
u64 minimal_width(const FourierExpansion& f);

u64 cusp_width(u64 N, u64 c);

struct CuspExpansion {
    Rational cusp;
    bool infinite = false;
    UnimodularMatrix gamma;
    u64 width = 1;
    u64 minimal_width = 1;
    FourierExpansion expansion;
};

CuspExpansion expansion_at_cusp(const FormExpression& f, u64 N, const UnimodularMatrix& gamma, long B);

// (N_S, 1; N z, N_S w) with N_S w - (N / N_S) z = 1.
IntegerMatrix al_matrix(u64 N, const std::set<u64>& S);
FourierExpansion al_image(const FormExpression& f, u64 N, const std::set<u64>& S, long B);
FourierExpansion slash_by_matrix(const FormExpression& f, const IntegerMatrix& A, long B);
CyclotomicNumber al_eigenvalue(const FormExpression& f, u64 N, const std::set<u64>& S, long B);

// Ratio lambda with g = lambda f on all coefficients, if one exists and f is nonzero.
std::optional<CyclotomicNumber> proportionality(const FourierExpansion& g, const FourierExpansion& f);

} // namespace eisprod
