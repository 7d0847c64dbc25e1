// Exact representations of forms in M_k(Gamma_0(N)) as combinations of generator products
// and Eisenstein series.
//
// Systems over Q(zeta_m) are solved one prime at a time: for p = 1 mod m every embedding
// zeta_m -> omega^j is handled in F_p, the power-basis coordinates are interpolated, and the
// coordinates are recovered by CRT and rational reconstruction. Every result is verified in
// exact arithmetic before it is returned. The solution is the one with the free variables of
// the reduced row echelon form set to zero; since the column rank profile is Galois-invariant,
// this is well defined over Q(zeta_m).
#pragma once

#include "eisprod/cusp.hpp"
#include "eisprod/generators.hpp"
#include "eisprod/serialize.hpp"

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace eisprod {

// Column j is sqrt(radicands[j]) * entries[j]; entries live in Q(zeta_field_order).
struct ExactMatrix {
    std::size_t rows = 0;
    u64 field_order = 1;
    std::vector<std::vector<CyclotomicNumber>> columns;
    std::vector<u64> radicands;

    std::size_t cols() const { return columns.size(); }
};

// Rows are the coefficients 0..B; generator columns first, then Eisenstein columns.
ExactMatrix build_matrix(const std::vector<GeneratorQuintuple>& gens, int k, long B,
                         const std::vector<EisBasisElement>& eisenstein = {});

struct LinearSolution {
    std::vector<CyclotomicNumber> x;
    std::size_t rank = 0;
};

// Canonical solution of columns * x = rhs over Q(zeta_m), or nullopt when rhs is not in the span.
// Entries must lie in Q(zeta_m). The result is verified exactly.
std::optional<LinearSolution> solve_exact(const std::vector<std::vector<CyclotomicNumber>>& columns,
                                          const std::vector<CyclotomicNumber>& rhs, u64 m);

// Rank over Q(zeta_m), computed in two independent reductions modulo large primes.
std::size_t rank_exact(const std::vector<std::vector<CyclotomicNumber>>& columns, std::size_t rows, u64 m);

struct ProductRepresentation {
    u64 level = 1;
    int weight = 2;
    std::vector<std::pair<CyclotomicNumber, GeneratorQuintuple>> terms;
    std::vector<std::pair<CyclotomicNumber, EisBasisElement>> eis_terms;
    std::string target_digest;
    long verified_to = -1;

    FormExpression expression() const;
};

// y with sum_n y_n a_n(g) = 0 for every column g and sum_n y_n a_n(target) = 1, n <= precision.
struct NotInSpan {
    std::vector<CyclotomicNumber> witness;
    long precision = 0;
    std::string target_digest;
};

using SolveResult = std::variant<ProductRepresentation, NotInSpan>;

// Uses all generators of Q_k(N) and the Eisenstein spanning set at precision sturm_bound + 5.
SolveResult solve_represent(const FourierExpansion& target, u64 N, int k);

// Same, restricted to the given columns and precision B.
SolveResult solve_in_span(const FourierExpansion& target, u64 N, int k, const std::vector<GeneratorQuintuple>& gens,
                          const std::vector<EisBasisElement>& eisenstein, long B);

FourierExpansion expand(const ProductRepresentation& rep, long B);
bool verify_representation(const ProductRepresentation& rep, const FourierExpansion& target, long B);
// Checks the certificate equations exactly.
bool verify_certificate(const NotInSpan& cert, const FourierExpansion& target, u64 N, int k);

std::size_t rank_of_span(u64 N, int k, long B);

// dim M_k(Gamma_0(N)) and dim S_k(Gamma_0(N)) for even k >= 2.
long dimension_modular_forms(u64 N, int k);
long dimension_cusp_forms(u64 N, int k);

Json to_json(const GeneratorQuintuple& g);
GeneratorQuintuple quintuple_from_json(const Json& j);
Json to_json(const ProductRepresentation& rep);
ProductRepresentation representation_from_json(const Json& j);
Json to_json(const NotInSpan& cert);

} // namespace eisprod
