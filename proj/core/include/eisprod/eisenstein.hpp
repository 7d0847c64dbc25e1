// Eisenstein series E_l^{phi,psi} = e_l^{phi,psi} + 2 sum sigma_{l-1,phi,psi}(n) q^n for primitive phi, psi.
#pragma once

#include "eisprod/qexp.hpp"

#include <string>
#include <vector>

namespace eisprod {

struct EisLabel {
    DirichletCharacter phi;
    DirichletCharacter psi;
    int l = 1;
    u64 d = 1;

    u64 level() const { return phi.modulus() * psi.modulus() * d; }
    friend bool operator==(const EisLabel& a, const EisLabel& b)
    {
        return a.phi == b.phi && a.psi == b.psi && a.l == b.l && a.d == b.d;
    }
};

// Throws unless phi, psi are primitive, phi(-1)psi(-1) = (-1)^l and (phi, psi, l) != (1, 1, 2).
void validate(const EisLabel& label);
std::string to_string(const EisLabel& label);

CyclotomicNumber sigma_divisor(u64 n, const DirichletCharacter& phi, const DirichletCharacter& psi, int l);
CyclotomicNumber eis_constant_term(const DirichletCharacter& phi, const DirichletCharacter& psi, int l);

// Width-1 expansion of E_l^{phi,psi} | B_d through q^B.
FourierExpansion eis_expansion(const EisLabel& label, long B);

// -1/12 + 2 sum sigma_1(n) q^n. Quasi-modular; only differences E2 - E2|B_t are modular.
FourierExpansion e2_series(long B);

// E_l^{1, conj(alpha_N)} = sum_{e | N/N_M} mu(e) alpha(e) t^l E_l^{1, conj alpha}(t z), t = N/(M e).
FourierExpansion eis_imprimitive(const DirichletCharacter& alpha, u64 N, int l, long B);

// E_l^{phi,psi}|B_t, or E2 - E2|B_t when e2_difference is set.
struct EisBasisElement {
    DirichletCharacter phi;
    int k = 2;
    u64 t = 1;
    bool e2_difference = false;

    std::string id() const;
    friend bool operator==(const EisBasisElement& a, const EisBasisElement& b)
    {
        return a.phi == b.phi && a.k == b.k && a.t == b.t && a.e2_difference == b.e2_difference;
    }
};

EisBasisElement parse_eis_basis_id(const std::string& id);
FourierExpansion eis_basis_expansion(const EisBasisElement& e, long B);

// Spanning set of the Eisenstein subspace of M_k(Gamma_0(N)): E_k^{phi, conj phi}|B_t with M1^2 t | N,
// and for k = 2 the differences E2 - E2|B_t, t | N, t > 1.
std::vector<EisBasisElement> eisenstein_space_elements(u64 N, int k);
std::vector<FourierExpansion> eisenstein_space_basis(u64 N, int k, long B);

} // namespace eisprod
