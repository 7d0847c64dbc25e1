// Generators E_l^{phi,psi}|B_{d1 d} * E_{k-l}^{conj phi, conj psi}|B_{d2 d} of the product space Q_k(N).
#pragma once

#include "eisprod/eisenstein.hpp"

#include <string>
#include <utility>
#include <vector>

namespace eisprod {

struct GeneratorQuintuple {
    DirichletCharacter phi;
    DirichletCharacter psi;
    int l = 1;
    u64 d1 = 1;
    u64 d2 = 1;
    u64 d = 1;

    // N_0 = d1 M1 d2 M2.
    u64 base_level() const { return d1 * phi.modulus() * d2 * psi.modulus(); }
    u64 level() const { return base_level() * d; }

    EisLabel first() const { return {phi, psi, l, d1 * d}; }
    EisLabel second(int k) const { return {phi.conj(), psi.conj(), k - l, d2 * d}; }

    friend bool operator==(const GeneratorQuintuple& a, const GeneratorQuintuple& b)
    {
        return a.phi == b.phi && a.psi == b.psi && a.l == b.l && a.d1 == b.d1 && a.d2 == b.d2 && a.d == b.d;
    }
};

// Readable form, e.g. "(1,4:0,l=1,d1=1,d2=2,d=4)".
std::string to_string(const GeneratorQuintuple& g);

// Throws unless g satisfies the defining constraints for weight k, with N_0 d | N.
void validate(const GeneratorQuintuple& g, u64 N, int k);

// Primes p with v_p(n) = 1, multiplied together.
u64 squarefree_part(u64 n);

// All quintuples of B'(N_0) with lifts B_d, N_0 d | N. Ordered by N_0, d, M1, phi, M2, psi, d1, l.
std::vector<GeneratorQuintuple> enumerate_generators(u64 N, int k);

// Width-1 expansion of the product through q^B.
FourierExpansion generator_expansion(const GeneratorQuintuple& g, int k, long B);

} // namespace eisprod
