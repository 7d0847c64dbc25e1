#include "eisprod/generators.hpp"

#include "eisprod/error.hpp"

namespace eisprod {

std::string to_string(const GeneratorQuintuple& g)
{
    return "(" + character_ref(g.phi) + "," + character_ref(g.psi) + ",l=" + std::to_string(g.l) +
           ",d1=" + std::to_string(g.d1) + ",d2=" + std::to_string(g.d2) + ",d=" + std::to_string(g.d) + ")";
}

u64 squarefree_part(u64 n)
{
    u64 r = 1;
    for (const auto& pp : factorize(n))
        if (pp.e == 1)
            r *= pp.p;
    return r;
}

void validate(const GeneratorQuintuple& g, u64 N, int k)
{
    require(k >= 2 && k % 2 == 0, "product weight must be even and at least 2");
    require(g.l >= 1 && g.l <= k - 1, "l must lie in 1..k-1");
    require(g.d1 >= 1 && g.d2 >= 1 && g.d >= 1, "lift parameters must be positive");
    require(g.phi.is_primitive() && g.psi.is_primitive(), "generator characters must be primitive");
    require(g.phi.sign() * g.psi.sign() == (g.l % 2 == 0 ? 1 : -1), "character parity does not match l");
    const bool trivial = g.phi.is_trivial() && g.psi.is_trivial();
    require(!(trivial && (g.l == 2 || g.l == k - 2)), "excluded trivial pair with a weight-2 factor");
    const u64 N0 = g.base_level();
    require(N % (N0 * g.d) == 0, "N_0 d must divide the level");
    require(squarefree_part(N0) % (g.d1 * g.phi.modulus()) == 0, "d1 M1 must divide the squarefree part of N_0");
}

std::vector<GeneratorQuintuple> enumerate_generators(u64 N, int k)
{
    require(N >= 1, "level must be positive");
    require(k >= 2 && k % 2 == 0, "product weight must be even and at least 2");
    std::vector<GeneratorQuintuple> out;
    for (u64 N0 : divisors(N)) {
        const u64 NT = squarefree_part(N0);
        for (u64 d : divisors(N / N0)) {
            for (u64 M1 : divisors(NT)) {
                const auto phis = enumerate_primitive(M1, Parity::any);
                for (u64 M2 : divisors(N0 / M1)) {
                    const auto psis = enumerate_primitive(M2, Parity::any);
                    for (const auto& phi : phis)
                        for (const auto& psi : psis)
                            for (u64 d1 : divisors(NT / M1)) {
                                if ((N0 / M1 / M2) % d1 != 0)
                                    continue;
                                const u64 d2 = N0 / (M1 * M2 * d1);
                                const int parity = phi.sign() * psi.sign();
                                const bool trivial = M1 == 1 && M2 == 1;
                                for (int l = 1; l <= k - 1; ++l) {
                                    if ((l % 2 == 0 ? 1 : -1) != parity)
                                        continue;
                                    if (trivial && (l == 2 || l == k - 2))
                                        continue;
                                    out.push_back({phi, psi, l, d1, d2, d});
                                }
                            }
                }
            }
        }
    }
    return out;
}

FourierExpansion generator_expansion(const GeneratorQuintuple& g, int k, long B)
{
    return multiply(eis_expansion(g.first(), B), eis_expansion(g.second(k), B));
}

} // namespace eisprod
