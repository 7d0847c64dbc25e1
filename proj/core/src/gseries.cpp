#include "eisprod/gseries.hpp"

#include "eisprod/error.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace eisprod {

UnimodularMatrix::UnimodularMatrix(i64 a_, i64 b_, i64 c_, i64 d_) : a(a_), b(b_), c(c_), d(d_)
{
    require(static_cast<__int128>(a) * d - static_cast<__int128>(b) * c == 1, "matrix must have determinant 1");
}

UnimodularMatrix operator*(const UnimodularMatrix& x, const UnimodularMatrix& y)
{
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

CyclotomicNumber GSeriesCombination::nonholomorphic_multiplier() const
{
    if (weight != 2)
        return CyclotomicNumber();
    CyclotomicNumber s;
    for (const auto& t : terms)
        s += root_of_unity(t.root_order, static_cast<i64>(t.root_exp)) * t.coeff;
    return s;
}

void GSeriesCombination::canonicalize()
{
    u64 R = 1;
    for (const auto& t : terms)
        R = lcm_u(R, t.root_order);
    std::map<std::pair<u64, u64>, std::vector<Rational>> merged;
    for (const auto& t : terms) {
        auto& slot = merged[{t.v1, t.v2}];
        if (slot.empty())
            slot.assign(R, Rational(0));
        slot[t.root_exp * (R / t.root_order) % R] += t.coeff;
    }
    terms.clear();
    for (const auto& [v, slot] : merged)
        for (u64 e = 0; e < R; ++e)
            if (slot[e] != 0)
                terms.push_back({slot[e], R, e, v.first, v.second});
}

GSeriesCombination decompose(const EisLabel& label)
{
    validate(label);
    const DirichletCharacter& phi = label.phi;
    const DirichletCharacter psibar = label.psi.conj();
    const u64 M1 = phi.modulus(), M2 = label.psi.modulus(), M = M1 * M2;
    const u64 L = label.d * M;
    const u64 R = lcm_u(phi.order(), psibar.order());
    GSeriesCombination g;
    g.weight = label.l;
    g.level = L;
    // E_l^{phi,psi}|B_d = d^(l/2) M2^l / (G(psibar) L^l) sum phi(c0) psibar(d0) Ghat_L^{(d M2 c0, d0)}, L = d M.
    // The first lattice coordinate is scaled by M2; scaling it by M would give E(M1 z).
    const CyclotomicNumber inv_gauss = gauss_sum(label.psi) * Rational(label.psi.sign(), static_cast<long>(M2));
    const Rational scale = Rational(pow_int(Integer(static_cast<unsigned long>(M2)), static_cast<unsigned long>(label.l)))
                           / Rational(pow_int(Integer(static_cast<unsigned long>(L)), static_cast<unsigned long>(label.l)));
    g.normalizer = Surd::half_power(label.d, label.l) * Surd(inv_gauss * scale);
    for (u64 c0 = 0; c0 < M1; ++c0) {
        const int ec = phi.exponent_at(static_cast<i64>(c0));
        if (ec < 0)
            continue;
        for (u64 d0 = 0; d0 < L; ++d0) {
            const int ed = psibar.exponent_at(static_cast<i64>(d0));
            if (ed < 0)
                continue;
            const u64 e = (static_cast<u64>(ec) * (R / phi.order()) + static_cast<u64>(ed) * (R / psibar.order())) % R;
            g.terms.push_back({Rational(1), R, e, label.d * M2 * c0 % L, d0});
        }
    }
    return g;
}

GSeriesCombination decompose_e2_difference(u64 t)
{
    require(t > 1, "E2 difference needs t > 1");
    // E2 - E2|B_t = t^(-2) sum_{x, y mod t} (1 - t [x = 0]) Ghat_t^{(x, y)}
    GSeriesCombination g;
    g.weight = 2;
    g.level = t;
    g.normalizer = Surd(CyclotomicNumber(Rational(1, static_cast<long>(t * t))));
    for (u64 x = 0; x < t; ++x)
        for (u64 y = 0; y < t; ++y)
            g.terms.push_back({x == 0 ? Rational(1 - static_cast<long>(t)) : Rational(1), 1, 0, x, y});
    return g;
}

GSeriesCombination decompose(const EisBasisElement& e)
{
    if (e.e2_difference)
        return decompose_e2_difference(e.t);
    return decompose(EisLabel{e.phi, e.phi.conj(), e.k, e.t});
}

GSeriesCombination refine_level(const GSeriesCombination& g, u64 L2)
{
    require(L2 % g.level == 0, "refine_level: target must be a multiple of the level");
    const u64 L = g.level, s = L2 / L;
    const Rational f = make_rational(Integer(1), pow_int(Integer(static_cast<unsigned long>(s)), static_cast<unsigned long>(g.weight)));
    GSeriesCombination out = g;
    out.level = L2;
    out.terms.clear();
    for (const auto& t : g.terms)
        for (u64 i = 0; i < s; ++i)
            for (u64 j = 0; j < s; ++j)
                out.terms.push_back({t.coeff * f, t.root_order, t.root_exp, t.v1 + i * L, t.v2 + j * L});
    return out;
}

GSeriesCombination slash(const GSeriesCombination& g, const UnimodularMatrix& m)
{
    GSeriesCombination out = g;
    const i64 L = static_cast<i64>(g.level);
    const i64 a = mod_floor(m.a, L), b = mod_floor(m.b, L), c = mod_floor(m.c, L), d = mod_floor(m.d, L);
    for (auto& t : out.terms) {
        const i64 v1 = static_cast<i64>(t.v1), v2 = static_cast<i64>(t.v2);
        t.v1 = static_cast<u64>(mod_floor(static_cast<i64>((static_cast<__int128>(v1) * a + static_cast<__int128>(v2) * c) % L), L));
        t.v2 = static_cast<u64>(mod_floor(static_cast<i64>((static_cast<__int128>(v1) * b + static_cast<__int128>(v2) * d) % L), L));
    }
    std::sort(out.terms.begin(), out.terms.end(), [](const GSeriesTerm& x, const GSeriesTerm& y) {
        return std::tie(x.v1, x.v2, x.root_order, x.root_exp) < std::tie(y.v1, y.v2, y.root_order, y.root_exp);
    });
    return out;
}

FourierExpansion gseries_expansion(const GSeriesCombination& g, const Rational& height)
{
    require(g.weight >= 1, "G-series weight must be at least 1");
    require(height > 0, "expansion height must be positive");
    const u64 L = g.level;
    const int l = g.weight;
    const int sign = (l % 2 == 0) ? 1 : -1;

    u64 g0 = L;
    u64 R = L;
    Integer D = 1;
    std::map<u64, std::vector<std::size_t>> by_v1;
    for (std::size_t i = 0; i < g.terms.size(); ++i) {
        const auto& t = g.terms[i];
        g0 = gcd_u(g0, t.v1);
        R = lcm_u(R, t.root_order);
        mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), t.coeff.get_den_mpz_t());
        by_v1[t.v1].push_back(i);
    }
    const u64 W = L / g0;
    Rational hw = height * Rational(Integer(static_cast<unsigned long>(W)));
    Integer ceil_hw;
    mpz_cdiv_q(ceil_hw.get_mpz_t(), hw.get_num_mpz_t(), hw.get_den_mpz_t());
    const long P = static_cast<long>(ceil_hw.get_si()) - 1;
    require(P >= 0, "expansion height too small");

    std::vector<Integer> qD(g.terms.size());
    std::vector<u64> base_exp(g.terms.size());
    for (std::size_t i = 0; i < g.terms.size(); ++i) {
        const auto& t = g.terms[i];
        qD[i] = t.coeff.get_num() * (D / t.coeff.get_den());
        base_exp[i] = t.root_exp * (R / t.root_order) % R;
    }
    const u64 stepL = R / L;

    std::vector<CyclotomicNumber> coeffs;
    coeffs.reserve(static_cast<std::size_t>(P) + 1);

    // Constant term.
    CyclotomicNumber constant(Rational(0), R);
    {
        std::vector<Rational> btilde(L);
        for (u64 j = 0; j < L; ++j)
            btilde[j] = (l == 1 && j == 0) ? Rational(0)
                                           : bernoulli_polynomial(static_cast<unsigned>(l), make_rational(Integer(static_cast<unsigned long>(j)), Integer(static_cast<unsigned long>(L))));
        const Rational pre = Rational(-sign) * Rational(pow_int(Integer(static_cast<unsigned long>(L)), static_cast<unsigned long>(l - 1))) / Rational(l);
        std::map<u64, CyclotomicNumber> by_v2;
        for (std::size_t i = 0; i < g.terms.size(); ++i) {
            const auto& t = g.terms[i];
            const CyclotomicNumber root = root_of_unity(R, static_cast<i64>(base_exp[i]));
            if (t.v1 == 0) {
                auto it = by_v2.find(t.v2);
                if (it == by_v2.end()) {
                    std::vector<Rational> poly(L, Rational(0));
                    for (u64 j = 0; j < L; ++j)
                        poly[(L - t.v2 * j % L) % L] += btilde[j];
                    it = by_v2.emplace(t.v2, CyclotomicNumber::from_polynomial(L, poly) * pre).first;
                }
                constant += root * it->second * t.coeff;
            } else if (l == 1) {
                constant += root * (t.coeff * (Rational(1, 2) - make_rational(Integer(static_cast<unsigned long>(t.v1)), Integer(static_cast<unsigned long>(L)))));
            }
        }
    }
    coeffs.push_back(constant.embed(R));

    for (long np = 1; np <= P; ++np) {
        const u64 n = g0 * static_cast<u64>(np);
        IntPoly poly;
        for (u64 c : divisors(n)) {
            const u64 r = n / c;
            const u64 u = c % L, um = (L - u) % L;
            const auto pos = by_v1.find(u), neg = by_v1.find(um);
            if (pos == by_v1.end() && neg == by_v1.end())
                continue;
            if (poly.empty())
                poly.assign(R, Integer(0));
            const Integer rl = pow_int(Integer(static_cast<unsigned long>(r)), static_cast<unsigned long>(l - 1));
            const u64 rm = r % L;
            if (pos != by_v1.end())
                for (std::size_t i : pos->second) {
                    const u64 e = (base_exp[i] + (rm * g.terms[i].v2 % L) * stepL) % R;
                    poly[e] += qD[i] * rl;
                }
            if (neg != by_v1.end())
                for (std::size_t i : neg->second) {
                    const u64 e = (base_exp[i] + ((L - rm * g.terms[i].v2 % L) % L) * stepL) % R;
                    if (sign > 0)
                        poly[e] += qD[i] * rl;
                    else
                        poly[e] -= qD[i] * rl;
                }
        }
        if (poly.empty())
            coeffs.emplace_back(Rational(0), R);
        else
            coeffs.push_back(CyclotomicNumber::from_polynomial(R, std::move(poly), D));
    }
    return FourierExpansion(l, W, R, std::move(coeffs)).scaled(g.normalizer);
}

} // namespace eisprod
