#include "eisprod/eisenstein.hpp"

#include "eisprod/error.hpp"

namespace eisprod {

void validate(const EisLabel& label)
{
    require(label.l >= 1, "Eisenstein weight must be at least 1");
    require(label.d >= 1, "lift parameter must be positive");
    require(label.phi.is_primitive() && label.psi.is_primitive(), "Eisenstein characters must be primitive");
    const int parity = (label.l % 2 == 0) ? 1 : -1;
    require(label.phi.sign() * label.psi.sign() == parity, "character parity does not match the weight");
    require(!(label.phi.is_trivial() && label.psi.is_trivial() && label.l == 2),
            "E_2^{1,1} is not a modular form");
}

std::string to_string(const EisLabel& label)
{
    std::string s = "E" + std::to_string(label.l) + "[" + character_ref(label.phi) + "," + character_ref(label.psi) + "]";
    if (label.d != 1)
        s += "|B" + std::to_string(label.d);
    return s;
}

CyclotomicNumber sigma_divisor(u64 n, const DirichletCharacter& phi, const DirichletCharacter& psi, int l)
{
    require(n >= 1, "sigma_divisor: n must be positive");
    require(l >= 1, "sigma_divisor: l must be positive");
    CyclotomicNumber s;
    for (u64 c : divisors(n)) {
        const CyclotomicNumber a = phi.evaluate(static_cast<i64>(n / c)) * psi.evaluate(static_cast<i64>(c));
        if (!a.is_zero())
            s += a * Rational(pow_int(Integer(static_cast<unsigned long>(c)), static_cast<unsigned>(l - 1)));
    }
    return s;
}

CyclotomicNumber eis_constant_term(const DirichletCharacter& phi, const DirichletCharacter& psi, int l)
{
    if (phi.modulus() == 1)
        return l_value_nonpositive(psi, static_cast<unsigned>(l));
    if (psi.modulus() == 1 && l == 1)
        return l_value_nonpositive(phi, 1);
    return CyclotomicNumber();
}

namespace {

// e_l + 2 sum_{n <= B} sigma_{l-1,phi,psi}(n) q^n, accumulated in the group ring Z[C_m].
FourierExpansion eis_base(const DirichletCharacter& phi, const DirichletCharacter& psi, int l, long B)
{
    const u64 m = lcm_u(phi.order(), psi.order());
    const u64 sphi = m / phi.order(), spsi = m / psi.order();
    const std::size_t len = static_cast<std::size_t>(B) + 1;
    std::vector<IntPoly> acc(len);
    for (u64 c = 1; c < len; ++c) {
        const int ec = psi.exponent_at(static_cast<i64>(c));
        if (ec < 0)
            continue;
        const Integer w = pow_int(Integer(static_cast<unsigned long>(c)), static_cast<unsigned>(l - 1));
        for (u64 j = 1, n = c; n < len; ++j, n += c) {
            const int ej = phi.exponent_at(static_cast<i64>(j));
            if (ej < 0)
                continue;
            auto& poly = acc[n];
            if (poly.empty())
                poly.assign(m, Integer(0));
            poly[(static_cast<u64>(ej) * sphi + static_cast<u64>(ec) * spsi) % m] += w;
        }
    }
    std::vector<CyclotomicNumber> coeffs;
    coeffs.reserve(len);
    coeffs.push_back(eis_constant_term(phi, psi, l).embed(m));
    for (std::size_t n = 1; n < len; ++n) {
        if (acc[n].empty()) {
            coeffs.emplace_back(Rational(0), m);
            continue;
        }
        for (auto& z : acc[n])
            z *= 2;
        coeffs.push_back(CyclotomicNumber::from_polynomial(m, std::move(acc[n])));
    }
    return FourierExpansion(l, 1, m, std::move(coeffs));
}

FourierExpansion lift(const FourierExpansion& base, u64 d, long B)
{
    if (d == 1)
        return base.truncate(B);
    return apply_B_d(base, d).truncate(B);
}

} // namespace

FourierExpansion eis_expansion(const EisLabel& label, long B)
{
    validate(label);
    require(B >= 0, "precision must be nonnegative");
    return lift(eis_base(label.phi, label.psi, label.l, B / static_cast<long>(label.d)), label.d, B);
}

FourierExpansion e2_series(long B)
{
    require(B >= 0, "precision must be nonnegative");
    return eis_base(DirichletCharacter(), DirichletCharacter(), 2, B);
}

FourierExpansion eis_imprimitive(const DirichletCharacter& alpha, u64 N, int l, long B)
{
    const u64 M = alpha.modulus();
    require(alpha.is_primitive(), "eis_imprimitive: alpha must be primitive");
    require(N % M == 0, "eis_imprimitive: modulus must divide the level");
    require(alpha.sign() == ((l % 2 == 0) ? 1 : -1), "eis_imprimitive: parity of alpha does not match the weight");
    const DirichletCharacter abar = alpha.conj();
    const u64 R = N / coprime_part_complement(N, M);
    std::vector<ScaledExpansion> terms;
    for (u64 e : divisors(R)) {
        const int mu = moebius(e);
        if (mu == 0)
            continue;
        const u64 t = N / (M * e);
        const FourierExpansion base = eis_base(DirichletCharacter(), abar, l, B / static_cast<long>(t));
        const FourierExpansion dilated = lift(base, t, B).scaled(Surd::half_power(t, l));
        terms.push_back({Surd(alpha.evaluate(static_cast<i64>(e)) * Rational(mu)), dilated});
    }
    return linear_combine(terms);
}

std::string EisBasisElement::id() const
{
    if (e2_difference)
        return "E2-E2|B" + std::to_string(t);
    return "E" + std::to_string(k) + "[" + character_ref(phi) + "]|B" + std::to_string(t);
}

EisBasisElement parse_eis_basis_id(const std::string& id)
{
    EisBasisElement e;
    const auto bar = id.rfind("|B");
    if (bar == std::string::npos || id.empty() || id[0] != 'E')
        fail(ErrorKind::parse, "malformed Eisenstein basis id '" + id + "'");
    try {
        std::size_t used = 0;
        e.t = std::stoull(id.substr(bar + 2), &used);
        if (used != id.size() - bar - 2)
            throw std::invalid_argument(id);
        const std::string head = id.substr(0, bar);
        if (head == "E2-E2") {
            e.k = 2;
            e.e2_difference = true;
        } else {
            const auto lb = head.find('['), rb = head.find(']');
            if (lb == std::string::npos || rb != head.size() - 1)
                throw std::invalid_argument(id);
            e.k = std::stoi(head.substr(1, lb - 1));
            e.phi = parse_character_ref(head.substr(lb + 1, rb - lb - 1));
        }
    } catch (const std::logic_error&) {
        fail(ErrorKind::parse, "malformed Eisenstein basis id '" + id + "'");
    }
    require(e.t >= 1, "basis lift must be positive");
    return e;
}

FourierExpansion eis_basis_expansion(const EisBasisElement& e, long B)
{
    if (e.e2_difference) {
        require(e.t > 1, "E2 difference needs t > 1");
        return subtract(e2_series(B), lift(e2_series(B / static_cast<long>(e.t)), e.t, B));
    }
    return eis_expansion(EisLabel{e.phi, e.phi.conj(), e.k, e.t}, B);
}

std::vector<EisBasisElement> eisenstein_space_elements(u64 N, int k)
{
    require(k >= 2 && k % 2 == 0, "Eisenstein basis needs an even weight >= 2");
    require(N >= 1, "level must be positive");
    std::vector<EisBasisElement> out;
    for (u64 M1 : divisors(N)) {
        if (N % (M1 * M1) != 0)
            continue;
        for (const auto& phi : enumerate_primitive(M1, Parity::any)) {
            for (u64 t : divisors(N / (M1 * M1))) {
                if (k == 2 && M1 == 1) {
                    if (t > 1)
                        out.push_back({phi, 2, t, true});
                } else {
                    out.push_back({phi, k, t, false});
                }
            }
        }
    }
    return out;
}

std::vector<FourierExpansion> eisenstein_space_basis(u64 N, int k, long B)
{
    std::vector<FourierExpansion> out;
    for (const auto& e : eisenstein_space_elements(N, k))
        out.push_back(eis_basis_expansion(e, B));
    return out;
}

} // namespace eisprod
