#include "eisprod/cusp.hpp"

#include "eisprod/error.hpp"

#include <algorithm>

namespace eisprod {

TriangularFactorization factor_matrix(const IntegerMatrix& A)
{
    const i64 D = A.det();
    require(D > 0, "factor_matrix: determinant must be positive");
    const Bezout bz = ext_gcd(A.a, A.c);
    const i64 g = bz.g < 0 ? -bz.g : bz.g;
    const i64 p = A.a / g, r = A.c / g;
    const Bezout u = ext_gcd(p, r);
    const i64 x = u.g < 0 ? -u.x : u.x, y = u.g < 0 ? -u.y : u.y;
    TriangularFactorization f;
    f.gamma = UnimodularMatrix(p, -y, r, x);
    f.a = g;
    f.d = D / g;
    const i64 b = x * A.b + y * A.d;
    const i64 j = (b - mod_floor(b, f.d)) / f.d;
    f.b = b - j * f.d;
    f.gamma = f.gamma * UnimodularMatrix::T(j);
    return f;
}

FourierExpansion apply_upper_triangular(const FourierExpansion& f, i64 a, i64 b, i64 d)
{
    require(a > 0 && d > 0, "triangular factor must have positive diagonal");
    const u64 w = f.width() * static_cast<u64>(d);
    const u64 m = lcm_u(f.field_order(), w);
    const std::size_t len = static_cast<std::size_t>(a) * static_cast<std::size_t>(f.precision() + 1);
    std::vector<CyclotomicNumber> c(len, CyclotomicNumber(Rational(0), m));
    const i64 bm = mod_floor(b, static_cast<i64>(w));
    for (std::size_t n = 0; n < f.coeffs().size(); ++n) {
        if (f[n].is_zero())
            continue;
        const i64 e = static_cast<i64>((static_cast<unsigned __int128>(n) * static_cast<u64>(bm)) % w);
        c[n * static_cast<std::size_t>(a)] = f[n].embed(m) * root_of_unity(w, e).embed(m);
    }
    FourierExpansion g(f.weight(), w, m, std::move(c), f.radicand());
    return g.scaled(Surd::half_power(static_cast<u64>(a), f.weight()) * inverse(Surd::half_power(static_cast<u64>(d), f.weight())));
}

void FormExpression::add_product(const Surd& c, const std::vector<EisLabel>& labels)
{
    int k = 0;
    ProductTerm t{c, {}};
    for (const auto& l : labels) {
        k += l.l;
        t.factors.push_back(decompose(l));
    }
    require(terms.empty() || k == weight, "FormExpression: mixed weights");
    weight = k;
    terms.push_back(std::move(t));
}

void FormExpression::add_eisenstein(const Surd& c, const EisBasisElement& e)
{
    require(terms.empty() || e.k == weight, "FormExpression: mixed weights");
    weight = e.k;
    terms.push_back({c, {decompose(e)}});
}

FourierExpansion slash_expand(const FormExpression& f, const UnimodularMatrix& gamma, const Rational& height)
{
    if (f.terms.empty()) {
        Integer ch;
        mpz_cdiv_q(ch.get_mpz_t(), height.get_num_mpz_t(), height.get_den_mpz_t());
        return FourierExpansion::zero(f.weight, 1, static_cast<long>(ch.get_si()) - 1);
    }
    std::vector<ScaledExpansion> parts;
    for (const auto& t : f.terms) {
        ensure(!t.factors.empty(), "product term without factors");
        for (const auto& g : t.factors)
            ensure(g.nonholomorphic_multiplier().is_zero(), "nonholomorphic correction does not cancel");
        FourierExpansion prod = gseries_expansion(slash(t.factors.front(), gamma), height);
        for (std::size_t i = 1; i < t.factors.size(); ++i)
            prod = multiply(prod, gseries_expansion(slash(t.factors[i], gamma), height));
        parts.push_back({t.coeff, std::move(prod)});
    }
    return linear_combine(parts);
}

FourierExpansion to_width(const FourierExpansion& f, u64 w)
{
    require(w >= 1, "width must be positive");
    if (f.width() == w)
        return f;
    const FourierExpansion r = f.refine_width(lcm_u(f.width(), w));
    const u64 s = r.width() / w;
    std::vector<CyclotomicNumber> c;
    for (std::size_t n = 0; n < r.coeffs().size(); ++n) {
        if (n % s == 0)
            c.push_back(r[n]);
        else
            ensure(r[n].is_zero(), "expansion is not a series in q_" + std::to_string(w));
    }
    return FourierExpansion(f.weight(), w, f.field_order(), std::move(c), f.radicand());
}

u64 minimal_width(const FourierExpansion& f)
{
    const u64 w = f.width();
    for (u64 v : divisors(w)) {
        const u64 s = w / v;
        bool ok = true;
        for (std::size_t n = 0; n < f.coeffs().size() && ok; ++n)
            ok = n % s == 0 || f[n].is_zero();
        if (ok)
            return v;
    }
    return w;
}

u64 cusp_width(u64 N, u64 c)
{
    require(N >= 1, "level must be positive");
    const u64 cm = c % N;
    const u64 sq = static_cast<u64>((static_cast<unsigned __int128>(cm) * cm) % N);
    return N / gcd_u(sq, N);
}

CuspExpansion expansion_at_cusp(const FormExpression& f, u64 N, const UnimodularMatrix& gamma, long B)
{
    require(B >= 0, "precision must be nonnegative");
    CuspExpansion out;
    out.gamma = gamma;
    const i64 c = gamma.c < 0 ? -gamma.c : gamma.c;
    out.infinite = (gamma.c == 0);
    if (!out.infinite)
        out.cusp = make_rational(Integer(static_cast<long>(gamma.a)), Integer(static_cast<long>(gamma.c)));
    out.width = cusp_width(N, static_cast<u64>(c));
    const Rational height = make_rational(Integer(B + 1), Integer(static_cast<unsigned long>(out.width)));
    out.expansion = to_width(slash_expand(f, gamma, height), out.width).truncate(B);
    out.minimal_width = minimal_width(out.expansion);
    return out;
}

IntegerMatrix al_matrix(u64 N, const std::set<u64>& S)
{
    u64 NS = 1;
    for (u64 p : S) {
        require(is_prime(p) && N % p == 0, "Atkin-Lehner set must consist of primes dividing the level");
        NS *= coprime_part_complement(N, p);
    }
    const u64 NSbar = N / NS;
    const Bezout bz = ext_gcd(static_cast<i64>(NS), static_cast<i64>(NSbar));
    ensure(bz.g == 1 || bz.g == -1, "N_S and N/N_S must be coprime");
    const i64 w = bz.x * bz.g, z = -bz.y * bz.g;
    IntegerMatrix A{static_cast<i64>(NS), 1, static_cast<i64>(N) * z, static_cast<i64>(NS) * w};
    ensure(A.det() == static_cast<i64>(NS), "Atkin-Lehner matrix has the wrong determinant");
    return A;
}

FourierExpansion slash_by_matrix(const FormExpression& f, const IntegerMatrix& A, long B)
{
    require(B >= 0, "precision must be nonnegative");
    const TriangularFactorization fac = factor_matrix(A);
    const Rational height = make_rational(Integer(B + 1) * Integer(fac.d), Integer(fac.a));
    const FourierExpansion e = slash_expand(f, fac.gamma, height);
    return apply_upper_triangular(e, fac.a, fac.b, fac.d);
}

FourierExpansion al_image(const FormExpression& f, u64 N, const std::set<u64>& S, long B)
{
    return to_width(slash_by_matrix(f, al_matrix(N, S), B), 1).truncate(B);
}

std::optional<CyclotomicNumber> proportionality(const FourierExpansion& g, const FourierExpansion& f)
{
    const long B = std::min(g.precision(), f.precision());
    const auto gc = g.true_coefficients(), fc = f.true_coefficients();
    std::optional<CyclotomicNumber> lambda;
    for (long n = 0; n <= B; ++n) {
        const auto i = static_cast<std::size_t>(n);
        if (fc[i].is_zero())
            continue;
        lambda = gc[i] / fc[i];
        break;
    }
    if (!lambda)
        return std::nullopt;
    for (long n = 0; n <= B; ++n) {
        const auto i = static_cast<std::size_t>(n);
        if (gc[i] != *lambda * fc[i])
            return std::nullopt;
    }
    return lambda;
}

CyclotomicNumber al_eigenvalue(const FormExpression& f, u64 N, const std::set<u64>& S, long B)
{
    const FourierExpansion at_inf = to_width(slash_expand(f, UnimodularMatrix::identity(), Rational(B + 1)), 1).truncate(B);
    const FourierExpansion image = al_image(f, N, S, B);
    const auto lambda = proportionality(image, at_inf);
    if (!lambda)
        fail(ErrorKind::not_eigenform, "not an eigenform at S");
    return *lambda;
}

} // namespace eisprod
