#include "eisprod/qexp.hpp"

#include "eisprod/error.hpp"
#include "eisprod/kronecker.hpp"

#include <algorithm>

namespace eisprod {

FourierExpansion::FourierExpansion(int weight, u64 width, u64 field_order, std::vector<CyclotomicNumber> coeffs, u64 radicand)
    : weight_(weight), width_(width), field_order_(field_order), radicand_(radicand), coeffs_(std::move(coeffs))
{
    require(width >= 1, "expansion width must be positive");
    require(!coeffs_.empty(), "expansion needs at least the constant coefficient");
    require(radicand >= 1 && squarefree_split(radicand).square_root == 1, "expansion radicand must be squarefree");
    for (auto& c : coeffs_) {
        if (c.order() != field_order_)
            c = c.embed(field_order_);
    }
}

FourierExpansion FourierExpansion::zero(int weight, u64 width, long precision, u64 field_order)
{
    require(precision >= 0, "precision must be nonnegative");
    return FourierExpansion(weight, width, field_order,
                            std::vector<CyclotomicNumber>(static_cast<std::size_t>(precision) + 1, CyclotomicNumber(Rational(0), field_order)));
}

bool FourierExpansion::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const CyclotomicNumber& c) { return c.is_zero(); });
}

FourierExpansion FourierExpansion::with_field(u64 m) const
{
    if (m == field_order_)
        return *this;
    FourierExpansion r = *this;
    r.field_order_ = m;
    for (auto& c : r.coeffs_)
        c = c.embed(m);
    return r;
}

std::vector<CyclotomicNumber> FourierExpansion::true_coefficients() const
{
    if (radicand_ == 1)
        return coeffs_;
    const CyclotomicNumber s = sqrt_cyclotomic(radicand_);
    const u64 m = lcm_u(field_order_, s.order());
    std::vector<CyclotomicNumber> out;
    out.reserve(coeffs_.size());
    const CyclotomicNumber se = s.embed(m);
    for (const auto& c : coeffs_)
        out.push_back(c.embed(m) * se);
    return out;
}

FourierExpansion FourierExpansion::materialized() const
{
    if (radicand_ == 1)
        return *this;
    const CyclotomicNumber s = sqrt_cyclotomic(radicand_);
    return FourierExpansion(weight_, width_, lcm_u(field_order_, s.order()), true_coefficients());
}

FourierExpansion FourierExpansion::refine_width(u64 W) const
{
    require(W % width_ == 0, "refine_width: target must be a multiple of the width");
    if (W == width_)
        return *this;
    const u64 t = W / width_;
    const std::size_t len = static_cast<std::size_t>(t * static_cast<u64>(precision() + 1));
    std::vector<CyclotomicNumber> c(len, CyclotomicNumber(Rational(0), field_order_));
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        c[n * t] = coeffs_[n];
    return FourierExpansion(weight_, W, field_order_, std::move(c), radicand_);
}

FourierExpansion FourierExpansion::truncate(long precision) const
{
    require(precision >= 0 && precision <= this->precision(), "truncate: precision out of range");
    FourierExpansion r = *this;
    r.coeffs_.resize(static_cast<std::size_t>(precision) + 1);
    return r;
}

FourierExpansion FourierExpansion::scaled(const Surd& s) const
{
    Surd total = s * Surd(CyclotomicNumber(1), radicand_);
    const u64 m = lcm_u(field_order_, total.value.order());
    std::vector<CyclotomicNumber> c;
    c.reserve(coeffs_.size());
    const CyclotomicNumber v = total.value.embed(m);
    for (const auto& x : coeffs_)
        c.push_back(x.embed(m) * v);
    return FourierExpansion(weight_, width_, m, std::move(c), total.radicand);
}

bool operator==(const FourierExpansion& a, const FourierExpansion& b)
{
    if (a.weight_ != b.weight_ || a.width_ != b.width_ || a.precision() != b.precision())
        return false;
    if (a.radicand_ == b.radicand_)
        return a.coeffs_ == b.coeffs_;
    return a.true_coefficients() == b.true_coefficients();
}

FourierExpansion linear_combine(const std::vector<ScaledExpansion>& terms)
{
    require(!terms.empty(), "linear_combine: no terms");
    const int k = terms.front().series.weight();
    u64 W = 1;
    for (const auto& t : terms) {
        if (t.series.weight() != k)
            fail(ErrorKind::domain, "linear_combine: mixed weights");
        W = lcm_u(W, t.series.width());
    }
    std::vector<FourierExpansion> parts;
    for (const auto& t : terms)
        parts.push_back(t.series.refine_width(W).scaled(t.scalar));
    long B = parts.front().precision();
    u64 r = parts.front().radicand();
    bool same_radicand = true;
    for (const auto& p : parts) {
        B = std::min(B, p.precision());
        same_radicand = same_radicand && p.radicand() == r;
    }
    if (!same_radicand) {
        for (auto& p : parts)
            p = p.materialized();
        r = 1;
    }
    u64 m = 1;
    for (const auto& p : parts)
        m = lcm_u(m, p.field_order());
    std::vector<CyclotomicNumber> acc(static_cast<std::size_t>(B) + 1, CyclotomicNumber(Rational(0), m));
    for (const auto& p : parts)
        for (long n = 0; n <= B; ++n)
            acc[static_cast<std::size_t>(n)] += p[static_cast<std::size_t>(n)];
    return FourierExpansion(k, W, m, std::move(acc), r);
}

FourierExpansion add(const FourierExpansion& f, const FourierExpansion& g)
{
    return linear_combine({{Surd(CyclotomicNumber(1)), f}, {Surd(CyclotomicNumber(1)), g}});
}

FourierExpansion subtract(const FourierExpansion& f, const FourierExpansion& g)
{
    return linear_combine({{Surd(CyclotomicNumber(1)), f}, {Surd(CyclotomicNumber(-1)), g}});
}

namespace {

struct IntegerSeries {
    Integer den = 1;
    std::vector<IntPoly> polys;
};

IntegerSeries integerize(const FourierExpansion& f, std::size_t terms)
{
    IntegerSeries s;
    const std::size_t len = std::min(terms, f.coeffs().size());
    for (std::size_t n = 0; n < len; ++n)
        mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), f[n].denominator().get_mpz_t());
    s.polys.reserve(len);
    for (std::size_t n = 0; n < len; ++n) {
        IntPoly p = f[n].numerators();
        const Integer scale = s.den / f[n].denominator();
        if (scale != 1)
            for (auto& z : p)
                z *= scale;
        s.polys.push_back(std::move(p));
    }
    return s;
}

} // namespace

FourierExpansion multiply(const FourierExpansion& f0, const FourierExpansion& g0)
{
    const u64 W = lcm_u(f0.width(), g0.width());
    const u64 m = lcm_u(f0.field_order(), g0.field_order());
    FourierExpansion f = f0.refine_width(W).with_field(m), g = g0.refine_width(W).with_field(m);
    const long B = std::min(f.precision(), g.precision());
    const std::size_t terms = static_cast<std::size_t>(B) + 1;
    const std::size_t n = cyclotomic_field(m).degree;

    IntegerSeries a = integerize(f, terms), b = integerize(g, terms);
    std::vector<IntPoly> prod = series_poly_multiply(a.polys, b.polys, n, terms);
    const Integer den = a.den * b.den;

    // sqrt(r1) sqrt(r2) = s sqrt(r)
    const u64 gr = gcd_u(f.radicand(), g.radicand());
    const u64 r = (f.radicand() / gr) * (g.radicand() / gr);
    std::vector<CyclotomicNumber> c;
    c.reserve(terms);
    for (auto& p : prod) {
        CyclotomicNumber x = CyclotomicNumber::from_polynomial(m, std::move(p), den);
        if (gr != 1)
            x *= Rational(Integer(static_cast<unsigned long>(gr)));
        c.push_back(std::move(x));
    }
    return FourierExpansion(f.weight() + g.weight(), W, m, std::move(c), r);
}

FourierExpansion apply_B_d(const FourierExpansion& f, u64 d)
{
    require(d >= 1, "apply_B_d: d must be positive");
    if (d == 1)
        return f;
    // f|B_d = d^(k/2) f(dz); known through exponent d(B+1)-1.
    const std::size_t len = static_cast<std::size_t>(d * static_cast<u64>(f.precision() + 1));
    std::vector<CyclotomicNumber> c(len, CyclotomicNumber(Rational(0), f.field_order()));
    for (std::size_t n = 0; n < f.coeffs().size(); ++n)
        c[n * d] = f[n];
    FourierExpansion g(f.weight(), f.width(), f.field_order(), std::move(c), f.radicand());
    return g.scaled(Surd::half_power(d, f.weight()));
}

FourierExpansion apply_U_p(const FourierExpansion& f, u64 p)
{
    require(f.width() == 1, "apply_U_p: expansion must have width 1");
    require(is_prime(p), "apply_U_p: p must be prime");
    // p^(k/2-1) sum_j f|_k (1 j; 0 p) = p^(-1) sum_j f((z+j)/p) = sum_n a_(pn) q^n
    const long B = f.precision() / static_cast<long>(p);
    std::vector<CyclotomicNumber> c;
    for (long n = 0; n <= B; ++n)
        c.push_back(f[static_cast<std::size_t>(n) * p]);
    return FourierExpansion(f.weight(), 1, f.field_order(), std::move(c), f.radicand());
}

FourierExpansion twist(const FourierExpansion& f, const DirichletCharacter& alpha)
{
    require(f.width() == 1, "twist: expansion must have width 1");
    const u64 m = lcm_u(f.field_order(), alpha.order());
    std::vector<CyclotomicNumber> c;
    c.reserve(f.coeffs().size());
    for (std::size_t n = 0; n < f.coeffs().size(); ++n)
        c.push_back(f[n].embed(m) * alpha.evaluate(static_cast<i64>(n)).embed(m));
    return FourierExpansion(f.weight(), 1, m, std::move(c), f.radicand());
}

u64 gamma0_index(u64 N)
{
    u64 mu = N;
    for (u64 p : prime_divisors(N))
        mu = mu / p * (p + 1);
    return mu;
}

long sturm_bound(u64 N, int k)
{
    require(N >= 1 && k >= 1, "sturm_bound: bad arguments");
    return static_cast<long>(static_cast<u64>(k) * gamma0_index(N) / 12);
}

} // namespace eisprod
