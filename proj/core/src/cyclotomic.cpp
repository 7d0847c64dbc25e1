#include "eisprod/cyclotomic.hpp"

#include "eisprod/error.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace eisprod {

namespace {

IntPoly poly_exact_div(IntPoly num, const IntPoly& den)
{
    // den is monic up to sign of leading coefficient 1
    const std::size_t dn = den.size() - 1;
    IntPoly q(num.size() - dn);
    for (std::size_t i = num.size(); i-- > dn;) {
        const Integer c = num[i];
        q[i - dn] = c;
        if (c == 0)
            continue;
        for (std::size_t j = 0; j <= dn; ++j)
            num[i - dn + j] -= c * den[j];
    }
    for (std::size_t i = 0; i < dn; ++i)
        ensure(num[i] == 0, "cyclotomic polynomial division not exact");
    return q;
}

IntPoly substitute_power(const IntPoly& p, u64 k)
{
    IntPoly out((p.size() - 1) * k + 1);
    for (std::size_t i = 0; i < p.size(); ++i)
        out[i * k] = p[i];
    return out;
}

std::unique_ptr<CyclotomicFieldData> build_field(u64 m)
{
    u64 rad = 1;
    for (u64 p : prime_divisors(m))
        rad *= p;
    IntPoly phi{-1, 1};
    for (u64 p : prime_divisors(m))
        phi = poly_exact_div(substitute_power(phi, p), phi);
    if (m / rad > 1)
        phi = substitute_power(phi, m / rad);

    auto f = std::make_unique<CyclotomicFieldData>();
    f->order = m;
    f->degree = phi.size() - 1;
    ensure(f->degree == euler_phi(m), "cyclotomic degree mismatch");
    for (std::size_t j = 0; j < phi.size(); ++j) {
        ensure(phi[j].fits_slong_p(), "cyclotomic coefficient overflow");
        f->coefficients.push_back(phi[j].get_si());
        if (j < f->degree && phi[j] != 0)
            f->tail.emplace_back(j, phi[j].get_si());
    }
    return f;
}

void add_scaled(Integer& dst, const Integer& c, i64 a)
{
    if (a > 0)
        mpz_addmul_ui(dst.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(a));
    else
        mpz_submul_ui(dst.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-a));
}

} // namespace

const CyclotomicFieldData& cyclotomic_field(u64 m)
{
    require(m >= 1, "cyclotomic order must be positive");
    static std::mutex mu;
    static std::map<u64, std::unique_ptr<CyclotomicFieldData>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it == cache.end())
        it = cache.emplace(m, build_field(m)).first;
    return *it->second;
}

const std::vector<i64>& cyclotomic_polynomial(u64 m) { return cyclotomic_field(m).coefficients; }

void reduce_cyclotomic(IntPoly& poly, u64 m)
{
    const auto& f = cyclotomic_field(m);
    const std::size_t n = f.degree;
    if (poly.size() > m) {
        for (std::size_t i = m; i < poly.size(); ++i)
            poly[i % m] += poly[i];
        poly.resize(m);
    }
    for (std::size_t i = poly.size(); i-- > n;) {
        if (sgn(poly[i]) == 0)
            continue;
        const Integer c = poly[i];
        for (auto [j, a] : f.tail)
            add_scaled(poly[i - n + j], c, -a);
        poly[i] = 0;
    }
    poly.resize(n);
}

CyclotomicNumber::CyclotomicNumber() : order_(1), num_(1), den_(1) {}

CyclotomicNumber::CyclotomicNumber(long value) : order_(1), num_{Integer(value)}, den_(1) {}

CyclotomicNumber::CyclotomicNumber(const Rational& value, u64 order)
    : order_(order), num_(cyclotomic_field(order).degree), den_(value.get_den())
{
    num_[0] = value.get_num();
}

CyclotomicNumber CyclotomicNumber::from_coefficients(u64 order, const std::vector<Rational>& coeffs)
{
    require(coeffs.size() == cyclotomic_field(order).degree, "coefficient vector length must equal phi(order)");
    return from_polynomial(order, coeffs);
}

CyclotomicNumber CyclotomicNumber::from_polynomial(u64 order, IntPoly poly, Integer den)
{
    if (den == 0)
        fail(ErrorKind::division_by_zero, "zero denominator");
    reduce_cyclotomic(poly, order);
    CyclotomicNumber r;
    r.order_ = order;
    r.num_ = std::move(poly);
    r.den_ = std::move(den);
    if (r.den_ < 0) {
        r.den_ = -r.den_;
        for (auto& c : r.num_)
            c = -c;
    }
    r.normalize();
    return r;
}

CyclotomicNumber CyclotomicNumber::from_polynomial(u64 order, const std::vector<Rational>& poly)
{
    Integer den = 1;
    for (const auto& q : poly)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    IntPoly num(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i)
        num[i] = poly[i].get_num() * (den / poly[i].get_den());
    return from_polynomial(order, std::move(num), den);
}

void CyclotomicNumber::normalize()
{
    Integer g = den_;
    for (const auto& c : num_) {
        if (g == 1)
            break;
        if (sgn(c) != 0)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (is_zero()) {
        den_ = 1;
        return;
    }
    if (g != 1) {
        for (auto& c : num_)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

Rational CyclotomicNumber::coefficient(std::size_t i) const
{
    Rational q(num_.at(i), den_);
    q.canonicalize();
    return q;
}

std::vector<Rational> CyclotomicNumber::coefficients() const
{
    std::vector<Rational> out;
    out.reserve(num_.size());
    for (std::size_t i = 0; i < num_.size(); ++i)
        out.push_back(coefficient(i));
    return out;
}

bool CyclotomicNumber::is_zero() const
{
    return std::all_of(num_.begin(), num_.end(), [](const Integer& c) { return sgn(c) == 0; });
}

bool CyclotomicNumber::is_rational() const
{
    return std::all_of(num_.begin() + 1, num_.end(), [](const Integer& c) { return sgn(c) == 0; });
}

Rational CyclotomicNumber::to_rational() const
{
    require(is_rational(), "cyclotomic number is not rational");
    return coefficient(0);
}

CyclotomicNumber CyclotomicNumber::embed(u64 m) const
{
    require(m % order_ == 0, "embed: order does not divide target");
    if (m == order_)
        return *this;
    const u64 t = m / order_;
    IntPoly p((num_.size() - 1) * t + 1);
    for (std::size_t i = 0; i < num_.size(); ++i)
        p[i * t] = num_[i];
    return from_polynomial(m, std::move(p), den_);
}

CyclotomicNumber CyclotomicNumber::galois(i64 j) const
{
    require(gcd_u(static_cast<u64>(mod_floor(j, static_cast<i64>(order_))), order_) == 1 || order_ == 1,
            "galois: exponent not coprime to order");
    IntPoly p(order_);
    for (std::size_t i = 0; i < num_.size(); ++i)
        p[static_cast<std::size_t>(mod_floor(static_cast<i64>(i) * j, static_cast<i64>(order_)))] += num_[i];
    return from_polynomial(order_, std::move(p), den_);
}

CyclotomicNumber CyclotomicNumber::conjugate() const { return galois(-1); }

CyclotomicNumber CyclotomicNumber::operator-() const
{
    CyclotomicNumber r = *this;
    for (auto& c : r.num_)
        c = -c;
    return r;
}

namespace {

void align(CyclotomicNumber& a, CyclotomicNumber& b)
{
    if (a.order() == b.order())
        return;
    const u64 m = lcm_u(a.order(), b.order());
    a = a.embed(m);
    b = b.embed(m);
}

} // namespace

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o)
{
    CyclotomicNumber b = o;
    align(*this, b);
    if (den_ == b.den_) {
        for (std::size_t i = 0; i < num_.size(); ++i)
            num_[i] += b.num_[i];
    } else {
        for (std::size_t i = 0; i < num_.size(); ++i)
            num_[i] = num_[i] * b.den_ + b.num_[i] * den_;
        den_ *= b.den_;
    }
    normalize();
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) { return *this += -o; }

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o)
{
    if (o.order_ == 1 || o.is_rational()) {
        Rational q(o.num_[0], o.den_);
        q.canonicalize();
        return *this *= q;
    }
    CyclotomicNumber b = o;
    align(*this, b);
    IntPoly p = poly_multiply(num_, b.num_);
    Integer den = den_ * b.den_;
    *this = from_polynomial(order_, std::move(p), std::move(den));
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& q)
{
    for (auto& c : num_)
        c *= q.get_num();
    den_ *= q.get_den();
    normalize();
    return *this;
}

CyclotomicNumber CyclotomicNumber::inverse() const
{
    if (is_zero())
        fail(ErrorKind::division_by_zero, "inverse of zero cyclotomic number");
    if (is_rational()) {
        Rational q(den_, num_[0]);
        q.canonicalize();
        return CyclotomicNumber(q, order_);
    }
    // Solve (A * y = den * e_0) where column c of A is num * x^c reduced.
    const std::size_t n = num_.size();
    std::vector<IntPoly> cols;
    IntPoly cur = num_;
    for (std::size_t c = 0; c < n; ++c) {
        cols.push_back(cur);
        cur.insert(cur.begin(), Integer(0));
        reduce_cyclotomic(cur, order_);
    }
    // Fraction-free elimination on the augmented matrix [A | e_0].
    std::vector<IntPoly> m(n, IntPoly(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            m[r][c] = cols[c][r];
        m[r][n] = r == 0 ? 1 : 0;
    }
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && sgn(m[piv][k]) == 0)
            ++piv;
        ensure(piv < n, "singular multiplication matrix");
        std::swap(m[piv], m[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    std::vector<Rational> y(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational s = m[i][n];
        for (std::size_t j = i + 1; j < n; ++j)
            s -= m[i][j] * y[j];
        y[i] = s / m[i][i];
    }
    return CyclotomicNumber::from_polynomial(order_, y) * Rational(den_);
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& o) { return *this *= o.inverse(); }

CyclotomicNumber CyclotomicNumber::pow(long e) const
{
    if (e < 0)
        return inverse().pow(-e);
    CyclotomicNumber r(Rational(1), order_), base = *this;
    while (e) {
        if (e & 1)
            r *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return r;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b)
{
    if (a.order_ != b.order_) {
        const u64 m = lcm_u(a.order_, b.order_);
        return a.embed(m) == b.embed(m);
    }
    return a.den_ == b.den_ && a.num_ == b.num_;
}

std::optional<u64> CyclotomicNumber::reduce_mod(u64 p, u64 omega) const
{
    const u64 d = mpz_fdiv_ui(den_.get_mpz_t(), p);
    if (d == 0)
        return std::nullopt;
    u64 acc = 0;
    for (std::size_t i = num_.size(); i-- > 0;) {
        acc = mulmod(acc, omega, p);
        acc = (acc + mpz_fdiv_ui(num_[i].get_mpz_t(), p)) % p;
    }
    return mulmod(acc, powmod(d, p - 2, p), p);
}

std::string CyclotomicNumber::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (sgn(num_[i]) == 0)
            continue;
        Rational c = coefficient(i);
        const bool neg = c < 0;
        Rational a = abs(c);
        if (!first)
            os << (neg ? " - " : " + ");
        else if (neg)
            os << "-";
        if (i == 0)
            os << a.get_str();
        else {
            if (a != 1)
                os << a.get_str() << "*";
            os << "z" << order_;
            if (i > 1)
                os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

CyclotomicNumber root_of_unity(u64 m, i64 j)
{
    require(m >= 1, "root_of_unity: order must be positive");
    IntPoly p(static_cast<std::size_t>(mod_floor(j, static_cast<i64>(m))) + 1);
    p.back() = 1;
    return CyclotomicNumber::from_polynomial(m, std::move(p));
}

CyclotomicNumber sqrt_cyclotomic(u64 r)
{
    require(r >= 1 && squarefree_split(r).square_root == 1, "sqrt_cyclotomic: radicand must be squarefree");
    CyclotomicNumber acc(1);
    for (u64 p : prime_divisors(r)) {
        if (p == 2) {
            acc *= root_of_unity(8, 1) + root_of_unity(8, 7);
            continue;
        }
        IntPoly g(p);
        for (u64 a = 1; a < p; ++a)
            g[a] = powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
        CyclotomicNumber gauss = CyclotomicNumber::from_polynomial(p, std::move(g));
        if (p % 4 == 1)
            acc *= gauss;
        else
            acc *= gauss * root_of_unity(4, 3);
    }
    return acc;
}

} // namespace eisprod
