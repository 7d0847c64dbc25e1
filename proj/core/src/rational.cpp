#include "eisprod/rational.hpp"

#include "eisprod/error.hpp"

#include <cctype>
#include <deque>
#include <mutex>

namespace eisprod {

const char* error_kind_name(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::division_by_zero: return "division_by_zero";
    case ErrorKind::precision: return "precision";
    case ErrorKind::parse: return "parse";
    case ErrorKind::not_eigenform: return "not_eigenform";
    case ErrorKind::unverified: return "unverified";
    case ErrorKind::internal: return "internal";
    }
    return "unknown";
}

static bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    if (!body.empty() && body.front() == '-')
        body.remove_prefix(1);
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        fail(ErrorKind::parse, "malformed rational '" + std::string(text) + "'");
    Integer d(std::string(den), 10);
    if (d == 0)
        fail(ErrorKind::division_by_zero, "zero denominator in '" + std::string(text) + "'");
    Rational q(Integer(std::string(num), 10), d);
    q.canonicalize();
    if (text.front() == '-')
        q = -q;
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Integer binomial(unsigned n, unsigned k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

const Rational& bernoulli_number(unsigned k)
{
    static std::mutex mu;
    static std::deque<Rational> table{Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (table.size() <= k) {
        const unsigned n = static_cast<unsigned>(table.size());
        Rational s = 0;
        for (unsigned j = 0; j < n; ++j)
            s += Rational(binomial(n + 1, j)) * table[j];
        Rational b = -s / Rational(n + 1);
        b.canonicalize();
        table.push_back(b);
    }
    return table[k];
}

Rational bernoulli_polynomial(unsigned k, const Rational& x)
{
    Rational acc = 0;
    for (unsigned j = 0; j <= k; ++j) {
        acc = acc * x + Rational(binomial(k, j)) * bernoulli_number(j);
    }
    acc.canonicalize();
    return acc;
}

Integer pow_int(const Integer& base, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational pow_rat(const Rational& base, long e)
{
    if (e < 0) {
        if (base == 0)
            fail(ErrorKind::division_by_zero, "pow_rat: zero to negative power");
        return pow_rat(1 / base, -e);
    }
    Rational r(pow_int(base.get_num(), static_cast<unsigned long>(e)), pow_int(base.get_den(), static_cast<unsigned long>(e)));
    r.canonicalize();
    return r;
}

Rational make_rational(const Integer& p, const Integer& q)
{
    if (q == 0)
        fail(ErrorKind::division_by_zero, "zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

} // namespace eisprod
