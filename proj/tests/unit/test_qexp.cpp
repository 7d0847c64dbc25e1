#include "doctest.h"

#include "support.hpp"

#include "eisprod/error.hpp"
#include "eisprod/qexp.hpp"

#include <random>

using namespace eisprod;

namespace {

CyclotomicNumber random_cyclotomic(std::mt19937_64& rng, u64 m, int bound)
{
    const std::size_t n = cyclotomic_field(m).degree;
    std::vector<Rational> c(n);
    for (auto& q : c)
        q = make_rational(Integer(static_cast<long>(rng() % (2 * bound + 1)) - bound), Integer(static_cast<long>(rng() % 3 + 1)));
    return CyclotomicNumber::from_coefficients(m, c);
}

FourierExpansion random_series(std::mt19937_64& rng, int k, u64 w, u64 m, long B)
{
    std::vector<CyclotomicNumber> c;
    for (long n = 0; n <= B; ++n)
        c.push_back(random_cyclotomic(rng, m, 5));
    return FourierExpansion(k, w, m, c);
}

FourierExpansion naive_product(const FourierExpansion& f, const FourierExpansion& g)
{
    const long B = std::min(f.precision(), g.precision());
    std::vector<CyclotomicNumber> c(static_cast<std::size_t>(B) + 1);
    for (long i = 0; i <= B; ++i)
        for (long j = 0; i + j <= B; ++j)
            c[static_cast<std::size_t>(i + j)] += f[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(j)];
    return FourierExpansion(f.weight() + g.weight(), f.width(), lcm_u(f.field_order(), g.field_order()), c);
}

Surd one() { return Surd(CyclotomicNumber(1)); }

} // namespace

TEST_SUITE("qexp") {

TEST_CASE("fixture loading")
{
    auto f = load_fixture("f11");
    CHECK(f.weight() == 2);
    CHECK(f.precision() == 150);
    CHECK(f[2] == CyclotomicNumber(-2));
    auto d = load_fixture("delta");
    CHECK(d[2] == CyclotomicNumber(-24));
    CHECK(d[3] == CyclotomicNumber(252));
}

TEST_CASE("ring axioms on random series")
{
    std::mt19937_64 rng(7);
    for (u64 m : {1, 3, 8, 9, 12}) {
        auto f = random_series(rng, 2, 1, m, 12), g = random_series(rng, 4, 1, m, 12), h = random_series(rng, 4, 1, 3, 12);
        CHECK(multiply(f, g) == multiply(g, f));
        CHECK(multiply(multiply(f, g), h) == multiply(f, multiply(g, h)));
        CHECK(multiply(f, add(g, h)) == add(multiply(f, g), multiply(f, h)));
        CHECK(subtract(g, g).is_zero());
        CHECK(multiply(f, g) == naive_product(f, g));
    }
}

TEST_CASE("large products use the packed path and agree with the naive product")
{
    std::mt19937_64 rng(11);
    auto f = random_series(rng, 2, 1, 9, 80), g = random_series(rng, 2, 1, 9, 80);
    CHECK(multiply(f, g) == naive_product(f, g));
}

TEST_CASE("precision propagation")
{
    std::mt19937_64 rng(3);
    auto f = random_series(rng, 2, 1, 1, 10), g = random_series(rng, 2, 1, 1, 6);
    CHECK(multiply(f, g).precision() == 6);
    CHECK(add(f, g).precision() == 6);
    CHECK(apply_B_d(f, 3).precision() == 32);
    CHECK(apply_U_p(f, 3).precision() == 3);
    auto h = random_series(rng, 2, 2, 1, 10);
    auto s = add(f, h);
    CHECK(s.width() == 2);
    CHECK(s.precision() == 10);
    CHECK(f.refine_width(4).precision() == 43);
}

TEST_CASE("mixed weights are rejected")
{
    std::mt19937_64 rng(5);
    auto f = random_series(rng, 2, 1, 1, 4), g = random_series(rng, 4, 1, 1, 4);
    CHECK_THROWS_AS(add(f, g), Error);
}

TEST_CASE("U_p after B_p is p^(k/2)")
{
    auto f = load_fixture("f11");
    for (u64 p : {2, 3, 5}) {
        auto back = apply_U_p(apply_B_d(f, p), p);
        CHECK(back == f.scaled(Surd::half_power(p, 2)));
    }
    auto d = load_fixture("delta");
    CHECK(apply_U_p(apply_B_d(d, 2), 2) == d.scaled(Surd(CyclotomicNumber(64))));
}

TEST_CASE("odd weight B_d carries a square root")
{
    std::mt19937_64 rng(9);
    auto f = random_series(rng, 3, 1, 4, 5);
    auto g = apply_B_d(f, 5);
    CHECK(g.radicand() == 5);
    auto h = multiply(g, apply_B_d(random_series(rng, 1, 1, 1, 5), 5));
    CHECK(h.radicand() == 1);
    CHECK(h.weight() == 4);
}

TEST_CASE("U_p on a Hecke eigenform")
{
    auto f = load_fixture("f11");
    auto u = apply_U_p(f, 11);
    CHECK(u == f.truncate(u.precision()));
    auto f32 = load_fixture("f32");
    auto u2 = apply_U_p(f32, 2);
    CHECK(u2.is_zero());
    auto u5 = apply_U_p(f32, 5);
    CHECK(u5.truncate(1)[1] == CyclotomicNumber(-2));
    CHECK(u5.precision() == f32.precision() / 5);
}

TEST_CASE("twist multiplicativity")
{
    auto f = load_fixture("f11");
    for (const auto& a : enumerate_characters(5))
        for (const auto& b : enumerate_characters(3))
            CHECK(twist(twist(f, a), b) == twist(f, a * b));
}

TEST_CASE("twist equals the Gauss sum average of translates")
{
    auto f = load_fixture("f11").truncate(40);
    for (const auto& chi : enumerate_primitive(5, Parity::any)) {
        auto t = twist(f, chi);
        const CyclotomicNumber g = gauss_sum(chi.conj());
        for (long n = 0; n <= f.precision(); ++n) {
            CyclotomicNumber s;
            for (i64 a = 0; a < 5; ++a)
                s += chi.conj().evaluate(a) * root_of_unity(5, a * n);
            CHECK(t[static_cast<std::size_t>(n)] * g == s * f[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("sturm bound")
{
    CHECK(sturm_bound(1, 12) == 1);
    CHECK(sturm_bound(11, 2) == 2);
    CHECK(sturm_bound(243, 4) == 108);
    CHECK(gamma0_index(36) == 72);
}

TEST_CASE("scaling by surds")
{
    std::mt19937_64 rng(1);
    auto f = random_series(rng, 2, 1, 1, 5);
    auto g = f.scaled(Surd(CyclotomicNumber(1), 5)).scaled(Surd(CyclotomicNumber(1), 5));
    CHECK(g == f.scaled(Surd(CyclotomicNumber(5))));
    CHECK(g.radicand() == 1);
    auto lc = linear_combine({{Surd(CyclotomicNumber(1), 2), f}, {one(), f}});
    CHECK(lc.radicand() == 1);
    CHECK(lc.field_order() % 8 == 0);
}

} // TEST_SUITE
