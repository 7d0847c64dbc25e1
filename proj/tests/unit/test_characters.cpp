#include "doctest.h"

#include "eisprod/characters.hpp"
#include "eisprod/error.hpp"

#include <random>

using namespace eisprod;

namespace {

DirichletCharacter chi4() { return enumerate_primitive(4, Parity::any).at(0); }

} // namespace

TEST_SUITE("characters") {

TEST_CASE("unit group generators")
{
    CHECK(unit_group_generators(1).empty());
    auto g11 = unit_group_generators(11);
    REQUIRE(g11.size() == 1);
    CHECK(g11[0].generator == 2);
    CHECK(unit_group_generators(49)[0].generator == 3);
    auto g32 = unit_group_generators(32);
    REQUIRE(g32.size() == 2);
    CHECK(g32[0].generator == 31);
    CHECK(g32[1].generator == 5);
    CHECK(g32[1].order == 8);
    auto g36 = unit_group_generators(36);
    REQUIRE(g36.size() == 2);
    CHECK(g36[0].generator % 4 == 3);
    CHECK(g36[0].generator % 9 == 1);
    CHECK(g36[1].generator % 4 == 1);
    CHECK(g36[1].generator % 9 == 2);
}

TEST_CASE("evaluation")
{
    CHECK(chi4().evaluate(3) == CyclotomicNumber(-1));
    CHECK(DirichletCharacter::principal(12).evaluate(35) == CyclotomicNumber(1));
    CHECK(chi4().evaluate(2).is_zero());
    CHECK(chi4().evaluate(-1) == CyclotomicNumber(-1));
}

TEST_CASE("canonical enumeration matches the documented generator images")
{
    auto phi11 = enumerate_primitive(11, Parity::any).at(0);
    CHECK(phi11.evaluate(2) == root_of_unity(10, 1));
    auto phi49 = enumerate_primitive(49, Parity::any).at(0);
    CHECK(phi49.evaluate(3) == root_of_unity(42, 1));
    CHECK(enumerate_primitive(11, Parity::odd).size() == 5);
    CHECK(enumerate_primitive(1, Parity::even).size() == 1);
    CHECK(enumerate_primitive(1, Parity::even)[0].is_trivial());
    CHECK(enumerate_primitive(4, Parity::any).size() == 1);
    CHECK(enumerate_primitive(243, Parity::any).size() == 108);
    CHECK(enumerate_primitive(8, Parity::any).size() == 2);
    CHECK(enumerate_primitive(2, Parity::any).empty());
    CHECK(enumerate_characters(36).size() == 12);
}

TEST_CASE("conductor and primitive character")
{
    auto p12 = DirichletCharacter::principal(12);
    CHECK(p12.conductor() == 1);
    CHECK(p12.primitive().is_trivial());
    CHECK(chi4().conductor() == 4);
    CHECK(chi4().primitive() == chi4());
    auto lifted = chi4().induce(8);
    CHECK(lifted.conductor() == 4);
    CHECK(lifted.primitive() == chi4());
}

TEST_CASE("induction")
{
    auto p7 = DirichletCharacter().induce(7);
    CHECK(p7 == DirichletCharacter::principal(7));
    CHECK(chi4().induce(32).evaluate(5) == chi4().evaluate(5));
    CHECK(chi4().induce(32).evaluate(6).is_zero());
    CHECK_THROWS_AS(chi4().induce(6), Error);
}

TEST_CASE("prime parts")
{
    auto p12 = DirichletCharacter::principal(12);
    CHECK(p12.prime_part({2, 3}) == p12);
    CHECK(chi4().induce(12).prime_part({}).is_trivial());
    CHECK_THROWS_AS(p12.prime_part({5}), Error);
    for (const auto& chi : enumerate_characters(36)) {
        auto two = chi.prime_part({2}), three = chi.prime_part({3});
        CHECK(two.modulus() <= 4);
        CHECK((two * three).induce(36) == chi);
    }
}

TEST_CASE("prime part factorization for every character of modulus at most 200")
{
    int checked = 0;
    for (u64 N = 1; N <= 200; ++N) {
        const auto primes = prime_divisors(N);
        for (const auto& chi : enumerate_characters(N)) {
            DirichletCharacter prod;
            for (u64 p : primes)
                prod = prod * chi.prime_part({p});
            CHECK(prod.induce(N) == chi);
            ++checked;
        }
    }
    CHECK(checked == 12232);
}

TEST_CASE("multiplicativity on random unit pairs")
{
    std::mt19937_64 rng(1);
    const std::vector<u64> moduli{36, 49, 100, 243, 97, 120};
    int pairs = 0;
    while (pairs < 10000) {
        const u64 N = moduli[pairs % moduli.size()];
        const auto& chars = enumerate_characters(N);
        const auto& chi = chars[rng() % chars.size()];
        const i64 a = static_cast<i64>(rng() % N), b = static_cast<i64>(rng() % N);
        if (gcd_u(static_cast<u64>(a), N) != 1 || gcd_u(static_cast<u64>(b), N) != 1)
            continue;
        const int ea = chi.exponent_at(a), eb = chi.exponent_at(b), eab = chi.exponent_at(a * b);
        CHECK(static_cast<u64>(eab) == (static_cast<u64>(ea) + static_cast<u64>(eb)) % chi.order());
        ++pairs;
    }
}

TEST_CASE("induce after conductor reproduces the table")
{
    for (u64 N : {12, 36, 45, 64, 98, 120}) {
        for (const auto& chi : enumerate_characters(N))
            CHECK(chi.primitive().induce(N) == chi);
    }
}

TEST_CASE("gauss sums")
{
    CHECK(gauss_sum(DirichletCharacter()) == CyclotomicNumber(1));
    CHECK(gauss_sum(chi4()) == CyclotomicNumber(2) * root_of_unity(4, 1));
    for (const auto& chi : enumerate_primitive(5, Parity::any))
        CHECK(gauss_sum(chi) * gauss_sum(chi.conj()) == CyclotomicNumber(chi.sign() * 5L));
}

TEST_CASE("gauss sum modulus for primitive characters up to 50")
{
    for (u64 M = 1; M <= 50; ++M) {
        for (const auto& chi : enumerate_primitive(M, Parity::any)) {
            auto g = gauss_sum(chi);
            CHECK(g * g.conjugate() == CyclotomicNumber(static_cast<long>(M)));
        }
    }
}

TEST_CASE("generalized bernoulli numbers and L-values")
{
    DirichletCharacter one;
    CHECK(generalized_bernoulli(one, 4) == CyclotomicNumber(Rational(-1, 30)));
    CHECK(generalized_bernoulli(chi4(), 1) == CyclotomicNumber(Rational(-1, 2)));
    CHECK(generalized_bernoulli(chi4(), 2).is_zero());
    CHECK(l_value_nonpositive(one, 4) == CyclotomicNumber(Rational(1, 120)));
    CHECK(l_value_nonpositive(chi4(), 1) == CyclotomicNumber(Rational(1, 2)));
    CHECK(l_value_nonpositive(one, 1) == CyclotomicNumber(Rational(-1, 2)));
    CHECK(l_value_nonpositive(one, 8) == CyclotomicNumber(Rational(1, 240)));
    CHECK(l_value_nonpositive(one, 2) == CyclotomicNumber(Rational(-1, 12)));
    // L(chi_-3, 0) = 1/3
    auto chi3 = enumerate_primitive(3, Parity::odd).at(0);
    CHECK(l_value_nonpositive(chi3, 1) == CyclotomicNumber(Rational(1, 3)));
    CHECK_THROWS_AS(l_value_nonpositive(DirichletCharacter::principal(6), 2), Error);
}

TEST_CASE("parity vanishing of generalized bernoulli numbers")
{
    for (u64 M : {1, 3, 4, 5, 7, 8, 9, 12, 13, 16, 25, 27}) {
        for (const auto& chi : enumerate_characters(M)) {
            for (unsigned k = 1; k <= 6; ++k) {
                const int want = (k % 2 == 0) ? 1 : -1;
                if (chi.sign() == want || (chi.is_trivial() && k == 1))
                    continue;
                CHECK(generalized_bernoulli(chi, k).is_zero());
            }
        }
    }
}

TEST_CASE("character references")
{
    CHECK(parse_character_ref("1").is_trivial());
    CHECK(parse_character_ref("4:0") == chi4());
    auto phi = parse_character_ref("11:3");
    CHECK(character_ref(phi) == "11:3");
    CHECK_THROWS_AS(parse_character_ref("4:1"), Error);
    CHECK_THROWS_AS(parse_character_ref("x"), Error);
    CHECK_THROWS_AS(character_ref(DirichletCharacter::principal(5)), Error);
}

} // TEST_SUITE
