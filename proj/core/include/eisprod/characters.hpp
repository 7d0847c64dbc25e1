// Dirichlet characters stored by their values on a fixed set of unit group generators.
#pragma once

#include "eisprod/cyclotomic.hpp"

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace eisprod {

struct UnitGenerator {
    u64 generator;
    u64 order;
};

// Smallest-generator decomposition of (Z/N)^x: one generator per odd prime power
// (its least primitive root), -1 and 5 for 2^e with e >= 3, -1 for 4. Each is lifted
// by CRT to be 1 modulo the other prime powers. Ordered by prime.
const std::vector<UnitGenerator>& unit_group_generators(u64 N);

enum class Parity { even, odd, any };

class DirichletCharacter {
public:
    // The trivial character of modulus 1.
    DirichletCharacter();

    // chi(g_i) = zeta_{ord_i}^{a_i} on the canonical generators.
    static DirichletCharacter from_exponents(u64 modulus, const std::vector<u64>& exponents);
    static DirichletCharacter principal(u64 modulus);

    u64 modulus() const { return data_->modulus; }
    u64 order() const { return data_->order; }
    const std::vector<u64>& exponents() const { return data_->exponents; }
    std::vector<std::pair<u64, CyclotomicNumber>> generator_images() const;

    // chi(n) = zeta_order^e, or -1 when gcd(n, N) > 1.
    int exponent_at(i64 n) const;
    CyclotomicNumber evaluate(i64 n) const;

    // chi(-1) as +1 or -1.
    int sign() const;
    bool is_even() const { return sign() == 1; }
    bool is_principal() const { return data_->order == 1; }
    bool is_trivial() const { return modulus() == 1; }

    u64 conductor() const;
    DirichletCharacter primitive() const;
    bool is_primitive() const { return conductor() == modulus(); }

    DirichletCharacter induce(u64 N) const;
    DirichletCharacter prime_part(const std::set<u64>& primes) const;
    DirichletCharacter conj() const;

    friend DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b);
    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b);
    friend bool operator!=(const DirichletCharacter& a, const DirichletCharacter& b) { return !(a == b); }

    // Builds the character with chi(n) = zeta_order^table[n] on units of Z/N.
    static DirichletCharacter from_table(u64 modulus, u64 order, const std::vector<int>& table);

private:
    struct Data {
        u64 modulus = 1;
        u64 order = 1;
        std::vector<u64> exponents;
        std::vector<int> table;
    };
    explicit DirichletCharacter(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
    std::shared_ptr<const Data> data_;
};

CyclotomicNumber gauss_sum(const DirichletCharacter& chi);
CyclotomicNumber generalized_bernoulli(const DirichletCharacter& chi, unsigned k);
// L(chi, 1 - l) for primitive chi and l >= 1.
CyclotomicNumber l_value_nonpositive(const DirichletCharacter& chi, unsigned l);

// All characters mod M, lexicographic in the exponent vector.
const std::vector<DirichletCharacter>& enumerate_characters(u64 M);
std::vector<DirichletCharacter> enumerate_primitive(u64 M, Parity parity);

// "1" or "M:i" with i indexing enumerate_primitive(M, any).
DirichletCharacter parse_character_ref(const std::string& ref);
std::string character_ref(const DirichletCharacter& chi);

} // namespace eisprod
