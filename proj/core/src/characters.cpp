#include "eisprod/characters.hpp"

#include "eisprod/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace eisprod {

namespace {

std::vector<UnitGenerator> build_generators(u64 N)
{
    std::vector<UnitGenerator> out;
    for (auto [p, e] : factorize(N)) {
        u64 pe = 1;
        for (int i = 0; i < e; ++i)
            pe *= p;
        const u64 rest = N / pe;
        auto lift = [&](u64 g) {
            return static_cast<u64>(crt_pair(static_cast<i64>(g % pe), static_cast<i64>(pe), 1, static_cast<i64>(rest)));
        };
        if (p == 2) {
            if (e == 2)
                out.push_back({lift(3), 2});
            if (e >= 3) {
                out.push_back({lift(pe - 1), 2});
                out.push_back({lift(5), pe / 4});
            }
            continue;
        }
        const u64 group = pe / p * (p - 1);
        u64 g = 2;
        while (multiplicative_order(g, pe) != group)
            ++g;
        out.push_back({lift(g), group});
    }
    return out;
}

template <class T, class F>
const T& cached(std::map<u64, T>& cache, std::mutex& mu, u64 key, F make)
{
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, make()).first;
    return it->second;
}

} // namespace

const std::vector<UnitGenerator>& unit_group_generators(u64 N)
{
    require(N >= 1, "modulus must be positive");
    static std::mutex mu;
    static std::map<u64, std::vector<UnitGenerator>> cache;
    return cached(cache, mu, N, [&] { return build_generators(N); });
}

DirichletCharacter::DirichletCharacter()
{
    auto d = std::make_shared<Data>();
    d->table = {0};
    data_ = std::move(d);
}

DirichletCharacter DirichletCharacter::from_exponents(u64 N, const std::vector<u64>& exps)
{
    const auto& gens = unit_group_generators(N);
    require(exps.size() == gens.size(), "exponent vector does not match the unit group generators");
    auto d = std::make_shared<Data>();
    d->modulus = N;
    d->exponents = exps;
    u64 order = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        d->exponents[i] %= gens[i].order;
        order = lcm_u(order, gens[i].order / gcd_u(d->exponents[i], gens[i].order));
    }
    d->order = order;
    d->table.assign(N, -1);
    // Walk all products of generator powers with an odometer; g^ord = 1 resets each digit.
    std::vector<u64> step(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
        step[i] = d->exponents[i] * order / gens[i].order % order;
    std::vector<u64> k(gens.size(), 0);
    u64 value = 1 % N, expo = 0;
    for (;;) {
        d->table[value] = static_cast<int>(expo);
        std::size_t i = gens.size();
        for (; i > 0; --i) {
            value = mulmod(value, gens[i - 1].generator, N);
            expo = (expo + step[i - 1]) % order;
            if (++k[i - 1] < gens[i - 1].order)
                break;
            k[i - 1] = 0;
        }
        if (i == 0)
            break;
    }
    if (N == 1)
        d->table = {0};
    return DirichletCharacter(std::move(d));
}

DirichletCharacter DirichletCharacter::principal(u64 N)
{
    return from_exponents(N, std::vector<u64>(unit_group_generators(N).size(), 0));
}

DirichletCharacter DirichletCharacter::from_table(u64 N, u64 order, const std::vector<int>& table)
{
    require(table.size() == N, "character table has wrong length");
    const auto& gens = unit_group_generators(N);
    std::vector<u64> exps;
    for (const auto& g : gens) {
        const int e = table[g.generator];
        require(e >= 0, "character table vanishes on a generator");
        const u64 scaled = static_cast<u64>(e) * g.order;
        require(scaled % order == 0, "character value order does not divide generator order");
        exps.push_back(scaled / order);
    }
    DirichletCharacter chi = from_exponents(N, exps);
    for (u64 n = 0; n < N; ++n) {
        const int e = table[n];
        const int f = chi.data_->table[n];
        if (e < 0 || f < 0) {
            require(e == f, "character table is not multiplicative");
            continue;
        }
        require(static_cast<u64>(e) * chi.order() == static_cast<u64>(f) * order,
                "character table is not multiplicative");
    }
    return chi;
}

std::vector<std::pair<u64, CyclotomicNumber>> DirichletCharacter::generator_images() const
{
    std::vector<std::pair<u64, CyclotomicNumber>> out;
    const auto& gens = unit_group_generators(modulus());
    for (std::size_t i = 0; i < gens.size(); ++i)
        out.emplace_back(gens[i].generator, root_of_unity(gens[i].order, static_cast<i64>(data_->exponents[i])));
    return out;
}

int DirichletCharacter::exponent_at(i64 n) const
{
    return data_->table[static_cast<std::size_t>(mod_floor(n, static_cast<i64>(modulus())))];
}

CyclotomicNumber DirichletCharacter::evaluate(i64 n) const
{
    const int e = exponent_at(n);
    if (e < 0)
        return CyclotomicNumber(Rational(0), order());
    return root_of_unity(order(), e);
}

int DirichletCharacter::sign() const
{
    const int e = exponent_at(-1);
    return e == 0 ? 1 : -1;
}

u64 DirichletCharacter::conductor() const
{
    const u64 N = modulus();
    for (u64 M : divisors(N)) {
        bool trivial = true;
        for (u64 x = 1; x < N + 1 && trivial; x += M) {
            const int e = data_->table[x % N];
            if (e > 0)
                trivial = false;
        }
        if (trivial)
            return M;
    }
    return N;
}

DirichletCharacter DirichletCharacter::primitive() const
{
    const u64 N = modulus(), M = conductor();
    if (M == 1)
        return DirichletCharacter();
    std::vector<int> t(M, -1);
    for (u64 y = 1; y < M; ++y) {
        if (gcd_u(y, M) != 1)
            continue;
        u64 x = y;
        while (gcd_u(x, N) != 1)
            x += M;
        t[y] = data_->table[x % N];
    }
    return from_table(M, order(), t);
}

DirichletCharacter DirichletCharacter::induce(u64 N) const
{
    require(N % modulus() == 0, "induce: modulus does not divide target");
    if (N == modulus())
        return *this;
    std::vector<int> t(N, -1);
    for (u64 n = 0; n < N; ++n)
        if (gcd_u(n, N) == 1)
            t[n] = data_->table[n % modulus()];
    return from_table(N, order(), t);
}

DirichletCharacter DirichletCharacter::prime_part(const std::set<u64>& primes) const
{
    const u64 N = modulus();
    u64 NS = 1;
    for (u64 p : primes) {
        require(N % p == 0 && is_prime(p), "prime_part: prime does not divide the modulus");
        NS *= coprime_part_complement(N, p);
    }
    if (NS == 1)
        return DirichletCharacter();
    const u64 rest = N / NS;
    std::vector<int> t(NS, -1);
    for (u64 y = 0; y < NS; ++y) {
        if (gcd_u(y, NS) != 1)
            continue;
        const u64 x = static_cast<u64>(crt_pair(static_cast<i64>(y), static_cast<i64>(NS), 1, static_cast<i64>(rest)));
        t[y] = data_->table[x];
    }
    return from_table(NS, order(), t);
}

DirichletCharacter DirichletCharacter::conj() const
{
    const auto& gens = unit_group_generators(modulus());
    std::vector<u64> e(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
        e[i] = (gens[i].order - data_->exponents[i]) % gens[i].order;
    return from_exponents(modulus(), e);
}

DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b)
{
    const u64 N = lcm_u(a.modulus(), b.modulus());
    const auto A = a.induce(N), B = b.induce(N);
    const auto& gens = unit_group_generators(N);
    std::vector<u64> e(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
        e[i] = (A.exponents()[i] + B.exponents()[i]) % gens[i].order;
    return DirichletCharacter::from_exponents(N, e);
}

bool operator==(const DirichletCharacter& a, const DirichletCharacter& b)
{
    return a.modulus() == b.modulus() && a.exponents() == b.exponents();
}

CyclotomicNumber gauss_sum(const DirichletCharacter& chi)
{
    const u64 N = chi.modulus(), o = chi.order();
    const u64 L = lcm_u(N, o);
    IntPoly p(L);
    for (u64 a = 0; a < N; ++a) {
        const int e = chi.exponent_at(static_cast<i64>(a));
        if (e < 0)
            continue;
        p[(a * (L / N) + static_cast<u64>(e) * (L / o)) % L] += 1;
    }
    return CyclotomicNumber::from_polynomial(L, std::move(p));
}

CyclotomicNumber generalized_bernoulli(const DirichletCharacter& chi, unsigned k)
{
    require(k >= 1, "generalized_bernoulli: k must be positive");
    const u64 M = chi.modulus(), o = chi.order();
    std::vector<Rational> p(o);
    for (u64 a = 1; a <= M; ++a) {
        const int e = chi.exponent_at(static_cast<i64>(a));
        if (e < 0)
            continue;
        p[static_cast<std::size_t>(e)] += bernoulli_polynomial(k, make_rational(Integer(static_cast<unsigned long>(a)), Integer(static_cast<unsigned long>(M))));
    }
    // B_{k,chi} = M^(k-1) sum_a chi(a) B_k(a/M); the trivial character gives B_k(1), so B_1 = +1/2.
    const Rational scale(pow_int(Integer(static_cast<unsigned long>(M)), k - 1));
    return CyclotomicNumber::from_polynomial(o, p) * scale;
}

CyclotomicNumber l_value_nonpositive(const DirichletCharacter& chi, unsigned l)
{
    require(l >= 1, "l_value_nonpositive: l must be positive");
    require(chi.is_primitive(), "l_value_nonpositive: character must be primitive");
    return generalized_bernoulli(chi, l) * Rational(-1, static_cast<long>(l));
}

const std::vector<DirichletCharacter>& enumerate_characters(u64 M)
{
    static std::mutex mu;
    static std::map<u64, std::vector<DirichletCharacter>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(M);
        if (it != cache.end())
            return it->second;
    }
    const auto& gens = unit_group_generators(M);
    std::vector<DirichletCharacter> out;
    std::vector<u64> e(gens.size(), 0);
    for (;;) {
        out.push_back(DirichletCharacter::from_exponents(M, e));
        std::size_t i = gens.size();
        for (; i > 0; --i) {
            if (++e[i - 1] < gens[i - 1].order)
                break;
            e[i - 1] = 0;
        }
        if (i == 0)
            break;
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(M, std::move(out)).first->second;
}

std::vector<DirichletCharacter> enumerate_primitive(u64 M, Parity parity)
{
    std::vector<DirichletCharacter> out;
    for (const auto& chi : enumerate_characters(M)) {
        if (!chi.is_primitive())
            continue;
        if (parity == Parity::even && !chi.is_even())
            continue;
        if (parity == Parity::odd && chi.is_even())
            continue;
        out.push_back(chi);
    }
    return out;
}

DirichletCharacter parse_character_ref(const std::string& ref)
{
    if (ref == "1")
        return DirichletCharacter();
    const auto colon = ref.find(':');
    if (colon == std::string::npos)
        fail(ErrorKind::parse, "character reference must be '1' or 'M:i', got '" + ref + "'");
    u64 M = 0, i = 0;
    try {
        std::size_t pos = 0;
        M = std::stoull(ref.substr(0, colon), &pos);
        if (pos != colon)
            throw std::invalid_argument("");
        const std::string tail = ref.substr(colon + 1);
        i = std::stoull(tail, &pos);
        if (pos != tail.size())
            throw std::invalid_argument("");
    } catch (const std::logic_error&) {
        fail(ErrorKind::parse, "malformed character reference '" + ref + "'");
    }
    require(M >= 1, "character modulus must be positive");
    const auto prims = enumerate_primitive(M, Parity::any);
    require(i < prims.size(), "character index out of range in '" + ref + "'");
    return prims[i];
}

std::string character_ref(const DirichletCharacter& chi)
{
    if (chi.is_trivial())
        return "1";
    require(chi.is_primitive(), "only primitive characters have references");
    const auto prims = enumerate_primitive(chi.modulus(), Parity::any);
    for (std::size_t i = 0; i < prims.size(); ++i)
        if (prims[i] == chi)
            return std::to_string(chi.modulus()) + ":" + std::to_string(i);
    fail(ErrorKind::internal, "character missing from its enumeration");
}

} // namespace eisprod
