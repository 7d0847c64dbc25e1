#include "eisprod/solver.hpp"

#include "eisprod/error.hpp"
#include "eisprod/modp.hpp"

#include <map>
#include <numeric>

namespace eisprod {

ExactMatrix build_matrix(const std::vector<GeneratorQuintuple>& gens, int k, long B,
                         const std::vector<EisBasisElement>& eisenstein)
{
    require(B >= 0, "precision must be nonnegative");
    ExactMatrix m;
    m.rows = static_cast<std::size_t>(B) + 1;
    std::map<std::string, FourierExpansion> factors;
    auto factor = [&](const EisLabel& label) -> const FourierExpansion& {
        const std::string key = to_string(label);
        auto it = factors.find(key);
        if (it == factors.end())
            it = factors.emplace(key, eis_expansion(label, B)).first;
        return it->second;
    };
    auto push = [&](const FourierExpansion& f) {
        m.field_order = lcm_u(m.field_order, f.field_order());
        m.columns.push_back(f.coeffs());
        m.radicands.push_back(f.radicand());
    };
    for (const auto& g : gens)
        push(multiply(factor(g.first()), factor(g.second(k))));
    for (const auto& e : eisenstein)
        push(eis_basis_expansion(e, B));
    return m;
}

namespace {

using Column = std::vector<CyclotomicNumber>;

// An entry reduced mod p as a polynomial in zeta_order.
struct ReducedEntry {
    u64 order = 1;
    std::vector<u64> poly;
};

std::optional<ReducedEntry> reduce_entry(const CyclotomicNumber& c, u64 p)
{
    const u64 den = mpz_fdiv_ui(c.denominator().get_mpz_t(), p);
    if (den == 0)
        return std::nullopt;
    const u64 inv = powmod(den, p - 2, p);
    ReducedEntry r;
    r.order = c.order();
    r.poly.reserve(c.numerators().size());
    for (const auto& z : c.numerators())
        r.poly.push_back(mulmod(mpz_fdiv_ui(z.get_mpz_t(), p), inv, p));
    return r;
}

u64 evaluate(const ReducedEntry& e, u64 root, u64 p)
{
    u64 acc = 0;
    for (std::size_t i = e.poly.size(); i-- > 0;)
        acc = (mulmod(acc, root, p) + e.poly[i]) % p;
    return acc;
}

// The system entries reduced mod p, with per-order roots for each embedding.
class ReducedSystem {
public:
    ReducedSystem(const std::vector<Column>& columns, std::size_t rows, u64 m, u64 p) : m_(m), p_(p), rows_(rows)
    {
        omega_ = primitive_root_of_unity(m, p);
        entries_.resize(columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            entries_[j].reserve(rows);
            for (std::size_t r = 0; r < rows; ++r) {
                auto e = reduce_entry(columns[j][r], p);
                if (!e) {
                    ok_ = false;
                    return;
                }
                ensure(m % e->order == 0, "matrix entry outside the working field");
                entries_[j].push_back(std::move(*e));
            }
        }
    }

    bool ok() const { return ok_; }
    u64 omega() const { return omega_; }

    // Column j in the embedding zeta_m -> omega^emb, written into column `dst` of out.
    void embed_into(ModMatrix& out, std::size_t j, u64 emb, std::size_t dst, bool transpose) const
    {
        std::map<u64, u64> roots;
        for (std::size_t r = 0; r < rows_; ++r) {
            const auto& e = entries_[j][r];
            auto it = roots.find(e.order);
            if (it == roots.end())
                it = roots.emplace(e.order, powmod(omega_, (emb % m_) * (m_ / e.order) % m_, p_)).first;
            const u64 v = evaluate(e, it->second, p_);
            if (transpose)
                out.at(dst, r) = v;
            else
                out.at(r, dst) = v;
        }
    }

private:
    u64 m_, p_;
    std::size_t rows_;
    u64 omega_ = 1;
    bool ok_ = true;
    std::vector<std::vector<ReducedEntry>> entries_;
};

std::vector<u64> units_mod(u64 m)
{
    std::vector<u64> u;
    for (u64 j = 1; j <= m; ++j)
        if (gcd_u(j, m) == 1)
            u.push_back(j);
    return u;
}

// Pivot profile ordering: higher rank first, then lexicographically smaller pivots.
bool better_profile(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b)
{
    if (a.size() != b.size())
        return a.size() > b.size();
    return a < b;
}

struct PrimeSolution {
    std::vector<std::size_t> pivots;
    bool consistent = true;
    // values[i][t]: power-basis coordinate t of the i-th pivot variable.
    std::vector<std::vector<u64>> values;
};

std::optional<PrimeSolution> solve_mod_prime(const std::vector<Column>& columns, const Column& rhs, std::size_t rows,
                                             u64 m, u64 p)
{
    std::vector<Column> all = columns;
    all.push_back(rhs);
    ReducedSystem sys(all, rows, m, p);
    if (!sys.ok())
        return std::nullopt;
    const std::size_t n = columns.size();
    const auto units = units_mod(m);
    const std::size_t deg = units.size();
    PrimeSolution out;
    std::vector<std::vector<u64>> per_embedding;
    for (std::size_t ui = 0; ui < deg; ++ui) {
        ModMatrix a(rows, n + 1, p);
        for (std::size_t j = 0; j <= n; ++j)
            sys.embed_into(a, j, units[ui], j, false);
        auto piv = a.rref();
        const bool consistent = piv.empty() || piv.back() != n;
        if (!consistent)
            piv.pop_back();
        if (ui == 0) {
            out.pivots = piv;
            out.consistent = consistent;
        } else if (piv != out.pivots || consistent != out.consistent) {
            return std::nullopt;
        }
        if (!consistent)
            continue;
        std::vector<u64> v(piv.size());
        for (std::size_t i = 0; i < piv.size(); ++i)
            v[i] = a.at(i, n);
        per_embedding.push_back(std::move(v));
    }
    if (!out.consistent)
        return out;
    // sigma_j(z) = sum_t z_t omega^(j t); invert the Vandermonde matrix.
    ModMatrix V(deg, deg, p);
    for (std::size_t ui = 0; ui < deg; ++ui) {
        const u64 w = powmod(sys.omega(), units[ui] % m, p);
        u64 acc = 1;
        for (std::size_t t = 0; t < deg; ++t) {
            V.at(ui, t) = acc;
            acc = mulmod(acc, w, p);
        }
    }
    const auto Vinv = inverse_mod(V);
    if (!Vinv)
        return std::nullopt;
    out.values.assign(out.pivots.size(), std::vector<u64>(deg, 0));
    for (std::size_t i = 0; i < out.pivots.size(); ++i)
        for (std::size_t t = 0; t < deg; ++t) {
            u64 s = 0;
            for (std::size_t ui = 0; ui < deg; ++ui)
                s = (s + mulmod(Vinv->at(t, ui), per_embedding[ui][i], p)) % p;
            out.values[i][t] = s;
        }
    return out;
}

bool check_solution(const std::vector<Column>& columns, const Column& rhs, std::size_t rows,
                    const std::vector<std::size_t>& pivots, const std::vector<CyclotomicNumber>& x)
{
    for (std::size_t r = 0; r < rows; ++r) {
        CyclotomicNumber s;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (!x[i].is_zero())
                s += x[i] * columns[pivots[i]][r];
        if (s != rhs[r])
            return false;
    }
    return true;
}

constexpr int kMaxPrimes = 400;

} // namespace

namespace {

// Column rank profile in one embedding modulo one prime.
std::vector<std::size_t> column_profile(const std::vector<Column>& columns, std::size_t rows, u64 m)
{
    u64 p = 0;
    for (int used = 0; used < kMaxPrimes; ++used) {
        p = next_prime_one_mod(m, p);
        ReducedSystem sys(columns, rows, m, p);
        if (!sys.ok())
            continue;
        ModMatrix a(rows, columns.size(), p);
        for (std::size_t j = 0; j < columns.size(); ++j)
            sys.embed_into(a, j, 1, j, false);
        return a.rref();
    }
    fail(ErrorKind::internal, "no usable prime for the rank profile");
}

std::optional<LinearSolution> solve_full(const std::vector<Column>& columns, const Column& rhs, u64 m);

} // namespace

std::optional<LinearSolution> solve_exact(const std::vector<Column>& columns, const Column& rhs, u64 m)
{
    const std::size_t rows = rhs.size();
    for (const auto& c : columns)
        require(c.size() >= rows, "solve_exact: column shorter than the right-hand side");
    if (columns.size() <= rows)
        return solve_full(columns, rhs, m);
    // Free variables are zero, so only the pivot columns take part.
    const auto profile = column_profile(columns, rows, m);
    std::vector<Column> sub;
    for (std::size_t j : profile)
        sub.push_back(columns[j]);
    auto sol = solve_full(sub, rhs, m);
    if (!sol)
        return std::nullopt;
    LinearSolution out;
    out.rank = sol->rank;
    out.x.assign(columns.size(), CyclotomicNumber(Rational(0), m));
    for (std::size_t i = 0; i < profile.size(); ++i)
        out.x[profile[i]] = sol->x[i];
    return out;
}

namespace {

std::optional<LinearSolution> solve_full(const std::vector<Column>& columns, const Column& rhs, u64 m)
{
    const std::size_t rows = rhs.size();
    const std::size_t deg = euler_phi(m);

    std::vector<std::size_t> pivots;
    bool consistent = true;
    bool have_profile = false;
    Integer modulus = 1;
    std::vector<std::vector<Integer>> acc;
    std::optional<std::vector<CyclotomicNumber>> previous;
    int inconsistent_seen = 0;
    u64 p = 0;
    for (int used = 0; used < kMaxPrimes; ++used) {
        p = next_prime_one_mod(m, p);
        auto sol = solve_mod_prime(columns, rhs, rows, m, p);
        if (!sol)
            continue;
        if (!have_profile || better_profile(sol->pivots, pivots) ||
            (sol->pivots == pivots && sol->consistent && !consistent)) {
            pivots = sol->pivots;
            consistent = sol->consistent;
            have_profile = true;
            modulus = 1;
            acc.assign(pivots.size(), std::vector<Integer>(deg, Integer(0)));
            previous.reset();
            inconsistent_seen = 0;
        } else if (sol->pivots != pivots || sol->consistent != consistent) {
            continue;
        }
        if (!consistent) {
            // Confirmed exactly by the caller's certificate.
            if (++inconsistent_seen == 2)
                return std::nullopt;
            continue;
        }
        const Integer P(std::to_string(p));
        Integer inv;
        const Integer Mmod = modulus % P;
        mpz_invert(inv.get_mpz_t(), Mmod.get_mpz_t(), P.get_mpz_t());
        for (std::size_t i = 0; i < pivots.size(); ++i)
            for (std::size_t t = 0; t < deg; ++t) {
                Integer& a = acc[i][t];
                Integer diff = (Integer(std::to_string(sol->values[i][t])) - a % P) % P;
                if (diff < 0)
                    diff += P;
                Integer h = (diff * inv) % P;
                a += modulus * h;
            }
        modulus *= P;

        std::vector<CyclotomicNumber> x;
        bool reconstructed = true;
        for (std::size_t i = 0; i < pivots.size() && reconstructed; ++i) {
            std::vector<Rational> coords(deg);
            for (std::size_t t = 0; t < deg; ++t) {
                auto q = rational_reconstruct(acc[i][t], modulus);
                if (!q) {
                    reconstructed = false;
                    break;
                }
                coords[t] = *q;
            }
            if (reconstructed)
                x.push_back(CyclotomicNumber::from_coefficients(m, coords));
        }
        if (!reconstructed) {
            previous.reset();
            continue;
        }
        if (previous && *previous == x && check_solution(columns, rhs, rows, pivots, x)) {
            LinearSolution out;
            out.rank = pivots.size();
            out.x.assign(columns.size(), CyclotomicNumber(Rational(0), m));
            for (std::size_t i = 0; i < pivots.size(); ++i)
                out.x[pivots[i]] = x[i];
            return out;
        }
        previous = std::move(x);
    }
    fail(ErrorKind::unverified, "modular solver did not converge");
}

} // namespace

std::size_t rank_exact(const std::vector<Column>& columns, std::size_t rows, u64 m)
{
    std::size_t best = 0;
    u64 p = 0;
    int done = 0;
    for (int used = 0; used < kMaxPrimes && done < 2; ++used) {
        p = next_prime_one_mod(m, p);
        ReducedSystem sys(columns, rows, m, p);
        if (!sys.ok())
            continue;
        ModMatrix a(rows, columns.size(), p);
        for (std::size_t j = 0; j < columns.size(); ++j)
            sys.embed_into(a, j, 1, j, false);
        best = std::max(best, rank_mod(std::move(a)));
        ++done;
    }
    ensure(done > 0, "no usable prime for the rank computation");
    return best;
}

FormExpression ProductRepresentation::expression() const
{
    FormExpression f;
    f.weight = weight;
    for (const auto& [c, g] : terms)
        f.add_product(Surd(c), {g.first(), g.second(weight)});
    for (const auto& [c, e] : eis_terms)
        f.add_eisenstein(Surd(c), e);
    return f;
}

namespace {

void check_target(const FourierExpansion& target, int k)
{
    require(target.width() == 1, "target must be an expansion in q at infinity");
    require(target.weight() == k, "target weight does not match");
}

std::vector<Column> transpose_augmented(const std::vector<Column>& cols, const Column& rhs)
{
    const std::size_t rows = rhs.size();
    std::vector<Column> t(rows, Column(cols.size() + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t j = 0; j < cols.size(); ++j)
            t[r][j] = cols[j][r];
        t[r][cols.size()] = rhs[r];
    }
    return t;
}

} // namespace

SolveResult solve_in_span(const FourierExpansion& target, u64 N, int k, const std::vector<GeneratorQuintuple>& gens,
                          const std::vector<EisBasisElement>& eisenstein, long B)
{
    check_target(target, k);
    require(B >= 0, "precision must be nonnegative");
    if (target.precision() < B)
        fail(ErrorKind::precision, "target precision " + std::to_string(target.precision()) + " is below the required " +
                                       std::to_string(B));
    for (const auto& g : gens)
        validate(g, N, k);
    const FourierExpansion t = target.truncate(B).materialized();
    const ExactMatrix mat = build_matrix(gens, k, B, eisenstein);
    const u64 m = lcm_u(mat.field_order, t.field_order());
    const Column& rhs = t.coeffs();
    const std::string digest = expansion_digest(target);

    if (auto sol = solve_exact(mat.columns, rhs, m)) {
        ProductRepresentation rep;
        rep.level = N;
        rep.weight = k;
        rep.target_digest = digest;
        rep.verified_to = B;
        for (std::size_t j = 0; j < mat.cols(); ++j) {
            if (sol->x[j].is_zero())
                continue;
            CyclotomicNumber c = sol->x[j];
            const u64 r = mat.radicands[j];
            if (r != 1)
                c = c * sqrt_cyclotomic(r) * make_rational(Integer(1), Integer(static_cast<unsigned long>(r)));
            if (j < gens.size())
                rep.terms.emplace_back(c, gens[j]);
            else
                rep.eis_terms.emplace_back(c, eisenstein[j - gens.size()]);
        }
        ensure(verify_representation(rep, target, B), "solution failed re-expansion");
        return rep;
    }

    const auto cols_t = transpose_augmented(mat.columns, rhs);
    Column e(mat.cols() + 1, CyclotomicNumber(0));
    e.back() = CyclotomicNumber(1);
    auto cert = solve_exact(cols_t, e, m);
    if (!cert)
        fail(ErrorKind::internal, "neither a solution nor an inconsistency certificate was found");
    NotInSpan out;
    out.witness = std::move(cert->x);
    out.precision = B;
    out.target_digest = digest;
    return out;
}

SolveResult solve_represent(const FourierExpansion& target, u64 N, int k)
{
    const long B = sturm_bound(N, k) + 5;
    return solve_in_span(target, N, k, enumerate_generators(N, k), eisenstein_space_elements(N, k), B);
}

FourierExpansion expand(const ProductRepresentation& rep, long B)
{
    std::vector<ScaledExpansion> parts;
    for (const auto& [c, g] : rep.terms)
        parts.push_back({Surd(c), generator_expansion(g, rep.weight, B)});
    for (const auto& [c, e] : rep.eis_terms)
        parts.push_back({Surd(c), eis_basis_expansion(e, B)});
    if (parts.empty())
        return FourierExpansion::zero(rep.weight, 1, B);
    return linear_combine(parts);
}

bool verify_representation(const ProductRepresentation& rep, const FourierExpansion& target, long B)
{
    require(B >= 0, "precision must be nonnegative");
    if (target.precision() < B)
        fail(ErrorKind::precision, "target precision is below the verification precision");
    if (target.weight() != rep.weight || target.width() != 1)
        return false;
    return expand(rep, B) == target.truncate(B);
}

bool verify_certificate(const NotInSpan& cert, const FourierExpansion& target, u64 N, int k)
{
    const long B = cert.precision;
    if (static_cast<long>(cert.witness.size()) != B + 1 || target.precision() < B)
        return false;
    const ExactMatrix mat = build_matrix(enumerate_generators(N, k), k, B, eisenstein_space_elements(N, k));
    auto pair = [&](const Column& col) {
        CyclotomicNumber s;
        for (std::size_t r = 0; r <= static_cast<std::size_t>(B); ++r)
            if (!cert.witness[r].is_zero())
                s += cert.witness[r] * col[r];
        return s;
    };
    for (const auto& col : mat.columns)
        if (!pair(col).is_zero())
            return false;
    return pair(target.truncate(B).materialized().coeffs()) == CyclotomicNumber(1);
}

std::size_t rank_of_span(u64 N, int k, long B)
{
    require(B >= sturm_bound(N, k), "rank precision must reach the Sturm bound");
    const ExactMatrix mat = build_matrix(enumerate_generators(N, k), k, B, eisenstein_space_elements(N, k));
    return rank_exact(mat.columns, mat.rows, mat.field_order);
}

namespace {

struct LevelInvariants {
    long mu, nu2, nu3, cusps;
};

LevelInvariants level_invariants(u64 N)
{
    LevelInvariants v{static_cast<long>(gamma0_index(N)), 1, 1, 0};
    if (N % 4 == 0)
        v.nu2 = 0;
    if (N % 9 == 0)
        v.nu3 = 0;
    for (u64 p : prime_divisors(N)) {
        const long kr4 = p == 2 ? 0 : (p % 4 == 1 ? 1 : -1);
        const long kr3 = p == 3 ? 0 : (p % 3 == 1 ? 1 : -1);
        v.nu2 *= 1 + kr4;
        v.nu3 *= 1 + kr3;
    }
    for (u64 d : divisors(N))
        v.cusps += static_cast<long>(euler_phi(gcd_u(d, N / d)));
    return v;
}

} // namespace

long dimension_cusp_forms(u64 N, int k)
{
    require(N >= 1 && k >= 2 && k % 2 == 0, "dimension formula needs N >= 1 and even k >= 2");
    const auto v = level_invariants(N);
    const long twelve_g = 12 + v.mu - 3 * v.nu2 - 4 * v.nu3 - 6 * v.cusps;
    ensure(twelve_g % 12 == 0, "genus formula is not integral");
    const long g = twelve_g / 12;
    if (k == 2)
        return g;
    return (k - 1) * (g - 1) + (k / 2 - 1) * v.cusps + v.nu2 * (k / 4) + v.nu3 * (k / 3);
}

long dimension_modular_forms(u64 N, int k)
{
    const long s = dimension_cusp_forms(N, k);
    const long c = level_invariants(N).cusps;
    return k == 2 ? s + c - 1 : s + c;
}

Json to_json(const GeneratorQuintuple& g)
{
    return Json{{"phi", character_ref(g.phi)}, {"psi", character_ref(g.psi)}, {"l", g.l},
                {"d1", g.d1},                  {"d2", g.d2},                  {"d", g.d}};
}

GeneratorQuintuple quintuple_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("phi") || !j.contains("psi"))
        fail(ErrorKind::parse, "quintuple needs 'phi' and 'psi'");
    GeneratorQuintuple g;
    g.phi = character_from_json(j.at("phi"));
    g.psi = character_from_json(j.at("psi"));
    g.l = static_cast<int>(get_u64(j, "l"));
    g.d1 = get_u64(j, "d1");
    g.d2 = get_u64(j, "d2");
    g.d = j.contains("d") ? get_u64(j, "d") : 1;
    return g;
}

Json to_json(const ProductRepresentation& rep)
{
    Json terms = Json::array();
    for (const auto& [c, g] : rep.terms)
        terms.push_back(Json{{"coeff", to_json(c)}, {"quintuple", to_json(g)}});
    Json eis = Json::array();
    for (const auto& [c, e] : rep.eis_terms)
        eis.push_back(Json{{"coeff", to_json(c)}, {"id", e.id()}});
    Json j{{"schema", kSchemaVersion}, {"level", rep.level}, {"weight", rep.weight}, {"terms", terms},
           {"eis_terms", eis}, {"verified_to", rep.verified_to}};
    if (!rep.target_digest.empty())
        j["target_digest"] = rep.target_digest;
    return j;
}

ProductRepresentation representation_from_json(const Json& j)
{
    check_schema(j);
    ProductRepresentation rep;
    rep.level = get_u64(j, "level");
    rep.weight = static_cast<int>(get_u64(j, "weight"));
    require(rep.level >= 1, "representation level must be positive");
    require(rep.weight >= 2 && rep.weight % 2 == 0, "representation weight must be even and at least 2");
    if (j.contains("terms")) {
        if (!j.at("terms").is_array())
            fail(ErrorKind::parse, "'terms' must be an array");
        for (const auto& t : j.at("terms")) {
            if (!t.is_object() || !t.contains("coeff") || !t.contains("quintuple"))
                fail(ErrorKind::parse, "each term needs 'coeff' and 'quintuple'");
            GeneratorQuintuple g = quintuple_from_json(t.at("quintuple"));
            validate(g, rep.level, rep.weight);
            rep.terms.emplace_back(cyclotomic_from_json(t.at("coeff")), g);
        }
    }
    if (j.contains("eis_terms")) {
        if (!j.at("eis_terms").is_array())
            fail(ErrorKind::parse, "'eis_terms' must be an array");
        for (const auto& t : j.at("eis_terms")) {
            if (!t.is_object() || !t.contains("coeff") || !t.contains("id") || !t.at("id").is_string())
                fail(ErrorKind::parse, "each Eisenstein term needs 'coeff' and 'id'");
            EisBasisElement e = parse_eis_basis_id(t.at("id").get<std::string>());
            require(e.k == rep.weight, "Eisenstein term weight does not match");
            rep.eis_terms.emplace_back(cyclotomic_from_json(t.at("coeff")), e);
        }
    }
    if (j.contains("target_digest") && j.at("target_digest").is_string())
        rep.target_digest = j.at("target_digest").get<std::string>();
    if (j.contains("verified_to") && j.at("verified_to").is_number_integer())
        rep.verified_to = j.at("verified_to").get<long>();
    return rep;
}

Json to_json(const NotInSpan& cert)
{
    Json w = Json::array();
    for (const auto& y : cert.witness)
        w.push_back(to_json(y));
    return Json{{"schema", kSchemaVersion}, {"not_in_span", true}, {"precision", cert.precision},
                {"witness", w}, {"target_digest", cert.target_digest}};
}

} // namespace eisprod
