// Acceptance checks: prints one PASS/FAIL line per criterion and exits nonzero on any failure.
#include "eisprod/cusp.hpp"
#include "eisprod/solver.hpp"
#include "eisprod/serialize.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace eisprod;

namespace {

FourierExpansion fixture(const std::string& name)
{
    return expansion_from_json(read_json_file(std::string(EISPROD_FIXTURE_DIR) + "/" + name + ".json"));
}

ProductRepresentation data_rep(const std::string& name)
{
    return representation_from_json(read_json_file(std::string(EISPROD_DATA_DIR) + "/" + name + ".json"));
}

CyclotomicNumber z(u64 m, i64 e) { return root_of_unity(m, e); }
CyclotomicNumber c(i64 p, i64 q = 1) { return CyclotomicNumber(make_rational(p, q)); }

// Collects failure messages for one criterion.
struct Report {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what)
    {
        if (!ok)
            failures.push_back(what);
    }
};

ProductRepresentation solved(const std::string& name, u64 N, int k, Report& r)
{
    const FourierExpansion f = fixture(name);
    const SolveResult res = solve_represent(f, N, k);
    const auto* rep = std::get_if<ProductRepresentation>(&res);
    if (!rep) {
        r.expect(false, name + " is not in the span");
        return {};
    }
    r.expect(verify_representation(*rep, f, f.precision()), name + " representation fails verification");
    return *rep;
}

// Compares e[0..n] with scale * expected[0..n]; missing entries are zero.
void expect_coefficients(Report& r, const std::string& what, const FourierExpansion& e, const CyclotomicNumber& scale,
                         const std::vector<CyclotomicNumber>& expected, std::size_t through)
{
    const auto coeffs = e.true_coefficients();
    if (coeffs.size() <= through) {
        r.expect(false, what + ": expansion too short");
        return;
    }
    for (std::size_t n = 0; n <= through; ++n) {
        const CyclotomicNumber want = n < expected.size() ? scale * expected[n] : CyclotomicNumber();
        if (coeffs[n] != want) {
            r.expect(false, what + ": coefficient " + std::to_string(n) + " is " + coeffs[n].to_string() + ", expected " +
                                want.to_string());
            return;
        }
    }
}

FormExpression expr(const ProductRepresentation& rep) { return rep.expression(); }

UnimodularMatrix gamma_d(i64 d) { return UnimodularMatrix(1, 0, d, 1); }

Report criterion_delta()
{
    Report r;
    const FourierExpansion delta = fixture("delta");
    r.expect(delta[1] == c(1) && delta[2] == c(-24), "fixture starts q - 24 q^2");
    r.expect(verify_representation(data_rep("delta.classical"), delta, sturm_bound(1, 12) + 10), "50/3, -147/4 combination");
    const GeneratorQuintuple e4e8{DirichletCharacter(), DirichletCharacter(), 4, 1, 1, 1};
    const GeneratorQuintuple e6e6{DirichletCharacter(), DirichletCharacter(), 6, 1, 1, 1};
    const SolveResult res = solve_in_span(delta, 1, 12, {e4e8, e6e6}, {}, sturm_bound(1, 12) + 5);
    const auto* rep = std::get_if<ProductRepresentation>(&res);
    r.expect(rep && rep->terms.size() == 2 && rep->terms[0].first == c(50, 3) && rep->terms[1].first == c(-147, 4),
             "two-column solve returns 50/3 and -147/4");
    return r;
}

Report criterion_f11()
{
    Report r;
    const ProductRepresentation rep = data_rep("f11.classical");
    const CyclotomicNumber inv_sqrt5 = sqrt_cyclotomic(5) * Rational(1, 5);
    r.expect(rep.terms.size() == 2 && rep.terms[0].first == inv_sqrt5 - c(1, 4) && rep.terms[1].first == -(inv_sqrt5 + c(1, 4)),
             "stored coefficients are 1/sqrt5 - 1/4 and -(1/sqrt5 + 1/4)");
    r.expect(verify_representation(rep, fixture("f11"), 10), "combination verifies through q^10");
    return r;
}

Report criterion_f32()
{
    Report r;
    const ProductRepresentation rep = data_rep("f32.classical");
    const FourierExpansion f = fixture("f32");
    r.expect(rep.terms.size() == 4, "four terms");
    r.expect(verify_representation(rep, f, f.precision()), "combination verifies");
    const CuspExpansion ce = expansion_at_cusp(expr(rep), 32, gamma_d(8), 17);
    const auto coeffs = f.true_coefficients();
    const std::vector<CyclotomicNumber> want(coeffs.begin(), coeffs.begin() + 18);
    expect_coefficients(r, "f32 at 1/8", ce.expansion, -z(4, 1), want, 17);
    return r;
}

Report criterion_f49()
{
    Report r;
    const ProductRepresentation rep = solved("f49", 49, 2, r);
    const FormExpression f = expr(rep);
    const CuspExpansion at0 = expansion_at_cusp(f, 49, UnimodularMatrix::S(), 7);
    r.expect(at0.width == 49, "width 49 at cusp 0");
    expect_coefficients(r, "f49|S", at0.expansion, c(1, 49), {c(0), c(-1), c(-1), c(0), c(1)}, 7);
    r.expect(al_eigenvalue(f, 49, {7}, sturm_bound(49, 2) + 5) == c(-1), "W_49 eigenvalue -1");
    for (i64 m : {1, 3, 10}) {
        const CuspExpansion moved = expansion_at_cusp(f, 49, UnimodularMatrix::S() * UnimodularMatrix::T(m), 7);
        for (std::size_t n = 0; n <= 7; ++n)
            r.expect(moved.expansion[n] == at0.expansion[n] * z(49, static_cast<i64>(n) * m),
                     "gamma T^" + std::to_string(m) + " scaling at n = " + std::to_string(n));
    }
    const CuspExpansion at7 = expansion_at_cusp(f, 49, gamma_d(7), 2);
    const CyclotomicNumber a1 = c(-2) * z(7, 5) - c(4) * z(7, 4) - c(6) * z(7, 3) - c(8) * z(7, 2) - c(3) * z(7, 1) - c(5);
    const CyclotomicNumber a2 = c(6) * z(7, 5) - c(2) * z(7, 4) + c(4) * z(7, 3) + c(3) * z(7, 2) + c(2) * z(7, 1) + c(1);
    expect_coefficients(r, "f49|gamma_7", at7.expansion, c(1, 7), {c(0), a1, a2}, 2);
    return r;
}

Report criterion_level8()
{
    Report r;
    for (const auto& [name, sign] : {std::pair<std::string, i64>{"f8_k16_a", 1}, {"f8_k16_b", -1}}) {
        const FourierExpansion target = fixture(name);
        r.expect(target[3] == c(sign > 0 ? -3444 : 2700), name + " a_3");
        const FormExpression f = expr(solved(name, 8, 16, r));
        r.expect(al_eigenvalue(f, 8, {2}, sturm_bound(8, 16) + 5) == c(-1), name + " W_8 eigenvalue -1");
        const CuspExpansion at2 = expansion_at_cusp(f, 8, gamma_d(2), 6);
        r.expect(at2.width == 2, name + " width 2 at 1/2");
        const std::vector<CyclotomicNumber> want = sign > 0
            ? std::vector<CyclotomicNumber>{c(0), c(1), c(0), c(3444), c(0), c(313358)}
            : std::vector<CyclotomicNumber>{c(0), c(1), c(0), c(-2700), c(0), c(-251890)};
        expect_coefficients(r, name + "|gamma_2", at2.expansion, z(4, 1) * c(1, 256), want, 6);
        const CuspExpansion at4 = expansion_at_cusp(f, 8, gamma_d(4), 8);
        const auto coeffs = target.true_coefficients();
        const std::vector<CyclotomicNumber> base(coeffs.begin(), coeffs.begin() + 9);
        expect_coefficients(r, name + "|gamma_4", at4.expansion, c(-1), base, 8);
    }
    return r;
}

Report criterion_f36()
{
    Report r;
    const FormExpression f = expr(solved("f36_k8", 36, 8, r));
    const long B = sturm_bound(36, 8) + 5;
    r.expect(al_eigenvalue(f, 36, {2, 3}, B) == c(1), "W_36 eigenvalue +1");
    r.expect(al_eigenvalue(f, 36, {2}, B) == c(-1), "W_{2} eigenvalue -1");
    r.expect(al_eigenvalue(f, 36, {3}, B) == c(-1), "W_{3} eigenvalue -1");
    return r;
}

Report criterion_f243()
{
    Report r;
    const FormExpression f = expr(solved("f243_k4", 243, 4, r));
    const auto z162 = [](i64 e) { return z(162, e); };
    const auto z54 = [](i64 e) { return z(54, e); };
    const auto z9 = [](i64 e) { return z(9, e); };
    const CyclotomicNumber w = z(3, 1);

    const CuspExpansion e3 = expansion_at_cusp(f, 243, gamma_d(3), 5);
    r.expect(e3.width == 27, "width 27 at 1/3");
    expect_coefficients(r, "f243|gamma_3", e3.expansion, c(1, 729),
                        {c(0), z162(2) - z162(29), c(-3) * z162(31), c(0), z162(8) - z162(35), c(3) * z162(37)}, 5);

    const CuspExpansion e9 = expansion_at_cusp(f, 243, gamma_d(9), 5);
    r.expect(e9.width == 3, "width 3 at 1/9");
    expect_coefficients(r, "f243|gamma_9", e9.expansion, c(1, 9),
                        {c(0), z54(14) - z54(5), c(3) * (z54(1) - z54(10)), c(0), z54(11), c(3) * z54(7)}, 5);

    const CuspExpansion e27 = expansion_at_cusp(f, 243, gamma_d(27), 5);
    r.expect(e27.width == 1, "width 1 at 1/27");
    expect_coefficients(r, "f243|gamma_27", e27.expansion, c(1),
                        {c(0), z9(1), c(-3) * z9(2), c(0), z9(4), c(3) * z9(5)}, 5);

    const CuspExpansion e81 = expansion_at_cusp(f, 243, gamma_d(81), 5);
    r.expect(e81.width == 1, "width 1 at 1/81");
    expect_coefficients(r, "f243|gamma_81", e81.expansion, c(1),
                        {c(0), -(w + c(1)), c(-3) * w, c(0), -(w + c(1)), c(3) * w}, 5);
    return r;
}

Report criterion_ranks()
{
    Report r;
    const Json dims = read_json_file(std::string(EISPROD_FIXTURE_DIR) + "/dimensions.json");
    for (auto [N, k] : {std::pair<u64, int>{1, 12}, {8, 16}, {11, 4}, {32, 4}, {36, 8}, {49, 2}, {243, 4}}) {
        const std::string label = std::to_string(N) + "," + std::to_string(k);
        long expected = -1;
        for (const auto& e : dims.at("spaces"))
            if (e.at("level") == N && e.at("weight") == k)
                expected = e.at("dim_full").get<long>();
        const long rank = static_cast<long>(rank_of_span(N, k, sturm_bound(N, k) + 5));
        r.expect(expected >= 0, "fixture dimension for (" + label + ")");
        r.expect(rank == expected, "rank for (" + label + ") is " + std::to_string(rank) + ", dimension " +
                                       std::to_string(expected));
    }
    return r;
}

Report criterion_level37()
{
    Report r;
    const FourierExpansion f1 = fixture("f37_rank1");
    const SolveResult res1 = solve_represent(f1, 37, 2);
    const auto* cert = std::get_if<NotInSpan>(&res1);
    r.expect(cert != nullptr, "rank-1 form is NotInSpan");
    if (cert)
        r.expect(verify_certificate(*cert, f1, 37, 2), "certificate checks");
    const FourierExpansion f0 = fixture("f37_rank0");
    const SolveResult res0 = solve_represent(f0, 37, 2);
    const auto* rep = std::get_if<ProductRepresentation>(&res0);
    r.expect(rep != nullptr, "rank-0 form is representable");
    if (rep)
        r.expect(verify_representation(*rep, f0, f0.precision()), "rank-0 representation verifies");
    return r;
}

Report criterion_properties()
{
    Report r;
    const std::string cmd = std::string("\"") + EISPROD_UNIT_TESTS +
                            "\" --test-suite=exactmath,characters,qexp,eisenstein,cuspexp --minimal > /dev/null";
    r.expect(std::system(cmd.c_str()) == 0, "property suites report failures");
    return r;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Report()>>> criteria{
        {"Delta identity and two-column solve", criterion_delta},
        {"f11 identity through q^10", criterion_f11},
        {"f32 identity and expansion at 1/8", criterion_f32},
        {"f49 at cusp 0, W_49 eigenvalue, gamma T^m law", criterion_f49},
        {"level 8 weight 16 eigenvalues and expansions at 1/2", criterion_level8},
        {"f36 Atkin-Lehner eigenvalues", criterion_f36},
        {"f243 expansions at 1/3, 1/9, 1/27, 1/81", criterion_f243},
        {"span ranks equal dimensions", criterion_ranks},
        {"level 37 rank-1 certificate and rank-0 representation", criterion_level37},
        {"property suites", criterion_properties},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Report r;
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << (r.failures.empty() ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " ("
             << secs << " s)";
        std::cout << line.str() << '\n';
        for (const auto& f : r.failures)
            std::cout << "    " << f << '\n';
        failed += r.failures.empty() ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
