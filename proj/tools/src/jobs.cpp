#include "eisprod_cli/jobs.hpp"

#include "eisprod/error.hpp"
#include "eisprod/solver.hpp"
#include "eisprod_cli/cache.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace eisprod::cli {

namespace {

long get_long(const Json& p, const char* key)
{
    if (!p.contains(key) || !p.at(key).is_number_integer())
        fail(ErrorKind::parse, std::string("missing or invalid parameter '") + key + "'");
    return p.at(key).get<long>();
}

long get_long_or(const Json& p, const char* key, long fallback)
{
    return p.contains(key) ? get_long(p, key) : fallback;
}

std::string get_string(const Json& p, const char* key)
{
    if (!p.contains(key) || !p.at(key).is_string())
        fail(ErrorKind::parse, std::string("missing or invalid parameter '") + key + "'");
    return p.at(key).get<std::string>();
}

int get_weight(const Json& p)
{
    const long k = get_long(p, "weight");
    require(k >= 2 && k % 2 == 0 && k < 1000, "weight must be even and at least 2");
    return static_cast<int>(k);
}

u64 get_level(const Json& p)
{
    const long N = get_long(p, "level");
    require(N >= 1, "level must be positive");
    return static_cast<u64>(N);
}

long get_precision(const Json& p, long fallback)
{
    const long B = get_long_or(p, "prec", fallback);
    require(B >= 0, "precision must be nonnegative");
    return B;
}

std::string file_bytes(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorKind::parse, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

FourierExpansion load_expansion(const std::string& path)
{
    try {
        return expansion_from_json(read_json_file(path));
    } catch (const Error& e) {
        if (std::string(e.what()).rfind(path, 0) == 0)
            throw;
        fail(e.kind(), path + ": " + e.what());
    } catch (const Json::exception& e) {
        fail(ErrorKind::parse, path + ": " + e.what());
    }
}

ProductRepresentation load_representation(const std::string& path)
{
    try {
        return representation_from_json(read_json_file(path));
    } catch (const Error& e) {
        if (std::string(e.what()).rfind(path, 0) == 0)
            throw;
        fail(e.kind(), path + ": " + e.what());
    } catch (const Json::exception& e) {
        fail(ErrorKind::parse, path + ": " + e.what());
    }
}

Json header(const std::string& command)
{
    return Json{{"schema", kSchemaVersion}, {"command", command}};
}

Json run_eis(const Json& p)
{
    const long B = get_precision(p, 20);
    Json out = header("eis");
    FourierExpansion f;
    if (p.contains("id")) {
        const EisBasisElement e = parse_eis_basis_id(get_string(p, "id"));
        f = eis_basis_expansion(e, B);
        out["label"] = e.id();
    } else {
        EisLabel label;
        label.phi = character_from_json(p.contains("phi") ? p.at("phi") : Json("1"));
        label.psi = character_from_json(p.contains("psi") ? p.at("psi") : Json("1"));
        label.l = static_cast<int>(get_long(p, "l"));
        label.d = static_cast<u64>(get_long_or(p, "d", 1));
        require(label.d >= 1, "lift parameter must be positive");
        f = eis_expansion(label, B);
        out["label"] = to_string(label);
    }
    out["constant_term"] = f.true_coefficients().at(0).to_string();
    out["expansion"] = to_json(f);
    return out;
}

Json run_product_basis(const Json& p)
{
    const u64 N = get_level(p);
    const int k = get_weight(p);
    Json gens = Json::array();
    for (const auto& g : enumerate_generators(N, k))
        gens.push_back(to_json(g));
    Json eis = Json::array();
    for (const auto& e : eisenstein_space_elements(N, k))
        eis.push_back(e.id());
    Json out = header("product-basis");
    out["level"] = N;
    out["weight"] = k;
    out["generator_count"] = gens.size();
    out["generators"] = gens;
    out["eisenstein"] = eis;
    return out;
}

Json run_represent(const Json& p)
{
    const u64 N = get_level(p);
    const int k = get_weight(p);
    const FourierExpansion target = load_expansion(get_string(p, "target"));
    const SolveResult res = solve_represent(target, N, k);
    Json out = header("represent");
    if (const auto* rep = std::get_if<ProductRepresentation>(&res)) {
        out["in_span"] = true;
        out["representation"] = to_json(*rep);
    } else {
        out["in_span"] = false;
        out["certificate"] = to_json(std::get<NotInSpan>(res));
    }
    return out;
}

Json run_rank(const Json& p)
{
    const u64 N = get_level(p);
    const int k = get_weight(p);
    const long B = get_precision(p, sturm_bound(N, k) + 5);
    const std::size_t r = rank_of_span(N, k, B);
    const long dim = dimension_modular_forms(N, k);
    Json out = header("rank");
    out["level"] = N;
    out["weight"] = k;
    out["precision"] = B;
    out["rank"] = r;
    out["dimension"] = dim;
    out["spans_full_space"] = static_cast<long>(r) == dim;
    return out;
}

UnimodularMatrix gamma_for_cusp(const std::string& cusp)
{
    if (cusp == "infinity" || cusp == "oo")
        return UnimodularMatrix::identity();
    const Rational x = parse_rational(cusp);
    const i64 a = x.get_num().get_si(), c = x.get_den().get_si();
    // a d - b c = 1
    const Bezout bz = ext_gcd(a, c);
    i64 d = bz.x, b = -bz.y;
    if (bz.g < 0) {
        d = -d;
        b = -b;
    }
    return UnimodularMatrix(a, b, c, d);
}

Json matrix_json(const UnimodularMatrix& g)
{
    return Json::array({g.a, g.b, g.c, g.d});
}

Json run_cusp_expand(const Json& p)
{
    const ProductRepresentation rep = load_representation(get_string(p, "rep"));
    const long B = get_precision(p, 20);
    UnimodularMatrix gamma;
    if (p.contains("gamma")) {
        const Json& g = p.at("gamma");
        if (!g.is_array() || g.size() != 4)
            fail(ErrorKind::parse, "gamma must be a list of four integers");
        gamma = UnimodularMatrix(g[0].get<i64>(), g[1].get<i64>(), g[2].get<i64>(), g[3].get<i64>());
    } else {
        gamma = gamma_for_cusp(p.contains("cusp") ? get_string(p, "cusp") : "infinity");
    }
    const u64 N = p.contains("level") ? get_level(p) : rep.level;
    require(N % rep.level == 0, "level must be a multiple of the representation level");
    const CuspExpansion ce = expansion_at_cusp(rep.expression(), N, gamma, B);
    Json out = header("cusp-expand");
    out["level"] = N;
    out["cusp"] = ce.infinite ? std::string("infinity") : to_string(ce.cusp);
    out["gamma"] = matrix_json(gamma);
    out["width"] = ce.width;
    out["minimal_width"] = ce.minimal_width;
    out["expansion"] = to_json(ce.expansion);
    return out;
}

std::set<u64> prime_set(const Json& p, u64 N)
{
    if (!p.contains("S"))
        fail(ErrorKind::parse, "missing parameter 'S'");
    const Json& s = p.at("S");
    std::set<u64> S;
    if (s.is_string() && s.get<std::string>() == "all") {
        for (u64 q : prime_divisors(N))
            S.insert(q);
        return S;
    }
    if (!s.is_array())
        fail(ErrorKind::parse, "'S' must be a list of primes or \"all\"");
    for (const auto& e : s) {
        if (!e.is_number_integer() || e.get<long>() < 2)
            fail(ErrorKind::parse, "'S' must contain primes");
        S.insert(e.get<u64>());
    }
    return S;
}

Json run_al_eigenvalue(const Json& p)
{
    const u64 N = get_level(p);
    const ProductRepresentation rep = load_representation(get_string(p, "rep"));
    require(N % rep.level == 0, "level must be a multiple of the representation level");
    const std::set<u64> S = prime_set(p, N);
    const long B = get_precision(p, sturm_bound(N, rep.weight) + 5);
    const CyclotomicNumber lambda = al_eigenvalue(rep.expression(), N, S, B);
    Json out = header("al-eigenvalue");
    out["level"] = N;
    out["S"] = Json(std::vector<u64>(S.begin(), S.end()));
    out["precision"] = B;
    out["eigenvalue"] = lambda.to_string();
    out["eigenvalue_exact"] = to_json(lambda);
    return out;
}

Json run_verify(const Json& p)
{
    const ProductRepresentation rep = load_representation(get_string(p, "rep"));
    const FourierExpansion target = load_expansion(get_string(p, "target"));
    const long B = get_precision(p, target.precision());
    Json out = header("verify");
    out["precision"] = B;
    out["verified"] = verify_representation(rep, target, B);
    return out;
}

Json dispatch(const JobSpec& job)
{
    const Json& p = job.params;
    if (job.command == "eis")
        return run_eis(p);
    if (job.command == "product-basis")
        return run_product_basis(p);
    if (job.command == "represent")
        return run_represent(p);
    if (job.command == "rank")
        return run_rank(p);
    if (job.command == "cusp-expand")
        return run_cusp_expand(p);
    if (job.command == "al-eigenvalue")
        return run_al_eigenvalue(p);
    if (job.command == "verify")
        return run_verify(p);
    fail(ErrorKind::parse, "unknown command '" + job.command + "'");
}

const char* const kFileParams[] = {"target", "rep"};

} // namespace

const std::vector<std::string>& command_names()
{
    static const std::vector<std::string> names{"eis",           "product-basis", "represent", "rank",
                                                "cusp-expand", "al-eigenvalue", "verify"};
    return names;
}

Json to_json(const JobSpec& job)
{
    Json j{{"schema", kSchemaVersion}, {"command", job.command}, {"params", job.params}};
    if (job.cache_dir)
        j["cache_dir"] = *job.cache_dir;
    return j;
}

JobSpec job_from_json(const Json& j)
{
    check_schema(j);
    if (!j.is_object() || !j.contains("command") || !j.at("command").is_string())
        fail(ErrorKind::parse, "job needs a 'command' string");
    JobSpec job;
    job.command = j.at("command").get<std::string>();
    if (j.contains("params")) {
        if (!j.at("params").is_object())
            fail(ErrorKind::parse, "'params' must be an object");
        job.params = j.at("params");
    }
    if (j.contains("cache_dir") && j.at("cache_dir").is_string())
        job.cache_dir = j.at("cache_dir").get<std::string>();
    return job;
}

Json job_cache_key(const JobSpec& job)
{
    Json params = job.params;
    params.erase("out");
    for (const char* key : kFileParams)
        if (params.contains(key) && params.at(key).is_string())
            params[key] = Json{{"digest", fnv1a_hex(file_bytes(params.at(key).get<std::string>()))}};
    return Json{{"schema", kSchemaVersion}, {"command", job.command}, {"params", params}};
}

Json run_job(const JobSpec& job)
{
    const auto& names = command_names();
    if (std::find(names.begin(), names.end(), job.command) == names.end())
        fail(ErrorKind::parse, "unknown command '" + job.command + "'");
    Json result;
    if (job.command == "verify") {
        result = dispatch(job);
    } else {
        ResultCache cache(job.cache_dir.value_or(""), &std::cerr);
        const Json key = cache.enabled() ? job_cache_key(job) : Json();
        result = cache.get_or_compute(key, [&] { return dispatch(job); });
    }
    if (job.command == "represent" && job.params.contains("out")) {
        const std::string out = get_string(job.params, "out");
        write_json_file(out, result.value("in_span", false) ? result.at("representation") : result.at("certificate"));
    }
    return result;
}

} // namespace eisprod::cli
