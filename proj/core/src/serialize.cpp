#include "eisprod/serialize.hpp"

#include "eisprod/error.hpp"

#include <cstdio>
#include <fstream>

namespace eisprod {

namespace {

Rational rational_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Rational(Integer(std::to_string(j.get<long long>())));
    if (!j.is_string())
        fail(ErrorKind::parse, "expected a rational string");
    return parse_rational(j.get<std::string>());
}

} // namespace

u64 get_u64(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<long long>() < 0)
        fail(ErrorKind::parse, std::string("missing or invalid field '") + key + "'");
    return j.at(key).get<u64>();
}

void check_schema(const Json& j)
{
    if (j.contains("schema") && j.at("schema") != kSchemaVersion)
        fail(ErrorKind::parse, "unsupported schema version");
}

std::string fnv1a_hex(const std::string& bytes)
{
    u64 h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string expansion_digest(const FourierExpansion& f)
{
    return fnv1a_hex(to_json(f).dump());
}

Json to_json(const CyclotomicNumber& x)
{
    if (x.order() != 1 && x.is_rational())
        return to_json(CyclotomicNumber(x.to_rational()));
    Json c = Json::array();
    for (const auto& q : x.coefficients())
        c.push_back(to_string(q));
    return {{"order", x.order()}, {"coeffs", c}};
}

CyclotomicNumber cyclotomic_from_json(const Json& j)
{
    if (j.is_string() || j.is_number_integer())
        return CyclotomicNumber(rational_from_json(j));
    if (!j.is_object())
        fail(ErrorKind::parse, "expected a cyclotomic number object");
    const u64 m = get_u64(j, "order");
    require(m >= 1, "cyclotomic order must be positive");
    if (!j.contains("coeffs") || !j.at("coeffs").is_array())
        fail(ErrorKind::parse, "cyclotomic number needs a coeffs array");
    std::vector<Rational> c;
    for (const auto& e : j.at("coeffs"))
        c.push_back(rational_from_json(e));
    return CyclotomicNumber::from_polynomial(m, c);
}

Json to_json(const Surd& s)
{
    Json j = to_json(s.value);
    if (s.radicand != 1)
        j["sqrt"] = s.radicand;
    return j;
}

Surd surd_from_json(const Json& j)
{
    u64 r = 1;
    if (j.is_object() && j.contains("sqrt"))
        r = get_u64(j, "sqrt");
    require(r >= 1, "sqrt radicand must be positive");
    return Surd(cyclotomic_from_json(j), r);
}

Json to_json(const DirichletCharacter& chi)
{
    Json j{{"modulus", chi.modulus()}, {"order", chi.order()}, {"exponents", chi.exponents()}};
    if (chi.is_primitive())
        j["ref"] = character_ref(chi);
    return j;
}

DirichletCharacter character_from_json(const Json& j)
{
    if (j.is_string())
        return parse_character_ref(j.get<std::string>());
    if (j.contains("ref"))
        return parse_character_ref(j.at("ref").get<std::string>());
    const u64 N = get_u64(j, "modulus");
    if (!j.contains("exponents"))
        fail(ErrorKind::parse, "character needs a ref or exponents");
    return DirichletCharacter::from_exponents(N, j.at("exponents").get<std::vector<u64>>());
}

Json to_json(const FourierExpansion& f)
{
    Json c = Json::array();
    for (const auto& x : f.coeffs())
        c.push_back(to_json(x));
    Json j{{"schema", kSchemaVersion},
           {"weight", f.weight()},
           {"width", f.width()},
           {"field_order", f.field_order()},
           {"precision", f.precision()},
           {"coeffs", c}};
    if (f.radicand() != 1)
        j["sqrt"] = f.radicand();
    return j;
}

FourierExpansion expansion_from_json(const Json& j)
{
    if (!j.is_object())
        fail(ErrorKind::parse, "expected an expansion object");
    check_schema(j);
    if (!j.contains("weight") || !j.at("weight").is_number_integer())
        fail(ErrorKind::parse, "expansion needs an integer weight");
    const int k = j.at("weight").get<int>();
    const u64 w = j.contains("width") ? get_u64(j, "width") : 1;
    u64 m = j.contains("field_order") ? get_u64(j, "field_order") : 1;
    const u64 r = j.contains("sqrt") ? get_u64(j, "sqrt") : 1;
    if (!j.contains("coeffs") || !j.at("coeffs").is_array())
        fail(ErrorKind::parse, "expansion needs a coeffs array");
    std::vector<CyclotomicNumber> c;
    for (const auto& e : j.at("coeffs")) {
        c.push_back(cyclotomic_from_json(e));
        if (m % c.back().order() != 0)
            m = lcm_u(m, c.back().order());
    }
    if (j.contains("precision") && j.at("precision").get<long>() + 1 != static_cast<long>(c.size()))
        fail(ErrorKind::parse, "precision does not match the number of coefficients");
    return FourierExpansion(k, w, m, std::move(c), r);
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::parse, "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        fail(ErrorKind::parse, path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j, int indent)
{
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out)
            fail(ErrorKind::internal, "cannot write " + tmp);
        out << j.dump(indent) << '\n';
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        fail(ErrorKind::internal, "cannot rename " + tmp);
}

} // namespace eisprod
