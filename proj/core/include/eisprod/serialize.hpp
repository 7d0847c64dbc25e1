// JSON encodings. Every top-level document carries "schema": 1.
#pragma once

#include "eisprod/qexp.hpp"

#include "json.hpp"

#include <string>

namespace eisprod {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const CyclotomicNumber& x);
CyclotomicNumber cyclotomic_from_json(const Json& j);

Json to_json(const Surd& s);
Surd surd_from_json(const Json& j);

Json to_json(const DirichletCharacter& chi);
DirichletCharacter character_from_json(const Json& j);

Json to_json(const FourierExpansion& f);
FourierExpansion expansion_from_json(const Json& j);

// Field accessors raising ErrorKind::parse on missing or malformed input.
u64 get_u64(const Json& j, const char* key);
void check_schema(const Json& j);

// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);
// Digest of the canonical JSON encoding of an expansion.
std::string expansion_digest(const FourierExpansion& f);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j, int indent = 2);

} // namespace eisprod
