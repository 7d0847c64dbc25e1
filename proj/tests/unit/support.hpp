#pragma once

#include "eisprod/serialize.hpp"

#include <string>

inline eisprod::FourierExpansion load_fixture(const std::string& name)
{
    return eisprod::expansion_from_json(eisprod::read_json_file(std::string(EISPROD_FIXTURE_DIR) + "/" + name + ".json"));
}

inline eisprod::Json load_fixture_json(const std::string& name)
{
    return eisprod::read_json_file(std::string(EISPROD_FIXTURE_DIR) + "/" + name + ".json");
}
