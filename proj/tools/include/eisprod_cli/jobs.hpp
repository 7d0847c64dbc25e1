// Jobs of the command line tool: a command name plus JSON parameters.
//
// Parameters by command:
//   eis            phi, psi, l, d (default 1), prec; or id (Eisenstein basis id) and prec
//   product-basis  level, weight
//   represent      level, weight, target (path), out (optional path)
//   rank           level, weight, prec (optional, default Sturm bound + 5)
//   cusp-expand    rep (path), cusp ("a/c" or "infinity") or gamma ([a, b, c, d]), prec (default 20)
//   al-eigenvalue  level, S (list of primes), rep (path), prec (optional, default Sturm bound + 5)
//   verify         rep (path), target (path), prec (optional, default target precision)
#pragma once

#include "eisprod/serialize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eisprod::cli {

struct JobSpec {
    std::string command;
    Json params = Json::object();
    std::optional<std::string> cache_dir;
};

const std::vector<std::string>& command_names();

Json to_json(const JobSpec& job);
JobSpec job_from_json(const Json& j);

// Result document of a job. Throws eisprod::Error on domain, parse and precision errors.
Json run_job(const JobSpec& job);

// Cache key: command and parameters, with input files replaced by digests of their contents.
Json job_cache_key(const JobSpec& job);

} // namespace eisprod::cli
