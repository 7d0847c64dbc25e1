#pragma once

#include <stdexcept>
#include <string>

namespace eisprod {

enum class ErrorKind {
    domain,
    division_by_zero,
    precision,
    parse,
    not_eigenform,
    unverified,
    internal,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, const std::string& what)
{
    if (!cond)
        throw Error(ErrorKind::domain, what);
}

inline void ensure(bool cond, const std::string& what)
{
    if (!cond)
        throw Error(ErrorKind::internal, what);
}

} // namespace eisprod
