#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace galmeas {

// Every failure carries a stable machine-readable code naming the violated
// invariant, plus a human-readable message. The CLI maps the three families
// onto distinct exit codes.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Bad input data or violated precondition (CLI exit 2).
class ValidationError : public Error {
public:
    using Error::Error;
};

// A configured cap was exceeded (CLI exit 3).
class ResourceError : public Error {
public:
    using Error::Error;
};

// Malformed command line (CLI exit 64).
class UsageError : public Error {
public:
    UsageError(const std::string& what) : Error("Usage", what) {}
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
    throw ValidationError(code, code + ": " + msg);
}

[[noreturn]] inline void fail_cap(const std::string& code, const std::string& msg) {
    throw ResourceError(code, code + ": " + msg);
}

// Hard caps on exhaustive work. All defaults follow the documented contract;
// the CLI lets callers raise or lower them per invocation.
struct Limits {
    long long max_group_order = 2000;
    long long max_subgroups = 100000;
    long long max_enumeration = 10000000;  // tuples visited by any direct enumeration
};

}  // namespace galmeas
