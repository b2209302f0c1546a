#pragma once

#include <stdexcept>
#include <string>

namespace speclab {

inline constexpr const char* version_string = "0.1.0";

// Error kinds mirror the C API status codes; keep the two lists in sync.
enum class errc {
    invalid_argument = 1,
    size_cap_exceeded = 2,
    no_convergence = 3,
    domain_escape = 4,
    refused = 5,
    io_failure = 6,
};

class Error : public std::runtime_error {
public:
    Error(errc kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    errc kind() const { return kind_; }

private:
    errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& msg) { throw Error(kind, msg); }

inline void require(bool cond, errc kind, const std::string& msg) {
    if (!cond) fail(kind, msg);
}

} // namespace speclab
