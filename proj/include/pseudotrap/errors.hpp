#ifndef PSEUDOTRAP_ERRORS_HPP
#define PSEUDOTRAP_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pseudotrap {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input document (bad JSON, wrong field types).
class parse_error : public error {
public:
    using error::error;
};

// A structurally valid value that breaks a type invariant.
class validation_error : public error {
public:
    using error::error;
};

// Bad argument to an operation (eps = 0, dimension mismatch, ...).
class argument_error : public error {
public:
    using error::error;
};

// A search or enumeration hit its configured cap. Never a verdict.
class resource_cap_exceeded : public error {
public:
    resource_cap_exceeded(const std::string& what, std::uint64_t cap)
        : error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}

    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::uint64_t cap_;
};

} // namespace pseudotrap

#endif // PSEUDOTRAP_ERRORS_HPP
