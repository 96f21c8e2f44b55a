#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace factorkit {

// Bad argument values: out-of-range vertices, malformed sets, violated preconditions.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Input is well-formed but outside what this build handles (size caps, codec limits).
class CapabilityError : public std::runtime_error {
public:
    explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed graph6 text; carries the byte offset of the first offending byte.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// A documented precondition that cannot be checked up front turned out false,
// e.g. a graph passed as minimal k-factor-critical was not.
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace factorkit
