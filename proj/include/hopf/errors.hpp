#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopf {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed literal or definition file.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Division by zero, sign of a non-real value, shape mismatch.
class DomainError : public Error {
public:
    using Error::Error;
};

class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

// A structural law failed on the given input (associativity, Hopf laws, ...).
class VerificationError : public Error {
public:
    VerificationError(std::string law, const std::string& detail)
        : Error(law + ": " + detail), law_(std::move(law)) {}
    const std::string& law() const noexcept { return law_; }

private:
    std::string law_;
};

// A check that can only fail when the library itself is wrong.
class InternalError : public Error {
public:
    using Error::Error;
};

class DegreeBoundError : public Error {
public:
    using Error::Error;
};

}  // namespace hopf
