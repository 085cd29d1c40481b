#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace affperm {

using Int = std::int64_t;

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidModulus : public Error {
public:
    explicit InvalidModulus(int e)
        : Error("invalid modulus e=" + std::to_string(e) + " (need e >= 2)") {}
};

// Input outside the domain an operation is defined on (non-e-core, bad charge, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class PreconditionViolation : public Error {
public:
    using Error::Error;
};

class ModulusMismatch : public Error {
public:
    ModulusMismatch(int a, int b)
        : Error("modulus mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

// An exponential routine refused to run past its configured size cap.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

enum class WindowViolation { wrong_length, sum_mismatch, repeated_residue };

class ValidationError : public Error {
public:
    ValidationError(WindowViolation kind, const std::string& what) : Error(what), kind_(kind) {}
    WindowViolation kind() const noexcept { return kind_; }

private:
    WindowViolation kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error("parse error at position " + std::to_string(position) + ": " + what),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

inline void check_modulus(int e) {
    if (e < 2) throw InvalidModulus(e);
}

// Euclidean remainder in [0, e).
constexpr Int mod(Int x, Int e) {
    Int r = x % e;
    return r < 0 ? r + e : r;
}

constexpr Int floor_div(Int x, Int e) {
    Int q = x / e;
    return (x % e != 0 && ((x < 0) != (e < 0))) ? q - 1 : q;
}

} // namespace affperm
