#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gebra {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("scalar division by zero") {}
};

struct DenominatorVanishes : Error {
    explicit DenominatorVanishes(const std::string& den)
        : Error("substitution sends a denominator to zero: " + den) {}
};

struct NotLinear : Error {
    explicit NotLinear(const std::string& term)
        : Error("equation is not linear in the unknowns, offending term: " + term) {}
};

struct DimMismatch : Error {
    explicit DimMismatch(const std::string& what) : Error("dimension mismatch: " + what) {}
};

struct SlotOutOfRange : Error {
    SlotOutOfRange(std::size_t slot, std::size_t rank)
        : Error("slot " + std::to_string(slot) + " out of range for rank " +
                std::to_string(rank)) {}
};

struct RankMismatch : Error {
    RankMismatch(std::size_t want, std::size_t got)
        : Error("tensor rank mismatch: expected " + std::to_string(want) + ", got " +
                std::to_string(got)) {}
};

struct MixedRank : Error {
    MixedRank(std::size_t a, std::size_t b)
        : Error("cannot combine tensors of rank " + std::to_string(a) + " and " +
                std::to_string(b)) {}
};

struct RecursionNotGrounded : Error {
    explicit RecursionNotGrounded(const std::string& element)
        : Error("antipode recursion references an unresolved equal-or-higher basis element: " +
                element) {}
};

// Raised by the expression parser; carries the byte offset of the failure and a
// description of what would have been accepted there.
struct ParseError : Error {
    std::size_t offset;
    std::string expected;
    ParseError(std::size_t off, const std::string& exp)
        : Error("parse error at offset " + std::to_string(off) + ": expected " + exp),
          offset(off),
          expected(exp) {}
};

struct EvalError : Error {
    using Error::Error;
};

struct TypeMismatch : EvalError {
    explicit TypeMismatch(const std::string& what) : EvalError("type mismatch: " + what) {}
};

struct ArityError : EvalError {
    ArityError(const std::string& fn, std::size_t got)
        : EvalError("wrong number of arguments for " + fn + " (got " + std::to_string(got) +
                    ")") {}
};

}  // namespace gebra
