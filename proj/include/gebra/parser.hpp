#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gebra/rational.hpp"
#include "gebra/sym.hpp"

namespace gebra {

// Abstract syntax of the expression DSL.
//
//   expr   := '-'? term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := atom ('^' exponent)*        exponent: digits, or e-digits when
//                                         the atom is a blade being extended
//   atom   := number | symbol | blade | call | '(' expr ')'
//   blade  := 'Id' | 'e' digits ('^' 'e' digits)*
//   call   := name ('[' form ']')? '(' expr (',' expr)* ')'
//
// Trailing digits of a symbol bind as indices: one digit is one index, two
// digits are two single-digit indices ("b12" -> b(1,2)); longer runs are
// rejected as ambiguous. An identifier that starts like a blade but is not
// one ("e1we2") is rejected with a hint to use '^'.
struct Expr {
    enum class Kind { Number, Symbol, Blade, Call, Neg, Add, Sub, Mul, Div, Pow };

    Kind kind = Kind::Number;
    Rational value;                   // Number
    Sym sym;                          // Symbol
    std::vector<std::uint32_t> gens;  // Blade: generator indices, empty = Id
    std::string name;                 // Call
    std::string form_tag;             // Call: optional [form] tag, empty if absent
    std::vector<Expr> args;           // Call arguments / operator operands
};

// Parses one expression spanning the whole input; throws ParseError.
Expr parse(const std::string& src);

}  // namespace gebra
