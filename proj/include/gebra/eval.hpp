#pragma once

#include <string>
#include <variant>

#include "gebra/context.hpp"
#include "gebra/hopf.hpp"
#include "gebra/parser.hpp"

namespace gebra {

// What an expression can evaluate to: a scalar, an algebra element, or a
// tensor-power element.
using Value = std::variant<RatFunc, Multivector, TensorPoly>;

// Evaluates the syntax tree against an algebra context. Slot and grade
// arguments must be integer literals. Throws TypeMismatch, ArityError, or
// EvalError on vocabulary violations.
Value evaluate(const Expr& e, const AlgebraContext& ctx);
Value evaluate_str(const std::string& src, const AlgebraContext& ctx);

std::string value_str(const Value& v);
std::string value_dsl(const Value& v);
Value value_subst(const Value& v, const SubstMap& m);

}  // namespace gebra
