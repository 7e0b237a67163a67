#pragma once

#include <set>
#include <vector>

#include "gebra/ratfunc.hpp"

namespace gebra {

enum class SolveKind { Unique, Parametric, Inconsistent };

// Result of solving a linear system over the rational-function field.
// For Unique and Parametric, `assignment` maps every unknown to its value;
// free unknowns map to themselves and are also listed in `free_unknowns`.
struct SolveResult {
    SolveKind kind = SolveKind::Inconsistent;
    SubstMap assignment;
    std::set<Sym> free_unknowns;
};

// Solves `eqs` (each polynomial understood as "= 0") for `unknowns` by
// Gaussian elimination over the rational-function field of the remaining
// symbols. Pivots are chosen by fewest numerator terms. Throws NotLinear if
// any equation has joint degree >= 2 in the unknowns. The solution is
// residual-checked against the original equations before returning.
SolveResult solve_linear(const std::vector<Poly>& eqs, const std::vector<Sym>& unknowns);

}  // namespace gebra
