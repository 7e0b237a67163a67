#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gebra/context.hpp"
#include "gebra/endo.hpp"

namespace gebra {

// Scalar matrix file: one bracketed row per line, entries in the expression
// DSL, '#' to end of line is a comment. Rows must form a square matrix.
EndoMatrix read_matrix_file(const std::string& path);

// First cell where two matrices differ, rendered canonically.
struct MatrixDiff {
    std::size_t row = 0, col = 0;
    std::string got, want;
};
std::optional<MatrixDiff> first_matrix_diff(const EndoMatrix& got, const EndoMatrix& want);

// "key: value" lines, '#' comments.
std::map<std::string, std::string> read_kv_file(const std::string& path);

// Context file: optional "dim N" line, then sections "B" and "BI", each
// followed by dim bracketed rows of scalar expressions. An omitted section
// defaults to the symbolic form (b(i,j) for B, p(i,j) for BI).
AlgebraContext read_context_file(const std::string& path, std::uint32_t fallback_dim);

// "sym=value,sym=value": values are scalar expressions.
SubstMap parse_bindings(const std::string& spec);

}  // namespace gebra
