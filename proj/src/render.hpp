#pragma once

#include <string>
#include <vector>

#include "gebra/ratfunc.hpp"

namespace gebra::detail {

// "c*blade" with the conventional shortcuts: unit coefficients vanish, a
// negative unit becomes a leading minus, multi-term coefficients get parens.
std::string coeff_piece(const RatFunc& c, const std::string& blade);

// Joins rendered terms with " + " / " - ".
std::string join_terms(std::vector<std::string> pieces);

// Parseable blade spelling: "Id", "e1", "e1^e2", ...
std::string blade_dsl_name(std::uint64_t mask);

}  // namespace gebra::detail
