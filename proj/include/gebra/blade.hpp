#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gebra {

// Basis blade of the exterior algebra over `dim` generators, stored as a bit
// mask: bit k set means generator e(k+1) is a factor. The empty mask is the
// algebra unit Id.
struct Blade {
    std::uint32_t dim = 0;
    std::uint64_t mask = 0;

    int grade() const { return __builtin_popcountll(mask); }
    std::string str() const;  // "Id", "e1", "e1we2", ...

    friend bool operator==(const Blade&, const Blade&) = default;
};

// Graded order, lexicographic on ascending generator sequences within a grade.
bool blade_less(std::uint64_t a, std::uint64_t b);

// Sign of e_a ^ e_b relative to the canonical ascending blade; 0 on overlap.
int blade_wedge_sign(std::uint64_t a, std::uint64_t b);

// All 2^dim basis blades in canonical order: Id, e1, ..., en, e1we2, ...
std::vector<Blade> blade_basis(std::uint32_t dim);

// Position of a blade in the canonical basis order.
std::size_t blade_index(std::uint32_t dim, std::uint64_t mask);

std::string blade_name(std::uint64_t mask);

}  // namespace gebra
