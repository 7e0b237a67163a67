#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace gebra {

// A scalar symbol: a name plus up to two integer indices, e.g. x, x1, b12.
// Symbols are totally ordered by (name, indices); this order seeds the
// canonical monomial order of the polynomial layer.
struct Sym {
    std::string name;
    std::vector<std::uint32_t> idx;

    Sym() = default;
    explicit Sym(std::string n) : name(std::move(n)) {}
    Sym(std::string n, std::uint32_t i) : name(std::move(n)), idx{i} {}
    Sym(std::string n, std::uint32_t i, std::uint32_t j) : name(std::move(n)), idx{i, j} {}

    friend std::strong_ordering operator<=>(const Sym& a, const Sym& b) {
        if (auto c = a.name <=> b.name; c != 0) return c;
        return a.idx <=> b.idx;
    }
    friend bool operator==(const Sym&, const Sym&) = default;

    // Display form: indices are appended as digits ("b", {1,2}) -> "b12".
    std::string str() const {
        std::string s = name;
        for (auto i : idx) s += std::to_string(i);
        return s;
    }
};

}  // namespace gebra
