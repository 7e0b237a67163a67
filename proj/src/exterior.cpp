#include <algorithm>

#include "gebra/errors.hpp"
#include "gebra/multivector.hpp"
#include "render.hpp"

namespace gebra {

// ------------------------------------------------------------------ blades

std::string blade_name(std::uint64_t mask) {
    if (mask == 0) return "Id";
    std::string s;
    for (int k = 0; k < 64; ++k)
        if (mask >> k & 1) {
            if (!s.empty()) s += "w";
            s += "e" + std::to_string(k + 1);
        }
    return s;
}

std::string Blade::str() const { return blade_name(mask); }

bool blade_less(std::uint64_t a, std::uint64_t b) {
    int ga = __builtin_popcountll(a), gb = __builtin_popcountll(b);
    if (ga != gb) return ga < gb;
    // lexicographic on ascending generator lists: compare lowest set bits
    while (a && b) {
        int la = __builtin_ctzll(a), lb = __builtin_ctzll(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return false;  // equal
}

int blade_wedge_sign(std::uint64_t a, std::uint64_t b) {
    if (a & b) return 0;
    // count transpositions: generators of a above each generator of b
    int inversions = 0;
    std::uint64_t bb = b;
    while (bb) {
        int k = __builtin_ctzll(bb);
        inversions += __builtin_popcountll(a >> (k + 1));
        bb &= bb - 1;
    }
    return inversions % 2 == 0 ? 1 : -1;
}

std::vector<Blade> blade_basis(std::uint32_t dim) {
    std::vector<Blade> basis;
    basis.reserve(std::size_t(1) << dim);
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << dim); ++m) basis.push_back({dim, m});
    std::sort(basis.begin(), basis.end(),
              [](const Blade& x, const Blade& y) { return blade_less(x.mask, y.mask); });
    return basis;
}

std::size_t blade_index(std::uint32_t dim, std::uint64_t mask) {
    // blades of lower grade come first; within the grade, count
    // lexicographically smaller generator sets
    int g = __builtin_popcountll(mask);
    auto choose = [](std::uint64_t n, std::uint64_t k) -> std::uint64_t {
        if (k > n) return 0;
        std::uint64_t r = 1;
        for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    std::size_t idx = 0;
    for (int k = 0; k < g; ++k) idx += choose(dim, k);
    // combinadic rank in lexicographic order of ascending index tuples
    int prev = 0;  // generators are 1-based positions
    int remaining = g;
    std::uint64_t m = mask;
    while (m) {
        int pos = __builtin_ctzll(m) + 1;
        for (int c = prev + 1; c < pos; ++c) idx += choose(dim - c, remaining - 1);
        prev = pos;
        --remaining;
        m &= m - 1;
    }
    return idx;
}

// ------------------------------------------------------------ multivectors

Multivector::Multivector(std::uint32_t dim, std::uint64_t mask, RatFunc c) : dim_(dim) {
    add_term(mask, c);
}

Multivector Multivector::generator(std::uint32_t dim, std::uint32_t i) {
    return Multivector(dim, std::uint64_t(1) << (i - 1));
}

RatFunc Multivector::coeff(std::uint64_t mask) const {
    auto it = t_.find(mask);
    return it == t_.end() ? RatFunc() : it->second;
}

void Multivector::add_term(std::uint64_t mask, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(mask, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Multivector Multivector::operator-() const {
    Multivector r(dim_);
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
}

Multivector Multivector::operator+(const Multivector& o) const {
    if (dim_ != o.dim_) throw DimMismatch("multivector sum");
    Multivector r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, c);
    return r;
}

Multivector Multivector::operator-(const Multivector& o) const {
    if (dim_ != o.dim_) throw DimMismatch("multivector difference");
    Multivector r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, -c);
    return r;
}

Multivector Multivector::scaled(const RatFunc& c) const {
    Multivector r(dim_);
    if (c.is_zero()) return r;
    for (const auto& [m, cc] : t_) r.t_.emplace(m, cc * c);
    return r;
}

namespace detail {

std::string coeff_piece(const RatFunc& c, const std::string& blade) {
    const Poly& n = c.num();
    if (c.is_polynomial() && n.term_count() == 1) {
        if (n.is_one()) return blade;
        if (n == Poly(-1)) return "-" + blade;
        return n.str() + "*" + blade;
    }
    std::string s = c.str();
    if (!c.is_polynomial() || n.term_count() > 1) s = "(" + c.str() + ")";
    return s + "*" + blade;
}

std::string join_terms(std::vector<std::string> pieces) {
    std::string s;
    for (auto& p : pieces) {
        if (s.empty())
            s = p;
        else if (p.front() == '-')
            s += " - " + p.substr(1);
        else
            s += " + " + p;
    }
    return s;
}

std::string blade_dsl_name(std::uint64_t mask) {
    if (mask == 0) return "Id";
    std::string s;
    while (mask) {
        int k = __builtin_ctzll(mask);
        if (!s.empty()) s += "^";
        s += "e" + std::to_string(k + 1);
        mask &= mask - 1;
    }
    return s;
}

}  // namespace detail

std::string Multivector::str() const {
    if (t_.empty()) return "0";
    std::vector<std::string> pieces;
    for (const auto& [m, c] : t_) pieces.push_back(detail::coeff_piece(c, blade_name(m)));
    return detail::join_terms(std::move(pieces));
}

std::string Multivector::dsl() const {
    if (t_.empty()) return "0";
    std::vector<std::string> pieces;
    for (const auto& [m, c] : t_)
        pieces.push_back(detail::coeff_piece(c, detail::blade_dsl_name(m)));
    return detail::join_terms(std::move(pieces));
}

Multivector wedge(const Multivector& u, const Multivector& v) {
    if (u.dim() != v.dim()) throw DimMismatch("wedge");
    Multivector r(u.dim());
    for (const auto& [ma, ca] : u.terms())
        for (const auto& [mb, cb] : v.terms()) {
            int s = blade_wedge_sign(ma, mb);
            if (s == 0) continue;
            RatFunc c = ca * cb;
            r.add_term(ma | mb, s < 0 ? -c : c);
        }
    return r;
}

Multivector grade_project(const Multivector& u, int k) {
    Multivector r(u.dim());
    for (const auto& [m, c] : u.terms())
        if (__builtin_popcountll(m) == k) r.add_term(m, c);
    return r;
}

RatFunc counit(const Multivector& u) { return u.coeff(0); }

Multivector grade_involution(const Multivector& u) {
    Multivector r(u.dim());
    for (const auto& [m, c] : u.terms())
        r.add_term(m, __builtin_popcountll(m) % 2 ? -c : c);
    return r;
}

RatFunc ev(const Multivector& u, const Multivector& v) {
    if (u.dim() != v.dim()) throw DimMismatch("ev");
    RatFunc r;
    const auto& a = u.terms();
    const auto& b = v.terms();
    for (const auto& [m, c] : a) {
        auto it = b.find(m);
        if (it != b.end()) r += c * it->second;
    }
    return r;
}

Multivector subst(const Multivector& u, const SubstMap& m) {
    Multivector r(u.dim());
    for (const auto& [mask, c] : u.terms()) r.add_term(mask, subst(c, m));
    return r;
}

}  // namespace gebra
