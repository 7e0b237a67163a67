#pragma once

#include <functional>
#include <map>
#include <string>

#include "gebra/blade.hpp"
#include "gebra/ratfunc.hpp"

namespace gebra {

// Element of the exterior algebra: a finite sum of basis blades with
// rational-function coefficients. Canonical by construction (ordered terms,
// zero coefficients pruned).
class Multivector {
  public:
    struct BladeLess {
        bool operator()(std::uint64_t a, std::uint64_t b) const { return blade_less(a, b); }
    };
    using TermMap = std::map<std::uint64_t, RatFunc, BladeLess>;

    explicit Multivector(std::uint32_t dim = 0) : dim_(dim) {}
    Multivector(std::uint32_t dim, std::uint64_t mask, RatFunc c = RatFunc::one());

    static Multivector zero(std::uint32_t dim) { return Multivector(dim); }
    static Multivector unit(std::uint32_t dim) { return Multivector(dim, 0); }
    static Multivector generator(std::uint32_t dim, std::uint32_t i);  // e_i, 1-based

    std::uint32_t dim() const { return dim_; }
    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    RatFunc coeff(std::uint64_t mask) const;
    void add_term(std::uint64_t mask, const RatFunc& c);

    Multivector operator-() const;
    Multivector operator+(const Multivector& o) const;
    Multivector operator-(const Multivector& o) const;
    Multivector scaled(const RatFunc& c) const;

    friend bool operator==(const Multivector&, const Multivector&) = default;

    std::string str() const;  // "x1*Id + x2*e1 - e1we2"
    std::string dsl() const;  // same value in parseable syntax, blades as e1^e2

  private:
    std::uint32_t dim_;
    TermMap t_;
};

// Exterior product.
Multivector wedge(const Multivector& u, const Multivector& v);

// Projection onto the grade-k component.
Multivector grade_project(const Multivector& u, int k);

// Coefficient of Id.
RatFunc counit(const Multivector& u);

// Main involution: grade-k parts pick up (-1)^k.
Multivector grade_involution(const Multivector& u);

// Kronecker evaluation pairing of basis blades, extended bilinearly.
RatFunc ev(const Multivector& u, const Multivector& v);

// Applies a substitution to every coefficient.
Multivector subst(const Multivector& u, const SubstMap& m);

using EndoFn = std::function<Multivector(const Multivector&)>;
using ProductFn = std::function<Multivector(const Multivector&, const Multivector&)>;
using PairingFn = std::function<RatFunc(const Multivector&, const Multivector&)>;

}  // namespace gebra
