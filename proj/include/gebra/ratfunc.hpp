#pragma once

#include <map>
#include <string>

#include "gebra/poly.hpp"

namespace gebra {

// Exact rational function num/den over the multivariate polynomial ring.
// Canonical form: gcd(num, den) = 1, den monic under the monomial order,
// zero represented as 0/1. Equality of canonical forms is structural.
class RatFunc {
  public:
    RatFunc() : num_(), den_(Poly::one()) {}
    explicit RatFunc(long c) : num_(Poly(c)), den_(Poly::one()) {}
    explicit RatFunc(const Rational& c) : num_(Poly(c)), den_(Poly::one()) {}
    explicit RatFunc(const Sym& s) : num_(Poly(s)), den_(Poly::one()) {}
    explicit RatFunc(const Poly& p) : num_(p), den_(Poly::one()) {}
    RatFunc(Poly num, Poly den);  // throws DivisionByZero on zero den

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(1); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;  // throws DivisionByZero
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    RatFunc inv() const;

    friend bool operator==(const RatFunc&, const RatFunc&) = default;

    std::string str() const;

  private:
    Poly num_, den_;
    void normalize();
};

using SubstMap = std::map<Sym, RatFunc>;

// Simultaneous substitution of symbols by rational functions. Throws
// DenominatorVanishes when the substituted denominator is identically zero.
RatFunc subst(const Poly& p, const SubstMap& m);
RatFunc subst(const RatFunc& f, const SubstMap& m);

}  // namespace gebra
