#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gebra/rational.hpp"
#include "gebra/sym.hpp"

namespace gebra {

// A power product of symbols with positive exponents, kept sorted by symbol.
class Monomial {
  public:
    using Factor = std::pair<Sym, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(const Sym& s, std::uint32_t e = 1);

    static const Monomial& unit();

    const std::vector<Factor>& factors() const { return f_; }
    bool is_unit() const { return f_.empty(); }
    std::uint64_t total_degree() const;
    std::uint32_t degree_in(const Sym& s) const;

    Monomial times(const Monomial& o) const;
    // Exact quotient; false when o does not divide *this.
    bool divided_by(const Monomial& o, Monomial& out) const;
    // Splits into (factors whose symbol is in `syms`, the rest).
    std::pair<Monomial, Monomial> split(const std::set<Sym>& syms) const;

    // Graded order, lexicographic tie-break with earlier symbols dominating.
    static std::strong_ordering cmp(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string str() const;  // "b11^2*p12" ; unit renders as "1"

  private:
    std::vector<Factor> f_;
    friend class Poly;
};

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::cmp(a, b) < 0;
    }
};

// Sparse multivariate polynomial with rational coefficients, canonical by
// construction: terms ordered by the monomial order, no zero coefficients.
class Poly {
  public:
    using TermMap = std::map<Monomial, Rational, MonomialLess>;

    Poly() = default;
    explicit Poly(const Rational& c);
    explicit Poly(long c) : Poly(Rational(c)) {}
    explicit Poly(const Sym& s);
    Poly(const Monomial& m, const Rational& c);

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(1); }

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    // Constant term value (zero polynomial -> 0); only meaningful with is_constant().
    Rational constant_value() const;

    const TermMap& terms() const { return t_; }
    std::size_t term_count() const { return t_.size(); }

    const Monomial& leading_monomial() const;  // largest in the monomial order
    const Rational& leading_coeff() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);

    Poly mul_term(const Monomial& m, const Rational& c) const;
    Poly mul_rat(const Rational& c) const;

    friend bool operator==(const Poly&, const Poly&) = default;

    std::set<Sym> vars() const;
    std::uint32_t degree_in(const Sym& s) const;

    // Coefficient polynomials of powers of s: result[k] multiplies s^k.
    std::map<std::uint32_t, Poly> univariate_view(const Sym& s) const;

    // Exact polynomial division; false when d does not divide *this.
    bool exact_div(const Poly& d, Poly& quotient) const;

    // Divides by the leading coefficient, making the polynomial monic under
    // the canonical monomial order. Zero stays zero.
    Poly monic() const;

    std::string str() const;

    void add_term(const Monomial& m, const Rational& c);  // merges, prunes zeros

  private:
    TermMap t_;
};

// Gcd normalized to be monic under the canonical monomial order.
// gcd(0, 0) = 0; otherwise nonzero.
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace gebra
