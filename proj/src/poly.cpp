#include "gebra/poly.hpp"

#include <algorithm>

#include "gebra/errors.hpp"

namespace gebra {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(const Sym& s, std::uint32_t e) {
    if (e > 0) f_.push_back({s, e});
}

const Monomial& Monomial::unit() {
    static const Monomial m;
    return m;
}

std::uint64_t Monomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [s, e] : f_) d += e;
    return d;
}

std::uint32_t Monomial::degree_in(const Sym& s) const {
    for (const auto& [t, e] : f_)
        if (t == s) return e;
    return 0;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    r.f_.reserve(f_.size() + o.f_.size());
    auto ia = f_.begin(), ib = o.f_.begin();
    while (ia != f_.end() && ib != o.f_.end()) {
        if (ia->first < ib->first)
            r.f_.push_back(*ia++);
        else if (ib->first < ia->first)
            r.f_.push_back(*ib++);
        else {
            r.f_.push_back({ia->first, ia->second + ib->second});
            ++ia, ++ib;
        }
    }
    r.f_.insert(r.f_.end(), ia, f_.end());
    r.f_.insert(r.f_.end(), ib, o.f_.end());
    return r;
}

bool Monomial::divided_by(const Monomial& o, Monomial& out) const {
    Monomial r;
    auto ia = f_.begin();
    auto ib = o.f_.begin();
    while (ib != o.f_.end()) {
        while (ia != f_.end() && ia->first < ib->first) r.f_.push_back(*ia++);
        if (ia == f_.end() || ib->first < ia->first || ia->second < ib->second) return false;
        if (ia->second > ib->second) r.f_.push_back({ia->first, ia->second - ib->second});
        ++ia, ++ib;
    }
    r.f_.insert(r.f_.end(), ia, f_.end());
    out = std::move(r);
    return true;
}

std::pair<Monomial, Monomial> Monomial::split(const std::set<Sym>& syms) const {
    Monomial in, rest;
    for (const auto& fac : f_)
        (syms.count(fac.first) ? in : rest).f_.push_back(fac);
    return {in, rest};
}

std::strong_ordering Monomial::cmp(const Monomial& a, const Monomial& b) {
    if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
    auto ia = a.f_.begin(), ib = b.f_.begin();
    while (ia != a.f_.end() && ib != b.f_.end()) {
        // A positive power on an earlier symbol dominates.
        if (ia->first < ib->first) return std::strong_ordering::greater;
        if (ib->first < ia->first) return std::strong_ordering::less;
        if (ia->second != ib->second) return ia->second <=> ib->second;
        ++ia, ++ib;
    }
    if (ia != a.f_.end()) return std::strong_ordering::greater;
    if (ib != b.f_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

std::string Monomial::str() const {
    if (f_.empty()) return "1";
    std::string s;
    for (const auto& [sym, e] : f_) {
        if (!s.empty()) s += "*";
        s += sym.str();
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(const Rational& c) {
    if (c != 0) t_.emplace(Monomial::unit(), c);
}

Poly::Poly(const Sym& s) { t_.emplace(Monomial(s), Rational(1)); }

Poly::Poly(const Monomial& m, const Rational& c) {
    if (c != 0) t_.emplace(m, c);
}

bool Poly::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_unit());
}

bool Poly::is_one() const {
    return t_.size() == 1 && t_.begin()->first.is_unit() && t_.begin()->second == 1;
}

Rational Poly::constant_value() const {
    auto it = t_.find(Monomial::unit());
    return it == t_.end() ? Rational(0) : it->second;
}

const Monomial& Poly::leading_monomial() const { return t_.rbegin()->first; }
const Rational& Poly::leading_coeff() const { return t_.rbegin()->second; }

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [ma, ca] : t_)
        for (const auto& [mb, cb] : o.t_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

Poly Poly::mul_term(const Monomial& m, const Rational& c) const {
    Poly r;
    if (c == 0) return r;
    for (const auto& [mm, cc] : t_) r.t_.emplace(mm.times(m), cc * c);
    return r;
}

Poly Poly::mul_rat(const Rational& c) const {
    Poly r;
    if (c == 0) return r;
    for (const auto& [m, cc] : t_) r.t_.emplace(m, cc * c);
    return r;
}

std::set<Sym> Poly::vars() const {
    std::set<Sym> v;
    for (const auto& [m, c] : t_)
        for (const auto& [s, e] : m.factors()) v.insert(s);
    return v;
}

std::uint32_t Poly::degree_in(const Sym& s) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m.degree_in(s));
    return d;
}

std::map<std::uint32_t, Poly> Poly::univariate_view(const Sym& s) const {
    std::map<std::uint32_t, Poly> view;
    for (const auto& [m, c] : t_) {
        Monomial rest;
        std::uint32_t k = 0;
        Monomial kth(s, m.degree_in(s));
        m.divided_by(kth, rest);
        k = m.degree_in(s);
        view[k].add_term(rest, c);
    }
    return view;
}

bool Poly::exact_div(const Poly& d, Poly& quotient) const {
    if (d.is_zero()) throw DivisionByZero();
    Poly q, r = *this;
    while (!r.is_zero()) {
        Monomial m;
        if (!r.leading_monomial().divided_by(d.leading_monomial(), m)) return false;
        Rational c = r.leading_coeff() / d.leading_coeff();
        q.add_term(m, c);
        r -= d.mul_term(m, c);
    }
    quotient = std::move(q);
    return true;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return mul_rat(1 / leading_coeff());
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c < 0 ? Rational(-c) : c;
        std::string piece;
        if (m.is_unit())
            piece = rational_str(a);
        else if (a == 1)
            piece = m.str();
        else
            piece = rational_str(a) + "*" + m.str();
        if (s.empty())
            s = (c < 0 ? "-" : "") + piece;
        else
            s += (c < 0 ? " - " : " + ") + piece;
    }
    return s;
}

// --------------------------------------------------------------------- gcd
//
// Multivariate gcd by recursive content / primitive-part reduction: view both
// polynomials as univariate in a chosen symbol with polynomial coefficients,
// pull out contents (recursive gcd of coefficients), and run a primitive
// pseudo-remainder Euclid loop on the primitive parts.

namespace {

Poly content_of(const std::map<std::uint32_t, Poly>& view) {
    Poly g;
    for (const auto& [k, coeff] : view) g = poly_gcd(g, coeff);
    return g;
}

// Pseudo-remainder of a by b in the symbol s (deg_s(a) >= deg_s(b) >= 1).
// The result differs from the true remainder by a power of lc(b): harmless
// here since callers take primitive parts immediately.
Poly pseudo_rem(Poly a, const Poly& b, const Sym& s) {
    auto bv = b.univariate_view(s);
    const std::uint32_t db = bv.rbegin()->first;
    const Poly& lb = bv.rbegin()->second;
    while (!a.is_zero()) {
        auto av = a.univariate_view(s);
        const std::uint32_t da = av.rbegin()->first;
        if (da < db) break;
        const Poly& la = av.rbegin()->second;
        // a <- lb*a - la*s^(da-db)*b
        a = a * lb - (b * la).mul_term(Monomial(s, da - db), Rational(1));
    }
    return a;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly::one();

    auto va = a.vars();
    auto vb = b.vars();

    // Prefer a symbol both polynomials contain; gcd is then genuinely
    // univariate in it. Otherwise strip the one-sided variable via contents.
    Sym main;
    bool have_common = false;
    std::uint32_t best = 0;
    for (const auto& s : va) {
        if (!vb.count(s)) continue;
        std::uint32_t d = std::min(a.degree_in(s), b.degree_in(s));
        if (!have_common || d < best) {
            main = s;
            best = d;
            have_common = true;
        }
    }
    if (!have_common) {
        // No shared variable: the gcd divides both regardless of either
        // one-sided variable, so reduce through the content of one of them.
        const Sym& s = *va.begin();
        auto view = a.univariate_view(s);
        return poly_gcd(content_of(view), b);
    }

    auto av = a.univariate_view(main);
    auto bv = b.univariate_view(main);
    Poly ca = content_of(av);
    Poly cb = content_of(bv);
    Poly cg = poly_gcd(ca, cb);

    Poly pa, pb;
    a.exact_div(ca, pa);
    b.exact_div(cb, pb);

    // Primitive Euclid loop in `main`.
    if (pa.degree_in(main) < pb.degree_in(main)) std::swap(pa, pb);
    while (!pb.is_zero() && pb.degree_in(main) > 0) {
        Poly r = pseudo_rem(pa, pb, main);
        if (!r.is_zero()) {
            auto rv = r.univariate_view(main);
            Poly cr = content_of(rv);
            Poly pr;
            r.exact_div(cr, pr);
            r = std::move(pr);
        }
        pa = std::move(pb);
        pb = std::move(r);
    }
    if (!pb.is_zero()) return cg.monic();  // nonzero constant in `main` divides only contents
    return (cg * pa).monic();
}

}  // namespace gebra
