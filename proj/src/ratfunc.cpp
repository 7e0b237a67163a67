#include "gebra/ratfunc.hpp"

#include "gebra/errors.hpp"

namespace gebra {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    if (!den_.is_one()) {
        Poly g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            Poly qn, qd;
            num_.exact_div(g, qn);
            den_.exact_div(g, qd);
            num_ = std::move(qn);
            den_ = std::move(qd);
        }
        Rational lead = den_.leading_coeff();
        if (lead != 1) {
            num_ = num_.mul_rat(1 / lead);
            den_ = den_.mul_rat(1 / lead);
        }
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (den_.is_one() && o.den_.is_one()) {
        RatFunc r;
        r.num_ = num_ + o.num_;
        return r;
    }
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    if (den_.is_one() && o.den_.is_one()) {
        RatFunc r;
        r.num_ = num_ - o.num_;
        return r;
    }
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc();
    if (den_.is_one() && o.den_.is_one()) {
        RatFunc r;
        r.num_ = num_ * o.num_;
        return r;
    }
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw DivisionByZero();
    return RatFunc(den_, num_);
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.str();
    if (num_.term_count() > 1) n = "(" + n + ")";
    std::string d = den_.str();
    if (den_.term_count() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

RatFunc subst(const Poly& p, const SubstMap& m) {
    RatFunc acc;
    for (const auto& [mono, c] : p.terms()) {
        RatFunc term{c};
        Monomial untouched;
        for (const auto& [s, e] : mono.factors()) {
            auto it = m.find(s);
            if (it == m.end()) {
                untouched = untouched.times(Monomial(s, e));
                continue;
            }
            for (std::uint32_t k = 0; k < e; ++k) term *= it->second;
        }
        term *= RatFunc(Poly(untouched, Rational(1)));
        acc += term;
    }
    return acc;
}

RatFunc subst(const RatFunc& f, const SubstMap& m) {
    RatFunc n = subst(f.num(), m);
    RatFunc d = subst(f.den(), m);
    if (d.is_zero()) throw DenominatorVanishes(f.den().str());
    return n / d;
}

}  // namespace gebra
