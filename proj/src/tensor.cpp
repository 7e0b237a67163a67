#include "gebra/tensor.hpp"

#include "gebra/errors.hpp"
#include "render.hpp"

namespace gebra {

TensorPoly TensorPoly::scalar(std::uint32_t dim, const RatFunc& c) {
    TensorPoly t(dim, 0);
    t.add_term({}, c);
    return t;
}

void TensorPoly::add_term(const Word& w, const RatFunc& c) {
    if (w.size() != rank_) throw RankMismatch(rank_, w.size());
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

RatFunc TensorPoly::coeff(const Word& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? RatFunc() : it->second;
}

TensorPoly TensorPoly::operator-() const {
    TensorPoly r(dim_, rank_);
    for (const auto& [w, c] : t_) r.t_.emplace(w, -c);
    return r;
}

TensorPoly TensorPoly::operator+(const TensorPoly& o) const {
    if (rank_ != o.rank_) throw MixedRank(rank_, o.rank_);
    if (dim_ != o.dim_) throw DimMismatch("tensor sum");
    TensorPoly r = *this;
    for (const auto& [w, c] : o.t_) r.add_term(w, c);
    return r;
}

TensorPoly TensorPoly::operator-(const TensorPoly& o) const {
    if (rank_ != o.rank_) throw MixedRank(rank_, o.rank_);
    if (dim_ != o.dim_) throw DimMismatch("tensor difference");
    TensorPoly r = *this;
    for (const auto& [w, c] : o.t_) r.add_term(w, -c);
    return r;
}

TensorPoly TensorPoly::scaled(const RatFunc& c) const {
    TensorPoly r(dim_, rank_);
    if (c.is_zero()) return r;
    for (const auto& [w, cc] : t_) r.t_.emplace(w, cc * c);
    return r;
}

namespace {

std::string render(const TensorPoly& t, bool as_dsl) {
    if (t.rank() == 0) return t.coeff({}).str();
    if (t.terms().empty()) return "0";
    std::vector<std::string> pieces;
    for (const auto& [w, c] : t.terms()) {
        std::string word = as_dsl ? "t(" : "&t(";
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (k) word += ",";
            word += as_dsl ? detail::blade_dsl_name(w[k]) : blade_name(w[k]);
        }
        word += ")";
        pieces.push_back(detail::coeff_piece(c, word));
    }
    return detail::join_terms(std::move(pieces));
}

}  // namespace

std::string TensorPoly::str() const { return render(*this, false); }
std::string TensorPoly::dsl() const { return render(*this, true); }

TensorPoly tensor(const std::vector<Multivector>& factors) {
    if (factors.empty()) throw RankMismatch(1, 0);
    std::uint32_t dim = factors.front().dim();
    for (const auto& f : factors)
        if (f.dim() != dim) throw DimMismatch("tensor factors");
    TensorPoly r(dim, factors.size());
    TensorPoly::Word w(factors.size());
    RatFunc c;
    // expand the product of sums term by term
    std::function<void(std::size_t, const RatFunc&)> expand =
        [&](std::size_t k, const RatFunc& acc) {
            if (k == factors.size()) {
                r.add_term(w, acc);
                return;
            }
            for (const auto& [m, cc] : factors[k].terms()) {
                w[k] = m;
                expand(k + 1, acc * cc);
            }
        };
    expand(0, RatFunc::one());
    return r;
}

TensorPoly tensor_concat(const TensorPoly& a, const TensorPoly& b) {
    if (a.dim() != b.dim()) throw DimMismatch("tensor product");
    TensorPoly r(a.dim(), a.rank() + b.rank());
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            TensorPoly::Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    return r;
}

std::vector<std::pair<Multivector, TensorPoly>> peek(const TensorPoly& t, std::size_t slot) {
    if (slot < 1 || slot > t.rank()) throw SlotOutOfRange(slot, t.rank());
    std::vector<std::pair<Multivector, TensorPoly>> out;
    for (const auto& [w, c] : t.terms()) {
        Multivector removed(t.dim(), w[slot - 1], c);
        TensorPoly rest(t.dim(), t.rank() - 1);
        TensorPoly::Word rw = w;
        rw.erase(rw.begin() + (slot - 1));
        rest.add_term(rw, RatFunc::one());
        out.push_back({std::move(removed), std::move(rest)});
    }
    return out;
}

TensorPoly poke(const TensorPoly& t, const Multivector& u, std::size_t slot) {
    if (slot < 1 || slot > t.rank() + 1) throw SlotOutOfRange(slot, t.rank() + 1);
    if (u.dim() != t.dim()) throw DimMismatch("poke");
    TensorPoly r(t.dim(), t.rank() + 1);
    for (const auto& [w, c] : t.terms())
        for (const auto& [m, cc] : u.terms()) {
            TensorPoly::Word nw = w;
            nw.insert(nw.begin() + (slot - 1), m);
            r.add_term(nw, c * cc);
        }
    return r;
}

TensorPoly tswitch(const TensorPoly& t, std::size_t slot) {
    if (slot < 1 || slot + 1 > t.rank()) throw SlotOutOfRange(slot + 1, t.rank());
    TensorPoly r(t.dim(), t.rank());
    for (const auto& [w, c] : t.terms()) {
        TensorPoly::Word nw = w;
        std::swap(nw[slot - 1], nw[slot]);
        r.add_term(nw, c);
    }
    return r;
}

TensorPoly gswitch(const TensorPoly& t, std::size_t slot) {
    if (slot < 1 || slot + 1 > t.rank()) throw SlotOutOfRange(slot + 1, t.rank());
    TensorPoly r(t.dim(), t.rank());
    for (const auto& [w, c] : t.terms()) {
        TensorPoly::Word nw = w;
        int ga = __builtin_popcountll(nw[slot - 1]);
        int gb = __builtin_popcountll(nw[slot]);
        std::swap(nw[slot - 1], nw[slot]);
        r.add_term(nw, (ga * gb) % 2 ? -c : c);
    }
    return r;
}

TensorPoly mapop(const TensorPoly& t, std::size_t slot, const EndoFn& f) {
    if (slot < 1 || slot > t.rank()) throw SlotOutOfRange(slot, t.rank());
    TensorPoly r(t.dim(), t.rank());
    for (const auto& [w, c] : t.terms()) {
        Multivector img = f(Multivector(t.dim(), w[slot - 1]));
        for (const auto& [m, cc] : img.terms()) {
            TensorPoly::Word nw = w;
            nw[slot - 1] = m;
            r.add_term(nw, c * cc);
        }
    }
    return r;
}

TensorPoly mapop(const TensorPoly& t, std::size_t slot, const EndoMatrix& f) {
    return mapop(t, slot, EndoFn([&](const Multivector& u) { return apply_endo(f, u); }));
}

TensorPoly map_mul(const TensorPoly& t, std::size_t slot, const ProductFn& m) {
    if (slot < 1 || slot + 1 > t.rank()) throw SlotOutOfRange(slot + 1, t.rank());
    TensorPoly r(t.dim(), t.rank() - 1);
    for (const auto& [w, c] : t.terms()) {
        Multivector prod =
            m(Multivector(t.dim(), w[slot - 1]), Multivector(t.dim(), w[slot]));
        for (const auto& [mm, cc] : prod.terms()) {
            TensorPoly::Word nw;
            nw.reserve(w.size() - 1);
            nw.insert(nw.end(), w.begin(), w.begin() + (slot - 1));
            nw.push_back(mm);
            nw.insert(nw.end(), w.begin() + slot + 1, w.end());
            r.add_term(nw, c * cc);
        }
    }
    return r;
}

TensorPoly contract(const TensorPoly& t, std::size_t slot, const PairingFn& pairing) {
    if (slot < 1 || slot + 1 > t.rank()) throw SlotOutOfRange(slot + 1, t.rank());
    TensorPoly r(t.dim(), t.rank() - 2);
    for (const auto& [w, c] : t.terms()) {
        RatFunc val =
            pairing(Multivector(t.dim(), w[slot - 1]), Multivector(t.dim(), w[slot]));
        if (val.is_zero()) continue;
        TensorPoly::Word nw;
        nw.reserve(w.size() - 2);
        nw.insert(nw.end(), w.begin(), w.begin() + (slot - 1));
        nw.insert(nw.end(), w.begin() + slot + 1, w.end());
        r.add_term(nw, c * val);
    }
    return r;
}

Multivector drop_t(const TensorPoly& t) {
    if (t.rank() != 1) throw RankMismatch(1, t.rank());
    Multivector r(t.dim());
    for (const auto& [w, c] : t.terms()) r.add_term(w[0], c);
    return r;
}

TensorPoly tcollect(const TensorPoly& t) { return t; }

TensorPoly subst(const TensorPoly& t, const SubstMap& m) {
    TensorPoly r(t.dim(), t.rank());
    for (const auto& [w, c] : t.terms()) r.add_term(w, subst(c, m));
    return r;
}

}  // namespace gebra
