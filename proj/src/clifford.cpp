#include "gebra/clifford.hpp"

#include <map>
#include <memory>

#include "gebra/errors.hpp"

namespace gebra {

namespace {

// i_{e_g} on a single blade: the alternating sum over the blade's factors,
// the t-th factor leaving through the form with sign (-1)^(t-1).
Multivector contract_gen(std::uint32_t dim, std::uint32_t g, std::uint64_t w,
                         const BilinearForm& B) {
    Multivector r(dim);
    int pos = 0;
    for (std::uint64_t m = w; m; m &= m - 1) {
        ++pos;
        std::uint32_t j = std::uint32_t(__builtin_ctzll(m)) + 1;
        const RatFunc& c = B.at(g, j);
        if (c.is_zero()) continue;
        std::uint64_t bit = m & (0 - m);
        r.add_term(w & ~bit, pos % 2 ? c : -c);
    }
    return r;
}

// i_u for a single blade u: composition of generator contractions,
// i_{e_g ^ rest} = i_{e_g} after i_rest.
Multivector contract_blade(std::uint32_t dim, std::uint64_t u, const Multivector& w,
                           const BilinearForm& B) {
    if (u == 0) return w;
    std::uint32_t g = std::uint32_t(__builtin_ctzll(u)) + 1;
    Multivector inner = contract_blade(dim, u & (u - 1), w, B);
    Multivector r(dim);
    for (const auto& [m, c] : inner.terms()) {
        Multivector step = contract_gen(dim, g, m, B);
        for (const auto& [mm, cc] : step.terms()) r.add_term(mm, c * cc);
    }
    return r;
}

}  // namespace

Multivector lc(const Multivector& u, const Multivector& v, const BilinearForm& B) {
    if (u.dim() != v.dim()) throw DimMismatch("left contraction");
    if (B.dim() != u.dim()) throw DimMismatch("form dimension");
    Multivector r(v.dim());
    for (const auto& [mu, cu] : u.terms()) {
        Multivector part = contract_blade(v.dim(), mu, v, B);
        for (const auto& [m, c] : part.terms()) r.add_term(m, cu * c);
    }
    return r;
}

RatFunc b_ext(const Multivector& u, const Multivector& v, const BilinearForm& B) {
    return counit(lc(u, v, B));
}

PairingFn b_ext_pairing(const BilinearForm& B) {
    using Key = std::pair<std::uint64_t, std::uint64_t>;
    auto memo = std::make_shared<std::map<Key, RatFunc>>();
    return [B, memo](const Multivector& u, const Multivector& v) -> RatFunc {
        // fast path: tabulate blade pairs, expand bilinearly over terms
        RatFunc out;
        for (const auto& [mu, cu] : u.terms())
            for (const auto& [mv, cv] : v.terms()) {
                auto [it, fresh] = memo->try_emplace({mu, mv});
                if (fresh)
                    it->second = b_ext(Multivector(u.dim(), mu), Multivector(v.dim(), mv), B);
                if (it->second.is_zero()) continue;
                out += it->second * cu * cv;
            }
        return out;
    };
}

namespace {

Multivector cl_mv(const Multivector& u, const Multivector& v, const BilinearForm& B);

// Clifford product of a single blade with a multivector, by recursion on the
// blade's lowest generator g (u = e_g ^ rest):
//   u o v = gamma_g(rest o v) - (e_g _| rest) o v,
// where gamma_g(w) = e_g _| w + e_g ^ w.
Multivector cl_blade(std::uint64_t u, const Multivector& v, const BilinearForm& B) {
    if (u == 0) return v;
    std::uint32_t dim = v.dim();
    std::uint32_t g = std::uint32_t(__builtin_ctzll(u)) + 1;
    std::uint64_t rest = u & (u - 1);
    Multivector eg = Multivector::generator(dim, g);

    Multivector w = cl_blade(rest, v, B);
    Multivector r = lc(eg, w, B) + wedge(eg, w);
    if (rest) {
        Multivector corr = cl_mv(lc(eg, Multivector(dim, rest), B), v, B);
        r = r - corr;
    }
    return r;
}

Multivector cl_mv(const Multivector& u, const Multivector& v, const BilinearForm& B) {
    Multivector r(v.dim());
    for (const auto& [mu, cu] : u.terms()) {
        Multivector part = cl_blade(mu, v, B);
        for (const auto& [m, c] : part.terms()) r.add_term(m, cu * c);
    }
    return r;
}

}  // namespace

Multivector chevalley_mul(const Multivector& u, const Multivector& v, const BilinearForm& B) {
    if (u.dim() != v.dim()) throw DimMismatch("clifford product");
    if (B.dim() != u.dim()) throw DimMismatch("form dimension");
    return cl_mv(u, v, B);
}

namespace {

Multivector cmul_with(const Multivector& u, const Multivector& v, const PairingFn& form) {
    if (u.dim() != v.dim()) throw DimMismatch("clifford product");
    std::uint32_t dim = u.dim();
    TensorPoly du = gco(u), dv = gco(v);
    Multivector r(dim);
    for (const auto& [wu, cu] : du.terms())
        for (const auto& [wv, cv] : dv.terms()) {
            RatFunc f = form(Multivector(dim, wu[1]), Multivector(dim, wv[0]));
            if (f.is_zero()) continue;
            int s = blade_wedge_sign(wu[0], wv[1]);
            if (s == 0) continue;
            RatFunc c = f * cu * cv;
            r.add_term(wu[0] | wv[1], s < 0 ? -c : c);
        }
    return r;
}

}  // namespace

Multivector cmul(const Multivector& u, const Multivector& v, const BilinearForm& B) {
    if (B.dim() != u.dim()) throw DimMismatch("form dimension");
    return cmul_with(u, v, b_ext_pairing(B));
}

ProductFn clifford_product(const BilinearForm& B) {
    PairingFn form = b_ext_pairing(B);
    return [form](const Multivector& u, const Multivector& v) {
        return cmul_with(u, v, form);
    };
}

TensorPoly gco(const Multivector& u) {
    TensorPoly r(u.dim(), 2);
    for (const auto& [w, c] : u.terms()) {
        for (std::uint64_t s = w;; s = (s - 1) & w) {
            std::uint64_t rest = w & ~s;
            int sign = blade_wedge_sign(s, rest);
            r.add_term({s, rest}, sign < 0 ? -c : c);
            if (s == 0) break;
        }
    }
    return r;
}

TensorPoly coproduct_slot(const TensorPoly& t, std::size_t slot, const CoproductFn& d) {
    if (slot < 1 || slot > t.rank()) throw SlotOutOfRange(slot, t.rank());
    TensorPoly r(t.dim(), t.rank() + 1);
    for (const auto& [w, c] : t.terms()) {
        TensorPoly split = d(Multivector(t.dim(), w[slot - 1]));
        if (split.rank() != 2) throw RankMismatch(2, split.rank());
        for (const auto& [sw, sc] : split.terms()) {
            TensorPoly::Word nw = w;
            nw[slot - 1] = sw[0];
            nw.insert(nw.begin() + slot, sw[1]);
            r.add_term(nw, c * sc);
        }
    }
    return r;
}

TensorPoly gco_slot(const TensorPoly& t, std::size_t slot) {
    return coproduct_slot(t, slot, [](const Multivector& u) { return gco(u); });
}

TensorPoly tensor_square_mul(const TensorPoly& a, const TensorPoly& b) {
    if (a.rank() != 2) throw RankMismatch(2, a.rank());
    if (b.rank() != 2) throw RankMismatch(2, b.rank());
    if (a.dim() != b.dim()) throw DimMismatch("tensor-square product");
    TensorPoly r(a.dim(), 2);
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            int s1 = blade_wedge_sign(wa[0], wb[0]);
            if (s1 == 0) continue;
            int s2 = blade_wedge_sign(wa[1], wb[1]);
            if (s2 == 0) continue;
            int koszul =
                (__builtin_popcountll(wa[1]) * __builtin_popcountll(wb[0])) % 2 ? -1 : 1;
            RatFunc c = ca * cb;
            r.add_term({wa[0] | wb[0], wa[1] | wb[1]}, s1 * s2 * koszul < 0 ? -c : c);
        }
    return r;
}

TensorPoly coscalar_unit(const BilinearForm& f, CoscalarConvention conv) {
    std::uint32_t n = f.dim();
    bool minus =
        conv == CoscalarConvention::MinusDirect || conv == CoscalarConvention::MinusTransposed;
    bool transposed = conv == CoscalarConvention::PlusTransposed ||
                      conv == CoscalarConvention::MinusTransposed;

    TensorPoly beta(n, 2);
    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t j = 1; j <= n; ++j) {
            RatFunc c = transposed ? f.at(j, i) : f.at(i, j);
            if (minus) c = -c;
            beta.add_term({std::uint64_t(1) << (i - 1), std::uint64_t(1) << (j - 1)}, c);
        }

    auto unit = Multivector::unit(n);
    TensorPoly e = tensor({unit, unit});
    TensorPoly power = e;
    Rational factorial = 1;
    for (std::uint32_t k = 1; k <= n; ++k) {
        power = tensor_square_mul(power, beta);
        if (power.is_zero()) break;
        factorial *= k;
        e = e + power.scaled(RatFunc(Rational(1) / factorial));
    }
    return e;
}

TensorPoly cco(const Multivector& u, const AlgebraContext& ctx) {
    if (u.dim() != ctx.dim()) throw DimMismatch("deformed coproduct");
    return tensor_square_mul(gco(u), ctx.coscalar());
}

TensorPoly cco_slot(const TensorPoly& t, std::size_t slot, const AlgebraContext& ctx) {
    return coproduct_slot(t, slot, [&ctx](const Multivector& u) { return cco(u, ctx); });
}

}  // namespace gebra
