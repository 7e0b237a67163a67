#include "gebra/hopf.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "gebra/blade.hpp"
#include "gebra/errors.hpp"

namespace gebra {

namespace {

Multivector basis_mv(std::uint32_t dim, std::uint64_t mask) { return Multivector(dim, mask); }

ProductFn wedge_product() {
    return [](const Multivector& a, const Multivector& b) { return wedge(a, b); };
}

// One polynomial equation per stored word and per monomial in the `marker`
// symbols: the marker symbols tag independent coefficients (a fully symbolic
// input element), so each of their coefficient polynomials must vanish on its
// own. Denominators carry no unknowns, so numerators suffice.
std::vector<Poly> coefficient_equations(const TensorPoly& t, const std::set<Sym>& markers) {
    std::vector<Poly> eqs;
    for (const auto& [w, c] : t.terms()) {
        std::map<Monomial, Poly, MonomialLess> by_marker;
        for (const auto& [m, q] : c.num().terms()) {
            auto [marker_part, rest] = m.split(markers);
            by_marker[marker_part] += Poly(rest, q);
        }
        for (auto& [mm, p] : by_marker) {
            if (!p.is_zero()) eqs.push_back(std::move(p));
        }
    }
    return eqs;
}

TensorPoly bsw_with(const TensorPoly& t, std::size_t slot, const PairingFn& flipped) {
    TensorPoly split = gco_slot(gco_slot(t, slot + 1), slot);
    TensorPoly fused = contract(split, slot + 1, flipped);
    return gswitch(fused, slot);
}

PairingFn flipped_pairing(const BilinearForm& f) {
    PairingFn base = b_ext_pairing(f);
    return [base](const Multivector& u, const Multivector& v) { return base(v, u); };
}

}  // namespace

Multivector general_element(std::uint32_t dim, const std::string& name) {
    Multivector x(dim);
    const std::vector<Blade> basis = blade_basis(dim);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        x.add_term(basis[k].mask, RatFunc(Sym(name, std::uint32_t(k + 1))));
    }
    return x;
}

Multivector gantipode(const Multivector& u) { return grade_involution(u); }

EndoMatrix gantipode_matrix(std::uint32_t dim) {
    return endo_matrix([](const Multivector& u) { return gantipode(u); }, dim);
}

EndoMatrix counit_unit_matrix(std::uint32_t dim) {
    EndoMatrix m(std::size_t(1) << dim);
    m.at(0, 0) = RatFunc::one();
    return m;
}

EndoMatrix convolution(const EndoMatrix& f, const EndoMatrix& g, const ProductFn& m,
                       const CoproductFn& d, std::uint32_t dim) {
    const std::vector<Blade> basis = blade_basis(dim);
    EndoMatrix out(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        TensorPoly t = d(basis_mv(dim, basis[j].mask));
        Multivector y = drop_t(map_mul(mapop(mapop(t, 1, f), 2, g), 1, m));
        for (const auto& [mask, c] : y.terms()) out.at(blade_index(dim, mask), j) = c;
    }
    return out;
}

AntipodeSolution solve_antipode(ProductKind product, CoproductKind coproduct,
                                const AlgebraContext& ctx) {
    const std::uint32_t dim = ctx.dim();
    const std::size_t n = std::size_t(1) << dim;

    ProductFn m = product == ProductKind::Wedge ? wedge_product()
                                                : clifford_product(ctx.product_form());
    CoproductFn d;
    if (coproduct == CoproductKind::Grassmann) {
        d = [](const Multivector& u) { return gco(u); };
    } else {
        d = [&ctx](const Multivector& u) { return cco(u, ctx); };
    }

    EndoMatrix s_template(n);
    std::vector<Sym> unknowns;
    unknowns.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Sym s("s", std::uint32_t(i + 1), std::uint32_t(j + 1));
            unknowns.push_back(s);
            s_template.at(i, j) = RatFunc(s);
        }
    }

    const Multivector x = general_element(dim, "x");
    TensorPoly lhs = map_mul(mapop(d(x), 1, s_template), 1, m);
    TensorPoly rhs(dim, 1);
    rhs.add_term({0}, counit(x));
    TensorPoly eq = lhs - rhs;

    std::set<Sym> markers;
    for (std::size_t k = 0; k < n; ++k) markers.insert(Sym("x", std::uint32_t(k + 1)));

    SolveResult res = solve_linear(coefficient_equations(eq, markers), unknowns);

    AntipodeSolution out;
    out.kind = res.kind;
    out.free_unknowns = res.free_unknowns;
    if (res.kind == SolveKind::Inconsistent) return out;

    out.matrix = EndoMatrix(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out.matrix.at(i, j) =
                res.assignment.at(Sym("s", std::uint32_t(i + 1), std::uint32_t(j + 1)));
        }
    }
    if (res.kind == SolveKind::Unique) {
        TensorPoly right = map_mul(mapop(d(x), 2, out.matrix), 1, m);
        out.right_sided = (right - rhs).is_zero();
    }
    return out;
}

RatFunc antipode_scale(const AlgebraContext& ctx) {
    const std::uint32_t dim = ctx.dim();
    EndoMatrix g(dim);
    for (std::uint32_t i = 1; i <= dim; ++i) {
        for (std::uint32_t j = 1; j <= dim; ++j) {
            RatFunc acc;
            for (std::uint32_t k = 1; k <= dim; ++k) {
                acc += ctx.product_form().at(i, k) * ctx.coproduct_form().at(k, j);
            }
            g.at(i - 1, j - 1) = acc;
        }
    }
    return (EndoMatrix::identity(dim) - g).det();
}

EndoMatrix milnor_moore_antipode(const ProductFn& m, const CoproductFn& d, std::uint32_t dim) {
    const std::vector<Blade> basis = blade_basis(dim);
    const std::size_t n = basis.size();
    std::vector<Multivector> s(n, Multivector(dim));
    std::vector<bool> known(n, false);
    s[0] = Multivector::unit(dim);
    known[0] = true;
    for (std::size_t k = 1; k < n; ++k) {
        const std::uint64_t x = basis[k].mask;
        Multivector acc = -basis_mv(dim, x);
        TensorPoly cuts = d(basis_mv(dim, x));
        for (const auto& [w, c] : cuts.terms()) {
            if (w[0] == 0 || w[1] == 0) continue;  // primitive part already accounted for
            const std::size_t ia = blade_index(dim, w[0]);
            if (ia >= k || !known[ia]) throw RecursionNotGrounded(blade_name(w[0]));
            Multivector prod = m(s[ia], basis_mv(dim, w[1]));
            acc = acc - prod.scaled(c);
        }
        s[k] = acc;
        known[k] = true;
    }
    EndoMatrix out(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (const auto& [mask, c] : s[j].terms()) out.at(blade_index(dim, mask), j) = c;
    }
    return out;
}

bool form_convolution_inverse_check(const BilinearForm& k) {
    const std::uint32_t dim = k.dim();
    PairingFn plus = b_ext_pairing(k);
    PairingFn minus = b_ext_pairing(k.negated());
    const std::vector<Blade> basis = blade_basis(dim);
    for (const Blade& bx : basis) {
        TensorPoly dx = gco(basis_mv(dim, bx.mask));
        for (const Blade& by : basis) {
            TensorPoly t = tensor_concat(dx, gco(basis_mv(dim, by.mask)));
            TensorPoly inner = contract(t, 2, minus);
            TensorPoly outer = contract(inner, 1, plus);
            const RatFunc got = outer.coeff({});
            const RatFunc want =
                (bx.mask == 0 && by.mask == 0) ? RatFunc::one() : RatFunc::zero();
            if (!(got == want)) return false;
        }
    }
    return true;
}

EndoMatrix bw_matrix(const BilinearForm& b) {
    const std::uint32_t dim = b.dim();
    const std::vector<Blade> basis = blade_basis(dim);
    ProductFn mul = clifford_product(b);
    EndoMatrix out(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            out.at(i, j) = counit(mul(basis_mv(dim, basis[i].mask), basis_mv(dim, basis[j].mask)));
        }
    }
    return out;
}

EndoMatrix bs_matrix(const BilinearForm& b) { return bw_matrix(b) * gantipode_matrix(b.dim()); }

TensorPoly bsw(const TensorPoly& t, std::size_t slot, const BilinearForm& f) {
    return bsw_with(t, slot, flipped_pairing(f));
}

RMatrixSolution solve_rmatrix(const AlgebraContext& ctx) {
    const std::uint32_t dim = ctx.dim();
    const std::vector<Blade> basis = blade_basis(dim);
    const std::size_t n = basis.size();

    TensorPoly rr(dim, 2);
    std::vector<Sym> unknowns;
    unknowns.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Sym r("R", std::uint32_t(i + 1), std::uint32_t(j + 1));
            unknowns.push_back(r);
            rr.add_term({basis[i].mask, basis[j].mask}, RatFunc(r));
        }
    }

    const Multivector x = general_element(dim, "x");
    TensorPoly lhs = gswitch(cco(x, ctx), 1);

    // (rr_1, rr_2, x_(1), x_(2)) -> (x_(1), rr_1, rr_2, x_(2)) -> fuse the
    // outer pairs: (x_(1) ^ rr_1) @ (rr_2 ^ x_(2)).
    TensorPoly paired = tswitch(tswitch(tensor_concat(rr, gco(x)), 2), 1);
    ProductFn w = wedge_product();
    TensorPoly rhs = map_mul(map_mul(paired, 3, w), 1, w);

    TensorPoly eq = lhs - rhs;
    std::set<Sym> markers;
    for (std::size_t k = 0; k < n; ++k) markers.insert(Sym("x", std::uint32_t(k + 1)));

    SolveResult res = solve_linear(coefficient_equations(eq, markers), unknowns);

    RMatrixSolution out;
    out.kind = res.kind;
    out.free_unknowns = res.free_unknowns;
    if (res.kind == SolveKind::Inconsistent) return out;

    out.matrix = EndoMatrix(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out.matrix.at(i, j) =
                res.assignment.at(Sym("R", std::uint32_t(i + 1), std::uint32_t(j + 1)));
        }
    }
    TensorPoly residual = subst(eq, res.assignment);
    out.residual_zero = residual.is_zero();
    return out;
}

EndoMatrix yb_matrix(const BilinearForm& f) {
    const std::uint32_t dim = f.dim();
    const std::vector<Blade> basis = blade_basis(dim);
    const std::size_t n = basis.size();
    PairingFn flipped = flipped_pairing(f);
    EndoMatrix out(n * n);
    for (std::size_t ia = 0; ia < n; ++ia) {
        for (std::size_t ib = 0; ib < n; ++ib) {
            TensorPoly t = tensor({basis_mv(dim, basis[ia].mask), basis_mv(dim, basis[ib].mask)});
            TensorPoly r = bsw_with(t, 1, flipped);
            for (const auto& [word, c] : r.terms()) {
                const std::size_t row =
                    blade_index(dim, word[0]) * n + blade_index(dim, word[1]);
                out.at(row, ia * n + ib) = c;
            }
        }
    }
    return out;
}

RatFunc yb_det(const BilinearForm& f) { return yb_matrix(f).det(); }

TriangularityReport yb_triangular(const BilinearForm& f) {
    EndoMatrix m = yb_matrix(f);
    EndoMatrix diff = m * m - EndoMatrix::identity(m.size());
    TriangularityReport rep;
    rep.triangular = true;
    for (std::size_t i = 0; i < diff.size() && rep.triangular; ++i) {
        for (std::size_t j = 0; j < diff.size(); ++j) {
            if (!diff.at(i, j).is_zero()) {
                rep.triangular = false;
                rep.row = i;
                rep.col = j;
                rep.witness = diff.at(i, j);
                break;
            }
        }
    }
    return rep;
}

QtMatrices qt_matrices(const BilinearForm& f) {
    const std::uint32_t dim = f.dim();
    const std::vector<Blade> basis = blade_basis(dim);
    const std::size_t n = basis.size();
    ProductFn mul = clifford_product(f);
    QtMatrices q{EndoMatrix(n), EndoMatrix(n), EndoMatrix(n), EndoMatrix(n), false, false};
    for (std::size_t i = 0; i < n; ++i) {
        Multivector bi = basis_mv(dim, basis[i].mask);
        Multivector si = gantipode(bi);
        for (std::size_t j = 0; j < n; ++j) {
            Multivector bj = basis_mv(dim, basis[j].mask);
            Multivector sj = gantipode(bj);
            q.r.at(i, j) = counit(mul(bi, bj));
            q.rs.at(i, j) = counit(mul(si, bj));
            q.rss.at(i, j) = counit(mul(si, sj));
            q.sr.at(i, j) = counit(mul(bi, sj));
        }
    }
    q.rss_equals_r = q.rss == q.r;
    q.rs_equals_sr = q.rs == q.sr;
    return q;
}

}  // namespace gebra
