#include "gebra/linsolve.hpp"

#include <cassert>
#include <stdexcept>

#include "gebra/errors.hpp"

namespace gebra {

namespace {

struct Row {
    std::vector<RatFunc> coeff;  // one per unknown
    RatFunc rhs;                 // equation is sum(coeff_i * u_i) = rhs
};

std::size_t weight(const RatFunc& f) { return f.num().term_count(); }

}  // namespace

SolveResult solve_linear(const std::vector<Poly>& eqs, const std::vector<Sym>& unknowns) {
    const std::size_t n = unknowns.size();
    std::set<Sym> uset(unknowns.begin(), unknowns.end());

    std::vector<Row> rows;
    rows.reserve(eqs.size());
    for (const Poly& eq : eqs) {
        Row row;
        row.coeff.assign(n, RatFunc());
        Poly cpart;
        std::vector<Poly> upart(n);
        for (const auto& [mono, c] : eq.terms()) {
            auto [in, rest] = mono.split(uset);
            if (in.is_unit()) {
                cpart.add_term(rest, c);
                continue;
            }
            if (in.total_degree() >= 2) throw NotLinear(Poly(mono, c).str());
            const Sym& u = in.factors().front().first;
            std::size_t j = 0;
            while (unknowns[j] != u) ++j;
            upart[j].add_term(rest, c);
        }
        bool all_zero = cpart.is_zero();
        for (std::size_t j = 0; j < n; ++j) {
            row.coeff[j] = RatFunc(upart[j]);
            all_zero = all_zero && upart[j].is_zero();
        }
        row.rhs = RatFunc(-cpart);
        if (!all_zero) rows.push_back(std::move(row));
    }

    // Gaussian elimination; pivot = nonzero entry with fewest numerator terms.
    std::vector<bool> row_done(rows.size(), false);
    std::vector<bool> col_done(n, false);
    // (pivot row, pivot column) in elimination order
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    for (;;) {
        std::size_t pr = rows.size(), pc = n;
        std::size_t best = 0;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (row_done[r]) continue;
            for (std::size_t c = 0; c < n; ++c) {
                if (col_done[c] || rows[r].coeff[c].is_zero()) continue;
                std::size_t w = weight(rows[r].coeff[c]);
                if (pr == rows.size() || w < best) {
                    pr = r;
                    pc = c;
                    best = w;
                }
            }
        }
        if (pr == rows.size()) break;
        row_done[pr] = true;
        col_done[pc] = true;
        pivots.push_back({pr, pc});
        const RatFunc piv = rows[pr].coeff[pc];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pr || rows[r].coeff[pc].is_zero()) continue;
            RatFunc f = rows[r].coeff[pc] / piv;
            for (std::size_t c = 0; c < n; ++c)
                if (!rows[pr].coeff[c].is_zero())
                    rows[r].coeff[c] -= f * rows[pr].coeff[c];
            rows[r].rhs -= f * rows[pr].rhs;
        }
    }

    SolveResult res;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (row_done[r]) continue;
        bool zero = true;
        for (std::size_t c = 0; c < n && zero; ++c) zero = rows[r].coeff[c].is_zero();
        if (zero && !rows[r].rhs.is_zero()) {
            res.kind = SolveKind::Inconsistent;
            return res;
        }
    }

    res.kind = pivots.size() == n ? SolveKind::Unique : SolveKind::Parametric;
    for (std::size_t c = 0; c < n; ++c)
        if (!col_done[c]) {
            res.assignment[unknowns[c]] = RatFunc(unknowns[c]);
            res.free_unknowns.insert(unknowns[c]);
        }
    // Back-substitution in reverse pivot order.
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        auto [r, c] = *it;
        RatFunc v = rows[r].rhs;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == c || rows[r].coeff[j].is_zero()) continue;
            v -= rows[r].coeff[j] * res.assignment.at(unknowns[j]);
        }
        res.assignment[unknowns[c]] = v / rows[r].coeff[c];
    }

    // Residual check: the assignment must annihilate every input equation.
    for (const Poly& eq : eqs) {
        RatFunc residual = subst(eq, res.assignment);
        if (!residual.is_zero())
            throw std::logic_error("linear solver produced a non-vanishing residual");
    }
    return res;
}

}  // namespace gebra
