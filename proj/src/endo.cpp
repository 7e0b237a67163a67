#include "gebra/endo.hpp"

#include "gebra/errors.hpp"

namespace gebra {

EndoMatrix EndoMatrix::identity(std::size_t n) {
    EndoMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RatFunc::one();
    return m;
}

EndoMatrix EndoMatrix::operator+(const EndoMatrix& o) const {
    if (n_ != o.n_) throw DimMismatch("matrix sum");
    EndoMatrix r(n_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

EndoMatrix EndoMatrix::operator-(const EndoMatrix& o) const {
    if (n_ != o.n_) throw DimMismatch("matrix difference");
    EndoMatrix r(n_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
}

EndoMatrix EndoMatrix::operator*(const EndoMatrix& o) const {
    if (n_ != o.n_) throw DimMismatch("matrix product");
    EndoMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += at(i, k) * o.at(k, j);
            }
        }
    return r;
}

EndoMatrix EndoMatrix::scaled(const RatFunc& c) const {
    EndoMatrix r(n_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * c;
    return r;
}

bool EndoMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

RatFunc EndoMatrix::det() const {
    EndoMatrix m = *this;
    const std::size_t n = n_;
    RatFunc d = RatFunc::one();
    std::vector<bool> row_used(n, false), col_used(n, false);
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    for (std::size_t step = 0; step < n; ++step) {
        // pivot with fewest numerator terms keeps entries small
        std::size_t pr = n, pc = n, best = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (row_used[i]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (col_used[j] || m.at(i, j).is_zero()) continue;
                std::size_t w = m.at(i, j).num().term_count();
                if (pr == n || w < best) {
                    pr = i;
                    pc = j;
                    best = w;
                }
            }
        }
        if (pr == n) return RatFunc();  // structurally singular
        row_used[pr] = true;
        col_used[pc] = true;
        pivots.push_back({pr, pc});
        const RatFunc piv = m.at(pr, pc);
        d *= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (row_used[i] || m.at(i, pc).is_zero()) continue;
            RatFunc f = m.at(i, pc) / piv;
            for (std::size_t j = 0; j < n; ++j) {
                if (col_used[j] || m.at(pr, j).is_zero()) continue;
                m.at(i, j) -= f * m.at(pr, j);
            }
            m.at(i, pc) = RatFunc();
        }
    }
    // sign of the pivot permutation: rows sorted by column position
    std::vector<std::size_t> perm(n);
    for (auto [r, c] : pivots) perm[c] = r;
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (perm[a] > perm[b]) ++inversions;
    return inversions % 2 ? -d : d;
}

EndoMatrix EndoMatrix::substituted(const SubstMap& m) const {
    EndoMatrix r(n_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = subst(e_[k], m);
    return r;
}

std::string EndoMatrix::str() const {
    std::string s;
    for (std::size_t i = 0; i < n_; ++i) {
        s += "[";
        for (std::size_t j = 0; j < n_; ++j) {
            if (j) s += ", ";
            s += at(i, j).str();
        }
        s += "]";
        if (i + 1 < n_) s += "\n";
    }
    return s;
}

EndoMatrix endo_matrix(const EndoFn& f, std::uint32_t dim) {
    auto basis = blade_basis(dim);
    EndoMatrix m(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        Multivector img = f(Multivector(dim, basis[j].mask));
        for (const auto& [mask, c] : img.terms()) m.at(blade_index(dim, mask), j) = c;
    }
    return m;
}

Multivector apply_endo(const EndoMatrix& m, const Multivector& u) {
    const std::uint32_t dim = u.dim();
    auto basis = blade_basis(dim);
    if (m.size() != basis.size()) throw DimMismatch("matrix application");
    Multivector r(dim);
    for (const auto& [mask, c] : u.terms()) {
        std::size_t j = blade_index(dim, mask);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const RatFunc& mij = m.at(i, j);
            if (!mij.is_zero()) r.add_term(basis[i].mask, mij * c);
        }
    }
    return r;
}

}  // namespace gebra
