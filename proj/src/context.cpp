#include "gebra/context.hpp"

#include "gebra/clifford.hpp"
#include "gebra/errors.hpp"

namespace gebra {

BilinearForm BilinearForm::symbolic(const std::string& name, std::uint32_t dim) {
    BilinearForm f(dim);
    for (std::uint32_t i = 1; i <= dim; ++i)
        for (std::uint32_t j = 1; j <= dim; ++j) f.at(i, j) = RatFunc(Sym(name, i, j));
    return f;
}

bool BilinearForm::is_zero() const {
    for (const auto& c : e_)
        if (!c.is_zero()) return false;
    return true;
}

BilinearForm BilinearForm::negated() const {
    BilinearForm f(dim_);
    for (std::size_t k = 0; k < e_.size(); ++k) f.e_[k] = -e_[k];
    return f;
}

BilinearForm BilinearForm::transposed() const {
    BilinearForm f(dim_);
    for (std::uint32_t i = 1; i <= dim_; ++i)
        for (std::uint32_t j = 1; j <= dim_; ++j) f.at(j, i) = at(i, j);
    return f;
}

BilinearForm BilinearForm::substituted(const SubstMap& m) const {
    BilinearForm f(dim_);
    for (std::size_t k = 0; k < e_.size(); ++k) f.e_[k] = subst(e_[k], m);
    return f;
}

std::string BilinearForm::str() const {
    std::string s;
    for (std::uint32_t i = 1; i <= dim_; ++i) {
        s += "[";
        for (std::uint32_t j = 1; j <= dim_; ++j) {
            if (j > 1) s += ", ";
            s += at(i, j).str();
        }
        s += "]";
        if (i < dim_) s += "\n";
    }
    return s;
}

AlgebraContext::AlgebraContext(BilinearForm product_form, BilinearForm coproduct_form)
    : b_(std::move(product_form)), bi_(std::move(coproduct_form)) {
    if (b_.dim() != bi_.dim()) throw DimMismatch("context forms");
}

AlgebraContext AlgebraContext::symbolic(std::uint32_t dim) {
    return AlgebraContext(BilinearForm::symbolic("b", dim), BilinearForm::symbolic("p", dim));
}

const TensorPoly& AlgebraContext::coscalar() const {
    if (!coscalar_) coscalar_ = coscalar_unit(bi_);
    return *coscalar_;
}

AlgebraContext AlgebraContext::substituted(const SubstMap& m) const {
    return AlgebraContext(b_.substituted(m), bi_.substituted(m));
}

}  // namespace gebra
