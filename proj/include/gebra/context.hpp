#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gebra/ratfunc.hpp"
#include "gebra/tensor.hpp"

namespace gebra {

// dim x dim matrix of scalars fixing a bilinear form on the generators;
// indices are 1-based to match generator numbering.
class BilinearForm {
  public:
    BilinearForm() = default;
    explicit BilinearForm(std::uint32_t dim) : dim_(dim), e_(std::size_t(dim) * dim) {}

    // entries name(i,j): symbolic("b", 2) -> [[b11, b12], [b21, b22]]
    static BilinearForm symbolic(const std::string& name, std::uint32_t dim);
    static BilinearForm zero(std::uint32_t dim) { return BilinearForm(dim); }

    std::uint32_t dim() const { return dim_; }
    RatFunc& at(std::uint32_t i, std::uint32_t j) { return e_[idx(i, j)]; }
    const RatFunc& at(std::uint32_t i, std::uint32_t j) const { return e_[idx(i, j)]; }

    bool is_zero() const;
    BilinearForm negated() const;
    BilinearForm transposed() const;
    BilinearForm substituted(const SubstMap& m) const;

    friend bool operator==(const BilinearForm&, const BilinearForm&) = default;
    std::string str() const;  // one bracketed row per line

  private:
    std::size_t idx(std::uint32_t i, std::uint32_t j) const {
        return std::size_t(i - 1) * dim_ + (j - 1);
    }

    std::uint32_t dim_ = 0;
    std::vector<RatFunc> e_;
};

// Everything a deformed operation needs: one form deforming the product, one
// deforming the coproduct, and the coscalar element derived from the latter
// (cached after first use).
class AlgebraContext {
  public:
    AlgebraContext(BilinearForm product_form, BilinearForm coproduct_form);

    // b(i,j) entries for the product side, p(i,j) entries for the coproduct side
    static AlgebraContext symbolic(std::uint32_t dim);

    std::uint32_t dim() const { return b_.dim(); }
    const BilinearForm& product_form() const { return b_; }
    const BilinearForm& coproduct_form() const { return bi_; }

    // exp of the coproduct form in the graded tensor-square algebra
    const TensorPoly& coscalar() const;

    AlgebraContext substituted(const SubstMap& m) const;

  private:
    BilinearForm b_, bi_;
    mutable std::optional<TensorPoly> coscalar_;
};

}  // namespace gebra
