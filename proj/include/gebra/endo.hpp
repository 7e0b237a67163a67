#pragma once

#include <string>
#include <vector>

#include "gebra/multivector.hpp"

namespace gebra {

// Square matrix over the rational-function field, indexed 0-based; used for
// endomorphisms of the 2^dim-dimensional blade space in the canonical basis,
// column convention: entry (i, j) = ev(basis[i], f(basis[j])).
class EndoMatrix {
  public:
    EndoMatrix() : n_(0) {}
    explicit EndoMatrix(std::size_t n) : n_(n), e_(n * n) {}

    static EndoMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    RatFunc& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const RatFunc& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    EndoMatrix operator+(const EndoMatrix& o) const;
    EndoMatrix operator-(const EndoMatrix& o) const;
    EndoMatrix operator*(const EndoMatrix& o) const;
    EndoMatrix scaled(const RatFunc& c) const;

    friend bool operator==(const EndoMatrix&, const EndoMatrix&) = default;

    bool is_zero() const;
    RatFunc det() const;
    EndoMatrix substituted(const SubstMap& m) const;

    std::string str() const;  // one bracketed row per line

  private:
    std::size_t n_;
    std::vector<RatFunc> e_;
};

// Matrix of a linear map on the blade space of dimension 2^dim.
EndoMatrix endo_matrix(const EndoFn& f, std::uint32_t dim);

// Applies a matrix to a multivector in the canonical basis.
Multivector apply_endo(const EndoMatrix& m, const Multivector& u);

}  // namespace gebra
