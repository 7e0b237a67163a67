#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gebra/endo.hpp"
#include "gebra/multivector.hpp"

namespace gebra {

// Element of the `rank`-fold tensor power of the blade space: a sum of words
// of basis blades with rational-function coefficients. Rank 0 is a bare
// scalar (single empty word). Canonical by construction.
class TensorPoly {
  public:
    using Word = std::vector<std::uint64_t>;
    struct WordLess {
        bool operator()(const Word& a, const Word& b) const {
            for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) {
                if (a[k] != b[k]) return blade_less(a[k], b[k]);
            }
            return a.size() < b.size();
        }
    };
    using TermMap = std::map<Word, RatFunc, WordLess>;

    TensorPoly(std::uint32_t dim, std::size_t rank) : dim_(dim), rank_(rank) {}

    static TensorPoly scalar(std::uint32_t dim, const RatFunc& c);

    std::uint32_t dim() const { return dim_; }
    std::size_t rank() const { return rank_; }
    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(const Word& w, const RatFunc& c);
    RatFunc coeff(const Word& w) const;

    TensorPoly operator-() const;
    TensorPoly operator+(const TensorPoly& o) const;  // throws MixedRank
    TensorPoly operator-(const TensorPoly& o) const;
    TensorPoly scaled(const RatFunc& c) const;

    friend bool operator==(const TensorPoly&, const TensorPoly&) = default;

    std::string str() const;  // "&t(e1,e2) - 2*&t(e2,e1)"; rank 0 renders the scalar
    std::string dsl() const;

  private:
    std::uint32_t dim_;
    std::size_t rank_;
    TermMap t_;
};

// Tensor product of multivector factors; rank = number of factors.
TensorPoly tensor(const std::vector<Multivector>& factors);

// Tensor product of two tensor polynomials (ranks add).
TensorPoly tensor_concat(const TensorPoly& a, const TensorPoly& b);

// One (multivector, remaining word) pair per stored term: the slot-i blade
// leaves with the term's coefficient. Slots are 1-based throughout.
std::vector<std::pair<Multivector, TensorPoly>> peek(const TensorPoly& t, std::size_t slot);

// Inserts multivector u as a new slot at position `slot`.
TensorPoly poke(const TensorPoly& t, const Multivector& u, std::size_t slot);

// Swaps slots (slot, slot+1).
TensorPoly tswitch(const TensorPoly& t, std::size_t slot);

// Graded swap of (slot, slot+1): Koszul sign (-1)^(grade*grade).
TensorPoly gswitch(const TensorPoly& t, std::size_t slot);

// Applies a 1 -> 1 linear operator to one slot.
TensorPoly mapop(const TensorPoly& t, std::size_t slot, const EndoFn& f);
TensorPoly mapop(const TensorPoly& t, std::size_t slot, const EndoMatrix& f);

// Fuses slots (slot, slot+1) through a 2 -> 1 product.
TensorPoly map_mul(const TensorPoly& t, std::size_t slot, const ProductFn& m);

// Contracts slots (slot, slot+1) through a 2 -> 0 pairing.
TensorPoly contract(const TensorPoly& t, std::size_t slot, const PairingFn& pairing);

// Rank-1 tensor back to a multivector; rank-0 to a scalar multiple of Id is
// not implied -- drop_t demands rank exactly 1.
Multivector drop_t(const TensorPoly& t);

// Canonicalization pass; the representation is already canonical, so this is
// the identity and is idempotent by construction.
TensorPoly tcollect(const TensorPoly& t);

// Applies a substitution to every coefficient.
TensorPoly subst(const TensorPoly& t, const SubstMap& m);

}  // namespace gebra
