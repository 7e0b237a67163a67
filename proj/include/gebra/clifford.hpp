#pragma once

#include "gebra/context.hpp"
#include "gebra/multivector.hpp"
#include "gebra/tensor.hpp"

namespace gebra {

// Left contraction of v by u, u _| v. On generators it is the form itself,
// i_x(y) = B(x, y); on higher blades it acts as a composition of generator
// contractions, each a graded derivation.
Multivector lc(const Multivector& u, const Multivector& v, const BilinearForm& B);

// The form extended to the whole blade space: b_ext(u, v) = counit(lc(u, v)).
// Nonzero only between components of equal grade.
RatFunc b_ext(const Multivector& u, const Multivector& v, const BilinearForm& B);

// b_ext as a reusable pairing closure; blade pairs are tabulated across calls.
PairingFn b_ext_pairing(const BilinearForm& B);

// Clifford product, generator-recursion route:
//   (e_g ^ u) o v = e_g _| (u o v) + e_g ^ (u o v) - (e_g _| u) o v.
Multivector chevalley_mul(const Multivector& u, const Multivector& v, const BilinearForm& B);

// Clifford product, coproduct route (cliffordization):
//   u o v = sum b_ext(u_(2), v_(1)) * u_(1) ^ v_(2).
// Must agree with chevalley_mul everywhere; both are kept as mutual oracles.
Multivector cmul(const Multivector& u, const Multivector& v, const BilinearForm& B);

// cmul as a reusable closure sharing one b_ext table across calls.
ProductFn clifford_product(const BilinearForm& B);

// Exterior coproduct: every split of each blade into an ordered pair of
// complementary subblades, signed by the shuffle that reassembles the blade.
TensorPoly gco(const Multivector& u);

using CoproductFn = std::function<TensorPoly(const Multivector&)>;

// Applies a 1 -> 2 coproduct to slot `slot`; that slot becomes slots
// (slot, slot+1) and the rank grows by one.
TensorPoly coproduct_slot(const TensorPoly& t, std::size_t slot, const CoproductFn& d);
TensorPoly gco_slot(const TensorPoly& t, std::size_t slot);

// Graded componentwise product on rank-2 tensors:
//   (a @ b) * (c @ d) = (-1)^{|b||c|} (a ^ c) @ (b ^ d).
TensorPoly tensor_square_mul(const TensorPoly& a, const TensorPoly& b);

// Sign and leg-order choices for the exponentiated coproduct form: Direct
// weights e_i @ e_j by entry (i, j), Transposed by (j, i); Plus/Minus is the
// overall sign of the exponent. The golden corpus pins PlusDirect; the other
// variants are kept for experiments.
enum class CoscalarConvention { PlusDirect, PlusTransposed, MinusDirect, MinusTransposed };

// exp of the weighted sum of generator pairs in the graded tensor-square
// algebra; the series terminates at the dimension.
TensorPoly coscalar_unit(const BilinearForm& f,
                         CoscalarConvention conv = CoscalarConvention::PlusDirect);

// Deformed coproduct: gco followed by graded multiplication by the coscalar.
// Reduces to gco when the coproduct form is zero.
TensorPoly cco(const Multivector& u, const AlgebraContext& ctx);
TensorPoly cco_slot(const TensorPoly& t, std::size_t slot, const AlgebraContext& ctx);

}  // namespace gebra
