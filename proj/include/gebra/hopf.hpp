#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "gebra/clifford.hpp"
#include "gebra/context.hpp"
#include "gebra/endo.hpp"
#include "gebra/linsolve.hpp"

namespace gebra {

// name(1)*Id + name(2)*e1 + ... : a fully symbolic element over the canonical
// basis, coefficient indices following basis positions (1-based).
Multivector general_element(std::uint32_t dim, const std::string& name);

// Antipode of the undeformed structure; coincides with the main involution.
Multivector gantipode(const Multivector& u);
EndoMatrix gantipode_matrix(std::uint32_t dim);

// unit o counit: keeps the Id component, kills the rest.
EndoMatrix counit_unit_matrix(std::uint32_t dim);

// Convolution of two endomorphisms: (f * g)(x) = m((f @ g)(d(x))).
EndoMatrix convolution(const EndoMatrix& f, const EndoMatrix& g, const ProductFn& m,
                       const CoproductFn& d, std::uint32_t dim);

enum class ProductKind { Wedge, Clifford };
enum class CoproductKind { Grassmann, Clifford };

struct AntipodeSolution {
    SolveKind kind = SolveKind::Inconsistent;
    EndoMatrix matrix;  // filled unless Inconsistent; free unknowns stay symbolic
    std::set<Sym> free_unknowns;
    bool right_sided = false;  // also inverts on the right (checked when Unique)
};

// Solves m o (S @ id) o d = unit o counit for the matrix of S, treating every
// form entry symbolically. The product is wedge or the Clifford product of
// the context's product form; the coproduct is the exterior one or its
// deformation by the context's coproduct form.
AntipodeSolution solve_antipode(ProductKind product, CoproductKind coproduct,
                                const AlgebraContext& ctx);

// det(1 - B * BI) over the generator space, B and BI the two context forms:
// the factor that clears denominators when displaying the antipode of the
// doubly deformed structure.
RatFunc antipode_scale(const AlgebraContext& ctx);

// Recursive antipode: S(Id) = Id, and whenever d splits x as
// x @ Id + Id @ x + (cuts with both legs != Id),
//   S(x) = counit(x) Id - x - sum over cuts of m(S(a), b).
// Throws RecursionNotGrounded when a cut references a basis element whose
// antipode is not yet available (equal or higher in the canonical order), as
// happens for the deformed coproduct.
EndoMatrix milnor_moore_antipode(const ProductFn& m, const CoproductFn& d, std::uint32_t dim);

// Checks that the extended form of k and the extended form of -k are inverse
// to one another under convolution:
//   sum b_ext(x_(1), y_(2); k) * b_ext(x_(2), y_(1); -k) = counit(x) counit(y)
// for all basis x, y.
bool form_convolution_inverse_check(const BilinearForm& k);

// Pairing table of the whole blade space: entry (i, j) is the counit part of
// the Clifford product of basis i and basis j.
EndoMatrix bw_matrix(const BilinearForm& b);

// bw_matrix composed with the antipode on the second argument.
EndoMatrix bs_matrix(const BilinearForm& b);

// Form-driven braiding on slots (slot, slot+1): split both slots with the
// exterior coproduct, contract the two middle slots with the extended form
// taken with flipped arguments, then graded-swap the surviving pair.
TensorPoly bsw(const TensorPoly& t, std::size_t slot, const BilinearForm& f);

struct RMatrixSolution {
    SolveKind kind = SolveKind::Inconsistent;
    EndoMatrix matrix;  // coefficients over basis-pair positions
    std::set<Sym> free_unknowns;
    bool residual_zero = false;
};

// Solves for the coefficients R(i, j) of rr = sum R(i,j) basis_i @ basis_j in
//   gswitch(cco(X), 1) = sum R(i,j) (X_(1) ^ basis_i) @ (basis_j ^ X_(2))
// with X fully symbolic, then substitutes the solution back and records
// whether the residual vanishes identically.
RMatrixSolution solve_rmatrix(const AlgebraContext& ctx);

// Matrix of the bsw action on the pair basis, size 4^dim; the word (a, b)
// sits at position index(a) * 2^dim + index(b).
EndoMatrix yb_matrix(const BilinearForm& f);
RatFunc yb_det(const BilinearForm& f);

struct TriangularityReport {
    bool triangular = false;
    std::size_t row = 0, col = 0;  // witness entry of square - identity when not
    RatFunc witness;
};

// Does the braiding square to the identity on the pair basis?
TriangularityReport yb_triangular(const BilinearForm& f);

struct QtMatrices {
    EndoMatrix r, rs, rss, sr;
    bool rss_equals_r = false;
    bool rs_equals_sr = false;
};

// Scalar tables of the form product with the antipode applied to neither
// argument, the first, both, or the second.
QtMatrices qt_matrices(const BilinearForm& f);

}  // namespace gebra
