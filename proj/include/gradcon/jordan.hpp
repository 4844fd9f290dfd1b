#pragma once

#include <array>
#include <vector>

#include "gradcon/hurwitz.hpp"
#include "gradcon/linalg.hpp"

namespace gradcon {

// Hermitian 3x3 matrix over C: rational diagonal, off-diagonal entries in C
// at positions (0,1), (0,2), (1,2); the transposed entries are conjugates.
struct JordanElem {
    Hurwitz alg = Hurwitz::F;
    std::array<Q, 3> diag{};
    std::array<CompElem, 3> off{};  // (0,1), (0,2), (1,2)
};

JordanElem jordan_zero(Hurwitz a);
JordanElem jordan_identity(Hurwitz a);
JordanElem jordan_diag_unit(Hurwitz a, int i);  // E_{ii}
// Hermitian matrix with x at off-diagonal position p and conj(x) opposite.
JordanElem jordan_off(Hurwitz a, int p, const CompElem& x);
JordanElem jordan_add(const JordanElem&, const JordanElem&);
JordanElem jordan_sub(const JordanElem&, const JordanElem&);
JordanElem jordan_scale(const Q&, const JordanElem&);
bool jordan_eq(const JordanElem&, const JordanElem&);
bool jordan_is_zero(const JordanElem&);

// u . v = (uv + vu)/2 under the ordinary matrix product over C.
JordanElem jordan_mul(const JordanElem&, const JordanElem&);
Q jordan_trace(const JordanElem&);
// u * v = u.v - tr(u.v)/3, defined on traceless elements (throws otherwise).
JordanElem star_mul(const JordanElem&, const JordanElem&);

// Fixed ordered basis of J = H3(C): E11, E22, E33, then for each off-diagonal
// position (0,1), (0,2), (1,2) and each C-basis unit e_c the hermitian matrix
// with e_c and its conjugate. dim J = 3*dim C + 3. The traceless subspace J0
// has the basis E11-E22, E22-E33 followed by the same off-diagonal vectors.
class JordanBasis {
  public:
    explicit JordanBasis(Hurwitz a);

    Hurwitz alg() const { return alg_; }
    int dim() const { return dim_; }    // 3l+3
    int dim0() const { return dim_ - 1; }

    const JordanElem& element(int k) const { return basis_[k]; }
    const JordanElem& element0(int k) const { return basis0_[k]; }
    Vec coords(const JordanElem& u) const;
    JordanElem from_coords(const Vec& v) const;
    Vec coords0(const JordanElem& u) const;  // throws unless traceless
    JordanElem from_coords0(const Vec& v) const;

    // Right/left multiplication operator by u, as an endomorphism of J in
    // basis coordinates (row-major dim x dim).
    Vec r_operator(const JordanElem& u) const;
    // [R_u, R_v], an inner derivation of J.
    Vec inner_derivation(const JordanElem& u, const JordanElem& v) const;
    JordanElem apply_endo(const Vec& endo, const JordanElem& u) const;

    // Jordan product of basis elements, as coordinates (precomputed).
    const Vec& mul_table(int a, int b) const { return mul_[a * dim_ + b]; }

  private:
    Hurwitz alg_;
    int dim_;
    std::vector<JordanElem> basis_;
    std::vector<JordanElem> basis0_;
    std::vector<Vec> mul_;
};

const JordanBasis& jordan_basis(Hurwitz a);  // cached

// RREF basis of der(J) = span of all inner derivations [R_u, R_v].
const RowSpace& jordan_derivation_algebra(Hurwitz a);  // cached
// Kernel of the Leibniz condition, computed blockwise along the natural
// Z_2^3-grading of J; equals the span above (checked in tests).
RowSpace jordan_leibniz_kernel(Hurwitz a);

// Helpers over C = F (symmetric 3x3 matrices): e_ij^+ = E_ij + E_ji and the
// operator ad(e_ij^-) : u -> (E_ij - E_ji) u - u (E_ij - E_ji).
JordanElem sym_plus(int i, int j);
Vec ad_skew(int i, int j);  // endomorphism of H3(F) in basis coordinates

}  // namespace gradcon
