#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gradcon/fano.hpp"
#include "gradcon/jordan.hpp"
#include "gradcon/linalg.hpp"

namespace gradcon {

// Graded Lie algebra given by basis labels, a degree map into I0 and sparse
// structure constants stored for i < j (antisymmetry implied).
struct LiePresentation {
    Hurwitz alg = Hurwitz::F;
    int dim = 0;
    std::vector<std::uint8_t> degree;
    std::vector<std::string> labels;
    std::vector<SparseVec> ut;  // [b_i, b_j] for i < j

    struct Range {
        int lo = 0, hi = 0;  // [lo, hi)
        int size() const { return hi - lo; }
    };
    std::array<std::vector<int>, 8> block;  // global indices per degree, ascending
    std::array<Range, 8> d_range{};         // D_i inside the basis, i in I
    std::array<Range, 8> m_range{};         // M_i = e_i (x) J0
    Range l0_range{};                       // der(J) part

    int ut_index(int i, int j) const { return i * (2 * dim - i - 1) / 2 + (j - i - 1); }
    const SparseVec& c(int i, int j) const { return ut[ut_index(i, j)]; }
    SparseVec& c_mut(int i, int j) { return ut[ut_index(i, j)]; }

    // acc += s * [b_i, v]
    void ad_acc(int i, const SparseVec& v, const Q& s, DenseAccum& acc) const;
    SparseVec bracket_units(int i, int j) const;
    SparseVec bracket(const SparseVec& x, const SparseVec& y) const;

    int block_dim(int g) const { return static_cast<int>(block[g].size()); }
    int local_index(int global) const;  // position inside block[degree[global]]

    // does any basis pair of degrees (g,h) have a nonzero bracket
    std::array<std::array<bool, 8>, 8> block_nonzero() const;

    void rebuild_blocks();  // recomputes block lists from the degree map
};

bool verify_grading(const LiePresentation& l);

enum class JacobiMode { Exhaustive, Blocked, Sampled };

struct JacobiOptions {
    JacobiMode mode = JacobiMode::Blocked;
    std::uint64_t seed = 1;
    long samples = 20000;
    int workers = 0;  // 0 = hardware concurrency
};

// nullopt on success; otherwise the first failing basis triple i<j<k in
// lexicographic order.
std::optional<std::array<int, 3>> verify_jacobi(const LiePresentation& l, const JacobiOptions& opts = {});

struct BlockKilling {
    std::array<std::vector<Vec>, 8> gram;  // block_dim x block_dim per degree
    std::array<int, 8> rank{};
    int total_rank = 0;
    int dim = 0;
};

BlockKilling killing_form(const LiePresentation& l);
bool is_killing_nondegenerate(const LiePresentation& l);

// Graded subspace, one row space per degree in block-local coordinates.
struct GradedSubspace {
    std::array<RowSpace, 8> blocks;

    static GradedSubspace zero(const LiePresentation& l);
    static GradedSubspace full(const LiePresentation& l);
    int total_dim() const;
    std::array<int, 8> dims() const;
    bool contains(const GradedSubspace& other) const;
    bool operator==(const GradedSubspace& o) const { return blocks == o.blocks; }
};

// Build context: the presentation plus the bases and coordinate tables used
// to construct elements and maps.
class TitsContext {
  public:
    explicit TitsContext(Hurwitz c);
    static const TitsContext& get(Hurwitz c);  // cached

    const LiePresentation& L() const { return pres_; }
    Hurwitz alg() const { return pres_.alg; }
    const JordanBasis& jordan() const { return jb_; }
    const OctDerivations& der_o() const { return dero_; }
    const std::vector<Vec>& der_j_basis() const { return derj_; }

    int d_index(int i, int t) const { return (i - 1) * 2 + t; }
    int m_index(int i, int a) const { return 14 + (i - 1) * jb_.dim0() + a; }
    int j_index(int t) const { return 14 + 7 * jb_.dim0() + t; }

    // element embeddings into presentation coordinates
    SparseVec embed_m(int i, const JordanElem& u) const;  // e_i (x) u, u traceless
    SparseVec embed_der_o(const Vec& endo8) const;
    SparseVec embed_der_j(const Vec& endoJ) const;

    // D_{e_i,e_j} in der(O)-basis coordinates (global indices 0..13)
    SparseVec d_ab_coords(int i, int j) const;
    // [R_u, R_v] embedded in the der(J) part
    SparseVec inner_deriv_embedded(const JordanElem& u, const JordanElem& v) const;

    // the derivation of O with d(e_i)=0, d(e_j)=0, d(e_l) = (e_k e_l)/2, as
    // der(O)-basis coordinates; unique for k on the line {i,j,i*j} and l off
    // the line. Throws when the constraints are unsolvable.
    Vec line_derivation_x(int i, int j, int k, int l) const;

  private:
    LiePresentation pres_;
    const JordanBasis& jb_;
    OctDerivations dero_;
    std::vector<Vec> derj_;         // RREF rows of der(J)
    RowSpace derj_space_;
    CoordSolver dero_coords_;
    void build();
};

inline LiePresentation build_tits(Hurwitz c) { return TitsContext(c).L(); }

// Linear map given by basis images.
struct BasisMap {
    int dim = 0;
    std::vector<SparseVec> image;
    fano::Perm sigma = fano::identity_perm();  // induced block permutation
};

BasisMap identity_map(const LiePresentation& l);
SparseVec apply_map(const BasisMap& f, const SparseVec& v);

// Signs c with c_0 = +1 making e_i -> c_i e_sigma(i) an algebra automorphism
// of O. The all-plus assignment works only on an order-21 subgroup; every
// collineation admits one.
std::array<int, 8> collineation_signs(const fano::Perm& sigma);

// Lift of a collineation to an automorphism of T(C): D_{e_i,e_j} ->
// c_i c_j D_{e_sigma(i),e_sigma(j)}, e_i (x) u -> c_i e_sigma(i) (x) u,
// identity on der(J), with the signs above (all +1 whenever the sign-free
// prescription is linearly consistent). The der(O)-block matrix is solved
// from the 21 generator images; throws if inconsistent.
BasisMap weyl_lift(const TitsContext& ctx, const fano::Perm& sigma);

enum class SubalgebraKind { DerJ, InnStr, Tkk };
// DerJ: L_0. InnStr: L_0 + M_j (param = j). Tkk: sum of L_0 and the L_i on
// the Fano line through {param, param2}.
GradedSubspace distinguished_subalgebra(const TitsContext& ctx, SubalgebraKind kind, int param = 1,
                                        int param2 = 2);

// Structure-constant cache file, byte-stable across runs.
std::string serialize_presentation(const LiePresentation& l, const std::string& gns = "");
LiePresentation parse_presentation(const std::string& text);

}  // namespace gradcon
