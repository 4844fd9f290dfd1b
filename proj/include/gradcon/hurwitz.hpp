#pragma once

#include <array>
#include <string>
#include <vector>

#include "gradcon/linalg.hpp"

namespace gradcon {

enum class Hurwitz { F, K, H, O };

const char* hurwitz_name(Hurwitz c);          // "F","K","H","O"
Hurwitz hurwitz_from_name(const std::string&);
int hurwitz_dim(Hurwitz c);                   // 1, 2, 4, 8

// Ascending index set I_C: F {0}, K {0,1}, H {0,1,2,5}, O all of 0..7.
const std::vector<int>& hurwitz_indices(Hurwitz c);
int hurwitz_local_index(Hurwitz c, int i);  // -1 when e_i not in C

// Canonical sign table: e_i e_j = kOctSign[i][j] * e_{i*j}. Fixed once by a
// brute-force scan of the 128 orientations of the seven Fano lines, keeping
// those that give an alternative algebra with multiplicative norm and
// e2*e5 = +e1, and taking the lexicographically first survivor. Committed to
// data/octonion_signs.txt; the test suite re-runs the scan and compares.
extern const std::array<std::array<int, 8>, 8> kOctSign;
std::string sign_table_text();  // the committed file contents

struct CompElem {
    Hurwitz alg = Hurwitz::O;
    std::array<Q, 8> c{};
};

CompElem comp_zero(Hurwitz a);
CompElem comp_unit(Hurwitz a, int i);
CompElem comp_add(const CompElem&, const CompElem&);
CompElem comp_sub(const CompElem&, const CompElem&);
CompElem comp_scale(const Q&, const CompElem&);
bool comp_is_zero(const CompElem&);
bool comp_eq(const CompElem&, const CompElem&);

CompElem comp_mul(const CompElem&, const CompElem&);
CompElem comp_conj(const CompElem&);
Q comp_norm(const CompElem&);
Q comp_trace(const CompElem&);
CompElem comp_commutator(const CompElem&, const CompElem&);
CompElem comp_associator(const CompElem&, const CompElem&, const CompElem&);

// Endomorphisms of C in local coordinates, stored as row-major vectors of
// length n*n with n = dim C: E[r*n + c] = coefficient of e_{idx[r]} in the
// image of e_{idx[c]}.
Vec endo_mul(const Vec& a, const Vec& b, int n);
Vec endo_commutator(const Vec& a, const Vec& b, int n);
CompElem endo_apply(Hurwitz alg, const Vec& endo, const CompElem& x);

// D_{a,b} = [l_a,l_b] + [l_a,r_b] + [r_a,r_b], a derivation of O (8x8, local
// coordinates = global since I_O = I0).
Vec d_operator(const CompElem& a, const CompElem& b);

struct OctDerivations {
    Hurwitz alg;
    int n;                                      // dim C
    std::array<std::vector<Vec>, 8> block;      // RREF basis of der(C)_{g_i}
    std::vector<Vec> basis;                     // concatenated by ascending degree
    int dim() const { return static_cast<int>(basis.size()); }
};

// Basis of der(C) from the Leibniz-condition kernel, split by degree
// (d in der(C)_{g_i} maps e_j to a multiple of e_{i*j}).
OctDerivations derivation_algebra(Hurwitz c);

}  // namespace gradcon
