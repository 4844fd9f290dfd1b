#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gradcon/fano.hpp"

namespace gradcon::gns {

using Mask = fano::PairMask;  // subset of the 36 unordered pairs over I0

inline constexpr Mask kX0 = fano::kAllPairs;

// The 21 pairs {i,j}, i != j, i,j in I (no zero, no diagonal).
Mask x_mask();
Mask diagonal_mask();  // the 7 pairs {j,j}, j in I

struct TripleWitness {
    int i = -1, j = -1, k = -1;
};

// Generalised nice set test: for all i,j,k in I0, {i,j},{i*j,k} in T implies
// P_{i,j,k} included in T. Scans all 512 triples; the witness (when given)
// receives the first violating triple.
bool is_gns(Mask t, TripleWitness* witness = nullptr);

// Nice set test over the ground set X, with the premise restricted to
// generating triplets. Throws when t has a pair outside X.
bool is_nice(Mask t, TripleWitness* witness = nullptr);

// Least generalised nice superset; idempotent, extensive, monotone.
Mask closure(Mask t);
Mask nice_closure(Mask t);  // same over the ground set X

// Every generalised nice set exactly once, in lectic order.
std::vector<Mask> enumerate_all_gns();
// Every nice set (subsets of X) exactly once, in lectic order.
std::vector<Mask> enumerate_all_nice();

Mask apply_collineation(const fano::Perm& sigma, Mask t);
// Minimal mask over the collineation orbit.
Mask canonical_form(Mask t);

struct Orbit {
    Mask canon = 0;
    std::vector<Mask> members;  // sorted ascending
};

// Partition under the collineation action; orbits sorted by canonical mask.
std::vector<Orbit> orbit_classify(const std::vector<Mask>& sets);

// ---- named families ----------------------------------------------------

Mask named_s(int i);               // S_0..S_13
Mask named_e(std::uint8_t jset);   // E_J, J as bits 1..7
Mask named_f(std::uint8_t jset);   // F_J
Mask named_p0jj(int j);            // {00, 0j, jj}
Mask named_y(int card);            // Y_7, Y_10, Y_11, Y_15, Y_19, Y_26

// Textual notation: whitespace/comma separated two-digit pairs "ij" with
// i <= j, or named forms joined by '+': "S7+E_124", "F_I", "Y19", "X0",
// "P044". Throws std::invalid_argument on malformed input.
Mask parse(const std::string& text);
std::string format_pairs(Mask t);  // canonical "ij" list, ascending

struct SupportStats {
    std::uint8_t k_set = 0;      // K(T) as bits over 1..7, from T intersect X
    std::uint8_t jstar_set = 0;  // {k*j : {k,j} in T intersect X}
    std::array<int, 8> n{};      // n_(i,T) = |{j in I : ij in T}|, i in I0
};
SupportStats support_stats(Mask t);

// ---- classification data -----------------------------------------------

struct NamedGns {
    enum class Kind { SPlusE, SPlusF, SPlusP, Y, X0Full };
    std::string name;
    Mask mask = 0;
    Kind kind = Kind::SPlusE;
    int s = 0;             // S index; 0 with jset==0 means the empty set
    std::uint8_t jset = 0; // J for E/F kinds, bits 1..7
    int pj = 0;            // j for the P_{0,j,j} kinds
    int y = 0;             // 7,10,11,15,19,26
};

// The 245 generalised nice sets up to collineation, as listed.
const std::vector<NamedGns>& classified_245();
// The 215 graded-isomorphism class representatives, a sublist of the above.
const std::vector<NamedGns>& representatives_215();

const NamedGns* find_named(const std::string& name);

}  // namespace gradcon::gns
