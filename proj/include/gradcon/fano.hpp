#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace gradcon::fano {

// Labels of Z_2^3: g_0=(0,0,0), g_1=(1,0,0), g_2=(0,1,0), g_3=(0,0,1),
// g_4=(1,1,1), g_5=(1,1,0), g_6=(1,0,1), g_7=(0,1,1), encoded as 3-bit
// integers a*4+b*2+c. This table is the single source of truth for the
// index operation; i*j is NOT integer xor of the labels (1*2 = 5, not 3).
inline constexpr std::array<int, 8> kGroupBits = {0, 4, 2, 1, 7, 6, 5, 3};

namespace detail {
consteval std::array<int, 8> bit_to_index() {
    std::array<int, 8> inv{};
    for (int i = 0; i < 8; i++) inv[kGroupBits[i]] = i;
    return inv;
}
consteval std::array<std::array<int, 8>, 8> star_table() {
    std::array<std::array<int, 8>, 8> t{};
    auto inv = bit_to_index();
    for (int i = 0; i < 8; i++)
        for (int j = 0; j < 8; j++) t[i][j] = inv[kGroupBits[i] ^ kGroupBits[j]];
    return t;
}
inline constexpr auto kStar = star_table();
}  // namespace detail

// i * j, the index with g_i + g_j = g_{i*j}.
inline int star(int i, int j) { return detail::kStar[i][j]; }

// Bijection of {0..7} fixing 0; a collineation additionally preserves *.
using Perm = std::array<std::uint8_t, 8>;

inline Perm identity_perm() { return {0, 1, 2, 3, 4, 5, 6, 7}; }
bool is_collineation(const Perm& p);
Perm compose(const Perm& a, const Perm& b);  // (a o b)(i) = a[b[i]]
Perm inverse(const Perm& p);

// All 168 collineations, in lexicographic order of (p[1],...,p[7]).
const std::vector<Perm>& collineation_group();

// {i,j,k} in I, pairwise distinct, with k != i*j.
bool is_generating_triplet(int i, int j, int k);

// Unordered pairs {i,j} over I0, indexed 0..35 in the fixed order
// 00,01,...,07,11,12,...,17,22,...,77.
inline int pair_index(int i, int j) {
    if (i > j) std::swap(i, j);
    return i * 8 - i * (i - 1) / 2 + (j - i);
}
std::pair<int, int> pair_unindex(int idx);

using PairMask = std::uint64_t;
inline constexpr PairMask kAllPairs = (PairMask{1} << 36) - 1;
inline PairMask pair_bit(int i, int j) { return PairMask{1} << pair_index(i, j); }

// P_{i,j,k} = {ij, jk, ki, i(j*k), j(k*i), k(i*j)} as a pair mask; indices may
// repeat, duplicates collapse.
PairMask p_set(int i, int j, int k);

// Induced action of a bijection of I0 on pair masks.
PairMask apply_perm(const Perm& p, PairMask m);

}  // namespace gradcon::fano
