#include "gradcon/fano.hpp"

#include <algorithm>

namespace gradcon::fano {

bool is_collineation(const Perm& p) {
    if (p[0] != 0) return false;
    for (int i = 0; i < 8; i++)
        for (int j = 0; j < 8; j++)
            if (p[star(i, j)] != star(p[i], p[j])) return false;
    return true;
}

Perm compose(const Perm& a, const Perm& b) {
    Perm c{};
    for (int i = 0; i < 8; i++) c[i] = a[b[i]];
    return c;
}

Perm inverse(const Perm& p) {
    Perm q{};
    for (int i = 0; i < 8; i++) q[p[i]] = static_cast<std::uint8_t>(i);
    return q;
}

const std::vector<Perm>& collineation_group() {
    static const std::vector<Perm> group = [] {
        std::vector<Perm> out;
        std::array<std::uint8_t, 7> w = {1, 2, 3, 4, 5, 6, 7};
        do {
            Perm p{};
            p[0] = 0;
            for (int i = 0; i < 7; i++) p[i + 1] = w[i];
            // the homomorphism property needs checking on I x I only
            bool ok = true;
            for (int i = 1; i <= 7 && ok; i++)
                for (int j = i + 1; j <= 7 && ok; j++)
                    if (p[star(i, j)] != star(p[i], p[j])) ok = false;
            if (ok) out.push_back(p);
        } while (std::next_permutation(w.begin(), w.end()));
        return out;
    }();
    return group;
}

bool is_generating_triplet(int i, int j, int k) {
    if (i < 1 || i > 7 || j < 1 || j > 7 || k < 1 || k > 7) return false;
    if (i == j || j == k || i == k) return false;
    return k != star(i, j);
}

std::pair<int, int> pair_unindex(int idx) {
    for (int i = 0; i < 8; i++) {
        int base = i * 8 - i * (i - 1) / 2;
        if (idx < base + (8 - i)) return {i, i + (idx - base)};
    }
    return {-1, -1};
}

PairMask p_set(int i, int j, int k) {
    return pair_bit(i, j) | pair_bit(j, k) | pair_bit(k, i) | pair_bit(i, star(j, k)) |
           pair_bit(j, star(k, i)) | pair_bit(k, star(i, j));
}

PairMask apply_perm(const Perm& p, PairMask m) {
    PairMask out = 0;
    while (m) {
        int idx = __builtin_ctzll(m);
        m &= m - 1;
        auto [i, j] = pair_unindex(idx);
        out |= pair_bit(p[i], p[j]);
    }
    return out;
}

}  // namespace gradcon::fano
