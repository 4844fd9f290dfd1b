#include "gradcon/fano.hpp"

#include "doctest.h"

using namespace gradcon;
using namespace gradcon::fano;

TEST_CASE("star table basics") {
    CHECK(star(1, 2) == 5);  // g1+g2 = (1,1,0) = g5
    CHECK(star(0, 6) == 6);
    CHECK(star(4, 4) == 0);
    CHECK(star(1, 3) == 6);
    CHECK(star(2, 3) == 7);
    CHECK(star(1, 4) == 7);
    CHECK(star(2, 4) == 6);
    CHECK(star(3, 4) == 5);
    CHECK(star(5, 6) == 7);
}

TEST_CASE("star is commutative, associative, 2-torsion") {
    for (int i = 0; i < 8; i++) {
        CHECK(star(i, i) == 0);
        CHECK(star(i, 0) == i);
        for (int j = 0; j < 8; j++) {
            CHECK(star(i, j) == star(j, i));
            for (int k = 0; k < 8; k++) CHECK(star(star(i, j), k) == star(i, star(j, k)));
        }
    }
}

TEST_CASE("collineation group has order 168 and is a group") {
    const auto& g = collineation_group();
    CHECK(g.size() == 168);
    CHECK(g.front() == identity_perm());
    for (const auto& p : g) CHECK(is_collineation(p));
    // closure under composition and inverse (spot: all pairs of the first few,
    // all inverses)
    auto in_group = [&](const Perm& p) {
        for (const auto& q : g)
            if (q == p) return true;
        return false;
    };
    for (const auto& p : g) CHECK(in_group(inverse(p)));
    for (size_t a = 0; a < g.size(); a += 17)
        for (size_t b = 0; b < g.size(); b += 13) CHECK(in_group(compose(g[a], g[b])));
    // defining property at (1,2)
    for (const auto& p : g) CHECK(star(p[1], p[2]) == p[5]);
}

TEST_CASE("168 equals the number of ordered generating triplets, acted on freely") {
    int count = 0;
    for (int i = 1; i <= 7; i++)
        for (int j = 1; j <= 7; j++)
            for (int k = 1; k <= 7; k++)
                if (is_generating_triplet(i, j, k)) count++;
    CHECK(count == 168);
    // transitivity with trivial stabilizer on (1,2,3)
    int hits = 0;
    for (const auto& p : collineation_group())
        if (p[1] == 1 && p[2] == 2 && p[3] == 3) hits++;
    CHECK(hits == 1);
}

TEST_CASE("generating triplet edge cases") {
    CHECK(is_generating_triplet(1, 2, 3));
    CHECK(!is_generating_triplet(1, 2, 5));  // 5 = 1*2, a Fano line
    CHECK(!is_generating_triplet(0, 1, 2));
    CHECK(!is_generating_triplet(1, 1, 3));
}

TEST_CASE("pair indexing round-trips in the fixed order") {
    CHECK(pair_index(0, 0) == 0);
    CHECK(pair_index(0, 7) == 7);
    CHECK(pair_index(1, 1) == 8);
    CHECK(pair_index(2, 2) == 15);
    CHECK(pair_index(7, 7) == 35);
    CHECK(pair_index(2, 1) == pair_index(1, 2));
    for (int idx = 0; idx < 36; idx++) {
        auto [i, j] = pair_unindex(idx);
        CHECK(pair_index(i, j) == idx);
    }
}

TEST_CASE("p_set examples") {
    // P_{1,2,3} = {12,23,31,17,26,35}
    PairMask expect = pair_bit(1, 2) | pair_bit(2, 3) | pair_bit(3, 1) | pair_bit(1, 7) |
                      pair_bit(2, 6) | pair_bit(3, 5);
    CHECK(p_set(1, 2, 3) == expect);
    CHECK(p_set(0, 0, 0) == pair_bit(0, 0));
    for (int j = 1; j <= 7; j++)
        CHECK(p_set(0, j, j) == (pair_bit(0, 0) | pair_bit(0, j) | pair_bit(j, j)));
    // symmetric in its arguments
    CHECK(p_set(1, 2, 3) == p_set(3, 1, 2));
    CHECK(p_set(1, 2, 3) == p_set(2, 1, 3));
    CHECK(p_set(4, 6, 2) == p_set(2, 4, 6));
}
