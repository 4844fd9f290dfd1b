#include "gradcon/hurwitz.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "gradcon/fano.hpp"

using namespace gradcon;
using fano::star;

namespace {

CompElem random_oct(std::mt19937_64& rng, Hurwitz alg = Hurwitz::O) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    CompElem x = comp_zero(alg);
    for (int i : hurwitz_indices(alg)) x.c[i] = q_of(num(rng), den(rng));
    return x;
}

// Independent re-run of the orientation scan: all 128 cyclic orientations of
// the seven Fano lines, filtered by linearized alternativity, multiplicative
// norm on sampled rational pairs, and e2 e5 = +e1; lexicographically first
// survivor wins. Must reproduce kOctSign.
std::array<std::array<int, 8>, 8> oracle_sign_table() {
    std::vector<std::array<int, 3>> lines;
    for (int i = 1; i <= 7; i++)
        for (int j = i + 1; j <= 7; j++)
            if (star(i, j) > j) lines.push_back({i, j, star(i, j)});
    REQUIRE(lines.size() == 7);
    std::mt19937_64 rng(424242);
    for (int mask = 0; mask < 128; mask++) {
        std::array<std::array<int, 8>, 8> s{};
        for (int j = 0; j < 8; j++) s[0][j] = s[j][0] = 1;
        for (int i = 1; i <= 7; i++) s[i][i] = -1;
        for (size_t li = 0; li < lines.size(); li++) {
            auto [a, b, c] = lines[li];
            std::array<int, 3> cyc = (mask >> li & 1) ? std::array<int, 3>{a, c, b} : std::array<int, 3>{a, b, c};
            for (int t = 0; t < 3; t++) {
                s[cyc[t]][cyc[(t + 1) % 3]] = 1;
                s[cyc[(t + 1) % 3]][cyc[t]] = -1;
            }
        }
        if (s[2][5] != 1) continue;
        auto assoc = [&](int a, int b, int c) {
            return s[a][b] * s[star(a, b)][c] - s[b][c] * s[a][star(b, c)];
        };
        bool ok = true;
        for (int a = 0; a < 8 && ok; a++)
            for (int b = 0; b < 8 && ok; b++)
                for (int c = 0; c < 8 && ok; c++)
                    if (assoc(a, b, c) + assoc(b, a, c) != 0 || assoc(a, b, c) + assoc(a, c, b) != 0)
                        ok = false;
        if (!ok) continue;
        // multiplicative norm on sampled exact rational pairs
        auto mul = [&](const std::array<Q, 8>& x, const std::array<Q, 8>& y) {
            std::array<Q, 8> r{};
            for (int i = 0; i < 8; i++)
                for (int j = 0; j < 8; j++)
                    if (x[i] != 0 && y[j] != 0) r[star(i, j)] += Q(s[i][j]) * x[i] * y[j];
            return r;
        };
        auto nrm = [](const std::array<Q, 8>& x) {
            Q n = 0;
            for (const Q& q : x) n += q * q;
            return n;
        };
        for (int t = 0; t < 20 && ok; t++) {
            std::array<Q, 8> x{}, y{};
            for (int i = 0; i < 8; i++) {
                x[i] = q_of(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3));
                y[i] = q_of(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3));
            }
            if (nrm(mul(x, y)) != nrm(x) * nrm(y)) ok = false;
        }
        if (ok) return s;  // lexicographically first survivor
    }
    REQUIRE(false);
    return {};
}

}  // namespace

TEST_CASE("canonical sign table matches the orientation oracle and the data file") {
    auto s = oracle_sign_table();
    for (int i = 0; i < 8; i++)
        for (int j = 0; j < 8; j++) CHECK(s[i][j] == kOctSign[i][j]);
    std::ifstream in("data/octonion_signs.txt");
    if (!in) in.open("../data/octonion_signs.txt");
    if (!in) in.open("../../data/octonion_signs.txt");
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == sign_table_text());
}

TEST_CASE("basic products") {
    auto e = [](int i) { return comp_unit(Hurwitz::O, i); };
    CHECK(comp_eq(comp_mul(e(2), e(5)), e(1)));
    CHECK(comp_eq(comp_mul(e(5), e(2)), comp_scale(Q(-1), e(1))));
    CHECK(comp_eq(comp_mul(e(0), e(6)), e(6)));
    for (int i = 1; i <= 7; i++) CHECK(comp_eq(comp_mul(e(i), e(i)), comp_scale(Q(-1), e(0))));
}

TEST_CASE("norm, conjugation, trace, quadratic relation on random elements") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 100; t++) {
        CompElem a = random_oct(rng), b = random_oct(rng);
        CHECK(comp_norm(comp_mul(a, b)) == comp_norm(a) * comp_norm(b));
        // a conj(a) = n(a) 1
        CompElem n1 = comp_mul(a, comp_conj(a));
        CHECK(comp_eq(n1, comp_scale(comp_norm(a), comp_unit(Hurwitz::O, 0))));
        // a^2 - t(a) a + n(a) 1 = 0
        CompElem lhs = comp_sub(comp_mul(a, a), comp_scale(comp_trace(a), a));
        lhs = comp_add(lhs, comp_scale(comp_norm(a), comp_unit(Hurwitz::O, 0)));
        CHECK(comp_is_zero(lhs));
        // alternativity
        CHECK(comp_is_zero(comp_associator(a, a, b)));
        CHECK(comp_is_zero(comp_associator(a, b, a)));
        CHECK(comp_is_zero(comp_associator(b, a, a)));
    }
}

TEST_CASE("norm is multiplicative on all 64 basis pairs") {
    for (int i = 0; i < 8; i++)
        for (int j = 0; j < 8; j++) {
            CompElem a = comp_unit(Hurwitz::O, i), b = comp_unit(Hurwitz::O, j);
            CHECK(comp_norm(comp_mul(a, b)) == comp_norm(a) * comp_norm(b));
        }
}

TEST_CASE("subalgebra towers close under multiplication; mixed operands rejected") {
    for (Hurwitz alg : {Hurwitz::F, Hurwitz::K, Hurwitz::H}) {
        std::mt19937_64 rng(7 + static_cast<int>(alg));
        for (int t = 0; t < 20; t++) {
            CompElem a = random_oct(rng, alg), b = random_oct(rng, alg);
            CompElem p = comp_mul(a, b);
            for (int i = 0; i < 8; i++)
                if (p.c[i] != 0) CHECK(hurwitz_local_index(alg, i) >= 0);
        }
    }
    CHECK_THROWS(comp_mul(comp_unit(Hurwitz::H, 1), comp_unit(Hurwitz::O, 1)));
    CHECK_THROWS(comp_unit(Hurwitz::H, 3));
}

TEST_CASE("commutator identities used downstream") {
    auto e = [](int i) { return comp_unit(Hurwitz::O, i); };
    // [e_i, e_i e_k] = -2 e_k for distinct i,k in I
    for (int i = 1; i <= 7; i++)
        for (int k = 1; k <= 7; k++) {
            if (i == k) continue;
            CompElem c = comp_commutator(e(i), comp_mul(e(i), e(k)));
            CHECK(comp_eq(c, comp_scale(Q(-2), e(k))));
        }
    // oriented line: e_j (e_i e_j) with sign gives 2 e_i
    for (int j = 1; j <= 7; j++)
        for (int i = 1; i <= 7; i++) {
            if (i == j) continue;
            // [e_j, e_{i*j}] = 2 s e_i with s the sign of e_j e_{i*j} against e_i
            CompElem c = comp_commutator(e(j), e(star(i, j)));
            CHECK(comp_eq(c, comp_scale(Q(2 * kOctSign[j][star(i, j)]), e(i))));
        }
}

TEST_CASE("d_operator properties") {
    std::mt19937_64 rng(3);
    auto e = [](int i) { return comp_unit(Hurwitz::O, i); };
    CompElem a = random_oct(rng), b = random_oct(rng);
    // D_{1,a} = 0 and antisymmetry
    Vec z = d_operator(comp_unit(Hurwitz::O, 0), a);
    for (const Q& q : z) CHECK(q == 0);
    Vec dab = d_operator(a, b), dba = d_operator(b, a);
    for (int t = 0; t < 64; t++) CHECK(dab[t] == -dba[t]);
    // derivation property on random pairs
    for (int t = 0; t < 10; t++) {
        CompElem x = random_oct(rng), y = random_oct(rng);
        CompElem lhs = endo_apply(Hurwitz::O, dab, comp_mul(x, y));
        CompElem rhs = comp_add(comp_mul(endo_apply(Hurwitz::O, dab, x), y),
                                comp_mul(x, endo_apply(Hurwitz::O, dab, y)));
        CHECK(comp_eq(lhs, rhs));
    }
    // D_{e_i,e_k}(e_i) = 4 e_k for distinct i,k in I
    for (int i = 1; i <= 7; i++)
        for (int k = 1; k <= 7; k++) {
            if (i == k) continue;
            CompElem img = endo_apply(Hurwitz::O, d_operator(e(i), e(k)), e(i));
            CHECK(comp_eq(img, comp_scale(Q(4), e(k))));
        }
}

TEST_CASE("derivation algebra dimensions and graded split") {
    CHECK(derivation_algebra(Hurwitz::F).dim() == 0);
    CHECK(derivation_algebra(Hurwitz::K).dim() == 0);
    CHECK(derivation_algebra(Hurwitz::H).dim() == 3);
    OctDerivations dero = derivation_algebra(Hurwitz::O);
    CHECK(dero.dim() == 14);
    CHECK(dero.block[0].empty());
    for (int i = 1; i <= 7; i++) {
        CHECK(dero.block[i].size() == 2);
        for (const Vec& d : dero.block[i]) {
            // d(e_i) = 0 and d maps O_{g_j} to O_{g_{i*j}} by construction;
            // verify the Leibniz property directly
            CompElem img = endo_apply(Hurwitz::O, d, comp_unit(Hurwitz::O, i));
            CHECK(comp_is_zero(img));
            for (int a = 0; a < 8; a++)
                for (int b = 0; b < 8; b++) {
                    CompElem x = comp_unit(Hurwitz::O, a), y = comp_unit(Hurwitz::O, b);
                    CompElem lhs = endo_apply(Hurwitz::O, d, comp_mul(x, y));
                    CompElem rhs = comp_add(comp_mul(endo_apply(Hurwitz::O, d, x), y),
                                            comp_mul(x, endo_apply(Hurwitz::O, d, y)));
                    CHECK(comp_eq(lhs, rhs));
                }
        }
    }
    // span of all D_{e_i,e_j} equals der(O)
    RowSpace span_d(64);
    for (int i = 0; i < 8; i++)
        for (int j = i + 1; j < 8; j++)
            span_d.insert(d_operator(comp_unit(Hurwitz::O, i), comp_unit(Hurwitz::O, j)));
    CHECK(span_d.dim() == 14);
    for (const Vec& d : dero.basis) CHECK(span_d.contains(d));
    // each D_i is abelian: [D_i, D_i] = 0
    for (int i = 1; i <= 7; i++) {
        Vec comm = endo_commutator(dero.block[i][0], dero.block[i][1], 8);
        for (const Q& q : comm) CHECK(q == 0);
    }
}
