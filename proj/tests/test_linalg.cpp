#include "gradcon/linalg.hpp"

#include <random>

#include "doctest.h"

using namespace gradcon;

namespace {

Vec qvec(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.push_back(Q(x));
    return v;
}

std::vector<Vec> random_matrix(std::mt19937_64& rng, int rows, int cols) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Vec> m(rows, Vec(cols));
    for (auto& r : m)
        for (auto& x : r) x = q_of(num(rng), den(rng));
    return m;
}

Vec matvec(const std::vector<Vec>& m, const Vec& x) {
    Vec y(m.size());
    for (size_t i = 0; i < m.size(); i++)
        for (size_t j = 0; j < x.size(); j++) y[i] += m[i][j] * x[j];
    return y;
}

}  // namespace

TEST_CASE("rref of zero matrix has rank 0") {
    auto r = rref({qvec({0, 0, 0}), qvec({0, 0, 0})});
    CHECK(r.rank == 0);
}

TEST_CASE("kernel of identity is the zero subspace") {
    std::vector<Vec> id = {qvec({1, 0, 0}), qvec({0, 1, 0}), qvec({0, 0, 1})};
    CHECK(kernel(id, 3).dim() == 0);
}

TEST_CASE("solve and kernel against random matrices") {
    std::mt19937_64 rng(20240801);
    for (int trial = 0; trial < 50; trial++) {
        int rows = 1 + static_cast<int>(rng() % 6);
        int cols = 1 + static_cast<int>(rng() % 6);
        auto m = random_matrix(rng, rows, cols);
        // every kernel vector maps to zero
        RowSpace k = kernel(m, cols);
        for (const Vec& v : k.rows()) {
            Vec y = matvec(m, v);
            for (const Q& q : y) CHECK(q == 0);
        }
        // rank-nullity
        CHECK(k.dim() + rref(m).rank == cols);
        // M*solve(M,b) = b whenever solve succeeds
        Vec x0(cols);
        for (auto& q : x0) q = q_of(static_cast<long>(rng() % 7) - 3);
        Vec b = matvec(m, x0);
        auto x = solve(m, b);
        REQUIRE(x.has_value());
        Vec y = matvec(m, *x);
        CHECK(y == b);
    }
}

TEST_CASE("solve detects inconsistency") {
    std::vector<Vec> m = {qvec({1, 1}), qvec({2, 2})};
    CHECK(!solve(m, qvec({1, 3})).has_value());
    CHECK(solve(m, qvec({1, 2})).has_value());
}

TEST_CASE("subspace arithmetic") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; trial++) {
        int n = 4 + static_cast<int>(rng() % 4);
        auto mu = random_matrix(rng, 1 + rng() % 4, n);
        auto mv = random_matrix(rng, 1 + rng() % 4, n);
        RowSpace u = span(n, mu), v = span(n, mv);
        RowSpace s = space_sum(u, v), i = space_intersect(u, v);
        CHECK(s.dim() + i.dim() == u.dim() + v.dim());
        CHECK(space_intersect(u, u) == u);
        for (const Vec& r : i.rows()) {
            CHECK(u.contains(r));
            CHECK(v.contains(r));
        }
        // RREF canonicity: basis order independent
        auto shuffled = mu;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(span(n, shuffled) == u);
    }
}

TEST_CASE("sum of complementary coordinate subspaces is the full space") {
    RowSpace u(4), v(4);
    u.insert(qvec({1, 0, 0, 0}));
    u.insert(qvec({0, 1, 0, 0}));
    v.insert(qvec({0, 0, 1, 0}));
    v.insert(qvec({0, 0, 0, 1}));
    CHECK(space_sum(u, v).full());
    CHECK(space_intersect(u, v).dim() == 0);
}

TEST_CASE("coordinate solver recovers combinations") {
    CoordSolver cs(3);
    cs.add(qvec({1, 2, 0}));
    cs.add(qvec({0, 1, 1}));
    auto x = cs.coordinates(qvec({2, 5, 1}));
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 1);
    CHECK(!cs.coordinates(qvec({0, 0, 1})).has_value());
    CHECK(!cs.coordinates(qvec({1, 0, 0})).has_value());
}

TEST_CASE("sparse vectors round-trip and merge") {
    Vec d = qvec({0, 3, 0, -2, 0});
    SparseVec s = SparseVec::from_dense(d);
    CHECK(s.nnz() == 2);
    CHECK(s.dense(5) == d);
    SparseVec t = sparse_axpy(s, Q(2), s);
    CHECK(t.dense(5) == qvec({0, 9, 0, -6, 0}));
    SparseVec z = sparse_axpy(s, Q(-1), s);
    CHECK(z.empty());
}
