#include "gradcon/tits.hpp"

#include <random>

#include "doctest.h"

using namespace gradcon;
using fano::star;

TEST_CASE("dimensions and block layout of T(C)") {
    const int expect_dim[] = {52, 78, 133, 248};
    const int expect_l0[] = {3, 8, 21, 52};
    const int expect_li[] = {7, 10, 16, 28};
    int t = 0;
    for (Hurwitz c : {Hurwitz::F, Hurwitz::K, Hurwitz::H, Hurwitz::O}) {
        const LiePresentation& l = TitsContext::get(c).L();
        CHECK(l.dim == expect_dim[t]);
        CHECK(l.block_dim(0) == expect_l0[t]);
        for (int i = 1; i <= 7; i++) {
            CHECK(l.block_dim(i) == expect_li[t]);
            CHECK(l.d_range[i].size() == 2);
            CHECK(l.m_range[i].size() == expect_li[t] - 2);
        }
        CHECK(verify_grading(l));
        t++;
    }
}

TEST_CASE("jacobi holds exhaustively for T(F) and T(K)") {
    CHECK(!verify_jacobi(TitsContext::get(Hurwitz::F).L(), {JacobiMode::Exhaustive, 0, 0, 2}));
    CHECK(!verify_jacobi(TitsContext::get(Hurwitz::K).L(), {JacobiMode::Exhaustive, 0, 0, 2}));
}

TEST_CASE("jacobi sampled for T(H) and T(O)") {
    CHECK(!verify_jacobi(TitsContext::get(Hurwitz::H).L(), {JacobiMode::Sampled, 17, 4000, 1}));
    CHECK(!verify_jacobi(TitsContext::get(Hurwitz::O).L(), {JacobiMode::Sampled, 17, 1500, 1}));
}

TEST_CASE("a corrupted structure constant fails jacobi with a witness") {
    LiePresentation l = TitsContext::get(Hurwitz::F).L();
    for (int i = 0; i < l.dim; i++) {
        bool done = false;
        for (int j = i + 1; j < l.dim; j++)
            if (!l.c(i, j).empty()) {
                l.c_mut(i, j).terms[0].second += 7;
                done = true;
                break;
            }
        if (done) break;
    }
    auto w = verify_jacobi(l, {JacobiMode::Exhaustive, 0, 0, 2});
    REQUIRE(w.has_value());
    // the witness triple genuinely fails
    DenseAccum acc(l.dim);
    l.ad_acc((*w)[0], l.c((*w)[1], (*w)[2]), Q(1), acc);
    l.ad_acc((*w)[1], l.c((*w)[0], (*w)[2]), Q(-1), acc);
    l.ad_acc((*w)[2], l.c((*w)[0], (*w)[1]), Q(1), acc);
    CHECK(!acc.is_zero());
}

TEST_CASE("defining bracket on M-blocks: [e_i x u, e_i x v] = -4 [R_u, R_v]") {
    for (Hurwitz c : {Hurwitz::F, Hurwitz::H}) {
        const TitsContext& ctx = TitsContext::get(c);
        const JordanBasis& jb = ctx.jordan();
        std::mt19937_64 rng(3);
        for (int t = 0; t < 8; t++) {
            Vec cu(jb.dim0()), cv(jb.dim0());
            for (auto& q : cu) q = q_of(static_cast<long>(rng() % 9) - 4);
            for (auto& q : cv) q = q_of(static_cast<long>(rng() % 9) - 4);
            JordanElem u = jb.from_coords0(cu), v = jb.from_coords0(cv);
            int i = 1 + static_cast<int>(rng() % 7);
            SparseVec lhs = ctx.L().bracket(ctx.embed_m(i, u), ctx.embed_m(i, v));
            SparseVec rhs = ctx.inner_deriv_embedded(u, v).scaled(Q(-4));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("[der(O) part, der(J) part] = 0") {
    const LiePresentation& l = TitsContext::get(Hurwitz::K).L();
    for (int p = 0; p < 14; p++)
        for (int t = l.l0_range.lo; t < l.l0_range.hi; t++) CHECK(l.c(p, t).empty());
}

TEST_CASE("killing form: nondegenerate for T(F), graded-orthogonal") {
    const LiePresentation& l = TitsContext::get(Hurwitz::F).L();
    BlockKilling k = killing_form(l);
    CHECK(k.total_rank == 52);
    CHECK(is_killing_nondegenerate(l));
    // cross-degree pairs pair to zero under the trace form
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; t++) {
        int p = static_cast<int>(rng() % l.dim), q = static_cast<int>(rng() % l.dim);
        if (l.degree[p] == l.degree[q]) continue;
        Q sum = 0;
        for (int m = 0; m < l.dim; m++) {
            SparseVec w = l.bracket_units(q, m);
            for (const auto& [lidx, v] : w.terms) {
                SparseVec z = l.bracket_units(p, lidx);
                if (const Q* u = z.coeff(m)) sum += v * *u;
            }
        }
        CHECK(sum == 0);
    }
}

TEST_CASE("weyl lift: identity, block permutation, homomorphism spot checks") {
    const TitsContext& ctx = TitsContext::get(Hurwitz::F);
    const LiePresentation& l = ctx.L();
    BasisMap idm = weyl_lift(ctx, fano::identity_perm());
    for (int i = 0; i < l.dim; i++) {
        REQUIRE(idm.image[i].nnz() == 1);
        CHECK(idm.image[i].terms[0].first == i);
        CHECK(idm.image[i].terms[0].second == 1);
    }
    const auto& group = fano::collineation_group();
    std::mt19937_64 rng(7);
    for (int t = 0; t < 4; t++) {
        const auto& sigma = group[rng() % group.size()];
        BasisMap f = weyl_lift(ctx, sigma);
        for (int i = 0; i < l.dim; i++)
            for (const auto& [k2, q] : f.image[i].terms) CHECK(l.degree[k2] == sigma[l.degree[i]]);
        for (int s = 0; s < 200; s++) {
            int i = static_cast<int>(rng() % l.dim), j = static_cast<int>(rng() % l.dim);
            if (i == j) continue;
            SparseVec lhs = apply_map(f, l.bracket_units(i, j));
            SparseVec rhs = l.bracket(f.image[i], f.image[j]);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("distinguished subalgebra dimensions (magic square rows)") {
    const int derj[] = {3, 8, 21, 52};
    const int innstr[] = {8, 16, 35, 78};
    const int tkk[] = {24, 38, 69, 136};  // L_0 plus three blocks of size 3l+4
    int t = 0;
    for (Hurwitz c : {Hurwitz::F, Hurwitz::K, Hurwitz::H, Hurwitz::O}) {
        const TitsContext& ctx = TitsContext::get(c);
        CHECK(distinguished_subalgebra(ctx, SubalgebraKind::DerJ).total_dim() == derj[t]);
        CHECK(distinguished_subalgebra(ctx, SubalgebraKind::InnStr, 1).total_dim() == innstr[t]);
        CHECK(distinguished_subalgebra(ctx, SubalgebraKind::Tkk, 1, 2).total_dim() == tkk[t]);
        t++;
    }
    CHECK_THROWS(distinguished_subalgebra(TitsContext::get(Hurwitz::F), SubalgebraKind::Tkk, 1, 1));
    CHECK_THROWS(distinguished_subalgebra(TitsContext::get(Hurwitz::F), SubalgebraKind::InnStr, 0));
}

TEST_CASE("serialization round-trips byte-exactly") {
    const LiePresentation& l = TitsContext::get(Hurwitz::F).L();
    std::string s1 = serialize_presentation(l);
    std::string s2 = serialize_presentation(TitsContext(Hurwitz::F).L());
    CHECK(s1 == s2);  // independent rebuild, identical bytes
    LiePresentation back = parse_presentation(s1);
    CHECK(back.dim == l.dim);
    CHECK(back.degree == l.degree);
    CHECK(back.ut == l.ut);
    CHECK(serialize_presentation(back) == s1);
}
