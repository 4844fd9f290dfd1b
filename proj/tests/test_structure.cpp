#include "gradcon/structure.hpp"

#include <random>

#include "doctest.h"
#include "gradcon/expected.hpp"

using namespace gradcon;
using gns::Mask;

namespace {

LiePresentation contracted(Hurwitz c, const std::string& name) {
    return contract(TitsContext::get(c).L(), epsilon_from_gns(gns::parse(name)),
                    {JacobiMode::Sampled, 1, 0});
}

}  // namespace

TEST_CASE("center examples") {
    // uncontracted T(F) is simple: trivial center, zero radical
    const LiePresentation& l = TitsContext::get(Hurwitz::F).L();
    CHECK(center(l).total_dim() == 0);
    CHECK(radical(l).total_dim() == 0);
    // the empty-support contraction is abelian
    LiePresentation ab = contracted(Hurwitz::F, "S0");
    CHECK(center(ab).total_dim() == ab.dim);
    // E_I: center = der(J) + der(O), dimension 3 + 14
    LiePresentation ei = contracted(Hurwitz::F, "E_I");
    CHECK(center(ei).total_dim() == 17);
    // E_J with J = {1,2}: center = der(J) + der(O) + M_3..M_7
    LiePresentation e12 = contracted(Hurwitz::F, "E_12");
    CHECK(center(e12).total_dim() == 3 + 14 + 5 * 5);
}

TEST_CASE("series examples") {
    LiePresentation ab = contracted(Hurwitz::F, "S0");
    CHECK(lower_central_series_dims(ab) == std::vector<int>{52, 0});
    CHECK(derived_series_dims(ab) == std::vector<int>{52, 0});
    // S_13 on F: lower central (52, 28, 7, 0)
    LiePresentation s13 = contracted(Hurwitz::F, "S13");
    CHECK(lower_central_series_dims(s13) == std::vector<int>{52, 28, 7, 0});
    CHECK(derived_series_dims(s13) == std::vector<int>{52, 28, 0});
    // F_empty: derived stabilizes at L_0
    LiePresentation f0 = contracted(Hurwitz::F, "F_");
    CHECK(derived_series_dims(f0) == std::vector<int>{52, 3});
    CHECK(radical(f0).total_dim() == 49);
}

TEST_CASE("radical of F_I contraction is D+M, abelian") {
    LiePresentation fi = contracted(Hurwitz::F, "F_I");
    GradedSubspace r = radical(fi);
    CHECK(r.total_dim() == 49);
    CHECK(r.blocks[0].dim() == 0);
    for (int g = 1; g <= 7; g++) CHECK(r.blocks[g].full());
    CHECK(derived_series_dims(fi, r) == std::vector<int>{49, 0});
    // center is der(O) only (J = I)
    CHECK(center(fi).total_dim() == 14);
}

TEST_CASE("semisimple subalgebras: L_0, innstr, tkk; abelian blocks fail") {
    for (Hurwitz c : {Hurwitz::F, Hurwitz::K}) {
        const TitsContext& ctx = TitsContext::get(c);
        const LiePresentation& l = ctx.L();
        CHECK(is_semisimple_subalgebra(l, distinguished_subalgebra(ctx, SubalgebraKind::DerJ)));
        CHECK(is_semisimple_subalgebra(l, distinguished_subalgebra(ctx, SubalgebraKind::InnStr, 1)));
        CHECK(is_semisimple_subalgebra(l, distinguished_subalgebra(ctx, SubalgebraKind::Tkk, 1, 2)));
    }
    // an abelian block inside a contraction is closed but not semisimple
    LiePresentation ab = contracted(Hurwitz::F, "S0");
    GradedSubspace block = GradedSubspace::zero(ab);
    for (int r = 0; r < ab.block_dim(3); r++) {
        Vec v(ab.block_dim(3));
        v[r] = 1;
        block.blocks[3].insert(std::move(v));
    }
    CHECK(!is_semisimple_subalgebra(ab, block));
    // innstr with any other index works too
    const TitsContext& ctxf = TitsContext::get(Hurwitz::F);
    for (int j = 2; j <= 7; j++)
        CHECK(is_semisimple_subalgebra(ctxf.L(), distinguished_subalgebra(ctxf, SubalgebraKind::InnStr, j)));
}

TEST_CASE("verify_levi on the named cases") {
    // Y_26: Levi = tkk block on {1,2,5}
    const TitsContext& ctx = TitsContext::get(Hurwitz::F);
    LiePresentation y26 = contracted(Hurwitz::F, "Y26");
    CHECK(verify_levi(y26, distinguished_subalgebra(ctx, SubalgebraKind::Tkk, 1, 2)).ok());
    // P_{0,j,j}: Levi = L_0 + M_j
    LiePresentation p = contracted(Hurwitz::F, "P044");
    CHECK(verify_levi(p, distinguished_subalgebra(ctx, SubalgebraKind::InnStr, 4)).ok());
    // a wrong claim fails
    CHECK(!verify_levi(p, distinguished_subalgebra(ctx, SubalgebraKind::InnStr, 3)).ok());
    // solvable algebra: zero Levi verifies, nonzero blocks don't
    LiePresentation s2 = contracted(Hurwitz::F, "S2");
    CHECK(verify_levi(s2, GradedSubspace::zero(s2)).ok());
    CHECK(!verify_levi(s2, distinguished_subalgebra(ctx, SubalgebraKind::DerJ)).ok());
}

TEST_CASE("fingerprints: collineation invariance and consistency") {
    std::mt19937_64 rng(61);
    const auto& group = fano::collineation_group();
    const auto& list = gns::classified_245();
    for (int t = 0; t < 6; t++) {
        const auto& g = list[rng() % list.size()];
        Fingerprint a = fingerprint(Hurwitz::F, g.mask, {JacobiMode::Sampled, 1, 0});
        const auto& sigma = group[rng() % group.size()];
        Fingerprint b =
            fingerprint(Hurwitz::F, gns::apply_collineation(sigma, g.mask), {JacobiMode::Sampled, 1, 0});
        CHECK(a == b);
    }
}

TEST_CASE("expected-structure oracle: every classified class on F") {
    for (const auto& g : gns::classified_245()) {
        std::string err = check_expected(Hurwitz::F, g, {JacobiMode::Sampled, 1, 0});
        INFO(err);
        CHECK(err.empty());
    }
}

TEST_CASE("expected-structure spot checks on K") {
    for (const char* name : {"S13", "F_", "F_I", "P011", "Y7", "Y10", "Y19", "Y26", "E_123", "S2+E_14",
                             "S3+F_34", "S7+P044", "X0"}) {
        const gns::NamedGns* g = gns::find_named(name);
        REQUIRE(g != nullptr);
        std::string err = check_expected(Hurwitz::K, *g, {JacobiMode::Sampled, 1, 0});
        INFO(err);
        CHECK(err.empty());
    }
}

TEST_CASE("S_13 contraction of T(O): lower central (248, 112, 28, 0)") {
    LiePresentation s13 = contract(TitsContext::get(Hurwitz::O).L(), epsilon_from_gns(gns::named_s(13)),
                                   {JacobiMode::Blocked, 0, 0, 2});
    CHECK(lower_central_series_dims(s13) == std::vector<int>{248, 112, 28, 0});
    // Y_19 on O: radical derived series (6*28+2, 6*28, 2*28, 0)
    LiePresentation y19 = contract(TitsContext::get(Hurwitz::O).L(), epsilon_from_gns(gns::named_y(19)),
                                   {JacobiMode::Sampled, 1, 0});
    GradedSubspace r = radical(y19);
    CHECK(r.total_dim() == 170);
    CHECK(derived_series_dims(y19, r) == std::vector<int>{170, 168, 56, 0});
}

TEST_CASE("fingerprint combinatorial fields") {
    Fingerprint fp = fingerprint(Hurwitz::F, gns::parse("S13+F_I"), {JacobiMode::Sampled, 1, 0});
    CHECK(fp.t_x_size == 6);
    CHECK(fp.t_diag_size == 0);
    CHECK(fp.has_00);
    CHECK(fp.levi_dim == 3);
    CHECK(!fp.reductive);
    Fingerprint x0 = fingerprint(Hurwitz::F, gns::kX0, {JacobiMode::Sampled, 1, 0});
    CHECK(x0.radical_dim == 0);
    CHECK(x0.levi_dim == 52);
    CHECK(x0.nilindex == -1);
    CHECK(x0.solvindex == -1);
}

TEST_CASE("fingerprint(O, E_I): center dimension 66") {
    Fingerprint fp = fingerprint(Hurwitz::O, gns::parse("E_I"), {JacobiMode::Sampled, 1, 0});
    CHECK(fp.center_dim == 66);  // der(J) + der(O) = 52 + 14
    CHECK(fp.nilindex == 2);
    CHECK(!fp.reductive);
}
