#include "gradcon/expected.hpp"

#include <sstream>

namespace gradcon {

using Part = ExpectedStructure::Part;

namespace {

bool in_set(std::uint8_t bits, int j) { return bits >> j & 1; }
int set_size(std::uint8_t bits) { return __builtin_popcount(bits); }

}  // namespace

ExpectedStructure expected_structure(Hurwitz c, const gns::NamedGns& g) {
    const int l = hurwitz_dim(c);
    const int lt = 3 * l + 4;        // dim L_i
    const int m0 = 3 * l + 2;        // dim M_i
    const int dim_l0 = jordan_derivation_algebra(c).dim();
    const int n = 14 + 7 * m0 + dim_l0;

    ExpectedStructure e;
    auto fill = [](std::array<Part, 8>& parts, Part p) { parts.fill(p); };
    fill(e.center, Part::None);
    fill(e.radical, Part::None);
    fill(e.levi, Part::None);
    fill(e.derived_alg, Part::None);

    using Kind = gns::NamedGns::Kind;
    switch (g.kind) {
        case Kind::X0Full: {
            e.levi_label = "T(C)";
            e.levi.fill(Part::Full);
            e.derived_alg.fill(Part::Full);
            e.derived = {n};
            e.lower_central = {n};
            e.radical_derived = {0};
            e.radical_lower_central = {0};
            e.reductive = true;  // radical (= 0) equals center
            return e;
        }
        case Kind::Y: {
            auto set_blocks = [&](std::array<Part, 8>& parts, std::initializer_list<int> blocks) {
                for (int b : blocks) parts[b] = Part::Full;
            };
            if (g.y == 7 || g.y == 11 || g.y == 15 || g.y == 19) {
                e.levi_label = "innstr(J)";
                e.levi[0] = Part::Full;
                e.levi[1] = Part::M;
                e.radical[1] = Part::D;
                for (int i = 2; i <= 7; i++) e.radical[i] = Part::Full;
                e.derived_alg[0] = Part::Full;
                e.derived_alg[1] = Part::M;
                int rdim = 6 * lt + 2;
                if (g.y == 7) {
                    set_blocks(e.center, {3, 4, 6, 7});
                    set_blocks(e.derived_alg, {2, 5});
                    e.radical_derived = {rdim, 2 * lt, 0};
                    e.radical_lower_central = {rdim, 2 * lt};
                } else if (g.y == 11) {
                    set_blocks(e.center, {4, 7});
                    set_blocks(e.derived_alg, {2, 3, 5, 6});
                    e.radical_derived = {rdim, 4 * lt, 0};
                    e.radical_lower_central = {rdim, 4 * lt};
                } else if (g.y == 15) {
                    set_blocks(e.derived_alg, {2, 3, 4, 5, 6, 7});
                    e.radical_derived = {rdim, 6 * lt, 0};
                    e.radical_lower_central = {rdim, 6 * lt};
                } else {
                    set_blocks(e.derived_alg, {2, 3, 4, 5, 6, 7});
                    e.radical_derived = {rdim, 6 * lt, 2 * lt, 0};
                    e.radical_lower_central = {rdim, 6 * lt};
                }
                e.reductive = false;
                return e;
            }
            // Y_10 and Y_26: the block sum on the line {1,2,5}
            e.levi_label = "L0+L1+L2+L5 block sum";
            for (int b : {0, 1, 2, 5}) e.levi[b] = Part::Full;
            for (int b : {3, 4, 6, 7}) e.radical[b] = Part::Full;
            e.radical_derived = {4 * lt, 0};
            e.radical_lower_central = {4 * lt, 0};
            if (g.y == 10) {
                for (int b : {3, 4, 6, 7}) e.center[b] = Part::Full;
                for (int b : {0, 1, 2, 5}) e.derived_alg[b] = Part::Full;
                e.reductive = true;
            } else {
                e.derived_alg.fill(Part::Full);  // Y_26: the derived algebra is everything
                e.reductive = false;
            }
            return e;
        }
        case Kind::SPlusE: {
            auto st = gns::support_stats(gns::named_s(g.s));
            std::uint8_t K = st.k_set, Ji = st.jstar_set;
            int nj = set_size(Ji);
            if (g.jset == 0) {
                // plain S_i: solvable, center = L_0 + blocks off K_i
                e.center[0] = Part::Full;
                for (int k = 1; k <= 7; k++)
                    if (!in_set(K, k)) e.center[k] = Part::Full;
                e.radical.fill(Part::Full);
                e.solvable_all = true;
                for (int k = 1; k <= 7; k++)
                    if (in_set(Ji, k)) e.derived_alg[k] = Part::Full;
                if (g.s == 0) {
                    e.derived = {n, 0};
                    e.lower_central = {n, 0};
                    e.reductive = true;  // abelian: radical = center = L
                } else {
                    e.derived = {n, nj * lt, 0};
                    if (g.s == 13)
                        e.lower_central = {n, nj * lt, lt, 0};
                    else
                        e.lower_central = {n, nj * lt, 0};
                    e.reductive = false;
                }
                e.radical_derived = e.derived;
                e.radical_lower_central = e.lower_central;
                return e;
            }
            // S_i + E_J, J nonempty (i = 0 covers the plain E_J family)
            e.center[0] = Part::Full;
            for (int k = 1; k <= 7; k++) {
                if (!in_set(K, k) && !in_set(g.jset, k))
                    e.center[k] = Part::Full;
                else if (!in_set(K, k) && in_set(g.jset, k))
                    e.center[k] = Part::D;
            }
            e.radical.fill(Part::Full);
            e.solvable_all = true;
            e.derived_alg[0] = Part::Full;
            for (int k = 1; k <= 7; k++)
                if (in_set(Ji, k)) e.derived_alg[k] = Part::Full;
            e.derived = {n, dim_l0 + nj * lt, 0};
            if (g.s == 13)
                e.lower_central = {n, dim_l0 + nj * lt, lt, 0};
            else
                e.lower_central = {n, dim_l0 + nj * lt, 0};
            e.radical_derived = e.derived;
            e.radical_lower_central = e.lower_central;
            e.reductive = false;
            return e;
        }
        case Kind::SPlusF: {
            auto st = gns::support_stats(gns::named_s(g.s));
            std::uint8_t K = st.k_set, Ji = st.jstar_set;
            int nj = set_size(Ji);
            for (int k = 1; k <= 7; k++) {
                if (!in_set(K, k) && !in_set(g.jset, k))
                    e.center[k] = Part::Full;
                else if (!in_set(K, k) && in_set(g.jset, k))
                    e.center[k] = Part::D;
            }
            e.levi_label = "der(J)";
            e.levi[0] = Part::Full;
            for (int k = 1; k <= 7; k++) e.radical[k] = Part::Full;
            e.derived_alg[0] = Part::Full;
            for (int k = 1; k <= 7; k++) {
                if (in_set(Ji, k))
                    e.derived_alg[k] = Part::Full;
                else if (in_set(g.jset, k))
                    e.derived_alg[k] = Part::M;
            }
            int rdim = 7 * lt;
            e.radical_derived = g.s == 0 ? std::vector<int>{rdim, 0} : std::vector<int>{rdim, nj * lt, 0};
            if (g.s == 13)
                e.radical_lower_central = {rdim, nj * lt, lt, 0};
            else
                e.radical_lower_central = e.radical_derived;
            // reductive only for F_empty (radical = center = D + M)
            e.reductive = g.s == 0 && g.jset == 0;
            return e;
        }
        case Kind::SPlusP: {
            auto st = gns::support_stats(gns::named_s(g.s));
            std::uint8_t K = st.k_set, Ji = st.jstar_set;
            int nj = set_size(Ji);
            int j = g.pj;
            e.center[j] = Part::D;
            for (int k = 1; k <= 7; k++)
                if (!in_set(K, k) && k != j) e.center[k] = Part::Full;
            e.levi_label = "innstr(J)";
            e.levi[0] = Part::Full;
            e.levi[j] = Part::M;
            e.radical[j] = Part::D;
            for (int k = 1; k <= 7; k++)
                if (k != j) e.radical[k] = Part::Full;
            e.derived_alg[0] = Part::Full;
            e.derived_alg[j] = Part::M;
            for (int k = 1; k <= 7; k++)
                if (in_set(Ji, k)) e.derived_alg[k] = Part::Full;
            int rdim = 2 + 6 * lt;
            e.radical_derived = g.s == 0 ? std::vector<int>{rdim, 0} : std::vector<int>{rdim, nj * lt, 0};
            e.radical_lower_central = e.radical_derived;
            e.reductive = g.s == 0;
            return e;
        }
    }
    return e;
}

GradedSubspace realize_parts(const TitsContext& ctx, const std::array<Part, 8>& parts) {
    const LiePresentation& l = ctx.L();
    GradedSubspace s = GradedSubspace::zero(l);
    for (int g = 0; g < 8; g++) {
        int n = l.block_dim(g);
        auto add_unit = [&](int local) {
            Vec v(n);
            v[local] = 1;
            s.blocks[g].insert(std::move(v));
        };
        switch (parts[g]) {
            case Part::None:
                break;
            case Part::Full:
                for (int r = 0; r < n; r++) add_unit(r);
                break;
            case Part::D:
                if (g == 0) throw std::logic_error("realize_parts: D part of the neutral block");
                add_unit(0);
                add_unit(1);
                break;
            case Part::M:
                if (g == 0) throw std::logic_error("realize_parts: M part of the neutral block");
                for (int r = 2; r < n; r++) add_unit(r);
                break;
        }
    }
    return s;
}

std::string check_expected(Hurwitz c, const gns::NamedGns& g, const JacobiOptions& recheck) {
    const TitsContext& ctx = TitsContext::get(c);
    ExpectedStructure exp = expected_structure(c, g);
    LiePresentation lc = contract(ctx.L(), epsilon_from_gns(g.mask), recheck);
    StructureReport rep = analyze(lc, g.mask);
    std::ostringstream err;
    auto fail = [&](const std::string& what) {
        err << g.name << " on " << hurwitz_name(c) << ": " << what;
        return err.str();
    };
    if (!(rep.center == realize_parts(ctx, exp.center))) return fail("center mismatch");
    GradedSubspace expected_rad = exp.solvable_all ? GradedSubspace::full(lc) : realize_parts(ctx, exp.radical);
    if (!(rep.radical == expected_rad)) return fail("radical mismatch");
    if (!(rep.derived_alg == realize_parts(ctx, exp.derived_alg))) return fail("derived algebra mismatch");
    if (exp.derived && rep.fp.derived != *exp.derived) return fail("derived series mismatch");
    if (exp.lower_central && rep.fp.lower_central != *exp.lower_central)
        return fail("lower central series mismatch");
    if (exp.radical_derived && rep.fp.radical_derived != *exp.radical_derived)
        return fail("radical derived series mismatch");
    if (exp.radical_lower_central && rep.fp.radical_lower_central != *exp.radical_lower_central)
        return fail("radical lower central series mismatch");
    if (rep.fp.reductive != exp.reductive) return fail("reductive flag mismatch");
    GradedSubspace levi = realize_parts(ctx, exp.levi);
    if (levi.total_dim() != rep.fp.levi_dim) return fail("levi dimension mismatch");
    LeviCheck lch = verify_levi(lc, levi);
    if (!lch.ok()) {
        std::string what = "levi verification failed:";
        if (!lch.closed) what += " not-closed";
        if (!lch.semisimple) what += " not-semisimple";
        if (!lch.complements_radical) what += " not-complementary";
        return fail(what);
    }
    // generic consistency: center inside radical, quotient dimension
    if (!rep.radical.contains(rep.center)) return fail("center not inside radical");
    if (rep.fp.levi_dim != lc.dim - rep.fp.radical_dim) return fail("levi dimension inconsistency");
    return "";
}

}  // namespace gradcon
