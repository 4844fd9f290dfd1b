#include "gradcon/contraction.hpp"

#include <sstream>
#include <stdexcept>

#include "gradcon/jordan.hpp"

namespace gradcon {

using fano::star;

ContractionMap ContractionMap::ones() {
    ContractionMap m;
    for (auto& row : m.eps)
        for (auto& q : row) q = 1;
    return m;
}

ContractionMap ContractionMap::zero() { return ContractionMap{}; }

ContractionMap epsilon_from_gns(gns::Mask t) {
    gns::TripleWitness w;
    if (!gns::is_gns(t, &w)) {
        std::ostringstream msg;
        msg << "epsilon_from_gns: not a generalised nice set; violating triple (" << w.i << "," << w.j
            << "," << w.k << ")";
        throw std::invalid_argument(msg.str());
    }
    ContractionMap m;
    for (int i = 0; i < 8; i++)
        for (int j = 0; j < 8; j++)
            if (t & fano::pair_bit(i, j)) m.eps[i][j] = 1;
    return m;
}

Q ternary(const ContractionMap& e, int g, int h, int k) { return e.eps[g][star(h, k)] * e.eps[h][k]; }

bool is_generic(const ContractionMap& e, GenericityWitness* w) {
    for (int g = 0; g < 8; g++)
        for (int h = 0; h < 8; h++)
            if (e.eps[g][h] != e.eps[h][g]) {
                if (w) *w = {true, g, h, -1};
                return false;
            }
    for (int g = 0; g < 8; g++)
        for (int h = 0; h < 8; h++)
            for (int k = 0; k < 8; k++)
                if (ternary(e, g, h, k) != ternary(e, k, g, h)) {
                    if (w) *w = {false, g, h, k};
                    return false;
                }
    return true;
}

ContractionMap coboundary(const std::array<Q, 8>& alpha) {
    for (const Q& a : alpha)
        if (a == 0) throw std::invalid_argument("coboundary: alpha must be nowhere zero");
    ContractionMap m;
    for (int i = 0; i < 8; i++)
        for (int j = 0; j < 8; j++) m.eps[i][j] = alpha[i] * alpha[j] / alpha[star(i, j)];
    return m;
}

ContractionMap pointwise_product(const ContractionMap& a, const ContractionMap& b) {
    ContractionMap m;
    for (int i = 0; i < 8; i++)
        for (int j = 0; j < 8; j++) m.eps[i][j] = a.eps[i][j] * b.eps[i][j];
    return m;
}

gns::Mask support(const ContractionMap& e) {
    gns::Mask t = 0;
    for (int i = 0; i < 8; i++)
        for (int j = 0; j < 8; j++)
            if (e.eps[i][j] != 0) t |= fano::pair_bit(i, j);
    return t;
}

ContractionCheck is_graded_contraction(const ContractionMap& e, const LiePresentation& l) {
    // (a1): symmetry wherever a bracket block is nonzero
    for (int i = 0; i < l.dim; i++)
        for (int j = i + 1; j < l.dim; j++) {
            if (l.c(i, j).empty()) continue;
            int g = l.degree[i], h = l.degree[j];
            if (e.eps[g][h] != e.eps[h][g]) {
                std::ostringstream msg;
                msg << "(a1) fails: eps(" << g << "," << h << ") != eps(" << h << "," << g
                    << ") on a nonzero bracket block";
                return {false, msg.str()};
            }
        }
    // (a2): per degree triple; degree triples with vanishing coefficient
    // differences are structurally fine and skipped
    for (int g = 0; g < 8; g++)
        for (int h = 0; h < 8; h++)
            for (int k = 0; k < 8; k++) {
                Q d1 = ternary(e, g, h, k) - ternary(e, k, g, h);
                Q d2 = ternary(e, h, k, g) - ternary(e, k, g, h);
                if (d1 == 0 && d2 == 0) continue;
                DenseAccum acc(l.dim);
                for (int x : l.block[g])
                    for (int y : l.block[h])
                        for (int z : l.block[k]) {
                            SparseVec yz = l.bracket_units(y, z);
                            SparseVec zx = l.bracket_units(z, x);
                            if (yz.empty() && zx.empty()) continue;
                            l.ad_acc(x, yz, d1, acc);
                            l.ad_acc(y, zx, d2, acc);
                            bool zero = acc.is_zero();
                            acc.reset();
                            if (!zero) {
                                std::ostringstream msg;
                                msg << "(a2) fails on basis triple (" << x << "," << y << "," << z
                                    << ") with degrees (" << g << "," << h << "," << k << ")";
                                return {false, msg.str()};
                            }
                        }
            }
    return {true, ""};
}

LiePresentation contract(const LiePresentation& l, const ContractionMap& e, const JacobiOptions& recheck) {
    ContractionCheck chk = is_graded_contraction(e, l);
    if (!chk.ok) throw std::invalid_argument("contract: " + chk.detail);
    LiePresentation out = l;
    for (int i = 0; i < l.dim; i++)
        for (int j = i + 1; j < l.dim; j++) {
            if (out.c(i, j).empty()) continue;
            const Q& s = e.eps[l.degree[i]][l.degree[j]];
            if (s == 0)
                out.c_mut(i, j).clear();
            else if (s != 1)
                out.c_mut(i, j) = out.c(i, j).scaled(s);
        }
    if (recheck.mode == JacobiMode::Sampled && recheck.samples == 0) return out;
    if (auto w = verify_jacobi(out, recheck)) {
        std::ostringstream msg;
        msg << "contract: jacobi fails at basis triple (" << (*w)[0] << "," << (*w)[1] << "," << (*w)[2]
            << ")";
        throw std::logic_error(msg.str());
    }
    return out;
}

namespace {

JordanElem jdiag(long a, long b, long c) {
    JordanElem u = jordan_zero(Hurwitz::F);
    u.diag = {Q(a), Q(b), Q(c)};
    return u;
}

Vec endo_add(const Vec& a, const Vec& b, const Q& sa, const Q& sb) {
    Vec r(a.size());
    for (size_t t = 0; t < a.size(); t++) r[t] = sa * a[t] + sb * b[t];
    return r;
}

bool independent_pair(const LiePresentation& l, const SparseVec& a, const SparseVec& b) {
    RowSpace s(l.dim);
    s.insert(a.dense(l.dim));
    s.insert(b.dense(l.dim));
    return s.dim() == 2;
}

}  // namespace

std::vector<WitnessCase> genericity_witnesses() {
    const TitsContext& ctx = TitsContext::get(Hurwitz::F);
    const LiePresentation& L = ctx.L();
    const JordanBasis& jb = ctx.jordan();
    std::vector<WitnessCase> out;

    auto dbl = [&](const SparseVec& x, const SparseVec& y, const SparseVec& z) {
        return L.bracket(x, L.bracket(y, z));  // [x,[y,z]]
    };

    {  // (g_i, e, e): x = e_1 x e23+, y = ad(e12-), z = ad(e13-)
        WitnessCase wc{"(g_i,e,e)", false, false};
        JordanElem u = sym_plus(2, 3);
        Vec d12 = ad_skew(1, 2), d13 = ad_skew(1, 3);
        SparseVec x = ctx.embed_m(1, u), y = ctx.embed_der_j(d12), z = ctx.embed_der_j(d13);
        SparseVec b1 = dbl(x, y, z), b2 = dbl(y, z, x);
        wc.independent = independent_pair(L, b1, b2);
        // [D,D'](u) = -2(E22 - E33) and D D'(u) = 2(E11 - E22)
        JordanElem comm_u = jb.apply_endo(endo_commutator(d12, d13, jb.dim()), u);
        JordanElem dd_u = jb.apply_endo(d12, jb.apply_endo(d13, u));
        bool inter = jordan_eq(comm_u, jdiag(0, -2, 2)) && jordan_eq(dd_u, jdiag(2, -2, 0));
        inter = inter && b1 == ctx.embed_m(1, jordan_scale(Q(-1), comm_u)) && b2 == ctx.embed_m(1, dd_u);
        wc.intermediates_ok = inter;
        out.push_back(wc);
    }
    {  // (g_i, e, g_k): x = e_1 x e13+, y = ad(e12-), z = e_2 x e23+
        WitnessCase wc{"(g_i,e,g_k)", false, false};
        JordanElem u = sym_plus(1, 3), v = sym_plus(2, 3);
        Vec d12 = ad_skew(1, 2);
        SparseVec x = ctx.embed_m(1, u), y = ctx.embed_der_j(d12), z = ctx.embed_m(2, v);
        SparseVec b1 = dbl(x, y, z), b2 = dbl(y, z, x);
        wc.independent = independent_pair(L, b1, b2);
        // D(u*v) = E11 - E22 and u*D(v) = (E11 - 2E22 + E33)/3
        JordanElem dv = jb.apply_endo(d12, v);
        bool inter = jordan_eq(jb.apply_endo(d12, star_mul(u, v)), jdiag(1, -1, 0));
        inter = inter && jordan_eq(jordan_scale(Q(3), star_mul(u, dv)), jdiag(1, -2, 1));
        wc.intermediates_ok = inter;
        out.push_back(wc);
    }
    {  // (g_i, e, g_i): x = e_1 x e13+, y = ad(e13- + e23-), z = e_1 x e23+
        WitnessCase wc{"(g_i,e,g_i)", false, false};
        JordanElem u = sym_plus(1, 3), v = sym_plus(2, 3);
        Vec d = endo_add(ad_skew(1, 3), ad_skew(2, 3), Q(1), Q(1));
        SparseVec x = ctx.embed_m(1, u), y = ctx.embed_der_j(d), z = ctx.embed_m(1, v);
        SparseVec b1 = dbl(x, y, z), b2 = dbl(y, z, x);
        wc.independent = independent_pair(L, b1, b2);
        // 4[R_{D(u)}, R_v] = ad(e13- + 2 e23-) and 4[R_u, R_{D(v)}] = -ad(2 e13- + e23-)
        JordanElem du = jb.apply_endo(d, u), dv = jb.apply_endo(d, v);
        Vec lhs1 = endo_commutator(jb.r_operator(du), jb.r_operator(v), jb.dim());
        Vec rhs1 = endo_add(ad_skew(1, 3), ad_skew(2, 3), q_of(1, 4), q_of(2, 4));
        Vec lhs2 = endo_commutator(jb.r_operator(u), jb.r_operator(dv), jb.dim());
        Vec rhs2 = endo_add(ad_skew(1, 3), ad_skew(2, 3), q_of(-2, 4), q_of(-1, 4));
        bool inter = lhs1 == rhs1 && lhs2 == rhs2;
        // [x,[y,z]] = -4 [R_u, R_{D(v)}]
        inter = inter && b1 == ctx.embed_der_j(endo_add(lhs2, lhs2, Q(-2), Q(-2)));
        wc.intermediates_ok = inter;
        out.push_back(wc);
    }
    {  // (g_i, g_i, g_k): x = e_1 x (E11-E33), y = e_1 x e12+, z = e_2 x e12+
        WitnessCase wc{"(g_i,g_i,g_k)", false, false};
        JordanElem u = jdiag(1, 0, -1), v = sym_plus(1, 2), w = sym_plus(1, 2);
        SparseVec x = ctx.embed_m(1, u), y = ctx.embed_m(1, v), z = ctx.embed_m(2, w);
        SparseVec b1 = dbl(x, y, z), b2 = dbl(y, z, x);
        wc.independent = independent_pair(L, b1, b2);
        // tr(v.w)/3 u + u*(v*w) = (2E11 - E22 - E33)/3
        // tr(u.w)/3 v + v*(u*w) = (E11 + E22 - 2E33)/6
        JordanElem t1 =
            jordan_add(jordan_scale(jordan_trace(jordan_mul(v, w)) / 3, u), star_mul(u, star_mul(v, w)));
        JordanElem t2 =
            jordan_add(jordan_scale(jordan_trace(jordan_mul(u, w)) / 3, v), star_mul(v, star_mul(u, w)));
        wc.intermediates_ok = jordan_eq(jordan_scale(Q(3), t1), jdiag(2, -1, -1)) &&
                              jordan_eq(jordan_scale(Q(6), t2), jdiag(1, 1, -2));
        out.push_back(wc);
    }
    {  // (g_i, g_j, g_{i*j}) = (1, 2, 5): x = e_1 x (E11-E33), y = e_2 x e12+,
       // z = e_5 x (e13+ + e23+)
        WitnessCase wc{"(g_i,g_j,g_ij)", false, false};
        JordanElem u = jdiag(1, 0, -1), v = sym_plus(1, 2);
        JordanElem w = jordan_add(sym_plus(1, 3), sym_plus(2, 3));
        SparseVec x = ctx.embed_m(1, u), y = ctx.embed_m(2, v), z = ctx.embed_m(5, w);
        SparseVec b1 = dbl(x, y, z), b2 = dbl(y, z, x);
        wc.independent = independent_pair(L, b1, b2);
        // [x,[y,z]] = -4[R_u,R_w] and [y,[z,x]] = -8[R_v,R_{u*w}]
        Vec op1 = endo_commutator(jb.r_operator(u), jb.r_operator(w), jb.dim());
        Vec op2 = endo_commutator(jb.r_operator(v), jb.r_operator(star_mul(u, w)), jb.dim());
        bool inter = b1 == ctx.embed_der_j(endo_add(op1, op1, Q(-2), Q(-2)));
        inter = inter && b2 == ctx.embed_der_j(endo_add(op2, op2, Q(-4), Q(-4)));
        // the displayed images of both operators on a generic traceless
        // symmetric matrix [[a,b,c],[b,d,e],[c,e,-a-d]]
        auto generic = [&](long a, long b, long c, long d, long e) {
            JordanElem m = jdiag(a, d, -a - d);
            m.off[0].c[0] = b;
            m.off[1].c[0] = c;
            m.off[2].c[0] = e;
            return m;
        };
        auto img1 = [&](long a, long b, long c, long d, long e) {
            JordanElem m = jdiag(4 * c, 2 * e, -2 * (2 * c + e));
            m.off[0].c[0] = c + 2 * e;
            m.off[1].c[0] = -4 * a - b - 2 * d;
            m.off[2].c[0] = -a - 2 * (b + d);
            return m;
        };
        auto img2 = [&](long a, long b, long c, long d, long e) {
            JordanElem m = jdiag(-2 * c, 0, 2 * c);
            m.off[0].c[0] = -e;
            m.off[1].c[0] = 2 * a + d;
            m.off[2].c[0] = b;
            return m;
        };
        const long probes[][5] = {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0},
                                  {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}, {1, 2, 3, 4, 5}};
        for (const auto& p : probes) {
            JordanElem w0 = generic(p[0], p[1], p[2], p[3], p[4]);
            inter = inter && jordan_eq(jb.apply_endo(endo_add(op1, op1, Q(2), Q(2)), w0),
                                       img1(p[0], p[1], p[2], p[3], p[4]));
            inter = inter && jordan_eq(jb.apply_endo(endo_add(op2, op2, Q(4), Q(4)), w0),
                                       img2(p[0], p[1], p[2], p[3], p[4]));
        }
        wc.intermediates_ok = inter;
        out.push_back(wc);
    }
    {  // (g_i, g_j, g_k) on the generating triplet (1,2,3): search the D-blocks
        WitnessCase wc{"(g_i,g_j,g_k)", false, true};
        for (int a = 0; a < 2 && !wc.independent; a++)
            for (int b = 0; b < 2 && !wc.independent; b++)
                for (int cdx = 0; cdx < 2 && !wc.independent; cdx++) {
                    SparseVec x, y, z;
                    x.terms.emplace_back(ctx.d_index(1, a), Q(1));
                    y.terms.emplace_back(ctx.d_index(2, b), Q(1));
                    z.terms.emplace_back(ctx.d_index(3, cdx), Q(1));
                    if (independent_pair(L, dbl(x, y, z), dbl(y, z, x))) wc.independent = true;
                }
        out.push_back(wc);
    }
    return out;
}

}  // namespace gradcon
