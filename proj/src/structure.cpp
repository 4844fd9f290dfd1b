#include "gradcon/structure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gradcon {

using fano::star;

namespace {

SparseVec to_global(const LiePresentation& l, int g, const Vec& local) {
    SparseVec out;
    for (size_t r = 0; r < local.size(); r++)
        if (local[r] != 0) out.terms.emplace_back(l.block[g][r], local[r]);
    return out;
}

Vec to_local(const LiePresentation& l, int g, const SparseVec& global) {
    Vec out(l.block_dim(g));
    for (const auto& [idx, q] : global.terms) {
        if (l.degree[idx] != g) throw std::logic_error("to_local: vector not homogeneous");
        out[l.local_index(idx)] = q;
    }
    return out;
}

}  // namespace

GradedSubspace bracket_span(const LiePresentation& l, const GradedSubspace& a, const GradedSubspace& b) {
    GradedSubspace out = GradedSubspace::zero(l);
    for (int g = 0; g < 8; g++) {
        if (a.blocks[g].dim() == 0) continue;
        for (int h = 0; h < 8; h++) {
            if (b.blocks[h].dim() == 0) continue;
            int t = star(g, h);
            if (out.blocks[t].full()) continue;
            for (const Vec& x : a.blocks[g].rows()) {
                SparseVec gx = to_global(l, g, x);
                for (const Vec& y : b.blocks[h].rows()) {
                    SparseVec w = l.bracket(gx, to_global(l, h, y));
                    if (w.empty()) continue;
                    out.blocks[t].insert(to_local(l, t, w));
                    if (out.blocks[t].full()) break;
                }
                if (out.blocks[t].full()) break;
            }
        }
    }
    return out;
}

GradedSubspace center(const LiePresentation& l) {
    GradedSubspace z = GradedSubspace::zero(l);
    for (int g = 0; g < 8; g++) {
        int n = l.block_dim(g);
        if (n == 0) continue;
        // rows of the constraint system indexed by (other basis vector, output
        // coordinate); columns = local coordinates in block g
        std::vector<Vec> rows;
        for (int b = 0; b < l.dim; b++) {
            std::map<int, Vec> per_target;  // output global index -> row
            for (int p = 0; p < n; p++) {
                SparseVec w = l.bracket_units(l.block[g][p], b);
                for (const auto& [r, q] : w.terms) {
                    auto it = per_target.find(r);
                    if (it == per_target.end()) it = per_target.emplace(r, Vec(n)).first;
                    it->second[p] = q;
                }
            }
            for (auto& [r, row] : per_target) rows.push_back(std::move(row));
        }
        z.blocks[g] = kernel(rows, n);
    }
    return z;
}

GradedSubspace derived_subalgebra(const LiePresentation& l) {
    GradedSubspace full = GradedSubspace::full(l);
    return bracket_span(l, full, full);
}

std::vector<int> derived_series_dims(const LiePresentation& l, const GradedSubspace& start) {
    std::vector<int> dims = {start.total_dim()};
    GradedSubspace cur = start;
    while (true) {
        GradedSubspace next = bracket_span(l, cur, cur);
        if (next.total_dim() == dims.back()) break;
        dims.push_back(next.total_dim());
        cur = std::move(next);
        if (dims.back() == 0) break;
    }
    return dims;
}

std::vector<int> lower_central_series_dims(const LiePresentation& l, const GradedSubspace& start) {
    std::vector<int> dims = {start.total_dim()};
    GradedSubspace cur = start;
    while (true) {
        GradedSubspace next = bracket_span(l, start, cur);
        if (next.total_dim() == dims.back()) break;
        dims.push_back(next.total_dim());
        cur = std::move(next);
        if (dims.back() == 0) break;
    }
    return dims;
}

std::vector<int> derived_series_dims(const LiePresentation& l) {
    return derived_series_dims(l, GradedSubspace::full(l));
}

std::vector<int> lower_central_series_dims(const LiePresentation& l) {
    return lower_central_series_dims(l, GradedSubspace::full(l));
}

GradedSubspace radical(const LiePresentation& l) {
    BlockKilling kf = killing_form(l);
    GradedSubspace der = derived_subalgebra(l);
    GradedSubspace rad = GradedSubspace::zero(l);
    for (int g = 0; g < 8; g++) {
        int n = l.block_dim(g);
        if (n == 0) continue;
        // kappa is degree-diagonal, so only same-degree constraints appear:
        // kappa(x, y) = 0 for y in the derived algebra's block basis
        std::vector<Vec> rows;
        for (const Vec& y : der.blocks[g].rows()) {
            Vec row(n);
            for (int p = 0; p < n; p++) {
                Q s = 0;
                for (int r = 0; r < n; r++)
                    if (y[r] != 0 && kf.gram[g][r][p] != 0) s += y[r] * kf.gram[g][r][p];
                row[p] = s;
            }
            rows.push_back(std::move(row));
        }
        rad.blocks[g] = kernel(rows, n);  // empty rows: the whole block
    }
    // certify: solvable ideal
    GradedSubspace full = GradedSubspace::full(l);
    if (!rad.contains(bracket_span(l, full, rad)))
        throw std::logic_error("radical: Killing-perp of the derived algebra is not an ideal");
    std::vector<int> ds = derived_series_dims(l, rad);
    if (ds.back() != 0) throw std::logic_error("radical: Killing-perp of the derived algebra is not solvable");
    return rad;
}

bool is_bracket_closed(const LiePresentation& l, const GradedSubspace& u) {
    return u.contains(bracket_span(l, u, u));
}

bool is_semisimple_subalgebra(const LiePresentation& l, const GradedSubspace& u) {
    if (!is_bracket_closed(l, u)) throw std::invalid_argument("is_semisimple_subalgebra: not bracket-closed");
    int n = u.total_dim();
    if (n == 0) return false;
    // intrinsic presentation on the concatenated block bases of u
    std::array<int, 8> offset{};
    int acc = 0;
    for (int g = 0; g < 8; g++) {
        offset[g] = acc;
        acc += u.blocks[g].dim();
    }
    LiePresentation sub;
    sub.alg = l.alg;
    sub.dim = n;
    sub.degree.assign(n, 0);
    sub.labels.assign(n, "");
    for (int g = 0; g < 8; g++)
        for (int r = 0; r < u.blocks[g].dim(); r++) sub.degree[offset[g] + r] = static_cast<std::uint8_t>(g);
    sub.rebuild_blocks();
    sub.ut.assign(static_cast<size_t>(n) * (n - 1) / 2, SparseVec{});
    auto basis_global = [&](int idx) {
        for (int g = 0; g < 8; g++)
            if (idx >= offset[g] && idx < offset[g] + u.blocks[g].dim())
                return to_global(l, g, u.blocks[g].rows()[idx - offset[g]]);
        throw std::logic_error("basis_global: bad index");
    };
    for (int a = 0; a < n; a++) {
        SparseVec ga = basis_global(a);
        for (int b = a + 1; b < n; b++) {
            SparseVec w = l.bracket(ga, basis_global(b));
            if (w.empty()) continue;
            int t = star(sub.degree[a], sub.degree[b]);
            auto coords = u.blocks[t].coordinates(to_local(l, t, w));
            if (!coords) throw std::logic_error("is_semisimple_subalgebra: closure coordinates missing");
            SparseVec cv;
            for (size_t r = 0; r < coords->size(); r++)
                if ((*coords)[r] != 0) cv.terms.emplace_back(offset[t] + static_cast<int>(r), (*coords)[r]);
            sub.c_mut(a, b) = std::move(cv);
        }
    }
    return killing_form(sub).total_rank == n;
}

LeviCheck verify_levi(const LiePresentation& l, const GradedSubspace& claimed) {
    LeviCheck out;
    out.closed = is_bracket_closed(l, claimed);
    // the zero subalgebra is a valid Levi factor of a solvable algebra
    out.semisimple = out.closed && (claimed.total_dim() == 0 || is_semisimple_subalgebra(l, claimed));
    GradedSubspace rad = radical(l);
    out.complements_radical = true;
    for (int g = 0; g < 8; g++) {
        RowSpace sum = space_sum(claimed.blocks[g], rad.blocks[g]);
        if (sum.dim() != claimed.blocks[g].dim() + rad.blocks[g].dim() || !sum.full())
            out.complements_radical = false;
    }
    return out;
}

StructureReport analyze(const LiePresentation& lc, gns::Mask t) {
    StructureReport rep;
    rep.center = center(lc);
    rep.radical = radical(lc);
    rep.derived_alg = derived_subalgebra(lc);
    Fingerprint& fp = rep.fp;
    fp.alg = lc.alg;
    fp.dim = lc.dim;
    fp.center_dim = rep.center.total_dim();
    fp.radical_dim = rep.radical.total_dim();
    fp.levi_dim = lc.dim - fp.radical_dim;
    fp.derived = derived_series_dims(lc);
    fp.lower_central = lower_central_series_dims(lc);
    fp.radical_derived = derived_series_dims(lc, rep.radical);
    fp.radical_lower_central = lower_central_series_dims(lc, rep.radical);
    fp.reductive = rep.radical == rep.center;
    fp.nilindex = fp.lower_central.back() == 0 ? static_cast<int>(fp.lower_central.size()) - 1 : -1;
    fp.solvindex = fp.derived.back() == 0 ? static_cast<int>(fp.derived.size()) - 1 : -1;
    auto st = gns::support_stats(t);
    fp.n_sorted = st.n;
    std::sort(fp.n_sorted.begin(), fp.n_sorted.end(), std::greater<int>());
    fp.t_x_size = __builtin_popcountll(t & gns::x_mask());
    fp.t_diag_size = __builtin_popcountll(t & gns::diagonal_mask());
    fp.has_00 = (t & fano::pair_bit(0, 0)) != 0;
    return rep;
}

Fingerprint fingerprint(Hurwitz c, gns::Mask t, const JacobiOptions& recheck) {
    const LiePresentation& l = TitsContext::get(c).L();
    LiePresentation lc = contract(l, epsilon_from_gns(t), recheck);
    return analyze(lc, t).fp;
}

}  // namespace gradcon
