#include "gradcon/tits.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace gradcon {

using fano::star;

void LiePresentation::ad_acc(int i, const SparseVec& v, const Q& s, DenseAccum& acc) const {
    for (const auto& [m, q] : v.terms) {
        if (m == i) continue;
        Q w = s * q;
        if (i < m)
            acc.add(w, c(i, m));
        else
            acc.add(-w, c(m, i));
    }
}

SparseVec LiePresentation::bracket_units(int i, int j) const {
    if (i == j) return {};
    if (i < j) return c(i, j);
    return c(j, i).negated();
}

SparseVec LiePresentation::bracket(const SparseVec& x, const SparseVec& y) const {
    DenseAccum acc(dim);
    for (const auto& [i, q] : x.terms) ad_acc(i, y, q, acc);
    return acc.take();
}

int LiePresentation::local_index(int global) const {
    const auto& blk = block[degree[global]];
    auto it = std::lower_bound(blk.begin(), blk.end(), global);
    return static_cast<int>(it - blk.begin());
}

std::array<std::array<bool, 8>, 8> LiePresentation::block_nonzero() const {
    std::array<std::array<bool, 8>, 8> bn{};
    for (int i = 0; i < dim; i++)
        for (int j = i + 1; j < dim; j++)
            if (!c(i, j).empty()) bn[degree[i]][degree[j]] = bn[degree[j]][degree[i]] = true;
    return bn;
}

void LiePresentation::rebuild_blocks() {
    for (auto& b : block) b.clear();
    for (int i = 0; i < dim; i++) block[degree[i]].push_back(i);
}

bool verify_grading(const LiePresentation& l) {
    for (int i = 0; i < l.dim; i++)
        for (int j = i + 1; j < l.dim; j++) {
            int target = star(l.degree[i], l.degree[j]);
            for (const auto& [k, q] : l.c(i, j).terms)
                if (l.degree[k] != target) return false;
        }
    return true;
}

namespace {

struct JacobiScan {
    const LiePresentation& l;
    std::array<std::array<std::array<bool, 8>, 8>, 8> skip{};
    bool use_skip = false;

    explicit JacobiScan(const LiePresentation& lie, bool blocked) : l(lie) {
        if (!blocked) return;
        use_skip = true;
        auto bn = l.block_nonzero();
        for (int g = 0; g < 8; g++)
            for (int h = 0; h < 8; h++)
                for (int k = 0; k < 8; k++) {
                    bool p1 = bn[h][k] && bn[g][star(h, k)];
                    bool p2 = bn[g][k] && bn[h][star(g, k)];
                    bool p3 = bn[g][h] && bn[k][star(g, h)];
                    skip[g][h][k] = !(p1 || p2 || p3);
                }
    }

    bool triple_holds(int i, int j, int k, DenseAccum& acc) const {
        const SparseVec& cjk = l.c(j, k);
        const SparseVec& cik = l.c(i, k);
        const SparseVec& cij = l.c(i, j);
        if (cjk.empty() && cik.empty() && cij.empty()) return true;
        l.ad_acc(i, cjk, Q(1), acc);
        l.ad_acc(j, cik, Q(-1), acc);
        l.ad_acc(k, cij, Q(1), acc);
        bool ok = acc.is_zero();
        acc.reset();
        return ok;
    }
};

}  // namespace

std::optional<std::array<int, 3>> verify_jacobi(const LiePresentation& l, const JacobiOptions& opts) {
    JacobiScan scan(l, opts.mode == JacobiMode::Blocked);
    if (opts.mode == JacobiMode::Sampled) {
        std::mt19937_64 rng(opts.seed);
        DenseAccum acc(l.dim);
        std::uniform_int_distribution<int> pick(0, l.dim - 1);
        for (long t = 0; t < opts.samples; t++) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            if (a == b || b == c || a == c) continue;
            int i = std::min({a, b, c}), k = std::max({a, b, c}), j = a + b + c - i - k;
            if (!scan.triple_holds(i, j, k, acc)) return std::array<int, 3>{i, j, k};
        }
        return std::nullopt;
    }
    int workers = opts.workers > 0 ? opts.workers : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min(workers, l.dim));
    std::vector<std::optional<std::array<int, 3>>> found(workers);
    auto run = [&](int w) {
        DenseAccum acc(l.dim);
        for (int i = w; i < l.dim; i += workers) {
            for (int j = i + 1; j < l.dim; j++)
                for (int k = j + 1; k < l.dim; k++) {
                    if (scan.use_skip && scan.skip[l.degree[i]][l.degree[j]][l.degree[k]]) continue;
                    if (!scan.triple_holds(i, j, k, acc)) {
                        if (!found[w] || *found[w] > std::array<int, 3>{i, j, k}) found[w] = {{i, j, k}};
                        return;
                    }
                }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; w++) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
    std::optional<std::array<int, 3>> best;
    for (const auto& f : found)
        if (f && (!best || *f < *best)) best = f;
    return best;
}

BlockKilling killing_form(const LiePresentation& l) {
    BlockKilling out;
    out.dim = l.dim;
    auto entry = [&](int p, int q) {
        // kappa(p,q) = sum over k,l of c_{qk}^l c_{pl}^k
        Q sum = 0;
        for (int k = 0; k < l.dim; k++) {
            if (k == q) continue;
            const SparseVec& w = k > q ? l.c(q, k) : l.c(k, q);
            int sgn = k > q ? 1 : -1;
            for (const auto& [lidx, v] : w.terms) {
                if (lidx == p) continue;
                const Q* u;
                int sgn2;
                if (p < lidx) {
                    u = l.c(p, lidx).coeff(k);
                    sgn2 = 1;
                } else {
                    u = l.c(lidx, p).coeff(k);
                    sgn2 = -1;
                }
                if (u) {
                    if (sgn * sgn2 > 0)
                        sum += v * *u;
                    else
                        sum -= v * *u;
                }
            }
        }
        return sum;
    };
    for (int g = 0; g < 8; g++) {
        int n = l.block_dim(g);
        out.gram[g].assign(n, Vec(n));
        for (int r = 0; r < n; r++)
            for (int cc = r; cc < n; cc++) {
                Q v = entry(l.block[g][r], l.block[g][cc]);
                out.gram[g][r][cc] = v;
                if (cc != r) out.gram[g][cc][r] = v;
            }
        out.rank[g] = rref(out.gram[g]).rank;
        out.total_rank += out.rank[g];
    }
    return out;
}

bool is_killing_nondegenerate(const LiePresentation& l) { return killing_form(l).total_rank == l.dim; }

GradedSubspace GradedSubspace::zero(const LiePresentation& l) {
    GradedSubspace s;
    for (int g = 0; g < 8; g++) s.blocks[g] = RowSpace(l.block_dim(g));
    return s;
}

GradedSubspace GradedSubspace::full(const LiePresentation& l) {
    GradedSubspace s = zero(l);
    for (int g = 0; g < 8; g++)
        for (int r = 0; r < l.block_dim(g); r++) {
            Vec v(l.block_dim(g));
            v[r] = 1;
            s.blocks[g].insert(std::move(v));
        }
    return s;
}

int GradedSubspace::total_dim() const {
    int d = 0;
    for (const auto& b : blocks) d += b.dim();
    return d;
}

std::array<int, 8> GradedSubspace::dims() const {
    std::array<int, 8> d{};
    for (int g = 0; g < 8; g++) d[g] = blocks[g].dim();
    return d;
}

bool GradedSubspace::contains(const GradedSubspace& other) const {
    for (int g = 0; g < 8; g++)
        if (!blocks[g].contains_space(other.blocks[g])) return false;
    return true;
}

TitsContext::TitsContext(Hurwitz c)
    : jb_(jordan_basis(c)), dero_(derivation_algebra(Hurwitz::O)), derj_space_(0), dero_coords_(64) {
    pres_.alg = c;
    derj_space_ = jordan_derivation_algebra(c);
    derj_ = derj_space_.rows();
    for (const Vec& d : dero_.basis) dero_coords_.add(d);
    build();
}

const TitsContext& TitsContext::get(Hurwitz c) {
    static std::map<Hurwitz, const TitsContext*> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(c);
    if (it == cache.end()) it = cache.emplace(c, new TitsContext(c)).first;
    return *it->second;
}

SparseVec TitsContext::embed_m(int i, const JordanElem& u) const {
    Vec v = jb_.coords0(u);
    SparseVec out;
    for (int a = 0; a < jb_.dim0(); a++)
        if (v[a] != 0) out.terms.emplace_back(m_index(i, a), v[a]);
    return out;
}

SparseVec TitsContext::embed_der_o(const Vec& endo8) const {
    auto coords = dero_coords_.coordinates_sparse(endo8);
    if (!coords) throw std::invalid_argument("embed_der_o: not a derivation of O");
    return *coords;
}

SparseVec TitsContext::embed_der_j(const Vec& endoJ) const {
    auto coords = derj_space_.coordinates(endoJ);
    if (!coords) throw std::invalid_argument("embed_der_j: not in der(J)");
    SparseVec out;
    for (size_t t = 0; t < coords->size(); t++)
        if ((*coords)[t] != 0) out.terms.emplace_back(j_index(static_cast<int>(t)), (*coords)[t]);
    return out;
}

SparseVec TitsContext::d_ab_coords(int i, int j) const {
    return embed_der_o(d_operator(comp_unit(Hurwitz::O, i), comp_unit(Hurwitz::O, j)));
}

SparseVec TitsContext::inner_deriv_embedded(const JordanElem& u, const JordanElem& v) const {
    return embed_der_j(jb_.inner_derivation(u, v));
}

Vec TitsContext::line_derivation_x(int i, int j, int k, int l) const {
    // constraints on x in Q^14: sum_p x_p d_p(e_i) = 0, likewise at e_j, and
    // sum_p x_p d_p(e_l) = (e_k e_l)/2
    std::vector<Vec> rows;
    Vec rhs;
    auto add_constraint = [&](int at, const CompElem& target) {
        for (int r = 0; r < 8; r++) {
            Vec row(14);
            for (int p = 0; p < 14; p++) row[p] = dero_.basis[p][r * 8 + at];
            rows.push_back(std::move(row));
            rhs.push_back(target.c[r]);
        }
    };
    add_constraint(i, comp_zero(Hurwitz::O));
    add_constraint(j, comp_zero(Hurwitz::O));
    add_constraint(l, comp_scale(Q(1, 2), comp_mul(comp_unit(Hurwitz::O, k), comp_unit(Hurwitz::O, l))));
    if (kernel(rows, 14).dim() != 0) throw std::logic_error("line_derivation_x: solution not unique");
    auto x = solve(rows, rhs);
    if (!x) throw std::logic_error("line_derivation_x: constraints unsolvable");
    return *x;
}

void TitsContext::build() {
    const int dim0 = jb_.dim0();
    const int nderj = static_cast<int>(derj_.size());
    LiePresentation& L = pres_;
    L.dim = 14 + 7 * dim0 + nderj;
    L.degree.assign(L.dim, 0);
    L.labels.assign(L.dim, "");
    for (int i = 1; i <= 7; i++) {
        if (dero_.block[i].size() != 2) throw std::logic_error("der(O) degree block is not 2-dimensional");
        for (int t = 0; t < 2; t++) {
            L.degree[d_index(i, t)] = static_cast<std::uint8_t>(i);
            L.labels[d_index(i, t)] = "d" + std::to_string(i) + "." + std::to_string(t);
        }
        for (int a = 0; a < dim0; a++) {
            L.degree[m_index(i, a)] = static_cast<std::uint8_t>(i);
            L.labels[m_index(i, a)] = "m" + std::to_string(i) + "." + std::to_string(a);
        }
        L.d_range[i] = {d_index(i, 0), d_index(i, 0) + 2};
        L.m_range[i] = {m_index(i, 0), m_index(i, 0) + dim0};
    }
    for (int t = 0; t < nderj; t++) L.labels[j_index(t)] = "j." + std::to_string(t);
    L.l0_range = {j_index(0), j_index(0) + nderj};
    L.rebuild_blocks();
    L.ut.assign(static_cast<size_t>(L.dim) * (L.dim - 1) / 2, SparseVec{});

    // tables over the J0 basis
    std::vector<Q> trace_tab(dim0 * dim0);
    std::vector<Vec> star_tab(dim0 * dim0);
    std::vector<SparseVec> inner_tab(dim0 * dim0);  // a<b, embedded in the J part
    for (int a = 0; a < dim0; a++)
        for (int b = a; b < dim0; b++) {
            JordanElem p = jordan_mul(jb_.element0(a), jb_.element0(b));
            trace_tab[a * dim0 + b] = trace_tab[b * dim0 + a] = jordan_trace(p);
            JordanElem sp = p;
            Q third = jordan_trace(p) / 3;
            for (int d = 0; d < 3; d++) sp.diag[d] -= third;
            star_tab[a * dim0 + b] = star_tab[b * dim0 + a] = jb_.coords0(sp);
            if (a < b)
                inner_tab[a * dim0 + b] = embed_der_j(jb_.inner_derivation(jb_.element0(a), jb_.element0(b)));
        }
    // action of the der(J) basis on the J0 basis
    std::vector<std::vector<Vec>> jact(nderj, std::vector<Vec>(dim0));
    for (int t = 0; t < nderj; t++)
        for (int a = 0; a < dim0; a++) jact[t][a] = jb_.coords0(jb_.apply_endo(derj_[t], jb_.element0(a)));
    // D_{e_i,e_j} coordinates
    std::vector<SparseVec> dab(64);
    for (int i = 1; i <= 7; i++)
        for (int j = 1; j <= 7; j++) {
            if (i == j) continue;
            dab[i * 8 + j] = d_ab_coords(i, j);
        }

    // [d, d'] inside der(O)
    for (int p = 0; p < 14; p++)
        for (int q = p + 1; q < 14; q++) {
            Vec comm = endo_commutator(dero_.basis[p], dero_.basis[q], 8);
            L.c_mut(p, q) = embed_der_o(comm);
        }
    // [d, e_i (x) u] = d(e_i) (x) u
    for (int p = 0; p < 14; p++) {
        int dp = p / 2 + 1;
        for (int i = 1; i <= 7; i++) {
            int target = star(dp, i);
            if (target == 0) continue;  // d(e_i) = 0 when i = deg d
            const Q& lam = dero_.basis[p][target * 8 + i];
            if (lam == 0) continue;
            for (int a = 0; a < dim0; a++)
                L.c_mut(p, m_index(i, a)).terms.emplace_back(m_index(target, a), lam);
        }
    }
    // [e_i (x) u_a, e_j (x) u_b]
    DenseAccum acc(L.dim);
    for (int i = 1; i <= 7; i++)
        for (int j = i; j <= 7; j++)
            for (int a = 0; a < dim0; a++)
                for (int b = (i == j ? a + 1 : 0); b < dim0; b++) {
                    if (i == j) {
                        // 2 t(e_i^2) [R_u, R_v] = -4 [R_u, R_v]
                        acc.add(Q(-4), inner_tab[a * dim0 + b]);
                    } else {
                        const Q& tr = trace_tab[a * dim0 + b];
                        if (tr != 0) acc.add(tr / 3, dab[i * 8 + j]);
                        int tgt = star(i, j);
                        Q two_s(2 * kOctSign[i][j]);
                        const Vec& sv = star_tab[a * dim0 + b];
                        for (int cidx = 0; cidx < dim0; cidx++)
                            if (sv[cidx] != 0) acc.add_unit(m_index(tgt, cidx), two_s * sv[cidx]);
                    }
                    L.c_mut(m_index(i, a), m_index(j, b)) = acc.take();
                }
    // [e_i (x) u_a, D] = -e_i (x) D(u_a)
    for (int i = 1; i <= 7; i++)
        for (int a = 0; a < dim0; a++)
            for (int t = 0; t < nderj; t++) {
                const Vec& img = jact[t][a];
                SparseVec& cv = L.c_mut(m_index(i, a), j_index(t));
                for (int cidx = 0; cidx < dim0; cidx++)
                    if (img[cidx] != 0) cv.terms.emplace_back(m_index(i, cidx), -img[cidx]);
            }
    // [D, D'] inside der(J)
    for (int s = 0; s < nderj; s++)
        for (int t = s + 1; t < nderj; t++) {
            Vec comm = endo_commutator(derj_[s], derj_[t], jb_.dim());
            L.c_mut(j_index(s), j_index(t)) = embed_der_j(comm);
        }

    if (!verify_grading(L)) throw std::logic_error("tits build: grading violated");
}

BasisMap identity_map(const LiePresentation& l) {
    BasisMap f;
    f.dim = l.dim;
    f.image.resize(l.dim);
    for (int i = 0; i < l.dim; i++) f.image[i].terms.emplace_back(i, Q(1));
    return f;
}

SparseVec apply_map(const BasisMap& f, const SparseVec& v) {
    DenseAccum acc(f.dim);
    for (const auto& [i, q] : v.terms) acc.add(q, f.image[i]);
    return acc.take();
}

std::array<int, 8> collineation_signs(const fano::Perm& sigma) {
    // signs c with c_0 = +1 making e_i -> c_i e_sigma(i) an algebra
    // automorphism of O: c_i c_j s(sigma i, sigma j) = s(i,j) c_{i*j}.
    // The plain permutation (all +1) works only for an order-21 subgroup;
    // every collineation admits such signs. First solution in mask order.
    for (int mask = 0; mask < 128; mask++) {
        std::array<int, 8> c;
        c[0] = 1;
        for (int i = 1; i <= 7; i++) c[i] = (mask >> (i - 1) & 1) ? -1 : 1;
        bool ok = true;
        for (int i = 0; i < 8 && ok; i++)
            for (int j = 0; j < 8 && ok; j++)
                if (c[i] * c[j] * kOctSign[sigma[i]][sigma[j]] != kOctSign[i][j] * c[star(i, j)]) ok = false;
        if (ok) return c;
    }
    throw std::logic_error("weyl_lift: no sign assignment makes the permutation an automorphism of O");
}

BasisMap weyl_lift(const TitsContext& ctx, const fano::Perm& sigma) {
    const LiePresentation& L = ctx.L();
    std::array<int, 8> c = collineation_signs(sigma);
    // solve for the der(O)-block matrix from the 21 prescribed generator
    // images D_{e_i,e_j} -> c_i c_j D_{e_sigma(i),e_sigma(j)}
    std::vector<Vec> aug;
    for (int i = 1; i <= 7; i++)
        for (int j = i + 1; j <= 7; j++) {
            Vec row(28);
            for (const auto& [t, q] : ctx.d_ab_coords(i, j).terms) row[t] = q;
            Q s(c[i] * c[j]);
            for (const auto& [t, q] : ctx.d_ab_coords(sigma[i], sigma[j]).terms) row[14 + t] = s * q;
            aug.push_back(std::move(row));
        }
    RrefResult r = rref(std::move(aug));
    if (r.rank != 14) throw std::logic_error("weyl_lift: generator images inconsistent");
    for (int t = 0; t < 14; t++)
        if (r.pivots[t] != t) throw std::logic_error("weyl_lift: generator images inconsistent");
    BasisMap f;
    f.dim = L.dim;
    f.sigma = sigma;
    f.image.resize(L.dim);
    for (int t = 0; t < 14; t++) {
        SparseVec img;
        for (int s = 0; s < 14; s++)
            if (r.rows[t][14 + s] != 0) img.terms.emplace_back(s, r.rows[t][14 + s]);
        f.image[t] = std::move(img);
    }
    const int dim0 = ctx.jordan().dim0();
    for (int i = 1; i <= 7; i++)
        for (int a = 0; a < dim0; a++)
            f.image[ctx.m_index(i, a)].terms.emplace_back(ctx.m_index(sigma[i], a), Q(c[i]));
    for (int t = ctx.j_index(0); t < L.dim; t++) f.image[t].terms.emplace_back(t, Q(1));
    return f;
}

GradedSubspace distinguished_subalgebra(const TitsContext& ctx, SubalgebraKind kind, int param, int param2) {
    const LiePresentation& L = ctx.L();
    GradedSubspace s = GradedSubspace::zero(L);
    auto add_full_block = [&](int g) {
        for (int r = 0; r < L.block_dim(g); r++) {
            Vec v(L.block_dim(g));
            v[r] = 1;
            s.blocks[g].insert(std::move(v));
        }
    };
    add_full_block(0);
    switch (kind) {
        case SubalgebraKind::DerJ:
            break;
        case SubalgebraKind::InnStr: {
            if (param < 1 || param > 7) throw std::invalid_argument("innstr: index out of range");
            // M_param sits at local positions 2.. inside its block
            int n = L.block_dim(param);
            for (int a = 2; a < n; a++) {
                Vec v(n);
                v[a] = 1;
                s.blocks[param].insert(std::move(v));
            }
            break;
        }
        case SubalgebraKind::Tkk: {
            if (param < 1 || param > 7 || param2 < 1 || param2 > 7 || param == param2)
                throw std::invalid_argument("tkk: need two distinct indices in I");
            add_full_block(param);
            add_full_block(param2);
            add_full_block(star(param, param2));
            break;
        }
    }
    return s;
}

std::string serialize_presentation(const LiePresentation& l, const std::string& gns) {
    std::ostringstream out;
    out << "dim=" << l.dim << " algebra=" << hurwitz_name(l.alg) << " version=1";
    if (!gns.empty()) out << " gns=" << gns;
    out << '\n';
    for (int i = 0; i < l.dim; i++) out << "deg " << i << ' ' << static_cast<int>(l.degree[i]) << '\n';
    for (int i = 0; i < l.dim; i++)
        for (int j = i + 1; j < l.dim; j++)
            for (const auto& [k, q] : l.c(i, j).terms)
                out << i << ' ' << j << ' ' << k << ' ' << rational_str(q) << '\n';
    return out.str();
}

LiePresentation parse_presentation(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header)) throw std::invalid_argument("empty presentation file");
    LiePresentation l;
    int dim = -1;
    {
        std::istringstream hs(header);
        std::string tok;
        while (hs >> tok) {
            if (tok.rfind("dim=", 0) == 0) dim = std::stoi(tok.substr(4));
            if (tok.rfind("algebra=", 0) == 0) l.alg = hurwitz_from_name(tok.substr(8));
            if (tok.rfind("version=", 0) == 0 && tok != "version=1")
                throw std::invalid_argument("unsupported presentation version");
        }
    }
    if (dim <= 0) throw std::invalid_argument("presentation header lacks dim");
    l.dim = dim;
    l.degree.assign(dim, 0);
    l.labels.assign(dim, "");
    l.ut.assign(static_cast<size_t>(dim) * (dim - 1) / 2, SparseVec{});
    std::string tok;
    while (in >> tok) {
        if (tok == "deg") {
            int i, d;
            in >> i >> d;
            l.degree.at(i) = static_cast<std::uint8_t>(d);
        } else {
            int i = std::stoi(tok), j, k;
            std::string q;
            in >> j >> k >> q;
            l.c_mut(i, j).terms.emplace_back(k, parse_rational(q));
        }
    }
    l.rebuild_blocks();
    // standard layout: der(O) by degree, then M blocks, then der(J)
    int dim0 = 3 * hurwitz_dim(l.alg) + 2;
    for (int i = 1; i <= 7; i++) {
        l.d_range[i] = {(i - 1) * 2, (i - 1) * 2 + 2};
        l.m_range[i] = {14 + (i - 1) * dim0, 14 + i * dim0};
    }
    l.l0_range = {14 + 7 * dim0, dim};
    return l;
}

}  // namespace gradcon
