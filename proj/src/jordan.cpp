#include "gradcon/jordan.hpp"

#include <map>
#include <stdexcept>

#include "gradcon/fano.hpp"

namespace gradcon {

using fano::star;

namespace {

constexpr int kOffRow[3] = {0, 0, 1};
constexpr int kOffCol[3] = {1, 2, 2};

int off_pos(int i, int j) {  // 0-based row < col
    if (i == 0 && j == 1) return 0;
    if (i == 0 && j == 2) return 1;
    if (i == 1 && j == 2) return 2;
    return -1;
}

using Mat3 = std::array<std::array<CompElem, 3>, 3>;

Mat3 to_matrix(const JordanElem& u) {
    Mat3 m;
    for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++) m[i][j] = comp_zero(u.alg);
    for (int i = 0; i < 3; i++) m[i][i].c[0] = u.diag[i];
    for (int p = 0; p < 3; p++) {
        m[kOffRow[p]][kOffCol[p]] = u.off[p];
        m[kOffCol[p]][kOffRow[p]] = comp_conj(u.off[p]);
    }
    return m;
}

Mat3 mat_mul(const Mat3& a, const Mat3& b, Hurwitz alg) {
    Mat3 r;
    for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++) {
            r[i][j] = comp_zero(alg);
            for (int k = 0; k < 3; k++) r[i][j] = comp_add(r[i][j], comp_mul(a[i][k], b[k][j]));
        }
    return r;
}

void check_same(const JordanElem& a, const JordanElem& b) {
    if (a.alg != b.alg) throw std::invalid_argument("mixed-algebra Jordan operands");
}

}  // namespace

JordanElem jordan_zero(Hurwitz a) {
    JordanElem u;
    u.alg = a;
    for (auto& o : u.off) o = comp_zero(a);
    return u;
}

JordanElem jordan_identity(Hurwitz a) {
    JordanElem u = jordan_zero(a);
    u.diag = {Q(1), Q(1), Q(1)};
    return u;
}

JordanElem jordan_diag_unit(Hurwitz a, int i) {
    JordanElem u = jordan_zero(a);
    u.diag[i] = 1;
    return u;
}

JordanElem jordan_off(Hurwitz a, int p, const CompElem& x) {
    if (x.alg != a) throw std::invalid_argument("jordan_off: algebra mismatch");
    JordanElem u = jordan_zero(a);
    u.off[p] = x;
    return u;
}

JordanElem jordan_add(const JordanElem& a, const JordanElem& b) {
    check_same(a, b);
    JordanElem r = a;
    for (int i = 0; i < 3; i++) r.diag[i] += b.diag[i];
    for (int p = 0; p < 3; p++) r.off[p] = comp_add(r.off[p], b.off[p]);
    return r;
}

JordanElem jordan_sub(const JordanElem& a, const JordanElem& b) {
    return jordan_add(a, jordan_scale(Q(-1), b));
}

JordanElem jordan_scale(const Q& s, const JordanElem& a) {
    JordanElem r = a;
    for (int i = 0; i < 3; i++) r.diag[i] *= s;
    for (int p = 0; p < 3; p++) r.off[p] = comp_scale(s, r.off[p]);
    return r;
}

bool jordan_is_zero(const JordanElem& a) {
    for (int i = 0; i < 3; i++)
        if (a.diag[i] != 0) return false;
    for (int p = 0; p < 3; p++)
        if (!comp_is_zero(a.off[p])) return false;
    return true;
}

bool jordan_eq(const JordanElem& a, const JordanElem& b) { return jordan_is_zero(jordan_sub(a, b)); }

JordanElem jordan_mul(const JordanElem& a, const JordanElem& b) {
    check_same(a, b);
    Mat3 ab = mat_mul(to_matrix(a), to_matrix(b), a.alg);
    Mat3 ba = mat_mul(to_matrix(b), to_matrix(a), a.alg);
    JordanElem r = jordan_zero(a.alg);
    Q half(1, 2);
    for (int i = 0; i < 3; i++) {
        CompElem d = comp_scale(half, comp_add(ab[i][i], ba[i][i]));
        // hermitian product keeps scalar diagonal
        for (int t = 1; t < 8; t++)
            if (d.c[t] != 0) throw std::logic_error("jordan_mul: non-scalar diagonal");
        r.diag[i] = d.c[0];
    }
    for (int p = 0; p < 3; p++)
        r.off[p] = comp_scale(half, comp_add(ab[kOffRow[p]][kOffCol[p]], ba[kOffRow[p]][kOffCol[p]]));
    return r;
}

Q jordan_trace(const JordanElem& u) { return u.diag[0] + u.diag[1] + u.diag[2]; }

JordanElem star_mul(const JordanElem& a, const JordanElem& b) {
    if (jordan_trace(a) != 0 || jordan_trace(b) != 0)
        throw std::invalid_argument("star_mul needs traceless operands");
    JordanElem p = jordan_mul(a, b);
    Q t = jordan_trace(p) / 3;
    JordanElem r = p;
    for (int i = 0; i < 3; i++) r.diag[i] -= t;
    return r;
}

JordanBasis::JordanBasis(Hurwitz a) : alg_(a) {
    const auto& idx = hurwitz_indices(a);
    int l = static_cast<int>(idx.size());
    dim_ = 3 * l + 3;
    for (int i = 0; i < 3; i++) basis_.push_back(jordan_diag_unit(a, i));
    for (int p = 0; p < 3; p++)
        for (int c : idx) basis_.push_back(jordan_off(a, p, comp_unit(a, c)));
    basis0_.push_back(jordan_sub(jordan_diag_unit(a, 0), jordan_diag_unit(a, 1)));
    basis0_.push_back(jordan_sub(jordan_diag_unit(a, 1), jordan_diag_unit(a, 2)));
    for (int k = 3; k < dim_; k++) basis0_.push_back(basis_[k]);
    mul_.resize(dim_ * dim_);
    for (int x = 0; x < dim_; x++)
        for (int y = x; y < dim_; y++) {
            mul_[x * dim_ + y] = coords(jordan_mul(basis_[x], basis_[y]));
            mul_[y * dim_ + x] = mul_[x * dim_ + y];
        }
}

Vec JordanBasis::coords(const JordanElem& u) const {
    if (u.alg != alg_) throw std::invalid_argument("JordanBasis::coords: algebra mismatch");
    const auto& idx = hurwitz_indices(alg_);
    Vec v(dim_);
    for (int i = 0; i < 3; i++) v[i] = u.diag[i];
    int t = 3;
    for (int p = 0; p < 3; p++)
        for (int c : idx) v[t++] = u.off[p].c[c];
    // no coordinates outside the algebra
    for (int p = 0; p < 3; p++)
        for (int i = 0; i < 8; i++)
            if (u.off[p].c[i] != 0 && hurwitz_local_index(alg_, i) < 0)
                throw std::invalid_argument("JordanBasis::coords: entry outside algebra");
    return v;
}

JordanElem JordanBasis::from_coords(const Vec& v) const {
    JordanElem u = jordan_zero(alg_);
    const auto& idx = hurwitz_indices(alg_);
    for (int i = 0; i < 3; i++) u.diag[i] = v[i];
    int t = 3;
    for (int p = 0; p < 3; p++)
        for (int c : idx) u.off[p].c[c] = v[t++];
    return u;
}

Vec JordanBasis::coords0(const JordanElem& u) const {
    if (jordan_trace(u) != 0) throw std::invalid_argument("coords0: element not traceless");
    Vec full = coords(u);
    Vec v(dim0());
    v[0] = full[0];
    v[1] = -full[2];
    for (int t = 3; t < dim_; t++) v[t - 1] = full[t];
    return v;
}

JordanElem JordanBasis::from_coords0(const Vec& v) const {
    Vec full(dim_);
    full[0] = v[0];
    full[1] = v[1] - v[0];
    full[2] = -v[1];
    for (int t = 3; t < dim_; t++) full[t] = v[t - 1];
    return from_coords(full);
}

Vec JordanBasis::r_operator(const JordanElem& u) const {
    Vec endo(dim_ * dim_);
    for (int k = 0; k < dim_; k++) {
        Vec col = coords(jordan_mul(basis_[k], u));
        for (int r = 0; r < dim_; r++) endo[r * dim_ + k] = col[r];
    }
    return endo;
}

Vec JordanBasis::inner_derivation(const JordanElem& u, const JordanElem& v) const {
    return endo_commutator(r_operator(u), r_operator(v), dim_);
}

JordanElem JordanBasis::apply_endo(const Vec& endo, const JordanElem& u) const {
    Vec x = coords(u), y(dim_);
    for (int r = 0; r < dim_; r++)
        for (int c = 0; c < dim_; c++)
            if (endo[r * dim_ + c] != 0 && x[c] != 0) y[r] += endo[r * dim_ + c] * x[c];
    return from_coords(y);
}

const JordanBasis& jordan_basis(Hurwitz a) {
    static const JordanBasis f{Hurwitz::F}, k{Hurwitz::K}, h{Hurwitz::H}, o{Hurwitz::O};
    switch (a) {
        case Hurwitz::F: return f;
        case Hurwitz::K: return k;
        case Hurwitz::H: return h;
        case Hurwitz::O: return o;
    }
    return f;
}

const RowSpace& jordan_derivation_algebra(Hurwitz a) {
    static std::map<Hurwitz, RowSpace> cache;
    auto it = cache.find(a);
    if (it != cache.end()) return it->second;
    const JordanBasis& jb = jordan_basis(a);
    RowSpace s(jb.dim() * jb.dim());
    for (int x = 0; x < jb.dim(); x++)
        for (int y = x + 1; y < jb.dim(); y++) s.insert(jb.inner_derivation(jb.element(x), jb.element(y)));
    return cache.emplace(a, std::move(s)).first->second;
}

RowSpace jordan_leibniz_kernel(Hurwitz a) {
    const JordanBasis& jb = jordan_basis(a);
    const auto& idx = hurwitz_indices(a);
    int dim = jb.dim();
    // degree of each basis element under the octonion grading of J
    std::vector<int> deg(dim);
    std::array<std::vector<int>, 8> blockof;
    for (int k = 0; k < dim; k++) {
        deg[k] = k < 3 ? 0 : idx[(k - 3) % idx.size()];
        blockof[deg[k]].push_back(k);
    }
    RowSpace out(dim * dim);
    for (int kdeg : idx) {
        // unknowns: entries U[x][y] with deg(y) = kdeg * deg(x)
        std::vector<std::pair<int, int>> unknowns;
        std::vector<std::vector<int>> uid(dim, std::vector<int>(dim, -1));
        for (int x = 0; x < dim; x++)
            for (int y : blockof[star(kdeg, deg[x])]) {
                uid[x][y] = static_cast<int>(unknowns.size());
                unknowns.emplace_back(x, y);
            }
        int nu = static_cast<int>(unknowns.size());
        std::vector<Vec> eqs;
        for (int x = 0; x < dim; x++)
            for (int y = x; y < dim; y++) {
                const Vec& prod = jb.mul_table(x, y);
                for (int rho : blockof[star(kdeg, star(deg[x], deg[y]))]) {
                    Vec row(nu);
                    bool nonzero = false;
                    for (int m : blockof[star(deg[x], deg[y])]) {
                        if (prod[m] == 0) continue;
                        row[uid[m][rho]] += prod[m];
                        nonzero = true;
                    }
                    for (int r : blockof[star(kdeg, deg[x])]) {
                        const Q& q = jb.mul_table(r, y)[rho];
                        if (q == 0) continue;
                        row[uid[x][r]] -= q;
                        nonzero = true;
                    }
                    for (int r : blockof[star(kdeg, deg[y])]) {
                        const Q& q = jb.mul_table(x, r)[rho];
                        if (q == 0) continue;
                        row[uid[y][r]] -= q;
                        nonzero = true;
                    }
                    if (nonzero) eqs.push_back(std::move(row));
                }
            }
        RowSpace ker = kernel(eqs, nu);
        for (const Vec& sol : ker.rows()) {
            Vec endo(dim * dim);
            for (int t = 0; t < nu; t++) {
                if (sol[t] == 0) continue;
                auto [x, y] = unknowns[t];
                endo[y * dim + x] = sol[t];
            }
            out.insert(std::move(endo));
        }
    }
    return out;
}

JordanElem sym_plus(int i, int j) {
    int p = off_pos(i - 1, j - 1);
    if (p < 0) p = off_pos(j - 1, i - 1);
    if (p < 0) throw std::invalid_argument("sym_plus: bad indices");
    return jordan_off(Hurwitz::F, p, comp_unit(Hurwitz::F, 0));
}

Vec ad_skew(int i, int j) {
    // x = E_ij - E_ji over F; columns of u -> xu - ux on the H3(F) basis
    const JordanBasis& jb = jordan_basis(Hurwitz::F);
    int n = jb.dim();  // 6
    auto skew_mul = [&](const JordanElem& u) {
        // compute xu - ux with 3x3 rational matrices
        std::array<std::array<Q, 3>, 3> m{}, x{}, r{};
        Mat3 um = to_matrix(u);
        for (int a = 0; a < 3; a++)
            for (int b = 0; b < 3; b++) m[a][b] = um[a][b].c[0];
        x[i - 1][j - 1] = 1;
        x[j - 1][i - 1] = -1;
        for (int a = 0; a < 3; a++)
            for (int b = 0; b < 3; b++) {
                Q s = 0;
                for (int k = 0; k < 3; k++) s += x[a][k] * m[k][b] - m[a][k] * x[k][b];
                r[a][b] = s;
            }
        JordanElem out = jordan_zero(Hurwitz::F);
        for (int a = 0; a < 3; a++) out.diag[a] = r[a][a];
        for (int p = 0; p < 3; p++) out.off[p].c[0] = r[kOffRow[p]][kOffCol[p]];
        return out;
    };
    Vec endo(n * n);
    for (int k = 0; k < n; k++) {
        Vec col = jb.coords(skew_mul(jb.element(k)));
        for (int r = 0; r < n; r++) endo[r * n + k] = col[r];
    }
    return endo;
}

}  // namespace gradcon
