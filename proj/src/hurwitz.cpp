#include "gradcon/hurwitz.hpp"

#include <sstream>
#include <stdexcept>

#include "gradcon/fano.hpp"

namespace gradcon {

using fano::star;

const char* hurwitz_name(Hurwitz c) {
    switch (c) {
        case Hurwitz::F: return "F";
        case Hurwitz::K: return "K";
        case Hurwitz::H: return "H";
        case Hurwitz::O: return "O";
    }
    return "?";
}

Hurwitz hurwitz_from_name(const std::string& s) {
    if (s == "F") return Hurwitz::F;
    if (s == "K") return Hurwitz::K;
    if (s == "H") return Hurwitz::H;
    if (s == "O") return Hurwitz::O;
    throw std::invalid_argument("unknown Hurwitz algebra: " + s);
}

int hurwitz_dim(Hurwitz c) {
    switch (c) {
        case Hurwitz::F: return 1;
        case Hurwitz::K: return 2;
        case Hurwitz::H: return 4;
        case Hurwitz::O: return 8;
    }
    return 0;
}

const std::vector<int>& hurwitz_indices(Hurwitz c) {
    static const std::vector<int> f = {0}, k = {0, 1}, h = {0, 1, 2, 5}, o = {0, 1, 2, 3, 4, 5, 6, 7};
    switch (c) {
        case Hurwitz::F: return f;
        case Hurwitz::K: return k;
        case Hurwitz::H: return h;
        case Hurwitz::O: return o;
    }
    return o;
}

int hurwitz_local_index(Hurwitz c, int i) {
    const auto& idx = hurwitz_indices(c);
    for (size_t t = 0; t < idx.size(); t++)
        if (idx[t] == i) return static_cast<int>(t);
    return -1;
}

// Output of the orientation scan (see header). Lines {1,2,5} and {1,3,6}
// carry the cycles (1,2,5) and (1,6,3); the remaining five lines carry the
// ascending cycles (2,3,7), (1,4,7), (2,4,6), (3,4,5), (5,6,7).
const std::array<std::array<int, 8>, 8> kOctSign = {{
    {+1, +1, +1, +1, +1, +1, +1, +1},
    {+1, -1, +1, -1, +1, -1, +1, -1},
    {+1, -1, -1, +1, +1, +1, -1, -1},
    {+1, +1, -1, -1, +1, -1, -1, +1},
    {+1, -1, -1, -1, -1, +1, +1, +1},
    {+1, +1, -1, +1, -1, -1, +1, -1},
    {+1, -1, +1, +1, -1, -1, -1, +1},
    {+1, +1, +1, -1, -1, +1, -1, -1},
}};

std::string sign_table_text() {
    std::ostringstream out;
    for (int i = 0; i < 8; i++)
        for (int j = 0; j < 8; j++) out << i << ' ' << j << ' ' << (kOctSign[i][j] > 0 ? "+1" : "-1") << '\n';
    return out.str();
}

namespace {

void check_same(const CompElem& a, const CompElem& b) {
    if (a.alg != b.alg) throw std::invalid_argument("mixed-algebra composition operands");
}

void check_support(const CompElem& a) {
    for (int i = 0; i < 8; i++)
        if (a.c[i] != 0 && hurwitz_local_index(a.alg, i) < 0)
            throw std::invalid_argument("element has a coordinate outside its algebra");
}

}  // namespace

CompElem comp_zero(Hurwitz a) { return CompElem{a, {}}; }

CompElem comp_unit(Hurwitz a, int i) {
    if (hurwitz_local_index(a, i) < 0) throw std::invalid_argument("basis unit not in algebra");
    CompElem e{a, {}};
    e.c[i] = 1;
    return e;
}

CompElem comp_add(const CompElem& a, const CompElem& b) {
    check_same(a, b);
    CompElem r{a.alg, {}};
    for (int i = 0; i < 8; i++) r.c[i] = a.c[i] + b.c[i];
    return r;
}

CompElem comp_sub(const CompElem& a, const CompElem& b) {
    check_same(a, b);
    CompElem r{a.alg, {}};
    for (int i = 0; i < 8; i++) r.c[i] = a.c[i] - b.c[i];
    return r;
}

CompElem comp_scale(const Q& s, const CompElem& a) {
    CompElem r{a.alg, {}};
    for (int i = 0; i < 8; i++) r.c[i] = s * a.c[i];
    return r;
}

bool comp_is_zero(const CompElem& a) {
    for (const Q& q : a.c)
        if (q != 0) return false;
    return true;
}

bool comp_eq(const CompElem& a, const CompElem& b) {
    for (int i = 0; i < 8; i++)
        if (a.c[i] != b.c[i]) return false;
    return true;
}

CompElem comp_mul(const CompElem& a, const CompElem& b) {
    check_same(a, b);
    CompElem r{a.alg, {}};
    for (int i = 0; i < 8; i++) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j < 8; j++) {
            if (b.c[j] == 0) continue;
            Q v = a.c[i] * b.c[j];
            if (kOctSign[i][j] < 0) v = -v;
            r.c[star(i, j)] += v;
        }
    }
    return r;
}

CompElem comp_conj(const CompElem& a) {
    CompElem r = a;
    for (int i = 1; i < 8; i++) r.c[i] = -r.c[i];
    return r;
}

Q comp_norm(const CompElem& a) {
    Q n = 0;
    for (const Q& q : a.c) n += q * q;
    return n;
}

Q comp_trace(const CompElem& a) { return 2 * a.c[0]; }

CompElem comp_commutator(const CompElem& a, const CompElem& b) {
    return comp_sub(comp_mul(a, b), comp_mul(b, a));
}

CompElem comp_associator(const CompElem& a, const CompElem& b, const CompElem& c) {
    return comp_sub(comp_mul(comp_mul(a, b), c), comp_mul(a, comp_mul(b, c)));
}

Vec endo_mul(const Vec& a, const Vec& b, int n) {
    Vec r(n * n);
    for (int i = 0; i < n; i++)
        for (int k = 0; k < n; k++) {
            const Q& v = a[i * n + k];
            if (v == 0) continue;
            for (int j = 0; j < n; j++)
                if (b[k * n + j] != 0) r[i * n + j] += v * b[k * n + j];
        }
    return r;
}

Vec endo_commutator(const Vec& a, const Vec& b, int n) {
    Vec ab = endo_mul(a, b, n), ba = endo_mul(b, a, n);
    for (int i = 0; i < n * n; i++) ab[i] -= ba[i];
    return ab;
}

CompElem endo_apply(Hurwitz alg, const Vec& endo, const CompElem& x) {
    check_support(x);
    const auto& idx = hurwitz_indices(alg);
    int n = static_cast<int>(idx.size());
    CompElem r{alg, {}};
    for (int c = 0; c < n; c++) {
        if (x.c[idx[c]] == 0) continue;
        for (int rr = 0; rr < n; rr++)
            if (endo[rr * n + c] != 0) r.c[idx[rr]] += endo[rr * n + c] * x.c[idx[c]];
    }
    return r;
}

Vec d_operator(const CompElem& a, const CompElem& b) {
    if (a.alg != Hurwitz::O || b.alg != Hurwitz::O)
        throw std::invalid_argument("d_operator expects octonions");
    // l and r multiplication matrices on the e-basis
    Vec la(64), ra(64), lb(64), rb(64);
    for (int i = 0; i < 8; i++)
        for (int j = 0; j < 8; j++) {
            int k = star(i, j);
            Q s = kOctSign[i][j] > 0 ? Q(1) : Q(-1);
            // e_i * e_j = s e_k: contributes to column j of l_{e_i} and column i of r_{e_j}
            if (a.c[i] != 0) la[k * 8 + j] += s * a.c[i];
            if (b.c[i] != 0) lb[k * 8 + j] += s * b.c[i];
            if (a.c[j] != 0) ra[k * 8 + i] += s * a.c[j];
            if (b.c[j] != 0) rb[k * 8 + i] += s * b.c[j];
        }
    Vec d(64);
    auto acc = [&](const Vec& x, const Vec& y) {
        Vec c = endo_commutator(x, y, 8);
        for (int t = 0; t < 64; t++) d[t] += c[t];
    };
    acc(la, lb);
    acc(la, rb);
    acc(ra, rb);
    return d;
}

OctDerivations derivation_algebra(Hurwitz c) {
    OctDerivations out;
    out.alg = c;
    const auto& idx = hurwitz_indices(c);
    int n = static_cast<int>(idx.size());
    out.n = n;
    for (int deg : idx) {
        // degree-deg component: d(e_j) = lambda_j e_{deg*j}; Leibniz on pairs
        // gives s(a,b) lambda_{a*b} = s(deg*a,b) lambda_a + s(a,deg*b) lambda_b.
        std::vector<Vec> eqs;
        for (int a : idx)
            for (int b : idx) {
                Vec row(n);
                row[hurwitz_local_index(c, star(a, b))] += kOctSign[a][b];
                row[hurwitz_local_index(c, a)] -= kOctSign[star(deg, a)][b];
                row[hurwitz_local_index(c, b)] -= kOctSign[a][star(deg, b)];
                eqs.push_back(std::move(row));
            }
        RowSpace ker = kernel(eqs, n);
        for (const Vec& lam : ker.rows()) {
            Vec endo(n * n);
            for (int j = 0; j < n; j++) {
                if (lam[j] == 0) continue;
                int target = hurwitz_local_index(c, star(deg, idx[j]));
                endo[target * n + j] = lam[j];
            }
            out.block[deg].push_back(endo);
        }
    }
    for (int deg = 0; deg < 8; deg++)
        for (const Vec& e : out.block[deg]) out.basis.push_back(e);
    return out;
}

}  // namespace gradcon
