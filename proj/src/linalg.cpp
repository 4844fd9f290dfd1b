#include "gradcon/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace gradcon {

const Q* SparseVec::coeff(int idx) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), idx,
                               [](const auto& t, int i) { return t.first < i; });
    if (it == terms.end() || it->first != idx) return nullptr;
    return &it->second;
}

Vec SparseVec::dense(int ambient) const {
    Vec v(ambient);
    for (const auto& [i, q] : terms) v[i] = q;
    return v;
}

SparseVec SparseVec::from_dense(const Vec& v) {
    SparseVec s;
    for (int i = 0; i < static_cast<int>(v.size()); i++)
        if (v[i] != 0) s.terms.emplace_back(i, v[i]);
    return s;
}

SparseVec SparseVec::scaled(const Q& s) const {
    SparseVec out;
    if (s == 0) return out;
    out.terms.reserve(terms.size());
    for (const auto& [i, q] : terms) out.terms.emplace_back(i, q * s);
    return out;
}

SparseVec SparseVec::negated() const {
    SparseVec out;
    out.terms.reserve(terms.size());
    for (const auto& [i, q] : terms) out.terms.emplace_back(i, -q);
    return out;
}

SparseVec sparse_axpy(const SparseVec& a, const Q& s, const SparseVec& b) {
    SparseVec out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size() || (i < a.terms.size() && a.terms[i].first < b.terms[j].first)) {
            out.terms.push_back(a.terms[i++]);
        } else if (i == a.terms.size() || b.terms[j].first < a.terms[i].first) {
            Q v = s * b.terms[j].second;
            if (v != 0) out.terms.emplace_back(b.terms[j].first, std::move(v));
            j++;
        } else {
            Q v = a.terms[i].second + s * b.terms[j].second;
            if (v != 0) out.terms.emplace_back(a.terms[i].first, std::move(v));
            i++, j++;
        }
    }
    return out;
}

SparseVec sparse_add(const SparseVec& a, const SparseVec& b) { return sparse_axpy(a, Q(1), b); }

void DenseAccum::add(const Q& s, const SparseVec& v) {
    if (s == 0) return;
    for (const auto& [i, q] : v.terms) {
        if (vals_[i] == 0) touched_.push_back(i);
        vals_[i] += s * q;
    }
}

void DenseAccum::add_unit(int idx, const Q& s) {
    if (s == 0) return;
    if (vals_[idx] == 0) touched_.push_back(idx);
    vals_[idx] += s;
}

bool DenseAccum::is_zero() const {
    for (int i : touched_)
        if (vals_[i] != 0) return false;
    return true;
}

SparseVec DenseAccum::take() {
    std::sort(touched_.begin(), touched_.end());
    touched_.erase(std::unique(touched_.begin(), touched_.end()), touched_.end());
    SparseVec out;
    out.terms.reserve(touched_.size());
    for (int i : touched_) {
        if (vals_[i] != 0) out.terms.emplace_back(i, vals_[i]);
        vals_[i] = 0;
    }
    touched_.clear();
    return out;
}

void DenseAccum::reset() {
    for (int i : touched_) vals_[i] = 0;
    touched_.clear();
}

void RowSpace::reduce(Vec& v) const {
    for (size_t r = 0; r < rows_.size(); r++) {
        const Q& c = v[pivots_[r]];
        if (c == 0) continue;
        Q scale = c;  // pivot entries are 1
        const Vec& row = rows_[r];
        for (int k = pivots_[r]; k < ambient_; k++) {
            if (row[k] != 0) v[k] -= scale * row[k];
        }
    }
}

bool RowSpace::insert(Vec v) {
    if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("RowSpace: ambient mismatch");
    reduce(v);
    int p = -1;
    for (int k = 0; k < ambient_; k++)
        if (v[k] != 0) { p = k; break; }
    if (p < 0) return false;
    Q inv = v[p];
    for (int k = p; k < ambient_; k++)
        if (v[k] != 0) v[k] /= inv;
    // clear the new pivot column from existing rows
    for (size_t r = 0; r < rows_.size(); r++) {
        const Q& c = rows_[r][p];
        if (c == 0) continue;
        Q scale = c;
        for (int k = p; k < ambient_; k++)
            if (v[k] != 0) rows_[r][k] -= scale * v[k];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

bool RowSpace::contains(Vec v) const {
    reduce(v);
    for (const Q& q : v)
        if (q != 0) return false;
    return true;
}

bool RowSpace::contains(const SparseVec& v) const { return contains(v.dense(ambient_)); }

bool RowSpace::contains_space(const RowSpace& other) const {
    for (const Vec& r : other.rows())
        if (!contains(r)) return false;
    return true;
}

std::optional<Vec> RowSpace::coordinates(Vec v) const {
    Vec x(rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        const Q& c = v[pivots_[r]];
        if (c == 0) continue;
        x[r] = c;
        Q scale = c;
        const Vec& row = rows_[r];
        for (int k = pivots_[r]; k < ambient_; k++)
            if (row[k] != 0) v[k] -= scale * row[k];
    }
    for (const Q& q : v)
        if (q != 0) return std::nullopt;
    return x;
}

RowSpace span(int ambient, const std::vector<Vec>& vectors) {
    RowSpace s(ambient);
    for (const Vec& v : vectors) s.insert(v);
    return s;
}

RowSpace space_sum(const RowSpace& u, const RowSpace& v) {
    RowSpace s = u;
    for (const Vec& r : v.rows()) s.insert(r);
    return s;
}

RowSpace space_intersect(const RowSpace& u, const RowSpace& v) {
    if (u.ambient() != v.ambient()) throw std::invalid_argument("intersect: ambient mismatch");
    // x in U cap V iff x = sum a_i u_i reduces to zero against V. The map
    // a -> reduce_V(sum a_i u_i) is linear; its kernel gives the intersection.
    std::vector<Vec> cols;
    for (const Vec& r : u.rows()) {
        Vec w = r;
        v.reduce(w);
        cols.push_back(std::move(w));
    }
    // kernel over coefficients a (dim u.dim()): rows of the constraint matrix
    // are indexed by ambient coordinates.
    std::vector<Vec> eq(u.ambient(), Vec(u.dim()));
    for (int a = 0; a < u.dim(); a++)
        for (int k = 0; k < u.ambient(); k++) eq[k][a] = cols[a][k];
    RowSpace coeff = kernel(eq, u.dim());
    RowSpace out(u.ambient());
    for (const Vec& a : coeff.rows()) {
        Vec x(u.ambient());
        for (int i = 0; i < u.dim(); i++) {
            if (a[i] == 0) continue;
            const Vec& r = u.rows()[i];
            for (int k = 0; k < u.ambient(); k++)
                if (r[k] != 0) x[k] += a[i] * r[k];
        }
        out.insert(std::move(x));
    }
    return out;
}

RrefResult rref(std::vector<Vec> rows) {
    RrefResult res;
    if (rows.empty()) return res;
    RowSpace s(static_cast<int>(rows[0].size()));
    for (Vec& r : rows) s.insert(std::move(r));
    res.rows = s.rows();
    res.pivots = s.pivots();
    res.rank = s.dim();
    return res;
}

RowSpace kernel(const std::vector<Vec>& rows, int ncols) {
    RrefResult r = rref(rows);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : r.pivots) is_pivot[p] = true;
    RowSpace out(ncols);
    for (int c = 0; c < ncols; c++) {
        if (is_pivot[c]) continue;
        Vec v(ncols);
        v[c] = 1;
        for (int i = 0; i < r.rank; i++) v[r.pivots[i]] = -r.rows[i][c];
        out.insert(std::move(v));
    }
    return out;
}

std::optional<Vec> solve(const std::vector<Vec>& rows, const Vec& rhs) {
    if (rows.size() != rhs.size()) throw std::invalid_argument("solve: size mismatch");
    if (rows.empty()) return Vec{};
    int n = static_cast<int>(rows[0].size());
    std::vector<Vec> aug;
    aug.reserve(rows.size());
    for (size_t i = 0; i < rows.size(); i++) {
        Vec a = rows[i];
        a.push_back(rhs[i]);
        aug.push_back(std::move(a));
    }
    RrefResult r = rref(std::move(aug));
    Vec x(n);
    for (int i = 0; i < r.rank; i++) {
        if (r.pivots[i] == n) return std::nullopt;  // 0 = 1 row
        x[r.pivots[i]] = r.rows[i][n];
    }
    return x;
}

void CoordSolver::add(const Vec& b) {
    if (static_cast<int>(b.size()) != ambient_) throw std::invalid_argument("CoordSolver: ambient mismatch");
    Vec v = b;
    Vec t(transform_.size() + 1);
    t[transform_.size()] = 1;
    for (size_t r = 0; r < rref_rows_.size(); r++) {
        const Q& c = v[pivots_[r]];
        if (c == 0) continue;
        Q scale = c;
        for (int k = 0; k < ambient_; k++)
            if (rref_rows_[r][k] != 0) v[k] -= scale * rref_rows_[r][k];
        for (size_t k = 0; k < transform_[r].size(); k++)
            if (transform_[r][k] != 0) t[k] -= scale * transform_[r][k];
    }
    int p = -1;
    for (int k = 0; k < ambient_; k++)
        if (v[k] != 0) { p = k; break; }
    if (p < 0) throw std::invalid_argument("CoordSolver: dependent family member");
    Q inv = v[p];
    for (Q& q : v) q /= inv;
    for (Q& q : t) q /= inv;
    for (auto& tr : transform_) tr.resize(transform_.size() + 1);
    rref_rows_.push_back(std::move(v));
    pivots_.push_back(p);
    transform_.push_back(std::move(t));
}

std::optional<Vec> CoordSolver::coordinates(const Vec& v) const {
    Vec w = v;
    Vec x(transform_.size());
    for (size_t r = 0; r < rref_rows_.size(); r++) {
        const Q& c = w[pivots_[r]];
        if (c == 0) continue;
        Q scale = c;
        for (int k = 0; k < ambient_; k++)
            if (rref_rows_[r][k] != 0) w[k] -= scale * rref_rows_[r][k];
        for (size_t k = 0; k < transform_[r].size(); k++)
            if (transform_[r][k] != 0) x[k] += scale * transform_[r][k];
    }
    for (const Q& q : w)
        if (q != 0) return std::nullopt;
    return x;
}

std::optional<SparseVec> CoordSolver::coordinates_sparse(const Vec& v) const {
    auto x = coordinates(v);
    if (!x) return std::nullopt;
    return SparseVec::from_dense(*x);
}

}  // namespace gradcon
