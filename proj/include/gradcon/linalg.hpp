#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gradcon/rational.hpp"

namespace gradcon {

using Vec = std::vector<Q>;

// Sparse vector: (index, value) pairs, strictly increasing indices, no zeros.
struct SparseVec {
    std::vector<std::pair<int, Q>> terms;

    bool empty() const { return terms.empty(); }
    int nnz() const { return static_cast<int>(terms.size()); }
    void clear() { terms.clear(); }

    const Q* coeff(int idx) const;  // nullptr when absent
    Vec dense(int ambient) const;
    static SparseVec from_dense(const Vec& v);
    SparseVec scaled(const Q& s) const;
    SparseVec negated() const;
    bool operator==(const SparseVec& o) const { return terms == o.terms; }
};

SparseVec sparse_add(const SparseVec& a, const SparseVec& b);
SparseVec sparse_axpy(const SparseVec& a, const Q& s, const SparseVec& b);  // a + s*b

// Dense accumulator with a touched-index list, for summing many sparse vectors
// in a space that may be large.
class DenseAccum {
  public:
    explicit DenseAccum(int ambient) : vals_(ambient) {}
    void add(const Q& s, const SparseVec& v);
    void add_unit(int idx, const Q& s);
    bool is_zero() const;
    SparseVec take();  // extracts content and resets
    void reset();
    int ambient() const { return static_cast<int>(vals_.size()); }

  private:
    Vec vals_;
    std::vector<int> touched_;
};

// Row space in reduced row echelon form: pivot columns strictly increasing,
// pivot entries 1, pivot columns cleared in every other row. The basis is a
// canonical invariant of the subspace, so equality of spaces is equality of
// rows.
class RowSpace {
  public:
    RowSpace() : ambient_(0) {}
    explicit RowSpace(int ambient) : ambient_(ambient) {}

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    bool full() const { return dim() == ambient_; }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Reduces v against the basis in place; afterwards v has zeros at all
    // pivot columns.
    void reduce(Vec& v) const;
    bool insert(Vec v);  // true if the dimension grew
    bool contains(Vec v) const;
    bool contains(const SparseVec& v) const;
    bool contains_space(const RowSpace& other) const;
    // Coefficients x with sum x_r * rows()[r] = v, or nullopt if v not in the
    // space.
    std::optional<Vec> coordinates(Vec v) const;
    bool operator==(const RowSpace& o) const { return ambient_ == o.ambient_ && rows_ == o.rows_; }

  private:
    int ambient_;
    std::vector<Vec> rows_;
    std::vector<int> pivots_;
};

RowSpace span(int ambient, const std::vector<Vec>& vectors);
RowSpace space_sum(const RowSpace& u, const RowSpace& v);
RowSpace space_intersect(const RowSpace& u, const RowSpace& v);

struct RrefResult {
    std::vector<Vec> rows;  // nonzero rows in RREF
    std::vector<int> pivots;
    int rank = 0;
};

// Exact RREF with deterministic pivoting: leftmost column, first usable row.
RrefResult rref(std::vector<Vec> rows);

// Kernel of the linear map x -> M x, where `rows` are the rows of M (each of
// length ncols). Returned as a canonical RowSpace.
RowSpace kernel(const std::vector<Vec>& rows, int ncols);

// One solution of M x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const std::vector<Vec>& rows, const Vec& rhs);

// Coordinates with respect to an arbitrary ordered independent family (not
// necessarily in RREF).
class CoordSolver {
  public:
    explicit CoordSolver(int ambient) : ambient_(ambient) {}
    // Family members must be linearly independent; throws otherwise.
    void add(const Vec& b);
    int size() const { return static_cast<int>(transform_.size()); }
    int ambient() const { return ambient_; }
    std::optional<Vec> coordinates(const Vec& v) const;  // length size()
    std::optional<SparseVec> coordinates_sparse(const Vec& v) const;

  private:
    int ambient_;
    std::vector<Vec> rref_rows_;
    std::vector<int> pivots_;
    std::vector<Vec> transform_;  // rref_rows_[r] = sum transform_[r][i] * family[i]
};

}  // namespace gradcon
