#ifndef GJ_RANK_HPP
#define GJ_RANK_HPP

#include <map>
#include <vector>

#include "gj/poly.hpp"
#include "gj/scalar.hpp"

namespace gj {

/// Sparse rational matrix assembled from triplets. Row/column indices are
/// 0-based; duplicate entries accumulate. Rows are kept as sorted vectors
/// and normalised lazily.
class SparseRatMatrix {
public:
    using Row = std::vector<std::pair<long long, Rat>>;

    SparseRatMatrix(long long nrows, long long ncols)
        : nrows_(nrows), ncols_(ncols), rows_(static_cast<std::size_t>(nrows)) {}
    long long nrows() const { return nrows_; }
    long long ncols() const { return ncols_; }
    void add(long long row, long long col, const Rat& v);
    const std::vector<Row>& rows() const;
    long long nnz() const;

    /// y = M x for a sparse column vector x.
    std::map<long long, Rat> apply(const std::map<long long, Rat>& x) const;

    /// Moves the normalised rows out; the matrix is empty afterwards.
    std::vector<Row> release_rows();

private:
    long long nrows_, ncols_;
    mutable std::vector<Row> rows_; // sorted and duplicate-free once normalised
    mutable bool dirty_ = false;
    void normalize() const;
};

/// Exact rank by sparse rational Gaussian elimination with
/// Markowitz-style pivot selection (evaluated over the shortest active
/// rows); ties broken by (row, col). Deterministic for a given matrix.
long long sparse_rank(SparseRatMatrix m);

/// Rank of a dense matrix over the rational function field Q(t), entries
/// given as polynomials in t (Laurent inputs should be cleared by a power
/// of t first). Fraction-free elimination over Q[t].
long long poly_matrix_rank(std::vector<std::vector<Poly>> m);

/// Incremental echelon basis of a span of sparse columns. Every stored
/// vector has a distinct leading row, so reducing a vector is a single
/// ascending sweep with lead lookups; the canonical residual modulo the
/// span is unique. Deterministic in the insertion order.
class SparseSpanSolver {
public:
    using Vec = std::map<long long, Rat>;

    /// true when the column enlarges the span (it is then kept).
    bool add_column(const Vec& col);
    long long rank() const { return static_cast<long long>(ech_.size()); }
    bool contains(const Vec& v) const;
    /// Coordinates of v over the kept columns; internal_error if outside.
    std::vector<Rat> solve(const Vec& v) const;
    /// Canonical representative of v modulo the span: all echelon leading
    /// coordinates eliminated.
    Vec reduce_mod(const Vec& v) const;
    const std::vector<long long>& leads() const { return lead_list_; }

private:
    struct Ech {
        long long lead;
        Vec vec;    // leading coefficient 1
        Vec coords; // vec over the kept columns, sparse
    };
    std::vector<Ech> ech_;
    std::map<long long, std::size_t> by_lead_;
    std::vector<long long> lead_list_;
    long long kept_ = 0;
    // r -> residual; lam accumulates the kept-column coordinates of r - residual
    void reduce(Vec& r, Vec* lam) const;
};

/// Dense echelon solver over Q for small systems: express vectors in the
/// column span of a fixed matrix and recover the coordinates.
class ColumnSpanSolver {
public:
    /// columns: list of column vectors, all of the same length.
    explicit ColumnSpanSolver(const std::vector<std::vector<Rat>>& columns);
    long long rank() const { return static_cast<long long>(ech_.size()); }
    bool contains(const std::vector<Rat>& v) const;
    /// Coordinates of v in the span; throws domain_error when v is outside.
    std::vector<Rat> solve(const std::vector<Rat>& v) const;

private:
    struct Ech {
        std::size_t pivot;
        std::vector<Rat> vec;    // echelon vector, leading coefficient 1
        std::vector<Rat> coords; // vec expressed in the original columns
    };
    std::size_t dim_ = 0, ncols_ = 0;
    std::vector<Ech> ech_;
    bool reduce(std::vector<Rat>& r, std::vector<Rat>& x) const; // true when r ends zero
};

} // namespace gj

#endif
