#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qgraph/gfq.hpp"
#include "qgraph/qcomb.hpp"

namespace qgraph {

/// Dense row-major matrix over F_q.
class Matrix {
public:
    Matrix(Field field, int rows, int cols); // zero-filled

    /// Rows given as element indices; every index must be < q.
    static Matrix from_rows(Field field, int cols,
                            const std::vector<std::vector<unsigned>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return field_; }

    FieldElement at(int r, int c) const { return entries_[std::size_t(r) * cols_ + c]; }
    void set(int r, int c, FieldElement v) { entries_[std::size_t(r) * cols_ + c] = v; }

    void swap_rows(int a, int b);
    void scale_row(int r, FieldElement s);
    /// row[dst] += s * row[src]
    void add_scaled_row(int dst, int src, FieldElement s);

    /// Stacks the rows of two matrices with identical column counts.
    static Matrix stack(const Matrix& top, const Matrix& bottom);

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    Field field_;
    int rows_ = 0, cols_ = 0;
    std::vector<FieldElement> entries_;
};

/// A k-subspace of F_q^n held as its canonical reduced-row-echelon basis.
/// Two values compare equal exactly when they are the same point of the
/// Grassmannian. Immutable.
class Subspace {
public:
    int dim() const { return basis_.rows(); }
    int ambient() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<int>& pivot_cols() const { return pivot_cols_; }
    const Field& field() const { return basis_.field(); }

    /// Canonical wire form: rows of base-10 element indices, entries
    /// space-separated, rows joined by ";" (e.g. "1 0 0 0;0 1 0 0").
    std::string serialize() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient() == b.ambient() && a.field()->q() == b.field()->q() &&
               a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    Subspace(Matrix basis, std::vector<int> pivots)
        : basis_(std::move(basis)), pivot_cols_(std::move(pivots)) {}

    friend Subspace rref(const Matrix& m);
    friend void for_each_subspace(int n, int k, const Field& field,
                                  const std::function<void(const Subspace&)>& fn,
                                  std::uint64_t cap);

    Matrix basis_;
    std::vector<int> pivot_cols_;
};

/// Canonicalizes the row space of m: Gauss-Jordan elimination with exact
/// field arithmetic, zero rows dropped. dim of the result equals rank(m).
Subspace rref(const Matrix& m);

/// Rank by destructive elimination on the copy.
int rank_of(Matrix m);

inline constexpr std::uint64_t kDefaultEnumerationCap = 2'000'000;

/// Visits every k-subspace of F_q^n exactly once, in the canonical order:
/// lexicographic by pivot-column set, then by free-entry values read
/// row-major (first free position most significant). This order is the
/// stable vertex-id contract. Throws LimitExceeded if the subspace count
/// exceeds cap.
void for_each_subspace(int n, int k, const Field& field,
                       const std::function<void(const Subspace&)>& fn,
                       std::uint64_t cap = kDefaultEnumerationCap);

std::vector<Subspace> enumerate_subspaces(int n, int k, const Field& field,
                                          std::uint64_t cap = kDefaultEnumerationCap);

/// dim(U ∩ W) = dim U + dim W - rank of the stacked bases.
int intersection_dim(const Subspace& U, const Subspace& W);

/// Canonical basis of U ∩ W (Zassenhaus block elimination).
Subspace intersection(const Subspace& U, const Subspace& W);

/// Canonical U + W.
Subspace sum_span(const Subspace& U, const Subspace& W);

/// true iff W ⊆ U.
bool contains(const Subspace& U, const Subspace& W);

/// Span of the named coordinate vectors; an empty index set gives the zero
/// space. Indices are 0-based positions in [0, n).
Subspace coordinate_subspace(int n, const std::vector<int>& indices, const Field& field);

/// Plain matrix product over the common field.
Matrix mat_mul(const Matrix& a, const Matrix& b);

} // namespace qgraph
