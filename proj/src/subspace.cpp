#include "qgraph/subspace.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace qgraph {

Matrix::Matrix(Field field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      entries_(std::size_t(rows) * std::size_t(cols)) {
    if (rows < 0 || cols < 0)
        throw InvalidParams("Matrix: negative dimensions");
}

Matrix Matrix::from_rows(Field field, int cols,
                         const std::vector<std::vector<unsigned>>& rows) {
    Matrix m(field, int(rows.size()), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (int(rows[r].size()) != cols)
            throw InvalidParams("Matrix::from_rows: ragged row");
        for (int c = 0; c < cols; ++c)
            m.set(int(r), c, field->element(rows[r][std::size_t(c)]));
    }
    return m;
}

void Matrix::swap_rows(int a, int b) {
    if (a == b)
        return;
    for (int c = 0; c < cols_; ++c) {
        FieldElement tmp = at(a, c);
        set(a, c, at(b, c));
        set(b, c, tmp);
    }
}

void Matrix::scale_row(int r, FieldElement s) {
    const auto& f = *field_;
    for (int c = 0; c < cols_; ++c)
        set(r, c, f.mul(at(r, c), s));
}

void Matrix::add_scaled_row(int dst, int src, FieldElement s) {
    const auto& f = *field_;
    if (s == f.zero())
        return;
    for (int c = 0; c < cols_; ++c)
        set(dst, c, f.add(at(dst, c), f.mul(s, at(src, c))));
}

Matrix Matrix::stack(const Matrix& top, const Matrix& bottom) {
    if (top.cols() != bottom.cols())
        throw AmbientMismatch("stack: column counts differ");
    Matrix m(top.field(), top.rows() + bottom.rows(), top.cols());
    for (int r = 0; r < top.rows(); ++r)
        for (int c = 0; c < top.cols(); ++c)
            m.set(r, c, top.at(r, c));
    for (int r = 0; r < bottom.rows(); ++r)
        for (int c = 0; c < bottom.cols(); ++c)
            m.set(top.rows() + r, c, bottom.at(r, c));
    return m;
}

namespace {

// In-place Gauss-Jordan; returns the pivot columns.
std::vector<int> eliminate(Matrix& m) {
    const auto& f = *m.field();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot_row = -1;
        for (int r = row; r < m.rows(); ++r)
            if (m.at(r, col) != f.zero()) {
                pivot_row = r;
                break;
            }
        if (pivot_row < 0)
            continue;
        m.swap_rows(row, pivot_row);
        FieldElement lead = m.at(row, col);
        if (lead != f.one())
            m.scale_row(row, f.inv(lead));
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row)
                continue;
            FieldElement v = m.at(r, col);
            if (v != f.zero())
                m.add_scaled_row(r, row, f.neg(v));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

Subspace rref(const Matrix& m) {
    Matrix work = m;
    std::vector<int> pivots = eliminate(work);
    const int k = int(pivots.size());
    Matrix basis(m.field(), k, m.cols());
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < m.cols(); ++c)
            basis.set(r, c, work.at(r, c));
    return Subspace(std::move(basis), std::move(pivots));
}

int rank_of(Matrix m) { return int(eliminate(m).size()); }

std::string Subspace::serialize() const {
    std::ostringstream out;
    for (int r = 0; r < dim(); ++r) {
        if (r > 0)
            out << ';';
        for (int c = 0; c < ambient(); ++c) {
            if (c > 0)
                out << ' ';
            out << basis_.at(r, c).index;
        }
    }
    return out.str();
}

void for_each_subspace(int n, int k, const Field& field,
                       const std::function<void(const Subspace&)>& fn,
                       std::uint64_t cap) {
    if (n < 0 || k < 0)
        throw InvalidParams("for_each_subspace: negative dimension");
    if (k > n)
        return;
    QInt total = gaussian_binomial(n, k, field->q());
    if (total > QInt(static_cast<unsigned long>(cap)))
        throw LimitExceeded("subspace enumeration count " + total.get_str() +
                            " exceeds cap " + std::to_string(cap));
    const unsigned q = field->q();

    std::vector<int> pivots(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        pivots[std::size_t(i)] = i;

    while (true) {
        // free positions for this pivot set, row-major
        std::vector<std::pair<int, int>> free_pos;
        std::vector<bool> is_pivot(std::size_t(n), false);
        for (int p : pivots)
            is_pivot[std::size_t(p)] = true;
        for (int r = 0; r < k; ++r)
            for (int c = pivots[std::size_t(r)] + 1; c < n; ++c)
                if (!is_pivot[std::size_t(c)])
                    free_pos.emplace_back(r, c);

        std::vector<unsigned> values(free_pos.size(), 0);
        while (true) {
            Matrix basis(field, k, n);
            for (int r = 0; r < k; ++r)
                basis.set(r, pivots[std::size_t(r)], field->one());
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                basis.set(free_pos[t].first, free_pos[t].second,
                          FieldElement{std::uint16_t(values[t])});
            fn(Subspace(std::move(basis), pivots));

            // odometer: last position changes fastest, so values are visited
            // in lexicographic order read row-major
            bool wrapped = true;
            for (std::size_t t = values.size(); t-- > 0;) {
                if (++values[t] < q) {
                    wrapped = false;
                    break;
                }
                values[t] = 0;
            }
            if (wrapped)
                break;
        }

        // next pivot-column combination in lexicographic order
        int t = k - 1;
        while (t >= 0 && pivots[std::size_t(t)] == n - k + t)
            --t;
        if (t < 0)
            break;
        ++pivots[std::size_t(t)];
        for (int u = t + 1; u < k; ++u)
            pivots[std::size_t(u)] = pivots[std::size_t(u - 1)] + 1;
    }
}

std::vector<Subspace> enumerate_subspaces(int n, int k, const Field& field,
                                          std::uint64_t cap) {
    std::vector<Subspace> out;
    for_each_subspace(n, k, field, [&](const Subspace& s) { out.push_back(s); }, cap);
    return out;
}

namespace {

void check_same_ambient(const Subspace& U, const Subspace& W) {
    if (U.ambient() != W.ambient() || U.field()->q() != W.field()->q())
        throw AmbientMismatch("subspaces live in different ambient spaces");
}

} // namespace

int intersection_dim(const Subspace& U, const Subspace& W) {
    check_same_ambient(U, W);
    int r = rank_of(Matrix::stack(U.basis(), W.basis()));
    return U.dim() + W.dim() - r;
}

Subspace intersection(const Subspace& U, const Subspace& W) {
    check_same_ambient(U, W);
    const int n = U.ambient();
    const Field& f = U.field();
    // Zassenhaus: reduce rows [u | u] and [w | 0]; rows whose left half
    // vanishes carry a basis of the intersection in their right half.
    Matrix z(f, U.dim() + W.dim(), 2 * n);
    for (int r = 0; r < U.dim(); ++r)
        for (int c = 0; c < n; ++c) {
            z.set(r, c, U.basis().at(r, c));
            z.set(r, n + c, U.basis().at(r, c));
        }
    for (int r = 0; r < W.dim(); ++r)
        for (int c = 0; c < n; ++c)
            z.set(U.dim() + r, c, W.basis().at(r, c));
    Subspace reduced = rref(z);
    std::vector<std::vector<unsigned>> rows;
    for (int r = 0; r < reduced.dim(); ++r) {
        bool left_zero = true;
        for (int c = 0; c < n && left_zero; ++c)
            left_zero = reduced.basis().at(r, c) == f->zero();
        if (!left_zero)
            continue;
        std::vector<unsigned> row(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c)
            row[std::size_t(c)] = reduced.basis().at(r, n + c).index;
        rows.push_back(std::move(row));
    }
    return rref(Matrix::from_rows(f, n, rows));
}

Subspace sum_span(const Subspace& U, const Subspace& W) {
    check_same_ambient(U, W);
    return rref(Matrix::stack(U.basis(), W.basis()));
}

bool contains(const Subspace& U, const Subspace& W) {
    check_same_ambient(U, W);
    if (W.dim() > U.dim())
        return false;
    return rank_of(Matrix::stack(U.basis(), W.basis())) == U.dim();
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw InvalidParams("mat_mul: inner dimensions differ");
    const auto& f = *a.field();
    Matrix out(a.field(), a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int t = 0; t < a.cols(); ++t) {
            FieldElement v = a.at(r, t);
            if (v == f.zero())
                continue;
            for (int c = 0; c < b.cols(); ++c)
                out.set(r, c, f.add(out.at(r, c), f.mul(v, b.at(t, c))));
        }
    return out;
}

Subspace coordinate_subspace(int n, const std::vector<int>& indices, const Field& field) {
    if (n < 0)
        throw InvalidParams("coordinate_subspace: negative ambient dimension");
    std::set<int> sorted(indices.begin(), indices.end());
    for (int idx : sorted)
        if (idx < 0 || idx >= n)
            throw IndexOutOfRange("coordinate index " + std::to_string(idx) +
                                  " outside [0, " + std::to_string(n) + ")");
    Matrix m(field, int(sorted.size()), n);
    int r = 0;
    for (int idx : sorted)
        m.set(r++, idx, field->one());
    return rref(m);
}

} // namespace qgraph
