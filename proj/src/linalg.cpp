#include "homstar/linalg.hpp"

namespace homstar {

std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int piv = -1;
        for (int r = row; r < m.rows; ++r) {
            if (!m.a[r][col].is_zero()) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(m.a[row], m.a[piv]);
        Scalar inv = Scalar(1) / m.a[row][col];
        for (int c = col; c < m.cols; ++c) m.a[row][c] *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m.a[r][col].is_zero()) continue;
            Scalar f = m.a[r][col];
            for (int c = col; c < m.cols; ++c) m.a[r][c] -= f * m.a[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

std::optional<std::vector<Scalar>> solve_canonical(const Matrix& A, const std::vector<Scalar>& b) {
    Matrix aug(A.rows, A.cols + 1);
    for (int r = 0; r < A.rows; ++r) {
        aug.a[r] = A.a[r];
        aug.a[r].push_back(b[r]);
    }
    std::vector<int> pivots = rref(aug);
    for (size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] == A.cols) return std::nullopt; // pivot in the RHS column
    }
    std::vector<Scalar> x(A.cols);
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.a[k][A.cols];
    return x;
}

std::vector<std::vector<Scalar>> nullspace(const Matrix& A) {
    Matrix m = A;
    std::vector<int> pivots = rref(m);
    std::vector<char> is_pivot(A.cols, 0);
    for (int p : pivots) is_pivot[p] = 1;
    std::vector<std::vector<Scalar>> basis;
    for (int free = 0; free < A.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(A.cols);
        v[free] = Scalar(1);
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m.a[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Scalar> Span::reduce(std::vector<Scalar> v) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
        const Scalar& lead = v[pivots_[k]];
        if (lead.is_zero()) continue;
        Scalar f = lead;
        for (int c = 0; c < dim_; ++c) v[c] -= f * rows_[k][c];
    }
    return v;
}

bool Span::insert(std::vector<Scalar> v) {
    v = reduce(std::move(v));
    int piv = -1;
    for (int c = 0; c < dim_; ++c) {
        if (!v[c].is_zero()) {
            piv = c;
            break;
        }
    }
    if (piv < 0) return false;
    Scalar inv = Scalar(1) / v[piv];
    for (int c = 0; c < dim_; ++c) v[c] *= inv;
    // keep earlier rows reduced against the new one for determinism
    for (size_t k = 0; k < rows_.size(); ++k) {
        Scalar f = rows_[k][piv];
        if (f.is_zero()) continue;
        for (int c = 0; c < dim_; ++c) rows_[k][c] -= f * v[c];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

bool Span::contains(std::vector<Scalar> v) const {
    v = reduce(std::move(v));
    for (const Scalar& s : v) {
        if (!s.is_zero()) return false;
    }
    return true;
}

} // namespace homstar
