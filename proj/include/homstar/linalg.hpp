#ifndef HOMSTAR_LINALG_HPP
#define HOMSTAR_LINALG_HPP

#include <optional>
#include <vector>

#include "homstar/scalar.hpp"

namespace homstar {

/// Dense matrix over Q(i). Sizes here stay small (graded blocks and
/// truncated cochain complexes), so fraction-free tricks are not needed;
/// plain exact Gauss-Jordan keeps everything canonical.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<Scalar>> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(r, std::vector<Scalar>(c)) {}

    Scalar& at(int r, int c) { return a[r][c]; }
    const Scalar& at(int r, int c) const { return a[r][c]; }
};

/// In-place reduced row echelon form; returns the pivot column of each
/// pivot row in order. Deterministic: first nonzero column, topmost row.
std::vector<int> rref(Matrix& m);

/// Rank via a working copy.
int rank(Matrix m);

/// Solve A x = b. Returns the canonical solution with all free variables
/// set to zero, or nullopt when inconsistent.
std::optional<std::vector<Scalar>> solve_canonical(const Matrix& A, const std::vector<Scalar>& b);

/// Basis of the nullspace of A, one vector per free column, in column order.
std::vector<std::vector<Scalar>> nullspace(const Matrix& A);

/// Echelon-backed incremental span: tracks the row space of inserted
/// vectors; insert() reports whether the vector enlarged the span.
class Span {
public:
    explicit Span(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    /// Reduce v against the current echelon rows; returns the residue.
    std::vector<Scalar> reduce(std::vector<Scalar> v) const;

    /// Insert v; returns true if it was independent of the current span.
    bool insert(std::vector<Scalar> v);

    bool contains(std::vector<Scalar> v) const;

    /// Express v in terms of the inserted generators is not tracked here;
    /// use solve_canonical against the generator matrix for coordinates.

private:
    int dim_;
    std::vector<std::vector<Scalar>> rows_; // echelon rows, pivot normalised to 1
    std::vector<int> pivots_;
};

} // namespace homstar

#endif
