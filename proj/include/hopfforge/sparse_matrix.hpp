#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hopfforge/rational.hpp"

namespace hopfforge::ratlin {

using Column = std::vector<Rational>;

/// Row-major sparse matrix of exact rationals. Zero entries are never stored.
class SparseMatrix {
public:
    using Row = std::map<int, Rational>;

    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : cols_(cols), rows_(static_cast<std::size_t>(rows)) {}
    static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& dense);
    static SparseMatrix identity(int n);

    [[nodiscard]] int rows() const { return static_cast<int>(rows_.size()); }
    [[nodiscard]] int cols() const { return cols_; }

    [[nodiscard]] Rational get(int r, int c) const;
    void set(int r, int c, const Rational& v);
    void add(int r, int c, const Rational& v);
    /// Appends a row; returns its index.
    int append_row(Row row = {});

    [[nodiscard]] const Row& row(int r) const { return rows_[static_cast<std::size_t>(r)]; }
    [[nodiscard]] std::size_t nonzeros() const;

    [[nodiscard]] Column multiply(const Column& x) const;
    [[nodiscard]] std::vector<std::vector<Rational>> to_dense() const;

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
    int cols_ = 0;
    std::vector<Row> rows_;
};

struct RrefResult {
    SparseMatrix matrix;
    std::vector<int> pivots;
};

/// Reduced row echelon form. Zero rows are kept at the bottom so the shape is
/// preserved.
RrefResult rref(const SparseMatrix& m);

struct AffineSolution {
    std::optional<Column> particular;
    std::vector<Column> nullspace;
};

/// Solves a * x = b. Free variables of the rref parametrization are set to
/// zero in the particular solution; the nullspace basis has one vector per
/// free column.
AffineSolution solve_affine(const SparseMatrix& a, const Column& b);

/// Rank of a matrix (number of rref pivots).
int rank(const SparseMatrix& m);

} // namespace hopfforge::ratlin
