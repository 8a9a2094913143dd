#include "hopfforge/sparse_matrix.hpp"

#include <stdexcept>

namespace hopfforge::ratlin {

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& dense)
{
    int cols = dense.empty() ? 0 : static_cast<int>(dense.front().size());
    SparseMatrix m(static_cast<int>(dense.size()), cols);
    for (int r = 0; r < m.rows(); ++r) {
        if (static_cast<int>(dense[static_cast<std::size_t>(r)].size()) != cols)
            throw std::invalid_argument("from_dense: ragged rows");
        for (int c = 0; c < cols; ++c)
            m.set(r, c, dense[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    }
    return m;
}

SparseMatrix SparseMatrix::identity(int n)
{
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, Rational(1));
    return m;
}

Rational SparseMatrix::get(int r, int c) const
{
    const auto& row = rows_.at(static_cast<std::size_t>(r));
    auto it = row.find(c);
    return it == row.end() ? Rational(0) : it->second;
}

void SparseMatrix::set(int r, int c, const Rational& v)
{
    if (c < 0 || c >= cols_)
        throw std::out_of_range("SparseMatrix: column out of range");
    auto& row = rows_.at(static_cast<std::size_t>(r));
    if (v.is_zero())
        row.erase(c);
    else
        row[c] = v;
}

void SparseMatrix::add(int r, int c, const Rational& v)
{
    if (c < 0 || c >= cols_)
        throw std::out_of_range("SparseMatrix: column out of range");
    if (v.is_zero())
        return;
    auto& row = rows_.at(static_cast<std::size_t>(r));
    auto [it, inserted] = row.try_emplace(c, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero())
            row.erase(it);
    }
}

int SparseMatrix::append_row(Row row)
{
    for (auto it = row.begin(); it != row.end();) {
        if (it->first < 0 || it->first >= cols_)
            throw std::out_of_range("SparseMatrix: column out of range");
        it = it->second.is_zero() ? row.erase(it) : std::next(it);
    }
    rows_.push_back(std::move(row));
    return rows() - 1;
}

std::size_t SparseMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& r : rows_)
        n += r.size();
    return n;
}

Column SparseMatrix::multiply(const Column& x) const
{
    if (static_cast<int>(x.size()) != cols_)
        throw std::invalid_argument("multiply: dimension mismatch");
    Column y(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (const auto& [c, v] : rows_[r])
            y[r] += v * x[static_cast<std::size_t>(c)];
    return y;
}

std::vector<std::vector<Rational>> SparseMatrix::to_dense() const
{
    std::vector<std::vector<Rational>> d(rows_.size(), std::vector<Rational>(static_cast<std::size_t>(cols_)));
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (const auto& [c, v] : rows_[r])
            d[r][static_cast<std::size_t>(c)] = v;
    return d;
}

namespace {

// row_a -= factor * row_b
void axpy(SparseMatrix::Row& a, const SparseMatrix::Row& b, const Rational& factor)
{
    for (const auto& [c, v] : b) {
        auto [it, inserted] = a.try_emplace(c, -(factor * v));
        if (!inserted) {
            it->second -= factor * v;
            if (it->second.is_zero())
                a.erase(it);
        }
    }
}

} // namespace

RrefResult rref(const SparseMatrix& m)
{
    std::vector<SparseMatrix::Row> work;
    work.reserve(static_cast<std::size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r)
        if (!m.row(r).empty())
            work.push_back(m.row(r));

    std::vector<SparseMatrix::Row> done;
    std::vector<int> pivots;
    // Forward elimination by increasing leading column.
    while (!work.empty()) {
        // Pick the row with the smallest leading column; ties go to the
        // sparsest row, then to the earliest.
        std::size_t best = 0;
        for (std::size_t i = 1; i < work.size(); ++i) {
            int lc = work[i].begin()->first, lb = work[best].begin()->first;
            if (lc < lb || (lc == lb && work[i].size() < work[best].size()))
                best = i;
        }
        SparseMatrix::Row pivot_row = std::move(work[best]);
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));
        int col = pivot_row.begin()->first;
        Rational inv = Rational(1) / pivot_row.begin()->second;
        if (!inv.is_one())
            for (auto& [c, v] : pivot_row)
                v *= inv;
        std::vector<SparseMatrix::Row> next;
        next.reserve(work.size());
        for (auto& r : work) {
            auto it = r.find(col);
            if (it != r.end()) {
                Rational f = it->second;
                axpy(r, pivot_row, f);
            }
            if (!r.empty())
                next.push_back(std::move(r));
        }
        work = std::move(next);
        pivots.push_back(col);
        done.push_back(std::move(pivot_row));
    }
    // Back substitution.
    for (std::size_t i = done.size(); i-- > 0;) {
        int col = pivots[i];
        for (std::size_t k = 0; k < i; ++k) {
            auto it = done[k].find(col);
            if (it != done[k].end()) {
                Rational f = it->second;
                axpy(done[k], done[i], f);
            }
        }
    }
    RrefResult res{SparseMatrix(m.rows(), m.cols()), pivots};
    for (std::size_t i = 0; i < done.size(); ++i)
        for (const auto& [c, v] : done[i])
            res.matrix.set(static_cast<int>(i), c, v);
    return res;
}

int rank(const SparseMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

AffineSolution solve_affine(const SparseMatrix& a, const Column& b)
{
    if (static_cast<int>(b.size()) != a.rows())
        throw std::invalid_argument("solve_affine: dimension mismatch");
    // Augmented matrix [a | b].
    SparseMatrix aug(a.rows(), a.cols() + 1);
    for (int r = 0; r < a.rows(); ++r) {
        for (const auto& [c, v] : a.row(r))
            aug.set(r, c, v);
        aug.set(r, a.cols(), b[static_cast<std::size_t>(r)]);
    }
    auto [red, pivots] = rref(aug);

    AffineSolution sol;
    bool consistent = pivots.empty() || pivots.back() != a.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
    for (int p : pivots)
        if (p < a.cols())
            is_pivot[static_cast<std::size_t>(p)] = true;

    if (consistent) {
        Column x(static_cast<std::size_t>(a.cols()));
        for (std::size_t i = 0; i < pivots.size(); ++i)
            x[static_cast<std::size_t>(pivots[i])] = red.get(static_cast<int>(i), a.cols());
        sol.particular = std::move(x);
    }
    for (int f = 0; f < a.cols(); ++f) {
        if (is_pivot[static_cast<std::size_t>(f)])
            continue;
        Column v(static_cast<std::size_t>(a.cols()));
        v[static_cast<std::size_t>(f)] = Rational(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            if (pivots[i] >= a.cols())
                break;
            v[static_cast<std::size_t>(pivots[i])] = -red.get(static_cast<int>(i), f);
        }
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

} // namespace hopfforge::ratlin
