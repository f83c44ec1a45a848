#ifndef AKH_LINALG_HPP
#define AKH_LINALG_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "akh/scalars.hpp"

namespace akh {

/// Dense matrix over an exact field. All elimination is exact; pivots are the
/// first nonzero entry in column order, so results are deterministic.
template <class F>
class ExactMatrix {
public:
    ExactMatrix(int rows, int cols, F zero)
        : rows_(rows), cols_(cols), zero_(std::move(zero)),
          data_(static_cast<size_t>(rows) * cols, zero_) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    F& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const F& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const F& zero() const { return zero_; }

    ExactMatrix transpose() const {
        ExactMatrix out(cols_, rows_, zero_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    /// Columns of A followed by columns of B.
    static ExactMatrix hcat(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.rows_ != b.rows_) throw std::invalid_argument("hcat: row mismatch");
        ExactMatrix out(a.rows_, a.cols_ + b.cols_, a.zero_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j);
            for (int j = 0; j < b.cols_; ++j) out.at(i, a.cols_ + j) = b.at(i, j);
        }
        return out;
    }

private:
    int rows_, cols_;
    F zero_;
    std::vector<F> data_;
};

namespace detail {

/// In-place row echelon; returns the pivot columns.
template <class F>
std::vector<int> echelonize(ExactMatrix<F>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i) {
            if (!is_zero(m.at(i, col))) { p = i; break; }
        }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        F inv = field_inv(m.at(row, col));
        for (int j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m.at(i, col))) continue;
            F f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace detail

template <class F>
int rank(const ExactMatrix<F>& m) {
    ExactMatrix<F> work = m;
    return static_cast<int>(detail::echelonize(work).size());
}

/// Exact solution of M x = b, or nullopt when the system is inconsistent.
/// When the columns are independent the solution is unique; otherwise free
/// variables are set to zero.
template <class F>
std::optional<std::vector<F>> solve(const ExactMatrix<F>& m, const std::vector<F>& b) {
    if (static_cast<int>(b.size()) != m.rows())
        throw std::invalid_argument("solve: right-hand side length mismatch");
    ExactMatrix<F> aug(m.rows(), m.cols() + 1, m.zero());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    auto pivots = detail::echelonize(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<F> x(m.cols(), m.zero());
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(static_cast<int>(k), m.cols());
    return x;
}

/// A basis of the column space: the pivot columns of M, unchanged.
template <class F>
ExactMatrix<F> column_space(const ExactMatrix<F>& m) {
    ExactMatrix<F> work = m;
    auto pivots = detail::echelonize(work);
    ExactMatrix<F> out(m.rows(), static_cast<int>(pivots.size()), m.zero());
    for (size_t k = 0; k < pivots.size(); ++k)
        for (int i = 0; i < m.rows(); ++i) out.at(i, static_cast<int>(k)) = m.at(i, pivots[k]);
    return out;
}

/// dim(colspace A intersect colspace B) = rank A + rank B - rank [A B].
template <class F>
int intersection_dim(const ExactMatrix<F>& a, const ExactMatrix<F>& b) {
    return rank(a) + rank(b) - rank(ExactMatrix<F>::hcat(a, b));
}

/// Is v in the column space of M?
template <class F>
bool in_column_space(const ExactMatrix<F>& m, const std::vector<F>& v) {
    return solve(m, v).has_value();
}

} // namespace akh

#endif
