#pragma once

// Small dense exact linear algebra over a field-like scalar type.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "codo/ring.hpp"

namespace codo {

inline std::size_t pivot_weight(const RingElement& e) { return e.num().size() + e.den().size(); }
inline std::size_t pivot_weight(const Rational&) { return 1; }

template <class S>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<S> data_;
};

/// Determinant by fraction-free (Bareiss) elimination. Every division is exact.
template <class S>
S bareiss_det(Matrix<S> m) {
    const std::size_t n = m.rows();
    if (n == 0) return S(1);
    S prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t best = n;
        for (std::size_t i = k; i < n; ++i)
            if (!(m(i, k) == S(0)) && (best == n || pivot_weight(m(i, k)) < pivot_weight(m(best, k)))) best = i;
        if (best == n) return S(0);
        if (best != k) {
            m.swap_rows(best, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                S v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = (prev == S(1)) ? v : v / prev;
            }
            m(i, k) = S(0);
        }
        prev = m(k, k);
    }
    S d = m(n - 1, n - 1);
    return negate ? S(0) - d : d;
}

template <class S>
struct LinearSolution {
    /// A particular solution when the system is consistent.
    std::optional<std::vector<S>> particular;
    /// Basis of the homogeneous solution space.
    std::vector<std::vector<S>> nullspace;
};

/// Solve a x = b by Gauss-Jordan elimination.
template <class S>
LinearSolution<S> solve(Matrix<S> a, std::vector<S> b) {
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!(a(i, c) == S(0)) && (best == rows || pivot_weight(a(i, c)) < pivot_weight(a(best, c)))) best = i;
        if (best == rows) continue;
        a.swap_rows(best, r);
        std::swap(b[best], b[r]);
        S inv = S(1) / a(r, c);
        for (std::size_t j = c; j < cols; ++j) a(r, j) = a(r, j) * inv;
        b[r] = b[r] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == S(0)) continue;
            S f = a(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!(a(r, j) == S(0))) a(i, j) = a(i, j) - f * a(r, j);
            b[i] = b[i] - f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    LinearSolution<S> out;
    bool consistent = true;
    for (std::size_t i = r; i < rows; ++i)
        if (!(b[i] == S(0))) consistent = false;
    if (consistent) {
        std::vector<S> x(cols, S(0));
        for (std::size_t k = 0; k < r; ++k) x[pivot_col[k]] = b[k];
        out.particular = std::move(x);
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<S> v(cols, S(0));
        v[f] = S(1);
        for (std::size_t k = 0; k < r; ++k) v[pivot_col[k]] = S(0) - a(k, f);
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

}  // namespace codo
