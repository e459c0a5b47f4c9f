#pragma once

// Dense exact matrices and Gaussian elimination with first-nonzero pivoting.

#include <optional>
#include <vector>

#include "error.hpp"

namespace hopf {

template <class S>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, const S& zero) : r_(rows), c_(cols), a_(size_t(rows) * cols, zero) {}

    int rows() const { return r_; }
    int cols() const { return c_; }
    S& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
    const S& operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }

    std::vector<S> column(int j) const {
        std::vector<S> v;
        v.reserve(r_);
        for (int i = 0; i < r_; ++i) v.push_back((*this)(i, j));
        return v;
    }
    void set_column(int j, const std::vector<S>& v) {
        for (int i = 0; i < r_; ++i) (*this)(i, j) = v[i];
    }

    friend bool operator==(const Matrix& a, const Matrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }
    friend bool operator<(const Matrix& a, const Matrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) return a.r_ != b.r_ ? a.r_ < b.r_ : a.c_ < b.c_;
        return a.a_ < b.a_;
    }

    const std::vector<S>& data() const { return a_; }

private:
    int r_ = 0, c_ = 0;
    std::vector<S> a_;
};

template <class F>
Matrix<typename F::scalar> identity_matrix(const F& f, int n) {
    Matrix<typename F::scalar> m(n, n, f.zero());
    for (int i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
}

template <class F>
Matrix<typename F::scalar> matmul(const F& f, const Matrix<typename F::scalar>& a, const Matrix<typename F::scalar>& b) {
    if (a.cols() != b.rows()) throw dimension_mismatch("matmul: inner dimensions differ");
    Matrix<typename F::scalar> c(a.rows(), b.cols(), f.zero());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

template <class F>
std::vector<typename F::scalar> matvec(const F& f, const Matrix<typename F::scalar>& a, const std::vector<typename F::scalar>& x) {
    if (a.cols() != int(x.size())) throw dimension_mismatch("matvec: sizes differ");
    std::vector<typename F::scalar> y(a.rows(), f.zero());
    for (int j = 0; j < a.cols(); ++j) {
        if (x[j].is_zero()) continue;
        for (int i = 0; i < a.rows(); ++i)
            if (!a(i, j).is_zero()) y[i] += a(i, j) * x[j];
    }
    return y;
}

// In-place reduced row echelon form; returns pivot columns in order.
template <class F>
std::vector<int> rref(const F& f, Matrix<typename F::scalar>& m, int ncols = -1) {
    if (ncols < 0) ncols = m.cols();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < ncols && row < m.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        auto inv = m(row, col).inverse();
        for (int j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            auto fac = m(i, col);
            for (int j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(i, j) -= fac * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    (void)f;
    return pivots;
}

template <class F>
int rank(const F& f, Matrix<typename F::scalar> m) {
    return int(rref(f, m).size());
}

// Basis of {x : m x = 0}, one vector per free column, free entry set to 1.
template <class F>
std::vector<std::vector<typename F::scalar>> kernel(const F& f, Matrix<typename F::scalar> m) {
    auto piv = rref(f, m);
    std::vector<bool> is_piv(m.cols(), false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::vector<typename F::scalar>> out;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_piv[free]) continue;
        std::vector<typename F::scalar> x(m.cols(), f.zero());
        x[free] = f.one();
        for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -m(int(r), free);
        out.push_back(std::move(x));
    }
    return out;
}

// One solution of m x = b (free variables zero), or nothing.
template <class F>
std::optional<std::vector<typename F::scalar>> solve(const F& f, const Matrix<typename F::scalar>& m,
                                                     const std::vector<typename F::scalar>& b) {
    if (int(b.size()) != m.rows()) throw dimension_mismatch("solve: right-hand side has wrong size");
    Matrix<typename F::scalar> aug(m.rows(), m.cols() + 1, f.zero());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto piv = rref(f, aug, m.cols());
    for (int i = int(piv.size()); i < m.rows(); ++i)
        if (!aug(i, m.cols()).is_zero()) return std::nullopt;
    std::vector<typename F::scalar> x(m.cols(), f.zero());
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(int(r), m.cols());
    return x;
}

template <class F>
std::optional<Matrix<typename F::scalar>> inverse(const F& f, const Matrix<typename F::scalar>& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    int n = m.rows();
    Matrix<typename F::scalar> aug(n, 2 * n, f.zero());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = f.one();
    }
    auto piv = rref(f, aug, n);
    if (int(piv.size()) < n) return std::nullopt;
    Matrix<typename F::scalar> inv(n, n, f.zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

} // namespace hopf
