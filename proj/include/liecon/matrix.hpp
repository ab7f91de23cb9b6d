#pragma once

#include <cmath>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "liecon/laurent.hpp"
#include "liecon/rational.hpp"

namespace liecon {

template <class S>
inline bool scalar_is_zero(const S& x) {
    if constexpr (std::is_floating_point_v<S>)
        return x == S(0);
    else
        return x.is_zero();
}

/// Square n x n matrix over an exact scalar or double. 1-based accessors
/// to match the index conventions used throughout.
template <class S>
class Matrix {
public:
    Matrix() : n_(0) {}
    explicit Matrix(int n) : n_(n), e_(static_cast<size_t>(n) * n, S(0)) {
        if (n <= 0) throw std::invalid_argument("Matrix: dimension must be positive");
    }

    static Matrix identity(int n) {
        Matrix m(n);
        for (int i = 1; i <= n; ++i) m(i, i) = S(1);
        return m;
    }

    int dim() const { return n_; }
    S& operator()(int i, int j) { return e_[idx(i, j)]; }
    const S& operator()(int i, int j) const { return e_[idx(i, j)]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

    Matrix transpose() const {
        Matrix r(n_);
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_lower_triangular() const {
        for (int i = 1; i <= n_; ++i)
            for (int j = i + 1; j <= n_; ++j)
                if (!scalar_is_zero((*this)(i, j))) return false;
        return true;
    }

    double frobenius_norm() const {
        double s = 0;
        for (const auto& x : e_) {
            double v;
            if constexpr (std::is_floating_point_v<S>)
                v = x;
            else if constexpr (std::is_same_v<S, Rational>)
                v = x.to_double();
            else
                v = 0;  // not meaningful for symbolic entries
            s += v * v;
        }
        return std::sqrt(s);
    }

private:
    size_t idx(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("Matrix: index");
        return static_cast<size_t>(i - 1) * n_ + (j - 1);
    }
    int n_;
    std::vector<S> e_;
};

template <class S>
Matrix<S> operator*(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("Matrix: dimension mismatch");
    Matrix<S> r(a.dim());
    for (int i = 1; i <= a.dim(); ++i)
        for (int k = 1; k <= a.dim(); ++k) {
            const S& aik = a(i, k);
            if (scalar_is_zero(aik)) continue;
            for (int j = 1; j <= a.dim(); ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

template <class S>
Matrix<S> operator+(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("Matrix: dimension mismatch");
    Matrix<S> r(a.dim());
    for (int i = 1; i <= a.dim(); ++i)
        for (int j = 1; j <= a.dim(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

template <class S>
Matrix<S> operator-(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("Matrix: dimension mismatch");
    Matrix<S> r(a.dim());
    for (int i = 1; i <= a.dim(); ++i)
        for (int j = 1; j <= a.dim(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

/// Default float singularity threshold: 1e-12 * n * max|entry|.
inline double default_det_threshold(const Matrix<double>& a) {
    double m = 0;
    for (int i = 1; i <= a.dim(); ++i)
        for (int j = 1; j <= a.dim(); ++j) m = std::max(m, std::fabs(a(i, j)));
    return 1e-12 * a.dim() * m;
}

namespace detail {

// Gaussian elimination over an exact field (or doubles with partial
// pivoting). Reduces `a` in place while applying the same row operations
// to `rhs`; returns the determinant of the original `a`.
template <class S>
S eliminate(Matrix<S>& a, Matrix<S>* rhs) {
    const int n = a.dim();
    S det(1);
    for (int col = 1; col <= n; ++col) {
        int pivot = 0;
        if constexpr (std::is_floating_point_v<S>) {
            double best = 0;
            for (int r = col; r <= n; ++r)
                if (std::fabs(a(r, col)) > best) {
                    best = std::fabs(a(r, col));
                    pivot = r;
                }
        } else {
            for (int r = col; r <= n; ++r)
                if (!scalar_is_zero(a(r, col))) {
                    pivot = r;
                    break;
                }
        }
        if (pivot == 0 || scalar_is_zero(a(pivot, col))) return S(0);
        if (pivot != col) {
            for (int j = 1; j <= n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                if (rhs) std::swap((*rhs)(pivot, j), (*rhs)(col, j));
            }
            det = -det;
        }
        det = det * a(col, col);
        S inv_pivot = S(1) / a(col, col);
        for (int j = 1; j <= n; ++j) {
            a(col, j) *= inv_pivot;
            if (rhs) (*rhs)(col, j) *= inv_pivot;
        }
        for (int r = 1; r <= n; ++r) {
            if (r == col || scalar_is_zero(a(r, col))) continue;
            S f = a(r, col);
            for (int j = 1; j <= n; ++j) {
                a(r, j) -= f * a(col, j);
                if (rhs) (*rhs)(r, j) -= f * (*rhs)(col, j);
            }
        }
    }
    return det;
}

}  // namespace detail

template <class S>
S det(const Matrix<S>& m) {
    Matrix<S> a = m;
    return detail::eliminate<S>(a, nullptr);
}

template <class S>
Matrix<S> inverse(const Matrix<S>& m) {
    Matrix<S> a = m;
    Matrix<S> inv = Matrix<S>::identity(m.dim());
    S d = detail::eliminate<S>(a, &inv);
    if constexpr (std::is_floating_point_v<S>) {
        if (std::fabs(d) <= default_det_threshold(m))
            throw std::domain_error("Matrix: singular (|det| below threshold)");
    } else {
        if (scalar_is_zero(d)) throw std::domain_error("Matrix: singular");
    }
    return inv;
}

inline Matrix<double> to_double(const Matrix<Rational>& m) {
    Matrix<double> r(m.dim());
    for (int i = 1; i <= m.dim(); ++i)
        for (int j = 1; j <= m.dim(); ++j) r(i, j) = m(i, j).to_double();
    return r;
}

inline Matrix<ParamScalar> lift(const Matrix<Rational>& m) {
    Matrix<ParamScalar> r(m.dim());
    for (int i = 1; i <= m.dim(); ++i)
        for (int j = 1; j <= m.dim(); ++j) r(i, j) = ParamScalar(m(i, j));
    return r;
}

}  // namespace liecon
