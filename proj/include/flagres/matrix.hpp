#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace flagres {

using Complex = std::complex<double>;

/**
 * @brief Dense n x n complex matrix, row-major, 0-indexed.
 *
 * Carries every group element the library touches (G, K, B, D, N, T, P_s, K_s).
 * Subgroup tags are not stored; membership is decided by the predicates in
 * subgroups.hpp.
 */
class Matrix {
public:
    Matrix() = default;

    explicit Matrix(std::size_t n) : dim_(n), data_(n * n, Complex{0.0, 0.0}) {
        if (n == 0) throw DimensionError("matrix dimension must be positive");
    }

    Matrix(std::initializer_list<std::initializer_list<Complex>> rows) : Matrix(rows.size()) {
        std::size_t r = 0;
        for (const auto& row : rows) {
            if (row.size() != dim_) throw DimensionError("matrix literal is not square");
            std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * dim_));
            ++r;
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static Matrix diagonal(const std::vector<Complex>& d) {
        Matrix m(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

    [[nodiscard]] const std::vector<Complex>& entries() const noexcept { return data_; }

    [[nodiscard]] bool is_finite() const {
        return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
            return std::isfinite(z.real()) && std::isfinite(z.imag());
        });
    }

    /// Conjugate transpose.
    [[nodiscard]] Matrix adjoint() const {
        Matrix m(dim_);
        for (std::size_t r = 0; r < dim_; ++r)
            for (std::size_t c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
        return m;
    }

    [[nodiscard]] double frobenius_norm() const {
        double s = 0.0;
        for (const auto& z : data_) s += std::norm(z);
        return std::sqrt(s);
    }

    [[nodiscard]] double max_abs() const {
        double m = 0.0;
        for (const auto& z : data_) m = std::max(m, std::abs(z));
        return m;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }

    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }

    Matrix& operator*=(Complex s) {
        for (auto& z : data_) z *= s;
        return *this;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    void check_same(const Matrix& o) const {
        if (o.dim_ != dim_) throw DimensionError("dimension mismatch");
    }

    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

inline Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
inline Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
inline Matrix operator*(Matrix a, Complex s) { return a *= s; }
inline Matrix operator*(Complex s, Matrix a) { return a *= s; }

/// Exact-shape product; throws DimensionError on mismatch.
inline Matrix mat_mul(const Matrix& x, const Matrix& y) {
    if (x.dim() != y.dim()) throw DimensionError("mat_mul: dimension mismatch");
    const std::size_t n = x.dim();
    Matrix out(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex xr = x(r, k);
            if (xr == Complex{}) continue;
            for (std::size_t c = 0; c < n; ++c) out(r, c) += xr * y(k, c);
        }
    return out;
}

inline Matrix operator*(const Matrix& x, const Matrix& y) { return mat_mul(x, y); }

/// Determinant by LU with partial pivoting.
inline Complex determinant(const Matrix& x) {
    const std::size_t n = x.dim();
    Matrix lu = x;
    Complex det{1.0, 0.0};
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(lu(r, col)) > std::abs(lu(piv, col))) piv = r;
        if (lu(piv, col) == Complex{}) return Complex{};
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(lu(piv, c), lu(col, c));
            det = -det;
        }
        det *= lu(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex f = lu(r, col) / lu(col, col);
            for (std::size_t c = col; c < n; ++c) lu(r, c) -= f * lu(col, c);
        }
    }
    return det;
}

/// Gauss-Jordan inverse with partial pivoting. Rejects |det x| < min_abs_det.
inline Matrix mat_inv(const Matrix& x, double min_abs_det = 1e-9) {
    const std::size_t n = x.dim();
    if (!x.is_finite()) throw SingularMatrixError("mat_inv: non-finite entries");
    if (std::abs(determinant(x)) < min_abs_det) throw SingularMatrixError("mat_inv: singular matrix");
    Matrix a = x;
    Matrix inv = Matrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        if (a(piv, col) == Complex{}) throw SingularMatrixError("mat_inv: zero pivot");
        if (piv != col)
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(piv, c), a(col, c));
                std::swap(inv(piv, c), inv(col, c));
            }
        const Complex p = a(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            a(col, c) /= p;
            inv(col, c) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const Complex f = a(r, col);
            if (f == Complex{}) continue;
            for (std::size_t c = 0; c < n; ++c) {
                a(r, c) -= f * a(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

/// max |x_rc - y_rc|
inline double max_abs_diff(const Matrix& x, const Matrix& y) {
    if (x.dim() != y.dim()) throw DimensionError("max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < x.entries().size(); ++i)
        m = std::max(m, std::abs(x.entries()[i] - y.entries()[i]));
    return m;
}

/// Entrywise deviation scaled by the reference magnitude when it exceeds one.
inline double scaled_diff(const Matrix& x, const Matrix& reference) {
    return max_abs_diff(x, reference) / std::max(1.0, reference.max_abs());
}

/// ||x^* x - I||_F
inline double unitarity_defect(const Matrix& x) {
    return (x.adjoint() * x - Matrix::identity(x.dim())).frobenius_norm();
}

/// Truncated exponential of a nilpotent matrix (exact once x^n = 0).
inline Matrix nilpotent_exp(const Matrix& x) {
    const std::size_t n = x.dim();
    Matrix out = Matrix::identity(n);
    Matrix term = Matrix::identity(n);
    for (std::size_t k = 1; k < n; ++k) {
        term = term * x;
        term *= Complex{1.0 / static_cast<double>(k), 0.0};
        out += term;
    }
    return out;
}

/// Matrix with a single 1 at 0-indexed (r, c).
inline Matrix elementary(std::size_t n, std::size_t r, std::size_t c) {
    Matrix m(n);
    m(r, c) = 1.0;
    return m;
}

}  // namespace flagres
