#pragma once

#include <cmath>
#include <complex>
#include <cstddef>

#include "errors.hpp"
#include "matrix.hpp"
#include "tolerances.hpp"

namespace flagres {

/// g = k * a * n with k in SU(n), a positive diagonal with det 1, n unit upper triangular.
struct IwasawaFactors {
    Matrix k;
    Matrix a;
    Matrix n;

    /// The D = AN component, d(g) = a * n.
    [[nodiscard]] Matrix d() const { return a * n; }
};

namespace detail {

// Frobenius condition number of an upper triangular matrix with nonzero diagonal.
inline double triangular_condition(const Matrix& r) {
    const std::size_t n = r.dim();
    Matrix inv(n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = n; i-- > 0;) {
            Complex s = (i == c) ? Complex{1.0, 0.0} : Complex{};
            for (std::size_t j = i + 1; j < n; ++j) s -= r(i, j) * inv(j, c);
            inv(i, c) = s / r(i, i);
        }
    }
    return r.frobenius_norm() * inv.frobenius_norm();
}

// Householder QR, g = q * r. Columns whose subdiagonal part is already zero are skipped
// so that block-structured inputs keep exact zeros.
inline void householder_qr(const Matrix& g, Matrix& q, Matrix& r) {
    const std::size_t n = g.dim();
    r = g;
    q = Matrix::identity(n);
    std::vector<Complex> v(n);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        double tail = 0.0;
        for (std::size_t i = j + 1; i < n; ++i) tail += std::norm(r(i, j));
        if (tail == 0.0) continue;
        const double xnorm = std::sqrt(tail + std::norm(r(j, j)));
        const Complex phase = r(j, j) == Complex{} ? Complex{1.0, 0.0} : r(j, j) / std::abs(r(j, j));
        const Complex alpha = -phase * xnorm;
        v[j] = r(j, j) - alpha;
        for (std::size_t i = j + 1; i < n; ++i) v[i] = r(i, j);
        double vnorm2 = 0.0;
        for (std::size_t i = j; i < n; ++i) vnorm2 += std::norm(v[i]);
        const double scale = 2.0 / vnorm2;
        // r <- (I - scale v v^*) r
        for (std::size_t c = j; c < n; ++c) {
            Complex s{};
            for (std::size_t i = j; i < n; ++i) s += std::conj(v[i]) * r(i, c);
            s *= scale;
            for (std::size_t i = j; i < n; ++i) r(i, c) -= s * v[i];
        }
        for (std::size_t i = j + 1; i < n; ++i) r(i, j) = Complex{};
        // q <- q (I - scale v v^*)
        for (std::size_t row = 0; row < n; ++row) {
            Complex s{};
            for (std::size_t i = j; i < n; ++i) s += q(row, i) * v[i];
            s *= scale;
            for (std::size_t i = j; i < n; ++i) q(row, i) -= s * std::conj(v[i]);
        }
    }
}

}  // namespace detail

/**
 * Iwasawa factorization g = k(g) d(g), d(g) = a n, for g in SL(n, C).
 *
 * Householder QR followed by a diagonal phase correction that makes the
 * triangular factor's diagonal real and positive. The factorization is unique,
 * so the result does not depend on the QR variant used.
 *
 * Throws FactorizationError for non-finite input, |det g - 1| > tol.det,
 * condition number above kMaxCondition, or any violated output invariant.
 */
inline IwasawaFactors iwasawa_factor(const Matrix& g, const Tolerances& tol = {}) {
    if (!g.is_finite()) throw FactorizationError("iwasawa_factor: non-finite input");
    if (std::abs(determinant(g) - Complex{1.0, 0.0}) > tol.det)
        throw FactorizationError("iwasawa_factor: input is not in SL(n)");

    const std::size_t n = g.dim();
    Matrix q, r;
    detail::householder_qr(g, q, r);

    for (std::size_t i = 0; i < n; ++i)
        if (r(i, i) == Complex{}) throw FactorizationError("iwasawa_factor: singular input");

    // Phase fix: q <- q D, r <- D^* r with D = diag(r_ii / |r_ii|).
    for (std::size_t i = 0; i < n; ++i) {
        const Complex ph = r(i, i) / std::abs(r(i, i));
        for (std::size_t row = 0; row < n; ++row) q(row, i) *= ph;
        for (std::size_t c = i; c < n; ++c) r(i, c) *= std::conj(ph);
        r(i, i) = Complex{r(i, i).real(), 0.0};
    }

    if (detail::triangular_condition(r) > kMaxCondition)
        throw FactorizationError("iwasawa_factor: condition number exceeds guard");

    IwasawaFactors f{q, Matrix(n), Matrix(n)};
    double det_a = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ai = r(i, i).real();
        f.a(i, i) = ai;
        det_a *= ai;
        f.n(i, i) = 1.0;
        for (std::size_t c = i + 1; c < n; ++c) f.n(i, c) = r(i, c) / ai;
    }

    if (unitarity_defect(f.k) > tol.unitary)
        throw FactorizationError("iwasawa_factor: unitary factor failed orthogonality check");
    if (std::abs(det_a - 1.0) > tol.det)
        throw FactorizationError("iwasawa_factor: torus factor does not have det 1");
    if ((f.k * f.a * f.n - g).frobenius_norm() > tol.recon * g.frobenius_norm())
        throw FactorizationError("iwasawa_factor: reconstruction check failed");
    return f;
}

/// The compact factor k(g). Restricted to SU(n) this is the identity.
inline Matrix k_map(const Matrix& g, const Tolerances& tol = {}) { return iwasawa_factor(g, tol).k; }

/// The D = AN factor d(g) = a(g) n(g).
inline Matrix d_map(const Matrix& g, const Tolerances& tol = {}) { return iwasawa_factor(g, tol).d(); }

}  // namespace flagres
