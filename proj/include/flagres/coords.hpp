#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "iwasawa.hpp"
#include "matrix.hpp"
#include "resolution.hpp"
#include "subgroups.hpp"
#include "tolerances.hpp"
#include "weyl.hpp"

namespace flagres {

/// Coordinates (zeta_1, ..., zeta_l) or (z_1, ..., z_l) attached to a reduced word.
struct ChartPoint {
    Word word;
    std::vector<Complex> coords;
};

namespace detail {

inline void require_reduced(const Word& w) {
    if (!is_reduced(w)) throw NonReducedWordError("word is not reduced");
}

inline void require_chart(const ChartPoint& pt) {
    require_reduced(pt.word);
    if (pt.coords.size() != pt.word.length()) throw DimensionError("chart point: coordinate count differs from word length");
    for (const auto& z : pt.coords)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("chart point: non-finite coordinate");
}

inline bool is_sl3_longest(const Word& w) { return w.n == 3 && w.letters == std::vector<int>{1, 2, 1}; }

}  // namespace detail

/// a(z) = (1 + |z|^2)^{-1/2}, in (0, 1].
inline double a_of(Complex z) { return 1.0 / std::sqrt(1.0 + std::norm(z)); }

/// Closed form of k(n_z s_i-dot) = Psi_i([[i z a, i a], [i a, -i conj(z) a]]).
inline Matrix lu_k_closed(int i, Complex z, int n) {
    const Complex I{0.0, 1.0};
    const double a = a_of(z);
    return psi_embed(i, Matrix{{I * z * a, I * a}, {I * a, -I * std::conj(z) * a}}, n);
}

/// Closed form of d(n_z s_i-dot) = n_{conj z} a(z)^{-H_i}.
inline Matrix lu_d_closed(int i, Complex z, int n) {
    return unipotent_param(i, std::conj(z), n) * torus_param(i, 1.0 / a_of(z), n);
}

/// Holomorphic chart on the Demazure space: slots n_{zeta_j} s_j-dot.
inline GroupTuple chart_h(const ChartPoint& pt) {
    detail::require_chart(pt);
    GroupTuple p{pt.word, {}, Flavor::parabolic};
    for (std::size_t j = 0; j < pt.coords.size(); ++j) {
        const int l = pt.word.letters[j];
        p.slots.push_back(unipotent_param(l, pt.coords[j], pt.word.n) * simple_refl_rep(l, pt.word.n));
    }
    return p;
}

/// Lu's chart on the Bott-Samelson space: slots k(n_{z_j} s_j-dot).
inline GroupTuple chart_j(const ChartPoint& pt) {
    detail::require_chart(pt);
    GroupTuple k{pt.word, {}, Flavor::compact};
    for (std::size_t j = 0; j < pt.coords.size(); ++j)
        k.slots.push_back(lu_k_closed(pt.word.letters[j], pt.coords[j], pt.word.n));
    return k;
}

/// M = (n_{zeta_1} s_1-dot ... n_{zeta_l} s_l-dot) w-dot^{-1}; throws MembershipError unless M lies in N.
inline Matrix big_product_M(const ChartPoint& pt, const Tolerances& tol = {}) {
    const Matrix m = rho(chart_h(pt)) * word_rep(pt.word).adjoint();
    const double scale = std::max(1.0, m.max_abs());
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c <= r; ++c) {
            const Complex expect = r == c ? Complex{1.0, 0.0} : Complex{};
            if (std::abs(m(r, c) - expect) > tol.value * scale)
                throw MembershipError("big_product_M: product is not unit upper triangular");
        }
    return m;
}

/**
 * Holomorphic coordinates to Lu's coordinates.
 *
 * Runs q = beta(chart_h(zeta)); each k(q_k) equals k(n_{z_k} s_k-dot), whose
 * (i,i) / (i,i+1) entry ratio is z_k with a denominator i a(z_k) that never vanishes.
 */
inline ChartPoint zeta_to_z(const ChartPoint& pt, const Tolerances& tol = {}) {
    const GroupTuple q = beta(chart_h(pt), tol);
    ChartPoint out{pt.word, {}};
    out.coords.reserve(q.slots.size());
    for (std::size_t k = 0; k < q.slots.size(); ++k) {
        const Matrix kq = k_map(q.slots[k], tol);
        const auto i = static_cast<std::size_t>(pt.word.letters[k] - 1);
        out.coords.push_back(kq(i, i) / kq(i, i + 1));
    }
    return out;
}

/// Result of the big-cell factorization m = n_zeta s_i-dot b inside P_{s_i}.
struct BruhatFactors {
    Complex zeta;
    Matrix b;
};

/// Throws NonGenericPointError when entry (i+1, i) of m is negligible.
inline BruhatFactors bruhat_factor_Ps(const Matrix& m, int i, const Tolerances& tol = {}) {
    const int n = static_cast<int>(m.dim());
    check_root_index(i, n);
    if (!is_member(m, Subgroup::parabolic(i), tol)) throw MembershipError("bruhat_factor_Ps: input not in P_s");
    const auto r = static_cast<std::size_t>(i - 1);
    const Complex pivot = m(r + 1, r);
    if (std::abs(pivot) <= tol.coset * m.frobenius_norm())
        throw NonGenericPointError("bruhat_factor_Ps: point outside the big cell of P_s(" + std::to_string(i) + ")");
    const Complex zeta = m(r, r) / pivot;
    Matrix b = mat_inv(unipotent_param(i, zeta, n) * simple_refl_rep(i, n), tol.det) * m;
    if (borel_defect(b) > tol.coset) throw NonGenericPointError("bruhat_factor_Ps: residual factor not upper triangular");
    for (std::size_t row = 1; row < b.dim(); ++row)
        for (std::size_t c = 0; c < row; ++c) b(row, c) = Complex{};
    return {zeta, std::move(b)};
}

/// Lu's coordinates to holomorphic coordinates: sweeps include(chart_j(z)) into h-form slot by slot.
inline ChartPoint z_to_zeta(const ChartPoint& pt, const Tolerances& tol = {}) {
    const GroupTuple k = chart_j(pt);
    ChartPoint out{pt.word, {}};
    Matrix b = Matrix::identity(pt.word.dim());
    for (std::size_t j = 0; j < k.slots.size(); ++j) {
        auto [zeta, next] = bruhat_factor_Ps(b * k.slots[j], pt.word.letters[j], tol);
        out.coords.push_back(zeta);
        b = std::move(next);
    }
    return out;
}

/// z_1 = zeta_1, z_2 = (1 + |zeta_1|^2)^{<<g1,g2>>/<<g1,g1>>} zeta_2.
inline ChartPoint closed_form_len2(const ChartPoint& pt) {
    detail::require_chart(pt);
    if (pt.word.length() != 2) throw DomainError("closed_form_len2: word must have length 2");
    const double ratio = pairing_ratio(pt.word.letters[0], pt.word.letters[1]).value();
    const Complex z1 = pt.coords[0];
    return {pt.word, {z1, std::pow(1.0 + std::norm(z1), ratio) * pt.coords[1]}};
}

/// Closed-form change of variables for SL(3) and the word (1, 2, 1).
inline ChartPoint closed_form_sl3(const ChartPoint& pt) {
    detail::require_chart(pt);
    if (!detail::is_sl3_longest(pt.word)) throw DomainError("closed_form_sl3: requires n = 3 and word (1,2,1)");
    const Complex I{0.0, 1.0};
    const Complex z1 = pt.coords[0], z2 = pt.coords[1], z3 = pt.coords[2];
    const double s1 = 1.0 + std::norm(z1);
    return {pt.word,
            {z1, z2 / std::sqrt(s1), (I * std::conj(z1) * z2 + z3 * s1) / std::sqrt(s1 + std::norm(z2))}};
}

/**
 * F(n_{z_1}, ..., n_{z_l}) in N_w, realized as M(z_to_zeta(z)).
 * Checks k(F w-dot) = k(n_{z_1} s_1-dot) ... k(n_{z_l} s_l-dot) entrywise and throws
 * FactorizationError if it fails.
 */
inline Matrix lu_F_map(const ChartPoint& pt, const Tolerances& tol = {}) {
    const Matrix f = big_product_M(z_to_zeta(pt, tol), tol);
    const Matrix lhs = k_map(f * word_rep(pt.word), tol);
    const Matrix rhs = rho_K(chart_j(pt));
    if (scaled_diff(lhs, rhs) > tol.value) throw FactorizationError("lu_F_map: k(F w) differs from the product of compact factors");
    return f;
}

/// Lu's u-variables for SL(3), word (1,2,1): (zeta_1, zeta_3, i zeta_2 + zeta_1 zeta_3).
inline ChartPoint u_from_zeta(const ChartPoint& pt) {
    detail::require_chart(pt);
    if (!detail::is_sl3_longest(pt.word)) throw DomainError("u_from_zeta: requires n = 3 and word (1,2,1)");
    const Complex I{0.0, 1.0};
    const auto& z = pt.coords;
    return {pt.word, {z[0], z[2], I * z[1] + z[0] * z[2]}};
}

}  // namespace flagres
