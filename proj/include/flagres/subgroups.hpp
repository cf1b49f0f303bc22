#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "errors.hpp"
#include "matrix.hpp"
#include "tolerances.hpp"

namespace flagres {

/// Subgroups of SL(n, C) used by the resolutions. P_s and K_s carry a 1-based root index.
struct Subgroup {
    enum class Kind { K, T, A, N, B, D, Ps, Ks };
    Kind kind;
    int root = 0;

    static constexpr Subgroup compact() { return {Kind::K}; }
    static constexpr Subgroup torus() { return {Kind::T}; }
    static constexpr Subgroup positive_torus() { return {Kind::A}; }
    static constexpr Subgroup unipotent() { return {Kind::N}; }
    static constexpr Subgroup borel() { return {Kind::B}; }
    static constexpr Subgroup split_borel() { return {Kind::D}; }
    static constexpr Subgroup parabolic(int i) { return {Kind::Ps, i}; }
    static constexpr Subgroup compact_parabolic(int i) { return {Kind::Ks, i}; }
};

namespace detail {

// Largest entry that must vanish for the lower-triangular pattern of P_s(i)
// (i 1-based; i = 0 means the Borel pattern).
inline double below_diagonal_excess(const Matrix& g, int root) {
    double m = 0.0;
    for (std::size_t r = 1; r < g.dim(); ++r)
        for (std::size_t c = 0; c < r; ++c) {
            if (root > 0 && c + 1 == static_cast<std::size_t>(root) && r == c + 1) continue;
            m = std::max(m, std::abs(g(r, c)));
        }
    return m;
}

inline double off_diagonal_max(const Matrix& g) {
    double m = 0.0;
    for (std::size_t r = 0; r < g.dim(); ++r)
        for (std::size_t c = 0; c < g.dim(); ++c)
            if (r != c) m = std::max(m, std::abs(g(r, c)));
    return m;
}

}  // namespace detail

/**
 * Tolerance-based structural membership test.
 *
 * Required zeros are compared against tol.coset * max(1, ||g||_F); group elements
 * must also satisfy |det g - 1| <= tol.det. Returns false on non-finite input.
 */
inline bool is_member(const Matrix& g, Subgroup s, const Tolerances& tol = {}) {
    using K = Subgroup::Kind;
    if (!g.is_finite()) return false;
    const std::size_t n = g.dim();
    if ((s.kind == K::Ps || s.kind == K::Ks) && (s.root < 1 || static_cast<std::size_t>(s.root) >= n))
        return false;
    if (std::abs(determinant(g) - Complex{1.0, 0.0}) > tol.det) return false;

    const double zero_tol = tol.coset * std::max(1.0, g.frobenius_norm());
    const auto unitary = [&] { return unitarity_defect(g) <= tol.coset; };
    const auto diag_real_positive = [&] {
        for (std::size_t i = 0; i < n; ++i)
            if (std::abs(g(i, i).imag()) > zero_tol || g(i, i).real() <= 0.0) return false;
        return true;
    };

    switch (s.kind) {
        case K::K:
            return unitary();
        case K::T:
            return detail::off_diagonal_max(g) <= zero_tol && unitary();
        case K::A:
            return detail::off_diagonal_max(g) <= zero_tol && diag_real_positive();
        case K::N: {
            if (detail::below_diagonal_excess(g, 0) > zero_tol) return false;
            for (std::size_t i = 0; i < n; ++i)
                if (std::abs(g(i, i) - Complex{1.0, 0.0}) > zero_tol) return false;
            return true;
        }
        case K::B:
            return detail::below_diagonal_excess(g, 0) <= zero_tol;
        case K::D:
            return detail::below_diagonal_excess(g, 0) <= zero_tol && diag_real_positive();
        case K::Ps:
            return detail::below_diagonal_excess(g, s.root) <= zero_tol;
        case K::Ks:
            return detail::below_diagonal_excess(g, s.root) <= zero_tol && unitary();
    }
    return false;
}

/// Relative size of the below-diagonal part of h: max_{r>c} |h_rc| / ||h||_F.
inline double borel_defect(const Matrix& h) {
    return detail::below_diagonal_excess(h, 0) / h.frobenius_norm();
}

/// Largest off-diagonal magnitude of h.
inline double torus_defect(const Matrix& h) { return detail::off_diagonal_max(h); }

/// Decides [g1] == [g2] in G/B, i.e. g1^{-1} g2 in B.
inline bool coset_equal_GB(const Matrix& g1, const Matrix& g2, const Tolerances& tol = {}) {
    return borel_defect(mat_inv(g1, tol.det) * g2) <= tol.coset;
}

/// Decides [k1] == [k2] in K/T, i.e. k1^{-1} k2 diagonal. Throws MembershipError on non-unitary input.
inline bool coset_equal_KT(const Matrix& k1, const Matrix& k2, const Tolerances& tol = {}) {
    if (unitarity_defect(k1) > tol.coset || unitarity_defect(k2) > tol.coset)
        throw MembershipError("coset_equal_KT: non-unitary input");
    return torus_defect(k1.adjoint() * k2) <= tol.coset;
}

}  // namespace flagres
