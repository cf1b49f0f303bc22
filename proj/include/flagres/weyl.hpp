#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace flagres {

/// Sequence of simple reflections (s_1, ..., s_l) for SL(n). Letters are 1-based root
/// indices in [1, n-1]; position j in the sequence is not tied to the root index.
struct Word {
    int n = 2;
    std::vector<int> letters;

    Word() = default;
    Word(int rank_n, std::vector<int> ls) : n(rank_n), letters(std::move(ls)) {
        if (n < 2) throw DomainError("Word: n must be at least 2");
        for (int l : letters)
            if (l < 1 || l > n - 1)
                throw DomainError("Word: letter " + std::to_string(l) + " out of range for n = " + std::to_string(n));
    }

    [[nodiscard]] std::size_t length() const noexcept { return letters.size(); }
    [[nodiscard]] std::size_t dim() const noexcept { return static_cast<std::size_t>(n); }

    friend bool operator==(const Word&, const Word&) = default;
};

/// Permutation of {1, ..., n}; images[j-1] = w(j).
struct Permutation {
    std::vector<int> images;

    Permutation() = default;
    explicit Permutation(std::vector<int> im) : images(std::move(im)) {
        std::vector<bool> seen(images.size(), false);
        for (int v : images) {
            if (v < 1 || static_cast<std::size_t>(v) > images.size() || seen[static_cast<std::size_t>(v - 1)])
                throw DomainError("Permutation: not a bijection of 1..n");
            seen[static_cast<std::size_t>(v - 1)] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> im(static_cast<std::size_t>(n));
        std::iota(im.begin(), im.end(), 1);
        return Permutation(std::move(im));
    }

    [[nodiscard]] int size() const noexcept { return static_cast<int>(images.size()); }
    [[nodiscard]] int operator()(int j) const { return images[static_cast<std::size_t>(j - 1)]; }

    /// (this o other)(j) = this(other(j))
    [[nodiscard]] Permutation compose(const Permutation& other) const {
        std::vector<int> im(images.size());
        for (std::size_t j = 0; j < im.size(); ++j) im[j] = (*this)(other.images[j]);
        return Permutation(std::move(im));
    }

    [[nodiscard]] Permutation inverse() const {
        std::vector<int> im(images.size());
        for (std::size_t j = 0; j < im.size(); ++j) im[static_cast<std::size_t>(images[j] - 1)] = static_cast<int>(j + 1);
        return Permutation(std::move(im));
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// Exact rational in lowest terms with positive denominator.
struct Ratio {
    int num = 0;
    int den = 1;

    static Ratio make(int p, int q) {
        if (q == 0) throw DomainError("Ratio: zero denominator");
        if (q < 0) { p = -p; q = -q; }
        const int g = std::gcd(p, q);
        return g == 0 ? Ratio{0, 1} : Ratio{p / g, q / g};
    }
    [[nodiscard]] double value() const { return static_cast<double>(num) / den; }
    friend bool operator==(const Ratio&, const Ratio&) = default;
};

/// Root e_r - e_c of sl(n) (1-based, r != c); positive when r < c.
struct Root {
    int r = 1;
    int c = 2;

    static Root simple(int i) { return {i, i + 1}; }
    [[nodiscard]] bool positive() const noexcept { return r < c; }
    [[nodiscard]] Root negated() const noexcept { return {c, r}; }
    friend bool operator==(const Root&, const Root&) = default;
};

inline void check_root_index(int i, int n) {
    if (i < 1 || i > n - 1)
        throw DomainError("root index " + std::to_string(i) + " out of range for n = " + std::to_string(n));
}

/// Product s_{l_1} s_{l_2} ... of adjacent transpositions, composed in letter order.
inline Permutation word_to_permutation(const Word& w) {
    Permutation p = Permutation::identity(w.n);
    // Right-multiplying by s_i swaps the values at positions i and i+1.
    for (int l : w.letters) std::swap(p.images[static_cast<std::size_t>(l - 1)], p.images[static_cast<std::size_t>(l)]);
    return p;
}

/// Coxeter length, realized as the inversion count.
inline int length(const Permutation& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.images.size(); ++i)
        for (std::size_t j = i + 1; j < p.images.size(); ++j)
            if (p.images[i] > p.images[j]) ++inv;
    return inv;
}

inline bool is_reduced(const Word& w) {
    return static_cast<int>(w.length()) == length(word_to_permutation(w));
}

/// Staircase reduced word (1)(2,1)(3,2,1)... of the longest element of S_n.
inline Word longest_word(int n) {
    std::vector<int> ls;
    for (int top = 1; top < n; ++top)
        for (int i = top; i >= 1; --i) ls.push_back(i);
    return Word(n, std::move(ls));
}

/// <<alpha, beta>> / <<alpha, alpha>> for type A roots (Euclidean form on e_r - e_c).
inline Ratio root_pairing_ratio(const Root& alpha, const Root& beta) {
    const auto d = [](int x, int y) { return x == y ? 1 : 0; };
    const int ip = d(alpha.r, beta.r) - d(alpha.r, beta.c) - d(alpha.c, beta.r) + d(alpha.c, beta.c);
    return Ratio::make(ip, 2);
}

/// <<gamma_i, gamma_j>> / <<gamma_i, gamma_i>> for simple roots: 1, -1/2 or 0.
inline Ratio pairing_ratio(int i, int j) {
    if (i < 1 || j < 1) throw DomainError("pairing_ratio: root index out of range");
    return root_pairing_ratio(Root::simple(i), Root::simple(j));
}

/// Action of the simple reflection s_i on a root: swaps the indices i and i+1.
inline Root reflect(int i, const Root& alpha) {
    const auto s = [i](int x) { return x == i ? i + 1 : (x == i + 1 ? i : x); };
    return {s(alpha.r), s(alpha.c)};
}

/// The Weyl representative of SL(2): [[0, i], [i, 0]].
inline Matrix sigma() {
    return Matrix{{Complex{0, 0}, Complex{0, 1}}, {Complex{0, 1}, Complex{0, 0}}};
}

/// Psi_{s_i}: places the 2x2 block m into rows/columns (i, i+1) of the n x n identity.
inline Matrix psi_embed(int i, const Matrix& m, int n) {
    check_root_index(i, n);
    if (m.dim() != 2) throw DimensionError("psi_embed: block must be 2x2");
    if (std::abs(determinant(m) - Complex{1.0, 0.0}) > 1e-9) throw DomainError("psi_embed: block is not in SL(2)");
    Matrix out = Matrix::identity(static_cast<std::size_t>(n));
    const auto k = static_cast<std::size_t>(i - 1);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) out(k + r, k + c) = m(r, c);
    return out;
}

/// s_i-dot = Psi_{s_i}(sigma).
inline Matrix simple_refl_rep(int i, int n) { return psi_embed(i, sigma(), n); }

/// w-dot = s_1-dot s_2-dot ... s_l-dot.
inline Matrix word_rep(const Word& w) {
    Matrix out = Matrix::identity(w.dim());
    for (int l : w.letters) out = out * simple_refl_rep(l, w.n);
    return out;
}

/// n_z = exp(z E_{i,i+1}) = I + z E_{i,i+1}.
inline Matrix unipotent_param(int i, Complex z, int n) {
    check_root_index(i, n);
    Matrix out = Matrix::identity(static_cast<std::size_t>(n));
    out(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i)) = z;
    return out;
}

/// a^{H_i} = Psi_{s_i}(diag(a, 1/a)), a > 0.
inline Matrix torus_param(int i, double a, int n) {
    check_root_index(i, n);
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("torus_param: parameter must be positive");
    Matrix out = Matrix::identity(static_cast<std::size_t>(n));
    out(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1)) = a;
    out(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 1.0 / a;
    return out;
}

/// Root vector E_alpha = E_{r,c} (elementary matrix).
inline Matrix root_vector(const Root& alpha, int n) {
    return elementary(static_cast<std::size_t>(n), static_cast<std::size_t>(alpha.r - 1), static_cast<std::size_t>(alpha.c - 1));
}

/// a^{H_alpha} with H_alpha = E_rr - E_cc.
inline Matrix coroot_torus(const Root& alpha, double a, int n) {
    if (!(a > 0.0)) throw DomainError("coroot_torus: parameter must be positive");
    Matrix out = Matrix::identity(static_cast<std::size_t>(n));
    out(static_cast<std::size_t>(alpha.r - 1), static_cast<std::size_t>(alpha.r - 1)) = a;
    out(static_cast<std::size_t>(alpha.c - 1), static_cast<std::size_t>(alpha.c - 1)) = 1.0 / a;
    return out;
}

/// Permutation matrix P with P e_j = e_{p(j)}.
inline Matrix permutation_matrix(const Permutation& p) {
    Matrix m(static_cast<std::size_t>(p.size()));
    for (int j = 1; j <= p.size(); ++j) m(static_cast<std::size_t>(p(j) - 1), static_cast<std::size_t>(j - 1)) = 1.0;
    return m;
}

/// Support of N_w = N cap w N^- w^{-1}: entry (r, c), r < c, is free iff w^{-1}(r) > w^{-1}(c).
inline std::vector<std::vector<bool>> n_w_support(const Permutation& w) {
    const auto n = static_cast<std::size_t>(w.size());
    const Permutation inv = w.inverse();
    std::vector<std::vector<bool>> mask(n, std::vector<bool>(n, false));
    for (int r = 1; r <= w.size(); ++r)
        for (int c = r + 1; c <= w.size(); ++c) mask[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = inv(r) > inv(c);
    return mask;
}

}  // namespace flagres
