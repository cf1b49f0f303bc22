#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "matrix.hpp"
#include "resolution.hpp"
#include "weyl.hpp"

namespace flagres {

/**
 * Seeded sampler used by the verification suites.
 *
 * Engine: std::mt19937_64 (fully specified by the C++ standard). Doubles are drawn
 * as (x >> 11) * 2^-53, never through std:: distributions, whose algorithms are
 * implementation-defined. Every other draw is built from uniform01() by rejection,
 * so a given seed replays the same stream anywhere.
 */
class Sampler {
public:
    static constexpr const char* kGenerator = "mt19937_64/v1";

    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform point of the closed disk |z| <= radius.
    Complex disk(double radius) {
        for (;;) {
            const double x = uniform(-1.0, 1.0), y = uniform(-1.0, 1.0);
            if (x * x + y * y <= 1.0) return {radius * x, radius * y};
        }
    }

    Complex phase() { return std::polar(1.0, uniform(-std::numbers::pi, std::numbers::pi)); }

    std::vector<Complex> disk_vector(std::size_t count, double radius) {
        std::vector<Complex> v;
        v.reserve(count);
        for (std::size_t i = 0; i < count; ++i) v.push_back(disk(radius));
        return v;
    }

    /// Random element of SL(n): unit-disk entries, rescaled by a complex n-th root of the determinant.
    Matrix sl(std::size_t n, double min_abs_det = 1e-3) {
        for (;;) {
            Matrix g(n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) g(r, c) = disk(1.0);
            const Complex det = determinant(g);
            if (std::abs(det) < min_abs_det) continue;
            g *= std::pow(det, -1.0 / static_cast<double>(n));
            return g;
        }
    }

    /// Random element of T (diagonal unitary, det 1).
    Matrix torus(std::size_t n) {
        std::vector<Complex> d(n);
        Complex prod{1.0, 0.0};
        for (std::size_t i = 0; i + 1 < n; ++i) {
            d[i] = phase();
            prod *= d[i];
        }
        d[n - 1] = 1.0 / prod;
        return Matrix::diagonal(d);
    }

    /// Random element of D = AN: positive diagonal with det 1, unit-disk strict upper part.
    Matrix split_borel(std::size_t n) {
        Matrix m(n);
        double prod = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = uniform(0.5, 2.0);
            prod *= m(i, i).real();
        }
        const double fix = std::pow(prod, -1.0 / static_cast<double>(n));
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) *= fix;
            for (std::size_t c = i + 1; c < n; ++c) m(i, c) = disk(1.0);
        }
        return m;
    }

    /// Random element of B = T D.
    Matrix borel(std::size_t n) { return torus(n) * split_borel(n); }

    /// Random element of SU(2).
    Matrix su2() {
        for (;;) {
            const double v[4] = {uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
            const double r = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
            if (r > 1.0 || r < 0.1) continue;
            const Complex alpha{v[0] / r, v[1] / r}, beta{v[2] / r, v[3] / r};
            return Matrix{{alpha, -std::conj(beta)}, {beta, std::conj(alpha)}};
        }
    }

    /// Random element of SL(2) with unit-disk entries.
    Matrix sl2() { return sl(2, 0.1); }

    /// Random element of P_{s_i}: Psi_i(SL(2)) B.
    Matrix parabolic(int i, int n) {
        return psi_embed(i, sl2(), n) * borel(static_cast<std::size_t>(n));
    }

    /// Random element of K_{s_i}: Psi_i(SU(2)) T.
    Matrix compact_parabolic(int i, int n) {
        return psi_embed(i, su2(), n) * torus(static_cast<std::size_t>(n));
    }

    GroupTuple parabolic_tuple(const Word& w) {
        GroupTuple p{w, {}, Flavor::parabolic};
        for (int l : w.letters) p.slots.push_back(parabolic(l, w.n));
        return p;
    }

    GroupTuple compact_tuple(const Word& w) {
        GroupTuple k{w, {}, Flavor::compact};
        for (int l : w.letters) k.slots.push_back(compact_parabolic(l, w.n));
        return k;
    }

    ActionTuple borel_tuple(const Word& w) {
        ActionTuple b{w, {}};
        for (std::size_t j = 0; j < w.length(); ++j) b.slots.push_back(borel(w.dim()));
        return b;
    }

    ActionTuple torus_tuple(const Word& w) {
        ActionTuple t{w, {}};
        for (std::size_t j = 0; j < w.length(); ++j) t.slots.push_back(torus(w.dim()));
        return t;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace flagres
