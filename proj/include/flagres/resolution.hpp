#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "iwasawa.hpp"
#include "matrix.hpp"
#include "subgroups.hpp"
#include "tolerances.hpp"
#include "weyl.hpp"

namespace flagres {

enum class Flavor { parabolic, compact };

/**
 * Representative of a point of P_w = P_{s_1} x ... x P_{s_l} (parabolic) or of
 * K_w = K_{s_1} x ... x K_{s_l} (compact). Cosets in the Demazure space
 * P_w / B^l and the Bott-Samelson space K_w / T^l are handled through
 * representatives plus tuple_coset_equal_D / tuple_coset_equal_BS.
 */
struct GroupTuple {
    Word word;
    std::vector<Matrix> slots;
    Flavor flavor = Flavor::parabolic;
};

/// Element of B^l (or T^l) acting on the right of a GroupTuple.
struct ActionTuple {
    Word word;
    std::vector<Matrix> slots;
};

namespace detail {

inline void check_shape(const Word& w, const std::vector<Matrix>& slots, const char* what) {
    if (slots.size() != w.length()) throw DimensionError(std::string(what) + ": slot count differs from word length");
    for (const auto& m : slots)
        if (m.dim() != w.dim()) throw DimensionError(std::string(what) + ": slot dimension differs from n");
}

inline void require_flavor(const GroupTuple& p, Flavor f, const char* what) {
    if (p.flavor != f)
        throw DomainError(std::string(what) + (f == Flavor::parabolic ? ": expected a parabolic tuple" : ": expected a compact tuple"));
}

}  // namespace detail

/// Checks slot j lies in P_{s_j} (parabolic) or K_{s_j} (compact); throws MembershipError otherwise.
inline void validate(const GroupTuple& p, const Tolerances& tol = {}) {
    detail::check_shape(p.word, p.slots, "validate");
    for (std::size_t j = 0; j < p.slots.size(); ++j) {
        const int l = p.word.letters[j];
        const Subgroup s = p.flavor == Flavor::parabolic ? Subgroup::parabolic(l) : Subgroup::compact_parabolic(l);
        if (!is_member(p.slots[j], s, tol))
            throw MembershipError("slot " + std::to_string(j + 1) + " is not in the minimal " +
                                  (p.flavor == Flavor::parabolic ? "parabolic" : "compact") + " subgroup of its letter");
    }
}

/// Right action (p_1 b_1, b_1^{-1} p_2 b_2, ..., b_{l-1}^{-1} p_l b_l).
/// Parabolic tuples take B-tuples, compact tuples take T-tuples.
inline GroupTuple act(const GroupTuple& p, const ActionTuple& b, const Tolerances& tol = {}) {
    if (!(p.word == b.word)) throw DomainError("act: words differ");
    detail::check_shape(p.word, p.slots, "act");
    detail::check_shape(b.word, b.slots, "act");
    const Subgroup group = p.flavor == Flavor::parabolic ? Subgroup::borel() : Subgroup::torus();
    for (const auto& bj : b.slots)
        if (!is_member(bj, group, tol)) throw MembershipError("act: acting element outside B (or T)");

    GroupTuple out{p.word, {}, p.flavor};
    out.slots.reserve(p.slots.size());
    for (std::size_t j = 0; j < p.slots.size(); ++j) {
        Matrix s = p.slots[j] * b.slots[j];
        if (j > 0) s = mat_inv(b.slots[j - 1], tol.det) * s;
        out.slots.push_back(std::move(s));
    }
    validate(out, tol);
    return out;
}

/// q_1 = p_1, q_k = d(q_{k-1}) p_k.
inline GroupTuple beta(const GroupTuple& p, const Tolerances& tol = {}) {
    detail::require_flavor(p, Flavor::parabolic, "beta");
    detail::check_shape(p.word, p.slots, "beta");
    GroupTuple q{p.word, {}, Flavor::parabolic};
    q.slots.reserve(p.slots.size());
    for (std::size_t k = 0; k < p.slots.size(); ++k)
        q.slots.push_back(k == 0 ? p.slots[0] : d_map(q.slots[k - 1], tol) * p.slots[k]);
    return q;
}

/// p_1 = q_1, p_k = d(q_{k-1})^{-1} q_k.
inline GroupTuple beta_inv(const GroupTuple& q, const Tolerances& tol = {}) {
    detail::require_flavor(q, Flavor::parabolic, "beta_inv");
    detail::check_shape(q.word, q.slots, "beta_inv");
    GroupTuple p{q.word, {}, Flavor::parabolic};
    p.slots.reserve(q.slots.size());
    for (std::size_t k = 0; k < q.slots.size(); ++k)
        p.slots.push_back(k == 0 ? q.slots[0] : mat_inv(d_map(q.slots[k - 1], tol), tol.det) * q.slots[k]);
    return p;
}

/// (k(q_1), ..., k(q_l)) with q = beta(p).
inline GroupTuple phi(const GroupTuple& p, const Tolerances& tol = {}) {
    const GroupTuple q = beta(p, tol);
    GroupTuple out{p.word, {}, Flavor::compact};
    out.slots.reserve(q.slots.size());
    for (const auto& qk : q.slots) out.slots.push_back(k_map(qk, tol));
    return out;
}

/// Canonical inclusion K_w -> P_w.
inline GroupTuple include(const GroupTuple& k) {
    detail::require_flavor(k, Flavor::compact, "include");
    return GroupTuple{k.word, k.slots, Flavor::parabolic};
}

namespace detail {
inline Matrix ordered_product(const GroupTuple& p) {
    Matrix out = Matrix::identity(p.word.dim());
    for (const auto& s : p.slots) out = out * s;
    return out;
}
}  // namespace detail

/// Multiplication P_w -> G.
inline Matrix rho(const GroupTuple& p) {
    detail::require_flavor(p, Flavor::parabolic, "rho");
    detail::check_shape(p.word, p.slots, "rho");
    return detail::ordered_product(p);
}

/// Multiplication K_w -> K.
inline Matrix rho_K(const GroupTuple& k) {
    detail::require_flavor(k, Flavor::compact, "rho_K");
    detail::check_shape(k.word, k.slots, "rho_K");
    return detail::ordered_product(k);
}

/**
 * The unique candidate c with act(p1, c) = p2: c_1 = p1_1^{-1} p2_1,
 * c_k = p1_k^{-1} c_{k-1} p2_k. Both tuples must share word and flavor.
 */
inline ActionTuple action_witness(const GroupTuple& p1, const GroupTuple& p2, const Tolerances& tol = {}) {
    if (!(p1.word == p2.word)) throw DomainError("action_witness: words differ");
    if (p1.flavor != p2.flavor) throw DomainError("action_witness: flavors differ");
    detail::check_shape(p1.word, p1.slots, "action_witness");
    detail::check_shape(p2.word, p2.slots, "action_witness");
    ActionTuple c{p1.word, {}};
    c.slots.reserve(p1.slots.size());
    for (std::size_t k = 0; k < p1.slots.size(); ++k) {
        const Matrix left = p1.flavor == Flavor::compact ? p1.slots[k].adjoint() : mat_inv(p1.slots[k], tol.det);
        c.slots.push_back(k == 0 ? left * p2.slots[0] : left * c.slots[k - 1] * p2.slots[k]);
    }
    return c;
}

/// Largest relative below-diagonal magnitude over the forced B-witness.
inline double tuple_coset_defect_D(const GroupTuple& p1, const GroupTuple& p2, const Tolerances& tol = {}) {
    detail::require_flavor(p1, Flavor::parabolic, "tuple_coset_equal_D");
    detail::require_flavor(p2, Flavor::parabolic, "tuple_coset_equal_D");
    double worst = 0.0;
    for (const auto& c : action_witness(p1, p2, tol).slots) worst = std::max(worst, borel_defect(c));
    return worst;
}

/// Equality in the Demazure space P_w / B^l.
inline bool tuple_coset_equal_D(const GroupTuple& p1, const GroupTuple& p2, const Tolerances& tol = {}) {
    return tuple_coset_defect_D(p1, p2, tol) <= tol.coset;
}

/// Largest off-diagonal magnitude over the forced T-witness. Throws on non-unitary slots.
inline double tuple_coset_defect_BS(const GroupTuple& k1, const GroupTuple& k2, const Tolerances& tol = {}) {
    detail::require_flavor(k1, Flavor::compact, "tuple_coset_equal_BS");
    detail::require_flavor(k2, Flavor::compact, "tuple_coset_equal_BS");
    for (const auto* t : {&k1, &k2})
        for (const auto& s : t->slots)
            if (unitarity_defect(s) > tol.coset) throw MembershipError("tuple_coset_equal_BS: non-unitary slot");
    double worst = 0.0;
    for (const auto& c : action_witness(k1, k2, tol).slots) worst = std::max(worst, torus_defect(c));
    return worst;
}

/// Equality in the Bott-Samelson space K_w / T^l.
inline bool tuple_coset_equal_BS(const GroupTuple& k1, const GroupTuple& k2, const Tolerances& tol = {}) {
    return tuple_coset_defect_BS(k1, k2, tol) <= tol.coset;
}

}  // namespace flagres
