#include <vector>

#include <gtest/gtest.h>

#include "flagres/iwasawa.hpp"
#include "flagres/resolution.hpp"
#include "flagres/sampling.hpp"
#include "test_helpers.hpp"

using namespace flagres;

namespace {

const Word kSl3(3, {1, 2, 1});
const Word kSl4(4, {1, 2, 3, 1, 2, 1});

double TupleDiff(const GroupTuple& x, const GroupTuple& y) {
    double m = 0.0;
    for (std::size_t j = 0; j < x.slots.size(); ++j) m = std::max(m, scaled_diff(x.slots[j], y.slots[j]));
    return m;
}

ActionTuple Identities(const Word& w) {
    return ActionTuple{w, std::vector<Matrix>(w.length(), Matrix::identity(w.dim()))};
}

ActionTuple SlotProduct(const ActionTuple& x, const ActionTuple& y) {
    ActionTuple out{x.word, {}};
    for (std::size_t j = 0; j < x.slots.size(); ++j) out.slots.push_back(x.slots[j] * y.slots[j]);
    return out;
}

// Written out from the recursion, independent of beta().
std::vector<Matrix> HandRecursion(const std::vector<Matrix>& p) {
    std::vector<Matrix> q{p[0]};
    for (std::size_t k = 1; k < p.size(); ++k) {
        const auto f = iwasawa_factor(q.back());
        q.push_back(f.a * f.n * p[k]);
    }
    return q;
}

}  // namespace

TEST(Act, IdentityAndLengthOne) {
    Sampler rng(1);
    const GroupTuple p = rng.parabolic_tuple(kSl3);
    EXPECT_LE(TupleDiff(act(p, Identities(kSl3)), p), 1e-15);

    const Word one(3, {2});
    const GroupTuple p1 = rng.parabolic_tuple(one);
    const ActionTuple b1 = rng.borel_tuple(one);
    EXPECT_TRUE(MatrixNear(act(p1, b1).slots[0], p1.slots[0] * b1.slots[0], 1e-15));
}

TEST(Act, IsRightAction) {
    Sampler rng(2);
    for (const auto& w : {kSl3, kSl4})
        for (int t = 0; t < 20; ++t) {
            const GroupTuple p = rng.parabolic_tuple(w);
            const ActionTuple b = rng.borel_tuple(w), c = rng.borel_tuple(w);
            EXPECT_LE(TupleDiff(act(act(p, b), c), act(p, SlotProduct(b, c))), 1e-10);
        }
}

TEST(Act, RejectsNonBorelAndWordMismatch) {
    Sampler rng(3);
    const GroupTuple p = rng.parabolic_tuple(kSl3);
    ActionTuple b = rng.borel_tuple(kSl3);
    b.slots[1] = simple_refl_rep(1, 3);
    EXPECT_THROW(act(p, b), MembershipError);
    EXPECT_THROW(act(p, rng.borel_tuple(Word(3, {1, 2}))), DomainError);
}

TEST(Beta, CompactTuplesAreFixed) {
    Sampler rng(4);
    const GroupTuple k = include(rng.compact_tuple(kSl4));
    EXPECT_LE(TupleDiff(beta(k), k), 1e-12);
    EXPECT_LE(TupleDiff(beta_inv(k), k), 1e-12);
}

TEST(Beta, LengthOneIsIdentity) {
    Sampler rng(5);
    const GroupTuple p = rng.parabolic_tuple(Word(4, {2}));
    EXPECT_EQ(beta(p).slots[0], p.slots[0]);
    EXPECT_EQ(beta_inv(p).slots[0], p.slots[0]);
}

TEST(Beta, MatchesHandRecursion) {
    Sampler rng(6);
    const Word w(3, {1, 2});
    for (int t = 0; t < 20; ++t) {
        const GroupTuple p = rng.parabolic_tuple(w);
        const auto q = HandRecursion(p.slots);
        const GroupTuple b = beta(p);
        for (std::size_t k = 0; k < q.size(); ++k) EXPECT_LE(scaled_diff(b.slots[k], q[k]), 1e-12);
        validate(b);  // d(q) p stays in P_s
    }
}

TEST(BetaInv, RoundTrip) {
    Sampler rng(7);
    for (const auto& w : {kSl3, kSl4})
        for (int t = 0; t < 50; ++t) {
            const GroupTuple q = rng.parabolic_tuple(w);
            EXPECT_LE(TupleDiff(beta(beta_inv(q)), q), 1e-9);
            EXPECT_LE(TupleDiff(beta_inv(beta(q)), q), 1e-9);
        }
}

TEST(Phi, CompactInputUnchanged) {
    Sampler rng(8);
    for (int t = 0; t < 20; ++t) {
        const GroupTuple k = rng.compact_tuple(kSl4);
        const GroupTuple out = phi(include(k));
        EXPECT_EQ(out.flavor, Flavor::compact);
        EXPECT_LE(TupleDiff(out, k), 1e-10);
    }
}

TEST(Phi, LengthOneGivesCompactFactor) {
    const Complex zeta{0.7, -1.3};
    const Word w(3, {2});
    const GroupTuple p{w, {unipotent_param(2, zeta, 3) * simple_refl_rep(2, 3)}, Flavor::parabolic};
    EXPECT_TRUE(MatrixNear(phi(p).slots[0], k_map(p.slots[0]), 0.0));
}

TEST(Phi, SlotsLieInCompactParabolics) {
    Sampler rng(9);
    for (int t = 0; t < 20; ++t) {
        const GroupTuple p = rng.parabolic_tuple(kSl4);
        const GroupTuple k = phi(p);
        EXPECT_NO_THROW(validate(k));
        EXPECT_TRUE(tuple_coset_equal_D(include(k), p));
    }
}

TEST(Include, ReflagsOnly) {
    Sampler rng(10);
    const GroupTuple k = rng.compact_tuple(kSl3);
    const GroupTuple p = include(k);
    EXPECT_EQ(p.flavor, Flavor::parabolic);
    EXPECT_EQ(p.slots, k.slots);
    EXPECT_NO_THROW(validate(p));
    EXPECT_THROW(include(p), DomainError);
}

TEST(Rho, Examples) {
    const Word w(3, {1, 2});
    const GroupTuple ids{w, {Matrix::identity(3), Matrix::identity(3)}, Flavor::parabolic};
    EXPECT_EQ(rho(ids), Matrix::identity(3));
    const GroupTuple s{w, {simple_refl_rep(1, 3), simple_refl_rep(2, 3)}, Flavor::parabolic};
    EXPECT_EQ(rho(s), word_rep(w));
    GroupTuple sk = s;
    sk.flavor = Flavor::compact;
    EXPECT_EQ(rho_K(sk), word_rep(w));
    EXPECT_THROW(rho(sk), DomainError);
}

TEST(Rho, EquivariantModuloB) {
    Sampler rng(11);
    for (int t = 0; t < 30; ++t) {
        const GroupTuple p = rng.parabolic_tuple(kSl4);
        EXPECT_TRUE(coset_equal_GB(rho(act(p, rng.borel_tuple(kSl4))), rho(p)));
        const GroupTuple k = rng.compact_tuple(kSl4);
        EXPECT_TRUE(coset_equal_KT(rho_K(act(k, rng.torus_tuple(kSl4))), rho_K(k)));
    }
}

TEST(TupleCosetD, Examples) {
    Sampler rng(12);
    for (int t = 0; t < 20; ++t) {
        const GroupTuple p = rng.parabolic_tuple(kSl3);
        EXPECT_TRUE(tuple_coset_equal_D(p, act(p, rng.borel_tuple(kSl3))));
        EXPECT_TRUE(tuple_coset_equal_D(include(phi(p)), p));
        GroupTuple off = p;
        off.slots[0] = off.slots[0] * psi_embed(1, rng.sl2(), 3);
        EXPECT_FALSE(tuple_coset_equal_D(p, off));
        GroupTuple off_last = p;
        off_last.slots[2] = off_last.slots[2] * simple_refl_rep(1, 3);
        EXPECT_FALSE(tuple_coset_equal_D(p, off_last));
    }
}

TEST(TupleCosetBS, Examples) {
    Sampler rng(13);
    for (int t = 0; t < 20; ++t) {
        const GroupTuple k = rng.compact_tuple(kSl4);
        EXPECT_TRUE(tuple_coset_equal_BS(k, act(k, rng.torus_tuple(kSl4))));
        const GroupTuple p = rng.parabolic_tuple(kSl4);
        EXPECT_TRUE(tuple_coset_equal_BS(phi(p), phi(act(p, rng.borel_tuple(kSl4)))));
        GroupTuple off = k;
        off.slots[3] = off.slots[3] * psi_embed(k.word.letters[3], rng.su2(), 4);
        EXPECT_FALSE(tuple_coset_equal_BS(k, off));
    }
    GroupTuple bad = rng.compact_tuple(kSl3);
    bad.slots[0] = rng.parabolic(1, 3);
    EXPECT_THROW(tuple_coset_equal_BS(bad, bad), MembershipError);
}

TEST(ResolutionProperties, EquivarianceWithForcedWitness) {
    Sampler rng(14);
    for (const auto& w : {kSl3, kSl4})
        for (int s = 0; s < 50; ++s) {
            const GroupTuple p = rng.parabolic_tuple(w);
            const ActionTuple b = rng.borel_tuple(w);
            ActionTuple t{w, {}};
            for (const auto& bj : b.slots) t.slots.push_back(k_map(bj));
            const GroupTuple pb = act(p, b);
            EXPECT_LE(TupleDiff(phi(pb), act(phi(p), t)), 1e-9);

            // d-factor transport: d(q'_k) = t_k^{-1} d(q_k) b_k
            const GroupTuple q = beta(p), qb = beta(pb);
            for (std::size_t k = 0; k < q.slots.size(); ++k)
                EXPECT_LE(scaled_diff(d_map(qb.slots[k]), t.slots[k].adjoint() * d_map(q.slots[k]) * b.slots[k]), 1e-9);
        }
}

TEST(ResolutionProperties, TelescopingAndDiagram) {
    Sampler rng(15);
    for (const auto& w : {kSl3, kSl4})
        for (int s = 0; s < 50; ++s) {
            const GroupTuple p = rng.parabolic_tuple(w);
            const Matrix bottom = rho_K(phi(p));
            EXPECT_LE(scaled_diff(rho(p), bottom * d_map(beta(p).slots.back())), 1e-9);
            EXPECT_LE(scaled_diff(k_map(rho(p)), bottom), 1e-9);
            EXPECT_TRUE(coset_equal_KT(k_map(rho(p)), bottom));
        }
}

TEST(ResolutionProperties, NonReducedWordsWork) {
    Sampler rng(16);
    const Word w(3, {1, 1, 2, 2});
    const GroupTuple p = rng.parabolic_tuple(w);
    EXPECT_TRUE(tuple_coset_equal_D(include(phi(p)), p));
    EXPECT_LE(scaled_diff(k_map(rho(p)), rho_K(phi(p))), 1e-9);
}
