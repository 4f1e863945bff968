#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "equibouquet/symgroup.hpp"

namespace equibouquet {
namespace {

using IntMatrix = std::vector<std::vector<int>>;

// Independent model of the hyperoctahedral group: signed permutation matrices
// acting on ±e_i. ρ_i = diag with −1 at i, τ_σ e_i = e_{σ(i)}.
IntMatrix signed_matrix(const GroupElement& h) {
    const int g = h.genus();
    IntMatrix m(g, std::vector<int>(g, 0));
    // τ_σ ∘ ρ^s maps e_i to (−1)^{s_i} e_{σ(i)}.
    for (int i = 0; i < g; ++i) m[h.perm()(i)][i] = h.signs()[i] ? -1 : 1;
    return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size();
    IntMatrix c(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

double circular_gap(double a, double b) {
    const double d = std::fmod(std::abs(a - b), kTwoPi);
    return std::min(d, kTwoPi - d);
}

bool same_point(const GraphPoint& x, const GraphPoint& y, double tol = 1e-12) {
    if (x.is_vertex() || y.is_vertex()) {
        // A point within tol of angle 0 is the vertex up to rounding.
        auto near_vertex = [&](const GraphPoint& p) { return p.is_vertex() || circular_gap(p.angle(), 0.0) <= tol; };
        return near_vertex(x) && near_vertex(y);
    }
    return x.circle() == y.circle() && circular_gap(x.angle(), y.angle()) <= tol;
}

TEST(Permutation, RejectsNonBijection) {
    EXPECT_THROW(Permutation({0, 0, 1}), DomainError);
    EXPECT_THROW(Permutation({0, 3, 1}), DomainError);
    EXPECT_THROW(Permutation::from_one_based({0, 1}), DomainError);
}

TEST(Permutation, AdjacentWordReproducesEveryPermutation) {
    for (int g = 1; g <= 5; ++g) {
        std::vector<int> images(g);
        for (int i = 0; i < g; ++i) images[i] = i;
        do {
            const Permutation sigma(images);
            Permutation product = Permutation::identity(g);
            for (int k : sigma.adjacent_word()) product = product.then_after(Permutation::transposition(g, k, k + 1));
            EXPECT_EQ(product, sigma);
            int inversions = 0;
            for (int a = 0; a < g; ++a)
                for (int b = a + 1; b < g; ++b) inversions += images[a] > images[b];
            EXPECT_EQ(static_cast<int>(sigma.adjacent_word().size()), inversions);
        } while (std::next_permutation(images.begin(), images.end()));
    }
}

TEST(Compose, RhoIsAnInvolution) {
    for (int g = 1; g <= 4; ++g) {
        for (int i = 0; i < g; ++i) {
            EXPECT_TRUE(compose(GroupElement::rho(g, i), GroupElement::rho(g, i)).is_identity());
        }
    }
}

TEST(Compose, TranspositionConjugatesRho1ToRho2) {
    for (int g = 2; g <= 5; ++g) {
        const GroupElement t = GroupElement::tau(Permutation::transposition(g, 0, 1));
        EXPECT_EQ(compose(compose(t, GroupElement::rho(g, 0)), t), GroupElement::rho(g, 1));
    }
}

TEST(Compose, TauIsAHomomorphismFromSg) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> a{0, 1, 2, 3}, b{0, 1, 2, 3};
        std::shuffle(a.begin(), a.end(), rng);
        std::shuffle(b.begin(), b.end(), rng);
        const Permutation sigma(a), mu(b);
        EXPECT_EQ(compose(GroupElement::tau(sigma), GroupElement::tau(mu)), GroupElement::tau(sigma.then_after(mu)));
    }
}

TEST(Compose, MismatchedGenusThrows) {
    EXPECT_THROW(compose(GroupElement::identity(2), GroupElement::identity(3)), DimensionError);
}

TEST(Compose, AgreesWithSignedPermutationMatrices) {
    const auto elems = enumerate(3);
    for (const auto& a : elems) {
        for (const auto& b : elems) {
            ASSERT_EQ(signed_matrix(compose(a, b)), multiply(signed_matrix(a), signed_matrix(b)));
        }
    }
    std::mt19937_64 rng(11);
    for (int k = 0; k < 2000; ++k) {
        const auto a = random_element(6, rng), b = random_element(6, rng);
        ASSERT_EQ(signed_matrix(compose(a, b)), multiply(signed_matrix(a), signed_matrix(b)));
    }
}

TEST(Compose, AssociativeOnAllTriplesAtGenus3) {
    const auto elems = enumerate(3);
    for (const auto& a : elems)
        for (const auto& b : elems)
            for (const auto& c : elems) ASSERT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
}

TEST(Compose, AssociativeOnRandomTriples) {
    std::mt19937_64 rng(0x5EED);
    for (int g : {4, 5}) {
        for (int k = 0; k < 100000; ++k) {
            const auto a = random_element(g, rng), b = random_element(g, rng), c = random_element(g, rng);
            ASSERT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
        }
    }
}

TEST(Compose, ConjugationIdentityHoldsExactly) {
    for (int g = 1; g <= 5; ++g) {
        std::vector<int> images(g);
        for (int i = 0; i < g; ++i) images[i] = i;
        do {
            const Permutation sigma(images);
            const GroupElement t = GroupElement::tau(sigma);
            const GroupElement t_inv = GroupElement::tau(sigma.inverse());
            for (int i = 0; i < g; ++i) {
                ASSERT_EQ(compose(compose(t, GroupElement::rho(g, i)), t_inv), GroupElement::rho(g, sigma(i)));
            }
        } while (std::next_permutation(images.begin(), images.end()));
    }
}

TEST(Inverse, Basics) {
    EXPECT_TRUE(inverse(GroupElement::identity(3)).is_identity());
    for (int i = 0; i < 3; ++i) EXPECT_EQ(inverse(GroupElement::rho(3, i)), GroupElement::rho(3, i));
    for (const auto& a : enumerate(3)) {
        EXPECT_TRUE(compose(a, inverse(a)).is_identity());
        EXPECT_TRUE(compose(inverse(a), a).is_identity());
    }
}

TEST(Enumerate, CountsAndDistinctness) {
    long expected = 1;
    for (int g = 1; g <= 6; ++g) {
        expected *= 2 * g;  // 2^g g!
        const auto elems = enumerate(g);
        EXPECT_EQ(static_cast<long>(elems.size()), expected);
        const std::set<GroupElement> unique(elems.begin(), elems.end());
        EXPECT_EQ(unique.size(), elems.size());
    }
    EXPECT_EQ(enumerate(1).size(), 2u);
    EXPECT_EQ(enumerate(3).size(), 48u);
    EXPECT_EQ(enumerate(5).size(), 3840u);
}

TEST(Enumerate, RejectsBadGenus) {
    EXPECT_THROW(enumerate(0), DomainError);
    EXPECT_THROW(enumerate(kMaxEnumerableGenus + 1), DomainError);
}

TEST(Enumerate, ClosedUnderRenormalizedGeneratorWords) {
    std::mt19937_64 rng(3);
    const int g = 4;
    const auto all = enumerate(g);
    const std::set<GroupElement> group(all.begin(), all.end());
    std::uniform_int_distribution<int> pick(0, 2 * g - 2);
    for (int trial = 0; trial < 500; ++trial) {
        GroupElement h = GroupElement::identity(g);
        for (int len = 0; len < 12; ++len) {
            const int k = pick(rng);
            const GroupElement gen = k < g ? GroupElement::rho(g, k)
                                           : GroupElement::tau(Permutation::transposition(g, k - g, k - g + 1));
            h = compose(h, gen);
        }
        EXPECT_TRUE(group.contains(h));
        EXPECT_EQ(GroupElement(h.signs(), h.perm()), h);
    }
}

TEST(GraphPointTest, ZeroAngleIsVertex) {
    EXPECT_TRUE(GraphPoint::on_circle(2, 0.0).is_vertex());
    EXPECT_TRUE(GraphPoint::on_circle(0, kTwoPi).is_vertex());
    EXPECT_FALSE(GraphPoint::on_circle(0, 1.0).is_vertex());
    EXPECT_NEAR(GraphPoint::on_circle(1, -1.0).angle(), kTwoPi - 1.0, 1e-15);
    EXPECT_THROW(GraphPoint::on_circle(0, std::nan("")), DomainError);
}

TEST(Act, MarkedPointsFollowTheGroup) {
    const int g = 4;
    for (int i = 0; i < g; ++i) {
        EXPECT_EQ(act(GroupElement::rho(g, i), GraphPoint::marked(i)), GraphPoint::marked(i));
    }
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const GroupElement h = random_element(g, rng);
        const GroupElement t = GroupElement::tau(h.perm());
        for (int i = 0; i < g; ++i) EXPECT_EQ(act(t, GraphPoint::marked(i)), GraphPoint::marked(h.perm()(i)));
    }
}

TEST(Act, RhoReversesOnlyItsCircle) {
    const GraphPoint x = GraphPoint::on_circle(1, 0.3);
    EXPECT_NEAR(act(GroupElement::rho(3, 1), x).angle(), kTwoPi - 0.3, 1e-15);
    EXPECT_EQ(act(GroupElement::rho(3, 0), x), x);
}

TEST(Act, VertexFixedByAll) {
    for (const auto& h : enumerate(3)) EXPECT_TRUE(act(h, GraphPoint::vertex()).is_vertex());
}

TEST(Act, LeftActionOnAngleGrid) {
    const auto elems = enumerate(3);
    std::vector<GraphPoint> pts{GraphPoint::vertex()};
    for (int i = 0; i < 3; ++i)
        for (int k = 1; k < 24; ++k) pts.push_back(GraphPoint::on_circle(i, kTwoPi * k / 24 + 0.01));
    for (const auto& a : elems)
        for (const auto& b : elems)
            for (const auto& x : pts) ASSERT_TRUE(same_point(act(compose(a, b), x), act(a, act(b, x))));
}

TEST(FixedPoints, Examples) {
    const auto f1 = fixed_points_on_circle(GroupElement::rho(2, 0), 0);
    ASSERT_FALSE(f1.whole_circle);
    ASSERT_EQ(f1.points.size(), 2u);
    EXPECT_TRUE(f1.points[0].is_vertex());
    EXPECT_EQ(f1.points[1], GraphPoint::on_circle(0, std::numbers::pi));

    EXPECT_TRUE(fixed_points_on_circle(GroupElement::rho(2, 0), 1).whole_circle);

    const auto f3 = fixed_points_on_circle(GroupElement::tau(Permutation::transposition(2, 0, 1)), 0);
    EXPECT_FALSE(f3.whole_circle);
    ASSERT_EQ(f3.points.size(), 1u);
    EXPECT_TRUE(f3.points[0].is_vertex());
}

TEST(FixedPoints, AgreeWithActOnDenseGrid) {
    for (const auto& h : enumerate(3)) {
        for (int i = 0; i < 3; ++i) {
            const auto fixed = fixed_points_on_circle(h, i);
            for (int k = 1; k < 64; ++k) {
                const GraphPoint x = GraphPoint::on_circle(i, kTwoPi * k / 64);
                const bool is_fixed = same_point(act(h, x), x);
                const bool listed =
                    fixed.whole_circle ||
                    std::any_of(fixed.points.begin(), fixed.points.end(), [&](auto& p) { return same_point(p, x); });
                EXPECT_EQ(is_fixed, listed);
            }
        }
    }
}

}  // namespace
}  // namespace equibouquet
