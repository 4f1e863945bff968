/**
 * @file symgroup.hpp
 * @brief The hyperoctahedral group (Z_2)^g ⋊ S_g as the symmetry group of the
 * bouquet of g circles, together with its action on the abstract bouquet.
 *
 * Conventions used throughout the library:
 *  - circles and permutation slots are 0-based internally, 1-based in all text I/O;
 *  - maps compose right to left: (a ∘ b)(x) = a(b(x));
 *  - an element is stored in the normal form  h = τ_σ ∘ Π_i ρ_i^{s_i}, with the
 *    exponents s_i kept as bits so the semidirect twist is exact xor arithmetic;
 *  - on every circle the wedge vertex sits at angle 0, the circle reversal ρ_i
 *    acts by θ ↦ 2π − θ and its second fixed point (the marked point) is θ = π.
 */
#pragma once

#include <algorithm>
#include <compare>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "equibouquet/errors.hpp"

namespace equibouquet {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// A bijection of {0, ..., g-1}.
class Permutation {
public:
    Permutation() = default;

    /// Takes 0-based images; throws DomainError unless they form a bijection.
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (int image : images_) {
            if (image < 0 || image >= static_cast<int>(images_.size()) || seen[image]) {
                throw DomainError("permutation images are not a bijection");
            }
            seen[image] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> images(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) images[i] = i;
        return Permutation(std::move(images));
    }

    /// The transposition exchanging i and j (0-based).
    static Permutation transposition(int n, int i, int j) {
        Permutation p = identity(n);
        std::swap(p.images_.at(i), p.images_.at(j));
        return p;
    }

    static Permutation from_one_based(const std::vector<int>& images) {
        std::vector<int> zero_based(images.size());
        std::transform(images.begin(), images.end(), zero_based.begin(), [](int v) { return v - 1; });
        return Permutation(std::move(zero_based));
    }

    std::vector<int> one_based() const {
        std::vector<int> out(images_.size());
        std::transform(images_.begin(), images_.end(), out.begin(), [](int v) { return v + 1; });
        return out;
    }

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const {
        for (int i = 0; i < size(); ++i) {
            if (images_[i] != i) return false;
        }
        return true;
    }

    /// (this ∘ other)(i) = this(other(i)).
    Permutation then_after(const Permutation& other) const {
        if (other.size() != size()) throw DimensionError("permutation sizes differ");
        std::vector<int> out(images_.size());
        for (int i = 0; i < size(); ++i) out[i] = images_[other(i)];
        return Permutation(std::move(out));
    }

    Permutation inverse() const {
        std::vector<int> out(images_.size());
        for (int i = 0; i < size(); ++i) out[images_[i]] = i;
        return Permutation(std::move(out));
    }

    /// Positions k of a word of adjacent transpositions s_k = (k k+1) with
    /// *this = s_{w[0]} ∘ s_{w[1]} ∘ ... ; the word is reduced (length = inversions).
    std::vector<int> adjacent_word() const {
        std::vector<int> current = images_;
        std::vector<int> peeled;
        // σ = σ' ∘ s_k whenever k is a descent of σ; peel descents from the right.
        for (bool changed = true; changed;) {
            changed = false;
            for (int k = 0; k + 1 < size(); ++k) {
                if (current[k] > current[k + 1]) {
                    std::swap(current[k], current[k + 1]);
                    peeled.push_back(k);
                    changed = true;
                }
            }
        }
        return {peeled.rbegin(), peeled.rend()};
    }

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// Element of Sym(B_g) in the normal form τ_perm ∘ Π ρ_i^{signs[i]}.
class GroupElement {
public:
    GroupElement() = default;

    GroupElement(std::vector<std::uint8_t> signs, Permutation perm)
        : signs_(std::move(signs)), perm_(std::move(perm)) {
        if (static_cast<int>(signs_.size()) != perm_.size()) {
            throw DimensionError("sign vector and permutation have different lengths");
        }
        for (auto& s : signs_) {
            if (s > 1) throw DomainError("sign exponents must be 0 or 1");
        }
    }

    static GroupElement identity(int g) {
        return {std::vector<std::uint8_t>(static_cast<std::size_t>(g), 0), Permutation::identity(g)};
    }

    /// ρ_i: reverses circle i, fixes the others pointwise.
    static GroupElement rho(int g, int i) {
        GroupElement h = identity(g);
        h.signs_.at(static_cast<std::size_t>(i)) = 1;
        return h;
    }

    /// τ_σ: carries circle i onto circle σ(i) preserving orientation.
    static GroupElement tau(Permutation sigma) {
        const int g = sigma.size();
        return {std::vector<std::uint8_t>(static_cast<std::size_t>(g), 0), std::move(sigma)};
    }

    int genus() const { return perm_.size(); }
    const std::vector<std::uint8_t>& signs() const { return signs_; }
    const Permutation& perm() const { return perm_; }

    bool is_identity() const {
        return perm_.is_identity() && std::all_of(signs_.begin(), signs_.end(), [](auto s) { return s == 0; });
    }

    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

private:
    std::vector<std::uint8_t> signs_;
    Permutation perm_;
};

/// Normal form of a ∘ b:  τ_σ ρ^s τ_μ ρ^t = τ_{σμ} ρ^{s∘μ + t}.
inline GroupElement compose(const GroupElement& a, const GroupElement& b) {
    if (a.genus() != b.genus()) throw DimensionError("compose: elements of different genus");
    const int g = a.genus();
    std::vector<std::uint8_t> signs(static_cast<std::size_t>(g));
    for (int j = 0; j < g; ++j) {
        signs[j] = static_cast<std::uint8_t>(a.signs()[b.perm()(j)] ^ b.signs()[j]);
    }
    return {std::move(signs), a.perm().then_after(b.perm())};
}

inline GroupElement inverse(const GroupElement& a) {
    const Permutation inv = a.perm().inverse();
    std::vector<std::uint8_t> signs(a.signs().size());
    for (int j = 0; j < a.genus(); ++j) signs[j] = a.signs()[inv(j)];
    return {std::move(signs), inv};
}

inline constexpr int kMaxEnumerableGenus = 7;

/// All 2^g · g! elements; permutations in lexicographic order, sign masks inner.
inline std::vector<GroupElement> enumerate(int g) {
    if (g < 1) throw DomainError("enumerate: genus must be positive");
    if (g > kMaxEnumerableGenus) throw DomainError("enumerate: genus too large to enumerate");
    std::vector<GroupElement> out;
    std::vector<int> images(static_cast<std::size_t>(g));
    for (int i = 0; i < g; ++i) images[i] = i;
    const std::uint32_t masks = 1u << g;
    do {
        const Permutation perm(images);
        for (std::uint32_t mask = 0; mask < masks; ++mask) {
            std::vector<std::uint8_t> signs(static_cast<std::size_t>(g));
            for (int i = 0; i < g; ++i) signs[i] = static_cast<std::uint8_t>((mask >> i) & 1u);
            out.emplace_back(std::move(signs), perm);
        }
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

/// Uniformly random element.
template <class Rng>
GroupElement random_element(int g, Rng& rng) {
    std::vector<int> images(static_cast<std::size_t>(g));
    for (int i = 0; i < g; ++i) images[i] = i;
    std::shuffle(images.begin(), images.end(), rng);
    std::bernoulli_distribution coin(0.5);
    std::vector<std::uint8_t> signs(static_cast<std::size_t>(g));
    for (auto& s : signs) s = coin(rng) ? 1 : 0;
    return {std::move(signs), Permutation(std::move(images))};
}

/// A point of the abstract bouquet: the wedge vertex or (circle, angle).
class GraphPoint {
public:
    static GraphPoint vertex() { return GraphPoint(); }

    /// Angle is reduced into [0, 2π); angle 0 on any circle is the vertex.
    static GraphPoint on_circle(int circle, double angle) {
        if (circle < 0) throw DomainError("circle index must be non-negative");
        if (!std::isfinite(angle)) throw DomainError("angle must be finite");
        double a = std::fmod(angle, kTwoPi);
        if (a < 0.0) a += kTwoPi;
        if (a >= kTwoPi) a = 0.0;
        if (a == 0.0) return vertex();
        GraphPoint p;
        p.circle_ = circle;
        p.angle_ = a;
        return p;
    }

    /// The second fixed point p_i of ρ_i.
    static GraphPoint marked(int circle) { return on_circle(circle, std::numbers::pi); }

    bool is_vertex() const { return circle_ < 0; }
    int circle() const { return circle_; }
    double angle() const { return angle_; }

    friend bool operator==(const GraphPoint&, const GraphPoint&) = default;

private:
    GraphPoint() = default;
    int circle_ = -1;
    double angle_ = 0.0;
};

/// Left action of Sym(B_g) on B_g.
inline GraphPoint act(const GroupElement& h, const GraphPoint& x) {
    if (x.is_vertex()) return x;
    const int i = x.circle();
    if (i >= h.genus()) throw DimensionError("act: circle index exceeds genus");
    const double angle = h.signs()[i] ? kTwoPi - x.angle() : x.angle();
    return GraphPoint::on_circle(h.perm()(i), angle);
}

/// Fixed locus of h restricted to circle i: either the whole circle or a finite set.
struct CircleFixedSet {
    bool whole_circle = false;
    std::vector<GraphPoint> points;
};

inline CircleFixedSet fixed_points_on_circle(const GroupElement& h, int i) {
    if (i < 0 || i >= h.genus()) throw DimensionError("fixed_points_on_circle: circle index out of range");
    if (h.perm()(i) != i) return {false, {GraphPoint::vertex()}};
    if (h.signs()[i] == 0) return {true, {}};
    return {false, {GraphPoint::vertex(), GraphPoint::marked(i)}};
}

}  // namespace equibouquet
