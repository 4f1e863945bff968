/**
 * @file constructions.hpp
 * @brief Explicit equivariant embeddings of the bouquet B_g.
 *
 *  - construction_a: B_g ⊂ R^{2g-1} = R^{g-1} × R^g, circle i in the plane of
 *    the simplex vertex v_i and the basis vector e_i;
 *  - construction_b: B_g ⊂ S^{2g-1} ⊂ R^{2g}, circle i of radius 1/√g in the
 *    (x_i, y_i) plane with every other coordinate pair pinned at (1/√g, 0);
 *  - b2_demo: two unit circles in R^3 tangent to the x and y axes at the origin;
 *  - compactify: lift a Euclidean embedding to the sphere one dimension up.
 */
#pragma once

#include <cmath>
#include <vector>

#include "equibouquet/embedding.hpp"
#include "equibouquet/errors.hpp"

namespace equibouquet {

/// Vertices of a regular simplex in R^{g-1}, centred at the origin, unit circumradius.
struct SimplexFrame {
    std::vector<Vector> vertices;

    int count() const { return static_cast<int>(vertices.size()); }
    Matrix gram() const {
        Matrix gm(count(), count());
        for (int i = 0; i < count(); ++i) {
            for (int j = 0; j < count(); ++j) gm(i, j) = vertices[i].dot(vertices[j]);
        }
        return gm;
    }
};

/// Projects e_1..e_g ⊂ R^g onto the hyperplane ⊥ (1,...,1), writes them in the
/// Helmert orthonormal basis of that hyperplane and rescales to unit length.
inline SimplexFrame regular_simplex(int g) {
    if (g < 2) throw DomainError("regular_simplex: need g >= 2");
    const int d = g - 1;
    // Helmert row j (0-based): j+1 ones, then -(j+1), then zeros; normalized.
    Matrix helmert = Matrix::Zero(d, g);
    for (int j = 0; j < d; ++j) {
        const double scale = 1.0 / std::sqrt(static_cast<double>((j + 1) * (j + 2)));
        helmert.row(j).head(j + 1).setConstant(scale);
        helmert(j, j + 1) = -(j + 1) * scale;
    }
    const double rescale = 1.0 / std::sqrt(1.0 - 1.0 / g);
    SimplexFrame frame;
    for (int k = 0; k < g; ++k) frame.vertices.emplace_back(rescale * helmert.col(k));
    return frame;
}

/// The orthogonal map of R^{g-1} with P·v_i = v_{σ(i)}.
inline Matrix simplex_permutation_matrix(const SimplexFrame& frame, const Permutation& sigma) {
    const int g = frame.count();
    if (sigma.size() != g) throw DimensionError("simplex_permutation_matrix: permutation size differs");
    const int d = g - 1;
    Matrix basis(d, d), images(d, d);
    for (int i = 0; i < d; ++i) {
        basis.col(i) = frame.vertices[i];
        images.col(i) = frame.vertices[sigma(i)];
    }
    // P·basis = images  ⇔  basisᵀ·Pᵀ = imagesᵀ.
    Eigen::FullPivLU<Matrix> lu(basis.transpose());
    if (!lu.isInvertible()) throw InconsistencyError("simplex frame is singular");
    Matrix p = lu.solve(images.transpose()).transpose();
    const double residual = max_abs(Vector(p * frame.vertices[d] - frame.vertices[sigma(d)]));
    if (residual > 1e-9) throw InconsistencyError("simplex permutation fails on the last vertex");
    return p;
}

inline EmbeddedBouquet construction_a(int g) {
    if (g < 2) throw DomainError("construction_a: need g >= 2");
    const int d = g - 1;
    const int m = 2 * g - 1;
    const SimplexFrame frame = regular_simplex(g);

    EmbeddedBouquet e;
    e.genus = g;
    e.ambient_dim = m;
    for (int i = 0; i < g; ++i) {
        // (1 + cos t)v_i + sin t e_i with t = θ + π, so the origin sits at θ = 0.
        ParametricCircle c{Vector::Zero(m), Vector::Zero(m), Vector::Zero(m)};
        c.center.head(d) = frame.vertices[i];
        c.axis_u.head(d) = -frame.vertices[i];
        c.axis_w(d + i) = -1.0;
        e.circles.push_back(std::move(c));
    }

    std::vector<Matrix> rho;
    for (int i = 0; i < g; ++i) {
        Matrix r = Matrix::Identity(m, m);
        r(d + i, d + i) = -1.0;
        rho.push_back(std::move(r));
    }
    std::vector<Matrix> tau;
    for (int k = 0; k + 1 < g; ++k) {
        const Permutation swap = Permutation::transposition(g, k, k + 1);
        tau.push_back(block_diag(simplex_permutation_matrix(frame, swap), permutation_matrix(swap)));
    }
    e.representation = Representation(g, m, std::move(rho), std::move(tau));
    return e;
}

inline EmbeddedBouquet construction_b(int g) {
    if (g < 1) throw DomainError("construction_b: need g >= 1");
    const int m = 2 * g;
    const double r = 1.0 / std::sqrt(static_cast<double>(g));
    Vector vertex = Vector::Zero(m);
    for (int j = 0; j < g; ++j) vertex(2 * j) = r;

    EmbeddedBouquet e;
    e.genus = g;
    e.ambient_dim = m;
    for (int i = 0; i < g; ++i) {
        ParametricCircle c{vertex, Vector::Zero(m), Vector::Zero(m)};
        c.center(2 * i) = 0.0;
        c.axis_u(2 * i) = r;
        c.axis_w(2 * i + 1) = r;
        e.circles.push_back(std::move(c));
    }

    std::vector<Matrix> rho;
    for (int i = 0; i < g; ++i) {
        Matrix refl = Matrix::Identity(m, m);
        refl(2 * i + 1, 2 * i + 1) = -1.0;
        rho.push_back(std::move(refl));
    }
    std::vector<Matrix> tau;
    for (int k = 0; k + 1 < g; ++k) {
        // Block i goes to block σ(i), so that τ_σ(C_i) = C_{σ(i)}.
        const Permutation swap = Permutation::transposition(g, k, k + 1);
        Matrix t = Matrix::Zero(m, m);
        for (int i = 0; i < g; ++i) t.block<2, 2>(2 * swap(i), 2 * i).setIdentity();
        tau.push_back(std::move(t));
    }
    e.representation = Representation(g, m, std::move(rho), std::move(tau));
    return e;
}

inline EmbeddedBouquet b2_demo() {
    EmbeddedBouquet e;
    e.genus = 2;
    e.ambient_dim = 3;
    // C_1: (sin θ, 0, cos θ − 1) in the lower zx half-plane.
    e.circles.push_back({Vector::Unit(3, 2) * -1.0, Vector::Unit(3, 2), Vector::Unit(3, 0)});
    // C_2: (0, sin θ, 1 − cos θ) in the upper yz half-plane.
    e.circles.push_back({Vector::Unit(3, 2), Vector::Unit(3, 2) * -1.0, Vector::Unit(3, 1)});

    Matrix mirror_x = Matrix::Identity(3, 3);
    mirror_x(0, 0) = -1.0;
    Matrix mirror_y = Matrix::Identity(3, 3);
    mirror_y(1, 1) = -1.0;
    // Half-turn about the line x = y, z = 0: (x, y, z) ↦ (y, x, −z).
    Matrix half_turn{{0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 0.0, -1.0}};
    e.representation = Representation(2, 3, {mirror_x, mirror_y}, {half_turn});
    return e;
}

/// Lift through the inverse stereographic projection; matrices become blockdiag(M, 1).
inline EmbeddedBouquet compactify(const EmbeddedBouquet& e) {
    if (e.post_map != PostMap::none) throw PreconditionError("compactify: embedding already lives on a sphere");
    EmbeddedBouquet out = e;
    out.ambient_dim = e.ambient_dim + 1;
    out.post_map = PostMap::inverse_stereographic;
    out.representation = e.representation.extended_by_fixed_axis();
    return out;
}

/// Global orthogonal change of coordinates. For a lifted embedding `a` acts on
/// the pre-image space R^{m-1} and blockdiag(a, 1) on the ambient space.
inline EmbeddedBouquet transformed(const EmbeddedBouquet& e, const Matrix& a) {
    if (a.rows() != e.circle_dim() || a.cols() != e.circle_dim()) {
        throw DimensionError("transformed: matrix must act on the circle space");
    }
    EmbeddedBouquet out = e;
    for (auto& c : out.circles) {
        c.center = a * c.center;
        c.axis_u = a * c.axis_u;
        c.axis_w = a * c.axis_w;
    }
    const Matrix ambient = e.post_map == PostMap::none ? a : block_diag(a, Matrix::Identity(1, 1));
    out.representation = e.representation.conjugated(ambient);
    return out;
}

}  // namespace equibouquet
