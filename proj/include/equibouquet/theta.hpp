/**
 * @file theta.hpp
 * @brief The theta graph M_3 (two vertices, three edges) on S^2 with its
 * order-12 symmetry group S_3 × Z_2.
 *
 * S_3 permutes the edges and fixes both vertices; the Z_2 factor swaps the two
 * vertices and reverses every edge. Edge points are (edge, t) with t ∈ (0, 1),
 * t = 0 at the north vertex and t = 1 at the south vertex.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <utility>
#include <vector>

#include "equibouquet/linalg.hpp"
#include "equibouquet/symgroup.hpp"

namespace equibouquet {

inline constexpr int kThetaEdges = 3;

struct ThetaElement {
    Permutation perm = Permutation::identity(kThetaEdges);
    bool flip = false;

    friend auto operator<=>(const ThetaElement&, const ThetaElement&) = default;
};

inline ThetaElement compose(const ThetaElement& a, const ThetaElement& b) {
    return {a.perm.then_after(b.perm), a.flip != b.flip};
}

inline std::vector<ThetaElement> enumerate_theta_group() {
    std::vector<ThetaElement> out;
    std::vector<int> images{0, 1, 2};
    do {
        for (bool flip : {false, true}) out.push_back({Permutation(images), flip});
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

class ThetaPoint {
public:
    static ThetaPoint vertex(int which) {
        ThetaPoint p;
        p.vertex_ = which;
        return p;
    }
    /// t = 0 and t = 1 normalize to the north / south vertex.
    static ThetaPoint on_edge(int edge, double t) {
        if (t <= 0.0) return vertex(0);
        if (t >= 1.0) return vertex(1);
        ThetaPoint p;
        p.edge_ = edge;
        p.t_ = t;
        return p;
    }

    bool is_vertex() const { return vertex_ >= 0; }
    int which_vertex() const { return vertex_; }
    int edge() const { return edge_; }
    double t() const { return t_; }

private:
    int vertex_ = -1;
    int edge_ = -1;
    double t_ = 0.0;
};

inline ThetaPoint act(const ThetaElement& h, const ThetaPoint& x) {
    if (x.is_vertex()) return ThetaPoint::vertex(h.flip ? 1 - x.which_vertex() : x.which_vertex());
    return ThetaPoint::on_edge(h.perm(x.edge()), h.flip ? 1.0 - x.t() : x.t());
}

/// Three meridians of the unit sphere joining the poles.
struct ThetaEmbedding {
    std::vector<double> longitudes;
    std::vector<std::pair<ThetaElement, Matrix>> generators;

    Vector eval(const ThetaPoint& x) const {
        if (x.is_vertex()) return Vector::Unit(3, 2) * (x.which_vertex() == 0 ? 1.0 : -1.0);
        const double colat = std::numbers::pi * x.t();
        const double lon = longitudes.at(static_cast<std::size_t>(x.edge()));
        Vector p(3);
        p << std::sin(colat) * std::cos(lon), std::sin(colat) * std::sin(lon), std::cos(colat);
        return p;
    }
};

inline ThetaEmbedding m3_demo() {
    using std::numbers::pi;
    ThetaEmbedding e;
    e.longitudes = {0.0, 2.0 * pi / 3.0, 4.0 * pi / 3.0};

    const double c = std::cos(2.0 * pi / 3.0), s = std::sin(2.0 * pi / 3.0);
    Matrix rotation{{c, -s, 0.0}, {s, c, 0.0}, {0.0, 0.0, 1.0}};
    Matrix mirror_y = Matrix::Identity(3, 3);
    mirror_y(1, 1) = -1.0;
    Matrix mirror_z = Matrix::Identity(3, 3);
    mirror_z(2, 2) = -1.0;

    e.generators.push_back({{Permutation({1, 2, 0}), false}, rotation});
    e.generators.push_back({{Permutation::transposition(kThetaEdges, 1, 2), false}, mirror_y});
    e.generators.push_back({{Permutation::identity(kThetaEdges), true}, mirror_z});
    return e;
}

/// Matrices of every abstract element reachable from the generators, found by
/// breadth-first closure. `consistency` is the largest disagreement between two
/// products that reach the same abstract element (0 for a homomorphism).
struct ThetaClosure {
    std::map<ThetaElement, Matrix> matrices;
    double consistency = 0.0;
};

inline ThetaClosure close_theta_group(const ThetaEmbedding& e) {
    ThetaClosure out;
    std::vector<ThetaElement> frontier{ThetaElement{}};
    out.matrices.emplace(ThetaElement{}, Matrix::Identity(3, 3));
    while (!frontier.empty()) {
        std::vector<ThetaElement> next;
        for (const ThetaElement& h : frontier) {
            const Matrix mh = out.matrices.at(h);
            for (const auto& [gen, mg] : e.generators) {
                const ThetaElement prod = compose(gen, h);
                const Matrix mp = mg * mh;
                auto [it, inserted] = out.matrices.emplace(prod, mp);
                if (inserted) {
                    next.push_back(prod);
                } else {
                    out.consistency = std::max(out.consistency, max_abs(Matrix(it->second - mp)));
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

/// Number of pairwise distinct matrices (max-norm separation > tol) generated
/// by the generator matrices alone, ignoring the abstract labels.
inline int count_generated_matrices(const ThetaEmbedding& e, double tol, int cap = 1000) {
    std::vector<Matrix> found{Matrix::Identity(3, 3)};
    for (std::size_t head = 0; head < found.size() && static_cast<int>(found.size()) < cap; ++head) {
        for (const auto& gen : e.generators) {
            Matrix prod = gen.second * found[head];
            const bool known = std::any_of(found.begin(), found.end(),
                                           [&](const Matrix& m) { return max_abs(Matrix(m - prod)) <= tol; });
            if (!known) found.push_back(std::move(prod));
        }
    }
    return static_cast<int>(found.size());
}

}  // namespace equibouquet
