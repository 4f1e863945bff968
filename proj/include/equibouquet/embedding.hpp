#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "equibouquet/representation.hpp"
#include "equibouquet/stereographic.hpp"

namespace equibouquet {

/// Round circle θ ↦ center + cos θ·axis_u + sin θ·axis_w. θ = 0 is the wedge vertex.
struct ParametricCircle {
    Vector center;
    Vector axis_u;
    Vector axis_w;

    Vector at(double theta) const { return center + std::cos(theta) * axis_u + std::sin(theta) * axis_w; }
    Eigen::Index dim() const { return center.size(); }
};

enum class PostMap { none, inverse_stereographic };

inline std::string to_string(PostMap p) { return p == PostMap::none ? "none" : "inverse_stereographic"; }

/// The bouquet B_g realized as g parametric circles, optionally lifted to the
/// sphere, together with the orthogonal representation acting on the ambient space.
struct EmbeddedBouquet {
    int genus = 0;
    int ambient_dim = 0;
    PostMap post_map = PostMap::none;
    std::vector<ParametricCircle> circles;  ///< in R^ambient_dim, or R^{ambient_dim-1} before the lift
    Representation representation;

    int circle_dim() const { return post_map == PostMap::none ? ambient_dim : ambient_dim - 1; }

    /// Point at parameter θ on circle i in ambient coordinates.
    Vector eval_circle(int i, double theta) const {
        Vector raw = circles.at(static_cast<std::size_t>(i)).at(theta);
        return post_map == PostMap::none ? raw : inverse_stereographic(raw);
    }

    Vector eval(const GraphPoint& x) const {
        if (x.is_vertex()) return eval_circle(0, 0.0);
        if (x.circle() >= genus) throw DimensionError("eval: circle index exceeds genus");
        return eval_circle(x.circle(), x.angle());
    }

    /// Shape consistency between the fields; throws DimensionError.
    void validate_shape() const {
        if (genus < 1) throw DomainError("bouquet genus must be positive");
        if (static_cast<int>(circles.size()) != genus) throw DimensionError("need one circle per genus");
        for (const auto& c : circles) {
            if (c.center.size() != circle_dim() || c.axis_u.size() != circle_dim() || c.axis_w.size() != circle_dim()) {
                throw DimensionError("circle vectors do not match the ambient dimension");
            }
        }
        if (representation.genus() != genus || representation.dim() != ambient_dim) {
            throw DimensionError("representation does not match genus/ambient dimension");
        }
    }
};

}  // namespace equibouquet
