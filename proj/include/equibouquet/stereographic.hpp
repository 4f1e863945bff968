#pragma once

#include "equibouquet/errors.hpp"
#include "equibouquet/linalg.hpp"

namespace equibouquet {

/// R^n → S^n \ {north pole}: x ↦ (2x, |x|² − 1) / (|x|² + 1).
/// The projection point is the north pole (0, ..., 0, 1); the origin goes to the south pole.
inline Vector inverse_stereographic(const Vector& x) {
    if (!x.allFinite()) throw DomainError("inverse_stereographic: non-finite input");
    const double r2 = x.squaredNorm();
    const double denom = r2 + 1.0;
    Vector out(x.size() + 1);
    out.head(x.size()) = (2.0 / denom) * x;
    out(x.size()) = (r2 - 1.0) / denom;
    return out;
}

/// S^n \ {north pole} → R^n, the inverse of the map above.
inline Vector stereographic(const Vector& y) {
    if (y.size() < 1 || !y.allFinite()) throw DomainError("stereographic: bad input");
    const Eigen::Index n = y.size() - 1;
    const double gap = 1.0 - y(n);
    if (gap <= 0.0) throw DomainError("stereographic: north pole has no image");
    return y.head(n) / gap;
}

}  // namespace equibouquet
