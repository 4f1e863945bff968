#pragma once

#include <Eigen/Dense>

#include <random>
#include <vector>

#include "equibouquet/symgroup.hpp"

namespace equibouquet {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Absolute tolerances on max-norm residuals.
struct Tolerances {
    double orth = 1e-10;       ///< ‖MᵀM − I‖∞ of representation matrices
    double geom = 1e-9;        ///< point coincidences, norms, equivariance
    double hom = 1e-9;         ///< homomorphism and faithfulness residuals
    double diag = 1e-8;        ///< simultaneous diagonalization
    double rank_rel = 1e-8;    ///< singular values below rank_rel·σ_max count as zero
    double min_margin = 1e-6;  ///< smallest admissible distance between distinct circles
    double exclusion = 0.1;    ///< radians excluded around the vertex in the crossing test
};

inline double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }
inline double max_abs(const Vector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

inline double orthogonality_residual(const Matrix& m) {
    return max_abs(Matrix(m.transpose() * m - Matrix::Identity(m.cols(), m.cols())));
}

inline Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix out = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    out.topLeftCorner(a.rows(), a.cols()) = a;
    out.bottomRightCorner(b.rows(), b.cols()) = b;
    return out;
}

/// P with P·e_i = e_{σ(i)}.
inline Matrix permutation_matrix(const Permutation& sigma) {
    Matrix p = Matrix::Zero(sigma.size(), sigma.size());
    for (int i = 0; i < sigma.size(); ++i) p(sigma(i), i) = 1.0;
    return p;
}

/// Haar-distributed orthogonal matrix (QR of a Gaussian matrix, sign-corrected).
template <class Rng>
Matrix random_orthogonal(int n, Rng& rng) {
    std::normal_distribution<double> normal;
    Matrix a(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) a(i, j) = normal(rng);
    }
    Eigen::HouseholderQR<Matrix> qr(a);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR();
    for (int j = 0; j < n; ++j) {
        if (r(j, j) < 0.0) q.col(j) = -q.col(j);
    }
    return q;
}

/// Singular values (descending) and numerical rank relative to the largest.
struct RankInfo {
    int rank = 0;
    Vector singular_values;
};

inline RankInfo numerical_rank(const Matrix& m, double rel_threshold) {
    RankInfo info;
    if (m.size() == 0) return info;
    Eigen::JacobiSVD<Matrix> svd(m);
    info.singular_values = svd.singularValues();
    const double top = info.singular_values.size() ? info.singular_values(0) : 0.0;
    if (top == 0.0) return info;
    for (Eigen::Index k = 0; k < info.singular_values.size(); ++k) {
        if (info.singular_values(k) > rel_threshold * top) ++info.rank;
    }
    return info;
}

inline std::vector<double> to_std(const Vector& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace equibouquet
