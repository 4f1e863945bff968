/**
 * @file certificate.hpp
 * @brief Checks the dimension bound n ≥ 2g − 1 on a concrete spherical
 * equivariant embedding B_g ⊂ S^n ⊂ R^{n+1}.
 *
 * The argument, step by step:
 *  1. v (the vertex) and p_i (the second fixed point of ρ_i) are unit vectors;
 *  2. S_g permutes the p_i and fixes v, hence v, p_1, ..., p_{g-1} are linearly
 *     independent and V = span{v, p_1, ..., p_g} has dim V ≥ g;
 *  3. every ρ_i fixes v and all p_j, so (Z_2)^g acts trivially on V;
 *  4. (Z_2)^g therefore acts faithfully on V^⊥; commuting orthogonal involutions
 *     diagonalize simultaneously into ±1 patterns, and faithfulness means the
 *     g × q sign-exponent matrix has GF(2) rank g, so q = dim V^⊥ ≥ g;
 *  5. n + 1 = dim V + dim V^⊥ ≥ 2g.
 * Each step is computed numerically and reported with its residual and witness.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "equibouquet/embedding.hpp"
#include "equibouquet/gf2.hpp"
#include "equibouquet/jsonio.hpp"
#include "equibouquet/verify.hpp"

namespace equibouquet {

struct MarkedPoints {
    Vector v;
    std::vector<Vector> p;

    int genus() const { return static_cast<int>(p.size()); }
    int dim() const { return static_cast<int>(v.size()); }
};

/// v = e(vertex), p_i = e(OnCircle(i, π)); throws InconsistencyError when some
/// ρ_i fails to fix v or p_i.
inline MarkedPoints extract_marked_points(const EmbeddedBouquet& e, const Tolerances& tol = {}) {
    MarkedPoints mp{e.eval(GraphPoint::vertex()), {}};
    for (int i = 0; i < e.genus; ++i) mp.p.push_back(e.eval(GraphPoint::marked(i)));
    for (int i = 0; i < e.genus; ++i) {
        const Matrix& r = e.representation.rho()[i];
        const double residual = std::max(max_abs(Vector(r * mp.p[i] - mp.p[i])), max_abs(Vector(r * mp.v - mp.v)));
        if (!(residual <= tol.geom)) {
            throw InconsistencyError("rho_" + std::to_string(i + 1) + " does not fix its marked point");
        }
    }
    return mp;
}

/// Columns v, p_1, ..., p_k.
inline Matrix marked_matrix(const MarkedPoints& mp, int count) {
    Matrix a(mp.dim(), count + 1);
    a.col(0) = mp.v;
    for (int i = 0; i < count; ++i) a.col(i + 1) = mp.p[static_cast<std::size_t>(i)];
    return a;
}

/// Numerical rank of [v, p_1, ..., p_{g-1}].
inline RankInfo marked_rank(const MarkedPoints& mp, double rel_threshold = Tolerances{}.rank_rel) {
    return numerical_rank(marked_matrix(mp, mp.genus() - 1), rel_threshold);
}

/// Orthonormal bases of V = span{v, p_1..p_g} and of V^⊥, from one full SVD.
struct SpanSplit {
    Matrix span;        ///< (n+1) × dim V
    Matrix complement;  ///< (n+1) × dim V^⊥
};

inline SpanSplit split_span(const MarkedPoints& mp, double rel_threshold = Tolerances{}.rank_rel) {
    const Matrix a = marked_matrix(mp, mp.genus());
    Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullU);
    const Vector& sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        if (sv(0) > 0.0 && sv(k) > rel_threshold * sv(0)) ++rank;
    }
    const Matrix& u = svd.matrixU();
    return {u.leftCols(rank), u.rightCols(u.cols() - rank)};
}

inline Matrix complement_basis(const MarkedPoints& mp, int ambient_dim,
                               double rel_threshold = Tolerances{}.rank_rel) {
    if (mp.dim() != ambient_dim) throw DimensionError("complement_basis: marked points live in another dimension");
    return split_span(mp, rel_threshold).complement;
}

/// max_i max_b |ρ_i·b − b|∞ over an orthonormal basis b of V.
inline double invariant_subspace_check(const MarkedPoints& mp, const Representation& rep,
                                       double rel_threshold = Tolerances{}.rank_rel) {
    const Matrix basis = split_span(mp, rel_threshold).span;
    double worst = 0.0;
    for (const Matrix& r : rep.rho()) worst = std::max(worst, max_abs(Matrix(r * basis - basis)));
    return worst;
}

struct Diagonalization {
    Matrix basis;            ///< q × q orthogonal, columns are common eigenvectors
    BitMatrix sign_exponents;  ///< g × q, bit (i, k) set iff M_i·basis_k = −basis_k
    double residual = 0.0;   ///< max over i of |QᵀM_iQ − diag(±1)|∞
};

/// Splits R^q recursively by the ±1 eigenspaces of each involution in turn,
/// using the projectors (I ± M)/2 restricted to the current piece.
/// Throws PreconditionError for non-involutive, non-symmetric or non-commuting input.
inline Diagonalization simultaneous_diagonalize(const std::vector<Matrix>& mats, double tol = Tolerances{}.hom) {
    const int count = static_cast<int>(mats.size());
    const int q = count ? static_cast<int>(mats.front().rows()) : 0;
    for (int i = 0; i < count; ++i) {
        const Matrix& m = mats[i];
        if (m.rows() != q || m.cols() != q) throw DimensionError("simultaneous_diagonalize: shapes differ");
        const Matrix id = Matrix::Identity(q, q);
        if (!(max_abs(Matrix(m * m - id)) <= tol)) {
            throw PreconditionError("matrix " + std::to_string(i + 1) + " is not an involution");
        }
        if (!(max_abs(Matrix(m - m.transpose())) <= tol)) {
            throw PreconditionError("matrix " + std::to_string(i + 1) + " is not symmetric");
        }
        for (int j = 0; j < i; ++j) {
            if (!(max_abs(Matrix(m * mats[j] - mats[j] * m)) <= tol)) {
                throw PreconditionError("matrices " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                                        " do not commute");
            }
        }
    }

    std::vector<Matrix> pieces{Matrix::Identity(q, q)};
    for (const Matrix& m : mats) {
        std::vector<Matrix> next;
        for (const Matrix& piece : pieces) {
            const int d = static_cast<int>(piece.cols());
            Matrix restricted = piece.transpose() * m * piece;
            restricted = 0.5 * (restricted + restricted.transpose()).eval();
            for (double sign : {1.0, -1.0}) {
                const Matrix projector = 0.5 * (Matrix::Identity(d, d) + sign * restricted);
                const int rank = static_cast<int>(std::lround(projector.trace()));
                if (rank <= 0) continue;
                Eigen::JacobiSVD<Matrix> svd(projector, Eigen::ComputeThinU);
                next.emplace_back(piece * svd.matrixU().leftCols(rank));
            }
        }
        pieces = std::move(next);
    }

    Diagonalization out;
    out.basis = Matrix(q, q);
    int col = 0;
    for (const Matrix& piece : pieces) {
        out.basis.middleCols(col, piece.cols()) = piece;
        col += static_cast<int>(piece.cols());
    }
    if (col != q) throw PreconditionError("eigenspace dimensions do not add up; input is not an involution family");

    out.sign_exponents = BitMatrix(count, q);
    for (int i = 0; i < count; ++i) {
        const Matrix d = out.basis.transpose() * mats[i] * out.basis;
        Matrix target = Matrix::Zero(q, q);
        for (int k = 0; k < q; ++k) {
            const bool negative = d(k, k) < 0.0;
            out.sign_exponents.set(i, k, negative);
            target(k, k) = negative ? -1.0 : 1.0;
        }
        out.residual = std::max(out.residual, max_abs(Matrix(d - target)));
    }
    return out;
}

struct CertificateStep {
    std::string name;
    bool ran = false;
    bool pass = false;
    double residual = 0.0;
    json witness;
};

struct CertificateReport {
    int ambient_dim = 0;  ///< n + 1
    int genus = 0;
    int rank_marked = 0;
    int dim_V = 0;
    int dim_V_perp = 0;
    double trivial_on_V_residual = 0.0;
    int gf2_rank = 0;
    BitMatrix sign_exponents;
    bool bound_holds = false;
    std::vector<CertificateStep> steps;

    /// Name of the first failing step, empty when the bound holds.
    std::string first_failure() const {
        for (const auto& s : steps) {
            if (s.ran && !s.pass) return s.name;
        }
        return {};
    }
    const CertificateStep* step(const std::string& name) const {
        for (const auto& s : steps) {
            if (s.name == name) return &s;
        }
        return nullptr;
    }
};

inline const std::vector<std::string>& certificate_step_names() {
    static const std::vector<std::string> names{
        "orthogonality", "homomorphism", "marked_on_sphere", "marked_rank", "fixed_points",
        "trivial_on_V",  "complement",   "diagonalize",      "gf2_rank",     "dimension_count"};
    return names;
}

namespace detail {

class StepRunner {
public:
    explicit StepRunner(CertificateReport& report) : report_(report) {
        for (const auto& name : certificate_step_names()) report_.steps.push_back({name});
    }

    /// Runs `body` (returning pass/fail after filling residual and witness)
    /// unless an earlier step already failed.
    template <class Body>
    bool run(const std::string& name, Body&& body) {
        CertificateStep& step = find(name);
        if (failed_) return false;
        step.ran = true;
        step.pass = body(step);
        if (step.pass) step.witness = json();
        if (!step.pass) failed_ = true;
        return step.pass;
    }

    bool failed() const { return failed_; }

private:
    CertificateStep& find(const std::string& name) {
        for (auto& s : report_.steps) {
            if (s.name == name) return s;
        }
        throw std::logic_error("unknown certificate step " + name);
    }

    CertificateReport& report_;
    bool failed_ = false;
};

}  // namespace detail

/// Runs the marked-point steps on given points and representation.
inline CertificateReport certify_points(const MarkedPoints& mp, const Representation& rep,
                                        const VerifyOptions& opts = {}, bool check_representation = true) {
    const Tolerances& tol = opts.tol;
    const int g = mp.genus();
    CertificateReport report;
    report.ambient_dim = mp.dim();
    report.genus = g;
    detail::StepRunner runner(report);

    if (check_representation) {
        runner.run("orthogonality", [&](CertificateStep& s) {
            const CheckReport c = check_orthogonality(rep, opts);
            s.residual = c.residual;
            s.witness = c.witness;
            return c.pass;
        });
        runner.run("homomorphism", [&](CertificateStep& s) {
            const CheckReport c = check_homomorphism(rep, opts);
            s.residual = c.residual;
            s.witness = c.witness;
            return c.pass;
        });
    }

    runner.run("marked_on_sphere", [&](CertificateStep& s) {
        s.residual = std::abs(mp.v.norm() - 1.0);
        s.witness = {{"point", "v"}};
        for (int i = 0; i < g; ++i) {
            const double r = std::abs(mp.p[i].norm() - 1.0);
            if (r > s.residual) {
                s.residual = r;
                s.witness = {{"point", "p_" + std::to_string(i + 1)}};
            }
        }
        return s.residual <= tol.geom;
    });

    runner.run("marked_rank", [&](CertificateStep& s) {
        const RankInfo info = marked_rank(mp, tol.rank_rel);
        report.rank_marked = info.rank;
        s.residual = g - info.rank;
        if (info.rank != g) s.witness = {{"rank", info.rank}, {"singular_values", to_std(info.singular_values)}};
        return info.rank == g;
    });

    runner.run("fixed_points", [&](CertificateStep& s) {
        auto worse = [&](double r, json w) {
            if (r > s.residual) {
                s.residual = r;
                s.witness = std::move(w);
            }
        };
        for (int i = 0; i < g; ++i) {
            const Matrix& r = rep.rho()[i];
            worse(max_abs(Vector(r * mp.v - mp.v)), {{"rho", i + 1}, {"point", "v"}});
            worse(max_abs(Vector(r * mp.p[i] - mp.p[i])), {{"rho", i + 1}, {"point", "p_" + std::to_string(i + 1)}});
        }
        // τ_(k k+1) fixes v and swaps p_k, p_{k+1}.
        for (int k = 0; k + 1 < g; ++k) {
            const Matrix& t = rep.tau_adjacent()[k];
            const std::string label = Representation::transposition_label(k);
            worse(max_abs(Vector(t * mp.v - mp.v)), {{"tau", label}, {"point", "v"}});
            worse(max_abs(Vector(t * mp.p[k] - mp.p[k + 1])), {{"tau", label}, {"point", "p_" + std::to_string(k + 1)}});
        }
        return s.residual <= tol.geom;
    });

    SpanSplit split;
    runner.run("trivial_on_V", [&](CertificateStep& s) {
        split = split_span(mp, tol.rank_rel);
        report.dim_V = static_cast<int>(split.span.cols());
        report.dim_V_perp = static_cast<int>(split.complement.cols());
        report.trivial_on_V_residual = invariant_subspace_check(mp, rep, tol.rank_rel);
        s.residual = report.trivial_on_V_residual;
        if (!(s.residual <= tol.hom)) {
            for (int i = 0; i < g; ++i) {
                const Matrix& r = rep.rho()[i];
                if (max_abs(Matrix(r * split.span - split.span)) == s.residual) {
                    s.witness = {{"rho", i + 1}};
                    break;
                }
            }
        }
        return s.residual <= tol.hom;
    });

    std::vector<Matrix> restricted;
    runner.run("complement", [&](CertificateStep& s) {
        const Matrix& q = split.complement;
        const int n = static_cast<int>(q.cols());
        double r = max_abs(Matrix(q.transpose() * q - Matrix::Identity(n, n)));
        r = std::max(r, max_abs(Matrix(split.span.transpose() * q)));
        // V^⊥ must be invariant: ρ_i·Q = Q·(QᵀρQ).
        for (int i = 0; i < g; ++i) {
            Matrix block = q.transpose() * rep.rho()[i] * q;
            const double leak = max_abs(Matrix(rep.rho()[i] * q - q * block));
            if (leak > r) s.witness = {{"rho", i + 1}, {"reason", "V-perp not invariant"}};
            r = std::max(r, leak);
            restricted.push_back(std::move(block));
        }
        s.residual = r;
        const bool counts = report.dim_V + report.dim_V_perp == report.ambient_dim;
        if (!counts) s.witness = {{"dim_V", report.dim_V}, {"dim_V_perp", report.dim_V_perp}};
        return counts && r <= tol.hom;
    });

    Diagonalization diag;
    runner.run("diagonalize", [&](CertificateStep& s) {
        try {
            diag = simultaneous_diagonalize(restricted, tol.hom);
        } catch (const PreconditionError& ex) {
            s.residual = std::numeric_limits<double>::infinity();
            s.witness = {{"reason", ex.what()}};
            return false;
        }
        report.sign_exponents = diag.sign_exponents;
        s.residual = diag.residual;
        return diag.residual <= tol.diag;
    });

    runner.run("gf2_rank", [&](CertificateStep& s) {
        report.gf2_rank = gf2_rank(diag.sign_exponents);
        s.residual = g - report.gf2_rank;
        if (report.gf2_rank != g) {
            s.witness = {{"gf2_rank", report.gf2_rank}, {"sign_exponents", diag.sign_exponents.to_rows()}};
        }
        return report.gf2_rank == g;
    });

    runner.run("dimension_count", [&](CertificateStep& s) {
        const bool ok = report.dim_V >= g && report.dim_V_perp >= g &&
                        report.dim_V + report.dim_V_perp == report.ambient_dim && report.ambient_dim >= 2 * g;
        s.residual = 2 * g - report.ambient_dim;
        if (!ok) {
            s.witness = {{"ambient_dim", report.ambient_dim}, {"dim_V", report.dim_V}, {"dim_V_perp", report.dim_V_perp}};
        }
        return ok;
    });

    report.bound_holds = !runner.failed();
    return report;
}

inline CertificateReport certify(const EmbeddedBouquet& e, const VerifyOptions& opts = {}) {
    e.validate_shape();
    MarkedPoints mp{e.eval(GraphPoint::vertex()), {}};
    for (int i = 0; i < e.genus; ++i) mp.p.push_back(e.eval(GraphPoint::marked(i)));
    return certify_points(mp, e.representation, opts);
}

inline json to_json_value(const CertificateReport& r) {
    json steps = json::array();
    for (const auto& s : r.steps) {
        json j{{"step", s.name}, {"ran", s.ran}, {"pass", s.pass}, {"residual", s.residual}};
        if (!s.witness.is_null()) j["witness"] = s.witness;
        steps.push_back(std::move(j));
    }
    json out{{"ambient_dim", r.ambient_dim},
             {"genus", r.genus},
             {"rank_marked", r.rank_marked},
             {"dim_V", r.dim_V},
             {"dim_V_perp", r.dim_V_perp},
             {"trivial_on_V_residual", r.trivial_on_V_residual},
             {"gf2_rank", r.gf2_rank},
             {"sign_exponents", r.sign_exponents.to_rows()},
             {"bound", "n >= 2g-1"},
             {"holds", r.bound_holds},
             {"steps", steps}};
    const std::string failure = r.first_failure();
    if (!failure.empty()) out["first_failure"] = failure;
    return out;
}

}  // namespace equibouquet
