/**
 * @file verify.hpp
 * @brief Numerical checks that an embedded bouquet is an equivariant embedding:
 * the representation lands in the orthogonal group, is a faithful homomorphism,
 * commutes with the embedding map, and the circles meet only at the vertex.
 *
 * Every check returns a CheckReport with pass ⇔ residual ≤ tolerance. Checks
 * that measure a separation (injectivity, faithfulness) report the negated
 * separation against the negated threshold, so the same rule holds.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "equibouquet/embedding.hpp"
#include "equibouquet/jsonio.hpp"
#include "equibouquet/theta.hpp"

namespace equibouquet {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

struct VerifyOptions {
    Tolerances tol;
    int samples = 256;           ///< angle-grid points per circle
    std::uint64_t seed = kDefaultSeed;
    int random_products = 100;   ///< random elements tested for orthogonality
    int random_pairs = 10000;    ///< pairs tested for the homomorphism when g > 4
    int exhaustive_genus = 4;    ///< homomorphism tested on all pairs up to this genus
    int faithful_exhaustive_genus = 6;
};

struct CheckReport {
    std::string check;
    bool pass = true;
    bool applicable = true;
    double residual = 0.0;
    double tolerance = 0.0;
    json witness;  ///< null when passing
    std::string note;
};

inline json to_json_value(const CheckReport& r) {
    json j = {{"check", r.check}, {"pass", r.pass}, {"residual", r.residual}, {"witness", r.witness}};
    j["tolerance"] = r.tolerance;
    if (!r.applicable) j["skipped"] = true;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline json to_json_value(const std::vector<CheckReport>& reports) {
    json out = json::array();
    for (const auto& r : reports) out.push_back(to_json_value(r));
    return out;
}

inline bool all_pass(const std::vector<CheckReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return !r.applicable || r.pass; });
}

namespace detail {

/// Tracks the worst residual and the input that produced it.
struct Worst {
    double value = 0.0;
    json witness;
    void offer(double v, const auto& make_witness) {
        if (v > value || (std::isnan(v) && !std::isnan(value))) {
            value = v;
            witness = make_witness();
        }
    }
};

inline CheckReport finish(std::string name, const Worst& worst, double tol) {
    CheckReport r;
    r.check = std::move(name);
    r.residual = worst.value;
    r.tolerance = tol;
    r.pass = worst.value <= tol;  // NaN fails
    if (!r.pass) r.witness = worst.witness;
    return r;
}

inline std::vector<GraphPoint> sample_points(int genus, int samples) {
    std::vector<GraphPoint> pts{GraphPoint::vertex()};
    for (int i = 0; i < genus; ++i) {
        for (int k = 1; k < samples; ++k) pts.push_back(GraphPoint::on_circle(i, kTwoPi * k / samples));
    }
    return pts;
}

}  // namespace detail

inline CheckReport check_orthogonality(const Representation& rep, const VerifyOptions& opts = {}) {
    detail::Worst worst;
    for (const auto& [label, m] : rep.generator_matrices()) {
        worst.offer(orthogonality_residual(m), [&] { return json{{"generator", label}}; });
    }
    std::mt19937_64 rng(opts.seed);
    for (int k = 0; k < opts.random_products; ++k) {
        const GroupElement h = random_element(rep.genus(), rng);
        worst.offer(orthogonality_residual(rep.matrix_of(h)), [&] { return json{{"element", to_json_value(h)}}; });
    }
    return detail::finish("orthogonality", worst, opts.tol.orth);
}

inline CheckReport check_homomorphism(const Representation& rep, const VerifyOptions& opts = {}) {
    detail::Worst worst;
    auto test_pair = [&](const GroupElement& a, const Matrix& ma, const GroupElement& b, const Matrix& mb,
                         const Matrix& mab) {
        worst.offer(max_abs(Matrix(mab - ma * mb)),
                    [&] { return json{{"a", to_json_value(a)}, {"b", to_json_value(b)}}; });
    };
    const int g = rep.genus();
    if (g <= opts.exhaustive_genus) {
        const std::vector<GroupElement> elems = enumerate(g);
        std::map<GroupElement, std::size_t> index;
        std::vector<Matrix> mats;
        for (std::size_t k = 0; k < elems.size(); ++k) {
            index.emplace(elems[k], k);
            mats.push_back(rep.matrix_of(elems[k]));
        }
        for (std::size_t a = 0; a < elems.size(); ++a) {
            for (std::size_t b = 0; b < elems.size(); ++b) {
                test_pair(elems[a], mats[a], elems[b], mats[b], mats[index.at(compose(elems[a], elems[b]))]);
            }
        }
    } else {
        std::mt19937_64 rng(opts.seed);
        for (int k = 0; k < opts.random_pairs; ++k) {
            const GroupElement a = random_element(g, rng);
            const GroupElement b = random_element(g, rng);
            test_pair(a, rep.matrix_of(a), b, rep.matrix_of(b), rep.matrix_of(compose(a, b)));
        }
    }
    return detail::finish("homomorphism", worst, opts.tol.hom);
}

/// max |M_h·e(x) − e(h·x)|∞ over the generators (or every element when
/// `all_elements` is set) and the angle grid.
inline CheckReport check_equivariance(const EmbeddedBouquet& e, const VerifyOptions& opts = {},
                                      bool all_elements = false) {
    std::vector<std::pair<std::string, GroupElement>> elems;
    if (all_elements) {
        for (auto& h : enumerate(e.genus)) elems.emplace_back(std::string(), std::move(h));
    } else {
        elems = e.representation.generator_elements();
    }
    const std::vector<GraphPoint> pts = detail::sample_points(e.genus, opts.samples);
    std::vector<Vector> images;
    images.reserve(pts.size());
    for (const auto& x : pts) images.push_back(e.eval(x));

    detail::Worst worst;
    for (const auto& [label, h] : elems) {
        const Matrix m = e.representation.matrix_of(h);
        for (std::size_t k = 0; k < pts.size(); ++k) {
            const double r = max_abs(Vector(m * images[k] - e.eval(act(h, pts[k]))));
            worst.offer(r, [&] {
                json w{{"element", to_json_value(h)}, {"point", to_json_value(pts[k])}};
                if (!label.empty()) w["generator"] = label;
                return w;
            });
        }
    }
    return detail::finish("equivariance", worst, opts.tol.geom);
}

/// Wedge structure and injectivity: all circles start at one vertex, each
/// parametrization is a nondegenerate round circle, and distinct circles stay
/// at least `min_margin` apart outside the exclusion arc around the vertex.
inline CheckReport check_injectivity(const EmbeddedBouquet& e, const VerifyOptions& opts = {}) {
    CheckReport r;
    r.check = "injectivity";
    r.tolerance = -opts.tol.min_margin;
    auto fail = [&](double defect, json witness) {
        r.pass = false;
        r.residual = defect;
        r.witness = std::move(witness);
        return r;
    };

    const Vector vertex = e.eval_circle(0, 0.0);
    for (int i = 1; i < e.genus; ++i) {
        const double d = max_abs(Vector(e.eval_circle(i, 0.0) - vertex));
        if (!(d <= opts.tol.geom)) return fail(d, {{"reason", "circle misses the vertex"}, {"circle", i + 1}});
    }
    for (int i = 0; i < e.genus; ++i) {
        const auto& c = e.circles[static_cast<std::size_t>(i)];
        const double nu = c.axis_u.norm(), nw = c.axis_w.norm();
        const double defect = std::max(std::abs(nu - nw), std::abs(c.axis_u.dot(c.axis_w)));
        if (!(nu > opts.tol.min_margin) || !(defect <= opts.tol.orth)) {
            return fail(std::max(defect, opts.tol.min_margin - nu),
                        {{"reason", "degenerate or non-round circle"}, {"circle", i + 1}});
        }
    }

    const double lo = opts.tol.exclusion, hi = kTwoPi - opts.tol.exclusion;
    const int n = std::max(opts.samples, 2);
    std::vector<std::vector<Vector>> grid(static_cast<std::size_t>(e.genus));
    for (int i = 0; i < e.genus; ++i) {
        for (int k = 0; k < n; ++k) grid[i].push_back(e.eval_circle(i, lo + (hi - lo) * k / (n - 1)));
    }
    double margin = std::numeric_limits<double>::infinity();
    json witness;
    for (int i = 0; i < e.genus; ++i) {
        for (int j = i + 1; j < e.genus; ++j) {
            for (int a = 0; a < n; ++a) {
                for (int b = 0; b < n; ++b) {
                    const double d = max_abs(Vector(grid[i][a] - grid[j][b]));
                    if (d < margin) {
                        margin = d;
                        witness = {{"circles", {i + 1, j + 1}},
                                   {"angles", {lo + (hi - lo) * a / (n - 1), lo + (hi - lo) * b / (n - 1)}}};
                    }
                }
            }
        }
    }
    if (e.genus < 2) margin = std::numeric_limits<double>::max();
    r.residual = -margin;
    r.pass = r.residual <= r.tolerance;
    if (!r.pass) r.witness = witness;
    return r;
}

inline CheckReport check_on_sphere(const EmbeddedBouquet& e, const VerifyOptions& opts = {}) {
    detail::Worst worst;
    for (const auto& x : detail::sample_points(e.genus, opts.samples)) {
        worst.offer(std::abs(e.eval(x).norm() - 1.0), [&] { return json{{"point", to_json_value(x)}}; });
    }
    return detail::finish("on_sphere", worst, opts.tol.geom);
}

inline CheckReport check_faithful(const Representation& rep, const VerifyOptions& opts = {}) {
    const int g = rep.genus();
    double closest = std::numeric_limits<double>::infinity();
    json witness;
    auto consider = [&](const GroupElement& h) {
        if (h.is_identity()) return;
        const Matrix m = rep.matrix_of(h);
        const double d = max_abs(Matrix(m - Matrix::Identity(m.rows(), m.cols())));
        if (d < closest) {
            closest = d;
            witness = {{"element", to_json_value(h)}};
        }
    };
    CheckReport r;
    r.check = "faithful";
    if (g <= opts.faithful_exhaustive_genus) {
        for (const auto& h : enumerate(g)) consider(h);
    } else {
        std::mt19937_64 rng(opts.seed);
        for (const auto& [label, h] : rep.generator_elements()) consider(h);
        for (int k = 0; k < opts.random_pairs; ++k) consider(random_element(g, rng));
        r.note = "sampled: genus too large for exhaustive enumeration";
    }
    r.residual = -closest;
    r.tolerance = -opts.tol.hom;
    r.pass = r.residual < r.tolerance;
    if (!r.pass) r.witness = witness;
    return r;
}

/// Runs every applicable check. The sphere check is skipped for a Euclidean
/// embedding whose vertex sits at the origin.
inline std::vector<CheckReport> verify_all(const EmbeddedBouquet& e, const VerifyOptions& opts = {}) {
    try {
        e.validate_shape();
    } catch (const std::exception& ex) {
        CheckReport r;
        r.check = "shape";
        r.pass = false;
        r.residual = std::numeric_limits<double>::infinity();
        r.witness = {{"reason", ex.what()}};
        return {r};
    }
    std::vector<CheckReport> out;
    out.push_back(check_orthogonality(e.representation, opts));
    out.push_back(check_homomorphism(e.representation, opts));
    out.push_back(check_faithful(e.representation, opts));
    out.push_back(check_equivariance(e, opts));
    out.push_back(check_injectivity(e, opts));
    if (e.post_map == PostMap::none && e.eval(GraphPoint::vertex()).norm() <= opts.tol.geom) {
        CheckReport r;
        r.check = "on_sphere";
        r.applicable = false;
        r.note = "euclidean embedding with vertex at the origin";
        out.push_back(r);
    } else {
        out.push_back(check_on_sphere(e, opts));
    }
    return out;
}

/// The same suite for the theta graph: every abstract element is tested, since
/// the group has only 12 elements.
inline std::vector<CheckReport> verify_theta(const ThetaEmbedding& e, const VerifyOptions& opts = {}) {
    std::vector<CheckReport> out;
    {
        detail::Worst worst;
        for (std::size_t k = 0; k < e.generators.size(); ++k) {
            worst.offer(orthogonality_residual(e.generators[k].second), [&] { return json{{"generator", k + 1}}; });
        }
        out.push_back(detail::finish("orthogonality", worst, opts.tol.orth));
    }
    const ThetaClosure closure = close_theta_group(e);
    {
        detail::Worst worst;
        worst.offer(closure.consistency, [] { return json{{"reason", "two words for one element disagree"}}; });
        CheckReport r = detail::finish("homomorphism", worst, opts.tol.hom);
        if (closure.matrices.size() != enumerate_theta_group().size()) {
            r.pass = false;
            r.witness = {{"reason", "generators do not reach the whole group"}, {"reached", closure.matrices.size()}};
        }
        out.push_back(r);
    }
    {
        CheckReport r;
        r.check = "group_order";
        const int distinct = count_generated_matrices(e, opts.tol.hom);
        r.residual = std::abs(distinct - 12);
        r.pass = distinct == 12;
        r.note = std::to_string(distinct) + " distinct matrices";
        if (!r.pass) r.witness = {{"distinct_matrices", distinct}};
        out.push_back(r);
    }
    {
        double closest = std::numeric_limits<double>::infinity();
        for (auto a = closure.matrices.begin(); a != closure.matrices.end(); ++a) {
            for (auto b = std::next(a); b != closure.matrices.end(); ++b) {
                closest = std::min(closest, max_abs(Matrix(a->second - b->second)));
            }
        }
        CheckReport r;
        r.check = "faithful";
        r.residual = -closest;
        r.tolerance = -opts.tol.hom;
        r.pass = r.residual < r.tolerance;
        out.push_back(r);
    }
    std::vector<ThetaPoint> pts{ThetaPoint::vertex(0), ThetaPoint::vertex(1)};
    for (int edge = 0; edge < kThetaEdges; ++edge) {
        for (int k = 1; k < opts.samples; ++k) pts.push_back(ThetaPoint::on_edge(edge, double(k) / opts.samples));
    }
    {
        detail::Worst worst;
        for (const auto& [h, m] : closure.matrices) {
            for (const auto& x : pts) {
                worst.offer(max_abs(Vector(m * e.eval(x) - e.eval(act(h, x)))), [&] {
                    return json{{"perm", h.perm.one_based()}, {"flip", h.flip}};
                });
            }
        }
        out.push_back(detail::finish("equivariance", worst, opts.tol.geom));
    }
    {
        const double pad = opts.tol.exclusion / std::numbers::pi;
        double margin = std::numeric_limits<double>::infinity();
        const int n = std::max(opts.samples, 2);
        for (int a = 0; a < kThetaEdges; ++a) {
            for (int b = a + 1; b < kThetaEdges; ++b) {
                for (int s = 0; s < n; ++s) {
                    for (int t = 0; t < n; ++t) {
                        const double ts = pad + (1 - 2 * pad) * s / (n - 1), tt = pad + (1 - 2 * pad) * t / (n - 1);
                        margin = std::min(margin, max_abs(Vector(e.eval(ThetaPoint::on_edge(a, ts)) -
                                                                 e.eval(ThetaPoint::on_edge(b, tt)))));
                    }
                }
            }
        }
        CheckReport r;
        r.check = "injectivity";
        r.residual = -margin;
        r.tolerance = -opts.tol.min_margin;
        r.pass = r.residual <= r.tolerance;
        out.push_back(r);
    }
    {
        detail::Worst worst;
        for (const auto& x : pts) worst.offer(std::abs(e.eval(x).norm() - 1.0), [] { return json(); });
        out.push_back(detail::finish("on_sphere", worst, opts.tol.geom));
    }
    return out;
}

}  // namespace equibouquet
