#pragma once

#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "equibouquet/embedding.hpp"
#include "equibouquet/jsonio.hpp"
#include "equibouquet/theta.hpp"

namespace equibouquet {

/// Sampled curve for plotting; closed curves repeat no point.
struct Polyline {
    std::vector<double> params;
    std::vector<Vector> points;
    bool closed = true;
};

/// Circle i sampled at θ_k = 2πk/samples, k = 0..samples-1 (k = 0 is the vertex).
inline std::vector<Polyline> sample_bouquet(const EmbeddedBouquet& e, int samples) {
    std::vector<Polyline> out;
    for (int i = 0; i < e.genus; ++i) {
        Polyline line;
        for (int k = 0; k < samples; ++k) {
            const double theta = kTwoPi * k / samples;
            line.params.push_back(theta);
            line.points.push_back(e.eval_circle(i, theta));
        }
        out.push_back(std::move(line));
    }
    return out;
}

/// Edge j sampled at t_k = k/(samples-1), endpoints included.
inline std::vector<Polyline> sample_theta(const ThetaEmbedding& e, int samples) {
    std::vector<Polyline> out;
    for (int edge = 0; edge < kThetaEdges; ++edge) {
        Polyline line;
        line.closed = false;
        for (int k = 0; k < samples; ++k) {
            const double t = samples > 1 ? double(k) / (samples - 1) : 0.0;
            line.params.push_back(t);
            line.points.push_back(e.eval(ThetaPoint::on_edge(edge, t)));
        }
        out.push_back(std::move(line));
    }
    return out;
}

/// OFF for 3-dimensional data, nOFF otherwise; one face per polyline.
inline std::string to_off(const std::vector<Polyline>& lines) {
    std::ostringstream os;
    os << std::setprecision(std::numeric_limits<double>::max_digits10);
    const Eigen::Index dim = lines.empty() || lines.front().points.empty() ? 3 : lines.front().points.front().size();
    std::size_t nv = 0;
    for (const auto& l : lines) nv += l.points.size();
    if (dim == 3) {
        os << "OFF\n";
    } else {
        os << "nOFF\n" << dim << "\n";
    }
    os << nv << ' ' << lines.size() << " 0\n";
    for (const auto& l : lines) {
        for (const auto& p : l.points) {
            for (Eigen::Index c = 0; c < p.size(); ++c) os << (c ? " " : "") << p(c);
            os << '\n';
        }
    }
    std::size_t base = 0;
    for (const auto& l : lines) {
        os << l.points.size();
        for (std::size_t k = 0; k < l.points.size(); ++k) os << ' ' << base + k;
        os << '\n';
        base += l.points.size();
    }
    return os.str();
}

/// Header `curve,k,param,x1,...,xm`, curves 1-based.
inline std::string to_csv(const std::vector<Polyline>& lines) {
    std::ostringstream os;
    os << std::setprecision(std::numeric_limits<double>::max_digits10);
    const Eigen::Index dim = lines.empty() || lines.front().points.empty() ? 0 : lines.front().points.front().size();
    os << "curve,k,param";
    for (Eigen::Index c = 0; c < dim; ++c) os << ",x" << c + 1;
    os << '\n';
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t k = 0; k < lines[i].points.size(); ++k) {
            os << i + 1 << ',' << k << ',' << lines[i].params[k];
            for (Eigen::Index c = 0; c < dim; ++c) os << ',' << lines[i].points[k](c);
            os << '\n';
        }
    }
    return os.str();
}

inline json polylines_to_json(const std::vector<Polyline>& lines) {
    json out = json::array();
    for (const auto& l : lines) {
        json pts = json::array();
        for (const auto& p : l.points) pts.push_back(to_std(p));
        out.push_back({{"closed", l.closed}, {"params", l.params}, {"points", pts}});
    }
    return {{"polylines", out}};
}

}  // namespace equibouquet
