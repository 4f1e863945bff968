/**
 * @file jsonio.hpp
 * @brief JSON forms of group elements, graph points, matrices and embeddings.
 *
 * Matrices are flat row-major arrays. Doubles are written in the shortest form
 * that parses back to the identical bit pattern, so write → read is exact.
 */
#pragma once

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "equibouquet/embedding.hpp"
#include "equibouquet/errors.hpp"
#include "equibouquet/theta.hpp"

namespace equibouquet {

using json = nlohmann::json;

inline json to_json_value(const GroupElement& h) {
    json signs = json::array();
    for (auto s : h.signs()) signs.push_back(static_cast<int>(s));
    return {{"signs", signs}, {"perm", h.perm().one_based()}};
}

inline GroupElement group_element_from_json(const json& j) {
    try {
        std::vector<std::uint8_t> signs;
        for (const auto& s : j.at("signs")) {
            const int bit = s.get<int>();
            if (bit != 0 && bit != 1) throw ParseError("signs must be 0 or 1");
            signs.push_back(static_cast<std::uint8_t>(bit));
        }
        return {std::move(signs), Permutation::from_one_based(j.at("perm").get<std::vector<int>>())};
    } catch (const json::exception& ex) {
        throw ParseError(std::string("group element: ") + ex.what());
    } catch (const std::invalid_argument& ex) {
        throw ParseError(std::string("group element: ") + ex.what());
    } catch (const std::domain_error& ex) {
        throw ParseError(std::string("group element: ") + ex.what());
    }
}

inline json to_json_value(const GraphPoint& x) {
    if (x.is_vertex()) return "vertex";
    return {{"circle", x.circle() + 1}, {"angle", x.angle()}};
}

inline json to_json_value(const Vector& v) { return to_std(v); }

inline json to_json_value(const Matrix& m) {
    json flat = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) flat.push_back(m(r, c));
    }
    return flat;
}

inline Vector vector_from_json(const json& j, int expected) {
    if (!j.is_array() || static_cast<int>(j.size()) != expected) {
        throw ParseError("expected a numeric array of length " + std::to_string(expected));
    }
    Vector v(expected);
    for (int k = 0; k < expected; ++k) {
        if (!j[k].is_number()) throw ParseError("non-numeric vector entry");
        v(k) = j[k].get<double>();
    }
    return v;
}

inline Matrix matrix_from_json(const json& j, int dim) {
    const Vector flat = vector_from_json(j, dim * dim);
    Matrix m(dim, dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) m(r, c) = flat(r * dim + c);
    }
    return m;
}

inline json to_json_value(const EmbeddedBouquet& e) {
    json circles = json::array();
    for (const auto& c : e.circles) {
        circles.push_back({{"center", to_json_value(c.center)},
                           {"axis_u", to_json_value(c.axis_u)},
                           {"axis_w", to_json_value(c.axis_w)}});
    }
    json rho = json::array();
    for (const auto& m : e.representation.rho()) rho.push_back(to_json_value(m));
    json tau = json::object();
    for (int k = 0; k + 1 < e.genus; ++k) {
        tau[Representation::transposition_label(k)] = to_json_value(e.representation.tau_adjacent()[k]);
    }
    return {{"genus", e.genus},
            {"ambient_dim", e.ambient_dim},
            {"post_map", to_string(e.post_map)},
            {"circles", circles},
            {"representation", {{"rho", rho}, {"tau_generators", tau}}}};
}

inline EmbeddedBouquet bouquet_from_json(const json& j) {
    try {
        EmbeddedBouquet e;
        e.genus = j.at("genus").get<int>();
        e.ambient_dim = j.at("ambient_dim").get<int>();
        if (e.genus < 1 || e.ambient_dim < 1) throw ParseError("genus and ambient_dim must be positive");
        const std::string post = j.value("post_map", std::string("none"));
        if (post == "none") {
            e.post_map = PostMap::none;
        } else if (post == "inverse_stereographic") {
            e.post_map = PostMap::inverse_stereographic;
        } else {
            throw ParseError("unknown post_map '" + post + "'");
        }
        const int cdim = e.circle_dim();
        if (cdim < 1) throw ParseError("ambient_dim too small for the post map");
        const json& circles = j.at("circles");
        if (!circles.is_array() || static_cast<int>(circles.size()) != e.genus) {
            throw ParseError("circles must list exactly genus entries");
        }
        for (const auto& c : circles) {
            e.circles.push_back({vector_from_json(c.at("center"), cdim), vector_from_json(c.at("axis_u"), cdim),
                                 vector_from_json(c.at("axis_w"), cdim)});
        }
        const json& rep = j.at("representation");
        const json& rho_json = rep.at("rho");
        if (!rho_json.is_array() || static_cast<int>(rho_json.size()) != e.genus) {
            throw ParseError("representation.rho must list exactly genus matrices");
        }
        std::vector<Matrix> rho;
        for (const auto& m : rho_json) rho.push_back(matrix_from_json(m, e.ambient_dim));
        std::vector<Matrix> tau;
        const json& tau_json = rep.at("tau_generators");
        for (int k = 0; k + 1 < e.genus; ++k) {
            const std::string label = Representation::transposition_label(k);
            if (!tau_json.contains(label)) throw ParseError("missing tau generator " + label);
            tau.push_back(matrix_from_json(tau_json.at(label), e.ambient_dim));
        }
        e.representation = Representation(e.genus, e.ambient_dim, std::move(rho), std::move(tau));
        return e;
    } catch (const json::exception& ex) {
        throw ParseError(std::string("embedding: ") + ex.what());
    } catch (const std::invalid_argument& ex) {
        throw ParseError(std::string("embedding: ") + ex.what());
    } catch (const std::domain_error& ex) {
        throw ParseError(std::string("embedding: ") + ex.what());
    }
}

inline json to_json_value(const ThetaEmbedding& e) {
    json gens = json::array();
    for (const auto& [h, m] : e.generators) {
        gens.push_back({{"perm", h.perm.one_based()}, {"flip", h.flip}, {"matrix", to_json_value(m)}});
    }
    return {{"graph", "theta"}, {"ambient_dim", 3}, {"longitudes", e.longitudes}, {"generators", gens}};
}

inline ThetaEmbedding theta_from_json(const json& j) {
    try {
        ThetaEmbedding e;
        e.longitudes = j.at("longitudes").get<std::vector<double>>();
        if (e.longitudes.size() != kThetaEdges) throw ParseError("theta graph needs three longitudes");
        for (const auto& g : j.at("generators")) {
            ThetaElement h{Permutation::from_one_based(g.at("perm").get<std::vector<int>>()), g.at("flip").get<bool>()};
            if (h.perm.size() != kThetaEdges) throw ParseError("theta permutation must act on three edges");
            e.generators.emplace_back(std::move(h), matrix_from_json(g.at("matrix"), 3));
        }
        return e;
    } catch (const json::exception& ex) {
        throw ParseError(std::string("theta embedding: ") + ex.what());
    } catch (const std::domain_error& ex) {
        throw ParseError(std::string("theta embedding: ") + ex.what());
    }
}

inline bool is_theta_document(const json& j) { return j.is_object() && j.value("graph", std::string()) == "theta"; }

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& ex) {
        throw ParseError(path + ": " + ex.what());
    }
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace equibouquet
