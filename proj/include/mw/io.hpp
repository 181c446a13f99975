#pragma once

// File formats: triangulation files (dim/top_count/gluings) and simplicial
// facet lists (vertex_count/facets), both as structured JSON text.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "mw/builders.hpp"
#include "mw/delta_complex.hpp"

namespace mw {

inline nlohmann::json complex_to_json(const DeltaComplex& x) {
    nlohmann::json j;
    if (!x.name().empty()) j["name"] = x.name();
    j["dim"] = x.dim();
    j["top_count"] = x.top_count();
    nlohmann::json gl = nlohmann::json::array();
    for (const GluingPair& g : x.gluing_pairs())
        gl.push_back({{g.a.top, g.a.face}, {g.b.top, g.b.face}});
    j["gluings"] = std::move(gl);
    return j;
}

inline DeltaComplex complex_from_json(const nlohmann::json& j) {
    try {
        const int dim = j.at("dim").get<int>();
        const int top_count = j.at("top_count").get<int>();
        std::vector<GluingPair> gl;
        for (const auto& e : j.at("gluings")) {
            if (!e.is_array() || e.size() != 2 || e[0].size() != 2 || e[1].size() != 2)
                throw input_error("gluing entries must be [[t,i],[t',i']]");
            gl.push_back({{e[0][0].get<int>(), e[0][1].get<int>()},
                          {e[1][0].get<int>(), e[1][1].get<int>()}});
        }
        std::string name = j.value("name", std::string());
        return build_complex(dim, top_count, gl, std::move(name));
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("malformed triangulation file: ") + e.what());
    }
}

inline FacetList facet_list_from_json(const nlohmann::json& j) {
    try {
        FacetList fl;
        fl.vertex_count = j.at("vertex_count").get<int>();
        for (const auto& f : j.at("facets"))
            fl.facets.push_back(f.get<std::vector<int>>());
        return fl;
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("malformed facet list file: ") + e.what());
    }
}

inline nlohmann::json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error("cannot parse " + path + ": " + e.what());
    }
    return j;
}

/// Load either file flavor: triangulation (has "gluings") or facet list
/// (has "facets").
inline DeltaComplex load_complex_file(const std::string& path) {
    nlohmann::json j = parse_json_file(path);
    if (j.contains("gluings")) return complex_from_json(j);
    if (j.contains("facets")) {
        DeltaComplex x = from_facet_list(facet_list_from_json(j));
        if (x.name().empty() && j.contains("name")) x.set_name(j["name"].get<std::string>());
        return x;
    }
    throw input_error("file " + path + " has neither 'gluings' nor 'facets'");
}

inline void save_complex_file(const DeltaComplex& x, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write file: " + path);
    out << complex_to_json(x).dump(1) << "\n";
}

}  // namespace mw
