/**
 * JSON (de)serialization for complexes and pairs.
 *
 * A complex is {"name": optional string, "facets": [[v, ...], ...]} with
 * non-negative integer vertices; the complex is the downward closure of the
 * facet list, so {"facets": []} is the minimal complex {∅}. A pair is
 * {"complex": <complex>, "subcomplex": <complex>} where "subcomplex" may be
 * omitted (minimal subcomplex). A bare complex object is accepted wherever a
 * pair is expected and denotes (X, {∅}).
 *
 * All malformed input is reported as std::invalid_argument with the offending
 * path/field in the message.
 */

#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "relap/simplicial_complex.hpp"

namespace relap {

using Json = nlohmann::json;

inline Json complex_to_json(const SimplicialComplex& x, const std::string& name = "") {
    Json out = Json::object();
    if (!name.empty()) out["name"] = name;
    Json facets = Json::array();
    for (const auto& f : x.facets()) {
        if (f.dim() < 0) continue;  // the empty face is implicit
        facets.push_back(f.vertices());
    }
    out["facets"] = facets;
    return out;
}

inline Json pair_to_json(const ComplexPair& pair, const std::string& name = "") {
    Json out = Json::object();
    out["complex"] = complex_to_json(pair.complex(), name);
    out["subcomplex"] = complex_to_json(pair.subcomplex());
    return out;
}

inline SimplicialComplex complex_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("complex: expected a JSON object");
    if (!j.contains("facets"))
        throw std::invalid_argument("complex: missing \"facets\" array");
    const Json& facets = j.at("facets");
    if (!facets.is_array())
        throw std::invalid_argument("complex: \"facets\" must be an array");
    std::vector<std::vector<int>> lists;
    for (const auto& f : facets) {
        if (!f.is_array())
            throw std::invalid_argument("complex: each facet must be an array of vertices");
        std::vector<int> verts;
        for (const auto& v : f) {
            if (!v.is_number_integer() || v.get<long long>() < 0)
                throw std::invalid_argument(
                    "complex: vertices must be non-negative integers");
            verts.push_back(v.get<int>());
        }
        lists.push_back(std::move(verts));
    }
    try {
        return SimplicialComplex::from_facets(lists);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("complex: ") + e.what());
    }
}

/** Parse a pair; a bare complex object denotes (X, {∅}). */
inline ComplexPair pair_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("pair: expected a JSON object");
    if (!j.contains("complex")) {
        // bare complex
        return ComplexPair(complex_from_json(j), minimal_complex());
    }
    const SimplicialComplex x = complex_from_json(j.at("complex"));
    SimplicialComplex a = minimal_complex();
    if (j.contains("subcomplex")) a = complex_from_json(j.at("subcomplex"));
    try {
        return ComplexPair(std::move(x), std::move(a));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("pair: ") + e.what());
    }
}

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

/** Load a pair (or bare complex, read as (X, {∅})) from a JSON file. */
inline ComplexPair load_pair_or_complex(const std::string& path) {
    return pair_from_json(load_json_file(path));
}

inline void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
    out << j.dump(2) << '\n';
}

} // namespace relap
