#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

#include "pentagram/asm_matrix.hpp"
#include "pentagram/errors.hpp"
#include "pentagram/polygon.hpp"
#include "pentagram/poset.hpp"

namespace pentagram {

// Polygon JSON:
//   { "n": int, "offset": "0" | "1/2",
//     "vertices": [["p/q","p/q","p/q"], ...],   // index 1+i resp. 1/2+i
//     "monodromy": [[...],[...],[...]] }
// Rationals are written canonically; reads are tolerant of non-canonical
// input. map output wraps the polygon together with its y/x tables, and the
// reader accepts either shape.

inline nlohmann::ordered_json polygon_to_json(const TwistedPolygon& p) {
    nlohmann::ordered_json j;
    j["n"] = p.n();
    j["offset"] = p.half_indexed() ? "1/2" : "0";
    nlohmann::ordered_json verts = nlohmann::ordered_json::array();
    for (const auto& v : p.stored_vertices())
        verts.push_back({v.coord(0).str(), v.coord(1).str(), v.coord(2).str()});
    j["vertices"] = std::move(verts);
    nlohmann::ordered_json mono = nlohmann::ordered_json::array();
    for (int i = 0; i < 3; ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int c = 0; c < 3; ++c) row.push_back(p.monodromy().entry(i, c).str());
        mono.push_back(std::move(row));
    }
    j["monodromy"] = std::move(mono);
    return j;
}

inline TwistedPolygon polygon_from_json(const nlohmann::json& in) {
    const nlohmann::json& j = in.contains("polygon") ? in.at("polygon") : in;
    if (!j.contains("n") || !j.contains("offset") || !j.contains("vertices") ||
        !j.contains("monodromy"))
        throw input_error("polygon JSON needs n, offset, vertices, monodromy");
    int n = j.at("n").get<int>();
    std::string offset = j.at("offset").get<std::string>();
    if (offset != "0" && offset != "1/2")
        throw input_error("polygon offset must be \"0\" or \"1/2\"");
    const auto& verts = j.at("vertices");
    if (static_cast<int>(verts.size()) != n)
        throw input_error("polygon JSON: vertex count does not match n");
    std::vector<HPoint> pts;
    pts.reserve(verts.size());
    for (const auto& v : verts) {
        if (v.size() != 3) throw input_error("vertex must be a homogeneous triple");
        pts.emplace_back(Rat::parse(v.at(0).get<std::string>()),
                         Rat::parse(v.at(1).get<std::string>()),
                         Rat::parse(v.at(2).get<std::string>()));
    }
    const auto& mono = j.at("monodromy");
    if (mono.size() != 3) throw input_error("monodromy must be a 3x3 matrix");
    std::array<std::array<Rat, 3>, 3> m;
    for (int i = 0; i < 3; ++i) {
        if (mono.at(static_cast<std::size_t>(i)).size() != 3)
            throw input_error("monodromy must be a 3x3 matrix");
        for (int c = 0; c < 3; ++c)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = Rat::parse(
                mono.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(c)).get<std::string>());
    }
    return TwistedPolygon(std::move(pts), ProjMap(m), offset == "1/2");
}

inline nlohmann::ordered_json rat_list_to_json(const std::vector<Rat>& v) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& r : v) out.push_back(r.str());
    return out;
}

// Order ideals embed into reports as sorted triple lists, ASMs as row
// arrays of -1/0/1.

inline nlohmann::ordered_json ideal_to_json(std::vector<PosetElem> ideal) {
    std::sort(ideal.begin(), ideal.end());
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& e : ideal) out.push_back({e.r, e.s, e.t});
    return out;
}

inline std::vector<PosetElem> ideal_from_json(const nlohmann::json& j) {
    std::vector<PosetElem> out;
    for (const auto& triple : j) {
        if (triple.size() != 3) throw input_error("ideal element must be a triple");
        out.push_back({triple.at(0).get<int>(), triple.at(1).get<int>(), triple.at(2).get<int>()});
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline nlohmann::ordered_json asm_to_json(const AsmMatrix& m) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (int i = 0; i < m.k; ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < m.k; ++j) row.push_back(m.at(i, j));
        out.push_back(std::move(row));
    }
    return out;
}

inline AsmMatrix asm_from_json(const nlohmann::json& j) {
    std::vector<std::vector<int>> rows;
    for (const auto& row : j) rows.push_back(row.get<std::vector<int>>());
    AsmMatrix m = AsmMatrix::from_rows(rows);
    if (!is_asm(m)) throw input_error("matrix is not an alternating sign matrix");
    return m;
}

} // namespace pentagram
