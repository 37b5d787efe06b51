#include "hilbtaut/ringmodel.hpp"

#include <json.hpp>

namespace hilbtaut {

namespace {

using nlohmann::json;

json dims_to_json(const GradedDim& g) {
    json j = json::object();
    for (const auto& [d, m] : g.entries()) j[std::to_string(d)] = m;
    return j;
}

GradedDim dims_from_json(const json& j, const char* field) {
    if (!j.is_object()) throw ConfigError(std::string("surface: '") + field + "' must be an object");
    GradedDim g;
    for (auto it = j.begin(); it != j.end(); ++it) {
        int d;
        try {
            d = std::stoi(it.key());
        } catch (...) {
            throw ConfigError(std::string("surface: bad degree key '") + it.key() + "' in " + field);
        }
        if (!it.value().is_number_integer() || it.value().get<long long>() < 0)
            throw ConfigError(std::string("surface: multiplicities in '") + field +
                              "' must be nonnegative integers");
        g.set(d, static_cast<Int>(it.value().get<long long>()));
    }
    return g;
}

json pairing_to_json(const Pairing& p) {
    json j;
    j["a_degrees"] = p.a.degrees;
    j["b_degrees"] = p.b.degrees;
    j["c_degrees"] = p.c.degrees;
    json quads = json::array();
    for (int i = 0; i < p.a.dim(); ++i)
        for (int jj = 0; jj < p.b.dim(); ++jj)
            for (const auto& [k, coef] : p.table[i][jj]) {
                Rat c = coef;
                c.canonicalize();
                quads.push_back(json::array({i, jj, k, c.get_str()}));
            }
    j["entries"] = quads;
    return j;
}

Pairing pairing_from_json(const json& j) {
    Pairing p;
    p.a.degrees = j.at("a_degrees").get<std::vector<int>>();
    p.b.degrees = j.at("b_degrees").get<std::vector<int>>();
    p.c.degrees = j.at("c_degrees").get<std::vector<int>>();
    p.table.assign(p.a.dim(), std::vector<std::vector<std::pair<int, Rat>>>(p.b.dim()));
    for (const auto& q : j.at("entries")) {
        if (!q.is_array() || q.size() != 4) throw ConfigError("pairing entries must be [i,j,k,\"p/q\"]");
        int i = q[0].get<int>(), jj = q[1].get<int>(), k = q[2].get<int>();
        if (i < 0 || i >= p.a.dim() || jj < 0 || jj >= p.b.dim() || k < 0 || k >= p.c.dim())
            throw ConfigError("pairing entry index out of range");
        Rat c(q[3].get<std::string>());
        c.canonicalize();
        p.table[i][jj].emplace_back(k, c);
    }
    p.validate_degrees();
    return p;
}

}  // namespace

std::string surface_to_json(const SurfaceData& s) {
    json j;
    j["name"] = s.name;
    j["internal_grading"] = s.internal_grading;
    j["h_O"] = dims_to_json(s.h_O);
    j["h_L"] = dims_to_json(s.h_L);
    j["h_L2"] = dims_to_json(s.h_L2);
    j["h_A"] = dims_to_json(s.h_A);
    j["h_LA"] = dims_to_json(s.h_LA);
    j["h_L2A"] = dims_to_json(s.h_L2A);
    j["h_L2A2"] = dims_to_json(s.h_L2A2);
    if (s.pair_L2A_A) j["pair_L2A_A"] = pairing_to_json(*s.pair_L2A_A);
    if (s.pair_LA_LA) j["pair_LA_LA"] = pairing_to_json(*s.pair_LA_LA);
    return j.dump(2);
}

SurfaceData surface_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("surface JSON parse error: ") + e.what());
    }
    SurfaceData s;
    s.name = j.value("name", "formal");
    s.internal_grading = j.value("internal_grading", false);
    s.h_O = dims_from_json(j.at("h_O"), "h_O");
    s.h_L = dims_from_json(j.at("h_L"), "h_L");
    s.h_L2 = dims_from_json(j.at("h_L2"), "h_L2");
    s.h_A = dims_from_json(j.at("h_A"), "h_A");
    s.h_LA = dims_from_json(j.at("h_LA"), "h_LA");
    s.h_L2A = dims_from_json(j.at("h_L2A"), "h_L2A");
    s.h_L2A2 = dims_from_json(j.at("h_L2A2"), "h_L2A2");
    if (j.contains("pair_L2A_A")) s.pair_L2A_A = pairing_from_json(j["pair_L2A_A"]);
    if (j.contains("pair_LA_LA")) s.pair_LA_LA = pairing_from_json(j["pair_LA_LA"]);
    return s;
}

}  // namespace hilbtaut
