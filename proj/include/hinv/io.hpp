#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hinv/bivector.hpp"
#include "hinv/constraints.hpp"
#include "hinv/heisenberg.hpp"
#include "hinv/parse.hpp"

namespace hinv {

using nlohmann::json;

// Bivector <-> {"n": int, "params": [...], "entries": [{"i","j","poly"}...]}
// with i < j only; omitted entries are zero.
inline json bivector_to_json(const Bivector& B) {
    json j;
    j["n"] = B.n();
    j["params"] = B.space().params();
    json entries = json::array();
    for (const auto& [ij, p] : B.upper_entries())
        entries.push_back({{"i", ij.first}, {"j", ij.second}, {"poly", p.str()}});
    j["entries"] = std::move(entries);
    return j;
}

inline Bivector bivector_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n"))
        throw std::invalid_argument("bivector JSON: expected object with \"n\"");
    int n = j.at("n").get<int>();
    std::vector<std::string> params;
    if (j.contains("params")) params = j.at("params").get<std::vector<std::string>>();
    VarSpace vs(n, std::move(params));
    Bivector B(vs);
    if (j.contains("entries")) {
        for (const auto& e : j.at("entries")) {
            int i = e.at("i").get<int>();
            int k = e.at("j").get<int>();
            if (i >= k) throw std::invalid_argument("bivector JSON: entries need i < j");
            B.set_entry(i, k, parse_poly(e.at("poly").get<std::string>(), vs));
        }
    }
    return B;
}

// ConstraintSystem <-> {"params": [...], "polys": ["..."]}
inline json constraints_to_json(const ConstraintSystem& S) {
    json j;
    j["params"] = S.params();
    json polys = json::array();
    for (const auto& p : S.polys) polys.push_back(p.str());
    j["polys"] = std::move(polys);
    return j;
}

inline ConstraintSystem constraints_from_json(const json& j) {
    if (!j.is_object() || !j.contains("params"))
        throw std::invalid_argument("constraint JSON: expected object with \"params\"");
    ConstraintSystem S(j.at("params").get<std::vector<std::string>>());
    if (j.contains("polys"))
        for (const auto& t : j.at("polys"))
            S.polys.push_back(parse_poly(t.get<std::string>(), S.vs));
    return S;
}

// GenericTensor -> bivector JSON plus a provenance array.
inline json generic_tensor_to_json(const GenericTensor& G) {
    json j = bivector_to_json(G.bivector);
    json prov = json::array();
    for (const auto& p : G.provenance)
        prov.push_back({{"param", p.param},
                        {"slot", p.slot},
                        {"monomial", p.monomial},
                        {"coeff", rational_str(p.coeff)}});
    j["provenance"] = std::move(prov);
    return j;
}

}  // namespace hinv
