#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "snr/boolmap.hpp"
#include "snr/core.hpp"
#include "snr/synthesis.hpp"
#include "snr/weight.hpp"

namespace snr {

using Json = nlohmann::ordered_json;

inline Json weight_to_json(const WeightFunction& wf) {
    Json j;
    j["n"] = wf.shape.n;
    j["r"] = wf.shape.r;
    j["pos"] = Json::array();
    for (const Rational& v : wf.pos_values) j["pos"].push_back(format_rational(v));
    j["neg"] = Json::array();
    for (const Rational& v : wf.neg_values) j["neg"].push_back(format_rational(v));
    return j;
}

inline WeightFunction weight_from_json(const Json& j) {
    WeightFunction wf{Shape(j.at("n").get<int>(), j.at("r").get<int>()), {}, {}};
    for (const auto& v : j.at("pos")) wf.pos_values.push_back(parse_rational(v.get<std::string>()));
    for (const auto& v : j.at("neg")) wf.neg_values.push_back(parse_rational(v.get<std::string>()));
    return wf;
}

// Positives listed as canonical strings in canonical enumeration order so
// that serialized maps diff cleanly.
inline Json map_to_json(const LatticeUniverse& universe, const BooleanMap& map) {
    Json j;
    j["n"] = map.shape().n;
    j["r"] = map.shape().r;
    j["positives"] = Json::array();
    const Bitset& bits = map.positive_bits();
    for (std::size_t i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i))
        j["positives"].push_back(render_string(universe.at(i)));
    return j;
}

inline BooleanMap map_from_json(const LatticeUniverse& universe, const Json& j) {
    const Shape shape(j.at("n").get<int>(), j.at("r").get<int>());
    if (!(shape == universe.shape()))
        throw std::invalid_argument("map shape does not match the lattice");
    Bitset bits(universe.size());
    for (const auto& s : j.at("positives"))
        bits.set(universe.index_of(parse_string(shape, s.get<std::string>())));
    return BooleanMap(shape, bits);
}

inline Json basis_to_json(const Basis& basis) {
    Json j;
    j["y_plus"] = Json::array();
    for (const LatticeString& w : basis.y_plus) j["y_plus"].push_back(render_string(w));
    j["y_minus"] = Json::array();
    for (const LatticeString& w : basis.y_minus) j["y_minus"].push_back(render_string(w));
    return j;
}

inline Basis basis_from_json(Shape shape, const Json& j) {
    std::vector<LatticeString> plus, minus;
    for (const auto& s : j.at("y_plus")) plus.push_back(parse_string(shape, s.get<std::string>()));
    for (const auto& s : j.at("y_minus")) minus.push_back(parse_string(shape, s.get<std::string>()));
    return Basis(std::move(plus), std::move(minus));
}

inline Json decomposition_to_json(const Synthesis& s) {
    Json j;
    if (s.decomposition) {
        j["R"] = s.decomposition->R;
        j["betas"] = s.decomposition->betas;
        j["p"] = s.decomposition->p;
        j["k"] = s.decomposition->k;
        j["s"] = s.decomposition->s;
    } else {
        j["p"] = s.p;
    }
    j["case"] = synth_case_name(s.kind);
    return j;
}

}  // namespace snr
