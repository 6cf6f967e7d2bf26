// serialize.hpp — JSON forms of witnesses, certificates and swap sequences.
// All labels are 0-based; n and k are spelled out so files stand alone.
#pragma once

#include <vector>

#include <json.hpp>

#include "fs.hpp"
#include "theory.hpp"

namespace fsg {

inline nlohmann::ordered_json to_json(const DisconnectionWitness& w) {
    nlohmann::ordered_json j;
    j["n"] = w.n;
    j["k"] = w.k();
    j["subset"] = w.subset.to_vector();
    j["part_a"] = w.part_a.to_vector();
    j["part_b"] = w.part_b.to_vector();
    return j;
}

inline nlohmann::ordered_json to_json(const CertificatePair& c) {
    nlohmann::ordered_json j;
    j["n"] = c.witness.n;
    j["k"] = c.witness.k();
    j["witness"] = to_json(c.witness);
    j["special"] = c.special.to_vector();
    j["nonspecial"] = c.nonspecial.to_vector();
    return j;
}

inline nlohmann::ordered_json to_json(const std::vector<SwapMove>& moves) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& m : moves) {
        nlohmann::ordered_json j;
        j["a"] = m.a;
        j["b"] = m.b;
        j["persons"] = {m.persons.first, m.persons.second};
        arr.push_back(j);
    }
    return arr;
}

}  // namespace fsg
