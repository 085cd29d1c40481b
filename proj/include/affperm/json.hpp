#pragma once

// JSON forms of the library's value types. Optional: needs nlohmann/json.

#include <nlohmann/json.hpp>

#include "abacus.hpp"
#include "affine.hpp"
#include "bruhat.hpp"
#include "cores.hpp"
#include "partition.hpp"

namespace affperm {

// {"charge": int, "parts": [int, ...]}
inline void to_json(nlohmann::json& j, const ChargedPartition& p) {
    j = nlohmann::json{{"charge", p.charge()}, {"parts", p.parts()}};
}

inline void from_json(const nlohmann::json& j, ChargedPartition& p) {
    p = ChargedPartition(j.at("parts").get<std::vector<Int>>(), j.at("charge").get<Int>());
}

// {"floor": int, "high_beads": [int, ...]}
inline void to_json(nlohmann::json& j, const Abacus& a) {
    j = nlohmann::json{{"floor", a.floor()}, {"high_beads", a.high_beads()}};
}

inline void from_json(const nlohmann::json& j, Abacus& a) {
    a = Abacus(j.at("floor").get<Int>(), j.at("high_beads").get<std::vector<Int>>());
}

// {"e": int, "cores": [partition, ...]}
inline void to_json(nlohmann::json& j, const CoreTuple& t) {
    j = nlohmann::json{{"e", t.modulus()}, {"cores", t.cores()}};
}

inline CoreTuple core_tuple_from_json(const nlohmann::json& j) {
    return CoreTuple(j.at("e").get<int>(), j.at("cores").get<std::vector<ChargedPartition>>());
}

inline nlohmann::json window_json(const AffinePermutation& w) {
    return nlohmann::json{{"e", w.modulus()}, {"window", w.window()}};
}

inline nlohmann::json node_json(Node n) { return nlohmann::json::array({n.row, n.col}); }

// {"pairs_checked": int, "injective": bool, "discrepancies": [{"first", "second", "fast", "oracle"}, ...]}
inline nlohmann::json report_json(const LatticeReport& r) {
    nlohmann::json d = nlohmann::json::array();
    for (const auto& x : r.discrepancies)
        d.push_back({{"first", x.first.window()},
                     {"second", x.second.window()},
                     {"fast", x.fast},
                     {"oracle", x.oracle}});
    return nlohmann::json{{"pairs_checked", r.pairs_checked}, {"injective", r.injective}, {"discrepancies", d}};
}

} // namespace affperm
