#pragma once

#include <json.hpp>

#include "zsconst/claims.hpp"
#include "zsconst/search.hpp"
#include "zsconst/zerosum.hpp"

namespace zsconst {

inline nlohmann::json to_json(const ZSWitness& w) {
    return {{"indices", w.indices}, {"coefficients", w.coefficients}, {"sum_check", 0}};
}

inline nlohmann::json to_json(const Sequence& s, const char* flag = nullptr) {
    nlohmann::json j{{"n", s.n}, {"terms", s.terms}};
    if (flag) j["source"] = flag;
    return j;
}

inline Sequence sequence_from_json(const nlohmann::json& j) {
    return Sequence(j.at("n").get<int>(), j.at("terms").get<std::vector<int>>());
}

inline nlohmann::json to_json(const ConstantReport& r) {
    return {{"n", r.n},
            {"weight", r.weight.text},
            {"mode", to_string(r.mode)},
            {"status", to_string(r.status)},
            {"value", r.value},
            {"certificate", r.certificate.terms},
            {"nodes", r.nodes_explored},
            {"millis", r.elapsed_ms}};
}

inline nlohmann::json to_json(const ClaimReport& r) {
    return {{"id", r.claim.id},
            {"kind", r.claim.kind},
            {"method", r.claim.method},
            {"expected", r.claim.expected},
            {"status", to_string(r.status)},
            {"detail", r.detail},
            {"anchor", r.claim.anchor}};
}

}  // namespace zsconst
