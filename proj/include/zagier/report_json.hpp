#pragma once

#include <json.hpp>

#include "zagier/verify.hpp"

namespace zagier {

/// JSON schema: {suite, range, checks: [{anchor, status, tested, witness?}],
/// failures, elapsed_ms}. Keys are emitted sorted, so dump() is stable and
/// parse-then-dump round-trips byte-identically.
inline nlohmann::json report_to_json(const VerifyReport& rep, bool with_timing = true) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks) {
        nlohmann::json jc = {
            {"anchor", c.anchor},
            {"status", c.passed ? "pass" : "fail"},
            {"tested", c.tested},
        };
        if (!c.passed) jc["witness"] = c.witness;
        checks.push_back(jc);
    }
    return nlohmann::json{
        {"suite", rep.suite},
        {"range", rep.range},
        {"checks", checks},
        {"failures", rep.failures},
        {"elapsed_ms", with_timing ? rep.elapsed_ms : 0},
    };
}

} // namespace zagier
