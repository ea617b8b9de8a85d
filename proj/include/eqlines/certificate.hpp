#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace eqlines {

enum class Verdict { VALID, CONDITIONAL_VALID, REFUTED };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::VALID: return "VALID";
        case Verdict::CONDITIONAL_VALID: return "CONDITIONAL-VALID";
        case Verdict::REFUTED: return "REFUTED";
    }
    return "?";
}

// One verified claim inside a certificate. Every check is exact rational
// or integer arithmetic; `data` carries the exact quantities involved.
struct CertStep {
    std::string claim;
    std::string anchor;
    bool ok = false;
    nlohmann::json data;
};

// Machine-checkable chain of claims plus the externally established facts
// the chain relies on.
struct Certificate {
    std::vector<CertStep> steps;
    std::vector<std::string> assumptions;
    nlohmann::json witnesses;

    void add_step(std::string claim, std::string anchor, bool ok,
                  nlohmann::json data = nlohmann::json::object()) {
        steps.push_back({std::move(claim), std::move(anchor), ok, std::move(data)});
    }

    bool all_steps_ok() const {
        for (const auto& s : steps)
            if (!s.ok) return false;
        return true;
    }

    Verdict verdict() const {
        if (!all_steps_ok()) return Verdict::REFUTED;
        return assumptions.empty() ? Verdict::VALID : Verdict::CONDITIONAL_VALID;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["verdict"] = to_string(verdict());
        j["steps"] = nlohmann::json::array();
        for (const auto& s : steps)
            j["steps"].push_back({{"claim", s.claim},
                                  {"anchor", s.anchor},
                                  {"check", "exact"},
                                  {"ok", s.ok},
                                  {"data", s.data}});
        j["assumptions"] = assumptions;
        j["witnesses"] = witnesses;
        return j;
    }
};

}  // namespace eqlines
