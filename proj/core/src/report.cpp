#include "coxinv/report.hpp"

#include <nlohmann/json.hpp>

namespace coxinv {

std::string VerifyReport::json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["status"] = passed() ? "pass" : "fail";
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json jc;
        jc["label"] = c.label;
        jc["status"] = c.pass ? "pass" : "fail";
        jc["detail"] = c.detail;
        j["checks"].push_back(jc);
    }
    j["derived_constants"] = nlohmann::json::object();
    for (const auto& [k, v] : derived_constants) j["derived_constants"][k] = v.str();
    j["wall_time_ms"] = wall_time_ms;
    return j.dump(2);
}

std::string VerifyReport::text() const {
    std::string out = "suite " + suite + ": " + (passed() ? "pass" : "FAIL") + "\n";
    for (const auto& c : checks) {
        out += std::string("  [") + (c.pass ? "pass" : "FAIL") + "] " + c.label;
        if (!c.detail.empty()) out += "  (" + c.detail + ")";
        out += "\n";
    }
    for (const auto& [k, v] : derived_constants)
        out += "  constant " + k + " = " + v.str() + "\n";
    out += "  wall_time_ms " + std::to_string(wall_time_ms) + "\n";
    return out;
}

}  // namespace coxinv
