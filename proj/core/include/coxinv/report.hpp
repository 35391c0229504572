#pragma once
// Structured result of one verification suite.

#include "coxinv/golden.hpp"

#include <chrono>
#include <map>
#include <string>
#include <vector>

namespace coxinv {

struct Check {
    std::string label;
    bool pass = false;
    std::string detail;  // optional; constants, counts, mismatch info
};

struct VerifyReport {
    std::string suite;
    std::vector<Check> checks;
    std::map<std::string, Golden> derived_constants;
    long long wall_time_ms = 0;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void check(const std::string& label, bool pass, const std::string& detail = "") {
        checks.push_back({label, pass, detail});
    }
    void constant(const std::string& name, const Golden& value) {
        derived_constants[name] = value;
    }

    // JSON object (deterministic modulo wall_time_ms).
    std::string json() const;
    // Human-readable multi-line text.
    std::string text() const;
};

// Run a suite body with wall-clock timing.
template <typename F>
VerifyReport timed_suite(const std::string& name, F&& body) {
    VerifyReport r;
    r.suite = name;
    auto t0 = std::chrono::steady_clock::now();
    body(r);
    auto t1 = std::chrono::steady_clock::now();
    r.wall_time_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return r;
}

}  // namespace coxinv
