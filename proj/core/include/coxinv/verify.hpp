#pragma once
// Verification suites: each suite checks one family of identities and
// returns a structured report.  Reports are deterministic for a fixed
// (suite, mode, seed, points) apart from the wall-clock field.

#include "coxinv/golden.hpp"

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace coxinv {

struct SuiteSpec {
    std::string name;
    bool force_exact = false;  // escalate the suite's modular checks
    std::uint64_t seed = 0;
    int points = 40;  // evaluation points per prime for modular checks
};

struct Check {
    std::string label;
    bool pass = false;
    std::string detail;  // mismatch description or recorded value
};

struct VerifyReport {
    std::string suite;
    std::string mode;  // "exact" or "modular"
    std::uint64_t seed = 0;
    int points = 0;
    bool pass = false;
    std::vector<Check> checks;
    // name -> canonical value text (derived constants such as c0, c1).
    std::vector<std::pair<std::string, std::string>> constants;
    long wall_ms = 0;
};

// Registered suite names, in canonical order.
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

// Run one suite; throws std::invalid_argument for unknown names.
VerifyReport run_suite(const SuiteSpec& spec);

// Serializations: JSON (one object, fixed key order) and a short text form.
std::string report_json(const VerifyReport& r);
std::string report_text(const VerifyReport& r);

// Worker cap from the COXINV_THREADS environment variable (>=1).
int worker_count();

// Report builder shared by the suite implementations.
class Reporter {
  public:
    explicit Reporter(std::string suite, std::string mode, const SuiteSpec& spec);

    // Record one check; returns ok so call sites can chain on it.
    bool check(const std::string& label, bool ok, const std::string& detail = "");
    void constant(const std::string& name, const Golden& value);
    void constant(const std::string& name, const std::string& value);

    VerifyReport finish() &&;

  private:
    VerifyReport r_;
    std::chrono::steady_clock::time_point t0_;
};

// Suite implementations (registered in run_suite).
VerifyReport suite_h3_invariants(const SuiteSpec&);
VerifyReport suite_h3_intertwine(const SuiteSpec&);
VerifyReport suite_h3_jacobian(const SuiteSpec&);
VerifyReport suite_h4_invariants(const SuiteSpec&);
VerifyReport suite_h4_theorem32(const SuiteSpec&);
VerifyReport suite_h4_jacobian(const SuiteSpec&);
VerifyReport suite_h3_disc(const SuiteSpec&);
VerifyReport suite_h4_disc(const SuiteSpec&);
VerifyReport suite_h3prime(const SuiteSpec&);
VerifyReport suite_h4_9_psi(const SuiteSpec&);
VerifyReport suite_transforms(const SuiteSpec&);
VerifyReport suite_fvw(const SuiteSpec&);
VerifyReport suite_y_in_t(const SuiteSpec&);

}  // namespace coxinv
