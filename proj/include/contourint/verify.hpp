#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "contourint/types.hpp"

namespace contourint {

// Closed-form value of the target integral, (pi/8) log(pi^2/8), pinned from
// a 40-digit evaluation: 0.08247396606843875058374210107248...
inline constexpr double closed_form_value = 0.08247396606843875;

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    double wall_time_ms = 0.0;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

struct VerifyConfig {
    std::vector<double> R_values = {2.0, 5.0, 10.0};
    std::vector<double> eps_values = {1e-2, 1e-3, 1e-4};
    Tolerance tol = {};
    int n_samples = 200;
    unsigned long long seed = 42;

    void validate() const;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    VerifyConfig config;
    bool all_passed = false;
};

CheckResult check_wellposedness(const VerifyConfig& cfg);
CheckResult check_representation_agreement(const VerifyConfig& cfg);
CheckResult check_im_log_reformulation(const VerifyConfig& cfg);
CheckResult check_halfplane(const VerifyConfig& cfg);
CheckResult check_outer_series(const VerifyConfig& cfg);
CheckResult check_rotation_identity(const VerifyConfig& cfg);
CheckResult check_cauchy_zero(const VerifyConfig& cfg);
CheckResult check_semicircle_decay(const VerifyConfig& cfg);
CheckResult check_radial_identity(const VerifyConfig& cfg);
CheckResult check_arc_asymptotic(const VerifyConfig& cfg);
CheckResult check_final_value(const VerifyConfig& cfg);

// Names of all checks in the fixed execution order.
const std::vector<std::string>& check_names();

// Run one named check; throws SpecError for an unknown name.
CheckResult run_check(const std::string& name, const VerifyConfig& cfg);

// Run every check.  A check that throws is recorded as failed with its
// error message; the runner itself always completes.
VerificationReport run_all(const VerifyConfig& cfg);
VerificationReport run_subset(const std::vector<std::string>& names,
                              const VerifyConfig& cfg);

// JSON form of a report.  Timings are volatile, so they are emitted as 0
// unless with_timings is set; everything else is bit-deterministic.
nlohmann::ordered_json report_to_json(const VerificationReport& report,
                                      bool with_timings = false);

}  // namespace contourint
