#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qce {

struct SuiteResult {
    std::string name;
    int checks = 0;
    int failures = 0;
    std::vector<std::string> messages;  // first few failure details

    bool passed() const { return failures == 0; }
};

struct ValidateConfig {
    std::uint64_t seed = 20240901;
    int samples = 100;
    // Multiplies every pass threshold; shrinking it is the negative control
    // for the harness itself.
    double tolerance_scale = 1.0;
};

// Property suites mirroring each module's invariants, on seeded random
// inputs. Deterministic for a fixed config.
std::vector<SuiteResult> run_validation_suites(const ValidateConfig& config);

SuiteResult validate_entropy(const ValidateConfig& config);
SuiteResult validate_states(const ValidateConfig& config);
SuiteResult validate_measurement(const ValidateConfig& config);
SuiteResult validate_conditional(const ValidateConfig& config);
SuiteResult validate_analytic_s2(const ValidateConfig& config);
SuiteResult validate_correlations(const ValidateConfig& config);

}  // namespace qce
