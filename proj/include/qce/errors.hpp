#pragma once

#include <stdexcept>
#include <string>

namespace qce {

// Input matrix is not a valid density operator.
struct invalid_state_error : std::runtime_error {
    explicit invalid_state_error(const std::string& what) : std::runtime_error(what) {}
};

// Classical probability data is negative or not normalized.
struct invalid_distribution_error : std::runtime_error {
    explicit invalid_distribution_error(const std::string& what) : std::runtime_error(what) {}
};

// Bloch data does not reconstruct to a positive semidefinite state.
struct invalid_bloch_error : std::runtime_error {
    explicit invalid_bloch_error(const std::string& what) : std::runtime_error(what) {}
};

// State-family parameters violate a positivity constraint.
struct invalid_parameters_error : std::runtime_error {
    explicit invalid_parameters_error(const std::string& what) : std::runtime_error(what) {}
};

// Operation defined only for projective measurements.
struct unsupported_measurement_error : std::runtime_error {
    explicit unsupported_measurement_error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the mathematical domain of the operation.
struct domain_error : std::domain_error {
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

}  // namespace qce
