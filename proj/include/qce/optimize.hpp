#pragma once

#include <functional>

#include <Eigen/Dense>

#include "qce/density_matrix.hpp"

namespace qce {

struct NelderMeadOptions {
    double initial_step = 0.1;
    int max_iterations = 2000;
    double value_tolerance = 1e-9;
    double simplex_tolerance = 1e-7;  // termination on simplex diameter
};

struct NelderMeadResult {
    Eigen::VectorXd x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Deterministic Nelder-Mead minimization with standard coefficients.
NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& objective,
                             const Eigen::VectorXd& start, const NelderMeadOptions& options = {});

// Number of real parameters behind an m x m anti-Hermitian generator.
inline int isometry_parameter_count(int m) { return m * m; }

// U = exp(A) restricted to its first n columns, where the anti-Hermitian A is
// assembled from m^2 real parameters. Columns are orthonormal by construction.
Eigen::MatrixXcd isometry_from_parameters(const Eigen::VectorXd& params, int rows, int cols);

// Parameters whose isometry_from_parameters reproduces the given isometry
// (after completing it to a unitary); used to seed local refinement.
Eigen::VectorXd parameters_from_isometry(const Eigen::MatrixXcd& isometry);

}  // namespace qce
