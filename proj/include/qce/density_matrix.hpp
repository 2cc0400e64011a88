#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qce/entropy.hpp"
#include "qce/errors.hpp"
#include "qce/tolerances.hpp"

namespace qce {

using Complex = std::complex<double>;
using MatrixXcd = Eigen::MatrixXcd;
using VectorXcd = Eigen::VectorXcd;

/// Hermitian, unit-trace, positive-semidefinite matrix. Validation happens at
/// construction; the spectral decomposition is computed once and cached with
/// eigenvalues sorted in decreasing order (ties resolved lexicographically on
/// the phase-fixed eigenvectors).
class DensityMatrix {
  public:
    explicit DensityMatrix(MatrixXcd matrix, const Tolerances& tol = default_tolerances());

    static DensityMatrix pure(const VectorXcd& ket);
    static DensityMatrix maximally_mixed(int dim);

    int dim() const { return static_cast<int>(matrix_.rows()); }
    const MatrixXcd& matrix() const { return matrix_; }

    // Clamped, renormalized eigenvalues in decreasing order.
    const std::vector<double>& eigenvalues() const { return eigenvalues_; }
    // Columns match eigenvalues(); each column's first non-negligible
    // component is real positive.
    const MatrixXcd& eigenvectors() const { return eigenvectors_; }

    Spectrum spectrum() const { return Spectrum(eigenvalues_); }

    double purity() const { return matrix_.squaredNorm(); }
    int rank(double cutoff = 1e-12) const;

  private:
    MatrixXcd matrix_;
    std::vector<double> eigenvalues_;
    MatrixXcd eigenvectors_;
};

// Phase convention used throughout: rotate so the first component with
// magnitude above the cutoff is real positive.
VectorXcd fix_phase(VectorXcd v, double cutoff = 1e-12);

}  // namespace qce
