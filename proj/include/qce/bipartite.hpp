#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qce/density_matrix.hpp"

namespace qce {

enum class Subsystem { A, B };

/// Density matrix on H_A (x) H_B with the factor dimensions recorded.
/// Basis convention: composite index (a, b) -> a * dB + b.
class BipartiteState {
  public:
    BipartiteState(int dim_a, int dim_b, DensityMatrix rho);

    int dim_a() const { return dim_a_; }
    int dim_b() const { return dim_b_; }
    int dim() const { return dim_a_ * dim_b_; }
    const DensityMatrix& rho() const { return rho_; }
    const MatrixXcd& matrix() const { return rho_.matrix(); }

  private:
    int dim_a_;
    int dim_b_;
    DensityMatrix rho_;
};

DensityMatrix partial_trace(const BipartiteState& state, Subsystem keep);

// Partial trace of an arbitrary (not necessarily unit-trace) operator.
MatrixXcd partial_trace_matrix(const MatrixXcd& op, int dim_a, int dim_b, Subsystem keep);

// Transpose on the B factor, used by the negativity.
MatrixXcd partial_transpose_b(const MatrixXcd& op, int dim_a, int dim_b);

// Reduced operator of a pure vector on tensor factors `dims`, keeping the
// factors listed in `keep` (in that order) and tracing out the rest.
MatrixXcd pure_marginal(const VectorXcd& psi, const std::vector<int>& dims,
                        const std::vector<int>& keep);

struct Purification {
    VectorXcd psi;  // state vector on (A x B) x C, index (ab, c) -> ab * dim_c + c
    int dim_ab;
    int dim_c;      // rank of the purified state
};

// |Psi> = sum_i sqrt(lambda_i) |i_AB>|i_C> in the eigenbasis of rho, with
// eigenvalues in decreasing order and d_C equal to the rank.
Purification purify(const BipartiteState& state, double rank_cutoff = 1e-12);

}  // namespace qce
