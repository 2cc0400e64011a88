#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qce/density_matrix.hpp"

namespace qce {

/// Traceless Hermitian operators normalized to Tr sigma_i sigma_j = d delta_ij
/// (Pauli matrices for d = 2). Ordering is fixed: symmetric pair operators
/// first, antisymmetric second, diagonal last, pairs in lexicographic order.
class GeneratorBasis {
  public:
    explicit GeneratorBasis(int dim);

    int dim() const { return dim_; }
    int count() const { return static_cast<int>(sigma_.size()); }
    const MatrixXcd& operator[](int i) const { return sigma_[i]; }
    const std::vector<MatrixXcd>& all() const { return sigma_; }

    // <sigma> = Tr(rho sigma_i) for each generator.
    Eigen::VectorXd expectations(const MatrixXcd& rho) const;

    // (I + r . sigma) / d.
    MatrixXcd state_from_vector(const Eigen::VectorXd& r) const;

  private:
    int dim_;
    std::vector<MatrixXcd> sigma_;
};

const GeneratorBasis& generator_basis(int dim);  // cached per dimension

}  // namespace qce
