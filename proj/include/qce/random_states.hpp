#pragma once

#include "qce/bipartite.hpp"
#include "qce/families.hpp"
#include "qce/measurement.hpp"
#include "qce/rng.hpp"

namespace qce {

// Ginibre-ensemble states: G G^dagger / Tr, with G of the requested rank.
DensityMatrix random_density(Rng& rng, int dim, int rank = 0);  // rank 0 = full
VectorXcd random_pure_vector(Rng& rng, int dim);
BipartiteState random_bipartite(Rng& rng, int dim_a, int dim_b, int rank = 0);
BipartiteState random_product(Rng& rng, int dim_a, int dim_b);
BipartiteState random_separable(Rng& rng, int dim_a, int dim_b, int terms);
BipartiteState random_classically_correlated(Rng& rng, int dim_a, int dim_b);

// Valid X-state parameters by rejection sampling.
XStateParams random_x_params(Rng& rng);

std::vector<double> random_spectrum(Rng& rng, int dim);
Eigen::MatrixXcd random_unitary(Rng& rng, int dim);
Eigen::MatrixXcd random_isometry(Rng& rng, int rows, int cols);
Eigen::Vector3d random_direction(Rng& rng);

// Rank-one POVM with `outcomes` elements built from a random isometry.
Rank1Povm random_rank1_povm(Rng& rng, int dim_b, int outcomes);

// I/4 + epsilon * X with X random traceless Hermitian of unit norm.
BipartiteState perturbed_maximally_mixed(Rng& rng, double epsilon);

}  // namespace qce
