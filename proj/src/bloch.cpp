#include "qce/bloch.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace qce {

BlochForm to_bloch(const BipartiteState& state) {
    const GeneratorBasis& ga = generator_basis(state.dim_a());
    const GeneratorBasis& gb = generator_basis(state.dim_b());
    const MatrixXcd& rho = state.matrix();

    BlochForm b;
    b.dim_a = state.dim_a();
    b.dim_b = state.dim_b();
    b.r_a = ga.expectations(partial_trace(state, Subsystem::A).matrix());
    b.r_b = gb.expectations(partial_trace(state, Subsystem::B).matrix());
    b.j.resize(ga.count(), gb.count());
    for (int i = 0; i < ga.count(); ++i) {
        for (int k = 0; k < gb.count(); ++k) {
            b.j(i, k) = (rho * Eigen::kroneckerProduct(ga[i], gb[k])).trace().real();
        }
    }
    b.c = b.j - b.r_a * b.r_b.transpose();
    return b;
}

BipartiteState from_bloch(const BlochForm& bloch) {
    const GeneratorBasis& ga = generator_basis(bloch.dim_a);
    const GeneratorBasis& gb = generator_basis(bloch.dim_b);
    const int d = bloch.dim_a * bloch.dim_b;
    const MatrixXcd id_a = MatrixXcd::Identity(bloch.dim_a, bloch.dim_a);
    const MatrixXcd id_b = MatrixXcd::Identity(bloch.dim_b, bloch.dim_b);

    MatrixXcd m = MatrixXcd::Identity(d, d);
    for (int i = 0; i < ga.count(); ++i) {
        m += bloch.r_a(i) * Eigen::kroneckerProduct(ga[i], id_b);
    }
    for (int k = 0; k < gb.count(); ++k) {
        m += bloch.r_b(k) * Eigen::kroneckerProduct(id_a, gb[k]);
    }
    for (int i = 0; i < ga.count(); ++i) {
        for (int k = 0; k < gb.count(); ++k) {
            if (bloch.j(i, k) != 0.0) {
                m += bloch.j(i, k) * Eigen::kroneckerProduct(ga[i], gb[k]);
            }
        }
    }
    m /= static_cast<double>(d);
    try {
        return BipartiteState(bloch.dim_a, bloch.dim_b, DensityMatrix(std::move(m)));
    } catch (const invalid_state_error& err) {
        throw invalid_bloch_error(std::string("Bloch data is not a state: ") + err.what());
    }
}

Eigen::VectorXd bloch_vector(const DensityMatrix& rho) {
    return generator_basis(rho.dim()).expectations(rho.matrix());
}

}  // namespace qce
