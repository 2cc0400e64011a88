#include "qce/measurement.hpp"

#include <cmath>
#include <string>

#include "qce/generators.hpp"

namespace qce {

Rank1Povm::Rank1Povm(std::vector<PovmElement> elements, const Tolerances& tol)
    : elements_(std::move(elements)) {
    if (elements_.empty()) {
        throw domain_error("POVM needs at least one element");
    }
    const int d = static_cast<int>(elements_.front().ket.size());
    MatrixXcd sum = MatrixXcd::Zero(d, d);
    for (PovmElement& e : elements_) {
        if (e.ket.size() != d) {
            throw domain_error("POVM kets have mixed dimensions");
        }
        if (e.weight <= 0.0) {
            throw domain_error("POVM weights must be positive");
        }
        if (std::abs(e.ket.norm() - 1.0) > tol.povm) {
            throw domain_error("POVM ket is not normalized");
        }
        e.ket = fix_phase(std::move(e.ket));
        sum += e.op();
    }
    const double defect = (sum - MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
    if (defect > tol.povm) {
        throw domain_error("POVM elements do not sum to the identity: defect " +
                           std::to_string(defect));
    }
}

bool Rank1Povm::is_projective(const Tolerances& tol) const {
    if (elements_.size() != static_cast<std::size_t>(dim())) {
        return false;
    }
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (std::abs(elements_[i].weight - 1.0) > tol.povm) {
            return false;
        }
        for (std::size_t j = i + 1; j < elements_.size(); ++j) {
            if (std::abs(elements_[i].ket.dot(elements_[j].ket)) > tol.povm) {
                return false;
            }
        }
    }
    return true;
}

std::vector<Eigen::VectorXd> Rank1Povm::bloch_vectors() const {
    const GeneratorBasis& basis = generator_basis(dim());
    std::vector<Eigen::VectorXd> out;
    out.reserve(elements_.size());
    for (const PovmElement& e : elements_) {
        out.push_back(basis.expectations(e.ket * e.ket.adjoint()));
    }
    return out;
}

QubitDirection::QubitDirection(const Eigen::Vector3d& direction) : k(direction) {
    const double norm = k.norm();
    if (norm < 1e-12) {
        throw domain_error("measurement direction cannot be the zero vector");
    }
    k /= norm;
}

QubitDirection QubitDirection::from_angles(double theta, double phi) {
    return QubitDirection(Eigen::Vector3d(std::sin(theta) * std::cos(phi),
                                          std::sin(theta) * std::sin(phi), std::cos(theta)));
}

double QubitDirection::angle_to(const Eigen::Vector3d& other) const {
    const double c = k.dot(other) / other.norm();
    return std::acos(std::clamp(c, -1.0, 1.0));
}

double QubitDirection::axis_angle_to(const Eigen::Vector3d& other) const {
    const double c = std::abs(k.dot(other)) / other.norm();
    return std::acos(std::clamp(c, -1.0, 1.0));
}

Rank1Povm projective_from_direction(const QubitDirection& direction) {
    const double kx = direction.k(0);
    const double ky = direction.k(1);
    const double kz = direction.k(2);

    VectorXcd plus(2), minus(2);
    if (kz > 0.0) {  // columns of (I + k.sigma)/2, stable away from kz = -1
        const double norm = std::sqrt(2.0 * (1.0 + kz));
        plus << Complex(1.0 + kz, 0.0) / norm, Complex(kx, ky) / norm;
        minus << Complex(-kx, ky) / norm, Complex(1.0 + kz, 0.0) / norm;
    } else {
        const double norm = std::sqrt(2.0 * (1.0 - kz));
        plus << Complex(kx, -ky) / norm, Complex(1.0 - kz, 0.0) / norm;
        minus << Complex(1.0 - kz, 0.0) / norm, Complex(-kx, -ky) / norm;
    }
    return Rank1Povm({PovmElement{1.0, plus}, PovmElement{1.0, minus}});
}

Rank1Povm computational_povm(int dim_b) {
    std::vector<PovmElement> elements;
    for (int k = 0; k < dim_b; ++k) {
        VectorXcd ket = VectorXcd::Zero(dim_b);
        ket(k) = 1.0;
        elements.push_back(PovmElement{1.0, std::move(ket)});
    }
    return Rank1Povm(std::move(elements));
}

std::optional<ConditionalOutcome> conditional_state(const BipartiteState& state,
                                                    const MatrixXcd& element_op,
                                                    const Tolerances& tol) {
    const int da = state.dim_a();
    const int db = state.dim_b();
    const MatrixXcd& rho = state.matrix();

    // Tr_B [rho (I (x) Pi)] without forming the composite operator.
    MatrixXcd reduced = MatrixXcd::Zero(da, da);
    for (int a = 0; a < da; ++a) {
        for (int a2 = 0; a2 < da; ++a2) {
            Complex sum = 0.0;
            for (int b = 0; b < db; ++b) {
                for (int b2 = 0; b2 < db; ++b2) {
                    sum += rho(a * db + b, a2 * db + b2) * element_op(b2, b);
                }
            }
            reduced(a, a2) = sum;
        }
    }
    const double probability = reduced.trace().real();
    if (probability <= tol.prob) {
        return std::nullopt;
    }
    reduced /= probability;
    reduced = 0.5 * (reduced + reduced.adjoint().eval());  // scrub rounding asymmetry
    return ConditionalOutcome{probability, DensityMatrix(std::move(reduced))};
}

std::optional<ConditionalOutcome> conditional_state(const BipartiteState& state,
                                                    const PovmElement& element,
                                                    const Tolerances& tol) {
    const int da = state.dim_a();
    const int db = state.dim_b();
    const MatrixXcd& rho = state.matrix();

    // For Pi = r |v><v| the reduced operator is r <a v|rho|a' v>.
    MatrixXcd reduced = MatrixXcd::Zero(da, da);
    for (int a = 0; a < da; ++a) {
        for (int a2 = 0; a2 < da; ++a2) {
            Complex sum = 0.0;
            for (int b = 0; b < db; ++b) {
                for (int b2 = 0; b2 < db; ++b2) {
                    sum += std::conj(element.ket(b)) * rho(a * db + b, a2 * db + b2) *
                           element.ket(b2);
                }
            }
            reduced(a, a2) = element.weight * sum;
        }
    }
    const double probability = reduced.trace().real();
    if (probability <= tol.prob) {
        return std::nullopt;
    }
    reduced /= probability;
    reduced = 0.5 * (reduced + reduced.adjoint().eval());
    return ConditionalOutcome{probability, DensityMatrix(std::move(reduced))};
}

std::vector<MatrixXcd> refine(const Rank1Povm& fine, const Eigen::MatrixXd& mixing) {
    if (mixing.cols() != static_cast<Eigen::Index>(fine.size())) {
        throw domain_error("mixing matrix columns must match the fine POVM size");
    }
    if ((mixing.array() < -1e-12).any()) {
        throw domain_error("mixing matrix must be non-negative");
    }
    for (Eigen::Index k = 0; k < mixing.cols(); ++k) {
        if (std::abs(mixing.col(k).sum() - 1.0) > 1e-9) {
            throw domain_error("mixing matrix column " + std::to_string(k) +
                               " does not sum to 1");
        }
    }
    const int d = fine.dim();
    std::vector<MatrixXcd> coarse(mixing.rows(), MatrixXcd::Zero(d, d));
    for (Eigen::Index j = 0; j < mixing.rows(); ++j) {
        for (Eigen::Index k = 0; k < mixing.cols(); ++k) {
            if (mixing(j, k) != 0.0) {
                coarse[j] += mixing(j, k) * fine[k].op();
            }
        }
    }
    return coarse;
}

DensityMatrix unread_measurement_state(const BipartiteState& state, const Rank1Povm& povm) {
    if (!povm.is_projective()) {
        throw unsupported_measurement_error(
            "unread post-measurement state is defined for projective measurements only");
    }
    const int da = state.dim_a();
    const int db = state.dim_b();
    MatrixXcd out = MatrixXcd::Zero(state.dim(), state.dim());
    for (const PovmElement& e : povm.elements()) {
        // (I (x) P) rho (I (x) P) built blockwise on the B factor.
        const MatrixXcd proj = e.op();
        for (int a = 0; a < da; ++a) {
            for (int a2 = 0; a2 < da; ++a2) {
                out.block(a * db, a2 * db, db, db) +=
                    proj * state.matrix().block(a * db, a2 * db, db, db) * proj;
            }
        }
    }
    return DensityMatrix(std::move(out));
}

}  // namespace qce
