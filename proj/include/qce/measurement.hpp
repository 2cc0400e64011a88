#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qce/bipartite.hpp"

namespace qce {

struct PovmElement {
    double weight = 0.0;  // r_j > 0
    VectorXcd ket;        // normalized |j_B>

    MatrixXcd op() const { return weight * (ket * ket.adjoint()); }
};

/// Measurement on B made of weighted rank-one projectors r_j |j><j| summing
/// to the identity. Kets are stored with the first nonzero amplitude real
/// positive.
class Rank1Povm {
  public:
    explicit Rank1Povm(std::vector<PovmElement> elements,
                       const Tolerances& tol = default_tolerances());

    int dim() const { return static_cast<int>(elements_.front().ket.size()); }
    std::size_t size() const { return elements_.size(); }
    const PovmElement& operator[](std::size_t j) const { return elements_[j]; }
    const std::vector<PovmElement>& elements() const { return elements_; }

    // True when the elements form a complete orthonormal projector set.
    bool is_projective(const Tolerances& tol = default_tolerances()) const;

    // Generator-space vectors k_j = <j|sigma|j> with |k_j|^2 = dB - 1.
    std::vector<Eigen::VectorXd> bloch_vectors() const;

  private:
    std::vector<PovmElement> elements_;
};

/// Unit 3-vector defining the projective qubit measurement {(I pm k.sigma)/2}.
struct QubitDirection {
    Eigen::Vector3d k;

    explicit QubitDirection(const Eigen::Vector3d& direction);
    static QubitDirection x() { return QubitDirection(Eigen::Vector3d::UnitX()); }
    static QubitDirection y() { return QubitDirection(Eigen::Vector3d::UnitY()); }
    static QubitDirection z() { return QubitDirection(Eigen::Vector3d::UnitZ()); }
    static QubitDirection from_angles(double theta, double phi);

    double angle_to(const Eigen::Vector3d& other) const;
    // Angle treating k and -k as the same measurement.
    double axis_angle_to(const Eigen::Vector3d& other) const;
};

// Two-outcome projective measurement along k: kets are the eigenvectors of
// k.sigma, Bloch vectors +k and -k.
Rank1Povm projective_from_direction(const QubitDirection& direction);

// Complete projective measurement in the computational basis of B.
Rank1Povm computational_povm(int dim_b);

struct ConditionalOutcome {
    double probability = 0.0;
    DensityMatrix state;  // rho_{A/Pi_j}
};

// p_j = Tr rho (I (x) Pi_j) and the post-outcome state of A. Returns nullopt
// when p_j <= tol.prob (unreachable outcome, excluded from averages).
std::optional<ConditionalOutcome> conditional_state(const BipartiteState& state,
                                                    const PovmElement& element,
                                                    const Tolerances& tol = default_tolerances());
std::optional<ConditionalOutcome> conditional_state(const BipartiteState& state,
                                                    const MatrixXcd& element_op,
                                                    const Tolerances& tol = default_tolerances());

/// Coarse-graining Pi_j = sum_k r_j^k Pi~_k of a rank-one POVM with a
/// column-stochastic mixing matrix (rows index coarse outcomes). The mixed
/// elements are positive operators of general rank, so the result is returned
/// as explicit operators rather than a Rank1Povm.
std::vector<MatrixXcd> refine(const Rank1Povm& fine, const Eigen::MatrixXd& mixing);

// sum_j (I (x) Pi_j) rho (I (x) Pi_j). Defined for projective measurements
// only; non-projective input raises unsupported_measurement_error.
DensityMatrix unread_measurement_state(const BipartiteState& state, const Rank1Povm& povm);

}  // namespace qce
