#include "qce/conditional.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qce {

namespace {

template <typename Elements, typename Lookup>
ConditionalResult accumulate_conditional(const BipartiteState& state, const Elements& elements,
                                         const EntropicFunction& f, const Tolerances& tol,
                                         Lookup&& outcome_of) {
    ConditionalResult result;
    for (const auto& element : elements) {
        auto outcome = outcome_of(state, element, tol);
        if (!outcome) {
            continue;
        }
        const double term = entropy(outcome->state, f);
        result.per_outcome.emplace_back(outcome->probability, term);
        result.value += outcome->probability * term;
    }
    result.gain = entropy(partial_trace(state, Subsystem::A), f) - result.value;
    return result;
}

}  // namespace

ConditionalResult conditional_entropy(const BipartiteState& state, const Rank1Povm& povm,
                                      const EntropicFunction& f, const Tolerances& tol) {
    if (povm.dim() != state.dim_b()) {
        throw domain_error("POVM dimension does not match subsystem B");
    }
    return accumulate_conditional(state, povm.elements(), f, tol,
                                  [](const BipartiteState& s, const PovmElement& e,
                                     const Tolerances& t) { return conditional_state(s, e, t); });
}

ConditionalResult conditional_entropy(const BipartiteState& state,
                                      const std::vector<MatrixXcd>& elements,
                                      const EntropicFunction& f, const Tolerances& tol) {
    if (!elements.empty() && elements.front().rows() != state.dim_b()) {
        throw domain_error("POVM dimension does not match subsystem B");
    }
    return accumulate_conditional(state, elements, f, tol,
                                  [](const BipartiteState& s, const MatrixXcd& e,
                                     const Tolerances& t) { return conditional_state(s, e, t); });
}

double quadratic_gain_closed_form(const BlochForm& bloch, const Rank1Povm& povm, double alpha) {
    const int d = bloch.dim_a * bloch.dim_b;
    double gain = 0.0;
    const auto vectors = povm.bloch_vectors();
    for (std::size_t j = 0; j < povm.size(); ++j) {
        const Eigen::VectorXd& k = vectors[j];
        const double denom = 1.0 + bloch.r_b.dot(k);
        if (denom <= default_tolerances().prob) {
            continue;  // unreachable outcome
        }
        gain += povm[j].weight * (bloch.c * k).squaredNorm() / denom;
    }
    return alpha * gain / d;
}

double conditional_s2_closed_form(const BlochForm& bloch, const Rank1Povm& povm, double alpha) {
    const double s2_a = 1.0 - (1.0 + bloch.r_a.squaredNorm()) / bloch.dim_a;
    return alpha * s2_a - quadratic_gain_closed_form(bloch, povm, alpha);
}

double purity_gain_ratio(const BipartiteState& state, const Rank1Povm& povm,
                         const Tolerances& tol) {
    double conditional_purity = 0.0;
    for (const PovmElement& e : povm.elements()) {
        auto outcome = conditional_state(state, e, tol);
        if (outcome) {
            conditional_purity += outcome->probability * outcome->state.purity();
        }
    }
    return conditional_purity / partial_trace(state, Subsystem::A).purity();
}

double two_qubit_conditional_f(const BlochForm& bloch, const QubitDirection& direction,
                               const EntropicFunction& f, const Tolerances& tol) {
    if (bloch.dim_a != 2 || bloch.dim_b != 2) {
        throw domain_error("two-qubit closed form needs dA = dB = 2");
    }
    const Eigen::Vector3d k = direction.k;
    double total = 0.0;
    for (int nu = -1; nu <= 1; nu += 2) {
        const double overlap = nu * bloch.r_b.dot(k);
        const double p_nu = 0.5 * (1.0 + overlap);
        if (p_nu <= tol.prob) {
            continue;
        }
        const Eigen::Vector3d u =
            bloch.r_a.head<3>() + nu * (bloch.c * k) / (1.0 + overlap);
        const double len = std::min(u.norm(), 1.0);
        total += p_nu * (f(0.5 * (1.0 + len)) + f(0.5 * (1.0 - len)));
    }
    return total;
}

double pure_plus_mixed_minimum(double w, const std::vector<double>& schmidt, int dim_a,
                               int dim_b, const EntropicFunction& f) {
    if (w < 0.0 || w > 1.0) {
        throw domain_error("mixture weight w must lie in [0, 1], got " + std::to_string(w));
    }
    if (schmidt.size() > static_cast<std::size_t>(std::min(dim_a, dim_b))) {
        throw domain_error("Schmidt vector longer than min(dA, dB)");
    }
    const double d = static_cast<double>(dim_a) * dim_b;
    double total = 0.0;
    for (int k = 0; k < dim_b; ++k) {
        const double q_k = k < static_cast<int>(schmidt.size()) ? schmidt[k] : 0.0;
        const double q_k_w = w * q_k + (1.0 - w) / dim_b;
        if (q_k_w <= default_tolerances().prob) {
            continue;
        }
        const double top = (w * q_k + (1.0 - w) / d) / q_k_w;
        const double rest = ((1.0 - w) / d) / q_k_w;
        total += q_k_w * (f(std::clamp(top, 0.0, 1.0)) +
                          (dim_a - 1) * f(std::clamp(rest, 0.0, 1.0)));
    }
    return total;
}

}  // namespace qce
