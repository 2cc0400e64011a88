#include "qce/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qce/density_matrix.hpp"

namespace qce {

EntropicFunction EntropicFunction::von_neumann(double base) {
    if (base <= 1.0) {
        throw domain_error("von Neumann log base must exceed 1, got " + std::to_string(base));
    }
    return EntropicFunction(Kind::VonNeumann, base, 0.0, 1.0 / std::log(base));
}

EntropicFunction EntropicFunction::tsallis(double q, TsallisScale scale) {
    if (q <= 0.0 || q == 1.0) {
        throw domain_error("Tsallis index must be positive and != 1, got " + std::to_string(q));
    }
    const double prefactor = (scale == TsallisScale::OverQMinusOne)
                                 ? 1.0 / (q - 1.0)
                                 : 1.0 / (1.0 - std::exp2(1.0 - q));
    return EntropicFunction(Kind::Tsallis, 0.0, q, prefactor);
}

EntropicFunction EntropicFunction::linear(double alpha) {
    if (alpha <= 0.0) {
        throw domain_error("linear entropy scale must be positive, got " + std::to_string(alpha));
    }
    return EntropicFunction(Kind::Linear, 0.0, 2.0, alpha);
}

double EntropicFunction::operator()(double p) const {
    // Exact endpoint values; avoids 0*log 0 and keeps S_f(pure) = 0 exact.
    if (p == 0.0 || p == 1.0) {
        return 0.0;
    }
    switch (kind_) {
        case Kind::VonNeumann:
            return -p * std::log(p) * scale_;
        case Kind::Tsallis:
            return (p - std::pow(p, q_)) * scale_;
        case Kind::Linear:
            return scale_ * p * (1.0 - p);
    }
    return 0.0;
}

double EntropicFunction::second_derivative(double p) const {
    switch (kind_) {
        case Kind::VonNeumann:
            return -scale_ / p;
        case Kind::Tsallis:
            return -scale_ * q_ * (q_ - 1.0) * std::pow(p, q_ - 2.0);
        case Kind::Linear:
            return -2.0 * scale_;
    }
    return 0.0;
}

std::string EntropicFunction::label() const {
    std::ostringstream out;
    switch (kind_) {
        case Kind::VonNeumann:
            out << "von_neumann(base=" << base_ << ")";
            break;
        case Kind::Tsallis:
            out << "tsallis(q=" << q_ << ")";
            break;
        case Kind::Linear:
            out << "linear(alpha=" << scale_ << ")";
            break;
    }
    return out.str();
}

Spectrum::Spectrum(std::vector<double> probabilities, const Tolerances& tol) : p_(std::move(probabilities)) {
    double sum = 0.0;
    for (double& v : p_) {
        if (v < -tol.spec) {
            throw invalid_distribution_error("spectrum entry " + std::to_string(v) +
                                             " below -" + std::to_string(tol.spec));
        }
        if (v < 0.0) {
            v = 0.0;
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > tol.spec) {
        throw invalid_distribution_error("spectrum sums to " + std::to_string(sum) +
                                         ", expected 1");
    }
    std::sort(p_.begin(), p_.end(), std::greater<double>());
}

double entropy(const Spectrum& spectrum, const EntropicFunction& f) {
    double total = 0.0;
    for (double p : spectrum.values()) {
        total += f(p);
    }
    return total;
}

double entropy(const DensityMatrix& rho, const EntropicFunction& f) {
    return entropy(rho.spectrum(), f);
}

bool majorizes(const Spectrum& p, const Spectrum& q) {
    const std::size_t n = std::max(p.size(), q.size());
    double sum_p = 0.0;
    double sum_q = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sum_p += i < p.size() ? p[i] : 0.0;
        sum_q += i < q.size() ? q[i] : 0.0;
        if (sum_p > sum_q + 1e-12) {
            return false;
        }
    }
    return true;
}

double classical_conditional_entropy(const Eigen::MatrixXd& joint, const EntropicFunction& f,
                                     const Tolerances& tol) {
    if (joint.size() == 0) {
        throw invalid_distribution_error("empty joint distribution");
    }
    if ((joint.array() < -tol.spec).any()) {
        throw invalid_distribution_error("joint distribution has negative entries");
    }
    const double total = joint.sum();
    if (std::abs(total - 1.0) > tol.spec) {
        throw invalid_distribution_error("joint distribution sums to " + std::to_string(total));
    }
    double result = 0.0;
    for (Eigen::Index j = 0; j < joint.cols(); ++j) {
        const double pj = joint.col(j).sum();
        if (pj <= tol.prob) {
            continue;
        }
        for (Eigen::Index i = 0; i < joint.rows(); ++i) {
            result += pj * f(std::clamp(joint(i, j) / pj, 0.0, 1.0));
        }
    }
    return result;
}

}  // namespace qce
