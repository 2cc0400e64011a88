#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qce/errors.hpp"
#include "qce/tolerances.hpp"

namespace qce {

class DensityMatrix;

// How the Tsallis entropy (1 - Tr rho^q) is normalized.
enum class TsallisScale {
    OverQMinusOne,     // 1/(q-1); reduces to 1 - Tr rho^2 at q = 2
    QubitNormalized,   // 1/(1-2^{1-q}); maximally mixed qubit scores 1
};

/// A smooth strictly concave f on [0,1] with f(0) = f(1) = 0, applied to
/// spectra to produce a trace-form entropy S_f(rho) = sum_j f(p_j).
class EntropicFunction {
  public:
    enum class Kind { VonNeumann, Tsallis, Linear };

    static EntropicFunction von_neumann(double base = 2.0);
    static EntropicFunction tsallis(double q,
                                    TsallisScale scale = TsallisScale::QubitNormalized);
    // f(p) = alpha (p - p^2). alpha = 1 gives 1 - Tr rho^2; alpha = 2 the
    // rescaled two-qubit convention 2(1 - Tr rho^2).
    static EntropicFunction linear(double alpha = 1.0);

    double operator()(double p) const;

    Kind kind() const { return kind_; }
    double base() const { return base_; }
    double index() const { return q_; }
    double scale() const { return scale_; }
    std::string label() const;

    // d^2 f / dp^2, used by the maximal-mixedness linearization checks.
    double second_derivative(double p) const;

  private:
    EntropicFunction(Kind kind, double base, double q, double scale)
        : kind_(kind), base_(base), q_(q), scale_(scale) {}

    Kind kind_;
    double base_ = 2.0;   // von Neumann log base
    double q_ = 2.0;      // Tsallis index
    double scale_ = 1.0;  // prefactor (Tsallis normalization or linear alpha)
};

/// Eigenvalue list sorted in decreasing order, clamped and validated to be a
/// probability distribution.
class Spectrum {
  public:
    explicit Spectrum(std::vector<double> probabilities,
                      const Tolerances& tol = default_tolerances());

    const std::vector<double>& values() const { return p_; }
    std::size_t size() const { return p_.size(); }
    double operator[](std::size_t i) const { return p_[i]; }

  private:
    std::vector<double> p_;
};

// Sum of f over the eigenvalues of rho.
double entropy(const DensityMatrix& rho, const EntropicFunction& f);
double entropy(const Spectrum& spectrum, const EntropicFunction& f);

// True iff p is majorized by q (p "more mixed"): every descending prefix sum
// of p is dominated by the corresponding prefix sum of q. Shorter spectra are
// zero-padded.
bool majorizes(const Spectrum& p, const Spectrum& q);

// S_f(A|B) for a classical joint distribution p(i,j), rows indexing A and
// columns indexing B: sum_j p_j S_f of the j-th column conditional.
double classical_conditional_entropy(const Eigen::MatrixXd& joint,
                                     const EntropicFunction& f,
                                     const Tolerances& tol = default_tolerances());

}  // namespace qce
