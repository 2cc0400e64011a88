#include "qce/generators.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace qce {

GeneratorBasis::GeneratorBasis(int dim) : dim_(dim) {
    if (dim < 2) {
        throw domain_error("generator basis needs dimension >= 2");
    }
    const double pair_scale = std::sqrt(dim / 2.0);  // Gell-Mann carries Tr s^2 = 2
    const Complex i_unit(0.0, 1.0);

    // Symmetric: (|j><k| + |k><j|) * scale
    for (int j = 0; j < dim; ++j) {
        for (int k = j + 1; k < dim; ++k) {
            MatrixXcd m = MatrixXcd::Zero(dim, dim);
            m(j, k) = pair_scale;
            m(k, j) = pair_scale;
            sigma_.push_back(m);
        }
    }
    // Antisymmetric: -i|j><k| + i|k><j| times scale
    for (int j = 0; j < dim; ++j) {
        for (int k = j + 1; k < dim; ++k) {
            MatrixXcd m = MatrixXcd::Zero(dim, dim);
            m(j, k) = -i_unit * pair_scale;
            m(k, j) = i_unit * pair_scale;
            sigma_.push_back(m);
        }
    }
    // Diagonal: sqrt(d / (l(l+1))) diag(1, ..., 1, -l, 0, ...)
    for (int l = 1; l < dim; ++l) {
        MatrixXcd m = MatrixXcd::Zero(dim, dim);
        const double scale = std::sqrt(static_cast<double>(dim) / (l * (l + 1.0)));
        for (int j = 0; j < l; ++j) {
            m(j, j) = scale;
        }
        m(l, l) = -scale * l;
        sigma_.push_back(m);
    }
}

Eigen::VectorXd GeneratorBasis::expectations(const MatrixXcd& rho) const {
    Eigen::VectorXd r(count());
    for (int i = 0; i < count(); ++i) {
        r(i) = (rho * sigma_[i]).trace().real();
    }
    return r;
}

MatrixXcd GeneratorBasis::state_from_vector(const Eigen::VectorXd& r) const {
    MatrixXcd m = MatrixXcd::Identity(dim_, dim_);
    for (int i = 0; i < count(); ++i) {
        m += r(i) * sigma_[i];
    }
    return m / static_cast<double>(dim_);
}

const GeneratorBasis& generator_basis(int dim) {
    static std::map<int, GeneratorBasis> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(dim);
    if (it == cache.end()) {
        it = cache.emplace(dim, GeneratorBasis(dim)).first;
    }
    return it->second;
}

}  // namespace qce
