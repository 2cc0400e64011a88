#include "qce/bipartite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

namespace qce {

BipartiteState::BipartiteState(int dim_a, int dim_b, DensityMatrix rho)
    : dim_a_(dim_a), dim_b_(dim_b), rho_(std::move(rho)) {
    if (dim_a < 1 || dim_b < 1) {
        throw domain_error("factor dimensions must be positive");
    }
    if (rho_.dim() != dim_a * dim_b) {
        throw invalid_state_error("state dimension " + std::to_string(rho_.dim()) +
                                  " does not factor as " + std::to_string(dim_a) + "x" +
                                  std::to_string(dim_b));
    }
}

MatrixXcd partial_trace_matrix(const MatrixXcd& op, int dim_a, int dim_b, Subsystem keep) {
    if (keep == Subsystem::A) {
        MatrixXcd out = MatrixXcd::Zero(dim_a, dim_a);
        for (int a = 0; a < dim_a; ++a) {
            for (int a2 = 0; a2 < dim_a; ++a2) {
                Complex sum = 0.0;
                for (int b = 0; b < dim_b; ++b) {
                    sum += op(a * dim_b + b, a2 * dim_b + b);
                }
                out(a, a2) = sum;
            }
        }
        return out;
    }
    MatrixXcd out = MatrixXcd::Zero(dim_b, dim_b);
    for (int b = 0; b < dim_b; ++b) {
        for (int b2 = 0; b2 < dim_b; ++b2) {
            Complex sum = 0.0;
            for (int a = 0; a < dim_a; ++a) {
                sum += op(a * dim_b + b, a * dim_b + b2);
            }
            out(b, b2) = sum;
        }
    }
    return out;
}

DensityMatrix partial_trace(const BipartiteState& state, Subsystem keep) {
    return DensityMatrix(
        partial_trace_matrix(state.matrix(), state.dim_a(), state.dim_b(), keep));
}

MatrixXcd partial_transpose_b(const MatrixXcd& op, int dim_a, int dim_b) {
    MatrixXcd out(op.rows(), op.cols());
    for (int a = 0; a < dim_a; ++a) {
        for (int a2 = 0; a2 < dim_a; ++a2) {
            for (int b = 0; b < dim_b; ++b) {
                for (int b2 = 0; b2 < dim_b; ++b2) {
                    out(a * dim_b + b, a2 * dim_b + b2) = op(a * dim_b + b2, a2 * dim_b + b);
                }
            }
        }
    }
    return out;
}

MatrixXcd pure_marginal(const VectorXcd& psi, const std::vector<int>& dims,
                        const std::vector<int>& keep) {
    const int total = std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<int>());
    if (psi.size() != total) {
        throw domain_error("vector length does not match factor dimensions");
    }
    std::vector<int> strides(dims.size());
    int stride = 1;
    for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
        strides[i] = stride;
        stride *= dims[i];
    }
    std::vector<int> traced;
    for (int i = 0; i < static_cast<int>(dims.size()); ++i) {
        if (std::find(keep.begin(), keep.end(), i) == keep.end()) {
            traced.push_back(i);
        }
    }
    int kept_dim = 1;
    for (int k : keep) kept_dim *= dims[k];
    int traced_dim = 1;
    for (int t : traced) traced_dim *= dims[t];

    auto full_index = [&](int kept, int tr) {
        int idx = 0;
        for (int i = static_cast<int>(keep.size()) - 1; i >= 0; --i) {
            idx += (kept % dims[keep[i]]) * strides[keep[i]];
            kept /= dims[keep[i]];
        }
        for (int i = static_cast<int>(traced.size()) - 1; i >= 0; --i) {
            idx += (tr % dims[traced[i]]) * strides[traced[i]];
            tr /= dims[traced[i]];
        }
        return idx;
    };

    MatrixXcd out = MatrixXcd::Zero(kept_dim, kept_dim);
    for (int i = 0; i < kept_dim; ++i) {
        for (int j = 0; j < kept_dim; ++j) {
            Complex sum = 0.0;
            for (int t = 0; t < traced_dim; ++t) {
                sum += psi(full_index(i, t)) * std::conj(psi(full_index(j, t)));
            }
            out(i, j) = sum;
        }
    }
    return out;
}

Purification purify(const BipartiteState& state, double rank_cutoff) {
    const DensityMatrix& rho = state.rho();
    const int d = rho.dim();
    const int rank = rho.rank(rank_cutoff);

    Purification result;
    result.dim_ab = d;
    result.dim_c = rank;
    result.psi = VectorXcd::Zero(d * rank);
    for (int i = 0; i < rank; ++i) {
        const double amp = std::sqrt(rho.eigenvalues()[i]);
        for (int x = 0; x < d; ++x) {
            result.psi(x * rank + i) = amp * rho.eigenvectors()(x, i);
        }
    }
    return result;
}

}  // namespace qce
